//! Event-order logic: the language causes are expressed in.
//!
//! Formulae talk about which events occur and in what order, not about
//! states. `head .^w (cycle)` describes lasso-shaped behaviour: the head
//! constrains a finite prefix, the cycle what recurs in the loop.

mod ast;
mod eval;
mod parse;
mod print;

pub use ast::{EolFormula, GComplexEol, IComplexEol, InfiniteEol, SimpleEol, UnfoldBudget};
pub use eval::{CompiledEol, 
    chain, eval_gcomplex_segment, eval_gcomplex_trace, eval_icomplex_segment, eval_infinite,
    eval_infinite_witness, eval_simple_segment, formula_of_trace, subset_rel, EolWitness,
};
pub use parse::{parse_eol, parse_infinite};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::model::Segment;
    use crate::testutil::{lasso_over_word, lasso_over_word_in};

    fn infinite(text: &str) -> InfiniteEol {
        parse_infinite(text).unwrap()
    }

    #[test]
    fn parses_omega_split() {
        let xi = infinite("a1 .^w (a2 . a3)");
        assert!(matches!(xi.head, GComplexEol::Interval(_)));
        assert_eq!(xi.to_string(), "a1 .^w (a2 . a3)");
    }

    #[test]
    fn parses_after_guard_cause() {
        let xi = infinite("(B2 .[ !E2) .^w (!E2)");
        assert!(matches!(xi.head, GComplexEol::GuardAfter { .. }));
        assert_eq!(xi.to_string(), "(B2 .[ !E2) .^w (!E2)");
    }

    #[test]
    fn rejects_nested_omega() {
        assert!(matches!(
            parse_eol("(a .^w b) .^w c"),
            Err(Error::Stratification(_))
        ));
    }

    #[test]
    fn rejects_negated_chain() {
        assert!(matches!(
            parse_eol("!(a . b) .^w (c)"),
            Err(Error::Stratification(_))
        ));
    }

    #[test]
    fn round_trips_through_printer() {
        for text in [
            "a1 .^w (a2 . a3)",
            "(B2 .[ !E2) .^w (!E2)",
            "(E0 . B2 .[ !E2) .^w (B1 . E1 .< !E2 .> B0 . E0)",
            "(!a .] b . c) .^w (T)",
            "(a & !b) . c .^w (d | e)",
            "a .< !x & !y .> b .^w (c)",
        ] {
            let parsed = parse_eol(text).unwrap();
            let reparsed = parse_eol(&parsed.to_string()).unwrap();
            assert_eq!(parsed, reparsed, "round trip of `{text}`");
        }
    }

    #[test]
    fn simple_segment_satisfaction() {
        let (ts, sigma) = lasso_over_word(&["a1"], &["a2", "a3"]);
        let ev = |name: &str| SimpleEol::event(name);
        // First step carries a1; a2 is absent from the first step.
        assert!(eval_simple_segment(&ts, Segment::new(&sigma, 0, 1), &ev("a1")));
        assert!(eval_simple_segment(
            &ts,
            Segment::new(&sigma, 0, 1),
            &SimpleEol::not(ev("a2"))
        ));
        assert!(eval_simple_segment(
            &ts,
            Segment::new(&sigma, 0, 3),
            &SimpleEol::and(ev("a1"), ev("a2"))
        ));
        // Zero-length segments satisfy only T and negations.
        assert!(!eval_simple_segment(&ts, Segment::new(&sigma, 1, 1), &ev("a1")));
        assert!(eval_simple_segment(&ts, Segment::new(&sigma, 1, 1), &SimpleEol::Top));
    }

    #[test]
    fn ordered_conjunction_needs_order() {
        let (ts, sigma) = lasso_over_word(&["a1"], &["a2", "a3"]);
        let psi_fwd = match parse_eol("a2 . a3").unwrap() {
            EolFormula::GComplex(GComplexEol::Interval(psi)) => psi,
            _ => unreachable!(),
        };
        let psi_back = match parse_eol("a3 . a2").unwrap() {
            EolFormula::GComplex(GComplexEol::Interval(psi)) => psi,
            _ => unreachable!(),
        };
        let seg = Segment::new(&sigma, 0, 3);
        assert!(eval_icomplex_segment(&ts, seg, &psi_fwd));
        assert!(!eval_icomplex_segment(&ts, seg, &psi_back));
        // Two unfoldings admit the reversed order.
        assert!(eval_icomplex_segment(&ts, Segment::new(&sigma, 1, 5), &psi_back));
    }

    #[test]
    fn between_guard_excludes_interleaved_event() {
        let (ts, sigma) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "E2", "B0", "E0"]);
        let psi = match parse_eol("B1 . E1 .< !E2 .> B0 . E0").unwrap() {
            EolFormula::GComplex(GComplexEol::Interval(psi)) => psi,
            _ => unreachable!(),
        };
        // One unfolding of the loop: E2 sits between E1 and B0.
        let seg = Segment::new(&sigma, 2, 7);
        assert!(!eval_icomplex_segment(&ts, seg, &psi));

        let (ts2, clean) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        assert!(eval_icomplex_segment(&ts2, Segment::new(&clean, 2, 6), &psi));
    }

    #[test]
    fn after_guard_on_segments() {
        let theta = match parse_eol("E0 . B2 .[ !E2").unwrap() {
            EolFormula::GComplex(theta) => theta,
            _ => unreachable!(),
        };
        let (ts, two) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        // No steps after the witness: vacuous guard.
        assert!(eval_gcomplex_segment(&ts, Segment::new(&two, 0, 2), &theta));
        let (ts3, with_e2) = lasso_over_word(&["E0", "B2", "E2"], &["B1", "E1", "B0", "E0"]);
        assert!(!eval_gcomplex_segment(&ts3, Segment::new(&with_e2, 0, 3), &theta));
        let (ts4, with_b1e1) = lasso_over_word(&["E0", "B2", "B1", "E1"], &["B0", "E0"]);
        assert!(eval_gcomplex_segment(&ts4, Segment::new(&with_b1e1, 0, 4), &theta));
    }

    #[test]
    fn infinite_satisfaction_with_witnesses() {
        let (ts, sigma) = lasso_over_word(&["a1"], &["a2", "a3"]);
        let xi = infinite("a1 .^w (a2 . a3)");
        let w = eval_infinite_witness(&ts, &sigma, &xi, None).unwrap().unwrap();
        assert_eq!((w.head_unfolds, w.cycle_unfolds), (0, 1));

        let xi2 = infinite("a1 . a3 .^w (a3 . a2)");
        let w2 = eval_infinite_witness(&ts, &sigma, &xi2, None).unwrap().unwrap();
        assert_eq!((w2.head_unfolds, w2.cycle_unfolds), (1, 2));

        let xi3 = infinite("a1 . a3 . a2 . a3 . a2 .^w (a2 . a3 . a2 . a2 . a2)");
        let w3 = eval_infinite_witness(&ts, &sigma, &xi3, None).unwrap().unwrap();
        assert_eq!((w3.head_unfolds, w3.cycle_unfolds), (3, 4));
    }

    #[test]
    fn stem_only_event_cannot_recur() {
        let (ts, sigma) = lasso_over_word(&["a1"], &["a2", "a3"]);
        let xi = infinite("a1 .^w (a1)");
        assert!(!eval_infinite(&ts, &sigma, &xi, None).unwrap());
        // Raising the budget does not change the verdict.
        let budget = UnfoldBudget::default_for(&xi).raised_to(12);
        assert!(!eval_infinite(&ts, &sigma, &xi, Some(budget)).unwrap());
    }

    #[test]
    fn budget_below_default_is_rejected() {
        let (ts, sigma) = lasso_over_word(&["a1"], &["a2", "a3"]);
        let xi = infinite("a1 . a3 .^w (a3 . a2)");
        let too_small = UnfoldBudget {
            head_unfolds: 1,
            cycle_unfolds: 1,
        };
        assert!(matches!(
            eval_infinite(&ts, &sigma, &xi, Some(too_small)),
            Err(Error::BudgetTooSmall { .. })
        ));
    }

    #[test]
    fn trace_formula_is_satisfied_by_its_trace() {
        for (stem, cycle) in [
            (vec!["E0", "B2"], vec!["B1", "E1", "B0", "E0"]),
            (vec![], vec!["a"]),
            (vec!["a", "a"], vec!["b", "a"]),
        ] {
            let (ts, sigma) = lasso_over_word(&stem, &cycle);
            let xi = formula_of_trace(&ts, &sigma);
            assert!(
                eval_infinite(&ts, &sigma, &xi, None).unwrap(),
                "sigma should satisfy its own formula {xi}"
            );
        }
    }

    #[test]
    fn trace_formula_of_elevator_counterexample() {
        let (ts, sigma) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        let xi = formula_of_trace(&ts, &sigma);
        assert_eq!(xi.to_string(), "E0 . B2 .^w (B1 . E1 . B0 . E0)");
        let (ts_a, empty_stem) = lasso_over_word(&[], &["a"]);
        let top = formula_of_trace(&ts_a, &empty_stem);
        assert_eq!(top.to_string(), "T .^w (a)");
    }

    #[test]
    fn eq9_cause_on_the_three_traces() {
        let xi = infinite("(B2 .[ !E2) .^w (!E2)");
        let (ts, bad) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        assert!(eval_infinite(&ts, &bad, &xi, None).unwrap());

        // E2 recurring in the loop violates the after-guard.
        let (ts2, serviced) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "E2", "B0", "E0"]);
        assert!(!eval_infinite(&ts2, &serviced, &xi, None).unwrap());

        // E2 in the stem right after B2 violates it too.
        let (ts3, stem_e2) = lasso_over_word(&["E0", "B2", "E2"], &["B1", "E1", "B0", "E0"]);
        assert!(!eval_infinite(&ts3, &stem_e2, &xi, None).unwrap());
    }

    #[test]
    fn until_guard_covers_steps_before_the_last_viable_start() {
        // y occurs only in the stem, so the guard range is bounded by its
        // final occurrence.
        let xi = infinite("(!x .] y) .^w (w)");
        let (ts, ok) = lasso_over_word_in(&["x"], &["z", "y"], &["w"]);
        assert!(eval_infinite(&ts, &ok, &xi, None).unwrap());
        let (ts2, guarded) = lasso_over_word(&["x", "y"], &["w"]);
        assert!(!eval_infinite(&ts2, &guarded, &xi, None).unwrap());
        // A body that recurs in the loop puts every step under the guard.
        let xi2 = infinite("(!x .] y) .^w (y . x)");
        let (ts3, rot) = lasso_over_word(&[], &["y", "x"]);
        assert!(!eval_infinite(&ts3, &rot, &xi2, None).unwrap());
    }

    #[test]
    fn conjunction_anchor_distinguishes_loop_rotations() {
        // "y with no x before it, then x" pins the loop entry order.
        let xi = infinite("T .^w ((y & !x) . x)");
        let (ts, y_first) = lasso_over_word(&[], &["y", "x"]);
        assert!(eval_infinite(&ts, &y_first, &xi, None).unwrap());
        let (ts2, x_first) = lasso_over_word(&[], &["x", "y"]);
        assert!(!eval_infinite(&ts2, &x_first, &xi, None).unwrap());
    }

    #[test]
    fn subset_relation_on_a_shared_universe() {
        use crate::search::partition;
        // Two branches: one with the extra event B2 between B1 and E1.
        let ts = crate::model::parse_model(
            "init s0;
             s0 -E0-> s1;
             s1 -B1-> s2; s2 -E1-> s0;
             s1 -B1-> s3; s3 -B2-> s4; s4 -E1-> s0;",
        )
        .unwrap();
        let universe = partition(&ts, &crate::ltl::parse_ltl("true").unwrap(), 1000).unwrap();
        assert!(universe.bad.is_empty());
        let xi1 = infinite("E0 . B1 . E1 .^w (T)");
        let xi2 = infinite("E0 . B1 . B2 . E1 .^w (T)");
        assert!(subset_rel(&ts, &universe, &xi1, &xi2).unwrap());
        assert!(!subset_rel(&ts, &universe, &xi2, &xi1).unwrap());
        // Reflexive.
        assert!(subset_rel(&ts, &universe, &xi1, &xi1).unwrap());
    }
}
