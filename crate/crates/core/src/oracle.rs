//! Brute-force reference implementations: naive lasso enumeration by path
//! listing, a suffix-scanning LTL evaluator, an event-order evaluator working
//! over explicitly unrolled words, and a seeded model generator. These are
//! the ground truth the test suite and the `verify` command check the
//! primary implementations against; they share the defined semantics but
//! none of the indexing machinery.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::eol::{GComplexEol, IComplexEol, InfiniteEol, SimpleEol, UnfoldBudget};
use crate::error::Error;
use crate::ltl::LtlFormula;
use crate::model::{complete_terminal_states, LassoExecution, Step, TransitionSystem};
use crate::search::enumerate_lassos;

#[derive(Debug, Clone, Copy)]
pub struct OracleConfig {
    /// Largest model the path-listing enumerator accepts.
    pub max_states: usize,
    /// Minimum number of loop unfoldings kept in unrolled words.
    pub min_unroll_factor: usize,
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_states: 8,
            min_unroll_factor: 10,
            seed: 0,
        }
    }
}

// ---------------------------------------------------------------------------
// Naive lasso enumeration.

/// Lists every elementary lasso by extending all simple paths from every
/// initial state and recording the first revisit. Must agree with
/// [`enumerate_lassos`] as a set.
pub fn naive_lassos(
    ts: &TransitionSystem,
    config: &OracleConfig,
) -> Result<Vec<LassoExecution>, Error> {
    if ts.state_count() > config.max_states {
        return Err(Error::OracleCapExceeded(format!(
            "{} states exceed the oracle limit of {}",
            ts.state_count(),
            config.max_states
        )));
    }
    if ts.has_terminal_states() {
        return Err(Error::TerminalStates);
    }
    fn extend(
        ts: &TransitionSystem,
        init: crate::model::StateId,
        path_states: &mut Vec<crate::model::StateId>,
        path_steps: &mut Vec<Step>,
        out: &mut Vec<LassoExecution>,
    ) {
        let current = *path_states.last().unwrap();
        for t in ts.outgoing(current) {
            let step = Step {
                action: t.action,
                target: t.target,
            };
            if let Some(entry) = path_states.iter().position(|s| *s == t.target) {
                let stem = path_steps[..entry].to_vec();
                let mut cycle = path_steps[entry..].to_vec();
                cycle.push(step);
                out.push(LassoExecution::new(ts, init, stem, cycle).expect("paths are connected"));
            } else {
                path_states.push(t.target);
                path_steps.push(step);
                extend(ts, init, path_states, path_steps, out);
                path_states.pop();
                path_steps.pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut initials: Vec<_> = ts.initials().iter().copied().collect();
    initials.sort_by_key(|s| ts.state_name(*s).to_string());
    for init in initials {
        let mut path_states = vec![init];
        let mut path_steps = Vec::new();
        extend(ts, init, &mut path_states, &mut path_steps, &mut out);
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Naive LTL by suffix scanning.

/// Recursive suffix-scan evaluation. Temporal operators scan far enough to
/// visit every position of the lasso quotient at least twice, which is exact
/// on ultimately periodic words.
pub fn naive_ltl_eval(
    ts: &TransitionSystem,
    phi: &LtlFormula,
    sigma: &LassoExecution,
) -> Result<bool, Error> {
    fn horizon(sigma: &LassoExecution, p: usize) -> usize {
        let l = sigma.stem_len();
        let m = sigma.cycle_len();
        l.saturating_sub(p) + 2 * m + 1
    }
    fn atom_at(
        ts: &TransitionSystem,
        sigma: &LassoExecution,
        name: &str,
        p: usize,
    ) -> Result<bool, Error> {
        let as_action = ts.action_id(name);
        let as_label = ts.has_label_name(name);
        match (as_action, as_label) {
            (Some(_), true) => Err(Error::AmbiguousAtom(name.to_string())),
            (Some(a), false) => Ok(p >= 1 && sigma.action_into(p) == a),
            (None, true) => Ok(ts
                .labels_of(sigma.state_at(p))
                .is_some_and(|ls| ls.contains(name))),
            (None, false) => Err(Error::UnresolvableAtom(name.to_string())),
        }
    }
    fn sat(
        ts: &TransitionSystem,
        sigma: &LassoExecution,
        phi: &LtlFormula,
        p: usize,
        memo: &mut HashMap<(usize, usize), bool>,
    ) -> Result<bool, Error> {
        let key = (phi as *const _ as usize, p);
        if let Some(v) = memo.get(&key) {
            return Ok(*v);
        }
        use LtlFormula::*;
        let v = match phi {
            True => true,
            Atom(name) => atom_at(ts, sigma, name, p)?,
            Not(a) => !sat(ts, sigma, a, p, memo)?,
            And(a, b) => sat(ts, sigma, a, p, memo)? && sat(ts, sigma, b, p, memo)?,
            Or(a, b) => sat(ts, sigma, a, p, memo)? || sat(ts, sigma, b, p, memo)?,
            Next(a) => sat(ts, sigma, a, p + 1, memo)?,
            Until(a, b) => {
                let mut holds = false;
                for k in p..=p + horizon(sigma, p) {
                    if sat(ts, sigma, b, k, memo)? {
                        holds = true;
                        break;
                    }
                    if !sat(ts, sigma, a, k, memo)? {
                        break;
                    }
                }
                holds
            }
            Eventually(a) => {
                let mut holds = false;
                for k in p..=p + horizon(sigma, p) {
                    if sat(ts, sigma, a, k, memo)? {
                        holds = true;
                        break;
                    }
                }
                holds
            }
            Globally(a) => {
                let mut holds = true;
                for k in p..=p + horizon(sigma, p) {
                    if !sat(ts, sigma, a, k, memo)? {
                        holds = false;
                        break;
                    }
                }
                holds
            }
        };
        memo.insert(key, v);
        Ok(v)
    }
    let mut memo = HashMap::new();
    sat(ts, sigma, phi, 0, &mut memo)
}

// ---------------------------------------------------------------------------
// Naive event-order evaluation over an explicitly unrolled word.

struct Unrolled {
    /// Action name entering position p, at index p-1.
    actions: Vec<String>,
    stem_len: usize,
    cycle_len: usize,
    head_unfolds: usize,
}

impl Unrolled {
    fn action(&self, p: usize) -> &str {
        &self.actions[p - 1]
    }

    fn occurs(&self, name: &str, i: usize, r: usize) -> bool {
        (i + 1..=r).any(|p| self.action(p) == name)
    }

    fn bound(&self, from: usize) -> usize {
        from.max(self.stem_len) + self.head_unfolds * self.cycle_len
    }
}

fn build_unrolled(
    ts: &TransitionSystem,
    sigma: &LassoExecution,
    xi: &InfiniteEol,
    budget: UnfoldBudget,
    config: &OracleConfig,
) -> Unrolled {
    let l = sigma.stem_len();
    let m = sigma.cycle_len();
    let budget = effective_unfolds(xi, budget, m);
    let factor = (budget.head_unfolds + budget.cycle_unfolds + 3).max(config.min_unroll_factor);
    let len = l + factor * m;
    let actions = (1..=len)
        .map(|p| ts.action_name(sigma.action_into(p)).to_string())
        .collect();
    Unrolled {
        actions,
        stem_len: l,
        cycle_len: m,
        head_unfolds: budget.head_unfolds,
    }
}

fn nv_simple(u: &Unrolled, s: &SimpleEol, i: usize, r: usize) -> bool {
    match s {
        SimpleEol::Top => true,
        SimpleEol::Event(name) => u.occurs(name, i, r),
        SimpleEol::Not(a) => !nv_simple(u, a, i, r),
        SimpleEol::And(a, b) => nv_simple(u, a, i, r) && nv_simple(u, b, i, r),
        SimpleEol::Or(a, b) => nv_simple(u, a, i, r) || nv_simple(u, b, i, r),
    }
}

fn nv_icomplex(
    u: &Unrolled,
    psi: &IComplexEol,
    i: usize,
    r: usize,
    memo: &mut HashMap<(usize, usize, usize), bool>,
) -> bool {
    let key = (psi as *const _ as usize, i, r);
    if let Some(v) = memo.get(&key) {
        return *v;
    }
    let len = r - i;
    let v = match psi {
        IComplexEol::Simple(s) => nv_simple(u, s, i, r),
        IComplexEol::Ordered(a, b) => {
            let mut found = false;
            'outer: for j in 1..len {
                if nv_icomplex(u, a, i, i + j, memo) {
                    for k in j..len {
                        if nv_icomplex(u, b, i + k, r, memo) {
                            found = true;
                            break 'outer;
                        }
                    }
                    break;
                }
            }
            found
        }
        IComplexEol::Between { first, guard, second } => {
            let mut v = false;
            if let Some(j) = (1..len).find(|j| nv_icomplex(u, first, i, i + j, memo)) {
                if let Some(k) = (j..len).rev().find(|k| nv_icomplex(u, second, i + k, r, memo)) {
                    v = (j..k).all(|l| nv_simple(u, guard, i + l, i + l + 1));
                }
            }
            v
        }
        IComplexEol::And(a, b) => nv_icomplex(u, a, i, r, memo) && nv_icomplex(u, b, i, r, memo),
        IComplexEol::Or(a, b) => nv_icomplex(u, a, i, r, memo) || nv_icomplex(u, b, i, r, memo),
    };
    memo.insert(key, v);
    v
}

fn nv_gcomplex_seg(
    u: &Unrolled,
    theta: &GComplexEol,
    i: usize,
    r: usize,
    memo: &mut HashMap<(usize, usize, usize), bool>,
) -> bool {
    match theta {
        GComplexEol::Interval(psi) => nv_icomplex(u, psi, i, r, memo),
        GComplexEol::GuardUntil { guard, body } => {
            match (0..r - i)
                .rev()
                .find(|j| nv_gcomplex_seg(u, body, i + j, r, memo))
            {
                None => false,
                Some(j) => (0..j).all(|k| nv_simple(u, guard, i + k, i + k + 1)),
            }
        }
        GComplexEol::GuardAfter { body, guard } => {
            match (1..=r - i).find(|p| nv_gcomplex_seg(u, body, i, i + p, memo)) {
                None => false,
                Some(p) => (p..r - i).all(|k| nv_simple(u, guard, i + k, i + k + 1)),
            }
        }
    }
}

/// Every step from position `from+1` on: the remaining stem plus one full
/// loop, read off the unrolled word.
fn nv_guard_forever(u: &Unrolled, guard: &SimpleEol, from: usize) -> bool {
    let until = u.stem_len.max(from) + u.cycle_len;
    (from + 1..=until).all(|p| nv_simple(u, guard, p - 1, p))
}

fn nv_simple_trace(u: &Unrolled, s: &SimpleEol, from: usize) -> bool {
    match s {
        SimpleEol::Not(a) => !nv_simple_trace(u, a, from),
        other => (from + 1..=u.bound(from)).any(|end| nv_simple(u, other, from, end)),
    }
}

fn nv_gcomplex_trace(
    u: &Unrolled,
    theta: &GComplexEol,
    from: usize,
    memo: &mut HashMap<(usize, usize, usize), bool>,
) -> bool {
    match theta {
        GComplexEol::Interval(IComplexEol::Simple(s)) => nv_simple_trace(u, s, from),
        GComplexEol::Interval(psi) => {
            (from + 1..=u.bound(from)).any(|end| nv_icomplex(u, psi, from, end, memo))
        }
        GComplexEol::GuardUntil { guard, body } => {
            let r_hi = from.max(u.stem_len) + u.cycle_len;
            let sats: Vec<usize> = (from..=r_hi)
                .filter(|r| nv_gcomplex_trace(u, body, *r, memo))
                .collect();
            match sats.last() {
                None => false,
                Some(&rho) if rho >= u.stem_len => nv_guard_forever(u, guard, from),
                Some(&rho) => (from..rho).all(|k| nv_simple(u, guard, k, k + 1)),
            }
        }
        GComplexEol::GuardAfter { body, guard } => {
            match (from + 1..=u.bound(from)).find(|r| nv_gcomplex_seg(u, body, from, *r, memo)) {
                None => false,
                Some(rho) => nv_guard_forever(u, guard, rho),
            }
        }
    }
}

/// Event-order satisfaction computed over an explicitly unrolled word; must
/// agree with [`crate::eol::eval_infinite`].
pub fn naive_eol_eval(
    ts: &TransitionSystem,
    sigma: &LassoExecution,
    xi: &InfiniteEol,
    config: &OracleConfig,
) -> Result<bool, Error> {
    let budget = effective_unfolds(xi, UnfoldBudget::default_for(xi), sigma.cycle_len());
    let u = build_unrolled(ts, sigma, xi, budget, config);
    let mut memo = HashMap::new();
    if !nv_gcomplex_trace(&u, &xi.head, 0, &mut memo) {
        return Ok(false);
    }
    let l = u.stem_len;
    let m = u.cycle_len;
    Ok((1..=budget.cycle_unfolds).any(|j| nv_icomplex(&u, &xi.cycle, l, l + j * m, &mut memo)))
}

/// The unfold counts actually scanned on a loop of length `m`; mirrors the
/// primary evaluator so the two sides decide the same bounded semantics.
fn effective_unfolds(xi: &InfiniteEol, budget: UnfoldBudget, m: usize) -> UnfoldBudget {
    let m = m.max(1);
    let mut evs = Vec::new();
    xi.head.positive_events(&mut evs);
    let head_events = evs.len();
    evs.clear();
    xi.cycle.positive_events(&mut evs);
    let cycle_events = evs.len();
    let head_extra = budget.head_unfolds.saturating_sub(head_events + 1);
    let cycle_extra = budget.cycle_unfolds.saturating_sub(cycle_events + 1);
    UnfoldBudget {
        head_unfolds: budget
            .head_unfolds
            .min(head_events.div_ceil(m) + 2 + head_extra),
        cycle_unfolds: budget
            .cycle_unfolds
            .min(cycle_events.div_ceil(m) + 2 + cycle_extra),
    }
}

// ---------------------------------------------------------------------------
// Seeded model and property generation.

/// A generated checking problem.
#[derive(Debug, Clone)]
pub struct GeneratedPair {
    pub ts: TransitionSystem,
    pub property: LtlFormula,
    pub property_text: String,
}

const TEMPLATE_COUNT: u32 = 5;

fn template_text(kind: u32, x: &str, y: &str) -> String {
    match kind {
        0 => format!("G ({x} -> F {y})"),
        1 => format!("F {x}"),
        2 => format!("G !{x}"),
        3 => format!("!{x} U {y}"),
        _ => format!("G F {x}"),
    }
}

fn random_system(rng: &mut StdRng) -> TransitionSystem {
    let n_states = rng.random_range(3..=8usize);
    let n_actions = rng.random_range(2..=5usize);
    let density: f64 = rng.random_range(0.3..=0.7);
    let actions: Vec<String> = (0..n_actions)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect();
    let mut b = TransitionSystem::builder();
    for i in 0..n_states {
        b.state(&format!("s{i}"));
    }
    b.initial("s0");
    for s in 0..n_states {
        for t in 0..n_states {
            if rng.random_bool(density) {
                let a = &actions[rng.random_range(0..n_actions)];
                b.transition(&format!("s{s}"), a, &format!("s{t}"));
            }
        }
    }
    complete_terminal_states(&b.build().expect("generated system"))
}

/// Deterministic per seed: a small completed system plus one property over
/// its action events. Models are re-drawn until their elementary-lasso count
/// stays tractable, and properties until the good part of the universe is
/// nonempty — a property violated by everything admits no cause, since
/// necessity has no witness.
pub fn random_model(seed: u64, lasso_limit: usize) -> GeneratedPair {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut ts = random_system(&mut rng);
    for _ in 0..32 {
        match enumerate_lassos(&ts, lasso_limit) {
            Ok(lassos) if !lassos.is_empty() => break,
            _ => ts = random_system(&mut rng),
        }
    }
    let usable: Vec<String> = ts
        .action_names_sorted()
        .into_iter()
        .filter(|n| n != crate::model::PADDING_NAME)
        .collect();
    let pick =
        |rng: &mut StdRng, from: &[String]| -> String { from[rng.random_range(0..from.len())].clone() };

    let mut chosen: Option<(LtlFormula, String)> = None;
    let mut fallback: Option<(LtlFormula, String)> = None;
    for _ in 0..24 {
        let kind = rng.random_range(0..TEMPLATE_COUNT);
        let x = pick(&mut rng, &usable);
        let y = pick(&mut rng, &usable);
        let text = template_text(kind, &x, &y);
        let phi = crate::ltl::parse_ltl(&text).expect("template parses");
        let Ok(universe) = crate::search::partition(&ts, &phi, lasso_limit) else {
            continue;
        };
        if !universe.good.is_empty() {
            if fallback.is_none() {
                fallback = Some((phi.clone(), text.clone()));
            }
            if !universe.bad.is_empty() {
                chosen = Some((phi, text));
                break;
            }
        }
    }
    let (property, property_text) = chosen
        .or(fallback)
        .unwrap_or_else(|| (LtlFormula::True, "true".to_string()));
    GeneratedPair {
        ts,
        property,
        property_text,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eol::parse_infinite;
    use crate::ltl::parse_ltl;
    use crate::model::parse_model;
    use crate::testutil::{lasso_over_word, lasso_over_word_in};

    fn set_of_words(
        ts: &TransitionSystem,
        lassos: &[LassoExecution],
    ) -> std::collections::BTreeSet<(Vec<String>, Vec<String>)> {
        lassos.iter().map(|l| l.word(ts)).collect()
    }

    #[test]
    fn naive_and_primary_enumeration_agree() {
        let ts = parse_model("init s0; s0 -a1-> s1; s1 -a2-> s2; s2 -a3-> s1;").unwrap();
        let naive = naive_lassos(&ts, &OracleConfig::default()).unwrap();
        let primary = enumerate_lassos(&ts, 1000).unwrap();
        assert_eq!(naive.len(), 1);
        assert_eq!(set_of_words(&ts, &naive), set_of_words(&ts, &primary));
    }

    #[test]
    fn padded_model_has_one_padding_lasso() {
        let ts = complete_terminal_states(&parse_model("init s0;").unwrap());
        let naive = naive_lassos(&ts, &OracleConfig::default()).unwrap();
        assert_eq!(naive.len(), 1);
        let (stem, cycle) = naive[0].word(&ts);
        assert_eq!(stem, vec!["LAMBDA".to_string()]);
        assert_eq!(cycle, vec!["LAMBDA".to_string()]);
    }

    #[test]
    fn oracle_rejects_oversized_models() {
        let mut b = TransitionSystem::builder();
        for i in 0..9 {
            b.state(&format!("s{i}"));
            b.transition(&format!("s{i}"), "a", &format!("s{}", (i + 1) % 9));
        }
        b.initial("s0");
        let ts = b.build().unwrap();
        assert!(matches!(
            naive_lassos(&ts, &OracleConfig::default()),
            Err(Error::OracleCapExceeded(_))
        ));
    }

    #[test]
    fn naive_ltl_matches_table_evaluator() {
        let (ts, sigma) = lasso_over_word_in(&["E2"], &["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        for text in [
            "G (B2 -> F E2)",
            "F E1",
            "G !E2",
            "!B0 U E1",
            "G F B1",
            "X X B2",
            "true",
        ] {
            let phi = parse_ltl(text).unwrap();
            assert_eq!(
                naive_ltl_eval(&ts, &phi, &sigma).unwrap(),
                crate::ltl::eval_ltl(&ts, &phi, &sigma).unwrap(),
                "disagreement on {text}"
            );
        }
    }

    #[test]
    fn naive_eol_matches_worked_results() {
        let (ts, sigma) = lasso_over_word(&["a1"], &["a2", "a3"]);
        let config = OracleConfig::default();
        for (text, want) in [
            ("a1 .^w (a2 . a3)", true),
            ("a1 . a3 .^w (a3 . a2)", true),
            ("a1 . a3 . a2 . a3 . a2 .^w (a2 . a3 . a2 . a2 . a2)", true),
            ("a1 .^w (a1)", false),
        ] {
            let xi = parse_infinite(text).unwrap();
            assert_eq!(
                naive_eol_eval(&ts, &sigma, &xi, &config).unwrap(),
                want,
                "oracle disagrees on {text}"
            );
        }
    }

    #[test]
    fn naive_eol_checks_guarded_cause() {
        let config = OracleConfig::default();
        let xi = parse_infinite("(B2 .[ !E2) .^w (!E2)").unwrap();
        let (ts, bad) = lasso_over_word_in(&["E2"], &["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        assert!(naive_eol_eval(&ts, &bad, &xi, &config).unwrap());
        let (ts2, serviced) = lasso_over_word(&["E0", "B2"], &["B1", "E1", "E2", "B0", "E0"]);
        assert!(!naive_eol_eval(&ts2, &serviced, &xi, &config).unwrap());
    }

    #[test]
    fn generation_is_deterministic() {
        let a = random_model(7, 300);
        let b = random_model(7, 300);
        assert_eq!(a.property_text, b.property_text);
        assert_eq!(a.ts.state_count(), b.ts.state_count());
        assert_eq!(a.ts.transitions().len(), b.ts.transitions().len());
    }

    #[test]
    fn generated_models_are_complete_and_tractable() {
        for seed in 0..10 {
            let pair = random_model(seed, 300);
            assert!(!pair.ts.has_terminal_states());
            let lassos = enumerate_lassos(&pair.ts, 300).unwrap();
            assert!(!lassos.is_empty());
        }
    }
}

// ---------------------------------------------------------------------------
// The differential suite behind `verify`.

/// One named differential check.
#[derive(Debug, Clone)]
pub struct VerifyCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Runs the full differential suite on one model and property: enumeration
/// against the path-listing oracle, the table LTL evaluator against the
/// suffix-scanning one on every trace, and the event-order evaluator against
/// the unrolled-word one on every formula the causality pipeline touched.
pub fn verify_model(
    ts: &TransitionSystem,
    phi: &LtlFormula,
    cap: usize,
    config: &OracleConfig,
) -> Result<Vec<VerifyCheck>, Error> {
    use std::collections::BTreeSet;
    let mut checks = Vec::new();

    let primary = enumerate_lassos(ts, cap)?;
    match naive_lassos(ts, config) {
        Ok(naive) => {
            let key = |l: &LassoExecution| {
                (
                    ts.state_name(l.init()).to_string(),
                    l.word(ts),
                    l.stem().iter().map(|s| s.target).collect::<Vec<_>>(),
                )
            };
            let a: BTreeSet<_> = primary.iter().map(key).collect();
            let b: BTreeSet<_> = naive.iter().map(key).collect();
            checks.push(VerifyCheck {
                name: "lasso enumeration".into(),
                passed: a == b,
                detail: format!("{} lassos, {} from the oracle", primary.len(), naive.len()),
            });
        }
        Err(Error::OracleCapExceeded(why)) => checks.push(VerifyCheck {
            name: "lasso enumeration".into(),
            passed: true,
            detail: format!("skipped: {why}"),
        }),
        Err(other) => return Err(other),
    }

    let mut ltl_disagreements = 0usize;
    for lasso in &primary {
        let fast = crate::ltl::eval_ltl(ts, phi, lasso)?;
        let slow = naive_ltl_eval(ts, phi, lasso)?;
        if fast != slow {
            ltl_disagreements += 1;
        }
    }
    checks.push(VerifyCheck {
        name: "ltl evaluation".into(),
        passed: ltl_disagreements == 0,
        detail: format!(
            "{} traces checked, {} disagreements",
            primary.len(),
            ltl_disagreements
        ),
    });

    let universe = crate::search::partition(ts, phi, cap)?;
    let analysis = crate::causality::compute_causes_for(ts, &universe)?;
    let mut eol_pairs = 0usize;
    let mut eol_disagreements = 0usize;
    for xi in analysis.touched.values() {
        for sigma in universe.all() {
            let fast = crate::eol::eval_infinite(ts, sigma, xi, None)?;
            let slow = naive_eol_eval(ts, sigma, xi, config)?;
            eol_pairs += 1;
            if fast != slow {
                eol_disagreements += 1;
            }
        }
    }
    checks.push(VerifyCheck {
        name: "event-order evaluation".into(),
        passed: eol_disagreements == 0,
        detail: format!(
            "{} (formula, trace) pairs checked, {} disagreements",
            eol_pairs, eol_disagreements
        ),
    });

    let mut member_violations = 0usize;
    let mut uncovered = 0usize;
    let mut covered = vec![false; universe.bad.len()];
    for class in &analysis.classes {
        for &member in &class.members {
            covered[member] = true;
            if crate::ltl::eval_ltl(ts, phi, &universe.bad[member])?
                || naive_ltl_eval(ts, phi, &universe.bad[member])?
            {
                member_violations += 1;
            }
        }
    }
    if !universe.good.is_empty() {
        uncovered = covered.iter().filter(|c| !**c).count();
    }
    checks.push(VerifyCheck {
        name: "soundness".into(),
        passed: member_violations == 0,
        detail: format!("{} class members, {} good ones", 
            analysis.classes.iter().map(|c| c.members.len()).sum::<usize>(),
            member_violations
        ),
    });
    checks.push(VerifyCheck {
        name: "completeness".into(),
        passed: uncovered == 0,
        detail: format!("{} bad traces, {} uncovered", universe.bad.len(), uncovered),
    });
    Ok(checks)
}
