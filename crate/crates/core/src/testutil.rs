//! Helpers for building executions with a prescribed action word.
//!
//! Used by tests and the verification oracle to replay traces that are given
//! as words rather than as paths of a concrete model: a fresh chain-plus-cycle
//! system carries exactly the requested word.

use crate::model::{LassoExecution, Step, TransitionSystem};

/// Builds a minimal system whose single execution is `stem (cycle)^ω` and the
/// matching lasso.
pub fn lasso_over_word(stem: &[&str], cycle: &[&str]) -> (TransitionSystem, LassoExecution) {
    lasso_over_word_in(&[], stem, cycle)
}

/// Several word lassos over one shared system, each carried by its own
/// disjoint chain-plus-cycle component.
pub fn lassos_over_words(
    alphabet: &[&str],
    words: &[(&[&str], &[&str])],
) -> (TransitionSystem, Vec<LassoExecution>) {
    let mut b = TransitionSystem::builder();
    for extra in alphabet {
        b.action(extra);
    }
    let mut names_per_word = Vec::new();
    for (k, (stem, cycle)) in words.iter().enumerate() {
        assert!(!cycle.is_empty(), "cycle must be nonempty");
        let total = stem.len() + cycle.len();
        let names: Vec<String> = (0..total).map(|i| format!("w{k}_{i}")).collect();
        b.initial(&names[0]);
        let entry = stem.len();
        for (i, act) in stem.iter().chain(cycle.iter()).enumerate() {
            let target = if i + 1 == total { &names[entry] } else { &names[i + 1] };
            b.transition(&names[i], act, target);
        }
        names_per_word.push(names);
    }
    let ts = b.build().expect("word system");
    let mut lassos = Vec::new();
    for (k, (stem, cycle)) in words.iter().enumerate() {
        let names = &names_per_word[k];
        let total = stem.len() + cycle.len();
        let entry = stem.len();
        let state = |i: usize| ts.state_id(&names[i]).unwrap();
        let stem_steps: Vec<Step> = stem
            .iter()
            .enumerate()
            .map(|(i, act)| Step {
                action: ts.action_id(act).unwrap(),
                target: state(i + 1),
            })
            .collect();
        let cycle_steps: Vec<Step> = cycle
            .iter()
            .enumerate()
            .map(|(i, act)| {
                let pos = entry + i + 1;
                Step {
                    action: ts.action_id(act).unwrap(),
                    target: state(if pos == total { entry } else { pos }),
                }
            })
            .collect();
        lassos.push(
            LassoExecution::new(&ts, state(0), stem_steps, cycle_steps).expect("word lasso"),
        );
    }
    (ts, lassos)
}

/// Like [`lasso_over_word`], with extra action names registered so formulae
/// may refer to events that never occur on the trace.
pub fn lasso_over_word_in(
    alphabet: &[&str],
    stem: &[&str],
    cycle: &[&str],
) -> (TransitionSystem, LassoExecution) {
    assert!(!cycle.is_empty(), "cycle must be nonempty");
    let mut b = TransitionSystem::builder();
    for extra in alphabet {
        b.action(extra);
    }
    let total = stem.len() + cycle.len();
    let names: Vec<String> = (0..total).map(|i| format!("q{i}")).collect();
    b.initial("q0");
    let entry = stem.len();
    for (i, act) in stem.iter().chain(cycle.iter()).enumerate() {
        let target = if i + 1 == total { &names[entry] } else { &names[i + 1] };
        b.transition(&names[i], act, target);
    }
    let ts = b.build().expect("word system");
    let state = |i: usize| ts.state_id(&names[i]).unwrap();
    let stem_steps: Vec<Step> = stem
        .iter()
        .enumerate()
        .map(|(i, act)| Step {
            action: ts.action_id(act).unwrap(),
            target: state(i + 1),
        })
        .collect();
    let cycle_steps: Vec<Step> = cycle
        .iter()
        .enumerate()
        .map(|(i, act)| {
            let pos = entry + i + 1;
            Step {
                action: ts.action_id(act).unwrap(),
                target: state(if pos == total { entry } else { pos }),
            }
        })
        .collect();
    let lasso = LassoExecution::new(&ts, state(0), stem_steps, cycle_steps).expect("word lasso");
    (ts, lasso)
}
