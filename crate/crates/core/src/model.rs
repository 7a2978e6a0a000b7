//! Transition systems, the model-file format, and lasso-shaped executions.
//!
//! A model is a finite labeled graph: states, action-labeled transitions, a
//! nonempty set of initial states and an optional set of atomic propositions
//! per state. Every action doubles as an event variable: the event `a` holds
//! at a position of an execution exactly when the transition just taken was
//! labeled `a`. Position 0 of an execution has no incoming transition, so
//! action events are false there.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::Error;

/// Reserved padding action (and sink state) name used by terminal-state
/// completion. User models may not declare it.
pub const PADDING_NAME: &str = "LAMBDA";

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ActionId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transition {
    pub source: StateId,
    pub action: ActionId,
    pub target: StateId,
}

/// A finite transition system with action-derived event variables.
///
/// Immutable after construction; all analyses borrow it read-only.
#[derive(Debug, Clone)]
pub struct TransitionSystem {
    state_names: Vec<String>,
    action_names: Vec<String>,
    transitions: BTreeSet<Transition>,
    initials: BTreeSet<StateId>,
    labels: BTreeMap<StateId, BTreeSet<String>>,
    /// Outgoing transitions per state, sorted by (action name, target name).
    adjacency: Vec<Vec<Transition>>,
}

impl TransitionSystem {
    pub fn builder() -> TransitionSystemBuilder {
        TransitionSystemBuilder::default()
    }

    pub fn state_count(&self) -> usize {
        self.state_names.len()
    }

    pub fn action_count(&self) -> usize {
        self.action_names.len()
    }

    pub fn state_name(&self, s: StateId) -> &str {
        &self.state_names[s.0 as usize]
    }

    pub fn action_name(&self, a: ActionId) -> &str {
        &self.action_names[a.0 as usize]
    }

    pub fn state_id(&self, name: &str) -> Option<StateId> {
        self.state_names
            .iter()
            .position(|n| n == name)
            .map(|i| StateId(i as u32))
    }

    pub fn action_id(&self, name: &str) -> Option<ActionId> {
        self.action_names
            .iter()
            .position(|n| n == name)
            .map(|i| ActionId(i as u32))
    }

    pub fn states(&self) -> impl Iterator<Item = StateId> + '_ {
        (0..self.state_names.len() as u32).map(StateId)
    }

    /// Action names in sorted order, as the event-variable universe.
    pub fn action_names_sorted(&self) -> Vec<String> {
        let mut names = self.action_names.clone();
        names.sort();
        names
    }

    pub fn initials(&self) -> &BTreeSet<StateId> {
        &self.initials
    }

    pub fn transitions(&self) -> &BTreeSet<Transition> {
        &self.transitions
    }

    pub fn labels_of(&self, s: StateId) -> Option<&BTreeSet<String>> {
        self.labels.get(&s)
    }

    pub fn has_label_name(&self, name: &str) -> bool {
        self.labels.values().any(|set| set.contains(name))
    }

    /// Outgoing transitions of `s`, sorted by (action name, target name).
    pub fn outgoing(&self, s: StateId) -> &[Transition] {
        &self.adjacency[s.0 as usize]
    }

    pub fn is_terminal(&self, s: StateId) -> bool {
        self.adjacency[s.0 as usize].is_empty()
    }

    pub fn has_terminal_states(&self) -> bool {
        self.states().any(|s| self.is_terminal(s))
    }

    fn rebuild_adjacency(&mut self) {
        let mut adj = vec![Vec::new(); self.state_names.len()];
        for t in &self.transitions {
            adj[t.source.0 as usize].push(*t);
        }
        for list in &mut adj {
            list.sort_by(|a, b| {
                let ka = (self.action_name(a.action), self.state_name(a.target));
                let kb = (self.action_name(b.action), self.state_name(b.target));
                ka.cmp(&kb)
            });
        }
        self.adjacency = adj;
    }
}

#[derive(Default)]
pub struct TransitionSystemBuilder {
    states: Vec<String>,
    actions: Vec<String>,
    transitions: BTreeSet<Transition>,
    initials: BTreeSet<StateId>,
    labels: BTreeMap<StateId, BTreeSet<String>>,
}

impl TransitionSystemBuilder {
    pub fn state(&mut self, name: &str) -> StateId {
        if let Some(i) = self.states.iter().position(|n| n == name) {
            return StateId(i as u32);
        }
        self.states.push(name.to_string());
        StateId(self.states.len() as u32 - 1)
    }

    pub fn action(&mut self, name: &str) -> ActionId {
        if let Some(i) = self.actions.iter().position(|n| n == name) {
            return ActionId(i as u32);
        }
        self.actions.push(name.to_string());
        ActionId(self.actions.len() as u32 - 1)
    }

    pub fn transition(&mut self, source: &str, action: &str, target: &str) -> &mut Self {
        let t = Transition {
            source: self.state(source),
            action: self.action(action),
            target: self.state(target),
        };
        self.transitions.insert(t);
        self
    }

    pub fn initial(&mut self, name: &str) -> &mut Self {
        let s = self.state(name);
        self.initials.insert(s);
        self
    }

    pub fn label(&mut self, state: &str, label: &str) -> &mut Self {
        let s = self.state(state);
        self.labels.entry(s).or_default().insert(label.to_string());
        self
    }

    pub fn build(self) -> Result<TransitionSystem, Error> {
        if self.initials.is_empty() {
            return Err(Error::EmptyInitialSet);
        }
        let mut ts = TransitionSystem {
            state_names: self.states,
            action_names: self.actions,
            transitions: self.transitions,
            initials: self.initials,
            labels: self.labels,
            adjacency: Vec::new(),
        };
        ts.rebuild_adjacency();
        Ok(ts)
    }
}

fn is_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn check_name(s: &str, line: usize, col: usize) -> Result<(), Error> {
    if !is_name(s) {
        return Err(Error::ModelSyntax {
            line,
            col,
            message: format!("invalid name `{s}` (expected [A-Za-z0-9_]+)"),
        });
    }
    if s == PADDING_NAME {
        return Err(Error::ModelSyntax {
            line,
            col,
            message: format!("the name `{PADDING_NAME}` is reserved"),
        });
    }
    Ok(())
}

/// Parses the line-based model format.
///
/// ```text
/// # comment
/// state NAME;  state NAME { l1, l2 };  init NAME;  NAME -ACTION-> NAME;
/// ```
///
/// Declarations are `;`-terminated. States are implicitly declared when they
/// appear as `init` or as the source of a transition; a transition target
/// that is never declared, never initial and never a source is rejected so
/// that typos do not silently become terminal states. Duplicate transitions
/// collapse to one.
pub fn parse_model(text: &str) -> Result<TransitionSystem, Error> {
    struct RawTransition {
        source: String,
        action: String,
        target: String,
        line: usize,
        col: usize,
    }

    let mut declared: Vec<String> = Vec::new();
    let mut initials: Vec<String> = Vec::new();
    let mut labels: Vec<(String, String)> = Vec::new();
    let mut raw_transitions: Vec<RawTransition> = Vec::new();

    for (lineno, raw_line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = match raw_line.find('#') {
            Some(i) => &raw_line[..i],
            None => raw_line,
        };
        for stmt in line.split(';') {
            let stmt = stmt.trim();
            if stmt.is_empty() {
                continue;
            }
            let col = raw_line.find(stmt.split_whitespace().next().unwrap()).map(|i| i + 1).unwrap_or(1);
            if let Some(rest) = stmt.strip_prefix("state ") {
                let rest = rest.trim();
                let (name, label_part) = match rest.find('{') {
                    Some(i) => {
                        let close = rest.rfind('}').ok_or(Error::ModelSyntax {
                            line: line_no,
                            col,
                            message: "missing `}` in state declaration".into(),
                        })?;
                        (rest[..i].trim(), Some(rest[i + 1..close].trim()))
                    }
                    None => (rest, None),
                };
                check_name(name, line_no, col)?;
                declared.push(name.to_string());
                if let Some(ls) = label_part {
                    for l in ls.split(',') {
                        let l = l.trim();
                        if l.is_empty() {
                            continue;
                        }
                        check_name(l, line_no, col)?;
                        labels.push((name.to_string(), l.to_string()));
                    }
                }
            } else if let Some(rest) = stmt.strip_prefix("init ") {
                let name = rest.trim();
                check_name(name, line_no, col)?;
                initials.push(name.to_string());
            } else if stmt.contains("->") {
                // NAME -ACTION-> NAME
                let arrow_end = stmt.find("->").unwrap();
                let head = &stmt[..arrow_end];
                let target = stmt[arrow_end + 2..].trim();
                let dash = head.find('-').ok_or(Error::ModelSyntax {
                    line: line_no,
                    col,
                    message: "expected `SOURCE -ACTION-> TARGET`".into(),
                })?;
                let source = head[..dash].trim();
                let action = head[dash + 1..].trim();
                check_name(source, line_no, col)?;
                check_name(action, line_no, col)?;
                check_name(target, line_no, col)?;
                raw_transitions.push(RawTransition {
                    source: source.to_string(),
                    action: action.to_string(),
                    target: target.to_string(),
                    line: line_no,
                    col,
                });
            } else {
                return Err(Error::ModelSyntax {
                    line: line_no,
                    col,
                    message: format!("unrecognized declaration `{stmt}`"),
                });
            }
        }
    }

    if initials.is_empty() {
        return Err(Error::EmptyInitialSet);
    }

    let mut known: BTreeSet<&str> = BTreeSet::new();
    known.extend(declared.iter().map(|s| s.as_str()));
    known.extend(initials.iter().map(|s| s.as_str()));
    known.extend(raw_transitions.iter().map(|t| t.source.as_str()));
    for t in &raw_transitions {
        if !known.contains(t.target.as_str()) {
            return Err(Error::UndeclaredState {
                name: t.target.clone(),
                line: t.line,
                col: t.col,
            });
        }
    }

    let mut b = TransitionSystem::builder();
    for name in &declared {
        b.state(name);
    }
    for name in &initials {
        b.initial(name);
    }
    for t in &raw_transitions {
        b.transition(&t.source, &t.action, &t.target);
    }
    for (state, label) in &labels {
        b.label(state, label);
    }
    b.build()
}

/// Routes every terminal state to a single fresh padding sink so that all
/// executions extend infinitely. Idempotent; systems without terminal states
/// are returned unchanged.
pub fn complete_terminal_states(ts: &TransitionSystem) -> TransitionSystem {
    if !ts.has_terminal_states() {
        return ts.clone();
    }
    let mut out = ts.clone();
    let sink = {
        out.state_names.push(PADDING_NAME.to_string());
        StateId(out.state_names.len() as u32 - 1)
    };
    let pad = match out.action_names.iter().position(|n| n == PADDING_NAME) {
        Some(i) => ActionId(i as u32),
        None => {
            out.action_names.push(PADDING_NAME.to_string());
            ActionId(out.action_names.len() as u32 - 1)
        }
    };
    let terminals: Vec<StateId> = ts.states().filter(|s| ts.is_terminal(*s)).collect();
    for s in terminals {
        out.transitions.insert(Transition {
            source: s,
            action: pad,
            target: sink,
        });
    }
    out.transitions.insert(Transition {
        source: sink,
        action: pad,
        target: sink,
    });
    out.rebuild_adjacency();
    out
}

/// One step of an execution: the action taken and the state it enters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub action: ActionId,
    pub target: StateId,
}

/// An ultimately periodic execution `stem · cycle^ω`.
///
/// Positions index the unrolled word: position 0 is the initial state,
/// position p > 0 is entered by its step's action. The cycle re-enters the
/// state reached at the end of the stem.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LassoExecution {
    init: StateId,
    stem: Vec<Step>,
    cycle: Vec<Step>,
}

impl LassoExecution {
    pub fn new(
        ts: &TransitionSystem,
        init: StateId,
        stem: Vec<Step>,
        cycle: Vec<Step>,
    ) -> Result<Self, Error> {
        if cycle.is_empty() {
            return Err(Error::InvalidLasso("empty cycle".into()));
        }
        if !ts.initials().contains(&init) {
            return Err(Error::InvalidLasso(format!(
                "`{}` is not an initial state",
                ts.state_name(init)
            )));
        }
        let mut at = init;
        for step in stem.iter().chain(cycle.iter()) {
            let t = Transition {
                source: at,
                action: step.action,
                target: step.target,
            };
            if !ts.transitions().contains(&t) {
                return Err(Error::InvalidLasso(format!(
                    "missing transition {} -{}-> {}",
                    ts.state_name(t.source),
                    ts.action_name(t.action),
                    ts.state_name(t.target)
                )));
            }
            at = step.target;
        }
        let entry = stem.last().map(|s| s.target).unwrap_or(init);
        if at != entry {
            return Err(Error::InvalidLasso(format!(
                "cycle ends at `{}` instead of re-entering `{}`",
                ts.state_name(at),
                ts.state_name(entry)
            )));
        }
        Ok(LassoExecution { init, stem, cycle })
    }

    pub fn init(&self) -> StateId {
        self.init
    }

    pub fn stem(&self) -> &[Step] {
        &self.stem
    }

    pub fn cycle(&self) -> &[Step] {
        &self.cycle
    }

    /// Stem length l: the cycle is entered at position l.
    pub fn stem_len(&self) -> usize {
        self.stem.len()
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle.len()
    }

    /// State at unrolled position p.
    pub fn state_at(&self, p: usize) -> StateId {
        let l = self.stem.len();
        if p == 0 {
            self.init
        } else if p <= l {
            self.stem[p - 1].target
        } else {
            self.cycle[(p - l - 1) % self.cycle.len()].target
        }
    }

    /// Action of the step entering position p (p ≥ 1).
    pub fn action_into(&self, p: usize) -> ActionId {
        debug_assert!(p >= 1);
        let l = self.stem.len();
        if p <= l {
            self.stem[p - 1].action
        } else {
            self.cycle[(p - l - 1) % self.cycle.len()].action
        }
    }

    /// First `steps` steps of the infinite word.
    pub fn unroll(&self, steps: usize) -> Vec<Step> {
        (1..=steps)
            .map(|p| Step {
                action: self.action_into(p),
                target: self.state_at(p),
            })
            .collect()
    }

    /// Actions occurring anywhere in the stem or cycle.
    pub fn occurring_actions(&self) -> BTreeSet<ActionId> {
        self.stem
            .iter()
            .chain(self.cycle.iter())
            .map(|s| s.action)
            .collect()
    }

    pub fn cycle_actions(&self) -> BTreeSet<ActionId> {
        self.cycle.iter().map(|s| s.action).collect()
    }

    /// Action word `(stem, cycle)` as names.
    pub fn word(&self, ts: &TransitionSystem) -> (Vec<String>, Vec<String>) {
        (
            self.stem
                .iter()
                .map(|s| ts.action_name(s.action).to_string())
                .collect(),
            self.cycle
                .iter()
                .map(|s| ts.action_name(s.action).to_string())
                .collect(),
        )
    }

    /// Whether two lassos denote the same infinite action word, regardless of
    /// how the word is split into stem and cycle.
    pub fn same_word(&self, other: &LassoExecution) -> bool {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        let l = self.stem_len().max(other.stem_len());
        let m = self.cycle_len() / gcd(self.cycle_len(), other.cycle_len()) * other.cycle_len();
        (1..=l + m).all(|p| self.action_into(p) == other.action_into(p))
    }

    pub fn render(&self, ts: &TransitionSystem) -> String {
        let stem: Vec<&str> = self.stem.iter().map(|s| ts.action_name(s.action)).collect();
        let cycle: Vec<&str> = self.cycle.iter().map(|s| ts.action_name(s.action)).collect();
        format!("{} ({})^w", stem.join(" "), cycle.join(" "))
    }
}

/// A window `[start, end]` of unrolled positions of a lasso.
///
/// The segment's steps are the actions entering positions start+1 ..= end;
/// a zero-length segment has no steps.
#[derive(Debug, Clone, Copy)]
pub struct Segment<'a> {
    pub lasso: &'a LassoExecution,
    pub start: usize,
    pub end: usize,
}

impl<'a> Segment<'a> {
    pub fn new(lasso: &'a LassoExecution, start: usize, end: usize) -> Self {
        debug_assert!(start <= end);
        Segment { lasso, start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    /// Action of the i-th step inside the segment (1-based).
    pub fn step(&self, i: usize) -> ActionId {
        debug_assert!(i >= 1 && i <= self.len());
        self.lasso.action_into(self.start + i)
    }

    pub fn sub(&self, start: usize, end: usize) -> Segment<'a> {
        debug_assert!(start <= end && end <= self.len());
        Segment::new(self.lasso, self.start + start, self.start + end)
    }
}

/// True iff some step strictly inside `(start, end]` carries `action`.
pub fn event_occurs_in_segment(seg: Segment<'_>, action: ActionId) -> bool {
    (1..=seg.len()).any(|i| seg.step(i) == action)
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-{:?}->{:?}", self.source, self.action, self.target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq1_system() -> TransitionSystem {
        // s0 -a1-> s1, s1 -a2-> s2, s2 -a3-> s1
        parse_model("init s0; s0 -a1-> s1; s1 -a2-> s2; s2 -a3-> s1;").unwrap()
    }

    pub(crate) fn eq1_lasso(ts: &TransitionSystem) -> LassoExecution {
        let s = |n: &str| ts.state_id(n).unwrap();
        let a = |n: &str| ts.action_id(n).unwrap();
        LassoExecution::new(
            ts,
            s("s0"),
            vec![Step { action: a("a1"), target: s("s1") }],
            vec![
                Step { action: a("a2"), target: s("s2") },
                Step { action: a("a3"), target: s("s1") },
            ],
        )
        .unwrap()
    }

    #[test]
    fn parses_three_state_file() {
        let ts = parse_model("init s0; s0 -a-> s1; s1 -b-> s2; s2 -c-> s1;").unwrap();
        assert_eq!(ts.state_count(), 3);
        assert_eq!(ts.action_count(), 3);
        assert_eq!(ts.initials().len(), 1);
    }

    #[test]
    fn rejects_undeclared_target() {
        let err = parse_model("init s0; s0 -a-> sX;").unwrap_err();
        match err {
            Error::UndeclaredState { name, .. } => assert_eq!(name, "sX"),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn declared_sink_is_accepted() {
        let ts = parse_model("init s0; state sX; s0 -a-> sX;").unwrap();
        assert_eq!(ts.state_count(), 2);
        assert!(ts.has_terminal_states());
    }

    #[test]
    fn rejects_empty_initial_set() {
        assert!(matches!(
            parse_model("s0 -a-> s0;"),
            Err(Error::EmptyInitialSet)
        ));
    }

    #[test]
    fn rejects_reserved_name() {
        assert!(parse_model("init s0; s0 -LAMBDA-> s0;").is_err());
    }

    #[test]
    fn parses_labels_and_comments() {
        let ts = parse_model("# elevator\nstate s0 { p, q }; init s0;\ns0 -a-> s0;").unwrap();
        let labels = ts.labels_of(ts.state_id("s0").unwrap()).unwrap();
        assert!(labels.contains("p") && labels.contains("q"));
    }

    #[test]
    fn completion_is_identity_without_terminals() {
        let ts = eq1_system();
        let done = complete_terminal_states(&ts);
        assert_eq!(done.state_count(), ts.state_count());
        assert_eq!(done.transitions().len(), ts.transitions().len());
    }

    #[test]
    fn completion_pads_single_state() {
        let ts = parse_model("init s0;").unwrap();
        let done = complete_terminal_states(&ts);
        assert_eq!(done.state_count(), 2);
        assert!(!done.has_terminal_states());
        // s0 -LAMBDA-> LAMBDA -LAMBDA-> LAMBDA
        assert_eq!(done.transitions().len(), 2);
    }

    #[test]
    fn completion_shares_one_sink() {
        let ts = parse_model("init s0; state t1; state t2; s0 -a-> t1; s0 -b-> t2;").unwrap();
        let done = complete_terminal_states(&ts);
        assert_eq!(done.state_count(), ts.state_count() + 1);
        assert!(!done.has_terminal_states());
        let again = complete_terminal_states(&done);
        assert_eq!(again.state_count(), done.state_count());
        assert_eq!(again.transitions().len(), done.transitions().len());
    }

    #[test]
    fn unroll_matches_expected_word() {
        let ts = eq1_system();
        let lasso = eq1_lasso(&ts);
        let names: Vec<&str> = lasso
            .unroll(5)
            .iter()
            .map(|s| ts.action_name(s.action))
            .collect();
        assert_eq!(names, ["a1", "a2", "a3", "a2", "a3"]);
        assert!(lasso.unroll(0).is_empty());
        assert_eq!(lasso.unroll(1).len(), lasso.stem_len());
    }

    #[test]
    fn unroll_is_prefix_consistent() {
        let ts = eq1_system();
        let lasso = eq1_lasso(&ts);
        for n in 0..12 {
            let shorter = lasso.unroll(n);
            let longer = lasso.unroll(n + 1);
            assert_eq!(&longer[..n], &shorter[..]);
        }
    }

    #[test]
    fn cycle_positions_reduce_modulo_length() {
        let ts = eq1_system();
        let lasso = eq1_lasso(&ts);
        let l = lasso.stem_len();
        let m = lasso.cycle_len();
        for k in 1..10 {
            assert_eq!(lasso.state_at(l + k), lasso.state_at(l + k + m));
        }
    }

    #[test]
    fn event_occurrence_respects_segment_bounds() {
        let ts = eq1_system();
        let lasso = eq1_lasso(&ts);
        let a = |n: &str| ts.action_id(n).unwrap();
        assert!(event_occurs_in_segment(Segment::new(&lasso, 0, 1), a("a1")));
        assert!(!event_occurs_in_segment(Segment::new(&lasso, 0, 1), a("a2")));
        assert!(event_occurs_in_segment(Segment::new(&lasso, 0, 3), a("a3")));
        assert!(!event_occurs_in_segment(Segment::new(&lasso, 1, 1), a("a1")));
    }

    #[test]
    fn lasso_must_close_its_cycle() {
        let ts = eq1_system();
        let s = |n: &str| ts.state_id(n).unwrap();
        let a = |n: &str| ts.action_id(n).unwrap();
        let bad = LassoExecution::new(
            &ts,
            s("s0"),
            vec![],
            vec![Step { action: a("a1"), target: s("s1") }],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn same_word_sees_through_rotation() {
        let ts = parse_model("init s0; s0 -x-> s1; s1 -y-> s0; s0 -y-> s2; s2 -x-> s0;").unwrap();
        let s = |n: &str| ts.state_id(n).unwrap();
        let a = |n: &str| ts.action_id(n).unwrap();
        let via_s1 = LassoExecution::new(
            &ts,
            s("s0"),
            vec![],
            vec![
                Step { action: a("x"), target: s("s1") },
                Step { action: a("y"), target: s("s0") },
            ],
        )
        .unwrap();
        let shifted = LassoExecution::new(
            &ts,
            s("s0"),
            vec![Step { action: a("x"), target: s("s1") }],
            vec![
                Step { action: a("y"), target: s("s0") },
                Step { action: a("x"), target: s("s1") },
            ],
        )
        .unwrap();
        assert!(via_s1.same_word(&shifted));
        let other = LassoExecution::new(
            &ts,
            s("s0"),
            vec![],
            vec![
                Step { action: a("y"), target: s("s2") },
                Step { action: a("x"), target: s("s0") },
            ],
        )
        .unwrap();
        assert!(!via_s1.same_word(&other));
    }
}
