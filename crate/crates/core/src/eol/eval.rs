//! Satisfaction of event-order formulae over finite segments and lasso
//! executions.
//!
//! Segment semantics follow the segment-indexed clauses: an event holds on a
//! segment when some step inside carries it; ordered conjunction splits the
//! segment at witness points `0 < j <= k < r`. Guard intervals are anchored
//! so that the guarded range is maximal: the left witness is the earliest
//! prefix satisfying its operand, the right witness the latest suffix start.
//! Without the anchoring, a guard could always be satisfied vacuously by
//! absorbing slack into a neighbouring witness, which would make guards
//! useless for excluding traces.
//!
//! Over a whole lasso, `head .^w (cycle)` holds when the head is satisfied
//! over the execution (trailing after-guards range over the infinite suffix,
//! resolved exactly through the loop) and the cycle is satisfied by some
//! unfolding `sigma[l .. l + j*m]` of the loop. Existential searches are
//! bounded by the unfold budget; for formulae with negations or guards the
//! budget-bounded result is the defined semantics.
//!
//! Formulae are resolved into an id-based arena before evaluation and
//! decided by memoized recursion over packed integer keys; two necessary
//! checks — ordered embedding of the positive events, and consecutive
//! occurrence of rigidly guarded runs — reject most non-satisfying traces by
//! direct word comparison first.

use std::collections::HashMap;
use std::hash::{BuildHasherDefault, Hasher};

use crate::eol::ast::{GComplexEol, IComplexEol, InfiniteEol, SimpleEol, UnfoldBudget};
use crate::error::Error;
use crate::model::{ActionId, LassoExecution, Segment, TransitionSystem};

/// Satisfaction witness for an infinite formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EolWitness {
    /// Shortest prefix length satisfying the head as a segment.
    pub head_len: usize,
    /// Loop unfoldings needed to cover that prefix beyond the stem.
    pub head_unfolds: usize,
    /// Smallest number of cycle unfoldings satisfying the cycle part.
    pub cycle_unfolds: usize,
}

// ---------------------------------------------------------------------------
// Resolved formula arena.

#[derive(Debug, Clone)]
enum RSimple {
    Top,
    /// `None` when the event names no action of the system: it never occurs.
    Event(Option<ActionId>),
    Not(u32),
    And(u32, u32),
    Or(u32, u32),
}

#[derive(Debug, Clone)]
enum RInterval {
    Simple(u32),
    Ordered(u32, u32),
    Between { first: u32, guard: u32, second: u32 },
    And(u32, u32),
    Or(u32, u32),
}

#[derive(Debug, Clone)]
enum RGuarded {
    Interval(u32),
    GuardUntil { guard: u32, body: u32 },
    GuardAfter { body: u32, guard: u32 },
}

struct Resolved {
    simples: Vec<RSimple>,
    intervals: Vec<RInterval>,
    guardeds: Vec<RGuarded>,
    /// Per interval node: satisfaction may shrink when the window grows.
    sensitive: Vec<bool>,
    /// Per interval node: positive events in chain order, when defined.
    positives: Vec<Option<Vec<Option<ActionId>>>>,
    head: u32,
    cycle: u32,
    until_depth: usize,
    head_events: usize,
    cycle_events: usize,
}

impl Resolved {
    fn build(ts: &TransitionSystem, xi: &InfiniteEol) -> Resolved {
        let mut r = Resolved {
            simples: Vec::new(),
            intervals: Vec::new(),
            guardeds: Vec::new(),
            sensitive: Vec::new(),
            positives: Vec::new(),
            head: 0,
            cycle: 0,
            until_depth: 0,
            head_events: 0,
            cycle_events: 0,
        };
        r.cycle = r.interval(ts, &xi.cycle);
        r.head = r.guarded(ts, &xi.head);
        r.until_depth = until_depth(&xi.head);
        let mut evs = Vec::new();
        xi.head.positive_events(&mut evs);
        r.head_events = evs.len();
        evs.clear();
        xi.cycle.positive_events(&mut evs);
        r.cycle_events = evs.len();
        r
    }

    fn simple(&mut self, ts: &TransitionSystem, s: &SimpleEol) -> u32 {
        let node = match s {
            SimpleEol::Top => RSimple::Top,
            SimpleEol::Event(name) => RSimple::Event(ts.action_id(name)),
            SimpleEol::Not(a) => {
                let ia = self.simple(ts, a);
                RSimple::Not(ia)
            }
            SimpleEol::And(a, b) => {
                let ia = self.simple(ts, a);
                let ib = self.simple(ts, b);
                RSimple::And(ia, ib)
            }
            SimpleEol::Or(a, b) => {
                let ia = self.simple(ts, a);
                let ib = self.simple(ts, b);
                RSimple::Or(ia, ib)
            }
        };
        self.simples.push(node);
        (self.simples.len() - 1) as u32
    }

    fn interval(&mut self, ts: &TransitionSystem, psi: &IComplexEol) -> u32 {
        let mut events = Vec::new();
        let ordered = psi.ordered_positives(&mut events);
        let positives =
            ordered.then(|| events.iter().map(|n| ts.action_id(n)).collect::<Vec<_>>());
        let (node, sensitive) = match psi {
            IComplexEol::Simple(s) => {
                let i = self.simple(ts, s);
                (RInterval::Simple(i), s.contains_negation())
            }
            IComplexEol::Ordered(a, b) => {
                let ia = self.interval(ts, a);
                let ib = self.interval(ts, b);
                let sens = self.sensitive[ia as usize] || self.sensitive[ib as usize];
                (RInterval::Ordered(ia, ib), sens)
            }
            IComplexEol::Between { first, guard, second } => {
                let ia = self.interval(ts, first);
                let ig = self.simple(ts, guard);
                let ib = self.interval(ts, second);
                (
                    RInterval::Between {
                        first: ia,
                        guard: ig,
                        second: ib,
                    },
                    true,
                )
            }
            IComplexEol::And(a, b) => {
                let ia = self.interval(ts, a);
                let ib = self.interval(ts, b);
                let sens = self.sensitive[ia as usize] || self.sensitive[ib as usize];
                (RInterval::And(ia, ib), sens)
            }
            IComplexEol::Or(a, b) => {
                let ia = self.interval(ts, a);
                let ib = self.interval(ts, b);
                let sens = self.sensitive[ia as usize] || self.sensitive[ib as usize];
                (RInterval::Or(ia, ib), sens)
            }
        };
        self.intervals.push(node);
        self.sensitive.push(sensitive);
        self.positives.push(positives);
        (self.intervals.len() - 1) as u32
    }

    fn guarded(&mut self, ts: &TransitionSystem, theta: &GComplexEol) -> u32 {
        let node = match theta {
            GComplexEol::Interval(psi) => RGuarded::Interval(self.interval(ts, psi)),
            GComplexEol::GuardUntil { guard, body } => {
                let ig = self.simple(ts, guard);
                let ib = self.guarded(ts, body);
                RGuarded::GuardUntil { guard: ig, body: ib }
            }
            GComplexEol::GuardAfter { body, guard } => {
                let ib = self.guarded(ts, body);
                let ig = self.simple(ts, guard);
                RGuarded::GuardAfter { body: ib, guard: ig }
            }
        };
        self.guardeds.push(node);
        (self.guardeds.len() - 1) as u32
    }
}

/// The unfold counts actually scanned on a loop of length `m`: the formal
/// budget grants one unfolding per event (tight only for one-step loops),
/// while the events embed within `ceil(events/m)` unfoldings. Two spare
/// unfoldings cover witnesses split across boundaries; any raise of the
/// budget above its default carries over.
fn effective_budget(
    budget: UnfoldBudget,
    head_events: usize,
    cycle_events: usize,
    m: usize,
) -> UnfoldBudget {
    let m = m.max(1);
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

fn until_depth(theta: &GComplexEol) -> usize {
    match theta {
        GComplexEol::Interval(_) => 0,
        GComplexEol::GuardUntil { body, .. } => 1 + until_depth(body),
        GComplexEol::GuardAfter { body, .. } => until_depth(body),
    }
}

// ---------------------------------------------------------------------------
// Memo keyed by packed node/positions with a multiplicative hasher.

#[derive(Default)]
struct KeyHasher(u64);

impl Hasher for KeyHasher {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, _: &[u8]) {
        unreachable!("only u64 keys are hashed");
    }

    fn write_u64(&mut self, n: u64) {
        self.0 = n.wrapping_mul(0x9E37_79B9_7F4A_7C15);
    }
}

type Memo = HashMap<u64, bool, BuildHasherDefault<KeyHasher>>;

const TAG_INTERVAL: u64 = 1;
const TAG_GSEG: u64 = 2;
const TAG_GTRACE: u64 = 3;

fn key(tag: u64, node: u32, start: usize, end: usize) -> u64 {
    debug_assert!(start < (1 << 20) && end < (1 << 20));
    (tag << 60) | ((node as u64) << 40) | ((start as u64) << 20) | end as u64
}

// ---------------------------------------------------------------------------
// The evaluator.

struct Fast<'a> {
    lasso: &'a LassoExecution,
    rt: &'a Resolved,
    budget: UnfoldBudget,
    /// Sorted occurrence positions per action over `1..=horizon`.
    occ: Vec<Vec<u32>>,
    memo: Memo,
}

impl<'a> Fast<'a> {
    fn new(
        ts: &TransitionSystem,
        lasso: &'a LassoExecution,
        rt: &'a Resolved,
        budget: UnfoldBudget,
    ) -> Fast<'a> {
        let l = lasso.stem_len();
        let m = lasso.cycle_len();
        let budget = effective_budget(budget, rt.head_events, rt.cycle_events, m);
        let factor = budget.head_unfolds + budget.cycle_unfolds + rt.until_depth + 3;
        let horizon = l + factor * m;
        let mut occ = vec![Vec::new(); ts.action_count()];
        for p in 1..=horizon {
            occ[lasso.action_into(p).0 as usize].push(p as u32);
        }
        Fast {
            lasso,
            rt,
            budget,
            occ,
            memo: Memo::default(),
        }
    }

    fn stem_len(&self) -> usize {
        self.lasso.stem_len()
    }

    fn cycle_len(&self) -> usize {
        self.lasso.cycle_len()
    }

    fn bound(&self, from: usize) -> usize {
        from.max(self.stem_len()) + self.budget.head_unfolds * self.cycle_len()
    }

    /// Some occurrence of `a` strictly inside `(start, end]`.
    fn occurs(&self, a: Option<ActionId>, start: usize, end: usize) -> bool {
        let Some(a) = a else { return false };
        let positions = &self.occ[a.0 as usize];
        let i = positions.partition_point(|p| *p as usize <= start);
        positions.get(i).is_some_and(|p| *p as usize <= end)
    }

    fn simple(&self, id: u32, start: usize, end: usize) -> bool {
        match &self.rt.simples[id as usize] {
            RSimple::Top => true,
            RSimple::Event(a) => self.occurs(*a, start, end),
            RSimple::Not(a) => !self.simple(*a, start, end),
            RSimple::And(a, b) => self.simple(*a, start, end) && self.simple(*b, start, end),
            RSimple::Or(a, b) => self.simple(*a, start, end) || self.simple(*b, start, end),
        }
    }

    fn step_sat(&self, id: u32, pos: usize) -> bool {
        self.simple(id, pos - 1, pos)
    }

    fn interval(&mut self, id: u32, start: usize, end: usize) -> bool {
        let k = key(TAG_INTERVAL, id, start, end);
        if let Some(v) = self.memo.get(&k) {
            return *v;
        }
        let len = end - start;
        let v = match self.rt.intervals[id as usize].clone() {
            RInterval::Simple(s) => self.simple(s, start, end),
            RInterval::Ordered(a, b) => {
                match (1..len).find(|j| self.interval(a, start, start + j)) {
                    None => false,
                    Some(j) => (j..len).any(|k| self.interval(b, start + k, end)),
                }
            }
            RInterval::Between { first, guard, second } => {
                match (1..len).find(|j| self.interval(first, start, start + j)) {
                    None => false,
                    Some(j) => {
                        match (j..len).rev().find(|k| self.interval(second, start + k, end)) {
                            None => false,
                            Some(k) => (j..k).all(|l| self.step_sat(guard, start + l + 1)),
                        }
                    }
                }
            }
            RInterval::And(a, b) => self.interval(a, start, end) && self.interval(b, start, end),
            RInterval::Or(a, b) => self.interval(a, start, end) || self.interval(b, start, end),
        };
        self.memo.insert(k, v);
        v
    }

    fn gseg(&mut self, id: u32, start: usize, end: usize) -> bool {
        let k = key(TAG_GSEG, id, start, end);
        if let Some(v) = self.memo.get(&k) {
            return *v;
        }
        let len = end - start;
        let v = match self.rt.guardeds[id as usize].clone() {
            RGuarded::Interval(psi) => self.interval(psi, start, end),
            RGuarded::GuardUntil { guard, body } => {
                match (0..len).rev().find(|j| self.gseg(body, start + j, end)) {
                    None => false,
                    Some(j) => (0..j).all(|k| self.step_sat(guard, start + k + 1)),
                }
            }
            RGuarded::GuardAfter { body, guard } => {
                match (1..=len).find(|r| self.gseg(body, start, start + r)) {
                    None => false,
                    Some(r) => (r..len).all(|k| self.step_sat(guard, start + k + 1)),
                }
            }
        };
        self.memo.insert(k, v);
        v
    }

    /// Every step from `from+1` on: the remaining stem plus one full loop.
    fn guard_forever(&self, guard: u32, from: usize) -> bool {
        let l = self.stem_len();
        let m = self.cycle_len();
        (from + 1..=l).all(|p| self.step_sat(guard, p))
            && (l + 1..=l + m).all(|p| self.step_sat(guard, p))
    }

    /// Whole-trace satisfaction of a simple formula on the suffix from
    /// `from`: negation resolves at the trace level, the rest by bounded
    /// prefix search.
    fn simple_trace(&mut self, id: u32, from: usize) -> bool {
        match self.rt.simples[id as usize].clone() {
            RSimple::Not(a) => !self.simple_trace(a, from),
            _ => {
                let hi = self.bound(from);
                (from + 1..=hi).any(|end| self.simple(id, from, end))
            }
        }
    }

    fn gtrace(&mut self, id: u32, from: usize) -> bool {
        let k = key(TAG_GTRACE, id, from, 0);
        if let Some(v) = self.memo.get(&k) {
            return *v;
        }
        let l = self.stem_len();
        let m = self.cycle_len();
        let v = match self.rt.guardeds[id as usize].clone() {
            RGuarded::Interval(psi) => match self.rt.intervals[psi as usize] {
                RInterval::Simple(s) => self.simple_trace(s, from),
                _ => {
                    let hi = self.bound(from);
                    if !self.rt.sensitive[psi as usize] {
                        // Monotone in the window size.
                        self.interval(psi, from, hi)
                    } else {
                        let lo = self.min_embed_end(psi, from).unwrap_or(hi + 1);
                        (lo.max(from + 1)..=hi).any(|end| self.interval(psi, from, end))
                    }
                }
            },
            RGuarded::GuardUntil { guard, body } => {
                // Suffixes are periodic from the stem end on; a body
                // satisfiable inside the loop region is satisfiable from
                // arbitrarily late starts, putting every step under guard.
                let r_hi = from.max(l) + m;
                let sats: Vec<usize> =
                    (from..=r_hi).filter(|r| self.gtrace(body, *r)).collect();
                match sats.last() {
                    None => false,
                    Some(&rho) if rho >= l => self.guard_forever(guard, from),
                    Some(&rho) => (from..rho).all(|k| self.step_sat(guard, k + 1)),
                }
            }
            RGuarded::GuardAfter { body, guard } => {
                let hi = self.bound(from);
                let lo = match self.rt.guardeds[body as usize] {
                    RGuarded::Interval(psi) => self.min_embed_end(psi, from).unwrap_or(hi + 1),
                    _ => from + 1,
                };
                match (lo.max(from + 1)..=hi).find(|r| self.gseg(body, from, *r)) {
                    None => false,
                    Some(rho) => self.guard_forever(guard, rho),
                }
            }
        };
        self.memo.insert(k, v);
        v
    }

    /// Earliest window end after `from` into which the node's positive
    /// events embed; satisfaction below it is impossible.
    fn min_embed_end(&self, id: u32, from: usize) -> Option<usize> {
        let events = self.rt.positives[id as usize].as_ref()?;
        let mut at = from;
        for ev in events {
            let a = (*ev)?;
            let positions = &self.occ[a.0 as usize];
            let i = positions.partition_point(|p| *p as usize <= at);
            at = *positions.get(i)? as usize;
        }
        Some(at.max(from + 1))
    }

    /// Smallest cycle unfolding count satisfying the cycle part, if any.
    fn cycle_witness(&mut self) -> Option<usize> {
        let l = self.stem_len();
        let m = self.cycle_len();
        let cycle = self.rt.cycle;
        (1..=self.budget.cycle_unfolds).find(|j| self.interval(cycle, l, l + j * m))
    }

    fn cycle_sat(&mut self) -> bool {
        let l = self.stem_len();
        let m = self.cycle_len();
        let cycle = self.rt.cycle;
        if !self.rt.sensitive[cycle as usize] {
            self.interval(cycle, l, l + self.budget.cycle_unfolds * m)
        } else {
            self.cycle_witness().is_some()
        }
    }
}

// ---------------------------------------------------------------------------
// Necessary-condition prechecks by direct word comparison.

/// A single positive event plus the banned events of a conjunction of
/// literals, when the formula has that shape.
fn literal_shape(s: &SimpleEol) -> Option<(Option<String>, Vec<String>)> {
    fn walk(s: &SimpleEol, pos: &mut Vec<String>, neg: &mut Vec<String>) -> bool {
        match s {
            SimpleEol::Top => true,
            SimpleEol::Event(e) => {
                pos.push(e.clone());
                true
            }
            SimpleEol::Not(inner) => match inner.as_ref() {
                SimpleEol::Event(e) => {
                    neg.push(e.clone());
                    true
                }
                _ => false,
            },
            SimpleEol::And(a, b) => walk(a, pos, neg) && walk(b, pos, neg),
            SimpleEol::Or(_, _) => false,
        }
    }
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    if !walk(s, &mut pos, &mut neg) || pos.len() > 1 {
        return None;
    }
    Some((pos.pop(), neg))
}

fn bans_everything_else(
    ts: &TransitionSystem,
    positive: &Option<String>,
    banned: &[String],
) -> bool {
    (0..ts.action_count() as u32).all(|i| {
        let name = ts.action_name(ActionId(i));
        Some(name) == positive.as_deref() || banned.iter().any(|b| b == name)
    })
}

/// Runs of chain elements joined by fully banning gaps, in order, plus
/// whether the first element pins the window start. The walk stops at the
/// first element that is not a conjunction of literals; the prefix kept is
/// still a necessary condition.
fn rigid_blocks(ts: &TransitionSystem, psi: &IComplexEol) -> (bool, Vec<Vec<String>>) {
    let mut elems: Vec<&SimpleEol> = Vec::new();
    let mut gaps: Vec<Option<&SimpleEol>> = Vec::new();
    let mut cur = psi;
    loop {
        match cur {
            IComplexEol::Simple(s) => {
                elems.push(s);
                break;
            }
            IComplexEol::Ordered(a, b) => {
                let IComplexEol::Simple(sa) = a.as_ref() else {
                    return (false, Vec::new());
                };
                elems.push(sa);
                gaps.push(None);
                cur = b;
            }
            IComplexEol::Between { first, guard, second } => {
                let IComplexEol::Simple(sa) = first.as_ref() else {
                    return (false, Vec::new());
                };
                elems.push(sa);
                gaps.push(Some(guard));
                cur = second;
            }
            _ => return (false, Vec::new()),
        }
    }
    let mut anchored = false;
    let mut blocks: Vec<Vec<String>> = Vec::new();
    let mut current: Vec<String> = Vec::new();
    for (i, elem) in elems.iter().enumerate() {
        match literal_shape(elem) {
            Some((Some(e), bans)) => {
                if i == 0 {
                    anchored = bans_everything_else(ts, &Some(e.clone()), &bans);
                }
                current.push(e);
            }
            _ => break,
        }
        let full_gap = match gaps.get(i) {
            Some(Some(gap)) => matches!(
                literal_shape(gap),
                Some((None, ref bans)) if bans_everything_else(ts, &None, bans)
            ),
            _ => false,
        };
        if i < gaps.len() && !full_gap {
            blocks.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        blocks.push(current);
    }
    (anchored, blocks)
}

fn head_rigid_blocks(ts: &TransitionSystem, theta: &GComplexEol) -> (bool, Vec<Vec<String>>) {
    match theta {
        GComplexEol::Interval(psi) => rigid_blocks(ts, psi),
        GComplexEol::GuardUntil { body, .. } => head_rigid_blocks(ts, body),
        GComplexEol::GuardAfter { body, .. } => head_rigid_blocks(ts, body),
    }
}

struct Prechecks {
    head_anchor: bool,
    head_blocks: Vec<Vec<Option<ActionId>>>,
    cycle_anchor: bool,
    cycle_blocks: Vec<Vec<Option<ActionId>>>,
    head_positives: Option<Vec<Option<ActionId>>>,
    cycle_positives: Option<Vec<Option<ActionId>>>,
    head_events: usize,
    cycle_events: usize,
}

impl Prechecks {
    fn build(ts: &TransitionSystem, xi: &InfiniteEol) -> Prechecks {
        let resolve = |blocks: Vec<Vec<String>>| -> Vec<Vec<Option<ActionId>>> {
            blocks
                .into_iter()
                .map(|b| b.into_iter().map(|n| ts.action_id(&n)).collect())
                .collect()
        };
        let (head_anchor, head_blocks) = head_rigid_blocks(ts, &xi.head);
        let (cycle_anchor, cycle_blocks) = rigid_blocks(ts, &xi.cycle);
        let mut head_events = Vec::new();
        let head_positives = xi
            .head
            .ordered_positives(&mut head_events)
            .then(|| head_events.iter().map(|n| ts.action_id(n)).collect());
        let mut cycle_events = Vec::new();
        let cycle_positives = xi
            .cycle
            .ordered_positives(&mut cycle_events)
            .then(|| cycle_events.iter().map(|n| ts.action_id(n)).collect());
        let mut evs = Vec::new();
        xi.head.positive_events(&mut evs);
        let head_events = evs.len();
        evs.clear();
        xi.cycle.positive_events(&mut evs);
        let cycle_events = evs.len();
        Prechecks {
            head_anchor,
            head_blocks: resolve(head_blocks),
            cycle_anchor,
            cycle_blocks: resolve(cycle_blocks),
            head_positives,
            cycle_positives,
            head_events,
            cycle_events,
        }
    }

    fn pass(&self, lasso: &LassoExecution, budget: UnfoldBudget) -> bool {
        let l = lasso.stem_len();
        let m = lasso.cycle_len();
        let budget = effective_budget(budget, self.head_events, self.cycle_events, m);
        let head_hi = l + budget.head_unfolds * m;
        let cycle_hi = l + budget.cycle_unfolds * m;
        embed_blocks(lasso, self.head_anchor, &self.head_blocks, 0, head_hi)
            && embed_blocks(lasso, self.cycle_anchor, &self.cycle_blocks, l, cycle_hi)
            && self
                .head_positives
                .as_ref()
                .is_none_or(|evs| embed_ordered(lasso, evs, 0, head_hi))
            && self
                .cycle_positives
                .as_ref()
                .is_none_or(|evs| embed_ordered(lasso, evs, l, cycle_hi))
    }
}

fn embed_ordered(
    lasso: &LassoExecution,
    events: &[Option<ActionId>],
    from: usize,
    to: usize,
) -> bool {
    let mut at = from;
    for ev in events {
        let Some(id) = ev else { return false };
        match (at + 1..=to).find(|p| lasso.action_into(*p) == *id) {
            Some(p) => at = p,
            None => return false,
        }
    }
    true
}

fn embed_blocks(
    lasso: &LassoExecution,
    anchored: bool,
    blocks: &[Vec<Option<ActionId>>],
    from: usize,
    to: usize,
) -> bool {
    let mut pos = from;
    for (bi, block) in blocks.iter().enumerate() {
        if block.is_empty() {
            continue;
        }
        if block.iter().any(|id| id.is_none()) {
            return false;
        }
        let matches_at = |p: usize| -> bool {
            block
                .iter()
                .enumerate()
                .all(|(i, id)| lasso.action_into(p + i) == id.unwrap())
        };
        if bi == 0 && anchored {
            if pos + block.len() > to || !matches_at(pos + 1) {
                return false;
            }
            pos += block.len();
        } else {
            let last_start = (to + 1).saturating_sub(block.len());
            match (pos + 1..=last_start).find(|p| matches_at(*p)) {
                Some(p) => pos = p + block.len() - 1,
                None => return false,
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Public surface.

fn require_budget(xi: &InfiniteEol, budget: UnfoldBudget) -> Result<UnfoldBudget, Error> {
    let need = UnfoldBudget::default_for(xi);
    if budget.head_unfolds < need.head_unfolds || budget.cycle_unfolds < need.cycle_unfolds {
        return Err(Error::BudgetTooSmall {
            need_head: need.head_unfolds,
            need_cycle: need.cycle_unfolds,
            have_head: budget.head_unfolds,
            have_cycle: budget.cycle_unfolds,
        });
    }
    Ok(budget)
}

/// A formula resolved and precompiled for checking against many traces.
pub struct CompiledEol {
    budget: UnfoldBudget,
    prechecks: Prechecks,
    rt: Resolved,
}

impl CompiledEol {
    pub fn new(ts: &TransitionSystem, xi: &InfiniteEol) -> CompiledEol {
        CompiledEol {
            budget: UnfoldBudget::default_for(xi),
            prechecks: Prechecks::build(ts, xi),
            rt: Resolved::build(ts, xi),
        }
    }

    pub fn with_budget(mut self, budget: UnfoldBudget) -> CompiledEol {
        self.budget = budget;
        self
    }

    pub fn eval(&self, ts: &TransitionSystem, lasso: &LassoExecution) -> bool {
        if !self.prechecks.pass(lasso, self.budget) {
            return false;
        }
        let mut ev = Fast::new(ts, lasso, &self.rt, self.budget);
        // The cycle check is a handful of segment evaluations; the head
        // search is the expensive part, so it runs last.
        ev.cycle_sat() && ev.gtrace(self.rt.head, 0)
    }
}

/// Satisfaction of an infinite formula on a lasso, using the formula's
/// default budget when none is given.
pub fn eval_infinite(
    ts: &TransitionSystem,
    lasso: &LassoExecution,
    xi: &InfiniteEol,
    budget: Option<UnfoldBudget>,
) -> Result<bool, Error> {
    let budget = match budget {
        Some(b) => require_budget(xi, b)?,
        None => UnfoldBudget::default_for(xi),
    };
    Ok(CompiledEol::new(ts, xi).with_budget(budget).eval(ts, lasso))
}

/// Like [`eval_infinite`], also reporting how the satisfaction was witnessed.
pub fn eval_infinite_witness(
    ts: &TransitionSystem,
    lasso: &LassoExecution,
    xi: &InfiniteEol,
    budget: Option<UnfoldBudget>,
) -> Result<Option<EolWitness>, Error> {
    let budget = match budget {
        Some(b) => require_budget(xi, b)?,
        None => UnfoldBudget::default_for(xi),
    };
    if !Prechecks::build(ts, xi).pass(lasso, budget) {
        return Ok(None);
    }
    let rt = Resolved::build(ts, xi);
    let mut ev = Fast::new(ts, lasso, &rt, budget);
    if !ev.gtrace(rt.head, 0) {
        return Ok(None);
    }
    let Some(cycle_unfolds) = ev.cycle_witness() else {
        return Ok(None);
    };
    let hi = ev.bound(0);
    let head_len = (0..=hi)
        .find(|i| ev.gseg(rt.head, 0, *i))
        .unwrap_or(lasso.stem_len());
    let l = lasso.stem_len();
    let m = lasso.cycle_len();
    let head_unfolds = if head_len <= l {
        0
    } else {
        (head_len - l).div_ceil(m)
    };
    Ok(Some(EolWitness {
        head_len,
        head_unfolds,
        cycle_unfolds,
    }))
}

/// Satisfaction of a guarded (omega-free) formula over the whole execution.
pub fn eval_gcomplex_trace(
    ts: &TransitionSystem,
    lasso: &LassoExecution,
    theta: &GComplexEol,
    extra_unfolds: usize,
) -> bool {
    let xi = InfiniteEol::new(theta.clone(), IComplexEol::top());
    let budget = UnfoldBudget {
        head_unfolds: extra_unfolds.max(1),
        cycle_unfolds: 1,
    };
    let rt = Resolved::build(ts, &xi);
    let mut ev = Fast::new(ts, lasso, &rt, budget);
    let head = rt.head;
    ev.gtrace(head, 0)
}

fn segment_budget() -> UnfoldBudget {
    UnfoldBudget {
        head_unfolds: 1,
        cycle_unfolds: 1,
    }
}

/// Segment satisfaction of a simple formula.
pub fn eval_simple_segment(ts: &TransitionSystem, seg: Segment<'_>, s: &SimpleEol) -> bool {
    let xi = InfiniteEol::new(
        GComplexEol::Interval(IComplexEol::Simple(s.clone())),
        IComplexEol::top(),
    );
    let rt = Resolved::build(ts, &xi);
    let ev = Fast::new(ts, seg.lasso, &rt, segment_budget());
    match rt.guardeds[rt.head as usize] {
        RGuarded::Interval(psi) => match rt.intervals[psi as usize] {
            RInterval::Simple(sid) => ev.simple(sid, seg.start, seg.end),
            _ => unreachable!(),
        },
        _ => unreachable!(),
    }
}

/// Segment satisfaction of an interval formula.
pub fn eval_icomplex_segment(ts: &TransitionSystem, seg: Segment<'_>, psi: &IComplexEol) -> bool {
    let xi = InfiniteEol::new(GComplexEol::Interval(psi.clone()), IComplexEol::top());
    let rt = Resolved::build(ts, &xi);
    let mut ev = Fast::new(ts, seg.lasso, &rt, segment_budget());
    match rt.guardeds[rt.head as usize] {
        RGuarded::Interval(id) => ev.interval(id, seg.start, seg.end),
        _ => unreachable!(),
    }
}

/// Segment satisfaction of a guarded formula.
pub fn eval_gcomplex_segment(
    ts: &TransitionSystem,
    seg: Segment<'_>,
    theta: &GComplexEol,
) -> bool {
    let xi = InfiniteEol::new(theta.clone(), IComplexEol::top());
    let rt = Resolved::build(ts, &xi);
    let mut ev = Fast::new(ts, seg.lasso, &rt, segment_budget());
    let head = rt.head;
    ev.gseg(head, seg.start, seg.end)
}

/// The trace formula: stem actions as an ordered chain over the head, loop
/// actions as an ordered chain over the cycle.
pub fn formula_of_trace(ts: &TransitionSystem, lasso: &LassoExecution) -> InfiniteEol {
    let stem_events: Vec<IComplexEol> = lasso
        .stem()
        .iter()
        .map(|s| IComplexEol::simple(SimpleEol::event(ts.action_name(s.action))))
        .collect();
    let cycle_events: Vec<IComplexEol> = lasso
        .cycle()
        .iter()
        .map(|s| IComplexEol::simple(SimpleEol::event(ts.action_name(s.action))))
        .collect();
    InfiniteEol::new(
        GComplexEol::Interval(chain(stem_events)),
        chain(cycle_events),
    )
}

/// Right-nested ordered conjunction of `elems`; `T` when empty.
pub fn chain(elems: Vec<IComplexEol>) -> IComplexEol {
    let mut iter = elems.into_iter().rev();
    match iter.next() {
        None => IComplexEol::top(),
        Some(last) => iter.fold(last, |acc, e| IComplexEol::ordered(e, acc)),
    }
}

/// Model-relative subset relation: within `universe`, every trace satisfying
/// `xi2` also satisfies `xi1`. When it holds, `xi1` is the more general
/// formula.
pub fn subset_rel(
    ts: &TransitionSystem,
    universe: &crate::search::TraceUniverse,
    xi1: &InfiniteEol,
    xi2: &InfiniteEol,
) -> Result<bool, Error> {
    let c1 = CompiledEol::new(ts, xi1);
    let c2 = CompiledEol::new(ts, xi2);
    for sigma in universe.all() {
        if c2.eval(ts, sigma) && !c1.eval(ts, sigma) {
            return Ok(false);
        }
    }
    Ok(true)
}
