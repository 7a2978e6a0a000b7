//! The causality pipeline: actual-cause conditions, non-occurrence
//! refinement, generalization to minimal causes, the order condition, and
//! causality-class assembly.
//!
//! For every bad trace the pipeline starts from the trace's own event
//! formula, strengthens it with non-occurrence guards until no good trace
//! satisfies it, then weakens it step by step as long as the cause
//! conditions keep holding. Certified formulae define causality classes;
//! class members are always bad traces.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::eol::{
    formula_of_trace, subset_rel, CompiledEol, GComplexEol, IComplexEol, InfiniteEol, SimpleEol,
};
use crate::error::Error;
use crate::ltl::LtlFormula;
use crate::model::{LassoExecution, TransitionSystem};
use crate::search::{partition, TraceUniverse};

/// Event variables of `universe` occurring anywhere in the execution.
pub fn valuation(
    ts: &TransitionSystem,
    sigma: &LassoExecution,
    universe: &BTreeSet<String>,
) -> BTreeSet<String> {
    sigma
        .occurring_actions()
        .iter()
        .map(|a| ts.action_name(*a).to_string())
        .filter(|name| universe.contains(name))
        .collect()
}

/// Outcome of the actual-cause conditions for one formula over one trace
/// universe. Witness fields index into the universe's bad/good vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct AcReport {
    pub ac1: bool,
    pub ac1_witness: Option<usize>,
    pub ac21: bool,
    pub ac21_witness: Option<usize>,
    pub ac22: bool,
    pub ac22_counterwitness: Option<usize>,
    pub ac3: bool,
    pub ac3_smaller: Option<InfiniteEol>,
    pub oc: bool,
}

impl AcReport {
    pub fn all_cause_conditions(&self) -> bool {
        self.ac1 && self.ac21 && self.ac22 && self.ac3
    }
}

/// A certified cause with the bad traces it generalizes.
#[derive(Debug, Clone)]
pub struct CausalityClass {
    pub cause: InfiniteEol,
    /// Present when the order condition failed on the refined formula and
    /// the emitted cause is the unordered variant; holds the ordered form.
    pub ordered_cause: Option<InfiniteEol>,
    /// Order condition of the emitted cause.
    pub oc: bool,
    /// Indices into the universe's bad vector, ascending.
    pub members: Vec<usize>,
    pub report: AcReport,
    /// Set when another class has the same member set under a different
    /// formula.
    pub overlapping: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PipelineStats {
    pub lassos: usize,
    pub bad: usize,
    pub good: usize,
    pub refinements: usize,
    pub generalizations: usize,
    /// Seeds that needed the exact-word fallback before sufficiency held.
    pub escalations: usize,
}

#[derive(Debug, Clone)]
pub struct CausalityAnalysis {
    pub classes: Vec<CausalityClass>,
    pub stats: PipelineStats,
    /// Every distinct formula the pipeline evaluated, by printed form.
    pub touched: BTreeMap<String, InfiniteEol>,
}

// ---------------------------------------------------------------------------
// Chain views: the pipeline edits ordered chains with per-gap guards.

#[derive(Debug, Clone, Default, PartialEq)]
struct ChainView {
    elems: Vec<SimpleEol>,
    /// One entry per gap between consecutive elements.
    gaps: Vec<Option<SimpleEol>>,
}

impl ChainView {
    fn to_formula(&self) -> IComplexEol {
        if self.elems.is_empty() {
            return IComplexEol::top();
        }
        let mut acc = IComplexEol::Simple(self.elems.last().unwrap().clone());
        for i in (0..self.elems.len() - 1).rev() {
            let lhs = IComplexEol::Simple(self.elems[i].clone());
            acc = match &self.gaps[i] {
                None => IComplexEol::ordered(lhs, acc),
                Some(g) => IComplexEol::between(lhs, g.clone(), acc),
            };
        }
        acc
    }

    /// Removes element `i`, merging its adjacent gap guards; guards falling
    /// off either end are dropped.
    fn without_elem(&self, i: usize) -> ChainView {
        let mut elems = self.elems.clone();
        let mut gaps = self.gaps.clone();
        elems.remove(i);
        if !gaps.is_empty() {
            if i == 0 {
                gaps.remove(0);
            } else if i == self.elems.len() - 1 {
                gaps.remove(i - 1);
            } else {
                let merged = match (gaps[i - 1].clone(), gaps[i].clone()) {
                    (None, g) | (g, None) => g,
                    (Some(a), Some(b)) if a == b => Some(a),
                    (Some(a), Some(b)) => Some(SimpleEol::and(a, b)),
                };
                gaps[i - 1] = merged;
                gaps.remove(i);
            }
        }
        ChainView { elems, gaps }
    }
}

fn chain_view(psi: &IComplexEol) -> Option<ChainView> {
    fn walk(psi: &IComplexEol, out: &mut ChainView) -> bool {
        match psi {
            IComplexEol::Simple(s) => {
                out.elems.push(s.clone());
                true
            }
            IComplexEol::Ordered(a, b) => {
                let IComplexEol::Simple(sa) = a.as_ref() else {
                    return false;
                };
                out.elems.push(sa.clone());
                out.gaps.push(None);
                walk(b, out)
            }
            IComplexEol::Between { first, guard, second } => {
                let IComplexEol::Simple(sa) = first.as_ref() else {
                    return false;
                };
                out.elems.push(sa.clone());
                out.gaps.push(Some(guard.clone()));
                walk(second, out)
            }
            _ => false,
        }
    }
    if *psi == IComplexEol::top() {
        return Some(ChainView::default());
    }
    let mut out = ChainView::default();
    if walk(psi, &mut out) {
        Some(out)
    } else {
        None
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
struct HeadView {
    /// Until-guards, outermost first.
    pre: Vec<SimpleEol>,
    core: ChainView,
    /// After-guards, outermost first.
    post: Vec<SimpleEol>,
}

impl HeadView {
    fn to_formula(&self) -> GComplexEol {
        let mut theta = GComplexEol::Interval(self.core.to_formula());
        for g in self.post.iter().rev() {
            theta = GComplexEol::guard_after(theta, g.clone());
        }
        for g in self.pre.iter().rev() {
            theta = GComplexEol::guard_until(g.clone(), theta);
        }
        theta
    }
}

fn head_view(theta: &GComplexEol) -> Option<HeadView> {
    let mut pre = Vec::new();
    let mut post = Vec::new();
    let mut cur = theta;
    loop {
        match cur {
            GComplexEol::GuardUntil { guard, body } => {
                pre.push(guard.clone());
                cur = body;
            }
            GComplexEol::GuardAfter { body, guard } => {
                post.push(guard.clone());
                cur = body;
            }
            GComplexEol::Interval(psi) => {
                return chain_view(psi).map(|core| HeadView { pre, core, post });
            }
        }
    }
}

/// First positive event of a chain element, used as its match anchor.
fn primary_event(s: &SimpleEol) -> Option<String> {
    let mut out = Vec::new();
    s.positive_events(&mut out);
    out.into_iter().next()
}

// ---------------------------------------------------------------------------
// Satisfaction caching across the pipeline.

struct Pipeline<'a> {
    ts: &'a TransitionSystem,
    universe: &'a TraceUniverse,
    /// Interned formulas: compiled form plus lazily filled satisfaction
    /// over all traces, keyed from printed text once.
    rows: Vec<(CompiledEol, Box<[Option<bool>]>)>,
    index: HashMap<String, usize>,
    touched: BTreeMap<String, InfiniteEol>,
    /// Raises every formula's unfold budget to at least this many unfoldings.
    budget_floor: Option<usize>,
}

impl<'a> Pipeline<'a> {
    fn new(ts: &'a TransitionSystem, universe: &'a TraceUniverse) -> Self {
        Pipeline {
            ts,
            universe,
            rows: Vec::new(),
            index: HashMap::new(),
            touched: BTreeMap::new(),
            budget_floor: None,
        }
    }

    fn trace(&self, idx: usize) -> &'a LassoExecution {
        if idx < self.universe.bad.len() {
            &self.universe.bad[idx]
        } else {
            &self.universe.good[idx - self.universe.bad.len()]
        }
    }

    fn good_index(&self, i: usize) -> usize {
        self.universe.bad.len() + i
    }

    /// Interns the formula, compiling it on first sight.
    fn formula_id(&mut self, xi: &InfiniteEol) -> usize {
        let key = xi.to_string();
        if let Some(id) = self.index.get(&key) {
            return *id;
        }
        self.touched.insert(key.clone(), xi.clone());
        let mut compiled = CompiledEol::new(self.ts, xi);
        if let Some(floor) = self.budget_floor {
            compiled =
                compiled.with_budget(crate::eol::UnfoldBudget::default_for(xi).raised_to(floor));
        }
        let id = self.rows.len();
        self.rows
            .push((compiled, vec![None; self.universe.len()].into_boxed_slice()));
        self.index.insert(key, id);
        id
    }

    fn sat(&mut self, fid: usize, idx: usize) -> Result<bool, Error> {
        let (compiled, row) = &mut self.rows[fid];
        if let Some(v) = row[idx] {
            return Ok(v);
        }
        let trace = if idx < self.universe.bad.len() {
            &self.universe.bad[idx]
        } else {
            &self.universe.good[idx - self.universe.bad.len()]
        };
        let v = compiled.eval(self.ts, trace);
        row[idx] = Some(v);
        Ok(v)
    }

    fn first_bad_satisfier(&mut self, fid: usize) -> Result<Option<usize>, Error> {
        for i in 0..self.universe.bad.len() {
            if self.sat(fid, i)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn first_good_nonsatisfier(&mut self, fid: usize) -> Result<Option<usize>, Error> {
        for i in 0..self.universe.good.len() {
            let idx = self.good_index(i);
            if !self.sat(fid, idx)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    fn first_good_satisfier(&mut self, fid: usize) -> Result<Option<usize>, Error> {
        for i in 0..self.universe.good.len() {
            let idx = self.good_index(i);
            if self.sat(fid, idx)? {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Existence, necessity and sufficiency in one sweep. When a known bad
    /// satisfier is passed, existence costs a single evaluation; sufficiency
    /// is checked next because it rejects candidates earliest.
    fn passes_ac12_seeded(&mut self, fid: usize, seed: Option<usize>) -> Result<bool, Error> {
        let existence = match seed {
            Some(idx) => self.sat(fid, idx)?,
            None => self.first_bad_satisfier(fid)?.is_some(),
        };
        Ok(existence
            && self.first_good_satisfier(fid)?.is_none()
            && self.first_good_nonsatisfier(fid)?.is_some())
    }

    fn subset_within(&mut self, fid1: usize, fid2: usize) -> Result<bool, Error> {
        for idx in 0..self.universe.len() {
            if self.sat(fid2, idx)? && !self.sat(fid1, idx)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

// ---------------------------------------------------------------------------
// Non-occurrence of events.

fn action_names(ts: &TransitionSystem, sigma: &LassoExecution) -> BTreeSet<String> {
    sigma
        .occurring_actions()
        .iter()
        .map(|a| ts.action_name(*a).to_string())
        .collect()
}

/// The smallest set of events whose absence from `sigma_bad` is causal: a
/// minimum-cardinality hitting set of the foreign events of every good trace
/// satisfying the trace formula of `sigma_bad`. Good satisfiers using only
/// events of the bad trace differ in order alone and fall outside this
/// condition. Ties break lexicographically.
pub fn non_occurrence_set(
    ts: &TransitionSystem,
    universe: &TraceUniverse,
    sigma_bad: &LassoExecution,
) -> Result<BTreeSet<String>, Error> {
    let xi = formula_of_trace(ts, sigma_bad);
    let mut pipe = Pipeline::new(ts, universe);
    let fid = pipe.formula_id(&xi);
    if pipe.first_bad_satisfier(fid)?.is_none() {
        return Err(Error::PreconditionViolated(
            "the trace formula has no bad satisfier".into(),
        ));
    }
    if pipe.first_good_nonsatisfier(fid)?.is_none() {
        return Err(Error::PreconditionViolated(
            "every good trace satisfies the trace formula".into(),
        ));
    }
    let z = action_names(ts, sigma_bad);
    let all: BTreeSet<String> = ts.action_names_sorted().into_iter().collect();
    let w: Vec<String> = all.difference(&z).cloned().collect();

    let mut offending: Vec<BTreeSet<String>> = Vec::new();
    for i in 0..universe.good.len() {
        let idx = pipe.good_index(i);
        if pipe.sat(fid, idx)? {
            let extras: BTreeSet<String> = action_names(ts, pipe.trace(idx))
                .difference(&z)
                .cloned()
                .collect();
            if !extras.is_empty() {
                offending.push(extras);
            }
        }
    }
    if offending.is_empty() {
        return Ok(BTreeSet::new());
    }

    // Minimum hitting set; subsets enumerated by size, then lexicographically.
    for size in 1..=w.len() {
        let mut best: Option<BTreeSet<String>> = None;
        subsets_of_size(&w, size, &mut |candidate| {
            if best.is_none()
                && offending
                    .iter()
                    .all(|ext| ext.iter().any(|e| candidate.iter().any(|c| *c == e)))
            {
                best = Some(candidate.iter().map(|c| (*c).clone()).collect());
            }
        });
        if let Some(q) = best {
            return Ok(q);
        }
    }
    Err(Error::CannotSeparate(
        "no event subset hits every offending trace".into(),
    ))
}

fn subsets_of_size<'a>(items: &'a [String], size: usize, visit: &mut dyn FnMut(&[&'a String])) {
    fn rec<'a>(
        items: &'a [String],
        size: usize,
        start: usize,
        acc: &mut Vec<&'a String>,
        visit: &mut dyn FnMut(&[&'a String]),
    ) {
        if acc.len() == size {
            visit(acc);
            return;
        }
        for i in start..items.len() {
            acc.push(&items[i]);
            rec(items, size, i + 1, acc, visit);
            acc.pop();
        }
    }
    let mut acc = Vec::new();
    rec(items, size, 0, &mut acc, visit);
}

// ---------------------------------------------------------------------------
// Refinement: prohibit foreign events at the slots where they occur.

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Slot {
    HeadBefore,
    HeadGap(usize),
    HeadAfter,
    CycleGap(usize),
    CycleWrap,
}

/// Greedy leftmost embedding of chain elements into the unrolled word,
/// starting after `from`, scanning at most `limit` positions.
fn match_positions(
    ts: &TransitionSystem,
    sigma: &LassoExecution,
    elems: &[SimpleEol],
    from: usize,
    limit: usize,
) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(elems.len());
    let mut at = from;
    for elem in elems {
        let name = primary_event(elem)?;
        let id = ts.action_id(&name)?;
        let p = (at + 1..=limit).find(|p| sigma.action_into(*p) == id)?;
        out.push(p);
        at = p;
    }
    Some(out)
}

/// Strengthens `xi` so that `sigma_good` no longer satisfies it, by
/// prohibiting events the bad trace never performs at the slots — relative
/// to the ordered events of `xi` — where the good trace performs them.
pub fn refine_with_negations(
    ts: &TransitionSystem,
    xi: &InfiniteEol,
    sigma_bad: &LassoExecution,
    sigma_good: &LassoExecution,
) -> Result<InfiniteEol, Error> {
    let q_set: BTreeSet<String> = action_names(ts, sigma_good)
        .difference(&action_names(ts, sigma_bad))
        .cloned()
        .collect();
    if q_set.is_empty() {
        return Err(Error::CannotSeparate(
            "the good trace performs no event the bad trace lacks".into(),
        ));
    }
    refine_with_banned(ts, xi, sigma_good, &q_set, &BTreeSet::new())
}

/// Like [`refine_with_negations`] with events of the bad trace admitted as
/// guard material: such events may only guard gaps between witnesses, where
/// the bad trace (whose witnesses are adjacent before generalization) is
/// unaffected; open-ended slots would contradict its own occurrences.
fn refine_against(
    ts: &TransitionSystem,
    xi: &InfiniteEol,
    sigma_bad: &LassoExecution,
    sigma_good: &LassoExecution,
) -> Result<InfiniteEol, Error> {
    let banned = action_names(ts, sigma_good);
    let bad_actions = action_names(ts, sigma_bad);
    refine_with_banned(ts, xi, sigma_good, &banned, &bad_actions)
}

fn refine_with_banned(
    ts: &TransitionSystem,
    xi: &InfiniteEol,
    sigma_good: &LassoExecution,
    banned: &BTreeSet<String>,
    gap_only: &BTreeSet<String>,
) -> Result<InfiniteEol, Error> {
    let mut head = head_view(&xi.head)
        .ok_or_else(|| Error::PreconditionViolated("the head is not an ordered chain".into()))?;
    let mut cycle = chain_view(&xi.cycle)
        .ok_or_else(|| Error::PreconditionViolated("the cycle is not an ordered chain".into()))?;

    let l = sigma_good.stem_len();
    let m = sigma_good.cycle_len();
    let scan_limit = l + (head.core.elems.len() + cycle.elems.len() + 2) * m;

    let head_pos = match_positions(ts, sigma_good, &head.core.elems, 0, scan_limit)
        .ok_or_else(|| Error::CannotSeparate("head events do not embed".into()))?;
    let head_end = head_pos.last().copied().unwrap_or(0);
    let cycle_from = head_end.max(l);
    let cycle_pos = match_positions(ts, sigma_good, &cycle.elems, cycle_from, scan_limit)
        .ok_or_else(|| Error::CannotSeparate("cycle events do not embed".into()))?;

    // The wrap gap runs from the last match up to the first match's phase in
    // the next iteration.
    let (cycle_start, wrap_end) = match (cycle_pos.first(), cycle_pos.last()) {
        (Some(&first), Some(&last)) => {
            let span = last + 1 - first;
            (first, first + m * span.div_ceil(m))
        }
        _ => {
            let first = cycle_from + 1;
            (first, first + m)
        }
    };

    let mut placements: BTreeMap<Slot, BTreeSet<String>> = BTreeMap::new();
    for p in 1..=wrap_end.max(head_end) {
        let name = ts.action_name(sigma_good.action_into(p));
        if !banned.contains(name) {
            continue;
        }
        let slot = if !head_pos.is_empty() && p < head_pos[0] {
            Slot::HeadBefore
        } else if let Some(i) = head_pos.windows(2).position(|w| w[0] < p && p < w[1]) {
            Slot::HeadGap(i)
        } else if p <= head_end {
            continue; // a match position itself; cannot happen for banned events
        } else if p < cycle_start {
            if head_pos.is_empty() {
                Slot::HeadBefore
            } else {
                Slot::HeadAfter
            }
        } else if let Some(i) = cycle_pos.windows(2).position(|w| w[0] < p && p < w[1]) {
            Slot::CycleGap(i)
        } else if cycle_pos.contains(&p) {
            continue;
        } else {
            Slot::CycleWrap
        };
        if gap_only.contains(name)
            && !matches!(slot, Slot::HeadGap(_) | Slot::CycleGap(_))
        {
            continue;
        }
        placements.entry(slot).or_default().insert(name.to_string());
    }
    if placements.is_empty() {
        return Err(Error::CannotSeparate(
            "no prohibited event occurs inside the matched window".into(),
        ));
    }

    for (slot, names) in &placements {
        for name in names {
            let neg = SimpleEol::not(SimpleEol::event(name));
            match slot {
                Slot::HeadBefore => {
                    if !head.pre.contains(&neg) {
                        head.pre.push(neg);
                    }
                }
                Slot::HeadGap(i) => strengthen_gap(&mut head.core.gaps[*i], neg),
                Slot::HeadAfter | Slot::CycleWrap => {
                    if !head.post.contains(&neg) {
                        head.post.push(neg);
                    }
                }
                Slot::CycleGap(i) => strengthen_gap(&mut cycle.gaps[*i], neg),
            }
        }
    }

    Ok(InfiniteEol::new(head.to_formula(), cycle.to_formula()))
}

fn strengthen_gap(gap: &mut Option<SimpleEol>, neg: SimpleEol) {
    match gap {
        None => *gap = Some(neg),
        Some(existing) => {
            if !contains_conjunct(existing, &neg) {
                *existing = SimpleEol::and(existing.clone(), neg);
            }
        }
    }
}

fn contains_conjunct(s: &SimpleEol, needle: &SimpleEol) -> bool {
    if s == needle {
        return true;
    }
    match s {
        SimpleEol::And(a, b) => contains_conjunct(a, needle) || contains_conjunct(b, needle),
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// Exact-word fallback for offenders that differ in order or loop content
// alone.

/// Position of the first step where the two infinite action words differ;
/// `None` when they denote the same word.
fn divergence_point(a: &LassoExecution, b: &LassoExecution) -> Option<usize> {
    fn gcd(x: usize, y: usize) -> usize {
        if y == 0 {
            x
        } else {
            gcd(y, x % y)
        }
    }
    let l = a.stem_len().max(b.stem_len());
    let lcm = a.cycle_len() / gcd(a.cycle_len(), b.cycle_len()) * b.cycle_len();
    (1..=l + lcm).find(|p| a.action_into(*p) != b.action_into(*p))
}

/// Pins the first `pin` steps of the trace exactly — an all-banning anchor on
/// the first element and fully banning gaps — while later events stay an
/// ordinary ordered chain. `pin` may reach into the loop, in which case the
/// head absorbs loop events.
fn pinned_formula(ts: &TransitionSystem, sigma: &LassoExecution, pin: usize) -> InfiniteEol {
    let all: Vec<String> = ts.action_names_sorted();
    let l = sigma.stem_len();
    let m = sigma.cycle_len();
    let pin = pin.min(l + m);
    let head_len = l.max(pin);
    let word: Vec<String> = (1..=head_len)
        .map(|p| ts.action_name(sigma.action_into(p)).to_string())
        .collect();
    let adjacency = SimpleEol::with_banned(SimpleEol::Top, &all);
    let mut head_core = ChainView::default();
    for (i, name) in word.iter().enumerate() {
        let elem = if i == 0 && pin >= 1 {
            let banned: Vec<String> = all.iter().filter(|x| *x != name).cloned().collect();
            SimpleEol::with_banned(SimpleEol::event(name), &banned)
        } else {
            SimpleEol::event(name)
        };
        head_core.elems.push(elem);
        if i + 1 < word.len() {
            head_core
                .gaps
                .push(if i + 1 < pin { Some(adjacency.clone()) } else { None });
        }
    }
    let cycle_word: Vec<String> = sigma
        .cycle()
        .iter()
        .map(|s| ts.action_name(s.action).to_string())
        .collect();
    let mut cycle = ChainView::default();
    for (i, name) in cycle_word.iter().enumerate() {
        cycle.elems.push(SimpleEol::event(name));
        if i + 1 < cycle_word.len() {
            cycle.gaps.push(None);
        }
    }
    let head = HeadView {
        pre: Vec::new(),
        core: head_core,
        post: Vec::new(),
    };
    InfiniteEol::new(head.to_formula(), cycle.to_formula())
}

/// The strongest chain formula of a trace: the first `stem + cycle` steps are
/// pinned exactly, later steps may only use loop actions, and the cycle is
/// pinned to one exact loop iteration.
pub fn exact_word_formula(ts: &TransitionSystem, sigma: &LassoExecution) -> InfiniteEol {
    let all: Vec<String> = ts.action_names_sorted();
    let word: Vec<String> = (1..=sigma.stem_len() + sigma.cycle_len())
        .map(|p| ts.action_name(sigma.action_into(p)).to_string())
        .collect();
    let cycle_word: Vec<String> = sigma
        .cycle()
        .iter()
        .map(|s| ts.action_name(s.action).to_string())
        .collect();
    let cycle_actions: BTreeSet<String> = cycle_word.iter().cloned().collect();

    let anchor = |name: &str| {
        let banned: Vec<String> = all.iter().filter(|x| *x != name).cloned().collect();
        SimpleEol::with_banned(SimpleEol::event(name), &banned)
    };
    let adjacency = SimpleEol::with_banned(SimpleEol::Top, &all);

    let pinned_chain = |names: &[String]| -> ChainView {
        let mut view = ChainView::default();
        for (i, name) in names.iter().enumerate() {
            view.elems.push(if i == 0 {
                anchor(name)
            } else {
                SimpleEol::event(name)
            });
            if i + 1 < names.len() {
                view.gaps.push(Some(adjacency.clone()));
            }
        }
        view
    };

    let after_banned: Vec<String> = all
        .iter()
        .filter(|x| !cycle_actions.contains(*x))
        .cloned()
        .collect();
    let head = HeadView {
        pre: Vec::new(),
        core: pinned_chain(&word),
        post: if after_banned.is_empty() {
            Vec::new()
        } else {
            vec![SimpleEol::with_banned(SimpleEol::Top, &after_banned)]
        },
    };
    InfiniteEol::new(head.to_formula(), pinned_chain(&cycle_word).to_formula())
}

// ---------------------------------------------------------------------------
// Generalization.

/// All one-step weakenings of `xi` the model-relative subset relation
/// confirms as generalizations: deleting one ordered event (splicing its
/// neighbours' guards), deleting one guard, or deleting one negated conjunct
/// of an element or guard.
pub fn generalize_step(
    ts: &TransitionSystem,
    universe: &TraceUniverse,
    xi: &InfiniteEol,
) -> Result<Vec<InfiniteEol>, Error> {
    let mut out = Vec::new();
    for candidate in weakening_candidates(xi, false) {
        if candidate != *xi && subset_rel(ts, universe, &candidate, xi)? {
            out.push(candidate);
        }
    }
    Ok(out)
}

/// Structural weakening candidates in the greedy order: head events left to
/// right, cycle events, then guards, then negated conjuncts. With
/// `with_migrations`, moving one cycle event to the head tail is offered too,
/// which lets loop-recurrence constraints relax into mere occurrence.
fn weakening_candidates(xi: &InfiniteEol, with_migrations: bool) -> Vec<InfiniteEol> {
    let Some(head) = head_view(&xi.head) else {
        return Vec::new();
    };
    let Some(cycle) = chain_view(&xi.cycle) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let rebuild = |h: &HeadView, c: &ChainView| InfiniteEol::new(h.to_formula(), c.to_formula());

    for i in 0..head.core.elems.len() {
        let mut h = head.clone();
        h.core = h.core.without_elem(i);
        out.push(rebuild(&h, &cycle));
    }
    for i in 0..cycle.elems.len() {
        out.push(rebuild(&head, &cycle.without_elem(i)));
    }
    if with_migrations {
        for i in 0..cycle.elems.len() {
            let mut h = head.clone();
            if !h.core.elems.is_empty() {
                h.core.gaps.push(None);
            }
            h.core.elems.push(cycle.elems[i].clone());
            out.push(rebuild(&h, &cycle.without_elem(i)));
        }
    }
    for i in 0..head.pre.len() {
        let mut h = head.clone();
        h.pre.remove(i);
        out.push(rebuild(&h, &cycle));
    }
    for i in 0..head.core.gaps.len() {
        if head.core.gaps[i].is_some() {
            let mut h = head.clone();
            h.core.gaps[i] = None;
            out.push(rebuild(&h, &cycle));
        }
    }
    for i in 0..head.post.len() {
        let mut h = head.clone();
        h.post.remove(i);
        out.push(rebuild(&h, &cycle));
    }
    for i in 0..cycle.gaps.len() {
        if cycle.gaps[i].is_some() {
            let mut c = cycle.clone();
            c.gaps[i] = None;
            out.push(rebuild(&head, &c));
        }
    }
    for i in 0..head.core.elems.len() {
        for weakened in drop_one_negation(&head.core.elems[i]) {
            let mut h = head.clone();
            h.core.elems[i] = weakened;
            out.push(rebuild(&h, &cycle));
        }
    }
    for i in 0..cycle.elems.len() {
        for weakened in drop_one_negation(&cycle.elems[i]) {
            let mut c = cycle.clone();
            c.elems[i] = weakened;
            out.push(rebuild(&head, &c));
        }
    }
    for i in 0..head.core.gaps.len() {
        if let Some(g) = &head.core.gaps[i] {
            for weakened in drop_one_negation_of_guard(g) {
                let mut h = head.clone();
                h.core.gaps[i] = weakened;
                out.push(rebuild(&h, &cycle));
            }
        }
    }
    for i in 0..cycle.gaps.len() {
        if let Some(g) = &cycle.gaps[i] {
            for weakened in drop_one_negation_of_guard(g) {
                let mut c = cycle.clone();
                c.gaps[i] = weakened;
                out.push(rebuild(&head, &c));
            }
        }
    }
    for i in 0..head.post.len() {
        for weakened in drop_one_negation_of_guard(&head.post[i]) {
            let mut h = head.clone();
            match weakened {
                Some(g) => h.post[i] = g,
                None => {
                    h.post.remove(i);
                }
            }
            out.push(rebuild(&h, &cycle));
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|c| seen.insert(c.to_string()));
    out
}

/// Conjunction-of-literals view, dropping one negated conjunct at a time.
fn drop_one_negation(s: &SimpleEol) -> Vec<SimpleEol> {
    let Some(lits) = conjuncts(s) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for i in 0..lits.len() {
        if matches!(lits[i], SimpleEol::Not(_)) {
            let rest: Vec<SimpleEol> = lits
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, l)| (*l).clone())
                .collect();
            if let Some(built) = rebuild_conjunction(&rest) {
                out.push(built);
            }
        }
    }
    out
}

/// Like [`drop_one_negation`] for guards; `None` when nothing is left.
fn drop_one_negation_of_guard(s: &SimpleEol) -> Vec<Option<SimpleEol>> {
    let Some(lits) = conjuncts(s) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for i in 0..lits.len() {
        if matches!(lits[i], SimpleEol::Not(_)) {
            let rest: Vec<SimpleEol> = lits
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, l)| (*l).clone())
                .filter(|l| *l != SimpleEol::Top)
                .collect();
            out.push(rebuild_conjunction(&rest));
        }
    }
    out
}

fn conjuncts(s: &SimpleEol) -> Option<Vec<&SimpleEol>> {
    fn walk<'a>(s: &'a SimpleEol, out: &mut Vec<&'a SimpleEol>) -> bool {
        match s {
            SimpleEol::And(a, b) => walk(a, out) && walk(b, out),
            SimpleEol::Top | SimpleEol::Event(_) | SimpleEol::Not(_) => {
                out.push(s);
                true
            }
            SimpleEol::Or(_, _) => false,
        }
    }
    let mut out = Vec::new();
    if walk(s, &mut out) {
        Some(out)
    } else {
        None
    }
}

fn rebuild_conjunction(lits: &[SimpleEol]) -> Option<SimpleEol> {
    let mut iter = lits.iter().cloned();
    let first = iter.next()?;
    Some(iter.fold(first, SimpleEol::and))
}

// ---------------------------------------------------------------------------
// Order condition.

/// The unordered variant: every ordered conjunction becomes a plain
/// conjunction; between-guards keep their shape.
pub fn unordered_variant(xi: &InfiniteEol) -> InfiniteEol {
    fn icomplex(psi: &IComplexEol) -> IComplexEol {
        match psi {
            IComplexEol::Simple(s) => IComplexEol::Simple(s.clone()),
            IComplexEol::Ordered(a, b) => {
                IComplexEol::And(Box::new(icomplex(a)), Box::new(icomplex(b)))
            }
            IComplexEol::Between { first, guard, second } => IComplexEol::Between {
                first: Box::new(icomplex(first)),
                guard: guard.clone(),
                second: Box::new(icomplex(second)),
            },
            IComplexEol::And(a, b) => {
                IComplexEol::And(Box::new(icomplex(a)), Box::new(icomplex(b)))
            }
            IComplexEol::Or(a, b) => {
                IComplexEol::Or(Box::new(icomplex(a)), Box::new(icomplex(b)))
            }
        }
    }
    fn gcomplex(theta: &GComplexEol) -> GComplexEol {
        match theta {
            GComplexEol::Interval(psi) => GComplexEol::Interval(icomplex(psi)),
            GComplexEol::GuardUntil { guard, body } => GComplexEol::GuardUntil {
                guard: guard.clone(),
                body: Box::new(gcomplex(body)),
            },
            GComplexEol::GuardAfter { body, guard } => GComplexEol::GuardAfter {
                body: Box::new(gcomplex(body)),
                guard: guard.clone(),
            },
        }
    }
    InfiniteEol::new(gcomplex(&xi.head), icomplex(&xi.cycle))
}

/// The order condition: the event order in `xi` is causal unless some bad
/// trace with the same valuation as the first bad satisfier fails `xi` but
/// satisfies its unordered variant.
pub fn check_oc(
    ts: &TransitionSystem,
    universe: &TraceUniverse,
    xi: &InfiniteEol,
) -> Result<bool, Error> {
    let mut pipe = Pipeline::new(ts, universe);
    check_oc_inner(&mut pipe, xi)
}

fn check_oc_inner(pipe: &mut Pipeline<'_>, xi: &InfiniteEol) -> Result<bool, Error> {
    let unordered = unordered_variant(xi);
    if unordered == *xi {
        return Ok(true);
    }
    let fid = pipe.formula_id(xi);
    let Some(witness) = pipe.first_bad_satisfier(fid)? else {
        return Ok(true);
    };
    let all: BTreeSet<String> = pipe.ts.action_names_sorted().into_iter().collect();
    let witness_val = valuation(pipe.ts, &pipe.universe.bad[witness], &all);
    let ufid = pipe.formula_id(&unordered);
    for i in 0..pipe.universe.bad.len() {
        if valuation(pipe.ts, &pipe.universe.bad[i], &all) != witness_val {
            continue;
        }
        if !pipe.sat(fid, i)? && pipe.sat(ufid, i)? {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Full report.

pub fn check_ac(
    ts: &TransitionSystem,
    universe: &TraceUniverse,
    xi: &InfiniteEol,
) -> Result<AcReport, Error> {
    let mut pipe = Pipeline::new(ts, universe);
    check_ac_inner(&mut pipe, xi)
}

fn check_ac_inner(pipe: &mut Pipeline<'_>, xi: &InfiniteEol) -> Result<AcReport, Error> {
    let fid = pipe.formula_id(xi);
    let ac1_witness = pipe.first_bad_satisfier(fid)?;
    let ac21_witness = pipe.first_good_nonsatisfier(fid)?;
    let ac22_counterwitness = pipe.first_good_satisfier(fid)?;

    // Minimality: a strict one-step generalization passing existence,
    // necessity and sufficiency refutes it. Deeper candidates cannot pass
    // when every one-step candidate fails, because weakening only grows the
    // satisfier set.
    let mut ac3 = true;
    let mut ac3_smaller = None;
    for candidate in weakening_candidates(xi, false) {
        if candidate == *xi {
            continue;
        }
        let cid = pipe.formula_id(&candidate);
        if !pipe.passes_ac12_seeded(cid, None)? || !pipe.subset_within(cid, fid)? {
            continue;
        }
        ac3 = false;
        ac3_smaller = Some(candidate);
        break;
    }
    let oc = check_oc_inner(pipe, xi)?;
    Ok(AcReport {
        ac1: ac1_witness.is_some(),
        ac1_witness,
        ac21: ac21_witness.is_some(),
        ac21_witness,
        ac22: ac22_counterwitness.is_none(),
        ac22_counterwitness,
        ac3,
        ac3_smaller,
        oc,
    })
}

// ---------------------------------------------------------------------------
// The pipeline.

/// Computes the causality classes of `phi` over the elementary-lasso
/// universe of `ts`.
pub fn compute_causes(
    ts: &TransitionSystem,
    phi: &LtlFormula,
    cap: usize,
) -> Result<(TraceUniverse, CausalityAnalysis), Error> {
    let universe = partition(ts, phi, cap)?;
    let analysis = compute_causes_for(ts, &universe)?;
    Ok((universe, analysis))
}

/// The pipeline over an already-computed universe.
pub fn compute_causes_for(
    ts: &TransitionSystem,
    universe: &TraceUniverse,
) -> Result<CausalityAnalysis, Error> {
    compute_causes_budgeted(ts, universe, None)
}

/// Like [`compute_causes_for`], raising every unfold budget to at least
/// `budget_floor` extra unfoldings.
pub fn compute_causes_budgeted(
    ts: &TransitionSystem,
    universe: &TraceUniverse,
    budget_floor: Option<usize>,
) -> Result<CausalityAnalysis, Error> {
    let mut pipe = Pipeline::new(ts, universe);
    pipe.budget_floor = budget_floor;
    let mut stats = PipelineStats {
        lassos: universe.len(),
        bad: universe.bad.len(),
        good: universe.good.len(),
        ..Default::default()
    };
    let mut classes: Vec<CausalityClass> = Vec::new();
    let mut covered = vec![false; universe.bad.len()];
    let trace_on = std::env::var("LASSOCAUSE_TRACE").is_ok();

    for seed in 0..universe.bad.len() {
        if covered[seed] {
            continue;
        }
        if trace_on {
            eprintln!("seed {seed}/{} formulas interned {}", universe.bad.len(), pipe.rows.len());
        }
        // Necessity is unattainable when nothing satisfies the property: no
        // formula can have a good non-satisfier.
        if universe.good.is_empty() {
            break;
        }
        let sigma = &universe.bad[seed];
        let mut xi = formula_of_trace(ts, sigma);

        // Refinement ladder: prohibit foreign events at their slots; when an
        // offender shares the alphabet, guard witness gaps with its surplus
        // occurrences; when even those coincide, pin the word prefix up to
        // the divergence point. The exact-word formula is the last resort.
        let mut rounds = 0usize;
        let mut pin = 0usize;
        let max_rounds =
            2 * universe.good.len() + sigma.stem_len() + sigma.cycle_len() + 8;
        loop {
            let fid = pipe.formula_id(&xi);
            let Some(offender) = pipe.first_good_satisfier(fid)? else {
                break;
            };
            let good = &universe.good[offender];
            let progressed = match refine_against(ts, &xi, sigma, good) {
                Ok(candidate) => {
                    let cid = pipe.formula_id(&candidate);
                    let offender_idx = pipe.good_index(offender);
                    let excludes = !pipe.sat(cid, offender_idx)?;
                    let keeps_seed = pipe.sat(cid, seed)?;
                    if excludes && keeps_seed {
                        xi = candidate;
                        stats.refinements += 1;
                        true
                    } else {
                        false
                    }
                }
                Err(Error::CannotSeparate(_)) | Err(Error::PreconditionViolated(_)) => false,
                Err(other) => return Err(other),
            };
            rounds += 1;
            if !progressed {
                let next_pin = divergence_point(sigma, good).unwrap_or(usize::MAX);
                if next_pin > pin && next_pin <= sigma.stem_len() + sigma.cycle_len() {
                    pin = next_pin;
                    xi = pinned_formula(ts, sigma, pin);
                    stats.escalations += 1;
                } else {
                    xi = exact_word_formula(ts, sigma);
                    stats.escalations += 1;
                    break;
                }
            }
            if rounds > max_rounds {
                xi = exact_word_formula(ts, sigma);
                stats.escalations += 1;
                break;
            }
        }

        // Recheck; a universe that still resists yields no certifiable cause
        // for this seed.
        {
            let fid = pipe.formula_id(&xi);
            if !pipe.sat(fid, seed)? || pipe.first_good_satisfier(fid)?.is_some() {
                continue;
            }
        }

        // Greedy first-improvement generalization to a fixpoint.
        loop {
            let fid = pipe.formula_id(&xi);
            let mut accepted = None;
            for candidate in weakening_candidates(&xi, true) {
                if candidate == xi {
                    continue;
                }
                let cid = pipe.formula_id(&candidate);
                if !pipe.passes_ac12_seeded(cid, Some(seed))? {
                    continue;
                }
                if pipe.subset_within(cid, fid)? {
                    accepted = Some(candidate);
                    break;
                }
            }
            match accepted {
                Some(next) => {
                    if trace_on {
                        eprintln!("  generalized to {next}");
                    }
                    xi = next;
                    stats.generalizations += 1;
                }
                None => break,
            }
        }

        // Order condition; when order is not causal and the unordered
        // variant still certifies, emit the unordered form.
        let mut ordered_cause = None;
        if !check_oc_inner(&mut pipe, &xi)? {
            let unordered = unordered_variant(&xi);
            let uid = pipe.formula_id(&unordered);
            if pipe.passes_ac12_seeded(uid, None)? {
                ordered_cause = Some(xi.clone());
                xi = unordered;
            }
        }

        let report = check_ac_inner(&mut pipe, &xi)?;
        let fid = pipe.formula_id(&xi);
        let mut members = Vec::new();
        for b in 0..universe.bad.len() {
            if pipe.sat(fid, b)? {
                members.push(b);
                covered[b] = true;
            }
        }
        let duplicate = classes
            .iter()
            .any(|c| c.cause == xi && c.members == members);
        if !duplicate {
            classes.push(CausalityClass {
                cause: xi,
                ordered_cause,
                oc: report.oc,
                members,
                report,
                overlapping: false,
            });
        }
    }

    // Same member set under a different formula: keep both, flag them.
    for i in 0..classes.len() {
        let same = (0..classes.len())
            .any(|j| j != i && classes[j].members == classes[i].members);
        classes[i].overlapping = same;
    }

    Ok(CausalityAnalysis {
        classes,
        stats,
        touched: pipe.touched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eol::{eval_infinite, parse_infinite};
    use crate::ltl::parse_ltl;
    use crate::model::parse_model;
    use crate::testutil::{lasso_over_word_in, lassos_over_words};

    fn infinite(text: &str) -> InfiniteEol {
        parse_infinite(text).unwrap()
    }

    #[test]
    fn valuation_filters_by_universe() {
        let (ts, sigma) = lasso_over_word_in(&["E2"], &["E0", "B2"], &["B1", "E1", "B0", "E0"]);
        let all: BTreeSet<String> = ts.action_names_sorted().into_iter().collect();
        let val = valuation(&ts, &sigma, &all);
        let expect: BTreeSet<String> = ["E0", "B2", "B1", "E1", "B0"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(val, expect);
        assert!(valuation(&ts, &sigma, &BTreeSet::new()).is_empty());
    }

    #[test]
    fn refinement_reproduces_after_guard() {
        let (ts, lassos) = lassos_over_words(
            &[],
            &[
                (&["E0", "B2"], &["B1", "E1", "B0", "E0"]),
                (&["E0", "B2", "E2"], &["B1", "E1", "B0", "E0"]),
            ],
        );
        let xi = infinite("E0 . B2 .^w (B1 . E1 . B0 . E0)");
        let refined = refine_with_negations(&ts, &xi, &lassos[0], &lassos[1]).unwrap();
        assert_eq!(
            refined.to_string(),
            "(E0 . B2 .[ !E2) .^w (B1 . E1 . B0 . E0)"
        );
    }

    #[test]
    fn refinement_places_between_guard_in_cycle() {
        let (ts, lassos) = lassos_over_words(
            &[],
            &[
                (&["E0", "B2"], &["B1", "E1", "B0", "E0"]),
                (&["E0", "B2"], &["B1", "E1", "E2", "B0", "E0"]),
            ],
        );
        let xi = infinite("(E0 . B2 .[ !E2) .^w (B1 . E1 . B0 . E0)");
        let refined = refine_with_negations(&ts, &xi, &lassos[0], &lassos[1]).unwrap();
        assert_eq!(
            refined.to_string(),
            "(E0 . B2 .[ !E2) .^w (B1 . E1 .< !E2 .> B0 . E0)"
        );
    }

    #[test]
    fn iterated_refinement_guards_every_gap() {
        let (ts, lassos) = lassos_over_words(
            &[],
            &[
                (&["E0", "B2"], &["B1", "E1", "B0", "E0"]),
                (&["E0", "B2", "E2"], &["B1", "E1", "B0", "E0"]),
                (&["E0", "B2"], &["B1", "E2", "E1", "B0", "E0"]),
                (&["E0", "B2"], &["B1", "E1", "E2", "B0", "E0"]),
                (&["E0", "B2"], &["B1", "E1", "B0", "E2", "E0"]),
            ],
        );
        let bad = &lassos[0];
        let mut xi = formula_of_trace(&ts, bad);
        for good in &lassos[1..] {
            xi = refine_with_negations(&ts, &xi, bad, good).unwrap();
        }
        assert_eq!(
            xi.to_string(),
            "(E0 . B2 .[ !E2) .^w (B1 .< !E2 .> E1 .< !E2 .> B0 .< !E2 .> E0)"
        );
        assert!(eval_infinite(&ts, bad, &xi, None).unwrap());
    }

    #[test]
    fn generalize_step_counts_deletable_elements() {
        let ts = parse_model("init s0; s0 -a-> s1; s1 -b-> s2; s2 -c-> s2; s2 -d-> s2;").unwrap();
        let universe = partition(&ts, &parse_ltl("true").unwrap(), 100).unwrap();
        // Guard-free chain: two head events, one cycle event, no guards.
        let xi = infinite("a . b .^w (c)");
        let steps = generalize_step(&ts, &universe, &xi).unwrap();
        assert_eq!(steps.len(), 3);
        let printed: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
        assert!(printed.contains(&"b .^w (c)".to_string()));
        assert!(printed.contains(&"a .^w (c)".to_string()));
        assert!(printed.contains(&"a . b .^w (T)".to_string()));
    }

    #[test]
    fn generalize_step_deletes_guards_and_events() {
        let ts = parse_model("init s0; s0 -E0-> s1; s1 -B2-> s2; s2 -B1-> s2; s2 -E2-> s2;")
            .unwrap();
        let universe = partition(&ts, &parse_ltl("true").unwrap(), 1000).unwrap();
        let xi = infinite("(E0 . B2 .[ !E2) .^w (B1)");
        let steps = generalize_step(&ts, &universe, &xi).unwrap();
        let printed: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
        assert!(printed.contains(&"(B2 .[ !E2) .^w (B1)".to_string()));
        assert!(printed.contains(&"E0 . B2 .^w (B1)".to_string()));
    }

    #[test]
    fn single_event_formula_generalizes_to_top() {
        let ts = parse_model("init s0; s0 -a-> s0;").unwrap();
        let universe = partition(&ts, &parse_ltl("true").unwrap(), 100).unwrap();
        let xi = infinite("a .^w (T)");
        let steps = generalize_step(&ts, &universe, &xi).unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!(steps[0].to_string(), "T .^w (T)");
    }

    #[test]
    fn unordered_variant_flattens_chains() {
        let xi = infinite("a . b .^w (c . d)");
        assert_eq!(unordered_variant(&xi).to_string(), "a & b .^w (c & d)");
        let guarded = infinite("(B2 .[ !E2) .^w (!E2)");
        assert_eq!(unordered_variant(&guarded), guarded);
    }

    #[test]
    fn order_condition_fails_on_stem_order_diamond() {
        // Both stem orders reach the same loop and both are bad, so the
        // order of a and b is not causal.
        let ts = parse_model(
            "init s0; s0 -a-> s1; s1 -b-> s2; s0 -b-> s3; s3 -a-> s2; s2 -c-> s2;",
        )
        .unwrap();
        let universe = partition(&ts, &parse_ltl("!true").unwrap(), 100).unwrap();
        assert!(universe.good.is_empty());
        assert_eq!(universe.bad.len(), 2);
        let xi = infinite("a . b .^w (c)");
        assert!(!check_oc(&ts, &universe, &xi).unwrap());
        // A single event has no order to speak of.
        let single = infinite("a .^w (c)");
        assert!(check_oc(&ts, &universe, &single).unwrap());
    }

    #[test]
    fn non_occurrence_set_finds_missing_service_event() {
        // Bad: button pressed, never served; good: identical but serviced.
        let ts = parse_model(
            "init s0;
             s0 -E0-> s1;
             s1 -B2-> s2;
             s1 -B1-> sb; sb -E1-> s1;
             s2 -B1-> s3; s3 -E1-> s4; s4 -B0-> s5; s5 -E0-> s2;
             s2 -E2-> s6; s6 -B1-> s7; s7 -E1-> s8; s8 -B0-> s9; s9 -E0-> s6;",
        )
        .unwrap();
        let phi = parse_ltl("G (B2 -> F E2)").unwrap();
        let universe = partition(&ts, &phi, 1000).unwrap();
        assert_eq!(universe.bad.len(), 1);
        assert_eq!(universe.good.len(), 2);
        let q = non_occurrence_set(&ts, &universe, &universe.bad[0]).unwrap();
        let expect: BTreeSet<String> = [String::from("E2")].into_iter().collect();
        assert_eq!(q, expect);
    }

    #[test]
    fn non_occurrence_set_empty_without_good_satisfier() {
        let ts = parse_model("init s0; s0 -a-> s1; s1 -b-> s1; s0 -c-> s0;").unwrap();
        let phi = parse_ltl("F b").unwrap();
        let universe = partition(&ts, &phi, 100).unwrap();
        assert_eq!(universe.bad.len(), 1);
        let q = non_occurrence_set(&ts, &universe, &universe.bad[0]).unwrap();
        assert!(q.is_empty());
    }

    #[test]
    fn exact_word_formula_pins_its_trace() {
        let (ts, lassos) = lassos_over_words(
            &["z"],
            &[(&["a"], &["b", "a"]), (&["a", "b"], &["a", "b"])],
        );
        let xi = exact_word_formula(&ts, &lassos[0]);
        assert!(eval_infinite(&ts, &lassos[0], &xi, None).unwrap());
        // A different interleaving does not satisfy the pinned formula.
        assert!(!eval_infinite(&ts, &lassos[1], &xi, None).unwrap());
    }

    #[test]
    fn compute_causes_on_two_lasso_toy_model() {
        let ts = parse_model("init s0; s0 -a-> s1; s1 -b-> s0; s1 -c-> s1;").unwrap();
        let phi = parse_ltl("F b").unwrap();
        let universe = partition(&ts, &phi, 100).unwrap();
        assert_eq!((universe.bad.len(), universe.good.len()), (1, 1));
        let analysis = compute_causes_for(&ts, &universe).unwrap();
        assert_eq!(analysis.classes.len(), 1);
        let class = &analysis.classes[0];
        assert_eq!(class.members, vec![0]);
        assert!(class.report.all_cause_conditions());
        // The violation is carried by c recurring without b.
        assert!(class.cause.event_set().contains(&"c".to_string()));
    }

    #[test]
    fn compute_causes_empty_when_property_holds() {
        let ts = parse_model("init s0; s0 -a-> s0;").unwrap();
        let (universe, analysis) = compute_causes(&ts, &parse_ltl("true").unwrap(), 100).unwrap();
        assert!(universe.bad.is_empty());
        assert!(analysis.classes.is_empty());
    }

    #[test]
    fn order_only_difference_is_escalated() {
        // (y x)^w is good, (x y)^w is bad: same events, different order.
        let ts =
            parse_model("init s0; s0 -x-> s1; s1 -y-> s0; s0 -y-> s2; s2 -x-> s0;").unwrap();
        let phi = parse_ltl("!x U y").unwrap();
        let universe = partition(&ts, &phi, 100).unwrap();
        assert_eq!((universe.bad.len(), universe.good.len()), (1, 1));
        let analysis = compute_causes_for(&ts, &universe).unwrap();
        assert_eq!(analysis.classes.len(), 1);
        assert!(analysis.stats.escalations >= 1);
        let class = &analysis.classes[0];
        assert_eq!(class.members, vec![0]);
        assert!(class.report.all_cause_conditions());
    }
}
