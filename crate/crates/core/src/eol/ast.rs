//! The stratified event-order-logic AST.
//!
//! Four layers: simple formulae over event occurrences (negation lives only
//! here), interval formulae with ordered conjunction and the between-guard
//! operator, guarded formulae adding until/after guards, and infinite
//! formulae `head .^w (cycle)` with exactly one omega at the top.

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SimpleEol {
    Top,
    Event(String),
    Not(Box<SimpleEol>),
    And(Box<SimpleEol>, Box<SimpleEol>),
    Or(Box<SimpleEol>, Box<SimpleEol>),
}

impl SimpleEol {
    pub fn event(name: &str) -> SimpleEol {
        SimpleEol::Event(name.to_string())
    }

    pub fn not(inner: SimpleEol) -> SimpleEol {
        SimpleEol::Not(Box::new(inner))
    }

    pub fn and(a: SimpleEol, b: SimpleEol) -> SimpleEol {
        SimpleEol::And(Box::new(a), Box::new(b))
    }

    /// Conjunction of `base` with negations of `banned`, in sorted order.
    pub fn with_banned(base: SimpleEol, banned: &[String]) -> SimpleEol {
        let mut out = base;
        for name in banned {
            out = SimpleEol::and(out, SimpleEol::not(SimpleEol::event(name)));
        }
        out
    }

    pub fn positive_events(&self, out: &mut Vec<String>) {
        match self {
            SimpleEol::Top => {}
            SimpleEol::Event(e) => out.push(e.clone()),
            SimpleEol::Not(_) => {}
            SimpleEol::And(a, b) | SimpleEol::Or(a, b) => {
                a.positive_events(out);
                b.positive_events(out);
            }
        }
    }

    pub fn contains_negation(&self) -> bool {
        match self {
            SimpleEol::Top | SimpleEol::Event(_) => false,
            SimpleEol::Not(_) => true,
            SimpleEol::And(a, b) | SimpleEol::Or(a, b) => {
                a.contains_negation() || b.contains_negation()
            }
        }
    }

    pub fn all_events(&self, out: &mut Vec<String>) {
        match self {
            SimpleEol::Top => {}
            SimpleEol::Event(e) => out.push(e.clone()),
            SimpleEol::Not(a) => a.all_events(out),
            SimpleEol::And(a, b) | SimpleEol::Or(a, b) => {
                a.all_events(out);
                b.all_events(out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum IComplexEol {
    Simple(SimpleEol),
    /// `first . second`: first holds on a prefix, then second on a suffix.
    Ordered(Box<IComplexEol>, Box<IComplexEol>),
    /// `first .< guard .> second`: like `Ordered`, with the simple guard
    /// holding on every step between the two witnesses.
    Between {
        first: Box<IComplexEol>,
        guard: SimpleEol,
        second: Box<IComplexEol>,
    },
    And(Box<IComplexEol>, Box<IComplexEol>),
    Or(Box<IComplexEol>, Box<IComplexEol>),
}

impl IComplexEol {
    pub fn simple(s: SimpleEol) -> IComplexEol {
        IComplexEol::Simple(s)
    }

    pub fn ordered(a: IComplexEol, b: IComplexEol) -> IComplexEol {
        IComplexEol::Ordered(Box::new(a), Box::new(b))
    }

    pub fn between(a: IComplexEol, guard: SimpleEol, b: IComplexEol) -> IComplexEol {
        IComplexEol::Between {
            first: Box::new(a),
            guard,
            second: Box::new(b),
        }
    }

    pub fn top() -> IComplexEol {
        IComplexEol::Simple(SimpleEol::Top)
    }

    pub fn positive_events(&self, out: &mut Vec<String>) {
        match self {
            IComplexEol::Simple(s) => s.positive_events(out),
            IComplexEol::Ordered(a, b) | IComplexEol::And(a, b) | IComplexEol::Or(a, b) => {
                a.positive_events(out);
                b.positive_events(out);
            }
            IComplexEol::Between { first, second, .. } => {
                first.positive_events(out);
                second.positive_events(out);
            }
        }
    }

    /// True when satisfaction is not monotone in the unfolding depth, i.e.
    /// the formula carries negations or step guards. For such formulae the
    /// budget-bounded result is the defined semantics.
    pub fn budget_sensitive(&self) -> bool {
        match self {
            IComplexEol::Simple(s) => s.contains_negation(),
            IComplexEol::Ordered(a, b) | IComplexEol::And(a, b) | IComplexEol::Or(a, b) => {
                a.budget_sensitive() || b.budget_sensitive()
            }
            IComplexEol::Between { .. } => true,
        }
    }

    /// Positive events in chain order, or `None` when the formula contains
    /// disjunction and the ordered-occurrence reading is not a necessary
    /// condition.
    pub fn ordered_positives(&self, out: &mut Vec<String>) -> bool {
        match self {
            IComplexEol::Simple(s) => match s {
                SimpleEol::Or(_, _) => false,
                other => {
                    other.positive_events(out);
                    true
                }
            },
            IComplexEol::Ordered(a, b) => {
                a.ordered_positives(out) && b.ordered_positives(out)
            }
            IComplexEol::Between { first, second, .. } => {
                first.ordered_positives(out) && second.ordered_positives(out)
            }
            IComplexEol::And(_, _) | IComplexEol::Or(_, _) => false,
        }
    }

    pub fn all_events(&self, out: &mut Vec<String>) {
        match self {
            IComplexEol::Simple(s) => s.all_events(out),
            IComplexEol::Ordered(a, b) | IComplexEol::And(a, b) | IComplexEol::Or(a, b) => {
                a.all_events(out);
                b.all_events(out);
            }
            IComplexEol::Between { first, guard, second } => {
                first.all_events(out);
                guard.all_events(out);
                second.all_events(out);
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GComplexEol {
    Interval(IComplexEol),
    /// `guard .] body`: guard holds on every step until body starts.
    GuardUntil {
        guard: SimpleEol,
        body: Box<GComplexEol>,
    },
    /// `body .[ guard`: once body has been satisfied, guard holds on every
    /// later step.
    GuardAfter {
        body: Box<GComplexEol>,
        guard: SimpleEol,
    },
}

impl GComplexEol {
    pub fn interval(psi: IComplexEol) -> GComplexEol {
        GComplexEol::Interval(psi)
    }

    pub fn guard_after(body: GComplexEol, guard: SimpleEol) -> GComplexEol {
        GComplexEol::GuardAfter {
            body: Box::new(body),
            guard,
        }
    }

    pub fn guard_until(guard: SimpleEol, body: GComplexEol) -> GComplexEol {
        GComplexEol::GuardUntil {
            guard,
            body: Box::new(body),
        }
    }

    pub fn positive_events(&self, out: &mut Vec<String>) {
        match self {
            GComplexEol::Interval(psi) => psi.positive_events(out),
            GComplexEol::GuardUntil { body, .. } => body.positive_events(out),
            GComplexEol::GuardAfter { body, .. } => body.positive_events(out),
        }
    }

    pub fn budget_sensitive(&self) -> bool {
        match self {
            GComplexEol::Interval(psi) => psi.budget_sensitive(),
            GComplexEol::GuardUntil { .. } | GComplexEol::GuardAfter { .. } => true,
        }
    }

    /// See [`IComplexEol::ordered_positives`]; guards contribute nothing.
    pub fn ordered_positives(&self, out: &mut Vec<String>) -> bool {
        match self {
            GComplexEol::Interval(psi) => psi.ordered_positives(out),
            GComplexEol::GuardUntil { body, .. } => body.ordered_positives(out),
            GComplexEol::GuardAfter { body, .. } => body.ordered_positives(out),
        }
    }

    pub fn all_events(&self, out: &mut Vec<String>) {
        match self {
            GComplexEol::Interval(psi) => psi.all_events(out),
            GComplexEol::GuardUntil { guard, body } => {
                guard.all_events(out);
                body.all_events(out);
            }
            GComplexEol::GuardAfter { body, guard } => {
                body.all_events(out);
                guard.all_events(out);
            }
        }
    }
}

/// `head .^w (cycle)`: head holds over a finite prefix, cycle recurs in the
/// loop.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct InfiniteEol {
    pub head: GComplexEol,
    pub cycle: IComplexEol,
}

impl InfiniteEol {
    pub fn new(head: GComplexEol, cycle: IComplexEol) -> InfiniteEol {
        InfiniteEol { head, cycle }
    }

    /// Event variables occurring anywhere in the formula, deduplicated and
    /// sorted. This is the Z-set of the causality pipeline when the formula
    /// was built from a trace.
    pub fn event_set(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.head.all_events(&mut out);
        self.cycle.all_events(&mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Positive (non-negated) events, sorted and deduplicated.
    pub fn positive_event_set(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.head.positive_events(&mut out);
        self.cycle.positive_events(&mut out);
        out.sort();
        out.dedup();
        out
    }

    pub fn budget_sensitive(&self) -> bool {
        self.head.budget_sensitive() || self.cycle.budget_sensitive()
    }
}

/// Result of parsing: either a full infinite formula or a guarded formula
/// without the omega operator (the finite-trace fragment).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum EolFormula {
    Infinite(InfiniteEol),
    GComplex(GComplexEol),
}

/// Loop-unfolding limits for deciding infinite formulae.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UnfoldBudget {
    /// Extra loop unfoldings appended to the stem while checking the head.
    pub head_unfolds: usize,
    /// Maximum number of cycle unfoldings tried for the cycle part.
    pub cycle_unfolds: usize,
}

impl UnfoldBudget {
    /// One unfolding more than the formula has positive events on each side;
    /// the margin covers witnesses split across an unfolding boundary.
    pub fn default_for(xi: &InfiniteEol) -> UnfoldBudget {
        let mut head_events = Vec::new();
        xi.head.positive_events(&mut head_events);
        let mut cycle_events = Vec::new();
        xi.cycle.positive_events(&mut cycle_events);
        UnfoldBudget {
            head_unfolds: head_events.len() + 1,
            cycle_unfolds: cycle_events.len() + 1,
        }
    }

    /// Raises both limits to at least `floor`.
    pub fn raised_to(self, floor: usize) -> UnfoldBudget {
        UnfoldBudget {
            head_unfolds: self.head_unfolds.max(floor),
            cycle_unfolds: self.cycle_unfolds.max(floor),
        }
    }
}
