//! Explicit-state LTL checking with event-order causality explanations.
//!
//! Given a finite transition system and an LTL property, the library
//! enumerates every elementary lasso execution, splits them into good and
//! bad traces, and computes event-order-logic causes certified by the
//! actual-cause conditions (existence, necessity, sufficiency, minimality)
//! plus an order condition. Each certified cause comes with the set of bad
//! traces it generalizes.

pub mod causality;
pub mod eol;
pub mod error;
pub mod ltl;
pub mod model;
pub mod oracle;
pub mod report;
pub mod search;
pub mod testutil;

pub use error::Error;
pub use ltl::{eval_ltl, parse_ltl, LtlFormula, Verdict};
pub use model::{
    complete_terminal_states, parse_model, LassoExecution, Segment, Step, TransitionSystem,
};
pub use search::{enumerate_lassos, partition, TraceUniverse, DEFAULT_LASSO_CAP};
