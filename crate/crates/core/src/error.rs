use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("model syntax error at {line}:{col}: {message}")]
    ModelSyntax {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("undeclared state `{name}` in transition at {line}:{col}")]
    UndeclaredState {
        name: String,
        line: usize,
        col: usize,
    },

    #[error("model declares no initial state")]
    EmptyInitialSet,

    #[error("invalid lasso execution: {0}")]
    InvalidLasso(String),

    #[error("formula syntax error at offset {pos}: {message}")]
    FormulaSyntax { pos: usize, message: String },

    #[error("stratification error: {0}")]
    Stratification(String),

    #[error("atom `{0}` names neither an action nor a declared label")]
    UnresolvableAtom(String),

    #[error("atom `{0}` is both an action and a state label; rename one")]
    AmbiguousAtom(String),

    #[error("system has terminal states; complete it before analysis")]
    TerminalStates,

    #[error("lasso enumeration exceeded the cap of {0}")]
    LassoCapExceeded(usize),

    #[error("unfold budget too small: formula needs head {need_head}/cycle {need_cycle}, given head {have_head}/cycle {have_cycle}")]
    BudgetTooSmall {
        need_head: usize,
        need_cycle: usize,
        have_head: usize,
        have_cycle: usize,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("cannot separate: {0}")]
    CannotSeparate(String),

    #[error("oracle cap exceeded: {0}")]
    OracleCapExceeded(String),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
