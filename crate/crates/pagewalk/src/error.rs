use thiserror::Error;

/// Errors produced by graph construction, simulation, and search.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid page id {id}: pages are numbered 1..={max}")]
    InvalidPage { id: u32, max: u32 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("sequence is not a walk on the given graph: {0}")]
    NotAWalk(String),

    #[error("graph is not a {expected} in canonical form: {message}")]
    NotCanonical {
        expected: &'static str,
        message: String,
    },

    #[error("sequence has consecutive requests to the same page at index {0}; remove duplicates first")]
    NormalizationRequired(usize),

    #[error("trace does not match sequence: {0}")]
    TraceMismatch(String),

    #[error("no walk on the graph can realize the request multiset: {0}")]
    InfeasibleMultiset(String),

    #[error("multiset too large for exhaustive enumeration: total {total} exceeds guard {guard}")]
    SizeGuard { total: u32, guard: u32 },

    #[error("search budget of {budget} nodes exhausted before any complete walk was found")]
    BudgetExhausted { budget: u64 },

    #[error("rewrite budget of {budget} steps exhausted during normalization")]
    RewriteBudget { budget: usize },

    #[error("unknown check id `{0}`")]
    UnknownCheck(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
