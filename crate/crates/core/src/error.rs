//! Error type shared by every module of the crate.

/// Errors produced by evaluators, solvers and jet arithmetic.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An input violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// The solver's bracket did not straddle a sign change. For the critical
    /// point this contradicts the proven bracket and signals an internal
    /// inconsistency rather than a user error.
    #[error("no sign change over bracket at x = {x}: f({lo}) = {f_lo:e}")]
    NoSignChange { x: f64, lo: f64, f_lo: f64 },

    /// Iteration budget exhausted before meeting the convergence criteria.
    #[error("no convergence after {max_iter} iterations (last = {last}, residual = {residual:e})")]
    NoConvergence {
        max_iter: u32,
        last: f64,
        residual: f64,
    },

    /// Two algebraically equal routes disagreed beyond tolerance.
    #[error("cross-check failed: {0}")]
    Inconsistency(String),

    /// Jet operands with different centers or orders were combined.
    #[error("jet mismatch: {0}")]
    JetMismatch(String),

    /// Jet division or logarithm hit a singular constant term.
    #[error("singular jet: {0}")]
    SingularJet(String),

    /// Requested derivative order is beyond what the kernels support.
    #[error("order {order} exceeds the supported maximum {max}")]
    UnsupportedOrder { order: usize, max: usize },

    /// A batch solve failed at a specific sequence index.
    #[error("solving n = {n}: {source}")]
    AtN {
        n: u64,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
