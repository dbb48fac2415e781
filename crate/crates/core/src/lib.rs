//! Numerical study of the two-variable family
//! tau(x, t) = (t - (t+x+1)(t/(1+t))^(x+1)) / x on x >= 1, t >= 0.
//!
//! The crate computes, with proven brackets and executable cross-checks:
//!
//! - the per-x maximum alpha(x) = tau(x, t*(x)) via a safeguarded Newton
//!   solve of the critical-point equation ([`maximizer`]);
//! - the limit constants ell and alpha* = ell/(1+ell+ell^2), where 1/ell
//!   solves exp(a) = a^2 + a + 1 ([`limits`]);
//! - the integer-indexed sequences t_n, alpha_n and their monotonicity and
//!   convergence claims ([`sequence`]);
//! - derivative sign alternation of f_beta(x) = (x+1)^beta / Gamma(x+1)^(1/x)
//!   through Taylor jets over in-house gamma kernels ([`cm`], [`gamma`],
//!   [`jet`]).
//!
//! Everything is pure and reentrant. With the default `parallel` feature,
//! batch operations (sequence tabulation, grid alternation checks) fan out
//! over rayon; results are assembled in deterministic input order either way.

pub mod cm;
pub mod error;
pub mod gamma;
pub mod jet;
pub mod limits;
pub mod maximizer;
pub mod sequence;
mod solver;
pub mod tau;

pub use error::{Error, Result};
pub use limits::LimitConstants;
pub use maximizer::{CriticalPoint, SolverConfig};
pub use sequence::{ClaimReport, Sampling, SequenceRow};
pub use tau::TauPoint;
