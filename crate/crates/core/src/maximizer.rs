//! Per-x maximization of t -> tau(x, t): solve the critical-point equation
//! d tau/dt = 0 on the proven bracket [(x+1)^2/(2x+3), x] and report the
//! maximum alpha(x) through the closed form
//! alpha(x) = (1+x) t / (x^2 + (1+t)^2 + x(2+t)).

use crate::error::{Error, Result};
use crate::solver::newton_bracketed;
use crate::tau::{d2tau_dt2_raw, dtau_dt_raw, tau_raw};

/// Tolerances and budget for the bracketed Newton solvers.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_iter: u32,
    /// Cross-check the closed-form alpha against direct evaluation of tau.
    pub fd_check: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-13,
            abs_tol: 1e-14,
            max_iter: 200,
            fd_check: true,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        let positive = |v: f64| v.is_finite() && v > 0.0;
        if !positive(self.rel_tol) || !positive(self.abs_tol) {
            return Err(Error::domain(format!(
                "tolerances must be positive (rel_tol = {}, abs_tol = {})",
                self.rel_tol, self.abs_tol
            )));
        }
        if self.max_iter < 1 {
            return Err(Error::domain("max_iter must be >= 1"));
        }
        Ok(())
    }
}

/// Solved critical point of t -> tau(x, t) together with solver diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CriticalPoint {
    pub x: f64,
    pub t_star: f64,
    pub alpha: f64,
    /// |d tau/dt| at the returned root.
    pub residual: f64,
    pub iterations: u32,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
}

/// The proven root bracket [(x+1)^2/(2x+3), x].
pub fn bracket(x: f64) -> (f64, f64) {
    ((x + 1.0) * (x + 1.0) / (2.0 * x + 3.0), x)
}

/// alpha via the closed form (algebraic elimination of the power term at the
/// critical point).
#[inline]
pub(crate) fn alpha_closed_form(x: f64, t: f64) -> f64 {
    (1.0 + x) * t / (x * x + (1.0 + t) * (1.0 + t) + x * (2.0 + t))
}

fn validate_x(x: f64) -> Result<()> {
    if !x.is_finite() || x < 1.0 {
        return Err(Error::domain(format!("x must be finite and >= 1, got {x}")));
    }
    Ok(())
}

/// Solve for the unique root t*(x) of d tau/dt inside the bracket.
///
/// d tau/dt is strictly decreasing there, so a sign-change bracket always
/// exists; Newton steps use the analytic second derivative and fall back to
/// bisection whenever they would leave the bracket. The bracket is closed at
/// the top: at x = 1 the root sits exactly at t = x and is accepted there.
pub fn solve_t_star(x: f64, cfg: &SolverConfig) -> Result<CriticalPoint> {
    validate_x(x)?;
    cfg.validate()?;
    let (lo, hi) = bracket(x);
    // The residual scale follows d tau/dt(x, 0) = 1/x: the whole derivative
    // carries a 1/x factor, so a fixed absolute residual would be far too
    // loose at small x and unreachable at large x.
    let res_tol = cfg.abs_tol.max(cfg.rel_tol / x);

    let f_lo = dtau_dt_raw(x, lo);
    if f_lo < 0.0 {
        return Err(Error::NoSignChange { x, lo, f_lo });
    }
    let f_hi = dtau_dt_raw(x, hi);
    let found = if f_hi >= 0.0 {
        // Root at (or, by rounding, marginally beyond) the upper endpoint.
        crate::solver::RootFound {
            root: hi,
            residual: f_hi.abs(),
            iterations: 0,
        }
    } else {
        newton_bracketed(
            |t| dtau_dt_raw(x, t),
            |t| d2tau_dt2_raw(x, t),
            lo,
            hi,
            res_tol,
            cfg,
        )?
    };

    let t_star = found.root;
    let alpha = alpha_closed_form(x, t_star);
    if cfg.fd_check {
        let direct = tau_raw(x, t_star);
        let rel = (alpha - direct).abs() / alpha.abs().max(f64::MIN_POSITIVE);
        if rel > 1e-10 {
            return Err(Error::Inconsistency(format!(
                "alpha closed form {alpha} vs direct tau {direct} disagree ({rel:e} relative) at x = {x}"
            )));
        }
    }
    Ok(CriticalPoint {
        x,
        t_star,
        alpha,
        residual: found.residual,
        iterations: found.iterations,
        bracket_lo: lo,
        bracket_hi: hi,
    })
}

/// The per-x maximum alpha(x) = tau(x, t*(x)).
pub fn alpha_of_x(x: f64, cfg: &SolverConfig) -> Result<f64> {
    Ok(solve_t_star(x, cfg)?.alpha)
}
