//! The limit constants of the sequence alpha_n: the stationary point a0 of
//! eta(a) = exp(a) - a^2 - a - 1, the root x0 of eta on (a0, oo), and the
//! derived pair ell = 1/x0, alpha* = ell/(1 + ell + ell^2).
//!
//! All four constants are computed, never hard-coded; printed digits appear
//! only in tests as reference values.

use crate::error::{Error, Result};
use crate::maximizer::SolverConfig;
use crate::solver::newton_bracketed;

/// The computed limit constants with the defining-equation residual.
#[derive(Debug, Clone, Copy, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct LimitConstants {
    /// Stationary point of eta in (1, 2).
    pub a0: f64,
    /// Unique root of eta in (a0, oo).
    pub x0: f64,
    /// ell = 1/x0.
    pub ell: f64,
    /// alpha* = ell / (1 + ell + ell^2).
    pub alpha_star: f64,
    /// |eta(x0)| at the returned root.
    pub eta_residual: f64,
}

/// eta(a) = exp(a) - a^2 - a - 1.
pub fn eval_eta(a: f64) -> f64 {
    a.exp() - a * a - a - 1.0
}

/// eta'(a) = exp(a) - 2a - 1.
pub fn eval_eta_prime(a: f64) -> f64 {
    a.exp() - 2.0 * a - 1.0
}

/// Root of eta' on (1, 2); eta'(1) = e - 3 < 0 and eta'(2) = e^2 - 5 > 0.
pub fn solve_a0(cfg: &SolverConfig) -> Result<f64> {
    cfg.validate()?;
    let res_tol = cfg.abs_tol.max(cfg.rel_tol);
    let found = newton_bracketed(eval_eta_prime, |a| a.exp() - 2.0, 1.0, 2.0, res_tol, cfg)?;
    Ok(found.root)
}

/// Solve eta(x0) = 0 on (a0, 3) and derive ell and alpha*.
pub fn solve_x0(cfg: &SolverConfig) -> Result<LimitConstants> {
    let a0 = solve_a0(cfg)?;
    if eval_eta(3.0) <= 0.0 {
        // eta(3) = e^3 - 13 > 0; anything else is an arithmetic fault.
        return Err(Error::Inconsistency("eta(3) must be positive".into()));
    }
    let res_tol = cfg.abs_tol.max(cfg.rel_tol);
    let found = newton_bracketed(eval_eta, eval_eta_prime, a0, 3.0, res_tol, cfg)?;
    let x0 = found.root;
    let ell = 1.0 / x0;
    if !(0.5..=1.0).contains(&ell) {
        return Err(Error::Inconsistency(format!(
            "ell = {ell} fell outside [1/2, 1]"
        )));
    }
    Ok(LimitConstants {
        a0,
        x0,
        ell,
        alpha_star: ell / (1.0 + ell + ell * ell),
        eta_residual: found.residual,
    })
}
