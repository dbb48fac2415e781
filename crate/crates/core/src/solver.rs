//! Safeguarded Newton iteration on a sign-change bracket.
//!
//! Newton steps use the analytic derivative; any step that would leave the
//! current bracket (or is non-finite) is replaced by bisection, so
//! termination is guaranteed whenever the bracket straddles a sign change.

use crate::error::{Error, Result};
use crate::maximizer::SolverConfig;

#[derive(Debug)]
pub(crate) struct RootFound {
    pub root: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// Find the root of `f` inside `[lo, hi]`, where `f(lo)` and `f(hi)` have
/// opposite signs (either orientation). Converges when both the last step
/// obeys |dt| <= abs_tol + rel_tol·|t| and the residual obeys |f| <= res_tol.
pub(crate) fn newton_bracketed(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    res_tol: f64,
    cfg: &SolverConfig,
) -> Result<RootFound> {
    let f_lo = f(lo);
    // Orient so the sub-bracket update below can assume f(a) >= 0 >= f(b).
    let positive_at_lo = f_lo >= 0.0;
    let (mut a, mut b) = (lo, hi);

    let mut t = 0.5 * (lo + hi);
    let mut last_step = hi - lo;
    for iter in 1..=cfg.max_iter {
        let ft = f(t);
        if (ft >= 0.0) == positive_at_lo {
            a = t;
        } else {
            b = t;
        }
        let residual = ft.abs();
        if residual <= res_tol
            && (ft == 0.0 || last_step.abs() <= cfg.abs_tol + cfg.rel_tol * t.abs())
        {
            return Ok(RootFound {
                root: t,
                residual,
                iterations: iter,
            });
        }

        let slope = df(t);
        let mut next = t - ft / slope;
        let (inner_lo, inner_hi) = if a < b { (a, b) } else { (b, a) };
        if !next.is_finite() || next <= inner_lo || next >= inner_hi {
            next = 0.5 * (inner_lo + inner_hi);
        }
        last_step = next - t;
        t = next;
    }

    Err(Error::NoConvergence {
        max_iter: cfg.max_iter,
        last: t,
        residual: f(t).abs(),
    })
}
