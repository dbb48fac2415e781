//! Pointwise evaluation of tau(x, t) = (t - (t+x+1)(t/(1+t))^(x+1)) / x,
//! its partial derivatives, and the auxiliary functions the solver and the
//! property suite rely on.
//!
//! The power (t/(1+t))^(x+1) is always taken in log space,
//! exp(-(x+1)·ln1p(1/t)), so evaluations stay finite and accurate for
//! arbitrarily large x; at t = 0 the power is exactly 0.

use crate::error::{Error, Result};

/// An evaluation point of the tau family: x >= 1, t >= 0, both finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauPoint {
    x: f64,
    t: f64,
}

impl TauPoint {
    pub fn new(x: f64, t: f64) -> Result<Self> {
        if !x.is_finite() || !t.is_finite() {
            return Err(Error::domain(format!(
                "tau point must be finite, got (x = {x}, t = {t})"
            )));
        }
        if x < 1.0 {
            return Err(Error::domain(format!("x must be >= 1, got {x}")));
        }
        if t < 0.0 {
            return Err(Error::domain(format!("t must be >= 0, got {t}")));
        }
        Ok(Self { x, t })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn t(&self) -> f64 {
        self.t
    }
}

/// ln(1 + 1/t) for t > 0, accurate for both tiny and huge t.
#[inline]
fn ln1p_inv(t: f64) -> f64 {
    (1.0 / t).ln_1p()
}

/// (t/(1+t))^(x+1), exactly 0 at t = 0.
#[inline]
pub(crate) fn pow_ratio(x: f64, t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        (-(x + 1.0) * ln1p_inv(t)).exp()
    }
}

#[inline]
pub(crate) fn tau_raw(x: f64, t: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    (t - (t + x + 1.0) * pow_ratio(x, t)) / x
}

/// d tau / dt; the t = 0 value is the analytic right limit 1/x.
#[inline]
pub(crate) fn dtau_dt_raw(x: f64, t: f64) -> f64 {
    if t == 0.0 {
        return 1.0 / x;
    }
    let q = pow_ratio(x, t);
    (1.0 - q - (t + x + 1.0) * (x + 1.0) * q / (t * (1.0 + t))) / x
}

/// d2 tau / dt2 = (1+x) t^(x-1) (1+t)^(-3-x) (t-1-x), t > 0.
#[inline]
pub(crate) fn d2tau_dt2_raw(x: f64, t: f64) -> f64 {
    // t^(x-1)(1+t)^(-3-x) rewritten so the large-x part rides on ln1p(1/t)
    // instead of cancelling two O(x·ln t) terms.
    let log_scale = -(x + 1.0) * ln1p_inv(t) - 2.0 * t.ln() - 2.0 * t.ln_1p();
    (1.0 + x) * log_scale.exp() * (t - 1.0 - x)
}

/// tau(x, t).
pub fn eval_tau(p: TauPoint) -> f64 {
    tau_raw(p.x, p.t)
}

/// d tau/dt at p; returns the right-limit 1/x at t = 0.
pub fn eval_dtau_dt(p: TauPoint) -> f64 {
    dtau_dt_raw(p.x, p.t)
}

/// Closed-form second t-derivative; requires t > 0.
pub fn eval_d2tau_dt2(p: TauPoint) -> Result<f64> {
    if p.t == 0.0 {
        return Err(Error::domain("d2 tau/dt2 requires t > 0"));
    }
    Ok(d2tau_dt2_raw(p.x, p.t))
}

/// d tau/dx at p; requires t > 0 (the logarithm is singular at t = 0).
pub fn eval_dtau_dx(p: TauPoint) -> Result<f64> {
    if p.t == 0.0 {
        return Err(Error::domain("d tau/dx requires t > 0"));
    }
    let (x, t) = (p.x, p.t);
    let q = pow_ratio(x, t);
    Ok((q * (1.0 + t) - t) / (x * x) + q * (t + x + 1.0) * ln1p_inv(t) / x)
}

/// k(u) = -1 + (1+u)(1+u + x(1+u+x)·ln(1+1/u)) / (u(1+u) + (u+x+1)(x+1)),
/// strictly decreasing in u on (0, x].
pub fn eval_k(u: f64, x: f64) -> Result<f64> {
    if !u.is_finite() || u <= 0.0 {
        return Err(Error::domain(format!("k requires u > 0, got {u}")));
    }
    if !x.is_finite() || x < 1.0 {
        return Err(Error::domain(format!("k requires x >= 1, got {x}")));
    }
    let numer = (1.0 + u) * (1.0 + u + x * (1.0 + u + x) * ln1p_inv(u));
    let denom = u * (1.0 + u) + (u + x + 1.0) * (x + 1.0);
    Ok(numer / denom - 1.0)
}

/// psi(u) = (x+1)u / (x^2 + (u+1)^2 + x(u+2)); psi(x) = x/(3x+1) and
/// psi(t*(x)) = alpha(x).
pub fn eval_psi_bound(u: f64, x: f64) -> Result<f64> {
    if !u.is_finite() || u < 0.0 {
        return Err(Error::domain(format!("psi requires u >= 0, got {u}")));
    }
    if !x.is_finite() || x < 1.0 {
        return Err(Error::domain(format!("psi requires x >= 1, got {x}")));
    }
    Ok((x + 1.0) * u / (x * x + (u + 1.0) * (u + 1.0) + x * (u + 2.0)))
}

/// The named auxiliary functions from the monotonicity arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuxFn {
    /// h(x) = 1 - (3 + 1/x)(x/(x+1))^(x+1); h(1) = 0, nonincreasing.
    H,
    /// h1(x) = 3 - (1+3x)·ln(1+1/x), the factor in h'(x) = -x^x (1+x)^(-1-x) h1(x);
    /// nonnegative and decreasing to 0.
    H1,
    /// phi(x) = d tau/dt at the bracket lower endpoint t = (x+1)^2/(2x+3).
    Phi,
    /// PhiLog(x) = 2 ln(x+2) + 2(x+1) ln((x+2)/(x+1)) - ln(7x^2+21x+16), the
    /// log-domain positivity witness for phi; PhiLog(0) = 0.
    PhiLog,
    /// Theta(x) = x(1+2x)·ln(1+1/x) - 2x, nonnegative, ~ 1/(6x) at large x.
    Theta,
}

/// Evaluate one of the named auxiliary functions.
///
/// Domain: x >= 1 for `H`, `H1`, `Theta`; x >= 0 for `Phi` and `PhiLog`.
/// `Phi` is computed through the derivative form rather than the rearranged
/// quotient with (x+2)^(2x+4), which overflows binary64 near x = 150.
pub fn eval_aux(f: AuxFn, x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::domain(format!(
            "aux function input must be finite, got {x}"
        )));
    }
    let need_one = matches!(f, AuxFn::H | AuxFn::H1 | AuxFn::Theta);
    if need_one && x < 1.0 {
        return Err(Error::domain(format!("{f:?} requires x >= 1, got {x}")));
    }
    if !need_one && x < 0.0 {
        return Err(Error::domain(format!("{f:?} requires x >= 0, got {x}")));
    }
    Ok(match f {
        AuxFn::H => 1.0 - (3.0 + 1.0 / x) * (-(x + 1.0) * ln1p_inv(x)).exp(),
        AuxFn::H1 => 3.0 - (1.0 + 3.0 * x) * ln1p_inv(x),
        AuxFn::Phi => {
            if x == 0.0 {
                // x·phi(x) vanishes identically at x = 0; the limit is
                // d/dx of that product at (0, 1/3), which reduces to
                // 2 ln 2 - 21/16.
                2.0 * std::f64::consts::LN_2 - 21.0 / 16.0
            } else {
                dtau_dt_raw(x, (x + 1.0) * (x + 1.0) / (2.0 * x + 3.0))
            }
        }
        AuxFn::PhiLog => {
            2.0 * (x + 2.0).ln() + 2.0 * (x + 1.0) * ((x + 2.0).ln() - (x + 1.0).ln())
                - (7.0 * x * x + 21.0 * x + 16.0).ln()
        }
        AuxFn::Theta => x * (1.0 + 2.0 * x) * ln1p_inv(x) - 2.0 * x,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn p(x: f64, t: f64) -> TauPoint {
        TauPoint::new(x, t).unwrap()
    }

    #[test]
    fn tau_point_rejects_bad_inputs() {
        assert!(TauPoint::new(0.5, 1.0).is_err());
        assert!(TauPoint::new(1.0, -0.1).is_err());
        assert!(TauPoint::new(f64::NAN, 1.0).is_err());
        assert!(TauPoint::new(1.0, f64::INFINITY).is_err());
        assert!(TauPoint::new(1.0, 0.0).is_ok());
    }

    #[test]
    fn tau_hand_values() {
        assert_eq!(eval_tau(p(1.0, 0.0)), 0.0);
        // tau(1,1) = 1 - 3/4 = 1/4, tau(2,1) = (1 - 4/8)/2 = 1/4
        assert_relative_eq!(eval_tau(p(1.0, 1.0)), 0.25, max_relative = 1e-14);
        assert_relative_eq!(eval_tau(p(2.0, 1.0)), 0.25, max_relative = 1e-14);
    }

    #[test]
    fn tau_stays_finite_at_extreme_x() {
        let x = 1e308_f64.min(1e12);
        let v = eval_tau(p(x, 0.5576 * x));
        assert!(v.is_finite());
        assert!(v > 0.29 && v < 0.30);
    }

    #[test]
    fn dtau_dt_values() {
        assert_relative_eq!(eval_dtau_dt(p(3.0, 0.0)), 1.0 / 3.0, max_relative = 1e-15);
        // h(1) = 0 forces a critical point at (1, 1).
        assert!(eval_dtau_dt(p(1.0, 1.0)).abs() < 1e-15);
        // strictly negative beyond the critical point; exact value -1/54
        assert_relative_eq!(eval_dtau_dt(p(2.0, 2.0)), -1.0 / 54.0, max_relative = 1e-13);
    }

    #[test]
    fn d2tau_dt2_sign_and_values() {
        assert_eq!(eval_d2tau_dt2(p(1.0, 2.0)).unwrap(), 0.0);
        assert_relative_eq!(
            eval_d2tau_dt2(p(1.0, 1.0)).unwrap(),
            -0.125,
            max_relative = 1e-13
        );
        assert!(eval_d2tau_dt2(p(3.0, 1.5)).unwrap() < 0.0);
        assert!(eval_d2tau_dt2(p(3.0, 7.0)).unwrap() > 0.0);
        assert!(eval_d2tau_dt2(p(1.0, 0.0)).is_err());
    }

    #[test]
    fn dtau_dx_reference_value() {
        // frozen from a 40-digit evaluation of the closed form
        assert_relative_eq!(
            eval_dtau_dx(p(1.0, 1.0)).unwrap(),
            0.0198603854199589821,
            max_relative = 1e-13
        );
        assert!(eval_dtau_dx(p(2.0, 0.0)).is_err());
    }

    #[test]
    fn k_matches_reduced_form_at_u_eq_x() {
        for &x in &[1.0, 2.0, 5.0, 40.0] {
            let full = eval_k(x, x).unwrap();
            let reduced =
                (1.0 + x + x * (1.0 + 2.0 * x) * (1.0 / x).ln_1p()) / (3.0 * x + 1.0) - 1.0;
            assert_relative_eq!(full, reduced, max_relative = 1e-12);
        }
    }

    #[test]
    fn k_rejects_nonpositive_u() {
        assert!(eval_k(0.0, 2.0).is_err());
        assert!(eval_k(-1.0, 2.0).is_err());
        assert!(eval_k(1.0, 0.5).is_err());
    }

    #[test]
    fn psi_bound_values() {
        assert_relative_eq!(
            eval_psi_bound(1.0, 1.0).unwrap(),
            0.25,
            max_relative = 1e-15
        );
        assert_eq!(eval_psi_bound(0.0, 7.0).unwrap(), 0.0);
        // psi(x) = x/(3x+1)
        for &x in &[1.0, 3.0, 10.0, 1e4] {
            assert_relative_eq!(
                eval_psi_bound(x, x).unwrap(),
                x / (3.0 * x + 1.0),
                max_relative = 1e-14
            );
        }
        assert!(eval_psi_bound(-0.5, 2.0).is_err());
    }

    #[test]
    fn aux_h_values() {
        assert!(eval_aux(AuxFn::H, 1.0).unwrap().abs() < 1e-15);
        assert!(eval_aux(AuxFn::H, 5.0).unwrap() < 0.0);
        // limit is 1 - 3/e
        assert_relative_eq!(
            eval_aux(AuxFn::H, 1e9).unwrap(),
            1.0 - 3.0 / std::f64::consts::E,
            max_relative = 1e-6
        );
    }

    #[test]
    fn aux_h1_values() {
        // h1(1) = 3 - 4 ln 2
        assert_relative_eq!(
            eval_aux(AuxFn::H1, 1.0).unwrap(),
            3.0 - 4.0 * std::f64::consts::LN_2,
            max_relative = 1e-13
        );
        assert!(eval_aux(AuxFn::H1, 1e6).unwrap() > 0.0);
    }

    #[test]
    fn aux_phi_values() {
        assert!(eval_aux(AuxFn::Phi, 3.0).unwrap() > 0.0);
        // the quotient form would overflow here; the derivative form must not
        assert!(eval_aux(AuxFn::Phi, 500.0).unwrap() > 0.0);
        assert_relative_eq!(
            eval_aux(AuxFn::Phi, 0.0).unwrap(),
            0.0737943611198906188,
            max_relative = 1e-13
        );
    }

    #[test]
    fn aux_phi_log_values() {
        assert!(eval_aux(AuxFn::PhiLog, 0.0).unwrap().abs() < 1e-14);
        assert_relative_eq!(
            eval_aux(AuxFn::PhiLog, 1.0).unwrap(),
            0.0348953758506,
            max_relative = 1e-9
        );
    }

    #[test]
    fn aux_theta_values() {
        // Theta(1) = 3 ln 2 - 2
        assert_relative_eq!(
            eval_aux(AuxFn::Theta, 1.0).unwrap(),
            3.0 * std::f64::consts::LN_2 - 2.0,
            max_relative = 1e-13
        );
        // Theta(x) ~ 1/(6x)
        let x = 1e4;
        let ratio = eval_aux(AuxFn::Theta, x).unwrap() * 6.0 * x;
        assert!((ratio - 1.0).abs() < 0.05, "ratio = {ratio}");
    }

    #[test]
    fn aux_domain_errors() {
        assert!(eval_aux(AuxFn::H, 0.5).is_err());
        assert!(eval_aux(AuxFn::Theta, 0.0).is_err());
        assert!(eval_aux(AuxFn::Phi, -0.1).is_err());
        assert!(eval_aux(AuxFn::PhiLog, f64::NAN).is_err());
    }
}
