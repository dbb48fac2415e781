//! Derivative sign-alternation checks for f_beta(x) = (x+1)^beta / Gamma(x+1)^(1/x).
//!
//! f_beta is assembled as exp(beta·log(1+y) - L(y)/y) where L(y) = ln Gamma(1+y);
//! the jet of L at a center x is seeded from the polygamma kernel, and the
//! removable singularity of L(y)/y at y = 0 is handled by seeding the jet at
//! center 0, where L's constant term is exactly zero, and shifting coefficients
//! down one slot.

use crate::error::{Error, Result};
use crate::gamma::{lgamma, polygamma};
use crate::jet::TaylorJet;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order cap for f_beta jets. Coefficient cancellation in the L(y)/y division
/// grows with order; up to 20 the jet round-trip tests still hold at 1e-9.
pub const MAX_CM_ORDER: usize = 20;

/// Sign-alternation outcome at one grid point.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CmReport {
    pub x: f64,
    pub beta: f64,
    /// Number of derivative orders checked (k = 0..=orders_checked).
    pub orders_checked: usize,
    /// Whether (-1)^k f^(k)(x) > 0 held at every checked order.
    pub all_alternating: bool,
    /// Smallest |(-1)^k k! c_k| over the checked orders, reported raw.
    pub min_margin: f64,
    /// First order at which alternation failed, if any.
    pub first_violation: Option<usize>,
}

/// The jet of ln Gamma(1 + y) at center x, to the given order.
fn lgamma_shifted_jet(x: f64, order: usize) -> Result<TaylorJet> {
    let mut coeffs = vec![0.0; order + 1];
    // At x = 0 the constant term is ln Gamma(1) = 0 exactly; seeding it as a
    // literal zero is what makes the y = 0 division branch removable.
    coeffs[0] = if x == 0.0 { 0.0 } else { lgamma(x + 1.0)? };
    let mut factorial = 1.0;
    for (k, c) in coeffs.iter_mut().enumerate().skip(1) {
        factorial *= k as f64;
        *c = polygamma(k - 1, x + 1.0)? / factorial;
    }
    TaylorJet::new(x, coeffs)
}

/// Order-`order` jet of f_beta at x (x > -1, 1 <= order <= MAX_CM_ORDER).
pub fn f_beta_jet(x: f64, beta: f64, order: usize) -> Result<TaylorJet> {
    if !x.is_finite() || x <= -1.0 {
        return Err(Error::domain(format!("f_beta requires x > -1, got {x}")));
    }
    if !beta.is_finite() {
        return Err(Error::domain(format!("beta must be finite, got {beta}")));
    }
    if !(1..=MAX_CM_ORDER).contains(&order) {
        return Err(Error::UnsupportedOrder {
            order,
            max: MAX_CM_ORDER,
        });
    }

    let lgamma_over_y = if x == 0.0 {
        // L(y)/y with L(0) = 0: drop the zero constant term and shift.
        let l = lgamma_shifted_jet(0.0, order + 1)?;
        TaylorJet::new(0.0, l.coeffs()[1..].to_vec())?
    } else {
        let l = lgamma_shifted_jet(x, order)?;
        let y = TaylorJet::variable(x, order)?;
        l.div(&y)?
    };

    let one_plus_y = {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = 1.0 + x;
        coeffs[1] = 1.0;
        TaylorJet::new(x, coeffs)?
    };

    let exponent = one_plus_y.log()?.scale(beta).sub(&lgamma_over_y)?;
    Ok(exponent.exp())
}

fn report_for(x: f64, beta: f64, orders: usize) -> Result<CmReport> {
    let jet = f_beta_jet(x, beta, orders.max(1))?;
    let mut all_alternating = true;
    let mut min_margin = f64::INFINITY;
    let mut first_violation = None;
    let mut sign = 1.0;
    for k in 0..=orders {
        let signed = sign * jet.derivative(k);
        min_margin = min_margin.min(signed.abs());
        if signed <= 0.0 && first_violation.is_none() {
            all_alternating = false;
            first_violation = Some(k);
        }
        sign = -sign;
    }
    Ok(CmReport {
        x,
        beta,
        orders_checked: orders,
        all_alternating,
        min_margin,
        first_violation,
    })
}

/// Check alternation of (-1)^k f_beta^(k) for k = 0..=orders at every grid
/// point. Failures at one point do not abort the batch; each entry carries
/// its own result, in input order. `orders` may be 0, which reduces the check
/// to positivity of f_beta itself.
pub fn check_cm(grid: &[f64], beta: f64, orders: usize) -> Vec<Result<CmReport>> {
    #[cfg(feature = "parallel")]
    {
        grid.par_iter()
            .map(|&x| report_for(x, beta, orders))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        check_cm_serial(grid, beta, orders)
    }
}

/// Single-threaded twin of [`check_cm`].
pub fn check_cm_serial(grid: &[f64], beta: f64, orders: usize) -> Vec<Result<CmReport>> {
    grid.iter().map(|&x| report_for(x, beta, orders)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const EULER_GAMMA: f64 = 0.5772156649015328606065;
    /// 1/(1 + alpha*), frozen from the limit solve.
    const BETA_THRESHOLD: f64 = 0.7701634920044918;

    #[test]
    fn value_at_one_with_half_beta() {
        // Gamma(2) = 1, so f_0.5(1) = 2^0.5
        let jet = f_beta_jet(1.0, 0.5, 4).unwrap();
        assert_relative_eq!(jet.coeff(0), std::f64::consts::SQRT_2, max_relative = 1e-13);
        // frozen first and second derivatives
        assert_relative_eq!(jet.derivative(1), -0.2443539500618698, max_relative = 1e-11);
        assert_relative_eq!(jet.derivative(2), 0.1491840166305764, max_relative = 1e-10);
    }

    #[test]
    fn removable_singularity_at_zero() {
        // lim_{y->0} Gamma(1+y)^(-1/y) = e^gamma, for every beta
        for beta in [0.0, 0.5, BETA_THRESHOLD] {
            let jet = f_beta_jet(0.0, beta, 6).unwrap();
            assert_relative_eq!(jet.coeff(0), EULER_GAMMA.exp(), max_relative = 1e-12);
        }
        // frozen slope at the threshold beta
        let jet = f_beta_jet(0.0, BETA_THRESHOLD, 6).unwrap();
        assert_relative_eq!(jet.derivative(1), -0.0931563949856956, max_relative = 1e-10);
    }

    #[test]
    fn frozen_values_at_two_and_minus_half() {
        let jet = f_beta_jet(2.0, BETA_THRESHOLD, 4).unwrap();
        assert_relative_eq!(jet.coeff(0), 1.6479588908765764, max_relative = 1e-12);
        assert_relative_eq!(jet.derivative(1), -0.0517198852786750, max_relative = 1e-10);
        let jet = f_beta_jet(-0.5, BETA_THRESHOLD, 4).unwrap();
        assert_relative_eq!(jet.coeff(0), 1.8420760668927373, max_relative = 1e-12);
    }

    #[test]
    fn alternation_holds_at_the_threshold_beta() {
        let grid = [-0.5, 0.0, 0.5, 1.0, 2.0, 5.0, 10.0];
        for res in check_cm(&grid, BETA_THRESHOLD, 12) {
            let report = res.unwrap();
            assert!(
                report.all_alternating,
                "x = {}, first violation {:?}",
                report.x, report.first_violation
            );
            assert!(report.min_margin > 0.0);
            assert_eq!(report.first_violation, None);
        }
    }

    #[test]
    fn tight_margin_at_x_ten_matches_oracle() {
        // the smallest margin on the default grid; frozen from 40-digit
        // differentiation: (-1)^12 f^(12)(10) = 3.3725561e-7
        let report = report_for(10.0, BETA_THRESHOLD, 12).unwrap();
        assert_relative_eq!(report.min_margin, 3.3725561e-7, max_relative = 1e-5);
    }

    #[test]
    fn alternation_fails_above_the_threshold() {
        // at beta = 1 the function increases, so k = 1 already violates
        let report = report_for(2.0, 1.0, 12).unwrap();
        assert!(!report.all_alternating);
        assert_eq!(report.first_violation, Some(1));
    }

    #[test]
    fn beta_zero_family_alternates() {
        let grid = [-0.5, 0.5, 2.0, 10.0];
        for res in check_cm(&grid, 0.0, 12) {
            assert!(res.unwrap().all_alternating);
        }
    }

    #[test]
    fn orders_zero_reduces_to_positivity() {
        let reports = check_cm(&[1.0, 4.0], BETA_THRESHOLD, 0);
        for res in reports {
            let report = res.unwrap();
            assert!(report.all_alternating);
            assert_eq!(report.orders_checked, 0);
            assert!(report.min_margin > 1.0);
        }
    }

    #[test]
    fn per_point_errors_do_not_abort_the_batch() {
        let results = check_cm(&[-1.5, 1.0], BETA_THRESHOLD, 4);
        assert!(results[0].is_err());
        assert!(results[1].is_ok());
    }

    #[test]
    fn serial_and_default_paths_agree() {
        let grid = [-0.5, 0.0, 1.0, 5.0];
        let a = check_cm(&grid, BETA_THRESHOLD, 8);
        let b = check_cm_serial(&grid, BETA_THRESHOLD, 8);
        assert_eq!(a, b);
    }

    #[test]
    fn order_cap_is_enforced() {
        assert!(matches!(
            f_beta_jet(1.0, 0.5, 21),
            Err(Error::UnsupportedOrder { .. })
        ));
        assert!(f_beta_jet(1.0, 0.5, 0).is_err());
    }
}
