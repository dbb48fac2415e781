//! In-house log-gamma and polygamma kernels.
//!
//! Both use upward recurrence to shift the argument past a threshold, then a
//! Stirling-type asymptotic series. The shift threshold grows with the
//! polygamma order so the series keeps its accuracy for high derivatives.

use crate::error::{Error, Result};

/// Highest polygamma order the kernel supports.
pub const MAX_POLYGAMMA_ORDER: usize = 24;

/// Arguments at or above this are handled by the Stirling series directly.
const LGAMMA_SHIFT: f64 = 12.0;

/// Bernoulli numbers B_2, B_4, ..., B_20.
const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// 0.5 * ln(2 pi).
const HALF_LN_TWO_PI: f64 = 0.918938533204672741780329736406;

/// Stirling series for ln Gamma(z), z >= LGAMMA_SHIFT.
fn lgamma_stirling(z: f64) -> f64 {
    let w = 1.0 / (z * z);
    // B_2k / (2k (2k-1) z^(2k-1)) for k = 1..=7, Horner in 1/z^2
    let series = (1.0 / 12.0
        + w * (-1.0 / 360.0
            + w * (1.0 / 1260.0
                + w * (-1.0 / 1680.0 + w * (1.0 / 1188.0 + w * (-691.0 / 360360.0 + w / 156.0))))))
        / z;
    (z - 0.5) * z.ln() - z + HALF_LN_TWO_PI + series
}

/// ln Gamma(x) for x > 0.
pub fn lgamma(x: f64) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("lgamma requires x > 0, got {x}")));
    }
    if x >= LGAMMA_SHIFT {
        return Ok(lgamma_stirling(x));
    }
    // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1))
    let mut product = 1.0;
    let mut z = x;
    while z < LGAMMA_SHIFT {
        product *= z;
        z += 1.0;
    }
    Ok(lgamma_stirling(z) - product.ln())
}

/// psi^(k)(x) for x > 0 and 0 <= k <= MAX_POLYGAMMA_ORDER.
pub fn polygamma(k: usize, x: f64) -> Result<f64> {
    if k > MAX_POLYGAMMA_ORDER {
        return Err(Error::UnsupportedOrder {
            order: k,
            max: MAX_POLYGAMMA_ORDER,
        });
    }
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::domain(format!("polygamma requires x > 0, got {x}")));
    }

    let threshold = 10.0 + k as f64;
    // psi^(k)(x) = psi^(k)(x + m) - sum_j d^k/dx^k (x + j)^(-1)
    let mut shift = 0.0;
    let mut z = x;
    while z < threshold {
        shift += z.powi(-(k as i32) - 1);
        z += 1.0;
    }

    if k == 0 {
        // psi(z) = ln z - 1/(2z) - sum B_2j / (2j z^(2j))
        let w = 1.0 / (z * z);
        let mut series = 0.0;
        let mut wp = w;
        for (j, b) in BERNOULLI.iter().enumerate() {
            series += b * wp / (2.0 * (j as f64 + 1.0));
            wp *= w;
        }
        return Ok(z.ln() - 0.5 / z - series - shift);
    }

    // psi^(k)(z) = (-1)^(k+1) (k-1)!/z^k [1 + k/(2z) + sum B_2j r_j],
    // r_j = (2j+k-1)! / ((k-1)! (2j)! z^(2j)) built multiplicatively.
    let kf = k as f64;
    let mut sum = 1.0 + kf / (2.0 * z);
    let w = 1.0 / (z * z);
    let mut r = kf * (kf + 1.0) / 2.0 * w;
    for (j, b) in BERNOULLI.iter().enumerate() {
        sum += b * r;
        let two_j = 2.0 * (j as f64 + 1.0);
        r *= (two_j + kf) * (two_j + kf + 1.0) / ((two_j + 1.0) * (two_j + 2.0)) * w;
    }
    let mut factorial = 1.0;
    for i in 2..k {
        factorial *= i as f64;
    }
    let sign = if k.is_multiple_of(2) { -1.0 } else { 1.0 };
    let lead = factorial / z.powi(k as i32);
    // the recurrence terms carry the same (-1)^(k+1) orientation, from
    // d^k/dx^k (1/x) = (-1)^k k! x^(-k-1)
    Ok(sign * (lead * sum + kf * factorial * shift))
}
