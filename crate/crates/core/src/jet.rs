//! Truncated Taylor-series (jet) arithmetic.
//!
//! A jet stores the coefficients c_0..c_K of a function's Taylor expansion at
//! a center; the order-k derivative is k!·c_k. Arithmetic and the elementary
//! functions follow the standard truncated power-series recurrences and are
//! exact for polynomial inputs up to order K.

use crate::error::{Error, Result};

/// Taylor coefficients c_0..c_K of a function at `center` (K >= 1).
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorJet {
    center: f64,
    coeffs: Vec<f64>,
}

impl TaylorJet {
    pub fn new(center: f64, coeffs: Vec<f64>) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::domain(format!(
                "jet center must be finite, got {center}"
            )));
        }
        if coeffs.len() < 2 {
            return Err(Error::domain(
                "a jet needs order K >= 1 (at least two coefficients)",
            ));
        }
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::domain("jet coefficients must be finite"));
        }
        Ok(Self { center, coeffs })
    }

    /// The constant function `value`.
    pub fn constant(center: f64, value: f64, order: usize) -> Result<Self> {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = value;
        Self::new(center, coeffs)
    }

    /// The identity y |-> y expanded at `center`: [center, 1, 0, ...].
    pub fn variable(center: f64, order: usize) -> Result<Self> {
        let mut coeffs = vec![0.0; order + 1];
        coeffs[0] = center;
        if order >= 1 {
            coeffs[1] = 1.0;
        }
        Self::new(center, coeffs)
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    /// K, the truncation order.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs[k]
    }

    /// The order-k derivative, k!·c_k.
    pub fn derivative(&self, k: usize) -> f64 {
        let mut factorial = 1.0;
        for i in 2..=k {
            factorial *= i as f64;
        }
        factorial * self.coeffs[k]
    }

    fn check_compatible(&self, rhs: &Self, op: &str) -> Result<()> {
        if self.center != rhs.center || self.coeffs.len() != rhs.coeffs.len() {
            return Err(Error::JetMismatch(format!(
                "{op}: centers {} vs {}, orders {} vs {}",
                self.center,
                rhs.center,
                self.order(),
                rhs.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs, "add")?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            center: self.center,
            coeffs,
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs, "sub")?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            center: self.center,
            coeffs,
        })
    }

    /// Multiply every coefficient by a scalar.
    pub fn scale(&self, s: f64) -> Self {
        Self {
            center: self.center,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Cauchy product truncated at order K.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs, "mul")?;
        let n = self.coeffs.len();
        let mut coeffs = vec![0.0; n];
        for (k, c) in coeffs.iter_mut().enumerate() {
            let mut acc = 0.0;
            for i in 0..=k {
                acc += self.coeffs[i] * rhs.coeffs[k - i];
            }
            *c = acc;
        }
        Ok(Self {
            center: self.center,
            coeffs,
        })
    }

    /// Series division; the divisor's constant term must be nonzero.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.check_compatible(rhs, "div")?;
        let b0 = rhs.coeffs[0];
        if b0 == 0.0 {
            return Err(Error::SingularJet(
                "division by a jet with zero constant term".into(),
            ));
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![0.0; n];
        for k in 0..n {
            let mut acc = self.coeffs[k];
            for i in 1..=k {
                acc -= rhs.coeffs[i] * coeffs[k - i];
            }
            coeffs[k] = acc / b0;
        }
        Ok(Self {
            center: self.center,
            coeffs,
        })
    }

    /// exp of the jet: e_k = (1/k) sum_{i=1..k} i a_i e_{k-i}.
    pub fn exp(&self) -> Self {
        let n = self.coeffs.len();
        let mut coeffs = vec![0.0; n];
        coeffs[0] = self.coeffs[0].exp();
        for k in 1..n {
            let mut acc = 0.0;
            for i in 1..=k {
                acc += i as f64 * self.coeffs[i] * coeffs[k - i];
            }
            coeffs[k] = acc / k as f64;
        }
        Self {
            center: self.center,
            coeffs,
        }
    }

    /// log of the jet; the constant term must be positive.
    pub fn log(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 <= 0.0 {
            return Err(Error::SingularJet(format!(
                "log requires a positive constant term, got {a0}"
            )));
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![0.0; n];
        coeffs[0] = a0.ln();
        for k in 1..n {
            let mut acc = self.coeffs[k] * k as f64;
            for (i, c) in coeffs.iter().enumerate().take(k).skip(1) {
                acc -= i as f64 * c * self.coeffs[k - i];
            }
            coeffs[k] = acc / (k as f64 * a0);
        }
        Ok(Self {
            center: self.center,
            coeffs,
        })
    }

    /// Constant power a^p; the constant term must be positive.
    ///
    /// Uses the first-order recurrence from w' a = p a' w, which is exact for
    /// polynomial inputs (unlike exp(p·log a)).
    pub fn pow_const(&self, p: f64) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 <= 0.0 {
            return Err(Error::SingularJet(format!(
                "pow_const requires a positive constant term, got {a0}"
            )));
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![0.0; n];
        coeffs[0] = a0.powf(p);
        for k in 1..n {
            // k w_k a_0 = sum_{i=1..k} (p i - (k - i)) a_i w_{k-i}
            let mut acc = 0.0;
            for i in 1..=k {
                acc += (p * i as f64 - (k - i) as f64) * self.coeffs[i] * coeffs[k - i];
            }
            coeffs[k] = acc / (k as f64 * a0);
        }
        Ok(Self {
            center: self.center,
            coeffs,
        })
    }
}
