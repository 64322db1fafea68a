//! Dense integer polynomials and the polynomials attached to words.

mod certificate;
mod construct;

use std::fmt;

use num_complex::Complex64;

pub use certificate::{irreducibility_certificate, Certificate};
pub use construct::{
    construct_unchecked, kneading_polynomial, kneading_polynomial_from_aux, parry_polynomial,
    polynomial_of,
    preperiodic_polynomial, remove_trivial_factors, TrivialFactors,
};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("integer overflow while building a polynomial")]
    Overflow,
    #[error("division by z - ({divisor}) left a nonzero remainder {remainder}")]
    NonzeroRemainder { divisor: i64, remainder: i64 },
}

/// Integer polynomial, coefficients in ascending degree, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> IntPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Coefficients from highest degree down.
    pub fn from_descending(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().rev().copied().collect())
    }

    pub fn zero() -> IntPoly {
        IntPoly { coeffs: Vec::new() }
    }

    /// `z^n`.
    pub fn monomial(n: usize) -> IntPoly {
        let mut c = vec![0; n + 1];
        c[n] = 1;
        IntPoly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> i64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coefficient_sum(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.unsigned_abs() as f64).sum()
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    /// `z^deg · p(1/z)`.
    pub fn reversed(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().rev().copied().collect())
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * i as i64)
                .collect(),
        )
    }

    pub fn checked_add(&self, other: &IntPoly) -> Result<IntPoly, PolyError> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)).ok_or(PolyError::Overflow))
            .collect::<Result<_, _>>()?;
        Ok(IntPoly::new(c))
    }

    pub fn checked_sub(&self, other: &IntPoly) -> Result<IntPoly, PolyError> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &IntPoly) -> Result<IntPoly, PolyError> {
        if self.is_zero() || other.is_zero() {
            return Ok(IntPoly::zero());
        }
        let mut c = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(PolyError::Overflow)?;
                c[i + j] = c[i + j].checked_add(t).ok_or(PolyError::Overflow)?;
            }
        }
        Ok(IntPoly::new(c))
    }

    /// Exact division by `z - a`.
    pub fn div_linear(&self, a: i64) -> Result<IntPoly, PolyError> {
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![0i64; n - 1];
        let mut carry = 0i64;
        for i in (0..n).rev() {
            let v = self.coeffs[i]
                .checked_add(carry.checked_mul(a).ok_or(PolyError::Overflow)?)
                .ok_or(PolyError::Overflow)?;
            if i == 0 {
                if v != 0 {
                    return Err(PolyError::NonzeroRemainder {
                        divisor: a,
                        remainder: v,
                    });
                }
            } else {
                q[i - 1] = v;
            }
            carry = v;
        }
        Ok(IntPoly::new(q))
    }

    /// Exact value at an integer point, if it fits.
    pub fn eval_i64(&self, x: i64) -> Option<i64> {
        let mut acc: i64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc.checked_mul(x)?.checked_add(c)?;
        }
        Some(acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c as f64)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c as f64)
    }

    /// `|p(z)|` divided by `Σ |c_i| |z|^i`, a scale-free residual.
    pub fn scaled_residual(&self, z: Complex64) -> f64 {
        let r = z.norm();
        let scale = self
            .coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &c| acc * r + c.unsigned_abs() as f64);
        if scale == 0.0 {
            0.0
        } else {
            self.eval(z).norm() / scale
        }
    }

    /// Divides out the largest power of `z`, returning the quotient and the
    /// power removed.
    pub fn strip_z_power(&self) -> (IntPoly, usize) {
        let k = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if k == self.coeffs.len() {
            return (IntPoly::zero(), 0);
        }
        (IntPoly::new(self.coeffs[k..].to_vec()), k)
    }

    /// `q(z^k)` for `q = self`.
    pub fn compose_power(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![0; self.degree() * k + 1];
        for (i, &v) in self.coeffs.iter().enumerate() {
            c[i * k] = v;
        }
        IntPoly::new(c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c < 0 { " - " } else { " + " })?;
            }
            first = false;
            match (i, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("z")?,
                (1, m) => write!(f, "{m}z")?,
                (e, 1) => write!(f, "z^{e}")?,
                (e, m) => write!(f, "{m}z^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
