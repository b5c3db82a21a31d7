//! Truncated formal power series over any [`Ring`].
//!
//! Just enough arithmetic for the generating-function routes: addition,
//! truncated product, and division by a series whose constant term is a
//! unit. Instantiated over rationals for numeric work and over
//! [`crate::poly::IsobaricPoly`] for the symbolic routes.

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Coefficients of `sum c_i y^i` for `i < len`; the truncation order is
/// carried by the vector length.
#[derive(Debug, Clone, PartialEq)]
pub struct Series<T: Ring> {
    coeffs: Vec<T>,
}

impl<T: Ring> Series<T> {
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "series need at least the constant term");
        Series { coeffs }
    }

    pub fn zero(len: usize) -> Self {
        Series {
            coeffs: vec![T::zero(); len.max(1)],
        }
    }

    pub fn one(len: usize) -> Self {
        let mut s = Self::zero(len);
        s.coeffs[0] = T::one();
        s
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn coeff(&self, i: usize) -> &T {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        Series {
            coeffs: (0..len)
                .map(|i| self.coeffs[i].add(&other.coeffs[i]))
                .collect(),
        }
    }

    /// Product truncated to the shorter operand.
    pub fn mul(&self, other: &Self) -> Self {
        let len = self.len().min(other.len());
        let mut out = vec![T::zero(); len];
        for i in 0..len {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..len - i {
                if other.coeffs[j].is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add(&self.coeffs[i].mul(&other.coeffs[j]));
            }
        }
        Series { coeffs: out }
    }

    /// Quotient truncated to the shorter operand. Solves the triangular
    /// system `q_n = (a_n - sum_{j>=1} b_j q_{n-j}) / b_0`; fails when the
    /// constant term of the divisor does not divide exactly at some step.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let len = self.len().min(other.len());
        let b0 = &other.coeffs[0];
        if b0.is_zero() {
            return Err(Error::SeriesLeadingNotUnit(b0.render()));
        }
        let mut q = vec![T::zero(); len];
        for n in 0..len {
            let mut acc = self.coeffs[n].clone();
            for j in 1..=n {
                if !other.coeffs[j].is_zero() && !q[n - j].is_zero() {
                    acc = acc.sub(&other.coeffs[j].mul(&q[n - j]));
                }
            }
            q[n] = acc
                .exact_div(b0)
                .ok_or_else(|| Error::SeriesLeadingNotUnit(b0.render()))?;
        }
        Ok(Series { coeffs: q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, Rat};

    fn s(vals: &[i64]) -> Series<Rat> {
        Series::new(vals.iter().map(|&v| rat(v)).collect())
    }

    #[test]
    fn geometric_series_by_division() {
        // 1 / (1 - y) = 1 + y + y^2 + ...
        let num = s(&[1, 0, 0, 0, 0, 0]);
        let den = s(&[1, -1, 0, 0, 0, 0]);
        assert_eq!(num.div(&den).unwrap(), s(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = s(&[1, 3, -2, 0, 7, 1]);
        let b = s(&[2, -1, 4, 0, 0, 5]);
        let prod = a.mul(&b);
        assert_eq!(prod.div(&b).unwrap(), a);
        assert_eq!(prod.div(&a).unwrap(), b);
    }

    #[test]
    fn zero_constant_term_is_rejected() {
        let a = s(&[1, 1, 1]);
        let b = s(&[0, 1, 0]);
        assert!(a.div(&b).is_err());
    }

    #[test]
    fn truncation_follows_the_shorter_operand() {
        let a = s(&[1, 1, 1, 1, 1, 1]);
        let b = s(&[1, 2]);
        assert_eq!(a.mul(&b).len(), 2);
        assert_eq!(a.add(&b).len(), 2);
    }
}
