//! Partitions with bounded part size, in the canonical term order.
//!
//! A partition of `n` with parts at most `k` is stored as a multiplicity
//! vector: entry `j` (1-indexed) counts the parts equal to `j`, so
//! `sum j * alpha_j = n`. These vectors double as monomial exponents
//! `t1^a1 ... tk^ak`, which is why the ordering defined here is also the
//! term order used everywhere polynomials are stored or printed.
//!
//! The order is graded reverse-lexicographic read off the multiplicities:
//! lower isobaric degree first, then more parts first, ties broken so that
//! the vector whose topmost differing entry is smaller comes first. For
//! n = 4 that yields t1^4, t1^2 t2, t2^2, t1 t3, t4.

use crate::error::{Error, Result};
use crate::ring::{factorial, int, Int};
use crate::weights::WeightVector;
use num_traits::Zero;
use std::cmp::Ordering;
use std::fmt;

/// Multiplicity vector of a partition; trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alpha {
    mults: Vec<u32>,
}

impl Alpha {
    pub fn new(mut mults: Vec<u32>) -> Self {
        while mults.last() == Some(&0) {
            mults.pop();
        }
        Alpha { mults }
    }

    /// The empty partition (of 0); as a monomial, the constant 1.
    pub fn empty() -> Self {
        Alpha { mults: Vec::new() }
    }

    /// The single part `j`, i.e. the monomial `t_j`.
    pub fn single(j: usize) -> Self {
        assert!(j >= 1, "parts are 1-indexed");
        let mut mults = vec![0; j];
        mults[j - 1] = 1;
        Alpha { mults }
    }

    /// Multiplicity of part `j` (1-indexed).
    pub fn multiplicity(&self, j: usize) -> u32 {
        if j >= 1 {
            self.mults.get(j - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    /// Largest part present, 0 for the empty partition.
    pub fn max_part(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// `sum j * alpha_j`: the weight the partition carries as a monomial.
    pub fn isobaric_degree(&self) -> u64 {
        self.mults
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as u64 + 1) * m as u64)
            .sum()
    }

    /// `|alpha| = sum alpha_j`: the number of parts.
    pub fn length(&self) -> u64 {
        self.mults.iter().map(|&m| m as u64).sum()
    }

    /// Support as `(part, multiplicity)` pairs, smallest part first.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.mults
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }

    /// Componentwise sum, the exponent of a monomial product.
    pub fn plus(&self, other: &Alpha) -> Alpha {
        let len = self.mults.len().max(other.mults.len());
        let mults = (1..=len)
            .map(|j| self.multiplicity(j) + other.multiplicity(j))
            .collect();
        Alpha::new(mults)
    }

    /// Componentwise difference, `None` when any entry would go negative.
    pub fn checked_sub(&self, other: &Alpha) -> Option<Alpha> {
        if other.mults.len() > self.mults.len() {
            return None;
        }
        let mults = (1..=self.mults.len())
            .map(|j| self.multiplicity(j).checked_sub(other.multiplicity(j)))
            .collect::<Option<Vec<u32>>>()?;
        Some(Alpha::new(mults))
    }
}

impl Ord for Alpha {
    fn cmp(&self, other: &Self) -> Ordering {
        self.isobaric_degree()
            .cmp(&other.isobaric_degree())
            .then_with(|| other.length().cmp(&self.length()))
            .then_with(|| {
                let top = self.mults.len().max(other.mults.len());
                for j in (1..=top).rev() {
                    let a = self.multiplicity(j);
                    let b = other.multiplicity(j);
                    if a != b {
                        // Smaller topmost entry sorts first.
                        return a.cmp(&b);
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Alpha {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})",
            self.mults
                .iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Every partition of `n` with parts at most `k`, in the canonical order.
/// `n = 0` yields exactly the empty partition.
pub fn enumerate_partitions(n: u64, k: usize) -> Vec<Alpha> {
    fn rec(remaining: u64, largest: usize, mults: &mut Vec<u32>, out: &mut Vec<Alpha>) {
        if remaining == 0 {
            out.push(Alpha::new(mults.clone()));
            return;
        }
        if largest == 0 {
            return;
        }
        let top = remaining / largest as u64;
        for m in 0..=top {
            mults[largest - 1] = m as u32;
            rec(remaining - m * largest as u64, largest - 1, mults, out);
        }
        mults[largest - 1] = 0;
    }

    let bound = k.min(n as usize);
    let mut mults = vec![0u32; bound];
    let mut out = Vec::new();
    rec(n, bound, &mut mults, &mut out);
    out.sort();
    out
}

/// Multinomial coefficient `|alpha|! / prod alpha_j!`.
pub fn multinomial(alpha: &Alpha) -> Int {
    let mut denom = Int::from(1);
    for (_, m) in alpha.iter() {
        denom *= factorial(m as u64);
    }
    factorial(alpha.length()) / denom
}

/// Coefficient of `t^alpha` in the weighted isobaric polynomial:
/// `multinomial(alpha) * (sum_j omega_j alpha_j) / |alpha|`.
///
/// Integrality is guaranteed for integer weights; a non-integral result is
/// reported rather than rounded because it can only mean a broken caller.
///
/// Edge cases: `alpha` must be nonempty (index-0 polynomials are handled by
/// the callers' conventions, not here).
pub fn wip_coefficient(alpha: &Alpha, omega: &WeightVector) -> Result<Int> {
    debug_assert!(!alpha.is_empty(), "coefficient of the empty partition is conventional");
    let mut weighted = Int::zero();
    for (j, m) in alpha.iter() {
        weighted += omega.get(j)? * int(m as i64);
    }
    let numerator = multinomial(alpha) * weighted;
    let length = alpha.length();
    let (q, r) = num_integer::Integer::div_rem(&numerator, &int(length as i64));
    if !r.is_zero() {
        return Err(Error::NonIntegralCoefficient {
            alpha: alpha.to_string(),
            numerator: numerator.to_string(),
            length,
        });
    }
    Ok(q)
}
