//! Exact arithmetic base layer.
//!
//! Everything in the crate computes over arbitrary-precision integers
//! ([`Int`]) and rationals ([`Rat`]); nothing ever touches floating point.
//! The [`Ring`] trait is the small commutative-ring interface that lets the
//! matrix and series algorithms run unchanged over rationals and over
//! polynomials.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for small integer literals.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand for integral rationals.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

pub fn rat_of(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

/// Renders a rational as `n` when integral and `n/d` otherwise. The reduced
/// form always carries a positive denominator, so the sign sits on the
/// numerator.
pub fn render_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Commutative ring with an exact-division partial operation, enough for
/// fraction-free elimination, truncated series division, and the Hessenberg
/// condensations.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: &Int) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `Some(q)` with `self = q * other` when the division is exact.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    fn render(&self) -> String;
}

impl Ring for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }

    fn one() -> Self {
        <Rat as One>::one()
    }

    fn from_int(v: &Int) -> Self {
        Rat::from_integer(v.clone())
    }

    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        if <Rat as Zero>::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }

    fn render(&self) -> String {
        render_rat(self)
    }
}

/// True exactly when `m` divides `v`.
pub fn int_divides(m: &Int, v: &Int) -> bool {
    if m.is_zero() {
        return v.is_zero();
    }
    (v % m).is_zero()
}

/// Floor residue in `0..m`, the canonical representative mod `m`.
pub fn mod_floor_u64(v: &Int, m: u64) -> u64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    v.mod_floor(&int(m as i64)).to_u64().expect("residue fits u64")
}

/// Trial-division primality, adequate for the word-sized moduli the period
/// and ramification machinery takes.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// n! as a big integer.
pub fn factorial(n: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= int(i as i64);
    }
    acc
}

/// Binomial coefficient C(n, k) by the usual incremental product; every
/// intermediate division is exact.
pub fn binomial(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * int((n - i) as i64) / int((i + 1) as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_rendering_hides_unit_denominators() {
        assert_eq!(render_rat(&rat(7)), "7");
        assert_eq!(render_rat(&Rat::new(int(3), int(2))), "3/2");
        assert_eq!(render_rat(&Rat::new(int(-3), int(2))), "-3/2");
        assert_eq!(render_rat(&Rat::new(int(3), int(-2))), "-3/2");
    }

    #[test]
    fn primality_small_values() {
        let primes: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(!is_prime(1));
        assert!(is_prime(7919));
        assert!(!is_prime(7917));
    }

    #[test]
    fn binomial_and_factorial_agree() {
        assert_eq!(binomial(10, 3), int(120));
        assert_eq!(binomial(10, 0), int(1));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(factorial(6), int(720));
        assert_eq!(
            binomial(20, 7),
            factorial(20) / (factorial(7) * factorial(13))
        );
    }

    #[test]
    fn mod_floor_is_canonical() {
        assert_eq!(mod_floor_u64(&int(-1), 5), 4);
        assert_eq!(mod_floor_u64(&int(13), 5), 3);
        assert_eq!(mod_floor_u64(&int(0), 5), 0);
    }
}
