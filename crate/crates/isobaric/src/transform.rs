//! Operator algebra on value sequences: the convolution product and its
//! inverse, the logarithm/exponential pair that exchanges all-ones (F) and
//! identity-weight (G) sequences, the isosine/isocosine split, and the core
//! product realizing entrywise sums of G-sequences.
//!
//! Sequences are exact rationals throughout. Convolution-style operators
//! want index 0 present; the log/exp pair operates on indices 1..N and
//! leaves any index-0 convention to the caller.

use crate::error::{Error, Result};
use crate::poly::Core;
use crate::ring::{int, rat_of, Int, Rat, Ring};

/// A finite run of exact rational values starting at index 0 or 1.
#[derive(Debug, Clone, PartialEq)]
pub struct ValueSeq {
    start: usize,
    values: Vec<Rat>,
}

impl ValueSeq {
    pub fn new(start: usize, values: Vec<Rat>) -> Self {
        assert!(start <= 1, "sequences start at index 0 or 1");
        assert!(!values.is_empty(), "empty sequence");
        ValueSeq { start, values }
    }

    pub fn from_i64(start: usize, values: &[i64]) -> Self {
        Self::new(start, values.iter().map(|&v| Rat::from_int(&int(v))).collect())
    }

    pub fn from_ints(start: usize, values: &[Int]) -> Self {
        Self::new(start, values.iter().map(rat_of).collect())
    }

    /// The convolution unit δ = (1, 0, 0, ...).
    pub fn delta(n_max: usize) -> Self {
        let mut values = vec![Rat::zero(); n_max + 1];
        values[0] = Rat::one();
        ValueSeq { start: 0, values }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.start + self.values.len() - 1
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Value at absolute index n.
    pub fn get(&self, n: usize) -> &Rat {
        assert!(
            n >= self.start && n <= self.end(),
            "index {} outside [{}, {}]",
            n,
            self.start,
            self.end()
        );
        &self.values[n - self.start]
    }

    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rat)> {
        self.values.iter().enumerate().map(move |(i, v)| (self.start + i, v))
    }

    /// All entries as integers, or None if any denominator survives.
    pub fn to_ints(&self) -> Option<Vec<Int>> {
        self.values
            .iter()
            .map(|v| v.is_integer().then(|| v.to_integer()))
            .collect()
    }

    fn require_start(&self, expected: usize) -> Result<()> {
        if self.start != expected {
            return Err(Error::StartIndexMismatch {
                expected,
                got: self.start,
            });
        }
        Ok(())
    }

    fn require_through(&self, n_max: usize) -> Result<()> {
        if self.end() < n_max {
            return Err(Error::InsufficientValues {
                required: n_max + 1 - self.start,
                got: self.values.len(),
            });
        }
        Ok(())
    }
}

/// (a∗b)_n = Σ_{j} a_{n−j} b_j over any coefficient ring.
pub fn convolve_ring<T: Ring>(a: &[T], b: &[T], n_max: usize) -> Result<Vec<T>> {
    for have in [a.len(), b.len()] {
        if have < n_max + 1 {
            return Err(Error::InsufficientValues {
                required: n_max + 1,
                got: have,
            });
        }
    }
    Ok((0..=n_max)
        .map(|n| {
            let mut acc = T::zero();
            for j in 0..=n {
                acc = acc.add(&a[n - j].mul(&b[j]));
            }
            acc
        })
        .collect())
}

/// Convolution product of two index-0 value sequences through n_max.
pub fn convolve(a: &ValueSeq, b: &ValueSeq, n_max: usize) -> Result<ValueSeq> {
    a.require_start(0)?;
    b.require_start(0)?;
    a.require_through(n_max)?;
    b.require_through(n_max)?;
    let out = convolve_ring(&a.values[..=n_max], &b.values[..=n_max], n_max)?;
    Ok(ValueSeq::new(0, out))
}

/// The sequence Q with P∗Q = δ through n_max, by the triangular recursion
/// Q_n = −(Σ_{j<n} P_{n−j} Q_j)/P₀.
pub fn conv_inverse(p: &ValueSeq, n_max: usize) -> Result<ValueSeq> {
    p.require_start(0)?;
    p.require_through(n_max)?;
    let p0 = p.get(0);
    if p0.is_zero() {
        return Err(Error::NotConvInvertible(p0.render()));
    }
    let mut q: Vec<Rat> = Vec::with_capacity(n_max + 1);
    q.push(Rat::one() / p0.clone());
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for (j, qj) in q.iter().enumerate() {
            acc = acc.add(&p.get(n - j).mul(qj));
        }
        q.push(-(acc / p0.clone()));
    }
    Ok(ValueSeq::new(0, q))
}

/// The logarithm-style operator on indices 1..=n_max:
/// L_n(P) = n·P_n − Σ_{j=1}^{n−1} j·t_{n−j}·P_j, with t_m = 0 past the
/// part bound. Sends the all-ones value sequence to the identity-weight one.
pub fn iso_log(core: &Core, p: &ValueSeq, n_max: usize) -> Result<ValueSeq> {
    assert!(n_max >= 1);
    p.require_through(n_max)?;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = p.get(n).mul(&Rat::from_int(&int(n as i64)));
        for j in 1..n {
            let t = rat_of(&core.get_extended(n - j)?);
            let jf = Rat::from_int(&int(j as i64));
            acc = acc.sub(&jf.mul(&t).mul(p.get(j)));
        }
        out.push(acc);
    }
    Ok(ValueSeq::new(1, out))
}

/// The exponential-style inverse of [`iso_log`]:
/// E_n(P) = (Σ_{j=1}^{n−1} F_{n−j}·P_j + P_n)/n with F the all-ones value
/// sequence of the core.
pub fn iso_exp(core: &Core, p: &ValueSeq, n_max: usize) -> Result<ValueSeq> {
    assert!(n_max >= 1);
    p.require_through(n_max)?;
    let f = core.gfp_values(n_max - 1)?;
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut acc = p.get(n).clone();
        for j in 1..n {
            acc = acc.add(&rat_of(&f[n - j]).mul(p.get(j)));
        }
        out.push(acc / Rat::from_int(&int(n as i64)));
    }
    Ok(ValueSeq::new(1, out))
}

/// Isosine and isocosine value sequences of a core.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigPair {
    pub sine: ValueSeq,
    pub cosine: ValueSeq,
}

/// C₀ = 1, S₀ = 0, and for n ≥ 1 the half-sum split
/// C_n = (F_n − t_n)/2, S_n = (F_n + t_n)/2, so that S + C telescopes to F
/// and C∗C − S∗S is the convolution unit.
pub fn isotrig(core: &Core, n_max: usize) -> Result<TrigPair> {
    let f = core.gfp_values(n_max)?;
    let half = Rat::new(int(1), int(2));
    let mut sine = vec![Rat::zero()];
    let mut cosine = vec![Rat::one()];
    for n in 1..=n_max {
        let fn_ = rat_of(&f[n]);
        let tn = rat_of(&core.get_extended(n)?);
        cosine.push(fn_.sub(&tn).mul(&half));
        sine.push(fn_.add(&tn).mul(&half));
    }
    Ok(TrigPair {
        sine: ValueSeq::new(0, sine),
        cosine: ValueSeq::new(0, cosine),
    })
}

/// The core whose characteristic polynomial is the product of the two
/// operands': 1 − p_c(y) = (1 − p_a(y))(1 − p_b(y)). Its identity-weight
/// values are the entrywise sums of the operands' for n ≥ 1.
pub fn core_product(a: &Core, b: &Core) -> Result<Core> {
    let ka = a.finite_degree().ok_or(Error::FiniteCoreRequired)?;
    let kb = b.finite_degree().ok_or(Error::FiniteCoreRequired)?;
    let mut u = vec![Int::from(1)];
    u.extend(a.coeffs().iter().map(|t| -t.clone()));
    let mut v = vec![Int::from(1)];
    v.extend(b.coeffs().iter().map(|t| -t.clone()));
    let mut w = vec![Int::from(0); ka + kb + 1];
    for (i, ui) in u.iter().enumerate() {
        for (j, vj) in v.iter().enumerate() {
            w[i + j] += ui * vj;
        }
    }
    Ok(Core::finite(w[1..].iter().map(|c| -c.clone()).collect()))
}
