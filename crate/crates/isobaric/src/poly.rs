//! Sparse isobaric polynomials and core coefficient vectors.
//!
//! An [`IsobaricPoly`] is a Z-linear combination of monomials `t1^a1...tk^ak`
//! keyed by the partition [`Alpha`] of its exponent vector; the isobaric
//! degree of a monomial is `sum j * a_j`. Storage is a sorted map in the
//! canonical term order, so printing, equality, and leading-term extraction
//! are all deterministic.
//!
//! A [`Core`] is the numeric object the polynomials are evaluated at: the
//! coefficient vector `(t1, ..., tk)` of a degree-k linear recursion, or a
//! truncated power-series core when the natural recursion never terminates.

use crate::error::{Error, Result};
use crate::partitions::Alpha;
use crate::ring::{int, int_divides, mod_floor_u64, Int, Rat, Ring};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsobaricPoly {
    terms: BTreeMap<Alpha, Int>,
}

impl IsobaricPoly {
    pub fn zero() -> Self {
        IsobaricPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Int::one())
    }

    pub fn constant(c: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Alpha::empty(), c);
        }
        IsobaricPoly { terms }
    }

    /// The variable `t_j`.
    pub fn var(j: usize) -> Self {
        Self::monomial(Alpha::single(j), Int::one())
    }

    pub fn monomial(alpha: Alpha, coeff: Int) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(alpha, coeff);
        }
        IsobaricPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Alpha, Int)>) -> Self {
        let mut p = Self::zero();
        for (alpha, c) in pairs {
            p.accumulate(alpha, c);
        }
        p
    }

    fn accumulate(&mut self, alpha: Alpha, c: Int) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(alpha.clone()).or_insert_with(Int::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `t^alpha`, zero when absent.
    pub fn coefficient(&self, alpha: &Alpha) -> Int {
        self.terms.get(alpha).cloned().unwrap_or_else(Int::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Alpha, &Int)> {
        self.terms.iter()
    }

    /// Common isobaric degree of all terms; `None` for 0 and for
    /// inhomogeneous polynomials.
    pub fn grade(&self) -> Option<u64> {
        let mut degrees = self.terms.keys().map(|a| a.isobaric_degree());
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.accumulate(alpha.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (alpha, c) in &other.terms {
            out.accumulate(alpha.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        IsobaricPoly {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.accumulate(a.plus(b), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        IsobaricPoly {
            terms: self
                .terms
                .iter()
                .map(|(a, v)| (a.clone(), v * c))
                .collect(),
        }
    }

    /// Largest term in the canonical order, used by exact division.
    fn leading_term(&self) -> Option<(&Alpha, &Int)> {
        self.terms.iter().next_back()
    }

    /// Exact polynomial division: `Some(q)` with `self = q * divisor` or
    /// `None`. Cancels leading terms in the canonical order; for an exact
    /// quotient every cancellation step succeeds because the order respects
    /// products.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let (dalpha, dcoeff) = {
            let (a, c) = divisor.leading_term().expect("nonzero divisor");
            (a.clone(), c.clone())
        };
        while !rem.is_zero() {
            let (ralpha, rcoeff) = {
                let (a, c) = rem.leading_term().expect("nonzero remainder");
                (a.clone(), c.clone())
            };
            let qalpha = ralpha.checked_sub(&dalpha)?;
            let (qc, r) = rcoeff.div_rem(&dcoeff);
            if !r.is_zero() {
                return None;
            }
            let qterm = Self::monomial(qalpha, qc);
            rem = rem.sub(&qterm.mul(divisor));
            quot = quot.add(&qterm);
        }
        Some(quot)
    }

    /// Value at a core, strictly: every variable occurring in the polynomial
    /// must be supplied by the core. `modulus` reduces to the canonical
    /// residue in `0..m`.
    pub fn evaluate(&self, core: &Core, modulus: Option<u64>) -> Result<Int> {
        let mut acc = Int::zero();
        for (alpha, c) in &self.terms {
            let mut term = c.clone();
            for (j, m) in alpha.iter() {
                let tj = core.get(j)?;
                term *= tj.pow(m);
            }
            acc += term;
        }
        Ok(match modulus {
            Some(m) => int(mod_floor_u64(&acc, m) as i64),
            None => acc,
        })
    }
}

impl Ring for IsobaricPoly {
    fn zero() -> Self {
        IsobaricPoly::zero()
    }

    fn one() -> Self {
        IsobaricPoly::one()
    }

    fn from_int(v: &Int) -> Self {
        IsobaricPoly::constant(v.clone())
    }

    fn is_zero(&self) -> bool {
        IsobaricPoly::is_zero(self)
    }

    fn add(&self, other: &Self) -> Self {
        IsobaricPoly::add(self, other)
    }

    fn sub(&self, other: &Self) -> Self {
        IsobaricPoly::sub(self, other)
    }

    fn mul(&self, other: &Self) -> Self {
        IsobaricPoly::mul(self, other)
    }

    fn neg(&self) -> Self {
        IsobaricPoly::neg(self)
    }

    fn exact_div(&self, other: &Self) -> Option<Self> {
        IsobaricPoly::exact_div(self, other)
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for IsobaricPoly {
    /// Canonical rendering: terms in the canonical order joined with signs,
    /// unit coefficients suppressed, e.g.
    /// `t1^4 + 3 t1^2 t2 + t2^2 + 2 t1 t3 + t4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (alpha, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            let vars: Vec<String> = alpha
                .iter()
                .map(|(j, m)| {
                    if m == 1 {
                        format!("t{j}")
                    } else {
                        format!("t{j}^{m}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag} ")?;
                }
                write!(f, "{}", vars.join(" "))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreKind {
    /// A degree-k recursion: `t_m = 0` for m > k wherever the zero-extension
    /// convention applies.
    Finite,
    /// A power-series core known only through its stored coefficients.
    TruncatedSeries,
}

/// Coefficient vector `(t1, ..., tk)` of a linear recursion, or the leading
/// coefficients of a series core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Core {
    coeffs: Vec<Int>,
    kind: CoreKind,
}

impl Core {
    pub fn finite(coeffs: Vec<Int>) -> Self {
        Core {
            coeffs,
            kind: CoreKind::Finite,
        }
    }

    pub fn finite_i64(coeffs: &[i64]) -> Self {
        Self::finite(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn series(coeffs: Vec<Int>) -> Self {
        Core {
            coeffs,
            kind: CoreKind::TruncatedSeries,
        }
    }

    pub fn kind(&self) -> CoreKind {
        self.kind
    }

    pub fn coeffs(&self) -> &[Int] {
        &self.coeffs
    }

    /// Degree k for a finite core, `None` for a series core.
    pub fn finite_degree(&self) -> Option<usize> {
        match self.kind {
            CoreKind::Finite => Some(self.coeffs.len()),
            CoreKind::TruncatedSeries => None,
        }
    }

    /// How far the coefficients are known.
    pub fn known_through(&self) -> usize {
        self.coeffs.len()
    }

    /// Strict lookup of `t_j`, 1-indexed. Finite cores do not supply
    /// anything past their degree; series cores do not supply anything past
    /// their truncation.
    pub fn get(&self, j: usize) -> Result<Int> {
        if j >= 1 && j <= self.coeffs.len() {
            return Ok(self.coeffs[j - 1].clone());
        }
        match self.kind {
            CoreKind::Finite => Err(Error::MissingCoreCoefficient {
                index: j,
                degree: self.coeffs.len(),
            }),
            CoreKind::TruncatedSeries => Err(Error::SeriesTruncated {
                index: j,
                known: self.coeffs.len(),
            }),
        }
    }

    /// Lookup under the zero-extension rule: a finite core reads as 0 past
    /// its degree; a series core still errors past its truncation because
    /// those coefficients exist but are unknown.
    pub fn get_extended(&self, j: usize) -> Result<Int> {
        if j >= 1 && j <= self.coeffs.len() {
            return Ok(self.coeffs[j - 1].clone());
        }
        match self.kind {
            CoreKind::Finite => Ok(Int::zero()),
            CoreKind::TruncatedSeries => Err(Error::SeriesTruncated {
                index: j,
                known: self.coeffs.len(),
            }),
        }
    }

    /// `t_k != 0` for a finite core, the condition for rows at negative
    /// indices and for pure periodicity mod p not dividing `t_k`.
    pub fn is_invertible(&self) -> bool {
        matches!(self.kind, CoreKind::Finite)
            && self.coeffs.last().map(|t| !t.is_zero()).unwrap_or(false)
    }

    /// F-values `F_0..F_n`: all-ones weights, `F_0 = 1`,
    /// `F_n = sum_{j=1}^{n-1} t_j F_{n-j} + t_n` under zero extension.
    pub fn gfp_values(&self, n_max: usize) -> Result<Vec<Int>> {
        let mut f = vec![Int::one()];
        for n in 1..=n_max {
            let mut acc = self.get_extended(n)?;
            let top = match self.kind {
                CoreKind::Finite => self.coeffs.len().min(n - 1),
                CoreKind::TruncatedSeries => n - 1,
            };
            for j in 1..=top {
                let tj = &self.coeffs[j - 1];
                if !tj.is_zero() {
                    acc += tj * &f[n - j];
                }
            }
            f.push(acc);
        }
        Ok(f)
    }

    /// G-values `G_1..G_n`: identity weights,
    /// `G_n = sum_{j=1}^{n-1} t_j G_{n-j} + n t_n`. The index-0 value is a
    /// convention (degree k for finite cores) and is reported separately by
    /// the callers that want it.
    pub fn glp_values(&self, n_max: usize) -> Result<Vec<Int>> {
        let mut g: Vec<Int> = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let mut acc = self.get_extended(n)? * int(n as i64);
            let top = match self.kind {
                CoreKind::Finite => self.coeffs.len().min(n - 1),
                CoreKind::TruncatedSeries => n - 1,
            };
            for j in 1..=top {
                let tj = &self.coeffs[j - 1];
                if !tj.is_zero() {
                    acc += tj * &g[n - j - 1];
                }
            }
            g.push(acc);
        }
        Ok(g)
    }

    /// The coefficients as rationals, handy for the numeric matrix layer.
    pub fn coeffs_rat(&self) -> Vec<Rat> {
        self.coeffs.iter().map(|c| Rat::from_integer(c.clone())).collect()
    }

    /// True when p divides t_k (the degenerate case for periods mod p).
    pub fn tk_divisible_by(&self, p: u64) -> Result<bool> {
        match self.kind {
            CoreKind::Finite => {
                let tk = self.coeffs.last().cloned().unwrap_or_else(Int::zero);
                Ok(int_divides(&int(p as i64), &tk))
            }
            CoreKind::TruncatedSeries => Err(Error::FiniteCoreRequired),
        }
    }

    pub fn label(&self) -> String {
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The symbolic core of degree k: the variables `t1..tk` themselves.
pub fn symbolic_core(k: usize) -> Vec<IsobaricPoly> {
    (1..=k).map(IsobaricPoly::var).collect()
}

/// Symbolic `t_m` under zero extension past degree k.
pub fn symbolic_t(m: usize, k: usize) -> IsobaricPoly {
    if m >= 1 && m <= k {
        IsobaricPoly::var(m)
    } else {
        IsobaricPoly::zero()
    }
}
