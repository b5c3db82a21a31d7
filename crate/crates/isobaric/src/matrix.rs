//! Companion-matrix machinery: the k×k companion matrix of a core, its
//! doubly infinite row extension (the "window"), Schur-hook entries, the
//! different matrix and its determinant, lower Hessenberg builders, and
//! permanent/determinant algorithms (a fast Hessenberg recursion, fraction
//! free elimination, and a naive permanent oracle for cross-checks).
//!
//! Row conventions for the infinite extension: row n is the row vector
//! e_k·Aⁿ, so rows 1−k..0 form an identity block, row n for n ≥ 1 continues
//! by the forward recursion, and rows below 1−k exist exactly when t_k is
//! invertible. The k×k block of consecutive rows ending at row n is Aⁿ.

use crate::error::{Error, Result};
use crate::poly::{symbolic_t, Core, IsobaricPoly};
use crate::ring::{int, Rat, Ring};
use crate::weights::WeightVector;

#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix<T: Ring> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Ring> SquareMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at row `i`, column `j`, both 0-based.
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.n + j]
    }

    pub fn row_slice(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch in matrix product");
        let n = self.n;
        Self::from_fn(n, |i, j| {
            let mut acc = T::zero();
            for m in 0..n {
                acc = acc.add(&self.get(i, m).mul(other.get(m, j)));
            }
            acc
        })
        .expect("n >= 1")
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::identity(self.n).expect("n >= 1");
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> T {
        let mut acc = T::zero();
        for i in 0..self.n {
            acc = acc.add(self.get(i, i));
        }
        acc
    }

    /// Sum over all permutations of products of entries; factorially
    /// expensive, so capped, and used only as a cross-check oracle.
    pub fn permanent_naive(&self) -> Result<T> {
        const LIMIT: usize = 8;
        if self.n > LIMIT {
            return Err(Error::PermanentTooLarge {
                n: self.n,
                limit: LIMIT,
            });
        }
        fn expand<T: Ring>(m: &SquareMatrix<T>, row: usize, used: &mut [bool]) -> T {
            if row == m.n {
                return T::one();
            }
            let mut acc = T::zero();
            for col in 0..m.n {
                if used[col] || m.get(row, col).is_zero() {
                    continue;
                }
                used[col] = true;
                let rest = expand(m, row + 1, used);
                used[col] = false;
                acc = acc.add(&m.get(row, col).mul(&rest));
            }
            acc
        }
        Ok(expand(self, 0, &mut vec![false; self.n]))
    }

    fn require_lower_hessenberg(&self) -> Result<()> {
        for i in 0..self.n {
            for j in (i + 2)..self.n {
                if !self.get(i, j).is_zero() {
                    return Err(Error::NotHessenberg {
                        row: i + 1,
                        col: j + 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Shared leading-principal recursion over lower Hessenberg matrices:
    /// with q₀ = 1,
    ///
    /// ```text
    /// q_i = sum_{j<=i} h_{i,j} (prod_{m=j}^{i-1} s_m) q_{j-1}
    /// ```
    ///
    /// where s_m is the superdiagonal entry h_{m,m+1}, taken as-is for the
    /// permanent and negated for the determinant.
    fn hessenberg_expand(&self, negate_superdiagonal: bool) -> Result<T> {
        self.require_lower_hessenberg()?;
        let n = self.n;
        let mut q = vec![T::one()];
        for i in 1..=n {
            let mut acc = T::zero();
            let mut shift = T::one();
            for j in (1..=i).rev() {
                acc = acc.add(&self.get(i - 1, j - 1).mul(&shift).mul(&q[j - 1]));
                if j >= 2 {
                    let s = self.get(j - 2, j - 1);
                    shift = if negate_superdiagonal {
                        shift.mul(&s.neg())
                    } else {
                        shift.mul(s)
                    };
                }
            }
            q.push(acc);
        }
        Ok(q.pop().expect("n >= 1"))
    }

    /// Permanent of a lower Hessenberg matrix in O(n²) ring operations.
    pub fn permanent_hessenberg(&self) -> Result<T> {
        self.hessenberg_expand(false)
    }

    /// Determinant of a lower Hessenberg matrix in O(n²) ring operations.
    pub fn determinant_hessenberg(&self) -> Result<T> {
        self.hessenberg_expand(true)
    }

    /// Determinant by fraction-free elimination: every division is exact in
    /// the coefficient ring, so this works symbolically as well.
    pub fn determinant(&self) -> Result<T> {
        let n = self.n;
        let mut m: Vec<T> = self.entries.clone();
        let at = |m: &Vec<T>, i: usize, j: usize| m[i * n + j].clone();
        let mut negate = false;
        let mut prev = T::one();
        for r in 0..n.saturating_sub(1) {
            if at(&m, r, r).is_zero() {
                let swap = (r + 1..n).find(|&i| !at(&m, i, r).is_zero());
                match swap {
                    None => return Ok(T::zero()),
                    Some(i) => {
                        for j in 0..n {
                            m.swap(r * n + j, i * n + j);
                        }
                        negate = !negate;
                    }
                }
            }
            for i in r + 1..n {
                for j in r + 1..n {
                    let num = at(&m, r, r)
                        .mul(&at(&m, i, j))
                        .sub(&at(&m, i, r).mul(&at(&m, r, j)));
                    m[i * n + j] = num.exact_div(&prev).ok_or(Error::InexactDivision)?;
                }
                m[i * n + r] = T::zero();
            }
            prev = at(&m, r, r);
        }
        let det = at(&m, n - 1, n - 1);
        Ok(if negate { det.neg() } else { det })
    }
}

impl SquareMatrix<Rat> {
    /// Gauss-Jordan inverse over exact rationals.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.n;
        let mut a: Vec<Vec<Rat>> = (0..n).map(|i| self.row_slice(i).to_vec()).collect();
        let mut b: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        for c in 0..n {
            let pivot = (c..n).find(|&i| !a[i][c].is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap(c, pivot);
            b.swap(c, pivot);
            let p = a[c][c].clone();
            for j in 0..n {
                a[c][j] = &a[c][j] / &p;
                b[c][j] = &b[c][j] / &p;
            }
            for i in 0..n {
                if i == c || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for j in 0..n {
                    a[i][j] = &a[i][j] - &(&f * &a[c][j]);
                    b[i][j] = &b[i][j] - &(&f * &b[c][j]);
                }
            }
        }
        SquareMatrix::from_rows(b)
    }

    /// Integer matrix power, negative exponents via the inverse.
    pub fn powi(&self, e: i64) -> Result<Self> {
        if e >= 0 {
            Ok(self.pow(e as u64))
        } else {
            Ok(self.inverse()?.pow((-e) as u64))
        }
    }
}

/// The k×k companion matrix with symbolic entries: superdiagonal 1s and
/// bottom row (t_k, t_{k-1}, ..., t_1).
pub fn companion_symbolic(k: usize) -> Result<SquareMatrix<IsobaricPoly>> {
    if k == 0 {
        return Err(Error::EmptyMatrix);
    }
    SquareMatrix::from_fn(k, |i, j| {
        if i + 1 == k {
            symbolic_t(k - j, k)
        } else if j == i + 1 {
            IsobaricPoly::one()
        } else {
            IsobaricPoly::zero()
        }
    })
}

/// The companion matrix of a finite numeric core.
pub fn companion_numeric(core: &Core) -> Result<SquareMatrix<Rat>> {
    let k = core.finite_degree().ok_or(Error::FiniteCoreRequired)?;
    if k == 0 {
        return Err(Error::EmptyMatrix);
    }
    let t = core.coeffs_rat();
    SquareMatrix::from_fn(k, |i, j| {
        if i + 1 == k {
            t[k - 1 - j].clone()
        } else if j == i + 1 {
            Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// A contiguous run of rows of the infinite extension of a companion-style
/// matrix, indexed by n ∈ [lo, hi] with n possibly negative.
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixWindow<T: Ring> {
    k: usize,
    lo: i64,
    rows: Vec<Vec<T>>,
}

impl<T: Ring> MatrixWindow<T> {
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.rows.len() as i64 - 1
    }

    pub fn row(&self, n: i64) -> &[T] {
        assert!(
            n >= self.lo && n <= self.hi(),
            "row {} outside window [{}, {}]",
            n,
            self.lo,
            self.hi()
        );
        &self.rows[(n - self.lo) as usize]
    }

    /// Entry in row n, column j with columns 1-based (j = k is rightmost).
    pub fn entry(&self, n: i64, j: usize) -> &T {
        &self.row(n)[j - 1]
    }

    pub fn rightmost(&self, n: i64) -> &T {
        self.entry(n, self.k)
    }

    pub fn rightmost_column(&self) -> Vec<T> {
        self.rows.iter().map(|r| r[self.k - 1].clone()).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = (i64, &[T])> {
        self.rows
            .iter()
            .enumerate()
            .map(move |(i, r)| (self.lo + i as i64, r.as_slice()))
    }

    /// The k×k block of consecutive rows ending at row n.
    pub fn block_ending_at(&self, n: i64) -> Result<SquareMatrix<T>> {
        let k = self.k as i64;
        let rows = (n - k + 1..=n).map(|m| self.row(m).to_vec()).collect();
        SquareMatrix::from_rows(rows)
    }
}

/// One forward application of the companion matrix to a row vector:
/// shift right and feed the last entry through the core.
fn row_forward<T: Ring>(v: &[T], t: &[T]) -> Vec<T> {
    let k = v.len();
    (0..k)
        .map(|c| {
            let mut acc = v[k - 1].mul(&t[k - 1 - c]);
            if c >= 1 {
                acc = acc.add(&v[c - 1]);
            }
            acc
        })
        .collect()
}

/// One backward application, defined when t_k ≠ 0: the new last entry is
/// v_1/t_k and the rest solve the forward recursion for it.
fn row_backward(v: &[Rat], t: &[Rat]) -> Vec<Rat> {
    let k = v.len();
    let last = &v[0] / &t[k - 1];
    let mut w = vec![Rat::zero(); k];
    for j in 1..k {
        w[j - 1] = &v[j] - &(&last * &t[k - 1 - j]);
    }
    w[k - 1] = last;
    w
}

fn walk_window<T: Ring>(
    start: Vec<T>,
    t: &[T],
    lo: i64,
    hi: i64,
    back: Option<&dyn Fn(&[T], &[T]) -> Vec<T>>,
) -> MatrixWindow<T> {
    let k = start.len();
    let size = (hi - lo + 1) as usize;
    let mut rows = vec![Vec::new(); size];
    let place = |n: i64, v: &Vec<T>, rows: &mut Vec<Vec<T>>| {
        if n >= lo && n <= hi {
            rows[(n - lo) as usize] = v.clone();
        }
    };
    place(0, &start, &mut rows);
    if hi > 0 {
        let mut v = start.clone();
        for n in 1..=hi {
            v = row_forward(&v, t);
            place(n, &v, &mut rows);
        }
    }
    if lo < 0 {
        let step = back.expect("backward walk requires an inverse step");
        let mut v = start;
        for n in (lo..0).rev() {
            v = step(&v, t);
            place(n, &v, &mut rows);
        }
    }
    MatrixWindow { k, lo, rows }
}

fn check_bounds(lo: i64, hi: i64) -> Result<()> {
    if hi < lo {
        return Err(Error::WindowBoundsReversed { lo, hi });
    }
    Ok(())
}

/// Rows lo..=hi of the infinite extension of the companion matrix of a
/// finite numeric core. Negative rows require t_k ≠ 0. The rightmost
/// column carries the all-ones (F) value sequence.
pub fn companion_window(core: &Core, lo: i64, hi: i64) -> Result<MatrixWindow<Rat>> {
    let k = core.finite_degree().ok_or(Error::FiniteCoreRequired)?;
    if k == 0 {
        return Err(Error::EmptyMatrix);
    }
    check_bounds(lo, hi)?;
    if lo < 0 && !core.is_invertible() {
        return Err(Error::NotInvertible(k));
    }
    let t = core.coeffs_rat();
    let mut start = vec![Rat::zero(); k];
    start[k - 1] = Rat::one();
    Ok(walk_window(start, &t, lo, hi, Some(&row_backward)))
}

/// Symbolic window rows; only rows n ≥ 0 exist symbolically, since going
/// north would divide by t_k.
pub fn companion_window_symbolic(k: usize, lo: i64, hi: i64) -> Result<MatrixWindow<IsobaricPoly>> {
    if k == 0 {
        return Err(Error::EmptyMatrix);
    }
    check_bounds(lo, hi)?;
    if lo < 0 {
        return Err(Error::SymbolicRowOutOfRange(lo));
    }
    let t: Vec<IsobaricPoly> = (1..=k).map(|j| symbolic_t(j, k)).collect();
    let mut start = vec![IsobaricPoly::zero(); k];
    start[k - 1] = IsobaricPoly::one();
    Ok(walk_window(start, &t, lo, hi, None))
}

/// Hook-shaped Schur polynomial S_{(n, 1^leg)} in the core variables,
/// read off column k−leg of the symbolic window (whose entries carry the
/// alternating sign (−1)^leg). leg = 0 recovers the all-ones polynomial F_n.
pub fn schur_hook(k: usize, n: usize, leg: usize) -> Result<IsobaricPoly> {
    if k == 0 {
        return Err(Error::EmptyMatrix);
    }
    if leg > k - 1 {
        return Err(Error::LegOutOfRange { leg, max: k - 1 });
    }
    let w = companion_window_symbolic(k, n as i64, n as i64)?;
    let entry = w.entry(n as i64, k - leg);
    Ok(if leg % 2 == 0 { entry.clone() } else { entry.neg() })
}

fn different_start_symbolic(k: usize) -> Vec<IsobaricPoly> {
    let mut d: Vec<IsobaricPoly> = (1..k)
        .map(|j| symbolic_t(k - j, k).scale(&int(-(j as i64))))
        .collect();
    d.push(IsobaricPoly::constant(int(k as i64)));
    d
}

fn require_degree_two(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::CoreDegreeTooSmall { required: 2, got: k });
    }
    Ok(())
}

/// The k×k different matrix: rows d·A⁰, d·A¹, ..., d·A^{k−1} where
/// d = (−t_{k−1}, −2t_{k−2}, ..., −(k−1)t₁, k).
pub fn different_matrix_symbolic(k: usize) -> Result<SquareMatrix<IsobaricPoly>> {
    require_degree_two(k)?;
    let t: Vec<IsobaricPoly> = (1..=k).map(|j| symbolic_t(j, k)).collect();
    let mut rows = Vec::with_capacity(k);
    let mut v = different_start_symbolic(k);
    for _ in 0..k {
        rows.push(v.clone());
        v = row_forward(&v, &t);
    }
    SquareMatrix::from_rows(rows)
}

fn different_start_numeric(core: &Core, k: usize) -> Vec<Rat> {
    let t = core.coeffs_rat();
    let mut d: Vec<Rat> = (1..k)
        .map(|j| -(&t[k - 1 - j] * Rat::from_int(&int(j as i64))))
        .collect();
    d.push(Rat::from_int(&int(k as i64)));
    d
}

pub fn different_matrix_numeric(core: &Core) -> Result<SquareMatrix<Rat>> {
    let k = core.finite_degree().ok_or(Error::FiniteCoreRequired)?;
    require_degree_two(k)?;
    let t = core.coeffs_rat();
    let mut rows = Vec::with_capacity(k);
    let mut v = different_start_numeric(core, k);
    for _ in 0..k {
        rows.push(v.clone());
        v = row_forward(&v, &t);
    }
    SquareMatrix::from_rows(rows)
}

/// Δ_k, the determinant of the different matrix. Δ₂ = −t₁² − 4t₂ is the
/// familiar quadratic discriminant up to the core's sign convention.
pub fn different_det_symbolic(k: usize) -> Result<IsobaricPoly> {
    different_matrix_symbolic(k)?.determinant()
}

pub fn different_det_numeric(core: &Core) -> Result<Rat> {
    different_matrix_numeric(core)?.determinant()
}

/// Rows lo..=hi of the infinite extension of the different matrix: row n
/// is d·Aⁿ, so rows 0..k−1 reproduce the matrix itself and the rightmost
/// column carries the identity-weight (G) value sequence with G₀ = k.
pub fn different_window(core: &Core, lo: i64, hi: i64) -> Result<MatrixWindow<Rat>> {
    let k = core.finite_degree().ok_or(Error::FiniteCoreRequired)?;
    require_degree_two(k)?;
    check_bounds(lo, hi)?;
    if lo < 0 && !core.is_invertible() {
        return Err(Error::NotInvertible(k));
    }
    let t = core.coeffs_rat();
    let start = different_start_numeric(core, k);
    Ok(walk_window(start, &t, lo, hi, Some(&row_backward)))
}

pub fn different_window_symbolic(k: usize, lo: i64, hi: i64) -> Result<MatrixWindow<IsobaricPoly>> {
    require_degree_two(k)?;
    check_bounds(lo, hi)?;
    if lo < 0 {
        return Err(Error::SymbolicRowOutOfRange(lo));
    }
    let t: Vec<IsobaricPoly> = (1..=k).map(|j| symbolic_t(j, k)).collect();
    let start = different_start_symbolic(k);
    Ok(walk_window(start, &t, lo, hi, None))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HessSign {
    Plus,
    Minus,
}

impl HessSign {
    pub fn label(self) -> &'static str {
        match self {
            HessSign::Plus => "+",
            HessSign::Minus => "-",
        }
    }
}

/// The n×n lower Hessenberg matrix whose permanent (sign +) or determinant
/// (sign −) is the weighted isobaric polynomial of degree n: superdiagonal
/// ±1, interior bands t_{i−j+1}, and last row ω_{n−j+1}t_{n−j+1}, with
/// t_m = 0 past the part bound k.
pub fn hessenberg_symbolic(
    sign: HessSign,
    omega: &WeightVector,
    k: usize,
    n: usize,
) -> Result<SquareMatrix<IsobaricPoly>> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let superdiag = match sign {
        HessSign::Plus => IsobaricPoly::one(),
        HessSign::Minus => IsobaricPoly::one().neg(),
    };
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            row.push(if j == i + 1 {
                superdiag.clone()
            } else if j > i + 1 {
                IsobaricPoly::zero()
            } else if i < n {
                symbolic_t(i - j + 1, k)
            } else {
                let m = n - j + 1;
                if m > k {
                    IsobaricPoly::zero()
                } else {
                    symbolic_t(m, k).scale(&omega.get(m)?)
                }
            });
        }
        rows.push(row);
    }
    SquareMatrix::from_rows(rows)
}

/// Numeric twin of [`hessenberg_symbolic`]. Finite cores take their degree
/// as the part bound; series cores are unbounded and must be known deep
/// enough for every band that appears.
pub fn hessenberg_numeric(
    sign: HessSign,
    omega: &WeightVector,
    core: &Core,
    n: usize,
) -> Result<SquareMatrix<Rat>> {
    if n == 0 {
        return Err(Error::EmptyMatrix);
    }
    let superdiag = match sign {
        HessSign::Plus => Rat::one(),
        HessSign::Minus => -Rat::one(),
    };
    let bound = core.finite_degree();
    let t = |m: usize| -> Result<Rat> { Ok(Rat::from_int(&core.get_extended(m)?)) };
    let mut rows = Vec::with_capacity(n);
    for i in 1..=n {
        let mut row = Vec::with_capacity(n);
        for j in 1..=n {
            row.push(if j == i + 1 {
                superdiag.clone()
            } else if j > i + 1 {
                Rat::zero()
            } else if i < n {
                t(i - j + 1)?
            } else {
                let m = n - j + 1;
                match bound {
                    Some(k) if m > k => Rat::zero(),
                    _ => t(m)?.mul(&Rat::from_int(&omega.get(m)?)),
                }
            });
        }
        rows.push(row);
    }
    SquareMatrix::from_rows(rows)
}
