//! Arithmetic-function layer: fitting integer sequences to the all-ones and
//! identity-weight recursions, Dirichlet convolution, multiplicativity
//! testing, prime-local representations, companion sequences, periods of
//! value sequences modulo a prime, and the discriminant/period ramification
//! criterion.

use crate::error::{Error, Result};
use crate::matrix::different_det_numeric;
use crate::poly::Core;
use crate::ring::{int, is_prime, mod_floor_u64, rat_of, Int, Rat, Ring};
use crate::transform::{iso_log, ValueSeq};
use num_integer::Integer;
use std::collections::HashMap;

/// An arithmetic function tabulated on 1..=n_max.
#[derive(Debug, Clone, PartialEq)]
pub struct ArithFn {
    values: Vec<Int>,
}

impl ArithFn {
    pub fn from_values(values: Vec<Int>) -> Self {
        assert!(!values.is_empty(), "need at least f(1)");
        ArithFn { values }
    }

    pub fn tabulate(n_max: u64, f: impl Fn(u64) -> Int) -> Self {
        Self::from_values((1..=n_max).map(f).collect())
    }

    pub fn n_max(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn get(&self, n: u64) -> Result<&Int> {
        if n == 0 || n > self.n_max() {
            return Err(Error::ArithIndexOutOfRange {
                n,
                n_max: self.n_max(),
            });
        }
        Ok(&self.values[(n - 1) as usize])
    }

    pub fn values(&self) -> &[Int] {
        &self.values
    }
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors_of(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (p, e) in factorize(n) {
        let snapshot = out.clone();
        let mut pe = 1;
        for _ in 0..e {
            pe *= p;
            out.extend(snapshot.iter().map(|d| d * pe));
        }
    }
    out.sort_unstable();
    out
}

pub fn tau_of(n: u64) -> Int {
    factorize(n)
        .iter()
        .map(|&(_, e)| u64::from(e) + 1)
        .product::<u64>()
        .into()
}

pub fn sigma_of(n: u64) -> Int {
    let mut acc = Int::from(1);
    for (p, e) in factorize(n) {
        let p = Int::from(p);
        let mut geo = Int::from(1);
        let mut pe = Int::from(1);
        for _ in 0..e {
            pe *= &p;
            geo += &pe;
        }
        acc *= geo;
    }
    acc
}

pub fn totient_of(n: u64) -> Int {
    let mut acc = Int::from(1);
    for (p, e) in factorize(n) {
        let p = Int::from(p);
        acc *= p.pow(e - 1) * (&p - 1);
    }
    acc
}

/// The k-th Jordan totient: multiplicative, p^e ↦ p^{k(e−1)}(p^k − 1).
pub fn jordan_of(k: u32, n: u64) -> Int {
    let mut acc = Int::from(1);
    for (p, e) in factorize(n) {
        let pk = Int::from(p).pow(k);
        acc *= pk.pow(e - 1) * (&pk - 1);
    }
    acc
}

/// Which of the two distinguished value sequences of a core is meant:
/// the all-ones-weight one (F) or the identity-weight one (G).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeqKind {
    AllOnes,
    Identity,
}

impl SeqKind {
    pub fn label(self) -> &'static str {
        match self {
            SeqKind::AllOnes => "F",
            SeqKind::Identity => "G",
        }
    }
}

/// Outcome of fitting a value sequence to a linear recursion.
#[derive(Debug, Clone, PartialEq)]
pub struct FitResult {
    pub kind: SeqKind,
    /// Recovered t₁, t₂, ..., trimmed to the recursion order when the fit
    /// terminates, otherwise everything the data determines.
    pub coeffs: Vec<Rat>,
    pub terminating: bool,
    /// The recursion order: the last index with a nonzero coefficient,
    /// present only for terminating fits.
    pub k: Option<usize>,
    /// How many input values the replayed recursion reproduced (all of
    /// them, or the constructor refuses to return).
    pub verified_length: usize,
}

impl FitResult {
    /// The fitted core, when every coefficient is an integer: finite for
    /// terminating fits, truncated-series otherwise.
    pub fn integer_core(&self) -> Result<Core> {
        let mut ints = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::NonIntegralCore {
                    index: i + 1,
                    value: c.render(),
                });
            }
            ints.push(c.to_integer());
        }
        Ok(if self.terminating {
            Core::finite(ints)
        } else {
            Core::series(ints)
        })
    }
}

fn check_fit_length(len: usize, max_k: usize) -> Result<()> {
    if len < max_k + 2 {
        return Err(Error::InsufficientValues {
            required: max_k + 2,
            got: len,
        });
    }
    Ok(())
}

fn split_terminating(ts: Vec<Rat>, max_k: usize) -> (Vec<Rat>, bool, Option<usize>) {
    let last_nonzero = ts.iter().rposition(|t| !t.is_zero()).map_or(0, |i| i + 1);
    if last_nonzero <= max_k {
        (ts[..last_nonzero].to_vec(), true, Some(last_nonzero))
    } else {
        (ts, false, None)
    }
}

/// Fit values v₀ = 1, v₁, ..., v_N to the all-ones recursion by the
/// sequential triangular solve t_n = v_n − Σ_{j<n} t_j v_{n−j}. Terminates
/// with the smallest order ≤ max_k whose later coefficients all vanish on
/// the data; otherwise reports the truncated-series coefficients.
pub fn fit_core_f(values: &ValueSeq, max_k: usize) -> Result<FitResult> {
    if values.start() != 0 {
        return Err(Error::StartIndexMismatch {
            expected: 0,
            got: values.start(),
        });
    }
    check_fit_length(values.len(), max_k)?;
    if values.get(0) != &Rat::one() {
        return Err(Error::NotNormalized(values.get(0).render()));
    }
    let n_max = values.end();
    let mut ts: Vec<Rat> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut t = values.get(n).clone();
        for (j, tj) in ts.iter().enumerate() {
            t = t.sub(&tj.mul(values.get(n - j - 1)));
        }
        ts.push(t);
    }
    let (coeffs, terminating, k) = split_terminating(ts, max_k);
    // Replay the recursion against the input before reporting anything.
    let mut v = vec![Rat::one()];
    for n in 1..=n_max {
        let mut acc = Rat::zero();
        for (j, tj) in coeffs.iter().enumerate().take(n) {
            acc = acc.add(&tj.mul(&v[n - j - 1]));
        }
        if &acc != values.get(n) {
            return Err(Error::Internal(format!(
                "all-ones fit replay diverged at index {n}"
            )));
        }
        v.push(acc);
    }
    Ok(FitResult {
        kind: SeqKind::AllOnes,
        coeffs,
        terminating,
        k,
        verified_length: values.len(),
    })
}

/// Fit values G₁, ..., G_N to the identity-weight recursion by
/// t_n = (G_n − Σ_{j<n} t_j G_{n−j})/n, refusing non-integer coefficients
/// (the sequence is then not representable over the integers at this depth).
pub fn fit_core_g(values: &ValueSeq, max_k: usize) -> Result<FitResult> {
    if values.start() != 1 {
        return Err(Error::StartIndexMismatch {
            expected: 1,
            got: values.start(),
        });
    }
    check_fit_length(values.len(), max_k)?;
    let n_max = values.end();
    let mut ts: Vec<Rat> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut t = values.get(n).clone();
        for (j, tj) in ts.iter().enumerate().take(n - 1) {
            t = t.sub(&tj.mul(values.get(n - j - 1)));
        }
        t = t / Rat::from_int(&int(n as i64));
        if !t.is_integer() {
            return Err(Error::GFitNonIntegral {
                index: n,
                value: t.render(),
            });
        }
        ts.push(t);
    }
    let (coeffs, terminating, k) = split_terminating(ts, max_k);
    let mut g: Vec<Rat> = Vec::new();
    for n in 1..=n_max {
        let mut acc = if n <= coeffs.len() {
            coeffs[n - 1].mul(&Rat::from_int(&int(n as i64)))
        } else {
            Rat::zero()
        };
        for (j, tj) in coeffs.iter().enumerate().take(n - 1) {
            acc = acc.add(&tj.mul(&g[n - j - 2]));
        }
        if &acc != values.get(n) {
            return Err(Error::Internal(format!(
                "identity-weight fit replay diverged at index {n}"
            )));
        }
        g.push(acc);
    }
    Ok(FitResult {
        kind: SeqKind::Identity,
        coeffs,
        terminating,
        k,
        verified_length: values.len(),
    })
}

/// (f∗g)(n) = Σ_{d|n} f(n/d) g(d) on 1..=n_max.
pub fn dirichlet_convolve(f: &ArithFn, g: &ArithFn, n_max: u64) -> Result<ArithFn> {
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let mut acc = Int::from(0);
        for d in divisors_of(n) {
            acc += f.get(n / d)? * g.get(d)?;
        }
        out.push(acc);
    }
    Ok(ArithFn::from_values(out))
}

/// Verdict of a multiplicativity scan, with a violating pair on failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultReport {
    pub multiplicative: bool,
    pub witness: Option<(u64, u64)>,
}

/// Check f(mn) = f(m)f(n) for every coprime pair with mn ≤ n_max.
/// Nontrivial pairs (2 ≤ m < n) are scanned first, ordered by product,
/// so the reported witness is the smallest genuinely interesting one;
/// violations of the f(1) = 1 normalization are reported after that.
pub fn is_multiplicative(f: &ArithFn, n_max: u64) -> Result<MultReport> {
    let bound = n_max.min(f.n_max());
    for prod in 6..=bound {
        let mut m = 2;
        while m * m < prod {
            if prod % m == 0 {
                let n = prod / m;
                if m.gcd(&n) == 1 && f.get(prod)? != &(f.get(m)? * f.get(n)?) {
                    return Ok(MultReport {
                        multiplicative: false,
                        witness: Some((m, n)),
                    });
                }
            }
            m += 1;
        }
    }
    if f.get(1)? != &Int::from(1) {
        let witness = (1..=bound)
            .find(|&n| {
                f.get(n).map(|v| v != &(f.get(1).unwrap() * v.clone())).unwrap_or(false)
            })
            .map_or((1, 1), |n| (1, n));
        return Ok(MultReport {
            multiplicative: false,
            witness: Some(witness),
        });
    }
    Ok(MultReport {
        multiplicative: true,
        witness: None,
    })
}

/// Fit the prime-power values f(1), f(p), f(p²), ... to the all-ones
/// recursion; multiplicative functions always admit such a local fit.
pub fn local_representation(f: &ArithFn, p: u64, depth: u32, max_k: usize) -> Result<FitResult> {
    let n_max = f.n_max();
    local_representation_fn(|n| f.get(n).cloned(), p, depth, max_k, n_max)
}

/// Same fit, but with the function given directly, so only the prime
/// powers themselves are ever evaluated. `n_max` caps the largest
/// argument that may be requested.
pub fn local_representation_fn(
    f: impl Fn(u64) -> Result<Int>,
    p: u64,
    depth: u32,
    max_k: usize,
    n_max: u64,
) -> Result<FitResult> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut values = Vec::with_capacity(depth as usize + 1);
    let mut pe: u64 = 1;
    for e in 0..=depth {
        if pe > n_max {
            return Err(Error::ArithIndexOutOfRange { n: pe, n_max });
        }
        values.push(rat_of(&f(pe)?));
        if e < depth {
            pe = pe.checked_mul(p).ok_or(Error::ArithIndexOutOfRange {
                n: u64::MAX,
                n_max,
            })?;
        }
    }
    fit_core_f(&ValueSeq::new(0, values), max_k)
}

/// Identity-weight values G₁..G_N of a core, produced by the recursion and
/// cross-checked against the logarithm of the all-ones values; the two
/// routes disagreeing is an internal error, never a return value.
pub fn companion_sequence(core: &Core, n_max: usize) -> Result<ValueSeq> {
    let direct = core.glp_values(n_max)?;
    let f = ValueSeq::from_ints(0, &core.gfp_values(n_max)?);
    let via_log = iso_log(core, &f, n_max)?;
    let direct_seq = ValueSeq::from_ints(1, &direct);
    if direct_seq != via_log {
        return Err(Error::Internal(
            "companion sequence: recursion and logarithm routes disagree".into(),
        ));
    }
    Ok(direct_seq)
}

/// Period structure of a value sequence reduced modulo a prime.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodReport {
    pub p: u64,
    pub kind: SeqKind,
    /// Set when p divides t_k, so the state map is not invertible and a
    /// preperiod can appear.
    pub degenerate: bool,
    /// Number of k-window states stepped through before the cycle is
    /// entered; 0 whenever the state map is invertible.
    pub preperiod: usize,
    pub period: usize,
}

impl PeriodReport {
    /// Total period including any preperiod offset; equals `period` in the
    /// invertible case.
    pub fn is_pure(&self) -> bool {
        self.preperiod == 0
    }
}

const PERIOD_STATE_CAP: usize = 10_000_000;

/// Find the eventual period of the chosen value sequence mod p by driving
/// the k-window state vector until a state repeats. With p ∤ t_k the state
/// map is a bijection, so the first repeat is the initial state and the
/// period is pure.
pub fn period_mod(core: &Core, p: u64, kind: SeqKind) -> Result<PeriodReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let k = core.finite_degree().ok_or(Error::FiniteCoreRequired)?;
    if k == 0 {
        return Err(Error::CoreDegreeTooSmall { required: 1, got: 0 });
    }
    let t: Vec<u64> = core.coeffs().iter().map(|c| mod_floor_u64(c, p)).collect();
    let degenerate = t[k - 1] == 0;
    let mut state: Vec<u64> = match kind {
        SeqKind::AllOnes => {
            // Window (F_{1-k}, ..., F_0) = (0, ..., 0, 1): the sequence
            // satisfies the pure recursion from index 1 on.
            let mut s = vec![0; k];
            s[k - 1] = 1;
            s
        }
        SeqKind::Identity => {
            // Window (G_0, ..., G_{k-1}) with G_0 = k: a pure solution of
            // the recursion from the start.
            let mut s = vec![(k as u64) % p];
            for g in core.glp_values(k - 1)? {
                s.push(mod_floor_u64(&g, p));
            }
            s
        }
    };
    let mut seen: HashMap<Vec<u64>, usize> = HashMap::new();
    let mut step = 0usize;
    loop {
        if let Some(&first) = seen.get(&state) {
            return Ok(PeriodReport {
                p,
                kind,
                degenerate,
                preperiod: first,
                period: step - first,
            });
        }
        if step > PERIOD_STATE_CAP {
            return Err(Error::PeriodSearchLimit(PERIOD_STATE_CAP));
        }
        seen.insert(state.clone(), step);
        let next = t
            .iter()
            .enumerate()
            .fold(0u64, |acc, (j, tj)| (acc + tj * state[k - 1 - j]) % p);
        state.rotate_left(1);
        state[k - 1] = next;
        step += 1;
    }
}

/// Discriminant-versus-periods report: p divides the different determinant
/// exactly when the all-ones period is p times the identity-weight period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationReport {
    pub p: u64,
    pub delta: Int,
    pub divides: bool,
    pub f_period: PeriodReport,
    pub g_period: PeriodReport,
    /// p | t_k: the equivalence is not asserted here and `agree` is
    /// reported for information only.
    pub degenerate: bool,
    pub agree: bool,
}

pub fn ramification_check(core: &Core, p: u64) -> Result<RamificationReport> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let delta_rat = different_det_numeric(core)?;
    debug_assert!(delta_rat.is_integer());
    let delta = delta_rat.to_integer();
    let divides = mod_floor_u64(&delta, p) == 0;
    let f_period = period_mod(core, p, SeqKind::AllOnes)?;
    let g_period = period_mod(core, p, SeqKind::Identity)?;
    let degenerate = core.tk_divisible_by(p)?;
    let agree = divides == (f_period.period as u64 == p * g_period.period as u64);
    Ok(RamificationReport {
        p,
        delta,
        divides,
        f_period,
        g_period,
        degenerate,
        agree,
    })
}

/// Stirling numbers of the second kind S(n, j) for n, j ≤ n_max as a
/// triangular table; S(0, 0) = 1.
pub fn stirling2_table(n_max: usize) -> Vec<Vec<Int>> {
    let mut table = vec![vec![Int::from(0); n_max + 1]; n_max + 1];
    table[0][0] = Int::from(1);
    for n in 1..=n_max {
        for j in 1..=n {
            let carry = &table[n - 1][j] * int(j as i64);
            table[n][j] = carry + &table[n - 1][j - 1];
        }
    }
    table
}

/// Unsigned Stirling numbers of the first kind c(n, j) (cycle counts).
pub fn stirling1_unsigned_table(n_max: usize) -> Vec<Vec<Int>> {
    let mut table = vec![vec![Int::from(0); n_max + 1]; n_max + 1];
    table[0][0] = Int::from(1);
    for n in 1..=n_max {
        for j in 1..=n {
            let carry = &table[n - 1][j] * int((n - 1) as i64);
            table[n][j] = carry + &table[n - 1][j - 1];
        }
    }
    table
}

/// Column k of the second-kind triangle, re-indexed so the first nonzero
/// entry S(k, k) = 1 sits at index 0: values S(k+n, k) for n = 0..=depth.
pub fn stirling_column_values(k: usize, depth: usize) -> Vec<Int> {
    let table = stirling2_table(k + depth);
    (0..=depth).map(|n| table[k + n][k].clone()).collect()
}

/// The core whose characteristic polynomial is Π_{j=1}^{k} (X − j):
/// the coefficients X^k − t₁X^{k−1} − ... − t_k read off the expansion.
pub fn falling_factorial_core(k: usize) -> Core {
    let mut poly = vec![Int::from(1)];
    for j in 1..=k {
        let mut next = vec![Int::from(0); poly.len() + 1];
        for (i, c) in poly.iter().enumerate() {
            next[i] += c;
            next[i + 1] -= c * int(j as i64);
        }
        poly = next;
    }
    Core::finite(poly[1..].iter().map(|c| -c.clone()).collect())
}

#[derive(Debug, Clone, PartialEq)]
pub struct StirlingReport {
    pub k: usize,
    pub core: Core,
    /// The sequential fit of column k recovers exactly the characteristic
    /// coefficients of Π(X − j).
    pub fit_recovers_core: bool,
    /// |t_j| read in reverse is a row segment of the unsigned first-kind
    /// triangle.
    pub first_kind_match: bool,
    /// t₁ is the k-th triangular number.
    pub triangular_head: bool,
    /// |t_k| = k! with sign (−1)^{k−1}.
    pub factorial_tail: bool,
}

impl StirlingReport {
    pub fn ok(&self) -> bool {
        self.fit_recovers_core
            && self.first_kind_match
            && self.triangular_head
            && self.factorial_tail
    }
}

pub fn stirling_relation_check(k: usize, depth: usize) -> Result<StirlingReport> {
    if !(2..=8).contains(&k) {
        return Err(Error::FamilyParamOutOfRange {
            family: "stirling2_col",
            param: "k",
            detail: format!("need 2 <= k <= 8, got {k}"),
        });
    }
    let core = falling_factorial_core(k);
    let values = ValueSeq::from_ints(0, &stirling_column_values(k, depth));
    let fit = fit_core_f(&values, k)?;
    let fit_recovers_core = fit.terminating
        && fit.k == Some(k)
        && fit.integer_core()?.coeffs() == core.coeffs();
    let s1 = stirling1_unsigned_table(k + 1);
    let first_kind_match = core
        .coeffs()
        .iter()
        .enumerate()
        .all(|(i, t)| {
            let j = i + 1;
            let expect = &s1[k + 1][k + 1 - j];
            let got = if t < &Int::from(0) { -t.clone() } else { t.clone() };
            got == *expect
        });
    let triangular_head = core.coeffs()[0] == int((k * (k + 1) / 2) as i64);
    let tail = &core.coeffs()[k - 1];
    let expect_tail = {
        let f = crate::ring::factorial(k as u64);
        if k % 2 == 1 {
            f
        } else {
            -f
        }
    };
    let factorial_tail = tail == &expect_tail;
    Ok(StirlingReport {
        k,
        core,
        fit_recovers_core,
        first_kind_match,
        triangular_head,
        factorial_tail,
    })
}

/// Rank of the largest square Hankel matrix the values support; for a
/// sequence obeying a linear recursion this is the minimal order, so it
/// certifies minimality of a fitted core.
pub fn hankel_rank(values: &[Rat]) -> usize {
    let len = values.len();
    if len == 0 {
        return 0;
    }
    let s = len.div_ceil(2);
    let mut m: Vec<Vec<Rat>> = (0..s)
        .map(|i| (0..s).map(|j| values.get(i + j).cloned().unwrap_or_else(Rat::zero)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..s {
        let pivot = (rank..s).find(|&r| !m[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        m.swap(rank, pivot);
        let head = m[rank][col].clone();
        for r in 0..s {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() / head.clone();
            for c in col..s {
                let sub = factor.mul(&m[rank][c]);
                m[r][c] = m[r][c].sub(&sub);
            }
        }
        rank += 1;
        if rank == s {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    fn seq0(values: &[i64]) -> ValueSeq {
        ValueSeq::from_i64(0, values)
    }

    fn seq1(values: &[i64]) -> ValueSeq {
        ValueSeq::from_i64(1, values)
    }

    fn fitted_ints(fit: &FitResult) -> Vec<i64> {
        fit.coeffs
            .iter()
            .map(|c| {
                assert!(c.is_integer());
                i64::try_from(&c.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn small_arithmetic_functions() {
        assert_eq!(divisors_of(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors_of(1), vec![1]);
        assert_eq!(tau_of(6), int(4));
        assert_eq!(sigma_of(4), int(7));
        assert_eq!(totient_of(10), int(4));
        assert_eq!(jordan_of(2, 9), int(72));
        assert_eq!(jordan_of(1, 100), totient_of(100));
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
    }

    #[test]
    fn all_ones_fits_terminate_on_recursive_data() {
        let fit = fit_core_f(&seq0(&[1, 2, 3, 4, 5, 6]), 4).unwrap();
        assert!(fit.terminating);
        assert_eq!(fit.k, Some(2));
        assert_eq!(fitted_ints(&fit), [2, -1]);
        assert_eq!(fit.verified_length, 6);
        let fit = fit_core_f(&seq0(&[1, 4, 13, 40]), 2).unwrap();
        assert_eq!(fitted_ints(&fit), [4, -3]);
        assert!(matches!(fit.integer_core().unwrap().kind(), crate::poly::CoreKind::Finite));
    }

    #[test]
    fn all_ones_fit_detects_series_cores() {
        let fit = fit_core_f(&seq0(&[1, 1, 2, 5, 14, 42]), 3).unwrap();
        assert!(!fit.terminating);
        assert_eq!(fit.k, None);
        assert_eq!(fitted_ints(&fit), [1, 1, 2, 5, 14]);
        let phi = fit_core_f(&seq0(&[1, 4, 20, 100, 500]), 3).unwrap();
        assert!(!phi.terminating);
        assert_eq!(fitted_ints(&phi), [4, 4, 4, 4]);
    }

    #[test]
    fn fit_preconditions() {
        assert!(matches!(
            fit_core_f(&seq0(&[2, 4, 8, 16]), 2),
            Err(Error::NotNormalized(_))
        ));
        assert!(matches!(
            fit_core_f(&seq0(&[1, 2, 3]), 2),
            Err(Error::InsufficientValues { required: 4, got: 3 })
        ));
        assert!(matches!(
            fit_core_f(&seq1(&[1, 2, 3, 4]), 2),
            Err(Error::StartIndexMismatch { expected: 0, got: 1 })
        ));
        assert!(matches!(
            fit_core_g(&seq0(&[1, 2, 3, 4]), 2),
            Err(Error::StartIndexMismatch { expected: 1, got: 0 })
        ));
    }

    #[test]
    fn identity_weight_fits() {
        let fit = fit_core_g(&seq1(&[1, 3, 4, 7, 11]), 3).unwrap();
        assert_eq!(fitted_ints(&fit), [1, 1]);
        assert_eq!(fit.k, Some(2));
        let fit = fit_core_g(&seq1(&[0, 2, 3, 2, 5, 5, 7]), 5).unwrap();
        assert_eq!(fitted_ints(&fit), [0, 1, 1]);
        let fit = fit_core_g(&seq1(&[3, 3, 3, 3, 3]), 3).unwrap();
        assert_eq!(fitted_ints(&fit), [3, -3, 1]);
        assert!(matches!(
            fit_core_g(&seq1(&[1, 2, 3, 4]), 2),
            Err(Error::GFitNonIntegral { index: 2, .. })
        ));
    }

    #[test]
    fn dirichlet_convolution_identities() {
        let one = ArithFn::tabulate(30, |_| int(1));
        let id = ArithFn::tabulate(30, |n| int(n as i64));
        let eps = ArithFn::tabulate(30, |n| int(i64::from(n == 1)));
        let tau = dirichlet_convolve(&one, &one, 30).unwrap();
        assert_eq!(tau.get(6).unwrap(), &int(4));
        assert_eq!(tau.values(), ArithFn::tabulate(30, tau_of).values());
        let sigma = dirichlet_convolve(&id, &one, 30).unwrap();
        assert_eq!(sigma.get(4).unwrap(), &int(7));
        assert_eq!(sigma.values(), ArithFn::tabulate(30, sigma_of).values());
        let same = dirichlet_convolve(&sigma, &eps, 30).unwrap();
        assert_eq!(same.values(), sigma.values());
        // φ ∗ 1 = id.
        let phi = ArithFn::tabulate(30, totient_of);
        assert_eq!(dirichlet_convolve(&phi, &one, 30).unwrap().values(), id.values());
    }

    #[test]
    fn multiplicativity_scan() {
        let tau = ArithFn::tabulate(60, tau_of);
        assert!(is_multiplicative(&tau, 60).unwrap().multiplicative);
        let shifted = ArithFn::tabulate(30, |n| int(n as i64 + 1));
        let report = is_multiplicative(&shifted, 30).unwrap();
        assert!(!report.multiplicative);
        assert_eq!(report.witness, Some((2, 3)));
        let eps = ArithFn::tabulate(10, |n| int(i64::from(n == 1)));
        assert!(is_multiplicative(&eps, 10).unwrap().multiplicative);
        // σ is multiplicative but not completely: no coprime witness exists.
        let sigma = ArithFn::tabulate(80, sigma_of);
        assert!(is_multiplicative(&sigma, 80).unwrap().multiplicative);
        // Normalization failure without a nontrivial witness.
        let doubled = ArithFn::tabulate(5, |_| int(2));
        let report = is_multiplicative(&doubled, 5).unwrap();
        assert_eq!(report.witness, Some((1, 1)));
    }

    #[test]
    fn local_representations_of_classical_functions() {
        let tau = ArithFn::tabulate(64, tau_of);
        let fit = local_representation(&tau, 2, 5, 3).unwrap();
        assert!(fit.terminating);
        assert_eq!(fitted_ints(&fit), [2, -1]);
        let phi = ArithFn::tabulate(625, totient_of);
        let fit = local_representation(&phi, 5, 4, 2).unwrap();
        assert!(!fit.terminating);
        assert_eq!(fitted_ints(&fit), [4, 4, 4, 4]);
        let j2 = ArithFn::tabulate(729, |n| jordan_of(2, n));
        let fit = local_representation(&j2, 3, 5, 3).unwrap();
        assert_eq!(fitted_ints(&fit), [8, 8, 8, 8, 8]);
        assert!(matches!(
            local_representation(&tau, 6, 2, 1),
            Err(Error::NotPrime(6))
        ));
    }

    #[test]
    fn companion_sequences_cross_check() {
        let catalan = Core::series([1, 1, 2, 5, 14].map(int).to_vec());
        let g = companion_sequence(&catalan, 4).unwrap();
        assert_eq!(g, seq1(&[1, 3, 10, 35]));
        let stirling3 = Core::finite_i64(&[6, -11, 6]);
        let g = companion_sequence(&stirling3, 5).unwrap();
        assert_eq!(g, seq1(&[6, 14, 36, 98, 276]));
        let phi5 = Core::series(vec![int(4); 6]);
        let g = companion_sequence(&phi5, 6).unwrap();
        let expect: Vec<i64> = (1..=6).map(|n| 5i64.pow(n) - 1).collect();
        assert_eq!(g, seq1(&expect));
    }

    #[test]
    fn periods_modulo_small_primes() {
        let fib = Core::finite_i64(&[1, 1]);
        let f = period_mod(&fib, 5, SeqKind::AllOnes).unwrap();
        assert_eq!((f.preperiod, f.period), (0, 20));
        assert!(!f.degenerate);
        let g = period_mod(&fib, 5, SeqKind::Identity).unwrap();
        assert_eq!((g.preperiod, g.period), (0, 4));
        let prog = Core::finite_i64(&[2, -1]);
        let f = period_mod(&prog, 7, SeqKind::AllOnes).unwrap();
        assert_eq!(f.period, 7);
        let g = period_mod(&prog, 7, SeqKind::Identity).unwrap();
        assert_eq!(g.period, 1);
        assert!(matches!(
            period_mod(&fib, 6, SeqKind::AllOnes),
            Err(Error::NotPrime(6))
        ));
    }

    #[test]
    fn degenerate_periods_report_preperiods() {
        // t = (2, 4) mod 2 kills every value after index 0, so the state
        // walk (0,1) → (1,0) → (0,0) needs two steps to reach its cycle.
        let core = Core::finite_i64(&[2, 4]);
        let f = period_mod(&core, 2, SeqKind::AllOnes).unwrap();
        assert!(f.degenerate);
        assert_eq!((f.preperiod, f.period), (2, 1));
        assert!(!f.is_pure());
        // σ's own prime: core [4,−3] mod 3.
        let core = Core::finite_i64(&[4, -3]);
        let f = period_mod(&core, 3, SeqKind::AllOnes).unwrap();
        assert!(f.degenerate);
        assert_eq!(f.period, 1);
    }

    #[test]
    fn ramification_reports() {
        let fib = Core::finite_i64(&[1, 1]);
        let r = ramification_check(&fib, 5).unwrap();
        assert_eq!(r.delta, int(-5));
        assert!(r.divides);
        assert_eq!(r.f_period.period, 20);
        assert_eq!(r.g_period.period, 4);
        assert!(r.agree && !r.degenerate);
        let r = ramification_check(&fib, 3).unwrap();
        assert!(!r.divides);
        assert_eq!((r.f_period.period, r.g_period.period), (8, 8));
        assert!(r.agree);
        let repeated = Core::finite_i64(&[2, -1]);
        let r = ramification_check(&repeated, 7).unwrap();
        assert_eq!(r.delta, int(0));
        assert!(r.divides && r.agree);
        assert_eq!((r.f_period.period, r.g_period.period), (7, 1));
    }

    #[test]
    fn stirling_tables_and_falling_factorial_cores() {
        let s2 = stirling2_table(10);
        assert_eq!(s2[4][2], int(7));
        assert_eq!(s2[10][3], int(9330));
        assert_eq!(s2[10][4], int(34105));
        let s1 = stirling1_unsigned_table(5);
        assert_eq!(
            s1[5][1..=5].to_vec(),
            [24, 50, 35, 10, 1].map(int).to_vec()
        );
        assert_eq!(falling_factorial_core(2).coeffs(), [3, -2].map(int));
        assert_eq!(falling_factorial_core(3).coeffs(), [6, -11, 6].map(int));
        assert_eq!(
            falling_factorial_core(5).coeffs(),
            [15, -85, 225, -274, 120].map(int)
        );
        assert_eq!(stirling_column_values(3, 3), [1, 6, 25, 90].map(int));
    }

    #[test]
    fn stirling_relations_hold_through_eight() {
        for k in 2..=8 {
            let report = stirling_relation_check(k, k + 3).unwrap();
            assert!(report.ok(), "relations at column {k}: {report:?}");
        }
        assert!(stirling_relation_check(1, 5).is_err());
        assert!(stirling_relation_check(9, 5).is_err());
    }

    #[test]
    fn hankel_rank_certifies_recursion_order() {
        let tau: Vec<Rat> = [1, 2, 3, 4, 5, 6].map(rat).to_vec();
        assert_eq!(hankel_rank(&tau), 2);
        let catalan: Vec<Rat> = [1, 1, 2, 5, 14, 42].map(rat).to_vec();
        assert_eq!(hankel_rank(&catalan), 3, "full rank on non-recursive data");
        let zeros = vec![Rat::zero(); 5];
        assert_eq!(hankel_rank(&zeros), 0);
        let geometric: Vec<Rat> = [1, 3, 9, 27, 81].map(rat).to_vec();
        assert_eq!(hankel_rank(&geometric), 1);
    }

    #[test]
    fn arith_fn_bounds() {
        let f = ArithFn::tabulate(5, |n| int(n as i64));
        assert!(matches!(
            f.get(6),
            Err(Error::ArithIndexOutOfRange { n: 6, n_max: 5 })
        ));
        assert!(f.get(0).is_err());
    }
}
