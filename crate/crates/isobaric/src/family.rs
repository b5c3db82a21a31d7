//! Built-in catalog of sequence families, each carrying its core, its
//! all-ones (F) and identity-weight (G) value runs, and an independent
//! closed form the generated values are checked against before anything is
//! returned. A disagreement between the recursion and the closed form is an
//! internal error, never silent.

use crate::arith::SeqKind;
use crate::error::{Error, Result};
use crate::poly::Core;
use crate::ring::{binomial, int, is_prime, Int};

pub const FAMILY_NAMES: [&str; 13] = [
    "tau",
    "sigma",
    "totient",
    "jordan",
    "catalan",
    "chebyshev_u",
    "stirling2_col",
    "triangular",
    "pell",
    "pell_lucas",
    "fibonacci_bivariate",
    "perrin",
    "perrin_exponential",
];

/// Optional parameters a family may require: a prime p, an order k, and
/// integer indeterminate values x, y.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct FamilyParams {
    pub p: Option<u64>,
    pub k: Option<u32>,
    pub x: Option<i64>,
    pub y: Option<i64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyEntry {
    pub name: &'static str,
    /// Echo of the parameters that shaped the entry, for display.
    pub params: Vec<(&'static str, String)>,
    pub core: Core,
    /// Which of the two value sequences is the family's headline.
    pub kind: SeqKind,
    /// F₀..F_N.
    pub f_values: Vec<Int>,
    /// G₁..G_N.
    pub g_values: Vec<Int>,
    /// Index-0 companion convention, where the family fixes one.
    pub g0: Option<Int>,
}

impl FamilyEntry {
    /// The headline run: F starts at index 0, G at index 1.
    pub fn headline(&self) -> (usize, &[Int]) {
        match self.kind {
            SeqKind::AllOnes => (0, &self.f_values),
            SeqKind::Identity => (1, &self.g_values),
        }
    }
}

fn need_prime(family: &'static str, params: &FamilyParams) -> Result<u64> {
    let p = params.p.ok_or(Error::MissingFamilyParam { family, param: "p" })?;
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(p)
}

fn need_k(family: &'static str, params: &FamilyParams) -> Result<u32> {
    params.k.ok_or(Error::MissingFamilyParam { family, param: "k" })
}

fn need_x(family: &'static str, params: &FamilyParams) -> Result<i64> {
    params.x.ok_or(Error::MissingFamilyParam { family, param: "x" })
}

fn catalan_number(m: usize) -> Int {
    binomial(2 * m as u64, m as u64) / int(m as i64 + 1)
}

fn check<T: PartialEq + std::fmt::Debug>(
    name: &str,
    label: &str,
    n: usize,
    got: &T,
    want: &T,
) -> Result<()> {
    if got != want {
        return Err(Error::Internal(format!(
            "family {name}: {label} closed form disagrees at index {n} (recursion {got:?}, closed form {want:?})"
        )));
    }
    Ok(())
}

/// Look up a family, generate its values from the core, and cross-check
/// them against the family's closed form through index `n_max`.
pub fn family(name: &str, params: &FamilyParams, n_max: usize) -> Result<FamilyEntry> {
    let name: &'static str = FAMILY_NAMES
        .iter()
        .copied()
        .find(|&f| f == name)
        .ok_or_else(|| Error::UnknownFamily(name.to_string()))?;
    match name {
        "tau" => {
            // Divisor counts at prime powers: τ(pⁿ) = n + 1 for every prime.
            let core = Core::finite_i64(&[2, -1]);
            let entry = build(name, vec![], core, SeqKind::AllOnes, Some(int(2)), n_max)?;
            for (n, v) in entry.f_values.iter().enumerate() {
                check(name, "F", n, v, &int(n as i64 + 1))?;
            }
            Ok(entry)
        }
        "sigma" => {
            let p = need_prime("sigma", params)?;
            let core = Core::finite(vec![int(p as i64 + 1), int(-(p as i64))]);
            let entry = build(
                name,
                vec![("p", p.to_string())],
                core,
                SeqKind::AllOnes,
                Some(int(2)),
                n_max,
            )?;
            // σ(pⁿ) = 1 + p + ... + pⁿ.
            let mut want = int(1);
            let mut pe = int(1);
            for (n, v) in entry.f_values.iter().enumerate() {
                if n > 0 {
                    pe *= int(p as i64);
                    want += &pe;
                    check(name, "F", n, v, &want)?;
                }
            }
            Ok(entry)
        }
        "totient" => {
            let p = need_prime("totient", params)?;
            let core = Core::series(vec![int(p as i64 - 1); n_max]);
            let entry = build(
                name,
                vec![("p", p.to_string())],
                core,
                SeqKind::AllOnes,
                Some(int(2)),
                n_max,
            )?;
            // φ(pⁿ) = p^{n−1}(p − 1); companion values pⁿ − 1.
            let p_int = int(p as i64);
            for n in 1..=n_max {
                let want = p_int.pow(n as u32 - 1) * (&p_int - int(1));
                check(name, "F", n, &entry.f_values[n], &want)?;
                let want_g = p_int.pow(n as u32) - int(1);
                check(name, "G", n, &entry.g_values[n - 1], &want_g)?;
            }
            Ok(entry)
        }
        "jordan" => {
            let p = need_prime("jordan", params)?;
            let k = need_k("jordan", params)?;
            if k == 0 {
                return Err(Error::FamilyParamOutOfRange {
                    family: "jordan",
                    param: "k",
                    detail: "order must be at least 1".into(),
                });
            }
            let pk = int(p as i64).pow(k) - int(1);
            let core = Core::series(vec![pk.clone(); n_max]);
            let entry = build(
                name,
                vec![("p", p.to_string()), ("k", k.to_string())],
                core,
                SeqKind::AllOnes,
                None,
                n_max,
            )?;
            // J_k(pⁿ) = p^{k(n−1)}(p^k − 1).
            for n in 1..=n_max {
                let want = int(p as i64).pow(k * (n as u32 - 1)) * &pk;
                check(name, "F", n, &entry.f_values[n], &want)?;
            }
            Ok(entry)
        }
        "catalan" => {
            let core = Core::series((0..n_max).map(catalan_number).collect());
            let entry = build(name, vec![], core, SeqKind::AllOnes, None, n_max)?;
            for (n, v) in entry.f_values.iter().enumerate() {
                check(name, "F", n, v, &catalan_number(n))?;
            }
            // Companion values binom(2n−1, n).
            for n in 1..=n_max {
                let want = binomial(2 * n as u64 - 1, n as u64);
                check(name, "G", n, &entry.g_values[n - 1], &want)?;
            }
            Ok(entry)
        }
        "chebyshev_u" => {
            let x = need_x("chebyshev_u", params)?;
            let core = Core::finite(vec![int(2 * x), int(-1)]);
            let entry = build(
                name,
                vec![("x", x.to_string())],
                core,
                SeqKind::AllOnes,
                Some(int(2)),
                n_max,
            )?;
            // Companion values are twice the first-kind values, generated
            // here by their own three-term recurrence.
            let mut t = vec![int(1), int(x)];
            for n in 2..=n_max {
                let next = int(2 * x) * &t[n - 1] - &t[n - 2];
                t.push(next);
            }
            for n in 1..=n_max {
                check(name, "G", n, &entry.g_values[n - 1], &(int(2) * &t[n]))?;
            }
            Ok(entry)
        }
        "stirling2_col" => {
            let k = need_k("stirling2_col", params)?;
            if !(1..=8).contains(&k) {
                return Err(Error::FamilyParamOutOfRange {
                    family: "stirling2_col",
                    param: "k",
                    detail: format!("need 1 <= k <= 8, got {k}"),
                });
            }
            let k = k as usize;
            let core = crate::arith::falling_factorial_core(k);
            let entry = build(
                name,
                vec![("k", k.to_string())],
                core,
                SeqKind::AllOnes,
                Some(int(k as i64)),
                n_max,
            )?;
            // Second-kind column k with S(k, k) at index 0, against the
            // triangle recurrence; companion values are the power sums
            // 1ⁿ + 2ⁿ + ... + kⁿ.
            let table = crate::arith::stirling2_table(k + n_max);
            for n in 0..=n_max {
                check(name, "F", n, &entry.f_values[n], &table[k + n][k])?;
            }
            for n in 1..=n_max {
                let want = (1..=k as i64).map(|j| int(j).pow(n as u32)).sum::<Int>();
                check(name, "G", n, &entry.g_values[n - 1], &want)?;
            }
            Ok(entry)
        }
        "triangular" => {
            let core = Core::finite_i64(&[3, -3, 1]);
            let entry = build(name, vec![], core, SeqKind::AllOnes, Some(int(3)), n_max)?;
            for (n, v) in entry.f_values.iter().enumerate() {
                let m = n as i64 + 1;
                check(name, "F", n, v, &int(m * (m + 1) / 2))?;
                if n > 0 {
                    check(name, "G", n, &entry.g_values[n - 1], &int(3))?;
                }
            }
            Ok(entry)
        }
        "pell" => {
            let core = Core::finite_i64(&[2, 1]);
            let entry = build(name, vec![], core, SeqKind::AllOnes, Some(int(2)), n_max)?;
            // F_n = Σ_j binom(n+1, 2j+1) 2^j.
            for (n, v) in entry.f_values.iter().enumerate() {
                let mut want = int(0);
                let mut pow2 = int(1);
                for j in 0..=(n + 1) / 2 {
                    want += binomial(n as u64 + 1, 2 * j as u64 + 1) * &pow2;
                    pow2 *= int(2);
                }
                check(name, "F", n, v, &want)?;
            }
            Ok(entry)
        }
        "pell_lucas" => {
            let core = Core::finite_i64(&[2, 1]);
            let entry = build(name, vec![], core, SeqKind::Identity, Some(int(2)), n_max)?;
            // G_n = 2 Σ_j binom(n, 2j) 2^j (the even-index binomial fold).
            for n in 1..=n_max {
                let mut want = int(0);
                let mut pow2 = int(1);
                for j in 0..=n / 2 {
                    want += binomial(n as u64, 2 * j as u64) * &pow2;
                    pow2 *= int(2);
                }
                check(name, "G", n, &entry.g_values[n - 1], &(int(2) * want))?;
            }
            Ok(entry)
        }
        "fibonacci_bivariate" => {
            let x = need_x("fibonacci_bivariate", params)?;
            let y = params.y.ok_or(Error::MissingFamilyParam {
                family: "fibonacci_bivariate",
                param: "y",
            })?;
            let core = Core::finite(vec![int(x), int(y)]);
            let entry = build(
                name,
                vec![("x", x.to_string()), ("y", y.to_string())],
                core,
                SeqKind::AllOnes,
                Some(int(2)),
                n_max,
            )?;
            // F_n = Σ_j binom(n−j, j) x^{n−2j} y^j and the weighted
            // G_n = Σ_j n/(n−j) binom(n−j, j) x^{n−2j} y^j.
            let xp = |e: usize| int(x).pow(e as u32);
            let yp = |e: usize| int(y).pow(e as u32);
            for n in 0..=n_max {
                let mut want = int(0);
                for j in 0..=n / 2 {
                    want += binomial((n - j) as u64, j as u64) * xp(n - 2 * j) * yp(j);
                }
                check(name, "F", n, &entry.f_values[n], &want)?;
            }
            for n in 1..=n_max {
                let mut want = int(0);
                for j in 0..=n / 2 {
                    let coeff = binomial((n - j) as u64, j as u64) * int(n as i64) / int((n - j) as i64);
                    want += coeff * xp(n - 2 * j) * yp(j);
                }
                check(name, "G", n, &entry.g_values[n - 1], &want)?;
            }
            Ok(entry)
        }
        "perrin" => {
            let core = Core::finite_i64(&[0, 1, 1]);
            let entry = build(name, vec![], core, SeqKind::Identity, Some(int(3)), n_max)?;
            // The classical seed (3, 0, 2) with a(n) = a(n−2) + a(n−3).
            let mut a = vec![int(3), int(0), int(2)];
            for n in 3..=n_max {
                let next = &a[n - 2] + &a[n - 3];
                a.push(next);
            }
            for n in 1..=n_max {
                check(name, "G", n, &entry.g_values[n - 1], &a[n])?;
            }
            Ok(entry)
        }
        "perrin_exponential" => {
            let core = Core::finite_i64(&[0, 1, 1]);
            let entry = build(name, vec![], core, SeqKind::AllOnes, Some(int(3)), n_max)?;
            // Independent route: generating-series coefficients.
            let series = crate::wip::series_coefficients(
                &crate::weights::WeightVector::AllOnes,
                &Core::finite_i64(&[0, 1, 1]),
                n_max,
            )?;
            for (n, v) in entry.f_values.iter().enumerate() {
                let via_series = series[n].to_integer();
                check(name, "F", n, v, &via_series)?;
            }
            Ok(entry)
        }
        _ => unreachable!("interned against FAMILY_NAMES above"),
    }
}

fn build(
    name: &'static str,
    params: Vec<(&'static str, String)>,
    core: Core,
    kind: SeqKind,
    g0: Option<Int>,
    n_max: usize,
) -> Result<FamilyEntry> {
    let f_values = core.gfp_values(n_max)?;
    let g_values = core.glp_values(n_max)?;
    Ok(FamilyEntry {
        name,
        params,
        core,
        kind,
        f_values,
        g_values,
        g0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{fit_core_f, fit_core_g};
    use crate::transform::ValueSeq;

    fn get(name: &str, params: FamilyParams, n: usize) -> FamilyEntry {
        family(name, &params, n).unwrap()
    }

    fn ints(values: &[i64]) -> Vec<Int> {
        values.iter().map(|&v| int(v)).collect()
    }

    #[test]
    fn every_family_generates_and_cross_checks() {
        for name in FAMILY_NAMES {
            let params = FamilyParams {
                p: Some(3),
                k: Some(2),
                x: Some(2),
                y: Some(1),
            };
            let entry = family(name, &params, 10).unwrap();
            assert_eq!(entry.f_values.len(), 11, "{name}");
            assert_eq!(entry.g_values.len(), 10, "{name}");
        }
    }

    #[test]
    fn headline_values_match_the_catalog() {
        assert_eq!(get("tau", FamilyParams::default(), 5).f_values, ints(&[1, 2, 3, 4, 5, 6]));
        let sigma = get("sigma", FamilyParams { p: Some(3), ..Default::default() }, 3);
        assert_eq!(sigma.f_values, ints(&[1, 4, 13, 40]));
        assert_eq!(sigma.core.coeffs(), &ints(&[4, -3])[..]);
        let phi = get("totient", FamilyParams { p: Some(5), ..Default::default() }, 4);
        assert_eq!(phi.f_values, ints(&[1, 4, 20, 100, 500]));
        assert_eq!(phi.g_values, ints(&[4, 24, 124, 624]));
        assert_eq!(phi.g0, Some(int(2)));
        let cat = get("catalan", FamilyParams::default(), 5);
        assert_eq!(cat.f_values, ints(&[1, 1, 2, 5, 14, 42]));
        assert_eq!(cat.g_values, ints(&[1, 3, 10, 35, 126]));
        let pell = get("pell", FamilyParams::default(), 4);
        assert_eq!(pell.f_values, ints(&[1, 2, 5, 12, 29]));
        let pl = get("pell_lucas", FamilyParams::default(), 4);
        assert_eq!(pl.g_values, ints(&[2, 6, 14, 34]));
        assert_eq!(pl.headline(), (1, &ints(&[2, 6, 14, 34])[..]));
        let tri = get("triangular", FamilyParams::default(), 4);
        assert_eq!(tri.f_values, ints(&[1, 3, 6, 10, 15]));
        assert_eq!(tri.g_values, ints(&[3, 3, 3, 3]));
        let perrin = get("perrin", FamilyParams::default(), 8);
        assert_eq!(perrin.g_values, ints(&[0, 2, 3, 2, 5, 5, 7, 10]));
        assert_eq!(perrin.g0, Some(int(3)));
        let pe = get("perrin_exponential", FamilyParams::default(), 7);
        assert_eq!(pe.f_values, ints(&[1, 0, 1, 1, 1, 2, 2, 3]));
        let fib = get(
            "fibonacci_bivariate",
            FamilyParams { x: Some(1), y: Some(1), ..Default::default() },
            6,
        );
        assert_eq!(fib.f_values, ints(&[1, 1, 2, 3, 5, 8, 13]));
        assert_eq!(fib.g_values, ints(&[1, 3, 4, 7, 11, 18]));
    }

    #[test]
    fn chebyshev_at_one_marches_with_tau() {
        let ch = get("chebyshev_u", FamilyParams { x: Some(1), ..Default::default() }, 6);
        assert_eq!(ch.f_values, ints(&[1, 2, 3, 4, 5, 6, 7]));
        assert_eq!(ch.g_values, ints(&[2, 2, 2, 2, 2, 2]));
        let ch2 = get("chebyshev_u", FamilyParams { x: Some(2), ..Default::default() }, 4);
        assert_eq!(ch2.f_values, ints(&[1, 4, 15, 56, 209]));
        assert_eq!(ch2.g_values, ints(&[4, 14, 52, 194]));
    }

    #[test]
    fn stirling_columns_match_the_tables() {
        let s4 = get("stirling2_col", FamilyParams { k: Some(4), ..Default::default() }, 6);
        assert_eq!(s4.core.coeffs(), &ints(&[10, -35, 50, -24])[..]);
        assert_eq!(s4.f_values[..4], ints(&[1, 10, 65, 350])[..]);
        assert_eq!(s4.f_values[6], int(34105));
        let s3 = get("stirling2_col", FamilyParams { k: Some(3), ..Default::default() }, 7);
        assert_eq!(s3.f_values[7], int(9330));
        assert_eq!(s3.g_values[..3], ints(&[6, 14, 36])[..]);
        let s1 = get("stirling2_col", FamilyParams { k: Some(1), ..Default::default() }, 5);
        assert_eq!(s1.core.coeffs(), &ints(&[1])[..]);
        assert_eq!(s1.f_values, ints(&[1; 6]));
    }

    #[test]
    fn jordan_values() {
        let j2 = get(
            "jordan",
            FamilyParams { p: Some(3), k: Some(2), ..Default::default() },
            4,
        );
        assert_eq!(j2.f_values, ints(&[1, 8, 72, 648, 5832]));
    }

    #[test]
    fn families_round_trip_through_fits() {
        let params = FamilyParams {
            p: Some(5),
            k: Some(3),
            x: Some(2),
            y: Some(-1),
        };
        for name in FAMILY_NAMES {
            let entry = family(name, &params, 12).unwrap();
            match entry.kind {
                SeqKind::AllOnes => {
                    let seq = ValueSeq::from_ints(0, &entry.f_values);
                    let fit = fit_core_f(&seq, entry.core.coeffs().len().min(10)).unwrap();
                    let refit = fit.integer_core().unwrap();
                    match entry.core.finite_degree() {
                        Some(_) => assert_eq!(refit.coeffs(), entry.core.coeffs(), "{name}"),
                        None => {
                            assert!(!fit.terminating, "{name}");
                            let shared = refit.coeffs().len().min(entry.core.coeffs().len());
                            assert_eq!(
                                refit.coeffs()[..shared],
                                entry.core.coeffs()[..shared],
                                "{name}"
                            );
                        }
                    }
                }
                SeqKind::Identity => {
                    let seq = ValueSeq::from_ints(1, &entry.g_values);
                    let fit = fit_core_g(&seq, entry.core.coeffs().len()).unwrap();
                    let refit = fit.integer_core().unwrap();
                    assert_eq!(refit.coeffs(), entry.core.coeffs(), "{name}");
                }
            }
        }
    }

    #[test]
    fn parameter_validation() {
        assert!(matches!(
            family("sigma", &FamilyParams::default(), 5),
            Err(Error::MissingFamilyParam { family: "sigma", param: "p" })
        ));
        assert!(matches!(
            family("totient", &FamilyParams { p: Some(6), ..Default::default() }, 5),
            Err(Error::NotPrime(6))
        ));
        assert!(matches!(
            family("stirling2_col", &FamilyParams { k: Some(9), ..Default::default() }, 5),
            Err(Error::FamilyParamOutOfRange { .. })
        ));
        assert!(matches!(
            family("waffles", &FamilyParams::default(), 5),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            family("jordan", &FamilyParams { p: Some(3), k: Some(0), ..Default::default() }, 5),
            Err(Error::FamilyParamOutOfRange { .. })
        ));
    }
}
