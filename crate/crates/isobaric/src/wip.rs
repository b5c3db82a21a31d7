//! Weighted isobaric polynomials.
//!
//! For a weight vector ω and part bound k, the polynomial of isobaric
//! degree n is
//!
//! ```text
//! P_{ω,k,n} = sum over partitions α of n with parts ≤ k of
//!             multinomial(α) (ω·α / |α|) t1^α1 ... tk^αk
//! ```
//!
//! Four independent routes to the same object live here:
//!
//! * [`wip_explicit`]: the sum above, straight off the partition list;
//! * [`wip_recursive`]: the linear recursion `P_n = sum t_j P_{n-j} + ω_n t_n`
//!   with `t_m = 0` for m > k, seeded by `P_0 = 1`;
//! * [`wip_convolution_form`]: `P_n = sum_j ω_j t_j F_{n-j}` against the
//!   all-ones sequence;
//! * [`series_coefficients`]: coefficients of
//!   `1 + (sum ω_j t_j y^j) / (1 - t1 y - ... - tk y^k)`.
//!
//! All-ones weights give the generalized Fibonacci polynomials (GFP, written
//! F); identity weights give the generalized Lucas polynomials (GLP, written
//! G). `P_0 = 1` is the F-type convention; stored G-sequences instead carry
//! `G_0 = k`, which the index-0-aware callers handle explicitly.

use crate::error::Result;
use crate::partitions::{enumerate_partitions, wip_coefficient};
use crate::poly::{symbolic_t, Core, IsobaricPoly};
use crate::ring::{rat_of, Int, Rat, Ring};
use crate::series::Series;
use crate::weights::WeightVector;

/// A run `P_0..P_n` of weighted isobaric polynomials for one (ω, k).
#[derive(Debug, Clone, PartialEq)]
pub struct PolySeq {
    pub weight: WeightVector,
    pub k: usize,
    polys: Vec<IsobaricPoly>,
}

impl PolySeq {
    pub fn n_max(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn poly(&self, n: usize) -> &IsobaricPoly {
        &self.polys[n]
    }

    pub fn polys(&self) -> &[IsobaricPoly] {
        &self.polys
    }

    /// Values at a numeric core, index 0 included.
    pub fn evaluate(&self, core: &Core, modulus: Option<u64>) -> Result<Vec<Int>> {
        self.polys.iter().map(|p| p.evaluate(core, modulus)).collect()
    }
}

/// `P_{ω,k,n}` by direct summation over partitions. `n = 0` returns 1.
pub fn wip_explicit(omega: &WeightVector, k: usize, n: usize) -> Result<IsobaricPoly> {
    if n == 0 {
        return Ok(IsobaricPoly::one());
    }
    let mut acc = IsobaricPoly::zero();
    for alpha in enumerate_partitions(n as u64, k) {
        let c = wip_coefficient(&alpha, omega)?;
        acc = acc.add(&IsobaricPoly::monomial(alpha, c));
    }
    Ok(acc)
}

/// `P_0..P_{n_max}` by the linear recursion. The head term `ω_n t_n`
/// vanishes for n > k, so explicit weight vectors only need entries
/// through `min(n_max, k)`.
pub fn wip_recursive(omega: &WeightVector, k: usize, n_max: usize) -> Result<PolySeq> {
    let mut polys = vec![IsobaricPoly::one()];
    for n in 1..=n_max {
        let mut acc = if n <= k {
            symbolic_t(n, k).scale(&omega.get(n)?)
        } else {
            IsobaricPoly::zero()
        };
        for j in 1..=k.min(n - 1) {
            acc = acc.add(&symbolic_t(j, k).mul(&polys[n - j]));
        }
        polys.push(acc);
    }
    Ok(PolySeq {
        weight: omega.clone(),
        k,
        polys,
    })
}

/// `P_{ω,k,n} = sum_{j=1}^{min(n,k)} ω_j t_j F_{k,n-j}` with F the all-ones
/// sequence on the same part bound.
pub fn wip_convolution_form(omega: &WeightVector, k: usize, n: usize) -> Result<IsobaricPoly> {
    if n == 0 {
        return Ok(IsobaricPoly::one());
    }
    let f = wip_recursive(&WeightVector::AllOnes, k, n - 1)?;
    let mut acc = IsobaricPoly::zero();
    for j in 1..=k.min(n) {
        let wt = symbolic_t(j, k).scale(&omega.get(j)?);
        acc = acc.add(&wt.mul(f.poly(n - j)));
    }
    Ok(acc)
}

/// Shorthand: the generalized Fibonacci polynomial `F_{k,n}`.
pub fn gfp(k: usize, n: usize) -> IsobaricPoly {
    wip_explicit(&WeightVector::AllOnes, k, n).expect("all-ones weights cannot fail")
}

/// Shorthand: the generalized Lucas polynomial `G_{k,n}` for n >= 1.
/// The stored-sequence convention at index 0 is the constant k.
pub fn glp(k: usize, n: usize) -> IsobaricPoly {
    wip_explicit(&WeightVector::Identity, k, n).expect("identity weights cannot fail")
}

/// Symbolic coefficients of the weighted generating function
/// `Ω(y) = 1 + (sum_{j<=k} ω_j t_j y^j) / (1 - p(y))`, `p(y) = sum t_j y^j`,
/// through `y^{n_max}`. Index 0 is always 1 regardless of any stored
/// index-0 convention.
pub fn series_coefficients_symbolic(
    omega: &WeightVector,
    k: usize,
    n_max: usize,
) -> Result<Vec<IsobaricPoly>> {
    let len = n_max + 1;
    let mut numer = vec![IsobaricPoly::zero(); len];
    let mut denom = vec![IsobaricPoly::zero(); len];
    denom[0] = IsobaricPoly::one();
    for j in 1..=k.min(n_max) {
        numer[j] = symbolic_t(j, k).scale(&omega.get(j)?);
        denom[j] = symbolic_t(j, k).neg();
    }
    let quotient = Series::new(numer).div(&Series::new(denom))?;
    let mut out = quotient.coeffs().to_vec();
    out[0] = IsobaricPoly::one();
    Ok(out)
}

/// Numeric coefficients of `Ω(y)` at a core. Finite cores take their own
/// degree for k; series cores must be known through `n_max`.
pub fn series_coefficients(
    omega: &WeightVector,
    core: &Core,
    n_max: usize,
) -> Result<Vec<Rat>> {
    let len = n_max + 1;
    let top = match core.finite_degree() {
        Some(k) => k.min(n_max),
        None => n_max,
    };
    let mut numer = vec![Rat::zero(); len];
    let mut denom = vec![Rat::zero(); len];
    denom[0] = Rat::one();
    for j in 1..=top {
        let tj = rat_of(&core.get_extended(j)?);
        numer[j] = tj.mul(&Rat::from_int(&omega.get(j)?));
        denom[j] = tj.neg();
    }
    let quotient = Series::new(numer).div(&Series::new(denom))?;
    let mut out = quotient.coeffs().to_vec();
    out[0] = Rat::one();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn explicit(omega: &WeightVector, k: usize, n: usize) -> IsobaricPoly {
        wip_explicit(omega, k, n).unwrap()
    }

    #[test]
    fn gfp_table_through_degree_six() {
        let want = [
            "1",
            "t1",
            "t1^2 + t2",
            "t1^3 + 2 t1 t2 + t3",
            "t1^4 + 3 t1^2 t2 + t2^2 + 2 t1 t3 + t4",
            "t1^5 + 4 t1^3 t2 + 3 t1 t2^2 + 3 t1^2 t3 + 2 t2 t3 + 2 t1 t4 + t5",
            "t1^6 + 5 t1^4 t2 + 6 t1^2 t2^2 + 4 t1^3 t3 + t2^3 + 6 t1 t2 t3 \
             + 3 t1^2 t4 + t3^2 + 2 t2 t4 + 2 t1 t5 + t6",
        ];
        for (n, w) in want.iter().enumerate() {
            assert_eq!(gfp(7, n).to_string(), *w, "F_{n}");
        }
    }

    #[test]
    fn glp_table_through_degree_six() {
        let want = [
            "t1",
            "t1^2 + 2 t2",
            "t1^3 + 3 t1 t2 + 3 t3",
            "t1^4 + 4 t1^2 t2 + 2 t2^2 + 4 t1 t3 + 4 t4",
            "t1^5 + 5 t1^3 t2 + 5 t1 t2^2 + 5 t1^2 t3 + 5 t2 t3 + 5 t1 t4 + 5 t5",
            "t1^6 + 6 t1^4 t2 + 9 t1^2 t2^2 + 6 t1^3 t3 + 2 t2^3 + 12 t1 t2 t3 \
             + 6 t1^2 t4 + 3 t3^2 + 6 t2 t4 + 6 t1 t5 + 6 t6",
        ];
        for (i, w) in want.iter().enumerate() {
            assert_eq!(glp(7, i + 1).to_string(), *w, "G_{}", i + 1);
        }
        // The generating series starts at 1; the stored convention G_0 = k
        // belongs to sequence holders, not to the explicit formula.
        assert_eq!(glp(7, 0).to_string(), "1");
    }

    #[test]
    fn part_bound_truncates_the_tables() {
        assert_eq!(gfp(2, 4).to_string(), "t1^4 + 3 t1^2 t2 + t2^2");
        assert_eq!(glp(2, 3).to_string(), "t1^3 + 3 t1 t2");
        assert_eq!(gfp(1, 5).to_string(), "t1^5");
    }

    #[test]
    fn custom_weights_match_the_weighted_coefficients() {
        // ω = (1,2,3,4), k = 4, n = 4.
        let w = WeightVector::Explicit(vec![int(1), int(2), int(3), int(4)]);
        assert_eq!(
            explicit(&w, 4, 4).to_string(),
            "t1^4 + 4 t1^2 t2 + 2 t2^2 + 4 t1 t3 + 4 t4"
        );
        // ω = (1,0,0): only the t1-carrying partitions survive with weight α1/|α|.
        let w = WeightVector::Explicit(vec![int(1), int(0), int(0)]);
        assert_eq!(explicit(&w, 3, 3).to_string(), "t1^3 + t1 t2");
    }

    #[test]
    fn three_routes_agree_on_small_grids() {
        let weights = [
            WeightVector::AllOnes,
            WeightVector::Identity,
            WeightVector::Constant(int(-2)),
            WeightVector::Explicit(vec![int(3), int(-1), int(0), int(5), int(2)]),
        ];
        for omega in &weights {
            for k in 1..=4 {
                let rec = wip_recursive(omega, k, 8).unwrap();
                for n in 0..=8 {
                    let e = explicit(omega, k, n);
                    assert_eq!(&e, rec.poly(n), "explicit vs recursive k={k} n={n}");
                    assert_eq!(
                        e,
                        wip_convolution_form(omega, k, n).unwrap(),
                        "explicit vs convolution k={k} n={n}"
                    );
                }
                let series = series_coefficients_symbolic(omega, k, 8).unwrap();
                for n in 1..=8 {
                    assert_eq!(&series[n], rec.poly(n), "series vs recursive k={k} n={n}");
                }
                assert_eq!(series[0], IsobaricPoly::one());
            }
        }
    }

    #[test]
    fn convolution_form_spot_values() {
        // n = 2, any k >= 2: ω1 t1 F_1 + ω2 t2 F_0 = ω1 t1^2 + ω2 t2.
        let w = WeightVector::Explicit(vec![int(5), int(7)]);
        assert_eq!(
            wip_convolution_form(&w, 2, 2).unwrap().to_string(),
            "5 t1^2 + 7 t2"
        );
    }

    #[test]
    fn numeric_series_coefficients() {
        // All-ones at the Fibonacci core.
        let fib = Core::finite_i64(&[1, 1]);
        let f = series_coefficients(&WeightVector::AllOnes, &fib, 6).unwrap();
        assert_eq!(f, [1, 1, 2, 3, 5, 8, 13].map(rat).to_vec());
        // Identity weights: index 0 of the series is 1, not the stored G_0 = 2.
        let g = series_coefficients(&WeightVector::Identity, &fib, 4).unwrap();
        assert_eq!(g, [1, 1, 3, 4, 7].map(rat).to_vec());
        // Geometric check: core (c) in degree 1 gives powers of c.
        let c3 = Core::finite_i64(&[3]);
        let p = series_coefficients(&WeightVector::AllOnes, &c3, 5).unwrap();
        assert_eq!(p, [1, 3, 9, 27, 81, 243].map(rat).to_vec());
        // Series cores must cover the requested depth.
        let tot = Core::series(vec![int(4); 3]);
        assert!(series_coefficients(&WeightVector::AllOnes, &tot, 5).is_err());
        let ok = series_coefficients(&WeightVector::AllOnes, &tot, 3).unwrap();
        assert_eq!(ok, [1, 4, 20, 100].map(rat).to_vec());
    }

    #[test]
    fn recursion_values_match_symbolic_evaluation() {
        let fib = Core::finite_i64(&[1, 1]);
        let f = wip_recursive(&WeightVector::AllOnes, 2, 10).unwrap();
        assert_eq!(f.evaluate(&fib, None).unwrap(), fib.gfp_values(10).unwrap());
        let g = wip_recursive(&WeightVector::Identity, 2, 10).unwrap();
        let g_vals = g.evaluate(&fib, None).unwrap();
        assert_eq!(g_vals[1..].to_vec(), fib.glp_values(10).unwrap());
    }

    #[test]
    fn short_explicit_weights_fail_loudly() {
        let w = WeightVector::Explicit(vec![int(1)]);
        assert!(wip_recursive(&w, 3, 5).is_err());
        assert!(wip_explicit(&w, 3, 2).is_err());
        // But a vector covering min(n_max, k) suffices.
        assert!(wip_recursive(&w, 1, 5).is_ok());
    }
}
