//! Randomized structural properties: fitting round-trips, operator inverses,
//! the convolution monoid laws, agreement of the independent construction
//! routes, and the exact linear algebra underneath them.

use isobaric::ring::{int, rat, Int, Rat};
use isobaric::{
    convolve, conv_inverse, fit_core_f, fit_core_g, hankel_rank, hessenberg_numeric, iso_exp,
    iso_log, wip_convolution_form, wip_explicit, wip_recursive, companion_window, Core, HessSign,
    SquareMatrix, ValueSeq, WeightVector,
};
use proptest::collection::vec as pvec;
use proptest::prelude::*;

fn core_strategy(max_k: usize) -> impl Strategy<Value = Core> {
    (1..=max_k).prop_flat_map(|k| {
        (pvec(-6i64..=6, k - 1), prop_oneof![-6i64..=-1, 1i64..=6]).prop_map(
            |(mut coeffs, last)| {
                coeffs.push(last);
                Core::finite_i64(&coeffs)
            },
        )
    })
}

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| Rat::new(int(n), int(d)))
}

fn seq_strategy(start: usize, len: usize) -> impl Strategy<Value = ValueSeq> {
    pvec(rat_strategy(), len).prop_map(move |v| ValueSeq::new(start, v))
}

fn weights_strategy(len: usize) -> impl Strategy<Value = WeightVector> {
    pvec(-5i64..=5, len)
        .prop_map(|w| WeightVector::Explicit(w.into_iter().map(int).collect()))
}

proptest! {
    #[test]
    fn all_ones_fit_recovers_the_core(core in core_strategy(4)) {
        let k = core.coeffs().len();
        let f = core.gfp_values(12).unwrap();
        let fit = fit_core_f(&ValueSeq::from_ints(0, &f), 6).unwrap();
        prop_assert!(fit.terminating);
        prop_assert_eq!(fit.k, Some(k));
        let refit = fit.integer_core().unwrap();
        prop_assert_eq!(refit.coeffs(), core.coeffs());
        let rats: Vec<Rat> = f.iter().map(|v| Rat::from(v.clone())).collect();
        prop_assert_eq!(hankel_rank(&rats), k);
    }

    #[test]
    fn identity_fit_pins_every_coefficient(core in core_strategy(4)) {
        let k = core.coeffs().len();
        let g = core.glp_values(12).unwrap();
        let fit = fit_core_g(&ValueSeq::from_ints(1, &g), 6).unwrap();
        prop_assert!(fit.terminating);
        prop_assert_eq!(fit.k, Some(k));
        let refit = fit.integer_core().unwrap();
        prop_assert_eq!(refit.coeffs(), core.coeffs());
    }

    #[test]
    fn log_and_exp_invert_each_other(
        core in core_strategy(3),
        seq in seq_strategy(1, 12),
    ) {
        let up = iso_exp(&core, &seq, 12).unwrap();
        let back = iso_log(&core, &up, 12).unwrap();
        prop_assert_eq!(&back, &seq);
        let down = iso_log(&core, &seq, 12).unwrap();
        let forth = iso_exp(&core, &down, 12).unwrap();
        prop_assert_eq!(&forth, &seq);
    }

    #[test]
    fn convolution_is_a_commutative_monoid(
        a in seq_strategy(0, 13),
        b in seq_strategy(0, 13),
        c in seq_strategy(0, 13),
    ) {
        let ab = convolve(&a, &b, 12).unwrap();
        let ba = convolve(&b, &a, 12).unwrap();
        prop_assert_eq!(&ab, &ba);
        let abc = convolve(&ab, &c, 12).unwrap();
        let bc = convolve(&b, &c, 12).unwrap();
        let a_bc = convolve(&a, &bc, 12).unwrap();
        prop_assert_eq!(&abc, &a_bc);
        let delta = ValueSeq::delta(12);
        prop_assert_eq!(&convolve(&a, &delta, 12).unwrap(), &a);
    }

    #[test]
    fn convolution_inverses_cancel(
        head in prop_oneof![-9i64..=-1, 1i64..=9],
        tail in pvec(rat_strategy(), 12),
    ) {
        let mut values = vec![rat(head)];
        values.extend(tail);
        let a = ValueSeq::new(0, values);
        let inv = conv_inverse(&a, 12).unwrap();
        prop_assert_eq!(&convolve(&a, &inv, 12).unwrap(), &ValueSeq::delta(12));
    }

    #[test]
    fn construction_routes_agree(
        (k, n) in (1usize..=3, 1usize..=6),
        core in core_strategy(3),
        omega_raw in pvec(-5i64..=5, 6),
    ) {
        let omega = WeightVector::Explicit(omega_raw.into_iter().map(int).collect());
        let explicit = wip_explicit(&omega, k, n).unwrap();
        let conv = wip_convolution_form(&omega, k, n).unwrap();
        prop_assert_eq!(&explicit, &conv);
        let seq = wip_recursive(&omega, k, n).unwrap();
        prop_assert_eq!(&explicit, seq.poly(n));
        // The three routes also agree after evaluation at a numeric core.
        let trimmed: Vec<Int> = core.coeffs().iter().take(k).cloned().collect();
        if trimmed.len() == k {
            let at = Core::finite(trimmed);
            let direct = explicit.evaluate(&at, None).unwrap();
            let run = seq.evaluate(&at, None).unwrap();
            prop_assert_eq!(&direct, &run[n]);
        }
    }

    #[test]
    fn hessenberg_routes_agree(
        n in 1usize..=5,
        core in core_strategy(3),
        omega in weights_strategy(5),
    ) {
        let plus = hessenberg_numeric(HessSign::Plus, &omega, &core, n).unwrap();
        let minus = hessenberg_numeric(HessSign::Minus, &omega, &core, n).unwrap();
        let value = plus.permanent_naive().unwrap();
        prop_assert_eq!(&value, &plus.permanent_hessenberg().unwrap());
        prop_assert_eq!(&value, &minus.determinant_hessenberg().unwrap());
        prop_assert_eq!(&value, &minus.determinant().unwrap());
        prop_assert_eq!(
            &plus.determinant_hessenberg().unwrap(),
            &minus.permanent_hessenberg().unwrap()
        );
    }

    #[test]
    fn window_columns_obey_the_recursion(core in core_strategy(3)) {
        let k = core.coeffs().len();
        let w = companion_window(&core, -4, 8).unwrap();
        for j in 1..=k {
            for n in (-4 + k as i64)..=8 {
                let mut acc = Rat::from(int(0));
                for (m, t) in core.coeffs().iter().enumerate() {
                    acc += Rat::from(t.clone()) * w.entry(n - 1 - m as i64, j);
                }
                prop_assert_eq!(&acc, w.entry(n, j), "column {}, row {}", j, n);
            }
        }
    }

    #[test]
    fn bareiss_matches_cofactor_expansion(
        n in 1usize..=4,
        pool in pvec((-5i64..=5, 1i64..=3), 16),
    ) {
        let rows: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| {
                let (num, den) = pool[i * n + j];
                Rat::new(int(num), int(den))
            }).collect())
            .collect();
        let m = SquareMatrix::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(m.determinant().unwrap(), cofactor_det(&rows));
    }
}

fn cofactor_det(rows: &[Vec<Rat>]) -> Rat {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Rat::from(int(0));
    for (j, head) in rows[0].iter().enumerate() {
        let minor: Vec<Vec<Rat>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let signed = head.clone() * cofactor_det(&minor);
        if j % 2 == 0 {
            acc += signed;
        } else {
            acc -= signed;
        }
    }
    acc
}
