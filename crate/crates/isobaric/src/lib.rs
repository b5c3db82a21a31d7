//! Exact arithmetic for weighted isobaric polynomials: the polynomial
//! families themselves, the companion-matrix and Hessenberg machinery
//! around them, convolution-style operators on sequences, and fitting of
//! integer sequences and arithmetic functions to linear recursions.
//!
//! Everything is exact: integers are arbitrary precision and rationals are
//! exact fractions. No floating point is used anywhere.

pub mod bfile;
pub mod error;
pub mod family;
pub mod ring;
pub mod weights;
pub mod partitions;
pub mod poly;
pub mod series;
pub mod wip;
pub mod matrix;
pub mod transform;
pub mod arith;
pub mod verify;

pub use arith::{
    companion_sequence, dirichlet_convolve, falling_factorial_core, fit_core_f, fit_core_g,
    hankel_rank, is_multiplicative, jordan_of, local_representation, local_representation_fn,
    period_mod, ramification_check, sigma_of, stirling1_unsigned_table, stirling2_table,
    stirling_column_values, stirling_relation_check, tau_of, totient_of, ArithFn, FitResult,
    MultReport, PeriodReport, RamificationReport, SeqKind, StirlingReport,
};
pub use bfile::{parse_bfile, BFile};
pub use error::{Error, Result};
pub use family::{family, FamilyEntry, FamilyParams, FAMILY_NAMES};
pub use matrix::{
    companion_numeric, companion_symbolic, companion_window, companion_window_symbolic,
    different_det_numeric, different_det_symbolic, different_matrix_numeric,
    different_matrix_symbolic, different_window, different_window_symbolic, hessenberg_numeric,
    hessenberg_symbolic, schur_hook, HessSign, MatrixWindow, SquareMatrix,
};
pub use partitions::{enumerate_partitions, multinomial, wip_coefficient, Alpha};
pub use poly::{symbolic_core, symbolic_t, Core, CoreKind, IsobaricPoly};
pub use ring::{Int, Rat, Ring};
pub use series::Series;
pub use transform::{
    conv_inverse, convolve, convolve_ring, core_product, iso_exp, iso_log, isotrig, TrigPair,
    ValueSeq,
};
pub use verify::{first_failure, run_identity_suite, CheckResult};
pub use weights::WeightVector;
pub use wip::{
    gfp, glp, series_coefficients, series_coefficients_symbolic, wip_convolution_form,
    wip_explicit, wip_recursive, PolySeq,
};
