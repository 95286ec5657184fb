//! Exact determinants, pfaffians and the structural identities they satisfy.

pub mod identities;
pub mod matrix;
pub mod pfaffian;

pub use identities::{
    check_spa_spb, minor_summation, minor_summation_check, minor_summation_tuples, schlosser_det,
    schur_pfaffian, schur_pfaffian_t, SchlosserKind, SchlosserParams,
};
pub use matrix::Matrix;
pub use pfaffian::SkewMatrix;
