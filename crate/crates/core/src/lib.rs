//! Exact evaluation of Schur Q-polynomials at geometric progressions and at
//! the all-ones point.

pub mod arith;
pub mod crosscheck;
pub mod error;
pub mod formulas;
pub mod kernels;
pub mod linalg;
pub mod qseries;
pub mod tableaux;

pub use arith::{Field, Gaussian, LaurentPoly, QContext, RationalFn};
pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use num_traits::{One, Zero};

/// Symbolic context: exact elements of ℚ(s).
pub type SymbolicContext = QContext<RationalFn>;
/// Numeric context at a rational sample point `s = s0`.
pub type NumericContext = QContext<BigRational>;
