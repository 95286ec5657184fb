//! q-Pochhammer symbols, terminating basic hypergeometric series, the
//! one-variable `P_n`, continuous q-ultraspherical polynomials and their
//! classical limits.

pub mod classical;
pub mod one_var;
pub mod pochhammer;
pub mod ultraspherical;

pub use classical::{abel_orthogonality, classical_norm, classical_pk, f_poly};
pub use one_var::{
    askey_wilson, p1_aw_chi, p1_aw_cid, p1_aw_cidb, p1_chia, p1_coeffs, p1_direct, p1_phi43,
    Phi43Form,
};
pub use pochhammer::{binomial, factorial, hyp_f, phi, poch, qpoch, qpoch_many};
pub use ultraspherical::{c_gamma, c_monic, c_norm, horner};
