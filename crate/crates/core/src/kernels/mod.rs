//! Christoffel–Darboux kernels, generalized rectangular Schur functions and
//! the moment functionals behind them.

mod classical;
mod kernel;
mod measure;
mod schur;
mod system;

pub use classical::{q_one_multikernel, ClassicalKernelForm};
pub use kernel::{
    kernel_quotient, kernel_sum, ktilde_alternating, ktilde_quotient, ktilde_sum, multikernel_det, multikernel_mk_det,
    multikernel_mk_sum, multikernel_pfaff_sqrt, multikernel_pfaff_xi, multikernel_tilde_det, multikernel_tilde_pfaff_w,
    multikernel_tilde_pfaff_xi, vandermonde,
};
pub use measure::{appendix_p, gram_matrix, kif_check, kif_sides, lambda_apply, mu_moments, MomentFunctional};
pub use schur::{
    divided_difference, rect_schur, rect_schur_tilde, sample_points, sfl_sides, theorem_pkt_check,
    theorem_pkt_kernel_sides, theorem_pkt_sides,
};
pub use system::OrthoSystem;
