//! The `q = 1` counts `Q_λ(1^N)` for even `ℓ(λ)` from the kernels of the
//! continuous dual Hahn systems.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{int, Gaussian};
use crate::error::{Error, Result};
use crate::tableaux::StrictPartition;

use super::kernel::{multikernel_det, multikernel_pfaff_sqrt};
use super::system::OrthoSystem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicalKernelForm {
    /// Determinant over the Vandermonde.
    Det,
    /// Pfaffian in `√(−λ_i²) = i λ_i`, evaluated over the Gaussian rationals.
    PfaffSqrt,
}

/// `Q_λ(1^N)` with `ℓ(λ) = 2m`, `N = 2n + ε`:
/// `4^m Π λ_i^ε Π_{i<j}(λ_i − λ_j) K_m^{n,ε}(−λ_1², …, −λ_{2m}²)`.
pub fn q_one_multikernel(lambda: &StrictPartition, big_n: usize, form: ClassicalKernelForm) -> Result<BigInt> {
    let len = lambda.len();
    if len % 2 == 1 {
        return Err(Error::Parity(format!("kernel form needs an even number of rows, got {lambda}")));
    }
    if len == 0 {
        return Ok(BigInt::one());
    }
    if len > big_n {
        return Ok(BigInt::zero());
    }
    let (m, n, eps) = (len / 2, big_n / 2, (big_n % 2) as u8);
    let sys = OrthoSystem::<BigRational>::classical(n + m, eps)?;
    let l = lambda.parts();
    let k = match form {
        ClassicalKernelForm::Det => {
            let ys: Vec<BigRational> = l.iter().map(|&x| -int((x * x) as i64)).collect();
            multikernel_det(&sys, n, &ys)?
        }
        ClassicalKernelForm::PfaffSqrt => {
            let gsys = sys.map(|c| Gaussian::real(c.clone()));
            let roots: Vec<Gaussian<BigRational>> =
                l.iter().map(|&x| Gaussian::new(BigRational::zero(), int(x as i64))).collect();
            multikernel_pfaff_sqrt(&gsys, n, &roots)?.into_real()?
        }
    };
    let mut v = k * int(4).pow(m as i32);
    for i in 0..len {
        if eps == 1 {
            v *= int(l[i] as i64);
        }
        for j in i + 1..len {
            v *= int(l[i] as i64 - l[j] as i64);
        }
    }
    if !v.is_integer() {
        return Err(Error::Invariant(format!("non-integer count {v} for {lambda}, N = {big_n}")));
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::count_marked;

    #[test]
    fn counts_match_tableaux() {
        for lambda in StrictPartition::all(5, 4).into_iter().filter(|l| l.len() % 2 == 0) {
            for n in 0..=6 {
                let expect = count_marked(&lambda, n);
                for form in [ClassicalKernelForm::Det, ClassicalKernelForm::PfaffSqrt] {
                    assert_eq!(q_one_multikernel(&lambda, n, form).unwrap(), expect, "{lambda} N={n} {form:?}");
                }
            }
        }
    }
}
