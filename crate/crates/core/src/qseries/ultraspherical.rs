//! Monic continuous q-ultraspherical polynomials `c_k` at parameter `−q`.

use crate::arith::{Field, QContext};
use crate::error::Result;

use super::one_var::p1_coeffs;
use super::pochhammer::qpoch;

/// Coefficients of `c_k(ξ)` in the monomial basis `ξ^0, …, ξ^k`, obtained from
/// `c_k(z + 1/z) = (q;q)_k/(−q;q)_k · z^{−k} P_k(−z²)`.
pub fn c_monic<F: Field>(k: usize, ctx: &QContext<F>) -> Result<Vec<F>> {
    let q = ctx.q();
    let a = p1_coeffs(k, ctx)?;
    let scale = qpoch(&q, &q, k as i64)?.checked_div(&qpoch(&-q.clone(), &q, k as i64)?)?;
    // Laurent coefficients in z: index t ↔ z^{t−k}, t = 0..2k; z^{2j−k} gets (−1)^j a_j.
    let mut lz: Vec<F> = vec![F::zero(); 2 * k + 1];
    for (j, aj) in a.iter().enumerate() {
        let v = aj.clone() * &scale;
        lz[2 * j] = if j % 2 == 0 { v } else { -v };
    }
    // Peel off top powers: z^d + z^{-d} + … via (z + 1/z)^d.
    let mut out = vec![F::zero(); k + 1];
    for d in (0..=k).rev() {
        let c = lz[k + d].clone();
        if c.is_zero() {
            continue;
        }
        out[d] = c.clone();
        // subtract c (z + 1/z)^d = c Σ_i binom(d, i) z^{d−2i}
        let mut b = F::one();
        for i in 0..=d {
            let idx = k + d - 2 * i;
            lz[idx] = lz[idx].clone() - c.clone() * &b;
            b = b * F::from_i64((d - i) as i64) * F::from_frac(1, (i + 1) as i64);
        }
    }
    Ok(out)
}

/// `‖c_k‖² = (q;q)_k (q;q)_{k+1} / ((−q;q)_k (−q;q)_{k+1})`.
pub fn c_norm<F: Field>(k: usize, ctx: &QContext<F>) -> Result<F> {
    let q = ctx.q();
    let mq = -q.clone();
    let k = k as i64;
    let num = qpoch(&q, &q, k)? * qpoch(&q, &q, k + 1)?;
    let den = qpoch(&mq, &q, k)? * qpoch(&mq, &q, k + 1)?;
    num.checked_div(&den)
}

/// Recurrence coefficient `γ_k` in `c_{k+1} = ξ c_k − γ_k c_{k−1}`.
pub fn c_gamma<F: Field>(k: usize, ctx: &QContext<F>) -> Result<F> {
    let a = ctx.q_pow(k as i64);
    let b = ctx.q_pow(k as i64 + 1);
    ((F::one() - &a) * (F::one() - &b)).checked_div(&((F::one() + &a) * (F::one() + &b)))
}

/// Evaluate a coefficient list at `x`.
pub fn horner<F: Field>(coeffs: &[F], x: &F) -> F {
    let mut acc = F::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalFn;
    use num_traits::{One, Zero};

    #[test]
    fn low_degrees() {
        let c = QContext::symbolic(1).unwrap();
        assert_eq!(c_monic(0, &c).unwrap(), vec![RationalFn::one()]);
        assert_eq!(c_monic(1, &c).unwrap(), vec![RationalFn::zero(), RationalFn::one()]);
    }

    #[test]
    fn three_term_recurrence() {
        let c = QContext::symbolic(1).unwrap();
        let polys: Vec<Vec<RationalFn>> = (0..=6).map(|k| c_monic(k, &c).unwrap()).collect();
        for k in 1..6 {
            let g = c_gamma(k, &c).unwrap();
            let mut expect = vec![RationalFn::zero(); k + 2];
            for (i, a) in polys[k].iter().enumerate() {
                expect[i + 1] = expect[i + 1].clone() + a;
            }
            for (i, a) in polys[k - 1].iter().enumerate() {
                expect[i] = expect[i].clone() - g.clone() * a;
            }
            assert_eq!(polys[k + 1], expect, "k={k}");
            assert!(polys[k + 1][k + 1].is_one());
        }
    }
}
