//! A discrete Selberg-type summation and the odd-staircase evaluation it
//! yields.

use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::linalg::identities::subsets;
use crate::qseries::qpoch;

use super::points::{binom2, binom3, sign};

/// Both sides of
/// `Σ_{0≤k_m<…<k_1≤n} Π_{i<j}(q^{k_j}−q^{k_i})² Π_i (x;q)_{k_i}(y;q)_{n−k_i}/((q;q)_{k_i}(q;q)_{n−k_i}) y^{k_i}
///  = q^{2C(m,3)} y^{C(m,2)} Π_i (x,y,q;q)_{i−1}(xyq^{i+m−2};q)_{n+1−m}/(q;q)_{n+i−m}`.
pub fn krattenthaler<F: Field>(x: &F, y: &F, n: usize, m: usize, ctx: &QContext<F>) -> Result<(F, F)> {
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("need m ≤ n + 1, got m = {m}, n = {n}")));
    }
    let q = ctx.q();
    let (ni, mi) = (n as i64, m as i64);
    let w: Vec<F> = (0..=ni)
        .map(|k| {
            let num = qpoch(x, &q, k)? * qpoch(y, &q, ni - k)? * y.powi(k)?;
            num.checked_div(&(qpoch(&q, &q, k)? * qpoch(&q, &q, ni - k)?))
        })
        .collect::<Result<_>>()?;
    let qp: Vec<F> = (0..=ni).map(|k| ctx.q_pow(k)).collect();
    let mut lhs = F::zero();
    for ks in subsets(n + 1, m) {
        let mut t = F::one();
        for i in 0..m {
            t = t * &w[ks[i]];
            for j in i + 1..m {
                t = t * (qp[ks[j]].clone() - &qp[ks[i]]).square();
            }
        }
        lhs = lhs + t;
    }
    let mut rhs = ctx.q_pow(2 * binom3(mi)) * y.powi(binom2(mi))?;
    let xy = x.clone() * y;
    for i in 1..=mi {
        let num = qpoch(x, &q, i - 1)?
            * qpoch(y, &q, i - 1)?
            * qpoch(&q, &q, i - 1)?
            * qpoch(&(xy.clone() * ctx.q_pow(i + mi - 2)), &q, ni + 1 - mi)?;
        rhs = rhs * num.checked_div(&qpoch(&q, &q, ni + i - mi)?)?;
    }
    Ok((lhs, rhs))
}

/// The three expressions for `P_n(q, q³, …, q^{2m−1})`: the summation
/// side at `x = y = −q`, and the two product forms.
pub fn odd_staircase_forms<F: Field>(n: usize, m: usize, ctx: &QContext<F>) -> Result<[F; 3]> {
    let q = ctx.q();
    let mq = -q.clone();
    let (sum, _) = krattenthaler(&mq, &mq, n, m, ctx)?;
    let (ni, mi) = (n as i64, m as i64);
    let pref = F::from_i64(sign(binom2(mi))) * ctx.q_frac(binom3(2 * mi), 4)?;
    let q2 = ctx.q_pow(2);
    let mut first = pref.clone();
    let mut second = pref;
    for i in 1..=mi {
        let num = qpoch(&mq, &q, i - 1)?.square() * qpoch(&q, &q, i - 1)? * qpoch(&ctx.q_pow(i + mi), &q, ni + 1 - mi)?;
        first = first * num.checked_div(&qpoch(&q, &q, ni + i - mi)?)?;
        let den = qpoch(&q, &q2, i - 1)? * qpoch(&q, &q2, i)?;
        second = second * qpoch(&ctx.q_pow(ni + 1 - mi + i), &q, mi)?.checked_div(&den)?;
    }
    Ok([sum, first, second])
}

/// `Π_i (aq^i;q)_m` and `Π_i (aq^i;q)_i (aq^i;q)_{i−1}`.
pub fn epi_sides<F: Field>(a: &F, m: usize, ctx: &QContext<F>) -> Result<(F, F)> {
    let q = ctx.q();
    let mut l = F::one();
    let mut r = F::one();
    for i in 1..=m as i64 {
        let b = a.clone() * ctx.q_pow(i);
        l = l * qpoch(&b, &q, m as i64)?;
        r = r * qpoch(&b, &q, i)? * qpoch(&b, &q, i - 1)?;
    }
    Ok((l, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, RationalFn};
    use crate::formulas::p_multisum;
    use num_traits::One;

    #[test]
    fn summation_at_sample_points() {
        let ctx = QContext::numeric(rat(2, 5), 1).unwrap();
        for (x, y) in [(rat(3, 7), rat(-5, 2)), (rat(1, 3), rat(4, 9))] {
            for n in 0..=4 {
                for m in 1..=(n + 1).min(3) {
                    let (l, r) = krattenthaler(&x, &y, n, m, &ctx).unwrap();
                    assert_eq!(l, r, "n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn odd_staircase_three_ways() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        for m in 1..=3usize {
            for n in m - 1..=4 {
                let [a, b, c] = odd_staircase_forms(n, m, &ctx).unwrap();
                let xs: Vec<RationalFn> = (1..=m as i64).map(|i| ctx.q_pow(2 * i - 1)).collect();
                let p = p_multisum(&xs, n, &ctx).unwrap();
                assert_eq!(a, p);
                assert_eq!(b, p);
                assert_eq!(c, p);
            }
        }
    }

    #[test]
    fn elementary_product() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        for m in 0..=4 {
            let (l, r) = epi_sides(&RationalFn::one(), m, &ctx).unwrap();
            assert_eq!(l, r);
            let (l, r) = epi_sides(&RationalFn::from_int_coeffs(&[0, 0, 3]), m, &ctx).unwrap();
            assert_eq!(l, r);
        }
    }
}
