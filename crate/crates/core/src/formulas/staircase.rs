//! Closed products for the staircase shapes, where `Q_λ(1, q, …, q^n)`
//! factors completely.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::qseries::{factorial, qpoch};
use crate::tableaux::StrictPartition;

use super::points::{binom2, binom3, sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StaircaseKind {
    /// `(m, m−1, …, 1)`
    Plain,
    /// `(2m−1, 2m−3, …, 1)`
    Odd,
    /// `(2m, 2m−2, …, 2)`
    Even,
    /// Not a partition: `P_n` at the half-integer powers `q^{1/2}, q^{3/2}, …`.
    Half,
}

impl StaircaseKind {
    pub const ALL: [StaircaseKind; 4] =
        [StaircaseKind::Plain, StaircaseKind::Odd, StaircaseKind::Even, StaircaseKind::Half];

    /// The shape, or `None` for the half-integer specialization.
    pub fn partition(self, m: usize) -> Option<StrictPartition> {
        let parts: Vec<usize> = match self {
            StaircaseKind::Plain => (1..=m).rev().collect(),
            StaircaseKind::Odd => (1..=m).rev().map(|i| 2 * i - 1).collect(),
            StaircaseKind::Even => (1..=m).rev().map(|i| 2 * i).collect(),
            StaircaseKind::Half => return None,
        };
        Some(StrictPartition::new(parts).expect("staircases are strict"))
    }

    /// Exponents `e_i` (in units of `q^{1/2}`) of the points `x_i = q^{e_i/2}`
    /// at which the multiple sums collapse to a single term.
    pub fn half_exponents(self, m: usize) -> Vec<i64> {
        (1..=m as i64)
            .map(|i| match self {
                StaircaseKind::Plain => 2 * i,
                StaircaseKind::Odd => 4 * i - 2,
                StaircaseKind::Even => 4 * i,
                StaircaseKind::Half => 2 * i - 1,
            })
            .collect()
    }
}

impl fmt::Display for StaircaseKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StaircaseKind::Plain => "plain",
            StaircaseKind::Odd => "odd",
            StaircaseKind::Even => "even",
            StaircaseKind::Half => "half",
        })
    }
}

impl FromStr for StaircaseKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StaircaseKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown staircase {s:?}")))
    }
}

/// `Q_λ(1, q, …, q^n)` for the plain, odd and even staircases of length
/// `m`; for [`StaircaseKind::Half`], `P_n(q^{1/2}, q^{3/2}, …, q^{m−1/2})`
/// (needs root order 2).
pub fn q_staircase<F: Field>(kind: StaircaseKind, m: usize, n: usize, ctx: &QContext<F>) -> Result<F> {
    if m > n + 1 {
        return Ok(F::zero());
    }
    let (mi, ni) = (m as i64, n as i64);
    let q = ctx.q();
    let q2 = ctx.q_pow(2);
    let two_m = F::from_i64(2).powi(mi)?;
    let top = |i: i64| ctx.q_pow(ni + 1 - mi + i);
    match kind {
        StaircaseKind::Plain => {
            let mut v = two_m * ctx.q_pow(binom3(mi + 1));
            for i in 1..=mi {
                v = v * qpoch(&top(i), &q, i)?.checked_div(&qpoch(&q, &q2, i)?)?;
            }
            Ok(v)
        }
        StaircaseKind::Odd => {
            let mut v = two_m * ctx.q_frac(binom3(2 * mi), 4)?;
            for i in 1..=mi {
                let den = qpoch(&q, &q2, i - 1)? * qpoch(&q, &q2, i)?;
                v = v * qpoch(&top(i), &q, mi)?.checked_div(&den)?;
            }
            Ok(v)
        }
        StaircaseKind::Even => {
            let mut v = two_m * ctx.q_pow(2 * binom3(mi + 1));
            for i in 1..=mi {
                v = v * qpoch(&top(i), &q, i)?.checked_div(&qpoch(&q, &q2, i)?)?.square();
            }
            Ok(v)
        }
        StaircaseKind::Half => half_staircase(m, n, ctx),
    }
}

fn half_staircase<F: Field>(m: usize, n: usize, ctx: &QContext<F>) -> Result<F> {
    let (mi, ni) = (m as i64, n as i64);
    let q = ctx.q();
    let h = ctx.q_frac(1, 2)?;
    let t = ctx.q_frac(3, 2)?;
    let mq = -q.clone();
    let p = |a: &F, k: i64| qpoch(a, &q, k);
    let mut v = F::from_i64(sign(binom2(mi))) * ctx.q_frac(binom3(2 * mi), 8)?;
    if (n + m) % 2 == 1 {
        for i in 1..=mi {
            let l = (ni + mi + 1 - 2 * i) / 2;
            let num = p(&q, i - 1)? * p(&ctx.q_pow(ni + 1 - mi + i), i - 1)? * p(&t, l)? * p(&mq, l)?;
            let den = p(&mq, i - 1)? * p(&h, i - 1)? * p(&t, i - 1)? * p(&q, l)? * p(&-h.clone(), l)?;
            v = v * num.checked_div(&den)?;
        }
    } else {
        v = v * p(&h, mi)?.checked_div(&(F::one() - &q).powi(mi)?)?;
        for i in 1..=mi {
            let l = (ni + mi - 2 * i) / 2;
            let num = p(&q, i - 1)? * p(&ctx.q_pow(ni + 1 - mi + i), i - 1)? * p(&t, l)? * p(&mq, l + 1)?;
            let den = p(&mq, i - 1)? * p(&t, i - 1)?.square() * p(&-t.clone(), l)? * p(&q, l)?;
            v = v * num.checked_div(&den)?;
        }
    }
    Ok(v)
}

/// `2^m s_{(m, …, 1)}(1, q, …, q^n)` from the Vandermonde evaluation of the
/// Schur polynomial at a geometric progression.
pub fn plain_staircase_via_schur<F: Field>(m: usize, n: usize, ctx: &QContext<F>) -> Result<F> {
    let vars = n + 1;
    if m > vars {
        return Ok(F::zero());
    }
    let lam: Vec<i64> = (0..vars).map(|i| if i < m { (m - i) as i64 } else { 0 }).collect();
    let nv = vars as i64;
    let mut num = F::one();
    let mut den = F::one();
    for i in 0..vars {
        for j in i + 1..vars {
            let (ii, jj) = (i as i64 + 1, j as i64 + 1);
            num = num * (ctx.q_pow(lam[j] + nv - jj) - ctx.q_pow(lam[i] + nv - ii));
            den = den * (ctx.q_pow(nv - jj) - ctx.q_pow(nv - ii));
        }
    }
    Ok(F::from_i64(2).powi(m as i64)? * num.checked_div(&den)?)
}

/// The number of marked shifted tableaux of odd staircase shape
/// `(2m−1, …, 1)` with entries at most `n`:
/// `2^{m²} Π_i (n+i−1)!(i−1)! / ((n+i−m−1)!(i+m−1)!)`.
pub fn odd_staircase_count(m: usize, n: usize) -> BigInt {
    if n < m {
        return BigInt::from(0);
    }
    let mut num = BigInt::from(2).pow((m * m) as u32);
    let mut den = BigInt::from(1);
    for i in 1..=m as u64 {
        let (n, m) = (n as u64, m as u64);
        num *= factorial(n + i - 1) * factorial(i - 1);
        den *= factorial(n + i - m - 1) * factorial(i + m - 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalFn;
    use crate::tableaux::{count_marked, gf_marked};

    #[test]
    fn products_match_tableaux() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        for kind in [StaircaseKind::Plain, StaircaseKind::Odd, StaircaseKind::Even] {
            for m in 1..=3 {
                let lambda = kind.partition(m).unwrap();
                for n in 0..=4 {
                    let expect = RationalFn::from_laurent(&gf_marked(&lambda, n + 1));
                    assert_eq!(q_staircase(kind, m, n, &ctx).unwrap(), expect, "{kind} m={m} n={n}");
                }
            }
        }
        for m in 1..=3 {
            for n in 0..=4 {
                assert_eq!(plain_staircase_via_schur(m, n, &ctx).unwrap(), q_staircase(StaircaseKind::Plain, m, n, &ctx).unwrap());
            }
        }
    }

    #[test]
    fn odd_count() {
        assert_eq!(odd_staircase_count(2, 4), BigInt::from(320));
        for m in 1..=3 {
            let lambda = StaircaseKind::Odd.partition(m).unwrap();
            for n in 0..=5 {
                assert_eq!(odd_staircase_count(m, n), count_marked(&lambda, n));
            }
        }
    }
}
