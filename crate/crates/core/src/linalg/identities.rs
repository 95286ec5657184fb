//! Structural identities: Schur's pfaffians, minor summation and the
//! Schlosser-type determinant evaluations.  Each check computes both sides
//! independently and compares them exactly.

use crate::arith::Field;
use crate::error::{Error, Result};
use crate::qseries::{qpoch, qpoch_many};

use super::matrix::Matrix;
use super::pfaffian::SkewMatrix;

fn require_even(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddDimension(n));
    }
    Ok(())
}

/// Both sides of `pf((x_j − x_i)/(x_j + x_i)) = Π_{i<j} (x_j − x_i)/(x_j + x_i)`.
pub fn schur_pfaffian<F: Field>(xs: &[F]) -> Result<(F, F)> {
    require_even(xs.len())?;
    let entry = |i: usize, j: usize| -> Result<F> {
        let den = xs[j].clone() + &xs[i];
        if den.is_zero() {
            return Err(Error::Singular(i, j, "x_i + x_j = 0".into()));
        }
        (xs[j].clone() - &xs[i]).checked_div(&den)
    };
    let s = SkewMatrix::from_upper(xs.len(), entry)?;
    let mut rhs = F::one();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            rhs = rhs * &entry(i, j)?;
        }
    }
    Ok((s.pfaffian()?, rhs))
}

/// Both sides of `pf((x_j − x_i)/(1 − t x_i x_j)) = t^{m(m−1)} Π_{i<j} (x_j − x_i)/(1 − t x_i x_j)`.
pub fn schur_pfaffian_t<F: Field>(xs: &[F], t: &F) -> Result<(F, F)> {
    require_even(xs.len())?;
    let entry = |i: usize, j: usize| -> Result<F> {
        let den = F::one() - t.clone() * &xs[i] * &xs[j];
        if den.is_zero() {
            return Err(Error::Singular(i, j, "1 − t x_i x_j = 0".into()));
        }
        (xs[j].clone() - &xs[i]).checked_div(&den)
    };
    let s = SkewMatrix::from_upper(xs.len(), entry)?;
    let m = (xs.len() / 2) as i64;
    let mut rhs = t.powi(m * (m - 1))?;
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            rhs = rhs * &entry(i, j)?;
        }
    }
    Ok((s.pfaffian()?, rhs))
}

fn require_distinct<F: Field>(xs: &[F]) -> Result<()> {
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            if xs[i] == xs[j] {
                return Err(Error::Singular(i, j, "repeated point".into()));
            }
        }
    }
    Ok(())
}

/// Checks both Schur pfaffian evaluations at the given points.
pub fn check_spa_spb<F: Field>(xs: &[F], t: &F) -> Result<bool> {
    require_distinct(xs)?;
    let (l1, r1) = schur_pfaffian(xs)?;
    let (l2, r2) = schur_pfaffian_t(xs, t)?;
    Ok(l1 == r1 && l2 == r2)
}

/// Increasing `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Both sides of the minor summation formula
/// `pf(A B Aᵗ) = Σ_{k_1<…<k_{2m}} det(A_{i,k_j}) pf(B_{k_i k_j})`.
pub fn minor_summation<F: Field>(a: &Matrix<F>, b: &SkewMatrix<F>) -> Result<(F, F)> {
    let rows = a.rows();
    require_even(rows)?;
    if a.cols() != b.dim() {
        return Err(Error::Dimension(format!("A has {} columns, B has dimension {}", a.cols(), b.dim())));
    }
    let aba = a.mul(&b.to_matrix())?.mul(&a.transpose())?;
    let lhs = SkewMatrix::from_matrix(&aba)?.pfaffian()?;
    let all_rows: Vec<usize> = (0..rows).collect();
    let mut rhs = F::zero();
    for ks in subsets(a.cols(), rows) {
        let minor = a.select(&all_rows, &ks).det()?;
        if minor.is_zero() {
            continue;
        }
        rhs = rhs + minor * &b.select(&ks).pfaffian()?;
    }
    Ok((lhs, rhs))
}

/// The unrestricted form: `Σ_{k ∈ [n]^{2m}} Π_i A_{i k_i} pf(B_{k_i k_j})`.
/// Exponential in `2m`; a brute-force oracle for the subset form above.
pub fn minor_summation_tuples<F: Field>(a: &Matrix<F>, b: &SkewMatrix<F>) -> Result<F> {
    let rows = a.rows();
    require_even(rows)?;
    let n = a.cols();
    if n.checked_pow(rows as u32).is_none_or(|c| c > 200_000) {
        return Err(Error::SizeGuard { what: "index tuple count".into(), limit: 200_000 });
    }
    let mut ks = vec![0usize; rows];
    let mut acc = F::zero();
    loop {
        let mut w = F::one();
        for (i, &k) in ks.iter().enumerate() {
            w = w * a.get(i, k);
        }
        if !w.is_zero() {
            acc = acc + w * &b.select(&ks).pfaffian()?;
        }
        let mut pos = rows;
        loop {
            if pos == 0 {
                return Ok(acc);
            }
            pos -= 1;
            ks[pos] += 1;
            if ks[pos] < n {
                break;
            }
            ks[pos] = 0;
        }
    }
}

pub fn minor_summation_check<F: Field>(a: &Matrix<F>, b: &SkewMatrix<F>) -> Result<bool> {
    let (l, r) = minor_summation(a, b)?;
    Ok(l == r)
}

/// Parameters of the Schlosser-type determinants; `c` is ignored by the
/// degenerate form.
#[derive(Clone, Debug)]
pub struct SchlosserParams<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub q: F,
    pub xs: Vec<F>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SchlosserKind {
    /// `det((AX_i, AC/X_i;q)_{j−1}/(BX_i, BC/X_i;q)_{j−1})`
    Full,
    /// `det((AX_i;q)_{j−1}(BX_i;q)_{m−j})`
    Degenerate,
}

fn binom(m: i64, k: i64) -> i64 {
    if m < k {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (m - i) / (i + 1))
}

/// `(lhs, rhs)` of the chosen evaluation.
pub fn schlosser_det<F: Field>(kind: SchlosserKind, p: &SchlosserParams<F>) -> Result<(F, F)> {
    let m = p.xs.len();
    let mi = m as i64;
    let q = &p.q;
    match kind {
        SchlosserKind::Full => {
            let c_over: Vec<F> = p.xs.iter().map(|x| p.c.checked_div(x)).collect::<Result<_>>()?;
            let lhs = Matrix::try_from_fn(m, m, |i, j| {
                let x = &p.xs[i];
                let num = qpoch_many(&[p.a.clone() * x, p.a.clone() * &c_over[i]], q, j as i64)?;
                let den = qpoch_many(&[p.b.clone() * x, p.b.clone() * &c_over[i]], q, j as i64)?;
                if den.is_zero() {
                    return Err(Error::Singular(i, j, "vanishing denominator Pochhammer".into()));
                }
                num.checked_div(&den)
            })?
            .det()?;
            let ac = p.a.clone() * &p.c;
            let mut rhs = q.powi(binom(mi, 3))? * &ac.powi(binom(mi, 2))?;
            let cinv = p.c.inv()?;
            for i in 0..m {
                for j in i + 1..m {
                    let f = (p.xs[j].clone() - &p.xs[i])
                        * &(F::one() - p.xs[i].clone() * &p.xs[j] * &cinv);
                    rhs = rhs * &f;
                }
            }
            let b_over_a = p.b.checked_div(&p.a)?;
            let abc = p.a.clone() * &p.b * &p.c;
            for i in 1..=mi {
                let num = qpoch_many(&[b_over_a.clone(), abc.clone() * &q.powi(2 * mi - 2 * i)?], q, i - 1)?;
                let x = &p.xs[(i - 1) as usize];
                let den = x.powi(mi - 1)?
                    * &qpoch_many(&[p.b.clone() * x, p.b.clone() * &c_over[(i - 1) as usize]], q, mi - 1)?;
                rhs = rhs * &num.checked_div(&den)?;
            }
            Ok((lhs, rhs))
        }
        SchlosserKind::Degenerate => {
            let lhs = Matrix::try_from_fn(m, m, |i, j| {
                let x = &p.xs[i];
                Ok(qpoch(&(p.a.clone() * x), q, j as i64)? * &qpoch(&(p.b.clone() * x), q, mi - 1 - j as i64)?)
            })?
            .det()?;
            let mut rhs = q.powi(binom(mi, 3))? * &p.a.powi(binom(mi, 2))?;
            for i in 0..m {
                for j in i + 1..m {
                    rhs = rhs * &(p.xs[i].clone() - &p.xs[j]);
                }
            }
            let b_over_a = p.b.checked_div(&p.a)?;
            for i in 1..=mi {
                rhs = rhs * &qpoch(&(q.powi(i - mi)? * &b_over_a), q, i - 1)?;
            }
            Ok((lhs, rhs))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use num_rational::BigRational;

    #[test]
    fn schur_matrix_value() {
        let xs: Vec<BigRational> = (1..=4).map(int).collect();
        let (l, r) = schur_pfaffian(&xs).unwrap();
        assert_eq!(l, rat(1, 1050));
        assert_eq!(r, rat(1, 1050));
    }

    #[test]
    fn spb_with_prefactor() {
        let xs = vec![rat(1, 3), int(2), rat(-5, 7), int(3)];
        assert!(check_spa_spb(&xs, &rat(1, 2)).unwrap());
    }

    #[test]
    fn singular_pair_is_named() {
        let xs = vec![int(1), int(-1)];
        assert_eq!(
            schur_pfaffian(&xs).unwrap_err(),
            Error::Singular(0, 1, "x_i + x_j = 0".into())
        );
    }

    #[test]
    fn subset_count() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
    }
}
