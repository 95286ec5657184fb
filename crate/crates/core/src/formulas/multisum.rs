//! `P_n` from its defining multiple sum, and the formulas that reduce the
//! general case to two variables.

use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::linalg::SkewMatrix;
use crate::qseries::{p1_direct, qpoch};
use crate::tableaux::{hook_content_products, schur_poly, Partition};

use super::points::{index_tuples, sign, PointSet};

/// `(−q;q)_k/(q;q)_k`.
pub(crate) fn ratio_pm<F: Field>(k: usize, ctx: &QContext<F>) -> Result<F> {
    let q = ctx.q();
    qpoch(&(-q.clone()), &q, k as i64)?.checked_div(&qpoch(&q, &q, k as i64)?)
}

/// `P_n(x_1, …, x_m)` by the `m`-fold sum over `0 ≤ k_i ≤ n`.
pub fn p_multisum<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if m == 0 {
        return Ok(F::one());
    }
    let qp: Vec<F> = (0..=n).map(|k| ctx.q_pow(k as i64)).collect();
    // w_k = (−q, q^{−n}; q)_k / (q, −q^{−n}; q)_k
    let mut w = Vec::with_capacity(n + 1);
    w.push(F::one());
    for k in 0..n {
        let a = ctx.q_pow(k as i64 + 1);
        let b = ctx.q_pow(k as i64 - n as i64);
        let num = (F::one() + &a) * (F::one() - &b);
        let den = (F::one() - &a) * (F::one() + &b);
        let next = w[k].clone() * &num.checked_div(&den)?;
        w.push(next);
    }
    // pair[k][l] = (q^l − q^k)/(q^l + q^k)
    let mut pair = vec![vec![F::zero(); n + 1]; n + 1];
    for k in 0..=n {
        for l in 0..=n {
            if k != l {
                pair[k][l] = (qp[l].clone() - &qp[k]).checked_div(&(qp[l].clone() + &qp[k]))?;
            }
        }
    }
    let xpow: Vec<Vec<F>> = xs
        .iter()
        .map(|x| {
            let mut v = Vec::with_capacity(n + 1);
            let mut p = F::one();
            for _ in 0..=n {
                v.push(p.clone());
                p = p * x;
            }
            v
        })
        .collect();
    let tuples: Vec<Vec<usize>> = index_tuples(m, n)
        .into_iter()
        .filter(|k| (0..m).all(|i| (i + 1..m).all(|j| k[i] != k[j])))
        .collect();
    let terms = tuples.iter().map(|k| {
        let mut fs: Vec<&F> = Vec::with_capacity(m * (m + 3) / 2);
        for i in 0..m {
            for j in i + 1..m {
                fs.push(&pair[k[i]][k[j]]);
            }
            fs.push(&w[k[i]]);
            fs.push(&xpow[i][k[i]]);
        }
        (1, fs)
    });
    let sum = F::sum_products(terms);
    Ok(ratio_pm(n, ctx)?.powi(m as i64)? * sum)
}

/// Pfaffian of the two-variable values; odd `m` is reduced to even `m` by
/// adjoining the point `0` and stepping `n` up by one.
pub fn p_pfaffian<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if m.is_multiple_of(2) {
        let s = SkewMatrix::from_upper(m, |i, j| p_multisum(&[xs[i].clone(), xs[j].clone()], n, ctx))?;
        return s.pfaffian();
    }
    let mut prod = F::one();
    for (i, x) in xs.iter().enumerate() {
        if x.is_zero() {
            return Err(Error::InvalidArgument(format!("point {i} is zero; cannot divide out the adjoined 0")));
        }
        prod = prod * x;
    }
    let mut ext = xs.to_vec();
    ext.push(F::zero());
    let s = SkewMatrix::from_upper(m + 1, |i, j| p_multisum(&[ext[i].clone(), ext[j].clone()], n + 1, ctx))?;
    let pf = s.pfaffian()?;
    let q = ctx.q();
    let factor = qpoch(&q, &q, n as i64 + 1)?.checked_div(&qpoch(&(-q.clone()), &q, n as i64 + 1)?)?;
    Ok(F::from_i64(sign(m as i64)) * factor * pf.checked_div(&prod)?)
}

/// Two-variable `P_n(x, y)` through one-variable polynomials of degree
/// `n ± 1` (a Christoffel–Darboux type quotient).
pub fn p_two_row_cd<F: Field>(x: &F, y: &F, n: usize, ctx: &QContext<F>) -> Result<F> {
    if n == 0 {
        return Ok(F::zero());
    }
    let den = F::one() - x.clone() * y;
    if den.is_zero() {
        return Err(Error::Singular(0, 1, "x y = 1".into()));
    }
    let qn = ctx.q_pow(n as i64 + 1);
    let pref = (F::one() - &qn).checked_div(&(F::one() + &qn))?;
    let num = y.clone() * &p1_direct(x, n + 1, ctx)? * &p1_direct(y, n - 1, ctx)?
        - x.clone() * &p1_direct(x, n - 1, ctx)? * &p1_direct(y, n + 1, ctx)?;
    Ok(pref * num.checked_div(&den)?)
}

/// Two-variable `P_n(x, y)` as a sum of products of one-variable
/// polynomials, using the square roots `√x`, `√y`.
pub fn p_rce<F: Field>(pts: &PointSet<F>, n: usize, ctx: &QContext<F>) -> Result<F> {
    if pts.len() != 2 {
        return Err(Error::Dimension("p_rce takes exactly two points".into()));
    }
    let r = pts.roots()?;
    let (x, y) = (&pts.xs()[0], &pts.xs()[1]);
    let (sx, sy) = (&r[0], &r[1]);
    let sxy = sx.clone() * sy;
    let den = F::one() + &sxy;
    if den.is_zero() {
        return Err(Error::Singular(0, 1, "1 + √(xy) = 0".into()));
    }
    let px: Vec<F> = (0..=n).map(|j| p1_direct(x, j, ctx)).collect::<Result<_>>()?;
    let py: Vec<F> = (0..=n).map(|j| p1_direct(y, j, ctx)).collect::<Result<_>>()?;
    let mut sum = F::zero();
    for j in 0..n {
        let t = sy.clone() * &px[j + 1] * &py[j] - sx.clone() * &px[j] * &py[j + 1];
        sum = sum + sxy.powi((n - 1 - j) as i64)? * t;
    }
    Ok((sx.clone() + sy).checked_div(&den)? * sum)
}

/// Pfaffian of the rescaled two-variable values
/// `(1 + √(x_i x_j))/(√x_i + √x_j) · P_n(x_i, x_j)`, `m` even.
pub fn p_api<F: Field>(pts: &PointSet<F>, n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = pts.len();
    if m % 2 == 1 {
        return Err(Error::OddDimension(m));
    }
    let r = pts.roots()?;
    let xs = pts.xs();
    let mut pref = F::one();
    let mut scale = vec![vec![F::zero(); m]; m];
    for i in 0..m {
        for j in i + 1..m {
            let a = r[i].clone() + &r[j];
            let b = F::one() + r[i].clone() * &r[j];
            if a.is_zero() || b.is_zero() {
                return Err(Error::Singular(i, j, "√x_i + √x_j or 1 + √(x_i x_j) vanishes".into()));
            }
            scale[i][j] = b.checked_div(&a)?;
            pref = pref * a.checked_div(&b)?;
        }
    }
    let s = SkewMatrix::from_upper(m, |i, j| {
        Ok(scale[i][j].clone() * p_multisum(&[xs[i].clone(), xs[j].clone()], n, ctx)?)
    })?;
    Ok(pref * s.pfaffian()?)
}

/// `P_n` through its expansion in Schur polynomials over the box
/// `μ ⊆ (n+1−m)^m`, weighted by hook and content products.
pub fn p_schur_expansion<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("{m} points exceed n + 1 = {}", n + 1)));
    }
    let mut pref = F::one();
    for i in 1..=m {
        pref = pref * ratio_pm(n + 1 - i, ctx)?;
    }
    for i in 0..m {
        for j in i + 1..m {
            pref = pref * (xs[j].clone() - &xs[i]);
        }
    }
    if pref.is_zero() {
        return Ok(F::zero());
    }
    let mut sum = F::zero();
    for mu in Partition::in_box(m, n + 1 - m) {
        let (h, c) = hook_content_products(&mu, n, m, ctx)?;
        if c.is_zero() {
            continue;
        }
        sum = sum + h * &c * &schur_poly(&mu, xs)?;
    }
    Ok(pref * sum)
}
