//! Determinant formulas: `P_n` as an `m × m` determinant of one-variable
//! polynomials, its expansion into a single multiple sum, and the
//! determinant-of-kernels form.

use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qseries::{p1_direct, qpoch};
use crate::tableaux::{gf_marked, StrictPartition};

use super::multisum::p_multisum;
use super::points::{binom2, binom3, index_tuples, laurent_in_q, one_minus_products, sign};

/// `Π_{i=1}^m (q^{n+1−m+i};q)_{i−1} / (−q^{n+1−m+i};q)_{i−1}`.
fn det_prefactor<F: Field>(m: usize, n: usize, ctx: &QContext<F>) -> Result<F> {
    let q = ctx.q();
    let mut acc = F::one();
    for i in 1..=m as i64 {
        let a = ctx.q_pow(n as i64 + 1 - m as i64 + i);
        acc = acc * qpoch(&a, &q, i - 1)?.checked_div(&qpoch(&(-a.clone()), &q, i - 1)?)?;
    }
    Ok(acc)
}

/// `P_n(x_1, …, x_m)` from `det(x_i^{j−1} P_{n+m+1−2j}(x_i))`.
pub fn p_determinant<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("{m} points exceed n + 1 = {}", n + 1)));
    }
    let d = Matrix::try_from_fn(m, m, |i, j| {
        Ok(xs[i].powi(j as i64)? * &p1_direct(&xs[i], n + m - 1 - 2 * j, ctx)?)
    })?
    .det()?;
    (det_prefactor(m, n, ctx)? * d).checked_div(&one_minus_products(xs)?)
}

/// `Q_λ(1, q, …, q^n)` as a determinant of one-row values
/// `Q_{(λ_i)}(1, …, q^{n+m+1−2j})`, here taken from the tableau generating
/// function of a single row.
pub fn q_det_formula<F: Field>(lambda: &StrictPartition, n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = lambda.len();
    if m > n + 1 {
        return Ok(F::zero());
    }
    let l = lambda.parts();
    let d = Matrix::try_from_fn(m, m, |i, j| {
        let row = StrictPartition::new(vec![l[i]])?;
        let gf = gf_marked(&row, n + m - 2 * j);
        Ok(ctx.q_pow((j * l[i]) as i64) * laurent_in_q(&gf, ctx))
    })?
    .det()?;
    let mut den = F::one();
    for i in 0..m {
        for j in i + 1..m {
            den = den * (F::one() - ctx.q_pow((l[i] + l[j]) as i64));
        }
    }
    (det_prefactor(m, n, ctx)? * d).checked_div(&den)
}

/// `P_n(x_1, …, x_m)` by the single `m`-fold sum over `0 ≤ k_i ≤ n+m−1`
/// obtained from the determinant formula (still singular at `q = 1`).
pub fn p_theorem_ot<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if m == 0 {
        return Ok(F::one());
    }
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("{m} points exceed n + 1 = {}", n + 1)));
    }
    let (mi, ni) = (m as i64, n as i64);
    let q = ctx.q();
    let top = n + m - 1;
    let qp: Vec<F> = (0..=top).map(|k| ctx.q_pow(k as i64)).collect();
    // w_k = (q^{1−m−n}, −q^{2−m}; q)_k / (q, −q^{−n}; q)_k
    let a = ctx.q_pow(1 - mi - ni);
    let b = -ctx.q_pow(2 - mi);
    let c = -ctx.q_pow(-ni);
    let mut w = vec![F::one()];
    for k in 0..top {
        let num = (F::one() - a.clone() * &qp[k]) * (F::one() - b.clone() * &qp[k]);
        let den = (F::one() - qp[k + 1].clone()) * (F::one() - c.clone() * &qp[k]);
        let next = w[k].clone() * &num.checked_div(&den)?;
        w.push(next);
    }
    let mut pair = vec![vec![F::zero(); top + 1]; top + 1];
    for k in 0..=top {
        for l in 0..=top {
            if k != l {
                pair[k][l] = (qp[l].clone() - &qp[k]) * (F::one() - ctx.q_pow((k + l) as i64 + 1 - mi - ni));
            }
        }
    }
    let xpow: Vec<Vec<F>> = xs
        .iter()
        .map(|x| (0..=top).map(|e| x.powi(e as i64)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let tuples: Vec<Vec<usize>> = index_tuples(m, top)
        .into_iter()
        .filter(|k| (0..m).all(|i| (i + 1..m).all(|j| k[i] != k[j])))
        .collect();
    let terms = tuples.iter().map(|k| {
        let mut fs: Vec<&F> = Vec::new();
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

    let mut pref = F::from_i64(sign(binom2(mi))) * ctx.q_pow((ni + 1) * binom2(mi) + 2 * binom3(mi));
    let ratio = qpoch(&(-q.clone()), &q, ni)?.checked_div(&qpoch(&q, &q, ni + mi - 1)?)?;
    pref = pref * ratio.powi(mi)?;
    for i in 1..=mi {
        let num = qpoch(&ctx.q_pow(ni + 1 - mi + i), &q, i - 1)?;
        let den = qpoch(&(-ctx.q_pow(2 - mi)), &q, i - 1)?;
        pref = pref * num.checked_div(&den)?;
    }
    (pref * sum).checked_div(&one_minus_products(xs)?)
}

/// Both sides-forms of `P_n(x_1, …, x_m, y_1, …, y_m)` in terms of two-variable
/// values: the determinant `det(P_n(x_i, y_j)/(y_j − x_i))` and the
/// parity-restricted double-determinant sum.
pub fn two_determinant_forms<F: Field>(xs: &[F], ys: &[F], n: usize, ctx: &QContext<F>) -> Result<(F, F)> {
    let m = xs.len();
    if ys.len() != m {
        return Err(Error::Dimension("x and y blocks must have equal length".into()));
    }
    let mut pref = F::one();
    for x in xs {
        for y in ys {
            pref = pref * (y.clone() - x);
        }
    }
    pref = pref.checked_div(&(one_minus_products(xs)? * one_minus_products(ys)?))?;

    let kd = Matrix::try_from_fn(m, m, |i, j| {
        let d = ys[j].clone() - &xs[i];
        if d.is_zero() {
            return Err(Error::Singular(i, j, "x_i = y_j".into()));
        }
        p_multisum(&[xs[i].clone(), ys[j].clone()], n, ctx)?.checked_div(&d)
    })?
    .det()?;
    let first = pref.clone() * kd;

    let mut sum = F::zero();
    if n >= 1 {
        let admissible: Vec<usize> = (0..n).filter(|k| (n - 1 - k).is_multiple_of(2)).collect();
        for ks in crate::linalg::identities::subsets(admissible.len(), m) {
            // decreasing order k_1 > … > k_m
            let k: Vec<usize> = ks.iter().rev().map(|&i| admissible[i]).collect();
            let mut w = F::one();
            for &ki in &k {
                let qk = ctx.q_pow(ki as i64 + 1);
                w = w * (F::one() + &qk).checked_div(&(F::one() - &qk))?;
            }
            let block = |pts: &[F]| -> Result<F> {
                Matrix::try_from_fn(m, m, |i, j| {
                    Ok(pts[j].powi(((n - 1 - k[i]) / 2) as i64)? * &p1_direct(&pts[j], k[i], ctx)?)
                })?
                .det()
            };
            sum = sum + w * &block(xs)? * &block(ys)?;
        }
    }
    Ok((first, pref * sum))
}

/// The inversion symmetry in the first variable, in polynomial form:
/// `Π_{i≥2}(1 − x_1 x_i) P_n(x) = (−x_1)^n Π_{i≥2}(x_i − x_1) P_n(1/x_1, x_2, …)`,
/// checked for each coordinate in turn.
pub fn hyperoctahedral_check<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<bool> {
    for a in 0..xs.len() {
        let mut v = xs.to_vec();
        v.swap(0, a);
        if v[0].is_zero() {
            return Err(Error::InvalidArgument(format!("point {a} is zero")));
        }
        let x1 = v[0].clone();
        let mut lhs = p_multisum(&v, n, ctx)?;
        let mut rhs = (-x1.clone()).powi(n as i64)?;
        for xi in &v[1..] {
            lhs = lhs * (F::one() - x1.clone() * xi);
            rhs = rhs * (xi.clone() - &x1);
        }
        let mut inv = v.clone();
        inv[0] = x1.inv()?;
        rhs = rhs * p_multisum(&inv, n, ctx)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
