//! Alternating-sum definitions of `Q_λ` at arbitrary points, and the
//! Nimmo-type signed permutation sums.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::linalg::matrix::permutations;
use crate::qseries::factorial;

use super::multisum::ratio_pm;

fn cross_ratios<F: Field>(xs: &[F], plus_over_minus: bool) -> Result<Vec<Vec<F>>> {
    let n = xs.len();
    let mut r = vec![vec![F::zero(); n]; n];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let sum = xs[a].clone() + &xs[b];
            let diff = xs[a].clone() - &xs[b];
            if diff.is_zero() {
                return Err(Error::Singular(a.min(b), a.max(b), "coincident points".into()));
            }
            if sum.is_zero() {
                return Err(Error::Singular(a.min(b), a.max(b), "opposite points".into()));
            }
            r[a][b] = if plus_over_minus { sum.checked_div(&diff)? } else { diff.checked_div(&sum)? };
        }
    }
    Ok(r)
}

fn injective_tuples(m: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(m, n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(m, n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// `Q_λ(x_1, …, x_N)` by the alternating sum over injective index tuples.
/// `lambda` may be any exponent list (it need not be strict).
pub fn q_direct<F: Field>(lambda: &[usize], xs: &[F]) -> Result<F> {
    let (m, n) = (lambda.len(), xs.len());
    if m > n {
        return Ok(F::zero());
    }
    let r = cross_ratios(xs, true)?;
    let pows: Vec<Vec<F>> = xs
        .iter()
        .map(|x| lambda.iter().map(|&l| x.powi(l as i64)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let tuples = injective_tuples(m, n);
    let terms = tuples.iter().map(|k| {
        let mut fs: Vec<&F> = Vec::new();
        let mut used = vec![false; n];
        for &v in k {
            used[v] = true;
        }
        for i in 0..m {
            fs.push(&pows[k[i]][i]);
            for j in i + 1..m {
                fs.push(&r[k[i]][k[j]]);
            }
            for (j, &u) in used.iter().enumerate() {
                if !u {
                    fs.push(&r[k[i]][j]);
                }
            }
        }
        (1, fs)
    });
    Ok(F::from_i64(1 << m) * F::sum_products(terms))
}

const NIMMO_GUARD: usize = 8;

/// `Q_λ(x_1, …, x_N)` by the signed sum over `S_N` with `l = ⌊(N−m)/2⌋`
/// pair factors (Nimmo's form).
pub fn nimmo_q<F: Field>(lambda: &[usize], xs: &[F]) -> Result<F> {
    let (m, n) = (lambda.len(), xs.len());
    if n > NIMMO_GUARD {
        return Err(Error::SizeGuard { what: "number of variables".into(), limit: NIMMO_GUARD });
    }
    if m > n {
        return Ok(F::zero());
    }
    let l = (n - m) / 2;
    let plus = cross_ratios(xs, true)?;
    let minus = cross_ratios(xs, false)?;
    let pows: Vec<Vec<F>> = xs
        .iter()
        .map(|x| lambda.iter().map(|&e| x.powi(e as i64)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let perms = permutations(n);
    let terms = perms.iter().map(|(s, sg)| {
        let mut fs: Vec<&F> = Vec::new();
        for i in 0..m {
            fs.push(&pows[s[i]][i]);
        }
        for i in 0..l {
            fs.push(&minus[s[m + 2 * i]][s[m + 2 * i + 1]]);
        }
        (*sg, fs)
    });
    let sum = F::sum_products(terms);
    let mut pref = F::one();
    for i in 0..n {
        for j in i + 1..n {
            pref = pref * &plus[i][j];
        }
    }
    // 2^{m−l} / l!
    let c = if m >= l {
        BigRational::new(BigInt::from(1) << (m - l), factorial(l as u64))
    } else {
        BigRational::new(BigInt::from(1), factorial(l as u64) << (l - m))
    };
    Ok(F::from_rational(&c) * pref * sum)
}

/// `P_n(x_1, …, x_m)` by the signed sum over `S_{n+1}` (the geometric
/// progression specialization of [`nimmo_q`]).
pub fn p_nimmo<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if n + 1 > NIMMO_GUARD {
        return Err(Error::SizeGuard { what: "n + 1".into(), limit: NIMMO_GUARD });
    }
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("{m} points exceed n + 1 = {}", n + 1)));
    }
    let l = (n + 1 - m) / 2;
    // t[d + n] = (1 − q^d)/(1 + q^d) for d = b − a
    let t: Vec<F> = (-(n as i64)..=n as i64)
        .map(|d| {
            let qd = ctx.q_pow(d);
            (F::one() - &qd).checked_div(&(F::one() + &qd))
        })
        .collect::<Result<_>>()?;
    let xpow: Vec<Vec<F>> = xs
        .iter()
        .map(|x| (0..=n).map(|e| x.powi(e as i64)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let perms = permutations(n + 1);
    let terms = perms.iter().map(|(s, sg)| {
        let mut fs: Vec<&F> = Vec::with_capacity(m + l);
        for i in 0..m {
            fs.push(&xpow[i][s[i]]);
        }
        for i in 0..l {
            let d = s[m + 2 * i + 1] as i64 - s[m + 2 * i] as i64;
            fs.push(&t[(d + n as i64) as usize]);
        }
        (*sg, fs)
    });
    let sum = F::sum_products(terms);
    let mut pref = F::from_rational(&BigRational::new(
        BigInt::from(1),
        (BigInt::from(1) << l) * factorial(l as u64),
    ));
    for j in 1..=n {
        pref = pref * ratio_pm(j, ctx)?;
    }
    Ok(pref * sum)
}
