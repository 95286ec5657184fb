//! Multiple sums that stay regular at `q = 1`: the hyperoctahedral sum over
//! `[0, n]^m` and the eight parity-dependent determinant-derived sums.

use std::fmt;
use std::str::FromStr;

use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::qseries::qpoch;

use super::points::{binom2, index_tuples, one_minus_products, sign, PointSet};

/// `±q^{h/2}`.
fn hq<F: Field>(ctx: &QContext<F>, neg: bool, h: i64) -> Result<F> {
    let v = ctx.q_frac(h, 2)?;
    Ok(if neg { -v } else { v })
}

/// `Σ_{k ∈ [0,top]^m} Π_{i<j} pair(k_i, k_j) Π_i w_i(k_i)`, skipping tuples
/// with repeated entries (every pair factor used here vanishes there).
fn antisymmetric_sum<F: Field>(m: usize, top: usize, pair: &[Vec<F>], w: &[Vec<F>]) -> F {
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
            fs.push(&w[i][k[i]]);
        }
        (1, fs)
    });
    F::sum_products(terms)
}

/// Running products `Π_{j<k} num(j)/den(j)` for `k = 0..=top`.
fn running<F: Field>(top: usize, mut step: impl FnMut(usize) -> Result<(F, F)>) -> Result<Vec<F>> {
    let mut out = Vec::with_capacity(top + 1);
    out.push(F::one());
    for k in 0..top {
        let (num, den) = step(k)?;
        let next = out[k].clone() * &num.checked_div(&den)?;
        out.push(next);
    }
    Ok(out)
}

/// `P_n(x_1, …, x_m)` by the hyperoctahedral-symmetric sum; needs `√x_i`
/// and a root order of at least 2.
pub fn p_theorem_th<F: Field>(pts: &PointSet<F>, n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = pts.len();
    if m == 0 {
        return Ok(F::one());
    }
    let r = pts.roots()?;
    let (mi, ni) = (m as i64, n as i64);
    let sq = ctx.q_frac(1, 2)?;
    let qp: Vec<F> = (0..=2 * n + 1).map(|k| ctx.q_pow(k as i64)).collect();
    let q_mn = ctx.q_pow(-ni);
    let q_n2 = ctx.q_pow(ni + 2);
    let q32 = ctx.q_frac(3, 2)?;
    let mut w = Vec::with_capacity(m);
    for ri in r {
        if ri.is_zero() {
            return Err(Error::InvalidArgument("zero point".into()));
        }
        let a = sq.checked_div(ri)?;
        let b = -(sq.clone() * ri);
        w.push(running(n, |k| {
            let pk = &qp[k];
            let num = (F::one() - q_mn.clone() * pk)
                * (F::one() - q_n2.clone() * pk)
                * (F::one() - a.clone() * pk)
                * (F::one() - b.clone() * pk)
                * &qp[1];
            let den = (F::one() - qp[k + 1].clone()).square()
                * (F::one() - q32.clone() * pk)
                * (F::one() + q32.clone() * pk);
            Ok((num, den))
        })?);
    }
    let mut pair = vec![vec![F::zero(); n + 1]; n + 1];
    for k in 0..=n {
        for l in 0..=n {
            if k != l {
                pair[k][l] = (qp[l].clone() - &qp[k]).checked_div(&(F::one() - qp[k + l + 1].clone()))?;
            }
        }
    }
    let sum = antisymmetric_sum(m, n, &pair, &w);

    let q = ctx.q();
    let mut pref = ctx.q_frac(mi * (mi - 1 - 2 * ni), 4)?
        * (F::one() - &qp[n + 1]).checked_div(&(F::one() - &q))?.powi(mi)?;
    for i in 0..m {
        pref = pref * r[i].powi(ni)?;
        for j in i + 1..m {
            let den = F::one() + r[i].clone() * &r[j];
            if den.is_zero() {
                return Err(Error::Singular(i, j, "1 + √(x_i x_j) = 0".into()));
            }
            pref = pref * (r[i].clone() + &r[j]).checked_div(&den)?;
        }
    }
    Ok(pref * sum)
}

/// The eight determinant-derived forms; `E*` need `n + m` odd, `O*` need
/// `n + m` even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DftForm {
    Ea,
    Eb,
    Ec,
    Ed,
    Oa,
    Ob,
    Oc,
    Od,
}

impl DftForm {
    pub const ALL: [DftForm; 8] =
        [DftForm::Ea, DftForm::Eb, DftForm::Ec, DftForm::Ed, DftForm::Oa, DftForm::Ob, DftForm::Oc, DftForm::Od];

    /// True for the forms that apply when `n + m` is odd.
    pub fn odd_total(self) -> bool {
        matches!(self, DftForm::Ea | DftForm::Eb | DftForm::Ec | DftForm::Ed)
    }

    /// Smallest root order the form can be evaluated with.
    pub fn root_order(self) -> u32 {
        match self {
            DftForm::Eb | DftForm::Ob => 4,
            DftForm::Ea | DftForm::Oa => 2,
            _ => 2,
        }
    }

    /// Forms applicable for the given `n + m`.
    pub fn applicable(n: usize, m: usize) -> Vec<DftForm> {
        Self::ALL.into_iter().filter(|f| f.odd_total() == ((n + m) % 2 == 1)).collect()
    }
}

impl fmt::Display for DftForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DftForm::Ea => "ea",
            DftForm::Eb => "eb",
            DftForm::Ec => "ec",
            DftForm::Ed => "ed",
            DftForm::Oa => "oa",
            DftForm::Ob => "ob",
            DftForm::Oc => "oc",
            DftForm::Od => "od",
        };
        f.write_str(s)
    }
}

impl FromStr for DftForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DftForm::ALL
            .into_iter()
            .find(|f| f.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown form {s:?}")))
    }
}

/// Parameters of one form: base `b = q^base`, two fixed upper parameters,
/// the shift `c` in `c x_i, c/x_i`, four lower parameters (each `±q^{h/2}`).
struct FormData<F> {
    base: i64,
    upper: [F; 2],
    c: F,
    lower: [F; 4],
    top: usize,
    prefactor: F,
}

fn form_data<F: Field>(form: DftForm, n: usize, m: usize, ctx: &QContext<F>) -> Result<FormData<F>> {
    let (ni, mi) = (n as i64, m as i64);
    let q = ctx.q();
    let q2 = ctx.q_pow(2);
    let one_minus_q = F::one() - &q;
    let c2 = |k: i64| k * (k - 1) / 2;
    let c3 = |k: i64| k * (k - 1) * (k - 2) / 6;
    let mut pref = F::one();
    let data = match form {
        DftForm::Ea | DftForm::Oa => {
            // odd total: a = (1−n−m)/2, b = (3+n−m)/2; even: (2−n−m)/2, (4+n−m)/2
            let (a2, b2, shift) = if form == DftForm::Ea {
                (1 - ni - mi, 3 + ni - mi, ni)
            } else {
                (2 - ni - mi, 4 + ni - mi, ni - 1)
            };
            let ua = hq(ctx, false, a2)?;
            let ub = hq(ctx, true, b2)?;
            pref = pref * F::from_i64(sign(binom2(mi))) * ctx.q_frac(-c3(mi + 1) - shift * c2(mi + 1), 2)?;
            let pow = if form == DftForm::Ea { mi } else { 2 * mi };
            pref = pref.checked_div(&one_minus_q.powi(pow)?)?;
            for i in 1..=mi {
                let num = qpoch(&ctx.q_pow(ni + 1 - mi + i), &q, i)?;
                let den = qpoch(&ua, &q, i - 1)? * qpoch(&ub, &q, i - 1)?;
                pref = pref * num.checked_div(&den)?;
            }
            let second = if form == DftForm::Ea { hq(ctx, false, 2)? } else { q2.clone() };
            FormData {
                base: 1,
                upper: [ua, ub],
                c: q.clone(),
                lower: [q.clone(), second, hq(ctx, false, 3)?, hq(ctx, true, 3)?],
                top: (-a2 / 2) as usize,
                prefactor: pref,
            }
        }
        DftForm::Eb | DftForm::Ob => {
            let (a2, b2) = if form == DftForm::Eb { (1 - ni - mi, 3 + ni - mi) } else { (2 - ni - mi, 4 + ni - mi) };
            let top = (-a2 / 2) as usize;
            let (qexp, pm_len, shift_len) = if form == DftForm::Eb {
                (-ni * mi, (ni + 1 - mi) / 2, ni + mi + 1)
            } else {
                (-(ni - 1) * mi, (ni + 2 - mi) / 2, ni + mi)
            };
            pref = pref * ctx.q_frac(qexp, 4)?;
            let ratio = qpoch(&(-q.clone()), &q, pm_len)?.checked_div(&qpoch(&q, &q, top as i64)?)?;
            pref = pref * ratio.powi(mi)?;
            if form == DftForm::Ob {
                pref = pref.checked_div(&one_minus_q.powi(mi)?)?;
            }
            let q32 = ctx.q_frac(3, 2)?;
            let den_base = if form == DftForm::Eb { -ctx.q_frac(1, 2)? } else { -q32.clone() };
            for i in 1..=mi {
                let len = (shift_len - 2 * i) / 2;
                let num = qpoch(&ctx.q_pow(ni + 1 - mi + i), &q, i - 1)? * qpoch(&q32, &q, len)?;
                let den = qpoch(&den_base, &q, len)?;
                pref = pref * num.checked_div(&den)?;
            }
            let lower = if form == DftForm::Eb {
                [q.clone(), hq(ctx, false, 1)?, q32.clone(), -q.clone()]
            } else {
                [q.clone(), q32.clone(), q32.clone(), -q.clone()]
            };
            FormData {
                base: 1,
                upper: [hq(ctx, false, a2)?, hq(ctx, true, b2)?],
                c: ctx.q_frac(1, 2)?,
                lower,
                top,
                prefactor: pref,
            }
        }
        DftForm::Ec | DftForm::Ed | DftForm::Oc | DftForm::Od => {
            let odd_total = form.odd_total();
            let (a, b) = if odd_total { (1 - ni - mi, 3 + ni - mi) } else { (2 - ni - mi, 4 + ni - mi) };
            let top = (-a / 2) as usize;
            let big = matches!(form, DftForm::Ed | DftForm::Od);
            let qexp = match form {
                DftForm::Ec => -ni * mi,
                DftForm::Ed => -2 * ni * mi,
                DftForm::Oc => -(ni - 1) * mi,
                _ => -2 * (ni - 1) * mi,
            };
            pref = pref * ctx.q_frac(qexp, 2)?;
            let oq_pow = if form == DftForm::Ec { mi } else { 2 * mi };
            pref = pref.checked_div(&one_minus_q.powi(oq_pow)?)?;
            if form == DftForm::Od {
                pref = pref.checked_div(&(F::one() - &q2).powi(mi)?)?;
            }
            let (pb, plen) = if odd_total { (ctx.q_pow(3 + ni - mi), mi - 1) } else { (ctx.q_pow(4 + ni - mi), mi - 2) };
            pref = pref.checked_div(&qpoch(&pb, &q2, plen)?.powi(mi)?)?;
            for i in 1..=mi {
                let base = ctx.q_pow(ni + 1 - mi + i);
                let f = match form {
                    DftForm::Ec | DftForm::Od => qpoch(&base, &q, mi)?,
                    DftForm::Ed => qpoch(&base, &q, i)?.square(),
                    _ => qpoch(&base, &q, i - 1)?.square(),
                };
                pref = pref * f;
            }
            let q3 = ctx.q_pow(3);
            let lower = match form {
                DftForm::Ec => [q.clone(), q2.clone(), q2.clone(), q3.clone()],
                DftForm::Od => [q2.clone(), q3.clone(), q3.clone(), ctx.q_pow(4)],
                _ => [q2.clone(), q2.clone(), q3.clone(), q3.clone()],
            };
            FormData {
                base: 2,
                upper: [ctx.q_pow(a), ctx.q_pow(b)],
                c: if big { q2.clone() } else { q.clone() },
                lower,
                top,
                prefactor: pref,
            }
        }
    };
    Ok(data)
}

/// `P_n(x_1, …, x_m)` by one of the eight parity-dependent forms.
pub fn p_theorem_dft<F: Field>(xs: &[F], n: usize, form: DftForm, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if m == 0 {
        return Ok(F::one());
    }
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("{m} points exceed n + 1 = {}", n + 1)));
    }
    if form.odd_total() != ((n + m) % 2 == 1) {
        return Err(Error::Parity(format!(
            "form {form} needs n + m {}, got n + m = {}",
            if form.odd_total() { "odd" } else { "even" },
            n + m
        )));
    }
    let d = form_data(form, n, m, ctx)?;
    let b = ctx.q_pow(d.base);
    let bp: Vec<F> = (0..=d.top + 1).map(|k| ctx.q_pow(d.base * k as i64)).collect();
    let mut w = Vec::with_capacity(m);
    for x in xs {
        if x.is_zero() {
            return Err(Error::InvalidArgument("zero point".into()));
        }
        let params = [d.upper[0].clone(), d.upper[1].clone(), d.c.clone() * x, d.c.checked_div(x)?];
        w.push(running(d.top, |k| {
            let pk = &bp[k];
            let mut num = b.clone();
            for a in &params {
                num = num * (F::one() - a.clone() * pk);
            }
            let mut den = F::one();
            for l in &d.lower {
                den = den * (F::one() - l.clone() * pk);
            }
            Ok((num, den))
        })?);
    }
    let mut pair = vec![vec![F::zero(); d.top + 1]; d.top + 1];
    for k in 0..=d.top {
        for l in 0..=d.top {
            pair[k][l] = bp[l].clone() - &bp[k];
        }
    }
    let sum = antisymmetric_sum(m, d.top, &pair, &w);
    let mut pref = d.prefactor;
    for x in xs {
        pref = pref * x.powi(d.top as i64)?;
        if !form.odd_total() {
            pref = pref * (F::one() - x.clone());
        }
    }
    (pref * sum).checked_div(&one_minus_products(xs)?)
}
