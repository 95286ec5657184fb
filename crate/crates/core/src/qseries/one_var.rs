//! The one-variable polynomials `P_n(x)` in all their hypergeometric forms.

use crate::arith::{Field, Gaussian, QContext};
use crate::error::{Error, Result};

use super::pochhammer::{phi, qpoch, qpoch_many, ratio_series};

fn one_minus<F: Field>(a: F) -> F {
    F::one() - &a
}

/// Coefficients `a_j` of `P_n(x) = Σ_j a_j x^j`, read off the terminating
/// well-poised ₂φ₁.
pub fn p1_coeffs<F: Field>(n: usize, ctx: &QContext<F>) -> Result<Vec<F>> {
    let q = ctx.q();
    let mq = -q.clone();
    let qn = ctx.q_pow(-(n as i64));
    let mqn = -qn.clone();
    let pref = qpoch(&mq, &q, n as i64)?.checked_div(&qpoch(&q, &q, n as i64)?)?;
    let mut out = Vec::with_capacity(n + 1);
    let mut term = pref;
    let mut qk = F::one();
    for _ in 0..=n {
        out.push(term.clone());
        let num = one_minus(mq.clone() * &qk) * one_minus(qn.clone() * &qk);
        let den = one_minus(q.clone() * &qk) * one_minus(mqn.clone() * &qk);
        if num.is_zero() {
            break;
        }
        term = term * &num.checked_div(&den)?;
        qk = qk * &q;
    }
    out.resize(n + 1, F::zero());
    Ok(out)
}

/// `P_n(x) = (−q;q)_n/(q;q)_n · ₂φ₁[−q, q^{−n}; −q^{−n}; q, x]`.
pub fn p1_direct<F: Field>(x: &F, n: usize, ctx: &QContext<F>) -> Result<F> {
    let coeffs = p1_coeffs(n, ctx)?;
    let mut acc = F::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    Ok(acc)
}

/// Which ₄φ₃ representation of `P_n` to use in [`p1_phi43`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Phi43Form {
    /// Base `q`, lower parameters `q, q^{3/2}, −q^{3/2}`.
    Eq43,
    /// Base `q^{1/2}`; the conjugate pair `±i q^{3/4}` is folded into `(−q^{3/2}; q)_k`.
    Cidb,
}

/// `P_n(x)` from a ₄φ₃, given a witness `w` with `w² = x`.
pub fn p1_phi43<F: Field>(w: &F, n: usize, form: Phi43Form, ctx: &QContext<F>) -> Result<F> {
    let q = ctx.q();
    let half = ctx.q_frac(1, 2)?;
    let three_half = ctx.q_frac(3, 2)?;
    let n_i = n as i64;
    let pref = one_minus(ctx.q_pow(n_i + 1)).checked_div(&one_minus(q.clone()))?
        * (w.clone().checked_div(&half)?).powi(n_i)?;
    let a3 = half.checked_div(w)?;
    let a4 = -(half.clone() * w);
    let sum = match form {
        Phi43Form::Eq43 => phi(
            &[ctx.q_pow(-n_i), ctx.q_pow(n_i + 2), a3, a4],
            &[q.clone(), three_half.clone(), -three_half],
            &q,
            &q,
            n + 1,
        )?,
        Phi43Form::Cidb => {
            let p = half.clone();
            let upper = [ctx.q_frac(-n_i, 2)?, -ctx.q_frac(n_i + 2, 2)?, a3, a4];
            let mut pk = F::one();
            let mut qk = F::one();
            let mut pks = Vec::new();
            let mut qks = Vec::new();
            for _ in 0..=n {
                pks.push(pk.clone());
                qks.push(qk.clone());
                pk = pk * &p;
                qk = qk * &q;
            }
            ratio_series(n + 1, |k| {
                let mut num = p.clone();
                for a in &upper {
                    num = num * one_minus(a.clone() * &pks[k]);
                }
                let den = one_minus(pks[k].clone() * &p)
                    * one_minus(q.clone() * &pks[k])
                    * (F::one() + three_half.clone() * &qks[k]);
                (num, den)
            })?
        }
    };
    Ok(pref * sum)
}

/// The eight ₄φ₃ expressions for `P_n` split by parity: forms 1–4 give
/// `P_{2N}`, forms 5–8 give `P_{2N+1}`.
pub fn p1_chia<F: Field>(x: &F, n: usize, form: u8, ctx: &QContext<F>) -> Result<F> {
    let even = n.is_multiple_of(2);
    match (form, even) {
        (1..=4, true) | (5..=8, false) => {}
        (1..=8, _) => {
            return Err(Error::Parity(format!(
                "form {form} expresses P_n for {} n, got n = {n}",
                if form <= 4 { "even" } else { "odd" }
            )))
        }
        _ => return Err(Error::InvalidArgument(format!("no such form {form}"))),
    }
    let big_n = (n / 2) as i64;
    let len = big_n as usize + 1;
    let q = ctx.q();
    let q2 = ctx.q_pow(2);
    let qp = |k: i64| ctx.q_pow(k);
    let xinv = x.inv()?;
    let xn = x.powi(big_n)?;
    let one_m_q = one_minus(q.clone());
    let one_m_x = one_minus(x.clone());
    let val = match form {
        1 => {
            let pref = one_minus(qp(2 * big_n + 1)).checked_div(&one_m_q)? * qp(-big_n) * &xn;
            pref * phi(
                &[qp(-big_n), -qp(big_n + 1), q.clone() * x, q.clone() * &xinv],
                &[q.clone(), ctx.q_frac(3, 2)?, -ctx.q_frac(3, 2)?],
                &q,
                &q,
                len,
            )?
        }
        2 => {
            let h = ctx.q_frac(1, 2)?;
            let num = qpoch_many(&[ctx.q_frac(3, 2)?, -q.clone()], &q, big_n)?;
            let den = qpoch_many(&[q.clone(), -h.clone()], &q, big_n)?;
            let pref = num.checked_div(&den)? * ctx.q_frac(-big_n, 2)? * &xn;
            pref * phi(
                &[qp(-big_n), -qp(big_n + 1), h.clone() * x, h.clone() * &xinv],
                &[h.clone(), ctx.q_frac(3, 2)?, -q.clone()],
                &q,
                &q,
                len,
            )?
        }
        3 => {
            let pref = one_minus(qp(2 * big_n + 1)).checked_div(&one_m_q)? * qp(-big_n) * &xn;
            pref * phi(
                &[qp(-2 * big_n), qp(2 * big_n + 2), q.clone() * x, q.clone() * &xinv],
                &[q.clone(), qp(2), qp(3)],
                &q2,
                &q2,
                len,
            )?
        }
        4 => {
            let r = one_minus(qp(2 * big_n + 1)).checked_div(&one_m_q)?;
            let pref = r.square() * qp(-2 * big_n) * &xn;
            pref * phi(
                &[qp(-2 * big_n), qp(2 * big_n + 2), q2.clone() * x, q2.clone() * &xinv],
                &[qp(2), qp(3), qp(3)],
                &q2,
                &q2,
                len,
            )?
        }
        5 => {
            let pref = one_minus(qp(2 * big_n + 2)) * &one_m_x
                * one_m_q.square().inv()?
                * qp(-big_n)
                * &xn;
            pref * phi(
                &[qp(-big_n), -qp(big_n + 2), q.clone() * x, q.clone() * &xinv],
                &[qp(2), ctx.q_frac(3, 2)?, -ctx.q_frac(3, 2)?],
                &q,
                &q,
                len,
            )?
        }
        6 => {
            let h = ctx.q_frac(1, 2)?;
            let t = ctx.q_frac(3, 2)?;
            let num = qpoch(&t, &q, big_n)? * qpoch(&-q.clone(), &q, big_n + 1)? * &one_m_x;
            let den = one_m_q.clone() * qpoch_many(&[q.clone(), -t.clone()], &q, big_n)?;
            let pref = num.checked_div(&den)? * ctx.q_frac(-big_n, 2)? * &xn;
            pref * phi(
                &[qp(-big_n), -qp(big_n + 2), h.clone() * x, h.clone() * &xinv],
                &[t.clone(), t.clone(), -q.clone()],
                &q,
                &q,
                len,
            )?
        }
        7 => {
            let pref = one_minus(qp(2 * big_n + 2)) * &one_m_x
                * one_m_q.square().inv()?
                * qp(-big_n)
                * &xn;
            pref * phi(
                &[qp(-2 * big_n), qp(2 * big_n + 4), q.clone() * x, q.clone() * &xinv],
                &[qp(2), qp(3), qp(3)],
                &q2,
                &q2,
                len,
            )?
        }
        8 => {
            let pref = one_minus(qp(2 * big_n + 2)).square() * &one_m_x
                * (one_m_q.square() * one_minus(qp(2))).inv()?
                * qp(-2 * big_n)
                * &xn;
            pref * phi(
                &[qp(-2 * big_n), qp(2 * big_n + 4), q2.clone() * x, q2.clone() * &xinv],
                &[qp(3), qp(3), qp(4)],
                &q2,
                &q2,
                len,
            )?
        }
        _ => unreachable!(),
    };
    Ok(val)
}

/// Askey–Wilson polynomial `p_n(x; a, b, c, d | p)` at `x = (z + 1/z)/2`.
pub fn askey_wilson<F: Field>(n: usize, z: &F, params: [&F; 4], p: &F) -> Result<F> {
    let [a, b, c, d] = params;
    let n_i = n as i64;
    let ab = a.clone() * b;
    let ac = a.clone() * c;
    let ad = a.clone() * d;
    let abcd = ab.clone() * c * d;
    let pref = qpoch_many(&[ab.clone(), ac.clone(), ad.clone()], p, n_i)?.checked_div(&a.powi(n_i)?)?;
    let upper = [
        p.powi(-n_i)?,
        abcd * p.powi(n_i - 1)?,
        a.clone() * z,
        a.clone().checked_div(z)?,
    ];
    Ok(pref * phi(&upper, &[ab, ac, ad], p, p, n + 1)?)
}

/// `P_n(−z²)` through the Askey–Wilson identification with parameters
/// `(i q^{1/2}, −i q^{1/2}, i q, −i q)` in base `q`.
///
/// The parameters are genuinely complex, so the evaluation runs over the
/// Gaussian extension and the (vanishing) imaginary part is checked.
pub fn p1_aw_cid<F: Field>(z: &F, n: usize, ctx: &QContext<F>) -> Result<F> {
    let g = ctx.gaussian();
    let i = Gaussian::<F>::i();
    let q = g.q();
    let h = g.q_frac(1, 2)?;
    let zz = Gaussian::real(z.clone());
    let n_i = n as i64;
    let a = i.clone() * &h;
    let b = -a.clone();
    let c = i.clone() * &q;
    let d = -c.clone();
    let aw = askey_wilson(n, &zz, [&a, &b, &c, &d], &q)?;
    let pref = qpoch(&-q.clone(), &q, n_i)?
        .checked_div(&(qpoch(&q, &q, n_i)? * qpoch(&g.q_pow(n_i + 2), &q, n_i)?))?;
    (pref * zz.powi(n_i)? * aw).into_real()
}

/// `P_n(−z²)` through the base-`q^{1/2}` identification with parameters
/// `(i q^{1/2}, −i q^{1/2}, q^{1/4}, −q^{1/4})`; requires root order 4.
pub fn p1_aw_cidb<F: Field>(z: &F, n: usize, ctx: &QContext<F>) -> Result<F> {
    let g = ctx.gaussian();
    let i = Gaussian::<F>::i();
    let q = g.q();
    let h = g.q_frac(1, 2)?;
    let quarter = g.q_frac(1, 4)?;
    let zz = Gaussian::real(z.clone());
    let n_i = n as i64;
    let a = i.clone() * &h;
    let b = -a.clone();
    let c = quarter.clone();
    let d = -quarter;
    let aw = askey_wilson(n, &zz, [&a, &b, &c, &d], &h)?;
    let num = qpoch(&-q.clone(), &h, n_i)?;
    let den = qpoch(&q, &q, n_i)? * qpoch(&-g.q_frac(3, 2)?, &q, n_i)?;
    (num.checked_div(&den)? * zz.powi(n_i)? * aw).into_real()
}

/// The four Askey–Wilson identifications of `P_{2N}` (kinds 1, 2) and
/// `P_{2N+1}` (kinds 3, 4) with `e^{iθ} = x`.
pub fn p1_aw_chi<F: Field>(x: &F, n: usize, kind: u8, ctx: &QContext<F>) -> Result<F> {
    let even = n.is_multiple_of(2);
    if !matches!((kind, even), (1 | 2, true) | (3 | 4, false)) {
        return Err(Error::Parity(format!("identification {kind} does not apply to n = {n}")));
    }
    let big_n = n / 2;
    let k = big_n as i64;
    let q = ctx.q();
    let q2 = ctx.q_pow(2);
    let one = F::one();
    let xn = x.powi(k)?;
    let one_m_x = one_minus(x.clone());
    match kind {
        1 => {
            let h = ctx.q_frac(1, 2)?;
            let pref = qpoch(&-q.clone(), &q, k)?.checked_div(&qpoch(&q, &q, 2 * k)?)?;
            let aw = askey_wilson(big_n, x, [&one, &q, &h, &-h.clone()], &q)?;
            Ok(pref * xn * aw)
        }
        2 => {
            let pref = qpoch(&q2, &q2, k)?.checked_div(&qpoch(&q, &q, 2 * k)?.square())?;
            let aw = askey_wilson(big_n, x, [&one, &q, &q, &q2], &q2)?;
            Ok(pref * xn * aw)
        }
        3 => {
            let h = ctx.q_frac(1, 2)?;
            let pref = qpoch(&-q.clone(), &q, k + 1)?.checked_div(&qpoch(&q, &q, 2 * k + 1)?)?;
            let aw = askey_wilson(big_n, x, [&q, &q, &h, &-h.clone()], &q)?;
            Ok(pref * xn * one_m_x * aw)
        }
        4 => {
            let pref =
                qpoch(&q2, &q2, k + 1)?.checked_div(&qpoch(&q, &q, 2 * k + 1)?.square())?;
            let aw = askey_wilson(big_n, x, [&q, &q, &q2, &q2], &q2)?;
            Ok(pref * xn * one_m_x * aw)
        }
        _ => unreachable!(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, RationalFn};
    use num_traits::One;

    fn ctx(r: u32) -> QContext<RationalFn> {
        QContext::symbolic(r).unwrap()
    }

    #[test]
    fn small_cases() {
        let c = ctx(1);
        let x = RationalFn::from_frac(3, 7);
        assert_eq!(p1_direct(&x, 0, &c).unwrap(), RationalFn::one());
        let q = c.q();
        let expect = (RationalFn::one() + &q) * (RationalFn::one() - &x)
            * (RationalFn::one() - &q).inv().unwrap();
        assert_eq!(p1_direct(&x, 1, &c).unwrap(), expect);
    }

    #[test]
    fn phi43_forms_match_direct() {
        let c = ctx(2);
        for n in 0..=4 {
            for lam in 1..=3i64 {
                let x = c.q_pow(2 * lam);
                let w = c.q_pow(lam);
                let d = p1_direct(&x, n, &c).unwrap();
                assert_eq!(p1_phi43(&w, n, Phi43Form::Eq43, &c).unwrap(), d, "eq43 n={n}");
                assert_eq!(p1_phi43(&w, n, Phi43Form::Cidb, &c).unwrap(), d, "cidb n={n}");
            }
        }
    }

    #[test]
    fn chia_forms_match_direct() {
        let c = ctx(2);
        let x = RationalFn::from_frac(5, 3);
        for n in 0..=5usize {
            let d = p1_direct(&x, n, &c).unwrap();
            let forms: &[u8] = if n % 2 == 0 { &[1, 2, 3, 4] } else { &[5, 6, 7, 8] };
            for &f in forms {
                assert_eq!(p1_chia(&x, n, f, &c).unwrap(), d, "form {f} n={n}");
            }
            let wrong = if n % 2 == 0 { 5 } else { 1 };
            assert!(matches!(p1_chia(&x, n, wrong, &c), Err(Error::Parity(_))));
        }
    }

    #[test]
    fn askey_wilson_identifications() {
        let c = ctx(4);
        let z = RationalFn::from_frac(2, 3);
        let x = -(z.clone() * &z);
        for n in 0..=4usize {
            let d = p1_direct(&x, n, &c).unwrap();
            assert_eq!(p1_aw_cid(&z, n, &c).unwrap(), d, "cid n={n}");
            assert_eq!(p1_aw_cidb(&z, n, &c).unwrap(), d, "cidb n={n}");
        }
        let y = RationalFn::from_frac(7, 2);
        for n in 0..=5usize {
            let d = p1_direct(&y, n, &c).unwrap();
            let kinds: &[u8] = if n % 2 == 0 { &[1, 2] } else { &[3, 4] };
            for &k in kinds {
                assert_eq!(p1_aw_chi(&y, n, k, &c).unwrap(), d, "chi {k} n={n}");
            }
        }
    }

    #[test]
    fn askey_wilson_symmetry_and_reflection() {
        let p = rat(1, 3);
        let z = rat(5, 2);
        let (a, b, c, d) = (rat(1, 2), rat(2, 7), rat(-3, 5), rat(1, 9));
        for n in 0..=4 {
            let base = askey_wilson(n, &z, [&a, &b, &c, &d], &p).unwrap();
            assert_eq!(askey_wilson(n, &z, [&b, &a, &c, &d], &p).unwrap(), base);
            assert_eq!(askey_wilson(n, &z, [&c, &d, &b, &a], &p).unwrap(), base);
            // x ↦ −x corresponds to z ↦ −z
            let refl = askey_wilson(n, &-z.clone(), [&-a.clone(), &-b.clone(), &-c.clone(), &-d.clone()], &p)
                .unwrap();
            let sign = if n % 2 == 0 { rat(1, 1) } else { rat(-1, 1) };
            assert_eq!(refl * sign, base);
        }
    }
}
