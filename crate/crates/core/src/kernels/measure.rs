//! The orthogonality measure of `c_k` and the functional `dλ`, both given
//! exactly through their moments, and the integral formulas built on them.

use std::collections::BTreeMap;

use crate::arith::{Field, LaurentPoly, QContext};
use crate::error::{Error, Result};
use crate::linalg::matrix::permutations;
use crate::qseries::{binomial, qpoch};

use super::schur::rect_schur_tilde;
use super::system::OrthoSystem;

/// `a_k = q^k/(1 + q^k)`.
fn a_k<F: Field>(k: i64, ctx: &QContext<F>) -> Result<F> {
    let qk = ctx.q_pow(k);
    qk.checked_div(&(F::one() + &qk))
}

/// Fourier coefficient `∫_{−π}^{π} e^{2ikθ} w(θ) dθ = 2(−1)^k (a_{k−1} − a_{k+1})`.
fn fourier<F: Field>(k: i64, ctx: &QContext<F>) -> Result<F> {
    let v = F::from_i64(2) * (a_k(k - 1, ctx)? - a_k(k + 1, ctx)?);
    Ok(if k % 2 == 0 { v } else { -v })
}

/// `m_k = ∫ x^k dμ(x)` for the measure orthogonalizing `c_k`. With
/// `x = 2cos θ` only the even moments survive, and the normalization is
/// fixed by `m_0 = ‖c_0‖² = (1 − q)/(1 + q)`.
pub fn mu_moments<F: Field>(k: usize, ctx: &QContext<F>) -> Result<F> {
    if k % 2 == 1 {
        return Ok(F::zero());
    }
    let half = (k / 2) as i64;
    let mut acc = F::zero();
    for j in 0..=k {
        let c = F::from_rational(&binomial(k as u64, j as u64).into());
        acc = acc + c * fourier(half - j as i64, ctx)?;
    }
    acc.checked_div(&F::from_i64(2))
}

/// A linear functional on polynomials, stored as its moment sequence.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentFunctional<F> {
    moments: Vec<F>,
}

impl<F: Field> MomentFunctional<F> {
    pub fn new(moments: Vec<F>) -> Self {
        MomentFunctional { moments }
    }

    /// The measure `dμ` up to degree `max`.
    pub fn mu(max: usize, ctx: &QContext<F>) -> Result<Self> {
        Ok(Self::new((0..=max).map(|k| mu_moments(k, ctx)).collect::<Result<_>>()?))
    }

    pub fn moment(&self, k: usize) -> Result<&F> {
        self.moments
            .get(k)
            .ok_or_else(|| Error::InvalidArgument(format!("moment {k} not tabulated (max {})", self.moments.len() - 1)))
    }

    /// `∫ Σ c_k x^k`.
    pub fn apply(&self, coeffs: &[F]) -> Result<F> {
        let mut acc = F::zero();
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = acc + c.clone() * self.moment(k)?;
            }
        }
        Ok(acc)
    }

    /// The odd moments all vanish.
    pub fn is_even(&self) -> bool {
        self.moments.iter().skip(1).step_by(2).all(|m| m.is_zero())
    }
}

fn poly_mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
    let mut out = vec![F::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y;
        }
    }
    out
}

/// The Gram matrix `∫ c_i c_j dμ`, `0 ≤ i, j ≤ max`.
pub fn gram_matrix<F: Field>(max: usize, ctx: &QContext<F>) -> Result<Vec<Vec<F>>> {
    let sys = OrthoSystem::ultraspherical(max, ctx)?;
    let mu = MomentFunctional::mu(2 * max, ctx)?;
    (0..=max)
        .map(|i| (0..=max).map(|j| mu.apply(&poly_mul(sys.coeffs(i)?, sys.coeffs(j)?))).collect())
        .collect()
}

/// `∫ f(t) dλ(t)` with `∫ t^k dλ = (1 − q^k)/(1 + q^k)`.
pub fn lambda_apply<F: Field>(f: &LaurentPoly, ctx: &QContext<F>) -> Result<F> {
    let mut acc = F::zero();
    for (k, c) in f.terms() {
        acc = acc + F::from_rational(c) * lambda_moment(k, ctx)?;
    }
    Ok(acc)
}

fn lambda_moment<F: Field>(k: i64, ctx: &QContext<F>) -> Result<F> {
    let qk = ctx.q_pow(k);
    (F::one() - &qk).checked_div(&(F::one() + &qk))
}

/// `P_n(x_1, …, x_m)` as `1/(2^l l!) Π_{j≤n} (−q;q)_j/(q;q)_j` times the
/// `dλ`-integral of the Vandermonde in `x, t_1⁻¹, t_1, …, t_l⁻¹, t_l` (and a
/// final `1` when `n − m` is even); the integrand is expanded term by term.
pub fn appendix_p<F: Field>(xs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = xs.len();
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("need m ≤ n + 1, got m = {m}, n = {n}")));
    }
    let l = (n + 1 - m) / 2;
    if l > 3 {
        return Err(Error::SizeGuard { what: format!("{l} integration variables"), limit: 3 });
    }
    let size = n + 1;
    // ∫ t^{σ(b) − σ(a)} dλ for every difference
    let lam: Vec<F> = (-(size as i64)..=size as i64).map(|d| lambda_moment(d, ctx)).collect::<Result<_>>()?;
    let xpow: Vec<Vec<F>> = xs
        .iter()
        .map(|x| (0..size).map(|e| x.powi(e as i64)).collect::<Result<Vec<F>>>())
        .collect::<Result<_>>()?;
    let perms = permutations(size);
    let terms = perms.iter().map(|(sigma, sgn)| {
        let mut fs: Vec<&F> = (0..m).map(|i| &xpow[i][sigma[i]]).collect();
        for j in 0..l {
            let (a, b) = (m + 2 * j, m + 2 * j + 1);
            let d = sigma[b] as i64 - sigma[a] as i64;
            fs.push(&lam[(d + size as i64) as usize]);
        }
        (*sgn, fs)
    });
    let sum = F::sum_products(terms);
    let q = ctx.q();
    let mut pref = F::one();
    for j in 1..=n as i64 {
        pref = pref * qpoch(&-q.clone(), &q, j)?.checked_div(&qpoch(&q, &q, j)?)?;
    }
    let mut lfact = F::one();
    for j in 1..=l as i64 {
        lfact = lfact * F::from_i64(2 * j);
    }
    (pref * sum).checked_div(&lfact)
}

type MultiPoly<F> = BTreeMap<Vec<usize>, F>;

fn mp_mul<F: Field>(a: &MultiPoly<F>, b: &MultiPoly<F>) -> MultiPoly<F> {
    let mut out: MultiPoly<F> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert_with(F::zero);
            *slot = slot.clone() + ca.clone() * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `c + Σ_k coef_k u_k` in `l` variables.
fn mp_linear<F: Field>(l: usize, c: F, coefs: &[(usize, F)]) -> MultiPoly<F> {
    let mut p = BTreeMap::new();
    if !c.is_zero() {
        p.insert(vec![0; l], c);
    }
    for (k, v) in coefs {
        let mut e = vec![0; l];
        e[*k] = 1;
        p.insert(e, v.clone());
    }
    p
}

/// Both sides of the integral formula for `𝕡̃_{(2l+ε)^m}(x)` with `p_k = c_k`:
/// the determinant ratio, and the `l`-fold `dμ` integral of
/// `Π_{j,k}(x_j² − y_k²) Π_{i<j}(y_j² − y_i²)² [Π y_k²]`, normalized.
pub fn kif_sides<F: Field>(xs: &[F], l: usize, eps: u8, ctx: &QContext<F>) -> Result<(F, F)> {
    if l > 3 {
        return Err(Error::SizeGuard { what: format!("{l}-fold integral"), limit: 3 });
    }
    let m = xs.len();
    let deg = 2 * l + eps as usize;
    let sys = OrthoSystem::ultraspherical(deg + 2 * m, ctx)?;
    let lhs = rect_schur_tilde(&sys, deg, xs)?;

    // integrand in u_k = y_k²
    let mut p: MultiPoly<F> = mp_linear(l, F::one(), &[]);
    for x in xs {
        for k in 0..l {
            p = mp_mul(&p, &mp_linear(l, x.square(), &[(k, -F::one())]));
        }
    }
    for i in 0..l {
        for j in i + 1..l {
            let d = mp_linear(l, F::zero(), &[(j, F::one()), (i, -F::one())]);
            p = mp_mul(&p, &mp_mul(&d, &d));
        }
    }
    if eps == 1 {
        for k in 0..l {
            p = mp_mul(&p, &mp_linear(l, F::zero(), &[(k, F::one())]));
        }
    }
    let max_u = p.keys().flat_map(|e| e.iter().copied()).max().unwrap_or(0);
    let mu = MomentFunctional::mu(2 * max_u, ctx)?;
    let mut integral = F::zero();
    for (e, c) in &p {
        let mut t = c.clone();
        for &k in e {
            t = t * mu.moment(2 * k)?;
        }
        integral = integral + t;
    }
    let mut norm = F::one();
    for i in 1..=l {
        norm = norm * F::from_i64(i as i64) * sys.norm(2 * i - 2 + eps as usize)?;
    }
    let mut rhs = integral.checked_div(&norm)?;
    if eps == 1 {
        for x in xs {
            rhs = rhs * x;
        }
    }
    Ok((lhs, rhs))
}

pub fn kif_check<F: Field>(xs: &[F], l: usize, eps: u8, ctx: &QContext<F>) -> Result<bool> {
    let (a, b) = kif_sides(xs, l, eps, ctx)?;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, RationalFn};
    use crate::formulas::p_multisum;
    use crate::qseries::c_norm;
    use num_traits::Zero;

    #[test]
    fn first_moments() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        let m0 = mu_moments(0, &ctx).unwrap();
        assert_eq!(m0, c_norm(0, &ctx).unwrap());
        assert_eq!(m0, RationalFn::from_int_coeffs(&[1, -1]).checked_div(&RationalFn::from_int_coeffs(&[1, 1])).unwrap());
        assert!(mu_moments(1, &ctx).unwrap().is_zero());
    }

    #[test]
    fn orthogonality() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        let g = gram_matrix(5, &ctx).unwrap();
        for i in 0..=5 {
            for j in 0..=5 {
                let expect = if i == j { c_norm(i, &ctx).unwrap() } else { RationalFn::zero() };
                assert_eq!(g[i][j], expect, "({i},{j})");
            }
        }
    }

    #[test]
    fn lambda_functional() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        let r = RationalFn::from_int_coeffs(&[1, -1]).checked_div(&RationalFn::from_int_coeffs(&[1, 1])).unwrap();
        assert!(lambda_apply(&LaurentPoly::one(), &ctx).unwrap().is_zero());
        assert_eq!(lambda_apply(&LaurentPoly::monomial(int(1), 1), &ctx).unwrap(), r);
        assert_eq!(lambda_apply(&LaurentPoly::monomial(int(1), -1), &ctx).unwrap(), -r);
    }

    #[test]
    fn appendix_route() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        for (xs, n) in [(vec![ctx.q_pow(2)], 1usize), (vec![ctx.q_pow(3)], 3), (vec![ctx.q_pow(1), ctx.q_pow(4)], 3)] {
            assert_eq!(appendix_p(&xs, n, &ctx).unwrap(), p_multisum(&xs, n, &ctx).unwrap());
        }
    }

    #[test]
    fn integral_formula() {
        let ctx = QContext::numeric(rat(1, 3), 1).unwrap();
        let xs = [rat(1, 2), int(3)];
        assert_eq!(kif_sides(&[], 0, 0, &ctx).unwrap(), (int(1), int(1)));
        assert!(kif_check(&xs[..1], 1, 0, &ctx).unwrap());
        assert!(kif_check(&xs, 1, 1, &ctx).unwrap());
        assert!(kif_check(&xs, 2, 0, &ctx).unwrap());
    }
}
