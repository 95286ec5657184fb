//! Rectangular Schur-type determinants in an orthogonal basis, and the
//! resulting closed form for `P_n`.

use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::formulas::p_multisum;
use crate::linalg::Matrix;

use super::kernel::{multikernel_tilde_det, vandermonde};
use super::system::OrthoSystem;

fn nonzero<F: Field>(v: F) -> Result<F> {
    if v.is_zero() {
        Err(Error::InvalidArgument("points must be distinct".into()))
    } else {
        Ok(v)
    }
}

/// `𝕡_{n^m}(x) = det(p_{n+j−1}(x_i)) / Π_{i<j}(x_j − x_i)`.
pub fn rect_schur<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F]) -> Result<F> {
    let m = xs.len();
    let mat = Matrix::try_from_fn(m, m, |i, j| sys.p(n + j, &xs[i]))?;
    mat.det()?.checked_div(&nonzero(vandermonde(xs))?)
}

/// `𝕡̃_{n^m}(x) = det(p_{n+2j−2}(x_i)) / Π_{i<j}(x_j² − x_i²)`.
pub fn rect_schur_tilde<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F]) -> Result<F> {
    let m = xs.len();
    let mat = Matrix::try_from_fn(m, m, |i, j| sys.p(n + 2 * j, &xs[i]))?;
    let sq: Vec<F> = xs.iter().map(|x| x.square()).collect();
    mat.det()?.checked_div(&nonzero(vandermonde(&sq))?)
}

/// The sampling sequence `2, 3/2, 5/3, 8/5, …` of consecutive Fibonacci
/// ratios, skipping any value in `avoid`.
pub fn sample_points<F: Field>(count: usize, avoid: &[F]) -> Vec<F> {
    let (mut a, mut b) = (1i64, 2i64);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let t = F::from_frac(b, a);
        if !avoid.contains(&t) && !avoid.contains(&-t.clone()) {
            out.push(t);
        }
        let c = a + b;
        a = b;
        b = c;
    }
    out
}

/// `f[t_0, …, t_d] = Σ_i f(t_i) / Π_{j≠i}(t_i − t_j)`: the leading coefficient
/// of the interpolating polynomial of degree `≤ d`.
pub fn divided_difference<F: Field>(ts: &[F], vals: &[F]) -> Result<F> {
    let mut acc = F::zero();
    for i in 0..ts.len() {
        let mut den = F::one();
        for j in 0..ts.len() {
            if i != j {
                den = den * (ts[i].clone() - &ts[j]);
            }
        }
        acc = acc + vals[i].checked_div(&den)?;
    }
    Ok(acc)
}

/// `lim_{t→∞} t^{−n} 𝕡̃_{n^{m+1}}(x_1, …, x_m, t)` and `𝕡̃_{n^m}(x_1, …, x_m)`.
///
/// The left side is a polynomial in `t` of degree at most `n`; sampling it
/// at `n + 2` points certifies the degree bound (the order-`n+1` divided
/// difference must vanish) and the order-`n` divided difference is the
/// leading coefficient.
pub fn sfl_sides<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F]) -> Result<(F, F)> {
    let ts = sample_points(n + 2, xs);
    let vals = ts
        .iter()
        .map(|t| {
            let mut pts = xs.to_vec();
            pts.push(t.clone());
            rect_schur_tilde(sys, n, &pts)
        })
        .collect::<Result<Vec<F>>>()?;
    if !divided_difference(&ts, &vals)?.is_zero() {
        return Err(Error::Invariant(format!("degree in t exceeds {n}")));
    }
    let lead = divided_difference(&ts[..n + 1], &vals[..n + 1])?;
    Ok((lead, rect_schur_tilde(sys, n, xs)?))
}

/// The prefactor `Π_i (−q;q)_{n+1−i}/(q;q)_{n+1−i} z_i^{n+1−m} Π_{i<j}(x_j − x_i)`
/// with `x_i = −z_i²`.
fn pkt_prefactor<F: Field>(zs: &[F], n: usize, ctx: &QContext<F>) -> Result<F> {
    let m = zs.len();
    let q = ctx.q();
    let xs: Vec<F> = zs.iter().map(|z| -z.square()).collect();
    let mut v = vandermonde(&xs);
    for (i, z) in zs.iter().enumerate() {
        let k = (n - i) as i64;
        let r = crate::qseries::qpoch(&-q.clone(), &q, k)?.checked_div(&crate::qseries::qpoch(&q, &q, k)?)?;
        v = v * r * z.powi(n as i64 + 1 - m as i64)?;
    }
    Ok(v)
}

/// Both sides of `P_n(x) = prefactor · 𝕡̃_{(n+1−m)^m}(ξ)` with `x_i = −z_i²`
/// and `ξ_i = z_i + z_i⁻¹`, using the `c_k` system.
pub fn theorem_pkt_sides<F: Field>(zs: &[F], n: usize, ctx: &QContext<F>) -> Result<(F, F)> {
    let m = zs.len();
    if m > n + 1 {
        return Err(Error::InvalidArgument(format!("need m ≤ n + 1, got m = {m}, n = {n}")));
    }
    let xs: Vec<F> = zs.iter().map(|z| -z.square()).collect();
    let xis = zs.iter().map(|z| Ok(z.clone() + &z.inv()?)).collect::<Result<Vec<F>>>()?;
    let sys = OrthoSystem::ultraspherical(n + 2 * m, ctx)?;
    let rhs = pkt_prefactor(zs, n, ctx)? * rect_schur_tilde(&sys, n + 1 - m, &xis)?;
    Ok((p_multisum(&xs, n, ctx)?, rhs))
}

/// The even-`m` kernel form `P_n(x) = Π z_i^{n+1−2m} Π(x_j − x_i) K̃_m^n(ξ)`.
pub fn theorem_pkt_kernel_sides<F: Field>(zs: &[F], n: usize, ctx: &QContext<F>) -> Result<(F, F)> {
    let xs: Vec<F> = zs.iter().map(|z| -z.square()).collect();
    let xis = zs.iter().map(|z| Ok(z.clone() + &z.inv()?)).collect::<Result<Vec<F>>>()?;
    let sys = OrthoSystem::ultraspherical(n + 2, ctx)?;
    let mut rhs = vandermonde(&xs) * multikernel_tilde_det(&sys, n, &xis)?;
    for z in zs {
        rhs = rhs * z.powi(n as i64 + 1 - zs.len() as i64)?;
    }
    Ok((p_multisum(&xs, n, ctx)?, rhs))
}

pub fn theorem_pkt_check<F: Field>(zs: &[F], n: usize, ctx: &QContext<F>) -> Result<bool> {
    let (l, r) = theorem_pkt_sides(zs, n, ctx)?;
    Ok(l == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, RationalFn};
    use crate::qseries::p1_direct;
    use num_rational::BigRational;

    #[test]
    fn trivial_rectangles() {
        let ctx = QContext::numeric(rat(1, 3), 1).unwrap();
        let sys = OrthoSystem::ultraspherical(6, &ctx).unwrap();
        let xs = [rat(1, 2), int(3), rat(-4, 5)];
        assert_eq!(rect_schur(&sys, 0, &xs).unwrap(), int(1));
        assert_eq!(rect_schur(&sys, 4, &xs[..1]).unwrap(), sys.p(4, &xs[0]).unwrap());
        assert_eq!(rect_schur_tilde(&sys, 0, &xs).unwrap(), int(1));
    }

    #[test]
    fn leading_coefficient_limit() {
        let ctx = QContext::numeric(rat(2, 7), 1).unwrap();
        let sys = OrthoSystem::ultraspherical(12, &ctx).unwrap();
        for (n, xs) in [(2, vec![rat(1, 3)]), (3, vec![rat(1, 3), int(-4)]), (2, vec![int(5), rat(-2, 9)])] {
            let (l, r) = sfl_sides(&sys, n, &xs).unwrap();
            assert_eq!(l, r, "n={n}");
        }
    }

    #[test]
    fn one_variable_reduction_symbolic_in_z() {
        // m = 1: P_n(−z²) = (−q;q)_n/(q;q)_n z^n c_n(z + 1/z), as rational
        // functions of z at a fixed rational q.
        let ctx = QContext::numeric(rat(1, 3), 1).unwrap().map(|c| RationalFn::constant(c.clone()));
        let z = RationalFn::s();
        for n in 0..=4 {
            let (l, r) = theorem_pkt_sides(std::slice::from_ref(&z), n, &ctx).unwrap();
            assert_eq!(l, r);
            assert_eq!(l, p1_direct(&-z.square(), n, &ctx).unwrap());
        }
    }

    #[test]
    fn several_points() {
        let ctx = QContext::numeric(rat(1, 2), 1).unwrap();
        let zs: Vec<BigRational> = vec![int(2), int(3), rat(-1, 4)];
        assert!(theorem_pkt_check(&zs[..2], 3, &ctx).unwrap());
        assert!(theorem_pkt_check(&zs, 4, &ctx).unwrap());
        let (l, r) = theorem_pkt_kernel_sides(&zs[..2], 3, &ctx).unwrap();
        assert_eq!(l, r);
    }
}
