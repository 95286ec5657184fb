//! One- and multi-variable Christoffel–Darboux kernels.

use crate::arith::{Field, Gaussian};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SkewMatrix};

use super::system::OrthoSystem;

/// `K^n(x, y) = Σ_{k<n} p_k(x)p_k(y)/‖p_k‖²`.
pub fn kernel_sum<F: Field>(sys: &OrthoSystem<F>, n: usize, x: &F, y: &F) -> Result<F> {
    let mut acc = F::zero();
    for k in 0..n {
        acc = acc + (sys.p(k, x)? * sys.p(k, y)?).checked_div(sys.norm(k)?)?;
    }
    Ok(acc)
}

/// `(p_n(x)p_{n−1}(y) − p_{n−1}(x)p_n(y)) / (‖p_{n−1}‖² (x − y))`, for `x ≠ y`.
pub fn kernel_quotient<F: Field>(sys: &OrthoSystem<F>, n: usize, x: &F, y: &F) -> Result<F> {
    if n == 0 {
        return Ok(F::zero());
    }
    let num = sys.p(n, x)? * sys.p(n - 1, y)? - sys.p(n - 1, x)? * sys.p(n, y)?;
    let den = sys.norm(n - 1)?.clone() * (x.clone() - y);
    if den.is_zero() {
        return Err(Error::InvalidArgument("quotient form needs x ≠ y".into()));
    }
    num.checked_div(&den)
}

fn require_even<F: Field>(sys: &OrthoSystem<F>) -> Result<()> {
    if sys.has_vanishing_odd_moments() {
        Ok(())
    } else {
        Err(Error::InvalidArgument("the parity-restricted kernel needs vanishing odd moments".into()))
    }
}

/// `K̃^n(x, y)`: the kernel sum restricted to `k ≡ n − 1 (mod 2)`.
pub fn ktilde_sum<F: Field>(sys: &OrthoSystem<F>, n: usize, x: &F, y: &F) -> Result<F> {
    require_even(sys)?;
    let mut acc = F::zero();
    for k in (0..n).filter(|k| (n - 1 - k).is_multiple_of(2)) {
        acc = acc + (sys.p(k, x)? * sys.p(k, y)?).checked_div(sys.norm(k)?)?;
    }
    Ok(acc)
}

/// `(p_{n+1}(x)p_{n−1}(y) − p_{n−1}(x)p_{n+1}(y)) / (‖p_{n−1}‖² (x² − y²))`.
pub fn ktilde_quotient<F: Field>(sys: &OrthoSystem<F>, n: usize, x: &F, y: &F) -> Result<F> {
    require_even(sys)?;
    if n == 0 {
        return Ok(F::zero());
    }
    let num = sys.p(n + 1, x)? * sys.p(n - 1, y)? - sys.p(n - 1, x)? * sys.p(n + 1, y)?;
    let den = sys.norm(n - 1)?.clone() * (x.square() - y.square());
    if den.is_zero() {
        return Err(Error::InvalidArgument("quotient form needs x² ≠ y²".into()));
    }
    num.checked_div(&den)
}

/// `Σ_{j<n} (−1)^{n+j+1} K^{j+1}(x, y)`.
pub fn ktilde_alternating<F: Field>(sys: &OrthoSystem<F>, n: usize, x: &F, y: &F) -> Result<F> {
    let mut acc = F::zero();
    for j in 0..n {
        let k = kernel_sum(sys, j + 1, x, y)?;
        acc = if (n + j + 1).is_multiple_of(2) { acc + k } else { acc - k };
    }
    Ok(acc)
}

/// `Π_{i<j} (z_j − z_i)`.
pub fn vandermonde<F: Field>(z: &[F]) -> F {
    let mut v = F::one();
    for i in 0..z.len() {
        for j in i + 1..z.len() {
            v = v * (z[j].clone() - &z[i]);
        }
    }
    v
}

fn nonzero<F: Field>(v: F, what: &str) -> Result<F> {
    if v.is_zero() {
        Err(Error::InvalidArgument(format!("{what} vanishes; points must be distinct")))
    } else {
        Ok(v)
    }
}

fn even_len(len: usize) -> Result<usize> {
    if len % 2 == 1 {
        return Err(Error::OddDimension(len));
    }
    Ok(len / 2)
}

/// `K_m^n(x_1, …, x_{2m})` as `det(p_{n−m+j−1}(x_i)) / (Π‖p_{n−i}‖² Π_{i<j}(x_j − x_i))`.
pub fn multikernel_det<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F]) -> Result<F> {
    let m = even_len(xs.len())?;
    if m > n {
        return Err(Error::InvalidArgument(format!("need m ≤ n, got m = {m}, n = {n}")));
    }
    let mat = Matrix::try_from_fn(2 * m, 2 * m, |i, j| sys.p(n - m + j, &xs[i]))?;
    let mut den = nonzero(vandermonde(xs), "Vandermonde")?;
    for i in 1..=m {
        den = den * sys.norm(n - i)?;
    }
    mat.det()?.checked_div(&den)
}

/// `pf((z_j − z_i) k(x_i, x_j)) / Π_{i<j}(z_j − z_i)`.
fn pfaffian_form<F: Field>(
    xs: &[F],
    zs: &[F],
    k: impl Fn(&F, &F) -> Result<F>,
) -> Result<F> {
    let s = SkewMatrix::from_upper(xs.len(), |i, j| Ok((zs[j].clone() - &zs[i]) * k(&xs[i], &xs[j])?))?;
    s.pfaffian()?.checked_div(&nonzero(vandermonde(zs), "Vandermonde of the auxiliary points")?)
}

/// `K_m^n` from the pfaffian of `(√x_j − √x_i) K^n(x_i, x_j)`, given
/// `roots` with `x_i = roots_i²`.
pub fn multikernel_pfaff_sqrt<F: Field>(sys: &OrthoSystem<F>, n: usize, roots: &[F]) -> Result<F> {
    even_len(roots.len())?;
    let xs: Vec<F> = roots.iter().map(|w| w.square()).collect();
    pfaffian_form(&xs, roots, |a, b| kernel_sum(sys, n, a, b))
}

/// `K_m^n` from the pfaffian of `(ξ_j − ξ_i) K^n(x_i, x_j)` with
/// `x_i = ξ_i + ξ_i⁻¹ − 2`.
pub fn multikernel_pfaff_xi<F: Field>(sys: &OrthoSystem<F>, n: usize, xis: &[F]) -> Result<F> {
    let m = even_len(xis.len())?;
    let two = F::from_i64(2);
    let xs = xis.iter().map(|z| Ok(z.clone() + &z.inv()? - &two)).collect::<Result<Vec<F>>>()?;
    let mut pref = F::one();
    for z in xis {
        pref = pref * z.powi(m as i64 - 1)?;
    }
    Ok(pref * pfaffian_form(&xs, xis, |a, b| kernel_sum(sys, n, a, b))?)
}

/// `K_m^n(x_1..x_m, y_1..y_m) = det(K^n(x_i, y_j)) / (Π_{i<j}(x_j − x_i)(y_j − y_i))`.
pub fn multikernel_mk_det<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F], ys: &[F]) -> Result<F> {
    let m = xs.len();
    if ys.len() != m {
        return Err(Error::Dimension("x and y blocks differ in length".into()));
    }
    let mat = Matrix::try_from_fn(m, m, |i, j| kernel_sum(sys, n, &xs[i], &ys[j]))?;
    mat.det()?.checked_div(&nonzero(vandermonde(xs) * vandermonde(ys), "Vandermonde")?)
}

/// The same kernel as a sum over `0 ≤ k_m < … < k_1 ≤ n − 1` of products of
/// two `m × m` determinants.
pub fn multikernel_mk_sum<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F], ys: &[F]) -> Result<F> {
    let m = xs.len();
    if ys.len() != m {
        return Err(Error::Dimension("x and y blocks differ in length".into()));
    }
    let mut acc = F::zero();
    for ks in crate::linalg::identities::subsets(n, m) {
        let a = Matrix::try_from_fn(m, m, |i, j| sys.p(ks[i], &xs[j]))?.det()?;
        let b = Matrix::try_from_fn(m, m, |i, j| sys.p(ks[i], &ys[j]))?.det()?;
        let mut t = a * b;
        for &k in &ks {
            t = t.checked_div(sys.norm(k)?)?;
        }
        acc = acc + t;
    }
    acc.checked_div(&nonzero(vandermonde(xs) * vandermonde(ys), "Vandermonde")?)
}

/// `K̃_m^n(x_1, …, x_{2m})` as
/// `det(p_{n−2m+2j−1}(x_i)) / (Π_{i≤m}‖p_{n+1−2i}‖² Π_{i<j≤2m}(x_j² − x_i²))`.
pub fn multikernel_tilde_det<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F]) -> Result<F> {
    require_even(sys)?;
    let m = even_len(xs.len())?;
    if 2 * m > n + 1 {
        return Err(Error::InvalidArgument(format!("need 2m ≤ n + 1, got m = {m}, n = {n}")));
    }
    let mat = Matrix::try_from_fn(2 * m, 2 * m, |i, j| sys.p(n + 1 + 2 * j - 2 * m, &xs[i]))?;
    let sq: Vec<F> = xs.iter().map(|x| x.square()).collect();
    let mut den = nonzero(vandermonde(&sq), "Vandermonde of the squares")?;
    for i in 1..=m {
        den = den * sys.norm(n + 1 - 2 * i)?;
    }
    mat.det()?.checked_div(&den)
}

/// `K̃_m^n` from the pfaffian in `w_i` with `w_i² = −x_i²`; the witnesses
/// `w_i = i·x_i` live in the Gaussian extension, and the value is real.
pub fn multikernel_tilde_pfaff_w<F: Field>(sys: &OrthoSystem<F>, n: usize, xs: &[F]) -> Result<F> {
    require_even(sys)?;
    even_len(xs.len())?;
    let gsys = sys.map(|c| Gaussian::real(c.clone()));
    let gx: Vec<Gaussian<F>> = xs.iter().map(|x| Gaussian::real(x.clone())).collect();
    let ws: Vec<Gaussian<F>> = xs.iter().map(|x| Gaussian::new(F::zero(), x.clone())).collect();
    pfaffian_form(&gx, &ws, |a, b| ktilde_sum(&gsys, n, a, b))?.into_real()
}

/// `K̃_m^n` from the pfaffian in `ξ_i` with `ξ_i + ξ_i⁻¹ = 2 − x_i²`; the
/// points are parametrized as `x_i = t_i + t_i⁻¹`, `ξ_i = −t_i²`.
pub fn multikernel_tilde_pfaff_xi<F: Field>(sys: &OrthoSystem<F>, n: usize, ts: &[F]) -> Result<F> {
    require_even(sys)?;
    let m = even_len(ts.len())?;
    let xs = ts.iter().map(|t| Ok(t.clone() + &t.inv()?)).collect::<Result<Vec<F>>>()?;
    let xis: Vec<F> = ts.iter().map(|t| -t.square()).collect();
    let mut pref = F::one();
    for z in &xis {
        pref = pref * z.powi(m as i64 - 1)?;
    }
    Ok(pref * pfaffian_form(&xs, &xis, |a, b| ktilde_sum(sys, n, a, b))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, QContext, RationalFn};
    use num_rational::BigRational;

    fn sys_at(s0: BigRational, d: usize) -> OrthoSystem<BigRational> {
        OrthoSystem::ultraspherical(d, &QContext::numeric(s0, 1).unwrap()).unwrap()
    }

    #[test]
    fn first_kernel_is_inverse_norm() {
        let sys = sys_at(rat(1, 3), 3);
        let v = kernel_sum(&sys, 1, &int(5), &rat(2, 7)).unwrap();
        assert_eq!(v, sys.norm(0).unwrap().inv().unwrap());
    }

    #[test]
    fn kernel_forms_symbolic() {
        let ctx = QContext::<RationalFn>::symbolic(1).unwrap();
        let sys = OrthoSystem::ultraspherical(7, &ctx).unwrap();
        let x = RationalFn::constant(rat(3, 2));
        let y = RationalFn::constant(rat(-5, 3));
        for n in 1..=5 {
            let s = kernel_sum(&sys, n, &x, &y).unwrap();
            assert_eq!(s, kernel_quotient(&sys, n, &x, &y).unwrap());
            assert_eq!(s, kernel_sum(&sys, n, &y, &x).unwrap());
            let t = ktilde_sum(&sys, n, &x, &y).unwrap();
            assert_eq!(t, ktilde_quotient(&sys, n, &x, &y).unwrap(), "n={n}");
            assert_eq!(t, ktilde_alternating(&sys, n, &x, &y).unwrap(), "n={n}");
        }
    }

    #[test]
    fn multikernel_four_points() {
        let sys = sys_at(rat(2, 5), 8);
        let roots = [rat(1, 2), int(2), rat(-3, 4), rat(5, 3)];
        let xs: Vec<BigRational> = roots.iter().map(|w| w * w).collect();
        for n in 2..=5 {
            let d = multikernel_det(&sys, n, &xs).unwrap();
            assert_eq!(d, multikernel_pfaff_sqrt(&sys, n, &roots).unwrap(), "n={n}");
            assert_eq!(d, multikernel_mk_det(&sys, n, &xs[..2], &xs[2..]).unwrap());
            assert_eq!(d, multikernel_mk_sum(&sys, n, &xs[..2], &xs[2..]).unwrap());
            let xis = [rat(1, 2), int(3), rat(-2, 3), rat(4, 7)];
            let xs2: Vec<BigRational> = xis.iter().map(|z| z + z.inv().unwrap() - int(2)).collect();
            assert_eq!(multikernel_det(&sys, n, &xs2).unwrap(), multikernel_pfaff_xi(&sys, n, &xis).unwrap());
        }
    }

    #[test]
    fn tilde_multikernel_four_points() {
        let sys = sys_at(rat(3, 7), 8);
        let ts = [rat(1, 2), int(3), rat(-2, 5), rat(7, 4)];
        let xs: Vec<BigRational> = ts.iter().map(|t| t + t.inv().unwrap()).collect();
        for n in 3..=5 {
            let d = multikernel_tilde_det(&sys, n, &xs).unwrap();
            assert_eq!(d, multikernel_tilde_pfaff_w(&sys, n, &xs).unwrap(), "n={n}");
            assert_eq!(d, multikernel_tilde_pfaff_xi(&sys, n, &ts).unwrap(), "n={n}");
        }
        // two points: all three reduce to K̃^n
        let n = 3;
        let k = ktilde_sum(&sys, n, &xs[0], &xs[1]).unwrap();
        assert_eq!(multikernel_tilde_det(&sys, n, &xs[..2]).unwrap(), k);
    }
}
