//! The `q → 1` families: `f_k`, the continuous dual Hahn polynomials
//! `p_k^{(0)}, p_k^{(1)}`, and the Abel-summed orthogonality of `f_k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{int, rat, Field, LaurentPoly, RationalFn};
use crate::error::Result;

use super::pochhammer::{factorial, poch};

fn poly_x() -> LaurentPoly {
    LaurentPoly::monomial(BigRational::one(), 1)
}

fn constant(c: BigRational) -> LaurentPoly {
    LaurentPoly::monomial(c, 0)
}

/// `f_k(x) = (k+1)!/2^k · ₂F₁[−k, 1−x; 2; 2]`, monic of degree `k`.
pub fn f_poly(k: usize) -> LaurentPoly {
    let mut sum = LaurentPoly::zero();
    // (1 − x)_j as a polynomial in x
    let mut rising = LaurentPoly::one();
    for j in 0..=k {
        let c = poch(&int(-(k as i64)), j as u64) * int(2).pow(j as i32)
            / (poch(&int(2), j as u64) * BigRational::from_integer(factorial(j as u64)));
        sum = sum.add(&rising.scale(&c));
        let next = constant(int(1 + j as i64)).sub(&poly_x());
        rising = rising.mul(&next);
    }
    let pref = BigRational::new(factorial(k as u64 + 1), BigInt::from(2).pow(k as u32));
    sum.scale(&pref)
}

/// The monic continuous dual Hahn family `p_k^{(ε)}(y) = (−1)^k S_k(y; a, b, c)`
/// with `(a, b, c) = (0, 1/2, 1)` for `ε = 0` and `(1/2, 1, 1)` for `ε = 1`.
pub fn classical_pk(k: usize, eps: u8) -> LaurentPoly {
    let (a, b, c) = match eps {
        0 => (int(0), rat(1, 2), int(1)),
        _ => (rat(1, 2), int(1), int(1)),
    };
    let ab = &a + &b;
    let ac = &a + &c;
    let mut sum = LaurentPoly::zero();
    // Π_{i<j} ((a+i)² + y)
    let mut prod = LaurentPoly::one();
    for j in 0..=k {
        let coef = poch(&int(-(k as i64)), j as u64)
            / (poch(&ab, j as u64) * poch(&ac, j as u64) * BigRational::from_integer(factorial(j as u64)));
        sum = sum.add(&prod.scale(&coef));
        let ai = &a + int(j as i64);
        prod = prod.mul(&constant(&ai * &ai).add(&poly_x()));
    }
    let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
    sum.scale(&(poch(&ab, k as u64) * poch(&ac, k as u64) * sign))
}

/// `‖p_k^{(0)}‖² = (2k)!(2k+1)!/2^{4k+1}` and `‖p_k^{(1)}‖² = (2k+1)!(2k+2)!/2^{4k+3}`.
pub fn classical_norm(k: usize, eps: u8) -> BigRational {
    let k = k as u64;
    let (a, b, e) = match eps {
        0 => (2 * k, 2 * k + 1, 4 * k + 1),
        _ => (2 * k + 1, 2 * k + 2, 4 * k + 3),
    };
    BigRational::new(factorial(a) * factorial(b), BigInt::from(2).pow(e as u32))
}

/// `G_j(t) = (t d/dt)^j [t/(1+t)]` for `j = 0..=max`, as rational functions in
/// `t` (the variable `s` of [`RationalFn`]).
pub fn abel_generators(max: usize) -> Vec<RationalFn> {
    let t = RationalFn::s();
    let mut g = t.checked_div(&(RationalFn::one() + &t)).expect("nonzero");
    let mut out = vec![g.clone()];
    for _ in 0..max {
        g = t.clone() * &g.derivative();
        out.push(g.clone());
    }
    out
}

/// `lim_{t→1} Σ_{k≥1} (−1)^{k+1} t^k k f_m(k) f_n(k)`, computed exactly.
pub fn abel_orthogonality(m: usize, n: usize) -> Result<BigRational> {
    let integrand = poly_x().mul(&f_poly(m)).mul(&f_poly(n));
    let deg = integrand.max_exp().unwrap_or(0).max(0) as usize;
    let gens = abel_generators(deg);
    let mut acc = BigRational::zero();
    for (j, c) in integrand.terms() {
        acc += c * gens[j as usize].limit_at_one()?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_f_polys() {
        assert_eq!(f_poly(0), LaurentPoly::one());
        assert_eq!(f_poly(1), poly_x());
        for k in 0..=8 {
            assert_eq!(f_poly(k).coeff(k as i64), int(1), "f_{k} monic");
            assert_eq!(f_poly(k).max_exp(), Some(k as i64));
        }
    }

    #[test]
    fn dual_hahn_monic() {
        for k in 0..=6 {
            for eps in 0..=1 {
                let p = classical_pk(k, eps);
                assert_eq!(p.coeff(k as i64), int(1));
                assert_eq!(p.max_exp().unwrap_or(0), k as i64);
            }
        }
    }

    #[test]
    fn abel_small() {
        assert_eq!(abel_orthogonality(0, 1).unwrap(), int(0));
        assert_eq!(abel_orthogonality(0, 0).unwrap(), rat(1, 4));
        assert_eq!(abel_orthogonality(1, 1).unwrap(), rat(-1, 8));
    }
}
