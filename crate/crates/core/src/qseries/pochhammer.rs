//! Pochhammer symbols and terminating hypergeometric sums.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::Field;
use crate::error::{Error, Result};

/// `(a; p)_k`. For negative `k`, `(a; p)_{-k} = 1 / Π_{j=1}^{k} (1 - a p^{-j})`.
pub fn qpoch<F: Field>(a: &F, p: &F, k: i64) -> Result<F> {
    if k >= 0 {
        let mut factors = Vec::with_capacity(k as usize);
        let mut apj = a.clone();
        for _ in 0..k {
            factors.push(F::one() - &apj);
            apj = apj * p;
        }
        let refs: Vec<&F> = factors.iter().collect();
        Ok(F::product(&refs))
    } else {
        let pinv = p.inv()?;
        let mut acc = F::one();
        let mut apj = a.clone() * &pinv;
        for _ in 0..(-k) {
            acc = acc * (F::one() - &apj);
            apj = apj * &pinv;
        }
        acc.inv()
    }
}

/// `(a_1, …, a_r; p)_k`.
pub fn qpoch_many<F: Field>(args: &[F], p: &F, k: i64) -> Result<F> {
    let mut acc = F::one();
    for a in args {
        acc = acc * qpoch(a, p, k)?;
    }
    Ok(acc)
}

/// Sum of a terminating series given by its consecutive term ratios:
/// `Σ_{k=0}^{len-1} t_k` with `t_0 = 1` and `t_{k+1} = t_k · num(k) / den(k)`.
/// Stops early once a numerator vanishes.
pub fn ratio_series<F: Field>(
    len: usize,
    mut ratio: impl FnMut(usize) -> (F, F),
) -> Result<F> {
    let mut term = F::one();
    let mut sum = F::one();
    for k in 0..len.saturating_sub(1) {
        let (num, den) = ratio(k);
        if num.is_zero() {
            break;
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        term = term * &num.checked_div(&den)?;
        sum = sum + &term;
    }
    if len == 0 {
        return Ok(F::zero());
    }
    Ok(sum)
}

/// Terminating `r+1 φ r` with base `p`:
/// `Σ_{k<len} (a_1..a_{r+1}; p)_k / (p, b_1..b_r; p)_k z^k`.
pub fn phi<F: Field>(upper: &[F], lower: &[F], p: &F, z: &F, len: usize) -> Result<F> {
    let mut pk = F::one();
    let mut pks = Vec::with_capacity(len);
    for _ in 0..len {
        pks.push(pk.clone());
        pk = pk * p;
    }
    ratio_series(len, |k| {
        let mut num = z.clone();
        for a in upper {
            num = num * (F::one() - a.clone() * &pks[k]);
        }
        let mut den = F::one() - pks[k].clone() * p;
        for b in lower {
            den = den * (F::one() - b.clone() * &pks[k]);
        }
        (num, den)
    })
}

/// Rising factorial `(a)_k` over ℚ.
pub fn poch(a: &BigRational, k: u64) -> BigRational {
    let mut acc = BigRational::one();
    let mut x = a.clone();
    for _ in 0..k {
        acc *= &x;
        x += BigRational::one();
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Terminating classical `pFq[upper; lower; z]` over ℚ, summed until a
/// numerator parameter hits zero.
pub fn hyp_f(upper: &[BigRational], lower: &[BigRational], z: &BigRational) -> Result<BigRational> {
    let mut term = BigRational::one();
    let mut sum = BigRational::one();
    let mut k = 0u64;
    loop {
        let kk = BigRational::from_integer(BigInt::from(k));
        let mut num = z.clone();
        for a in upper {
            num *= a + &kk;
        }
        if num.is_zero() {
            return Ok(sum);
        }
        let mut den = &kk + BigRational::one();
        for b in lower {
            den *= b + &kk;
        }
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        term = term * num / den;
        sum += &term;
        k += 1;
        if k > 100_000 {
            return Err(Error::InvalidArgument("series does not terminate".into()));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat, QContext, RationalFn};

    #[test]
    fn empty_and_small_products() {
        let c = QContext::symbolic(1).unwrap();
        let q = c.q();
        assert_eq!(qpoch(&q, &q, 0).unwrap(), RationalFn::one());
        let two = qpoch(&q, &q, 2).unwrap();
        let expect = RationalFn::from_int_coeffs(&[1, -1]) * RationalFn::from_int_coeffs(&[1, 0, -1]);
        assert_eq!(two, expect);
    }

    #[test]
    fn negative_index_inverts() {
        // (a;q)_{-k} (a q^{-k}; q)_k = 1
        let a = rat(3, 7);
        let q = rat(1, 2);
        for k in 1..5 {
            let lhs = qpoch(&a, &q, -k).unwrap();
            let shifted = a.clone() * q.powi(-k).unwrap();
            assert_eq!(lhs * qpoch(&shifted, &q, k).unwrap(), int(1));
        }
    }

    #[test]
    fn q_binomial_theorem_terminating() {
        // 1φ0[q^{-n};—;q,z] = (z q^{-n}; q)_n
        let q = rat(2, 5);
        let z = rat(3, 4);
        for n in 0..5i64 {
            let qn = q.powi(-n).unwrap();
            let lhs = phi(std::slice::from_ref(&qn), &[], &q, &z, n as usize + 1).unwrap();
            // need the missing lower parameter: 1φ0 has (p;p)_k only
            let rhs = qpoch(&(z.clone() * &qn), &q, n).unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn chu_vandermonde() {
        // 2F1[-n, b; c; 1] = (c-b)_n/(c)_n
        let b = rat(1, 3);
        let c = rat(5, 2);
        for n in 0..6u64 {
            let lhs = hyp_f(&[int(-(n as i64)), b.clone()], std::slice::from_ref(&c), &int(1)).unwrap();
            assert_eq!(lhs, poch(&(&c - &b), n) / poch(&c, n));
        }
    }
}
