//! Exact scalars: big rationals, Laurent polynomials and rational functions
//! in the formal variable `s`, and the `q = s^r` context.

mod laurent;
mod qctx;
mod ratfn;
pub mod serial;
pub(crate) mod zpoly;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use laurent::LaurentPoly;
pub use qctx::QContext;
pub use ratfn::RationalFn;

/// A commutative field with exact arithmetic.
///
/// Formulas in this crate are written once against this trait and then run
/// over `BigRational` (numeric sampling), `RationalFn` (symbolic in `s`) or
/// `Gaussian<_>` (where a formula needs `i`).
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + 'static
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(&BigRational::new(n.into(), d.into()))
    }

    fn inv(&self) -> Result<Self>;

    fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self.clone() * &other.inv()?)
    }

    fn powi(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.powi(-e);
        }
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        Ok(acc)
    }

    /// `Σ_t c_t Π_f factor` over a stream of `(c_t, factors)` terms.
    ///
    /// Fields with expensive normalization override this to defer reduction
    /// to the end.
    fn sum_products<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Vec<&'a Self>)>,
        Self: 'a,
    {
        let mut acc = Self::zero();
        for (c, fs) in terms {
            if c == 0 {
                continue;
            }
            let mut t = Self::from_i64(c);
            for f in fs {
                t = t * f;
            }
            acc = acc + t;
        }
        acc
    }

    fn product(factors: &[&Self]) -> Self {
        Self::sum_products(std::iter::once((1, factors.to_vec())))
    }

    fn square(&self) -> Self {
        self.clone() * self
    }
}

impl Field for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `a + b·i` over a formally real field, so `a² + b² = 0` only at zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Gaussian<F> {
    pub re: F,
    pub im: F,
}

impl<F: Field> Gaussian<F> {
    pub fn new(re: F, im: F) -> Self {
        Gaussian { re, im }
    }

    pub fn real(re: F) -> Self {
        Gaussian { re, im: F::zero() }
    }

    pub fn i() -> Self {
        Gaussian { re: F::zero(), im: F::one() }
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    /// The real part, provided the imaginary part vanishes.
    pub fn into_real(self) -> Result<F> {
        if self.im.is_zero() {
            Ok(self.re)
        } else {
            Err(Error::Invariant("expected a real value".into()))
        }
    }
}

impl<F: Field> Zero for Gaussian<F> {
    fn zero() -> Self {
        Gaussian::real(F::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl<F: Field> One for Gaussian<F> {
    fn one() -> Self {
        Gaussian::real(F::one())
    }
}

impl<F: Field> Neg for Gaussian<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Gaussian { re: -self.re, im: -self.im }
    }
}

impl<'a, F: Field> Add<&'a Gaussian<F>> for Gaussian<F> {
    type Output = Self;
    fn add(self, o: &'a Self) -> Self {
        Gaussian { re: self.re + &o.re, im: self.im + &o.im }
    }
}

impl<'a, F: Field> Sub<&'a Gaussian<F>> for Gaussian<F> {
    type Output = Self;
    fn sub(self, o: &'a Self) -> Self {
        Gaussian { re: self.re - &o.re, im: self.im - &o.im }
    }
}

impl<'a, F: Field> Mul<&'a Gaussian<F>> for Gaussian<F> {
    type Output = Self;
    fn mul(self, o: &'a Self) -> Self {
        let re = self.re.clone() * &o.re - self.im.clone() * &o.im;
        let im = self.re * &o.im + self.im * &o.re;
        Gaussian { re, im }
    }
}

impl<F: Field> Add for Gaussian<F> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}

impl<F: Field> Sub for Gaussian<F> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self - &o
    }
}

impl<F: Field> Mul for Gaussian<F> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl<F: Field> Field for Gaussian<F> {
    fn from_rational(r: &BigRational) -> Self {
        Gaussian::real(F::from_rational(r))
    }

    fn inv(&self) -> Result<Self> {
        let norm = self.re.square() + self.im.square();
        let ni = norm.inv()?;
        Ok(Gaussian { re: self.re.clone() * &ni, im: -(self.im.clone() * &ni) })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_inverse() {
        let z = Gaussian::new(int(3), int(4));
        let w = z.inv().unwrap();
        assert_eq!(w, Gaussian::new(rat(3, 25), rat(-4, 25)));
        assert_eq!(z * &w, Gaussian::one());
        assert!(Gaussian::<BigRational>::zero().inv().is_err());
    }

    #[test]
    fn powi_negative() {
        assert_eq!(rat(2, 3).powi(-3).unwrap(), rat(27, 8));
        assert_eq!(rat(2, 3).powi(0).unwrap(), int(1));
    }

    #[test]
    fn i_squared() {
        let i = Gaussian::<BigRational>::i();
        assert_eq!(i.clone() * &i, -Gaussian::one());
    }
}
