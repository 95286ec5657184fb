use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::{pow_rat, LaurentPoly};
use super::zpoly::{gcd_cofactors, ZPoly};
use super::Field;
use crate::error::{Error, Result};

/// An element of ℚ(s), kept in lowest terms.
///
/// Stored as `scale · s^shift · num(s) / den(s)` where `num` and `den` are
/// coprime primitive integer polynomials with positive constant terms. Every
/// element has exactly one such representation, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    scale: BigRational,
    shift: i64,
    num: ZPoly,
    den: ZPoly,
}

fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

impl RationalFn {
    /// The formal variable `s`.
    pub fn s() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RationalFn { scale: c, shift: e, num: ZPoly::one(), den: ZPoly::one() }
    }

    /// `Σ coeffs[i] s^i`.
    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        let v: Vec<i128> = coeffs.iter().map(|c| *c as i128).collect();
        reduce(BigRational::one(), 0, ZPoly::small(v), ZPoly::one())
    }

    pub fn from_laurent(p: &LaurentPoly) -> Self {
        let (scale, shift, z) = laurent_to_z(p);
        reduce(scale, shift, z, ZPoly::one())
    }

    pub fn from_parts(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (sn, en, zn) = laurent_to_z(num);
        let (sd, ed, zd) = laurent_to_z(den);
        if zn.is_zero() {
            return Ok(Self::zero());
        }
        Ok(reduce(sn / sd, en - ed, zn, zd))
    }

    /// Numerator as a Laurent polynomial, paired with [`Self::den`].
    pub fn num(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let c = &self.scale / BigRational::from_integer(self.den.coeff(0));
        z_to_laurent(&self.num, self.shift).scale(&c)
    }

    /// Denominator, normalized so its lowest-order coefficient is 1.
    pub fn den(&self) -> LaurentPoly {
        let c0 = BigRational::from_integer(self.den.coeff(0));
        z_to_laurent(&self.den, 0).scale(&c0.recip())
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one() && self.shift >= 0
    }

    /// The value as a Laurent polynomial when the denominator is trivial.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            Some(self.num())
        } else {
            None
        }
    }

    /// Constant value, if this element lies in ℚ.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            return Some(BigRational::zero());
        }
        if self.shift == 0 && self.num.is_one() && self.den.is_one() {
            Some(self.scale.clone())
        } else {
            None
        }
    }

    /// Degrees of numerator and denominator polynomials (excluding `s^shift`).
    pub fn degrees(&self) -> (usize, usize) {
        (self.num.deg(), self.den.deg())
    }

    pub fn eval(&self, s0: &BigRational) -> Result<BigRational> {
        if self.is_zero() {
            return Ok(BigRational::zero());
        }
        let (u, v) = (s0.numer(), s0.denom());
        let (dn, vd) = self.den.eval_frac(u, v);
        if dn.is_zero() {
            return Err(Error::Pole(s0.to_string()));
        }
        if s0.is_zero() && self.shift < 0 {
            return Err(Error::Pole(s0.to_string()));
        }
        let (nn, vn) = self.num.eval_frac(u, v);
        let frac = BigRational::new(nn * vd, dn * vn);
        Ok(&self.scale * pow_rat(s0, self.shift) * frac)
    }

    /// Value at `s = 1` (that is, `q → 1` for every root order).
    pub fn limit_at_one(&self) -> Result<BigRational> {
        self.eval(&BigRational::one()).map_err(|_| Error::SingularAtOne)
    }

    /// Power-series expansion at `s = 0`, truncated after `s^n`.
    pub fn series(&self, n: i64) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if self.shift < 0 {
            return Err(Error::NoSeriesAtZero);
        }
        let len = n - self.shift + 1;
        if len <= 0 {
            return Ok(LaurentPoly::zero());
        }
        let len = len as usize;
        let num: Vec<BigRational> =
            (0..len).map(|i| BigRational::from_integer(self.num.coeff(i))).collect();
        let den: Vec<BigRational> = (0..=self.den.deg().min(len))
            .map(|i| BigRational::from_integer(self.den.coeff(i)))
            .collect();
        let d0 = den[0].clone();
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        for k in 0..len {
            let mut acc = num[k].clone();
            for (j, dj) in den.iter().enumerate().skip(1) {
                if j > k {
                    break;
                }
                if !dj.is_zero() {
                    acc -= dj * &out[k - j];
                }
            }
            out.push(acc / &d0);
        }
        Ok(LaurentPoly::from_terms(
            out.into_iter()
                .enumerate()
                .map(|(i, c)| (i as i64 + self.shift, c * &self.scale)),
        ))
    }

    /// Substitute `s ↦ s^k` for `k ≥ 1`.
    pub fn inflate(&self, k: u32) -> Self {
        assert!(k >= 1);
        if k == 1 || self.is_zero() {
            return self.clone();
        }
        RationalFn {
            scale: self.scale.clone(),
            shift: self.shift * k as i64,
            num: inflate_z(&self.num, k as usize),
            den: inflate_z(&self.den, k as usize),
        }
    }

    /// Inverse of [`inflate`](Self::inflate): write `f(s) = g(s^k)` and return
    /// `g`, or `None` if `f` is not a function of `s^k`.
    pub fn deflate(&self, k: u32) -> Option<Self> {
        assert!(k >= 1);
        if k == 1 || self.is_zero() {
            return Some(self.clone());
        }
        if self.shift % k as i64 != 0 {
            return None;
        }
        Some(RationalFn {
            scale: self.scale.clone(),
            shift: self.shift / k as i64,
            num: deflate_z(&self.num, k as usize)?,
            den: deflate_z(&self.den, k as usize)?,
        })
    }

    /// Formal derivative with respect to `s`.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        // f = c s^e N/D,  f' = c s^(e-1) (e N D + s (N' D - N D')) / D^2
        let e = BigInt::from(self.shift);
        let n = &self.num;
        let d = &self.den;
        let t1 = n.mul(d).scale(&e);
        let t2 = deriv_z(n).mul(d).sub(&n.mul(&deriv_z(d))).shift_up(1);
        let top = t1.add(&t2);
        reduce(self.scale.clone(), self.shift - 1, top, d.mul(d))
    }

    fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let scale = &self.scale * &o.scale;
        let shift = self.shift + o.shift;
        let (_, n1, d2) = cancel(&self.num, &o.den);
        let (_, n2, d1) = cancel(&o.num, &self.den);
        RationalFn { scale, shift, num: n1.mul(&n2), den: d1.mul(&d2) }
    }

    fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.shift.min(o.shift);
        let l = lcm_big(self.scale.denom(), o.scale.denom());
        let ix = self.scale.numer() * (&l / self.scale.denom());
        let iy = o.scale.numer() * (&l / o.scale.denom());
        let xa = self.num.shift_up((self.shift - e) as usize).scale(&ix);
        let yc = o.num.shift_up((o.shift - e) as usize).scale(&iy);
        let inv_l = BigRational::new(BigInt::one(), l);
        if self.den == o.den {
            let t = xa.add(&yc);
            return reduce(inv_l, e, t, self.den.clone());
        }
        if self.den.is_one() {
            let t = xa.mul(&o.den).add(&yc);
            return finish_coprime(inv_l, e, t, o.den.clone());
        }
        if o.den.is_one() {
            let t = xa.add(&yc.mul(&self.den));
            return finish_coprime(inv_l, e, t, self.den.clone());
        }
        let (g, bq, dq) = gcd_cofactors(&self.den, &o.den);
        let t = xa.mul(&dq).add(&yc.mul(&bq));
        if t.is_zero() {
            return Self::zero();
        }
        if g.is_one() {
            return finish_coprime(inv_l, e, t, bq.mul(&dq));
        }
        let k = t.low_zeros();
        let t = t.drop_low(k);
        let (c, tp) = t.primitive();
        let (_, tq, gq) = gcd_cofactors(&tp, &g);
        RationalFn {
            scale: inv_l * BigRational::from_integer(c),
            shift: e + k as i64,
            num: tq,
            den: gq.mul(&bq).mul(&dq),
        }
    }
}

fn cancel(a: &ZPoly, b: &ZPoly) -> (ZPoly, ZPoly, ZPoly) {
    if a.is_one() || b.is_one() {
        return (ZPoly::one(), a.clone(), b.clone());
    }
    gcd_cofactors(a, b)
}

/// Build from a numerator already known to be coprime to `den`.
fn finish_coprime(scale: BigRational, shift: i64, t: ZPoly, den: ZPoly) -> RationalFn {
    if t.is_zero() {
        return RationalFn::zero();
    }
    let k = t.low_zeros();
    let t = t.drop_low(k);
    let (c, tp) = t.primitive();
    RationalFn { scale: scale * BigRational::from_integer(c), shift: shift + k as i64, num: tp, den }
}

/// Canonicalize `scale · s^shift · n / d` for arbitrary integer polynomials.
fn reduce(scale: BigRational, shift: i64, n: ZPoly, d: ZPoly) -> RationalFn {
    if n.is_zero() || scale.is_zero() {
        return RationalFn::zero();
    }
    assert!(!d.is_zero(), "zero denominator");
    let kn = n.low_zeros();
    let kd = d.low_zeros();
    let (cn, n) = n.drop_low(kn).primitive();
    let (cd, d) = d.drop_low(kd).primitive();
    let scale = scale * BigRational::new(cn, cd);
    let (_, n, d) = cancel(&n, &d);
    RationalFn { scale, shift: shift + kn as i64 - kd as i64, num: n, den: d }
}

fn laurent_to_z(p: &LaurentPoly) -> (BigRational, i64, ZPoly) {
    let Some(e0) = p.min_exp() else {
        return (BigRational::zero(), 0, ZPoly::zero());
    };
    let mut l = BigInt::one();
    for (_, c) in p.terms() {
        l = l.lcm(c.denom());
    }
    let len = (p.max_exp().unwrap() - e0 + 1) as usize;
    let mut v = vec![BigInt::zero(); len];
    for (e, c) in p.terms() {
        v[(e - e0) as usize] = c.numer() * (&l / c.denom());
    }
    (BigRational::new(BigInt::one(), l), e0, ZPoly::from_big(v))
}

fn z_to_laurent(z: &ZPoly, shift: i64) -> LaurentPoly {
    LaurentPoly::from_terms(
        z.to_big()
            .into_iter()
            .enumerate()
            .map(|(i, c)| (i as i64 + shift, BigRational::from_integer(c))),
    )
}

fn inflate_z(z: &ZPoly, k: usize) -> ZPoly {
    let v = z.to_big();
    let mut out = vec![BigInt::zero(); (v.len() - 1) * k + 1];
    for (i, c) in v.into_iter().enumerate() {
        out[i * k] = c;
    }
    ZPoly::from_big(out)
}

fn deflate_z(z: &ZPoly, k: usize) -> Option<ZPoly> {
    let v = z.to_big();
    if v.iter().enumerate().any(|(i, c)| i % k != 0 && !c.is_zero()) {
        return None;
    }
    Some(ZPoly::from_big(v.into_iter().step_by(k).collect()))
}

fn deriv_z(z: &ZPoly) -> ZPoly {
    let v = z.to_big();
    ZPoly::from_big(v.into_iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
}

impl Zero for RationalFn {
    fn zero() -> Self {
        RationalFn { scale: BigRational::zero(), shift: 0, num: ZPoly::one(), den: ZPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.scale.is_zero()
    }
}

impl One for RationalFn {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl Neg for RationalFn {
    type Output = Self;
    fn neg(mut self) -> Self {
        self.scale = -self.scale;
        self
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -self.clone()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a> $tr<&'a RationalFn> for &'a RationalFn {
            type Output = RationalFn;
            fn $m(self, o: &'a RationalFn) -> RationalFn {
                $body(self, o)
            }
        }
        impl<'a> $tr<&'a RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $m(self, o: &'a RationalFn) -> RationalFn {
                $body(&self, o)
            }
        }
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $m(self, o: RationalFn) -> RationalFn {
                $body(&self, &o)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RationalFn, b: &RationalFn| a.add_ref(b));
forward_binop!(Sub, sub, |a: &RationalFn, b: &RationalFn| a.add_ref(&-b));
forward_binop!(Mul, mul, |a: &RationalFn, b: &RationalFn| a.mul_ref(b));

impl Field for RationalFn {
    fn from_rational(r: &BigRational) -> Self {
        Self::constant(r.clone())
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(RationalFn {
            scale: self.scale.recip(),
            shift: -self.shift,
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    fn powi(&self, e: i64) -> Result<Self> {
        if self.num.is_one() && self.den.is_one() {
            if self.is_zero() {
                return if e > 0 {
                    Ok(Self::zero())
                } else if e == 0 {
                    Ok(Self::one())
                } else {
                    Err(Error::DivisionByZero)
                };
            }
            return Ok(RationalFn {
                scale: pow_rat(&self.scale, e),
                shift: self.shift * e,
                num: ZPoly::one(),
                den: ZPoly::one(),
            });
        }
        if e < 0 {
            return self.inv()?.powi(-e);
        }
        // Coprime inputs stay coprime under powers; no gcd needed.
        let mut n = ZPoly::one();
        let mut d = ZPoly::one();
        for _ in 0..e {
            n = n.mul(&self.num);
            d = d.mul(&self.den);
        }
        Ok(RationalFn { scale: pow_rat(&self.scale, e), shift: self.shift * e, num: n, den: d })
    }

    fn sum_products<'a, I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Vec<&'a Self>)>,
    {
        // Multiply each term out without cancelling, bring everything over the
        // lcm of the denominators, and reduce once at the end.
        struct Raw {
            c: BigRational,
            shift: i64,
            num: ZPoly,
            den: usize,
        }
        let mut dens: Vec<ZPoly> = Vec::new();
        let mut index: HashMap<ZPoly, usize> = HashMap::new();
        let mut raws: Vec<Raw> = Vec::new();
        'terms: for (k, fs) in terms {
            if k == 0 {
                continue;
            }
            let mut c = BigRational::from_integer(k.into());
            let mut shift = 0;
            let mut num = ZPoly::one();
            let mut den = ZPoly::one();
            for f in fs {
                if f.is_zero() {
                    continue 'terms;
                }
                c *= &f.scale;
                shift += f.shift;
                num = num.mul(&f.num);
                den = den.mul(&f.den);
            }
            let idx = match index.get(&den) {
                Some(i) => *i,
                None => {
                    index.insert(den.clone(), dens.len());
                    dens.push(den);
                    dens.len() - 1
                }
            };
            raws.push(Raw { c, shift, num, den: idx });
        }
        if raws.is_empty() {
            return Self::zero();
        }
        if raws.len() == 1 {
            let r = raws.pop().unwrap();
            return reduce(r.c, r.shift, r.num, dens.swap_remove(r.den));
        }
        let mut big_d = dens[0].clone();
        for d in &dens[1..] {
            let (_, _, dq) = gcd_cofactors(&big_d, d);
            if !dq.is_one() {
                big_d = big_d.mul(&dq);
            }
        }
        let e0 = raws.iter().map(|r| r.shift).min().unwrap();
        let mut l = BigInt::one();
        for r in &raws {
            l = l.lcm(r.c.denom());
        }
        let mut grouped: Vec<ZPoly> = vec![ZPoly::zero(); dens.len()];
        for r in &raws {
            let ic = r.c.numer() * (&l / r.c.denom());
            let t = r.num.shift_up((r.shift - e0) as usize).scale(&ic);
            grouped[r.den] = grouped[r.den].add(&t);
        }
        let mut total = ZPoly::zero();
        for (idx, g) in grouped.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let cof = big_d.div_exact(&dens[idx]).expect("lcm is a multiple of each denominator");
            total = total.add(&g.mul(&cof));
        }
        reduce(BigRational::new(BigInt::one(), l), e0, total, big_d)
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({})/({})", self.num(), self.den())
        }
    }
}

impl RationalFn {
    /// Render in the user variable `q = s^r`.
    pub fn display_q(&self, root_order: u32) -> String {
        let n = self.num().display_q(root_order);
        if self.den.is_one() {
            n
        } else {
            format!("({})/({})", n, self.den().display_q(root_order))
        }
    }

    /// True when the numerator, written over the normalized denominator, has
    /// only nonnegative coefficients.
    pub fn has_nonnegative_num(&self) -> bool {
        self.num().terms().all(|(_, c)| !c.is_negative())
    }
}
