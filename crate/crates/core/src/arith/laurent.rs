use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Finite Laurent polynomial `Σ c_e s^e` over ℚ; zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigRational::one(), 0)
    }

    pub fn monomial(c: BigRational, e: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, BigRational)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(
            coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (e as i64, BigRational::from_integer((*c).into()))),
        )
    }

    pub fn add_term(&mut self, e: i64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, e: i64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Substitute `s ↦ s^k`.
    pub fn inflate(&self, k: i64) -> Self {
        assert!(k > 0);
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (e * k, c.clone())).collect() }
    }

    pub fn eval(&self, s: &BigRational) -> Result<BigRational> {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            if *e < 0 && s.is_zero() {
                return Err(Error::Pole("0".into()));
            }
            acc += c * pow_rat(s, *e);
        }
        Ok(acc)
    }

    /// Drop all terms of exponent greater than `n`.
    pub fn truncate(&self, n: i64) -> Self {
        LaurentPoly { terms: self.terms.range(..=n).map(|(e, c)| (*e, c.clone())).collect() }
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Integer coefficient list `c_0, c_1, …, c_max` for a polynomial with
    /// nonnegative exponents and integer coefficients.
    pub fn to_int_coeffs(&self) -> Option<Vec<BigInt>> {
        if self.min_exp().is_some_and(|e| e < 0) || !self.is_integral() {
            return None;
        }
        let len = self.max_exp().map(|e| e as usize + 1).unwrap_or(0);
        let mut v = vec![BigInt::zero(); len];
        for (e, c) in &self.terms {
            v[*e as usize] = c.to_integer();
        }
        Some(v)
    }

    /// Render in the user variable `q = s^r`: ascending powers, `q^(k/r)` for
    /// fractional exponents.
    pub fn display_q(&self, root_order: u32) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let r = root_order as i64;
        let mut out = String::new();
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let var = q_power(*e, r);
            match var {
                None => out.push_str(&mag.to_string()),
                Some(v) => {
                    if mag.is_one() {
                        out.push_str(&v);
                    } else {
                        out.push_str(&format!("{}*{}", mag, v));
                    }
                }
            }
        }
        out
    }
}

fn q_power(e: i64, r: i64) -> Option<String> {
    if e == 0 {
        return None;
    }
    let g = num_integer::gcd(e, r);
    let (num, den) = (e / g, r / g);
    Some(match (num, den) {
        (1, 1) => "q".to_string(),
        (k, 1) if k > 0 => format!("q^{}", k),
        (k, 1) => format!("q^({})", k),
        (k, d) => format!("q^({}/{})", k, d),
    })
}

pub(crate) fn pow_rat(s: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num_traits::pow(s.clone(), e as usize)
    } else {
        num_traits::pow(s.recip(), (-e) as usize)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            match *e {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if *e == 1 {
                        write!(f, "s")?;
                    } else if *e > 0 {
                        write!(f, "s^{}", e)?;
                    } else {
                        write!(f, "s^({})", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}
