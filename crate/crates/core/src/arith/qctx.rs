use num_rational::BigRational;

use super::{Field, Gaussian, RationalFn};
use crate::error::{Error, Result};

/// The variable `s` together with the root order `r`, so that `q = s^r`,
/// `q^{1/2} = s^{r/2}` (r even) and `q^{1/4} = s^{r/4}` (r = 4).
#[derive(Clone, Debug, PartialEq)]
pub struct QContext<F> {
    root_order: u32,
    s: F,
}

impl<F: Field> QContext<F> {
    pub fn new(s: F, root_order: u32) -> Result<Self> {
        if !matches!(root_order, 1 | 2 | 4) {
            return Err(Error::RootOrder(root_order));
        }
        if s.is_zero() {
            return Err(Error::InvalidArgument("s must be nonzero".into()));
        }
        Ok(QContext { root_order, s })
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn s(&self) -> &F {
        &self.s
    }

    pub fn q(&self) -> F {
        self.q_pow(1)
    }

    /// `q^k` for integer `k`.
    pub fn q_pow(&self, k: i64) -> F {
        self.s.powi(k * self.root_order as i64).expect("s is nonzero")
    }

    /// `q^{num/den}`, provided it is an integer power of `s`.
    pub fn q_frac(&self, num: i64, den: i64) -> Result<F> {
        assert!(den > 0);
        let e = num * self.root_order as i64;
        if e % den != 0 {
            return Err(Error::FractionalPower { num, den, root_order: self.root_order });
        }
        self.s.powi(e / den)
    }

    /// Require that `q^{1/den}` be representable.
    pub fn require_root(&self, den: u32) -> Result<()> {
        if !self.root_order.is_multiple_of(den) {
            return Err(Error::FractionalPower { num: 1, den: den as i64, root_order: self.root_order });
        }
        Ok(())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> QContext<G> {
        QContext { root_order: self.root_order, s: f(&self.s) }
    }

    pub fn gaussian(&self) -> QContext<Gaussian<F>> {
        self.map(|s| Gaussian::real(s.clone()))
    }
}

impl QContext<RationalFn> {
    /// Symbolic context: `s` is the formal variable.
    pub fn symbolic(root_order: u32) -> Result<Self> {
        Self::new(RationalFn::s(), root_order)
    }
}

impl QContext<BigRational> {
    /// Numeric context at the sample point `s = s0`.
    pub fn numeric(s0: BigRational, root_order: u32) -> Result<Self> {
        Self::new(s0, root_order)
    }
}
