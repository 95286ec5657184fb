use crate::arith::{Field, QContext};
use crate::error::{Error, Result};
use crate::qseries::{c_monic, c_norm, classical_norm, classical_pk, horner};

/// A finite table of monic orthogonal polynomials `p_0, …, p_d` with their
/// norms `‖p_k‖²`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthoSystem<F> {
    coeffs: Vec<Vec<F>>,
    norms: Vec<F>,
    even: bool,
}

impl<F: Field> OrthoSystem<F> {
    /// Build from explicit data; `even` records that all odd moments of the
    /// underlying functional vanish.
    pub fn from_parts(coeffs: Vec<Vec<F>>, norms: Vec<F>, even: bool) -> Result<Self> {
        if coeffs.len() != norms.len() {
            return Err(Error::Dimension(format!("{} polynomials but {} norms", coeffs.len(), norms.len())));
        }
        for (k, c) in coeffs.iter().enumerate() {
            if c.len() != k + 1 || !c[k].is_one() {
                return Err(Error::InvalidArgument(format!("p_{k} is not monic of degree {k}")));
            }
            if norms[k].is_zero() {
                return Err(Error::InvalidArgument(format!("‖p_{k}‖² vanishes")));
            }
        }
        Ok(OrthoSystem { coeffs, norms, even })
    }

    /// The monic continuous q-ultraspherical polynomials `c_0, …, c_d`.
    pub fn ultraspherical(max_degree: usize, ctx: &QContext<F>) -> Result<Self> {
        let coeffs = (0..=max_degree).map(|k| c_monic(k, ctx)).collect::<Result<Vec<_>>>()?;
        let norms = (0..=max_degree).map(|k| c_norm(k, ctx)).collect::<Result<Vec<_>>>()?;
        Self::from_parts(coeffs, norms, true)
    }

    /// The continuous dual Hahn family `p_k^{(ε)}` (the `q → 1` limits).
    pub fn classical(max_degree: usize, eps: u8) -> Result<Self> {
        let mut coeffs = Vec::new();
        for k in 0..=max_degree {
            let p = classical_pk(k, eps);
            coeffs.push((0..=k as i64).map(|e| F::from_rational(&p.coeff(e))).collect());
        }
        let norms = (0..=max_degree).map(|k| F::from_rational(&classical_norm(k, eps))).collect();
        Self::from_parts(coeffs, norms, false)
    }

    pub fn max_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn has_vanishing_odd_moments(&self) -> bool {
        self.even
    }

    pub fn coeffs(&self, k: usize) -> Result<&[F]> {
        self.coeffs
            .get(k)
            .map(|c| c.as_slice())
            .ok_or_else(|| Error::InvalidArgument(format!("degree {k} beyond the table (max {})", self.max_degree())))
    }

    pub fn p(&self, k: usize, x: &F) -> Result<F> {
        Ok(horner(self.coeffs(k)?, x))
    }

    pub fn norm(&self, k: usize) -> Result<&F> {
        self.norms
            .get(k)
            .ok_or_else(|| Error::InvalidArgument(format!("degree {k} beyond the table (max {})", self.max_degree())))
    }

    /// The same system over a larger field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> OrthoSystem<G> {
        OrthoSystem {
            coeffs: self.coeffs.iter().map(|c| c.iter().map(&f).collect()).collect(),
            norms: self.norms.iter().map(&f).collect(),
            even: self.even,
        }
    }
}
