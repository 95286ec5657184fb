use crate::arith::{Field, LaurentPoly, QContext};
use crate::error::{Error, Result};

/// Evaluation points `x_1, …, x_m`, optionally with square roots `w_i`,
/// `w_i² = x_i` (any branch; every identity here is branch-covariant).
#[derive(Clone, Debug, PartialEq)]
pub struct PointSet<F> {
    xs: Vec<F>,
    roots: Option<Vec<F>>,
}

impl<F: Field> PointSet<F> {
    pub fn new(xs: Vec<F>) -> Self {
        PointSet { xs, roots: None }
    }

    /// Points given through their square roots: `x_i := w_i²`.
    pub fn from_roots(roots: Vec<F>) -> Self {
        let xs = roots.iter().map(|w| w.square()).collect();
        PointSet { xs, roots: Some(roots) }
    }

    /// Points with caller-supplied witnesses, checked exactly.
    pub fn with_witnesses(xs: Vec<F>, roots: Vec<F>) -> Result<Self> {
        if xs.len() != roots.len() {
            return Err(Error::Dimension(format!("{} points but {} witnesses", xs.len(), roots.len())));
        }
        for (i, (x, w)) in xs.iter().zip(&roots).enumerate() {
            if w.square() != *x {
                return Err(Error::BadWitness { index: i });
            }
        }
        Ok(PointSet { xs, roots: Some(roots) })
    }

    /// `x_i = q^{e_i/den}`; square roots `q^{e_i/(2 den)}` are attached when
    /// the root order allows it.
    pub fn monomials(exps: &[i64], den: i64, ctx: &QContext<F>) -> Result<Self> {
        let xs = exps.iter().map(|&e| ctx.q_frac(e, den)).collect::<Result<Vec<_>>>()?;
        let roots = exps.iter().map(|&e| ctx.q_frac(e, 2 * den)).collect::<Result<Vec<_>>>().ok();
        Ok(PointSet { xs, roots })
    }

    pub fn xs(&self) -> &[F] {
        &self.xs
    }

    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn has_roots(&self) -> bool {
        self.roots.is_some()
    }

    pub fn roots(&self) -> Result<&[F]> {
        self.roots.as_deref().ok_or(Error::MissingWitness)
    }

    /// Swap two points (and their witnesses).
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut out = self.clone();
        out.xs.swap(i, j);
        if let Some(r) = out.roots.as_mut() {
            r.swap(i, j);
        }
        out
    }

    /// Append a point without a witness; drops all witnesses.
    pub fn push_plain(&self, x: F) -> Self {
        let mut xs = self.xs.clone();
        xs.push(x);
        PointSet { xs, roots: None }
    }
}

/// `Σ c_e q^e` as a field element.
pub fn laurent_in_q<F: Field>(p: &LaurentPoly, ctx: &QContext<F>) -> F {
    let mut acc = F::zero();
    for (e, c) in p.terms() {
        acc = acc + F::from_rational(c) * &ctx.q_pow(e);
    }
    acc
}

pub(crate) fn binom2(m: i64) -> i64 {
    m * (m - 1) / 2
}

pub(crate) fn binom3(m: i64) -> i64 {
    m * (m - 1) * (m - 2) / 6
}

/// Every `k ∈ {0, …, max}^m` in lexicographic order.
pub(crate) fn index_tuples(m: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; m];
    loop {
        out.push(cur.clone());
        let mut pos = m;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] <= max {
                break;
            }
            cur[pos] = 0;
        }
    }
}

/// `Π_{i<j} (1 − x_i x_j)`, or an error naming a vanishing factor.
pub(crate) fn one_minus_products<F: Field>(xs: &[F]) -> Result<F> {
    let mut acc = F::one();
    for i in 0..xs.len() {
        for j in i + 1..xs.len() {
            let f = F::one() - xs[i].clone() * &xs[j];
            if f.is_zero() {
                return Err(Error::Singular(i, j, "x_i x_j = 1".into()));
            }
            acc = acc * f;
        }
    }
    Ok(acc)
}

pub(crate) fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}
