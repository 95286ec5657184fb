//! The method catalog and the grid runner that compares every method with
//! the tableau generating function.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;

use crate::arith::{int, LaurentPoly, QContext, RationalFn};
use crate::error::{Error, Result};
use crate::formulas::{
    hyperoctahedral_check, nimmo_q, p_api, p_determinant, p_multisum, p_nimmo, p_pfaffian, p_rce, p_schur_expansion,
    p_theorem_dft, p_theorem_ot, p_theorem_th, p_two_row_cd, q_det_formula, q_direct, DftForm, PointSet,
};
use crate::kernels::appendix_p;
use crate::tableaux::{gf_marked, StrictPartition};

/// A way of computing `Q_λ(1, q, …, q^n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    /// Marked shifted tableaux (the oracle).
    Tableaux,
    Multisum,
    Pfaffian,
    Determinant,
    Th,
    Ot,
    Dft(DftForm),
    Nimmo,
    Appendix,
    SchurExpansion,
    Api,
    Rce,
    TwoRowCd,
    QDet,
    Direct,
    NimmoQ,
}

impl Method {
    /// The methods of the grand crosscheck, oracle first.
    pub fn grand() -> Vec<Method> {
        let mut v = vec![Method::Tableaux, Method::Multisum, Method::Pfaffian, Method::Determinant, Method::Th, Method::Ot];
        v.extend(DftForm::ALL.into_iter().map(Method::Dft));
        v.extend([Method::Nimmo, Method::Appendix]);
        v
    }

    /// Everything in the catalog.
    pub fn all() -> Vec<Method> {
        let mut v = Self::grand();
        v.extend([
            Method::SchurExpansion,
            Method::Api,
            Method::Rce,
            Method::TwoRowCd,
            Method::QDet,
            Method::Direct,
            Method::NimmoQ,
        ]);
        v
    }

    /// Root order of `s` needed by the method (`q = s^r`).
    pub fn root_order(self) -> u32 {
        match self {
            Method::Th | Method::Api | Method::Rce => 2,
            Method::Dft(f) => f.root_order(),
            _ => 1,
        }
    }

    /// Whether the method is defined for `m = ℓ(λ)` points and this `n`.
    pub fn applies(self, m: usize, n: usize) -> bool {
        match self {
            Method::Dft(f) => DftForm::applicable(n, m).contains(&f),
            Method::Api => m.is_multiple_of(2),
            Method::Rce | Method::TwoRowCd => m == 2,
            Method::Appendix => m <= 3,
            Method::Nimmo | Method::NimmoQ => n < 8,
            _ => true,
        }
    }

    /// `Q_λ(1, q, …, q^n)` as a polynomial in `q`.
    pub fn evaluate(self, lambda: &StrictPartition, n: usize) -> Result<LaurentPoly> {
        let m = lambda.len();
        if !self.applies(m, n) {
            return Err(Error::InvalidArgument(format!("method {self} does not apply to {lambda} with n = {n}")));
        }
        if self == Method::Tableaux {
            return Ok(gf_marked(lambda, n + 1));
        }
        if m > n + 1 {
            return Ok(LaurentPoly::zero());
        }
        let r = self.root_order();
        let ctx = QContext::<RationalFn>::symbolic(r)?;
        let pts = PointSet::monomials(&lambda.as_exponents(), 1, &ctx)?;
        let xs = pts.xs();
        let geometric = || (0..=n as i64).map(|k| ctx.q_pow(k)).collect::<Vec<_>>();
        let scale_p = |v: RationalFn| v * &RationalFn::constant(int(1 << m));
        let v = match self {
            Method::Tableaux => unreachable!(),
            Method::Multisum => scale_p(p_multisum(xs, n, &ctx)?),
            Method::Pfaffian => scale_p(p_pfaffian(xs, n, &ctx)?),
            Method::Determinant => scale_p(p_determinant(xs, n, &ctx)?),
            Method::Th => scale_p(p_theorem_th(&pts, n, &ctx)?),
            Method::Ot => scale_p(p_theorem_ot(xs, n, &ctx)?),
            Method::Dft(f) => scale_p(p_theorem_dft(xs, n, f, &ctx)?),
            Method::Nimmo => scale_p(p_nimmo(xs, n, &ctx)?),
            Method::Appendix => scale_p(appendix_p(xs, n, &ctx)?),
            Method::SchurExpansion => scale_p(p_schur_expansion(xs, n, &ctx)?),
            Method::Api => scale_p(p_api(&pts, n, &ctx)?),
            Method::Rce => scale_p(p_rce(&pts, n, &ctx)?),
            Method::TwoRowCd => scale_p(p_two_row_cd(&xs[0], &xs[1], n, &ctx)?),
            Method::QDet => q_det_formula(lambda, n, &ctx)?,
            Method::Direct => q_direct(lambda.parts(), &geometric())?,
            Method::NimmoQ => nimmo_q(lambda.parts(), &geometric())?,
        };
        let v = v
            .deflate(r)
            .ok_or_else(|| Error::Invariant(format!("{self}: value for {lambda}, n = {n} is not in Q(q)")))?;
        v.to_laurent()
            .ok_or_else(|| Error::Invariant(format!("{self}: value for {lambda}, n = {n} is not a polynomial")))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Tableaux => write!(f, "tableaux"),
            Method::Multisum => write!(f, "multisum"),
            Method::Pfaffian => write!(f, "pfaffian"),
            Method::Determinant => write!(f, "determinant"),
            Method::Th => write!(f, "th"),
            Method::Ot => write!(f, "ot"),
            Method::Dft(form) => write!(f, "dft-{form}"),
            Method::Nimmo => write!(f, "nimmo"),
            Method::Appendix => write!(f, "appendix"),
            Method::SchurExpansion => write!(f, "schur-expansion"),
            Method::Api => write!(f, "api"),
            Method::Rce => write!(f, "rce"),
            Method::TwoRowCd => write!(f, "two-row-cd"),
            Method::QDet => write!(f, "qdet"),
            Method::Direct => write!(f, "direct"),
            Method::NimmoQ => write!(f, "nimmo-q"),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(form) = s.strip_prefix("dft-") {
            return Ok(Method::Dft(form.parse()?));
        }
        Method::all()
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown method {s:?}")))
    }
}

/// One evaluated cell of the grid.
#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub lambda: StrictPartition,
    pub n: usize,
    pub method: Method,
    pub value: std::result::Result<LaurentPoly, Error>,
    pub micros: u128,
    /// Agreement with the tableau oracle.
    pub ok: bool,
}

/// Bounds of a crosscheck grid: strict `λ` with `λ_1 ≤ max_part`,
/// `ℓ(λ) ≤ max_len`, and `ℓ(λ) − 1 ≤ n ≤ max_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Grid {
    pub max_part: usize,
    pub max_len: usize,
    pub max_n: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid { max_part: 6, max_len: 3, max_n: 5 }
    }
}

impl Grid {
    pub fn cells(&self) -> Vec<(StrictPartition, usize)> {
        let mut out = Vec::new();
        for lambda in StrictPartition::all(self.max_part, self.max_len) {
            let lo = lambda.len().saturating_sub(1);
            for n in lo..=self.max_n {
                out.push((lambda.clone(), n));
            }
        }
        out.sort_by_key(|a| cell_key(&a.0, a.1));
        out
    }
}

fn cell_key(lambda: &StrictPartition, n: usize) -> (Vec<usize>, usize) {
    (lambda.parts().to_vec(), n)
}

/// Evaluate `methods` on every cell, in parallel, and compare with the
/// oracle. Records come back sorted by `(λ, n, method)`.
pub fn run_grid(grid: &Grid, methods: &[Method]) -> Vec<Record> {
    let cells = grid.cells();
    let mut out: Vec<Record> = cells
        .par_iter()
        .flat_map_iter(|(lambda, n)| run_cell(lambda, *n, methods))
        .collect();
    out.sort_by_key(|a| (cell_key(&a.lambda, a.n), a.method));
    out
}

/// All applicable `methods` at one cell.
pub fn run_cell(lambda: &StrictPartition, n: usize, methods: &[Method]) -> Vec<Record> {
    let oracle = gf_marked(lambda, n + 1);
    methods
        .iter()
        .filter(|m| m.applies(lambda.len(), n))
        .map(|&method| {
            let t = Instant::now();
            let value = method.evaluate(lambda, n);
            let micros = t.elapsed().as_micros();
            let ok = value.as_ref().is_ok_and(|v| *v == oracle);
            Record { lambda: lambda.clone(), n, method, value, micros, ok }
        })
        .collect()
}

/// The inversion symmetry in each variable over the grid, at the points
/// `q^{λ_i}` (symbolic in `q`).
pub fn hyperoctahedral_grid(grid: &Grid) -> Result<Vec<(StrictPartition, usize, bool)>> {
    let ctx = QContext::<RationalFn>::symbolic(1)?;
    let mut out = Vec::new();
    for (lambda, n) in grid.cells() {
        if lambda.is_empty() {
            continue;
        }
        let xs: Vec<RationalFn> = lambda.as_exponents().iter().map(|&e| ctx.q_pow(e)).collect();
        out.push((lambda.clone(), n, hyperoctahedral_check(&xs, n, &ctx)?));
    }
    Ok(out)
}

/// Render a polynomial value for output: polynomial in `q`.
pub fn format_value(v: &LaurentPoly) -> String {
    v.display_q(1)
}
