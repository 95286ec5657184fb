//! The `n → ∞` limit `Q_λ(1, q, q², …)` as a product, its column-strict
//! companion, and the Schur-function identity behind both.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::arith::{Field, LaurentPoly, QContext, RationalFn};
use crate::error::Result;
use crate::tableaux::{gf_column_strict, gf_marked, hook_product, Partition, StrictPartition};

use super::multisum::ratio_pm;

fn limit_product<F: Field>(lambda: &StrictPartition, marked: bool, ctx: &QContext<F>) -> Result<F> {
    let q = ctx.q();
    let l = lambda.parts();
    let mut v = F::one();
    for &li in l {
        let den = crate::qseries::qpoch(&q, &q, li as i64)?;
        let num = if marked { crate::qseries::qpoch(&-F::one(), &q, li as i64)? } else { F::one() };
        v = v * num.checked_div(&den)?;
    }
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            let (a, b) = (l[i] as i64, l[j] as i64);
            v = v * (ctx.q_pow(b) - ctx.q_pow(a)).checked_div(&(F::one() - ctx.q_pow(a + b)))?;
        }
    }
    Ok(v)
}

/// `Σ_T q^{|T|}` over all marked shifted tableaux of shape `λ`:
/// `Π (−1;q)_{λ_i}/(q;q)_{λ_i} Π_{i<j} (q^{λ_j} − q^{λ_i})/(1 − q^{λ_i+λ_j})`.
pub fn kawanaka<F: Field>(lambda: &StrictPartition, ctx: &QContext<F>) -> Result<F> {
    limit_product(lambda, true, ctx)
}

/// The same sum over column-strict (unmarked) shifted tableaux.
pub fn column_strict_limit<F: Field>(lambda: &StrictPartition, ctx: &QContext<F>) -> Result<F> {
    limit_product(lambda, false, ctx)
}

/// Entries above `n` contribute at least `q^n`, so the coefficients of
/// `q^0, …, q^{n−1}` of the bounded generating function must agree with
/// the product's power series.
fn agree_below(bounded: &LaurentPoly, limit: &RationalFn, n: usize) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let series = limit.series(n as i64 - 1)?;
    Ok(bounded.truncate(n as i64 - 1) == series)
}

/// Compare `gf_marked(λ, n)` with [`kawanaka`] below `q^n`.
pub fn kawanaka_truncation_check(lambda: &StrictPartition, n: usize) -> Result<bool> {
    let ctx = QContext::symbolic(1)?;
    agree_below(&gf_marked(lambda, n), &kawanaka(lambda, &ctx)?, n)
}

/// Compare `gf_column_strict(λ, n)` with [`column_strict_limit`] below `q^n`.
pub fn column_strict_truncation_check(lambda: &StrictPartition, n: usize) -> Result<bool> {
    let ctx = QContext::symbolic(1)?;
    agree_below(&gf_column_strict(lambda, n), &column_strict_limit(lambda, &ctx)?, n)
}

/// A power series in `x_1, …, x_m` with coefficients in `ℚ(q)`, truncated
/// at a fixed total degree.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries {
    vars: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, RationalFn>,
}

impl TruncatedSeries {
    pub fn zero(vars: usize, degree: usize) -> Self {
        TruncatedSeries { vars, degree, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize, degree: usize) -> Self {
        let mut s = Self::zero(vars, degree);
        s.add_term(vec![0; vars], RationalFn::one());
        s
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: RationalFn) {
        if exps.iter().sum::<usize>() > self.degree || c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(RationalFn::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.vars, self.degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb);
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Monomial expansion of `s_μ(x_1, …, x_m)` (Kostka numbers), by peeling
/// off horizontal strips.
pub fn schur_monomials(mu: &Partition, m: usize) -> BTreeMap<Vec<usize>, u64> {
    let mut out = BTreeMap::new();
    fn rec(mu: &[usize], m: usize, exps: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
        if m == 0 {
            if mu.iter().all(|&p| p == 0) {
                let mut e = exps.clone();
                e.reverse();
                *out.entry(e).or_insert(0) += 1;
            }
            return;
        }
        // ν with μ_{i+1} ≤ ν_i ≤ μ_i and ℓ(ν) ≤ m − 1
        let len = mu.len();
        let mut nu = vec![0usize; len];
        fn strips(i: usize, mu: &[usize], nu: &mut Vec<usize>, m: usize, exps: &mut Vec<usize>, out: &mut BTreeMap<Vec<usize>, u64>) {
            if i == mu.len() {
                if nu.iter().filter(|&&p| p > 0).count() > m - 1 {
                    return;
                }
                let removed: usize = mu.iter().sum::<usize>() - nu.iter().sum::<usize>();
                exps.push(removed);
                let next = nu.clone();
                rec(&next, m - 1, exps, out);
                exps.pop();
                return;
            }
            let lo = mu.get(i + 1).copied().unwrap_or(0);
            for v in lo..=mu[i] {
                nu[i] = v;
                strips(i + 1, mu, nu, m, exps, out);
            }
        }
        strips(0, mu, &mut nu, m, exps, out);
    }
    rec(mu.parts(), m, &mut Vec::new(), &mut out);
    out
}

/// Both sides of the hook-product Schur expansion
/// `Σ_μ Π_{α∈μ} (1+q^{h(α)})/(1−q^{h(α)}) s_μ(x) = Π_i (−x_i q;q)_∞/(x_i;q)_∞ Π_{i<j} 1/(1 − x_i x_j)`
/// as series in `x_1, …, x_m` up to total degree `degree`.
pub fn kbf_sides(m: usize, degree: usize) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let ctx = QContext::<RationalFn>::symbolic(1)?;
    let mut lhs = TruncatedSeries::zero(m, degree);
    for mu in Partition::up_to_size(m, degree) {
        let h = hook_product(&mu, &ctx)?;
        for (e, c) in schur_monomials(&mu, m) {
            lhs.add_term(e, h.clone() * &RationalFn::from_int_coeffs(&[c as i64]));
        }
    }
    let mut rhs = TruncatedSeries::one(m, degree);
    for i in 0..m {
        let mut f = TruncatedSeries::zero(m, degree);
        for k in 0..=degree {
            let mut e = vec![0; m];
            e[i] = k;
            f.add_term(e, ratio_pm(k, &ctx)?);
        }
        rhs = rhs.mul(&f);
        for j in i + 1..m {
            let mut g = TruncatedSeries::zero(m, degree);
            for k in 0..=degree / 2 {
                let mut e = vec![0; m];
                e[i] = k;
                e[j] = k;
                g.add_term(e, RationalFn::one());
            }
            rhs = rhs.mul(&g);
        }
    }
    Ok((lhs, rhs))
}

pub fn kbf_check(m: usize, degree: usize) -> Result<bool> {
    let (l, r) = kbf_sides(m, degree)?;
    Ok(l == r)
}
