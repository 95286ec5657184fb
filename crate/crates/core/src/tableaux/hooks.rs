use crate::arith::{Field, QContext};
use crate::error::{Error, Result};

use super::partition::Partition;

/// The two box products attached to `μ`:
/// `Π_α (1 + q^{h(α)})/(1 − q^{h(α)})` and
/// `Π_α (1 − q^{c(α)+m−n−1})/(1 + q^{c(α)+m−n−1})`.
pub fn hook_content_products<F: Field>(
    mu: &Partition,
    n: usize,
    m: usize,
    ctx: &QContext<F>,
) -> Result<(F, F)> {
    if mu.len() > m || mu.part(0) + m > n + 1 {
        return Err(Error::InvalidArgument(format!(
            "{:?} does not fit in the ({} − {})^{} box",
            mu.parts(),
            n + 1,
            m,
            m
        )));
    }
    let shift = m as i64 - n as i64 - 1;
    let mut hook = F::one();
    let mut content = F::one();
    for (h, c) in mu.hooks_and_contents() {
        let qh = ctx.q_pow(h as i64);
        hook = hook * (F::one() + &qh).checked_div(&(F::one() - &qh))?;
        let qc = ctx.q_pow(c + shift);
        content = content * (F::one() - &qc).checked_div(&(F::one() + &qc))?;
    }
    Ok((hook, content))
}

/// Only the hook product; used by the unbounded (Kawanaka) sum.
pub fn hook_product<F: Field>(mu: &Partition, ctx: &QContext<F>) -> Result<F> {
    let mut hook = F::one();
    for (h, _) in mu.hooks_and_contents() {
        let qh = ctx.q_pow(h as i64);
        hook = hook * (F::one() + &qh).checked_div(&(F::one() - &qh))?;
    }
    Ok(hook)
}
