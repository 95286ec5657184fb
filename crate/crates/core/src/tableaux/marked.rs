//! Marked shifted tableaux over the alphabet `1' < 1 < 2' < 2 < … < n' < n`.
//!
//! Symbols are encoded as codes `0..2n`: code `c` is the letter `c/2 + 1`,
//! marked when `c` is even.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::partition::StrictPartition;
use crate::arith::{Field, LaurentPoly};

/// A marked symbol `k'` or unmarked `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    pub letter: usize,
    pub marked: bool,
}

impl Symbol {
    pub fn from_code(c: usize) -> Self {
        Symbol { letter: c / 2 + 1, marked: c.is_multiple_of(2) }
    }

    pub fn code(self) -> usize {
        2 * (self.letter - 1) + usize::from(!self.marked)
    }
}

impl std::fmt::Display for Symbol {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}{}", self.letter, if self.marked { "'" } else { "" })
    }
}

/// A filled shifted diagram, boxes listed row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedTableau {
    pub boxes: Vec<(usize, usize)>,
    pub symbols: Vec<Symbol>,
}

impl MarkedTableau {
    /// `a_k`: number of boxes labelled `k` or `k'`, for `k = 1..=n`.
    pub fn weights(&self, n: usize) -> Vec<usize> {
        let mut a = vec![0; n];
        for s in &self.symbols {
            a[s.letter - 1] += 1;
        }
        a
    }

    /// `|T| = Σ_k (k − 1) a_k`.
    pub fn statistic(&self) -> usize {
        self.symbols.iter().map(|s| s.letter - 1).sum()
    }
}

/// Row-major backtracking enumeration of all marked shifted tableaux of shape
/// `S(λ)` with letters at most `n`, in lexicographic order of symbol codes.
pub struct MarkedTableaux {
    boxes: Vec<(usize, usize)>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
    codes: Vec<usize>,
    max_code: usize,
    column_strict: bool,
    started: bool,
    done: bool,
}

impl MarkedTableaux {
    fn new(lambda: &StrictPartition, n: usize, column_strict: bool) -> Self {
        let boxes = lambda.shifted_boxes();
        let index: HashMap<(usize, usize), usize> =
            boxes.iter().enumerate().map(|(i, b)| (*b, i)).collect();
        let left = boxes
            .iter()
            .map(|&(r, c)| if c > 0 { index.get(&(r, c - 1)).copied() } else { None })
            .collect();
        let up = boxes
            .iter()
            .map(|&(r, c)| if r > 0 { index.get(&(r - 1, c)).copied() } else { None })
            .collect();
        let len = boxes.len();
        MarkedTableaux {
            boxes,
            left,
            up,
            codes: vec![0; len],
            max_code: 2 * n,
            column_strict,
            started: false,
            done: n == 0 && len > 0,
        }
    }

    fn allowed(&self, i: usize, c: usize) -> bool {
        if self.column_strict && c.is_multiple_of(2) {
            return false;
        }
        let marked = c.is_multiple_of(2);
        if let Some(l) = self.left[i] {
            let lc = self.codes[l];
            if c < lc || (marked && c == lc) {
                return false;
            }
        }
        if let Some(u) = self.up[i] {
            let uc = self.codes[u];
            if c < uc || (!marked && c == uc) {
                return false;
            }
        }
        true
    }

    fn lower(&self, i: usize) -> usize {
        let mut lo = 0;
        if let Some(l) = self.left[i] {
            lo = lo.max(self.codes[l]);
        }
        if let Some(u) = self.up[i] {
            lo = lo.max(self.codes[u]);
        }
        lo
    }

    /// Depth-first search from box `i`: when `restart` is set, box `i` is
    /// tried from its lower bound, otherwise from its current code plus one.
    /// Returns false when the search space is exhausted.
    fn search(&mut self, mut i: usize, mut restart: bool) -> bool {
        let len = self.boxes.len();
        loop {
            if i == len {
                return true;
            }
            let start = if restart { self.lower(i) } else { self.codes[i] + 1 };
            match (start..self.max_code).find(|&c| self.allowed(i, c)) {
                Some(c) => {
                    self.codes[i] = c;
                    i += 1;
                    restart = true;
                }
                None => {
                    if i == 0 {
                        return false;
                    }
                    i -= 1;
                    restart = false;
                }
            }
        }
    }

    fn current(&self) -> MarkedTableau {
        MarkedTableau {
            boxes: self.boxes.clone(),
            symbols: self.codes.iter().map(|&c| Symbol::from_code(c)).collect(),
        }
    }
}

impl Iterator for MarkedTableaux {
    type Item = MarkedTableau;

    fn next(&mut self) -> Option<MarkedTableau> {
        if self.done {
            return None;
        }
        let len = self.boxes.len();
        let ok = if !self.started {
            self.started = true;
            self.search(0, true)
        } else {
            len > 0 && self.search(len - 1, false)
        };
        if !ok {
            self.done = true;
            return None;
        }
        Some(self.current())
    }
}

/// Stream every marked shifted tableau of shape `S(λ)` over `1' < 1 < … < n`.
pub fn enumerate_marked(lambda: &StrictPartition, n: usize) -> MarkedTableaux {
    MarkedTableaux::new(lambda, n, false)
}

/// Stream every column-strict shifted tableau (unmarked letters `≤ bound`).
pub fn enumerate_column_strict(lambda: &StrictPartition, bound: usize) -> MarkedTableaux {
    MarkedTableaux::new(lambda, bound, true)
}

/// `Σ_T q^{|T|}` accumulated from the enumeration stream.
pub fn gf_by_enumeration(stream: MarkedTableaux) -> LaurentPoly {
    let mut counts: Vec<BigInt> = Vec::new();
    for t in stream {
        let k = t.statistic();
        if counts.len() <= k {
            counts.resize(k + 1, BigInt::zero());
        }
        counts[k] += 1;
    }
    int_coeffs_to_laurent(&counts)
}

fn int_coeffs_to_laurent(v: &[BigInt]) -> LaurentPoly {
    LaurentPoly::from_terms(
        v.iter()
            .enumerate()
            .map(|(i, c)| (i as i64, num_rational::BigRational::from_integer(c.clone()))),
    )
}

/// Multiplicity with which the skew strip `ν/μ` can carry a single letter.
///
/// Marked: a strip box with a strip neighbour on its left must be unmarked,
/// one with a strip neighbour below must be marked, so both at once is
/// impossible; free boxes have two choices. Column-strict: no two strip boxes
/// may share a column.
fn strip_weight(mu: &StrictPartition, nu: &StrictPartition, column_strict: bool) -> u32 {
    let inside = |p: &StrictPartition, r: usize, c: usize| -> bool {
        r < p.len() && c >= r && c < r + p.parts()[r]
    };
    let in_strip = |r: usize, c: usize| inside(nu, r, c) && !inside(mu, r, c);
    let mut free = 0;
    for (r, c) in nu.shifted_boxes() {
        if !in_strip(r, c) {
            continue;
        }
        let has_left = c > 0 && in_strip(r, c - 1);
        let has_below = in_strip(r + 1, c);
        if column_strict {
            if has_below {
                return 0;
            }
            continue;
        }
        match (has_left, has_below) {
            (true, true) => return 0,
            (false, false) => free += 1,
            _ => {}
        }
    }
    if column_strict {
        1
    } else {
        1 << free
    }
}

struct Transfer {
    states: Vec<StrictPartition>,
    /// (from, to, multiplicity, boxes added)
    edges: Vec<(usize, usize, u32, usize)>,
}

fn transfer(lambda: &StrictPartition, column_strict: bool) -> Transfer {
    let states = lambda.sub_partitions();
    let mut edges = Vec::new();
    for (i, mu) in states.iter().enumerate() {
        for (j, nu) in states.iter().enumerate() {
            if !nu.contains(mu) {
                continue;
            }
            let w = strip_weight(mu, nu, column_strict);
            if w > 0 {
                edges.push((i, j, w, nu.size() - mu.size()));
            }
        }
    }
    Transfer { states, edges }
}

/// Weighted tableau sum `Σ_T Π_k x_k^{a_k}` via a transfer recursion over
/// intermediate shapes; `x.len()` is the alphabet size.
fn weighted_sum<F: Field>(lambda: &StrictPartition, x: &[F], column_strict: bool) -> F {
    let tr = transfer(lambda, column_strict);
    let target = tr.states.iter().position(|s| s == lambda).unwrap();
    let empty = tr.states.iter().position(|s| s.is_empty()).unwrap();
    let mut dp: Vec<F> = vec![F::zero(); tr.states.len()];
    dp[empty] = F::one();
    for xk in x {
        let mut pows = vec![F::one()];
        for _ in 0..lambda.size() {
            let next = pows.last().unwrap().clone() * xk;
            pows.push(next);
        }
        let mut next = vec![F::zero(); tr.states.len()];
        for &(from, to, w, add) in &tr.edges {
            if dp[from].is_zero() {
                continue;
            }
            next[to] = next[to].clone() + dp[from].clone() * &pows[add] * &F::from_i64(w as i64);
        }
        dp = next;
    }
    dp.swap_remove(target)
}

fn gf_dp(lambda: &StrictPartition, n: usize, column_strict: bool) -> LaurentPoly {
    let tr = transfer(lambda, column_strict);
    let target = tr.states.iter().position(|s| s == lambda).unwrap();
    let empty = tr.states.iter().position(|s| s.is_empty()).unwrap();
    // dp[state] is a coefficient vector in q
    let mut dp: Vec<Vec<BigInt>> = vec![Vec::new(); tr.states.len()];
    dp[empty] = vec![BigInt::one()];
    for k in 0..n {
        let mut next: Vec<Vec<BigInt>> = vec![Vec::new(); tr.states.len()];
        for &(from, to, w, add) in &tr.edges {
            if dp[from].is_empty() {
                continue;
            }
            let shift = k * add;
            let need = dp[from].len() + shift;
            if next[to].len() < need {
                next[to].resize(need, BigInt::zero());
            }
            for (e, c) in dp[from].iter().enumerate() {
                if !c.is_zero() {
                    next[to][e + shift] += c * w;
                }
            }
        }
        dp = next;
    }
    int_coeffs_to_laurent(&dp[target])
}

/// `Σ_T q^{|T|}` over marked shifted tableaux with alphabet size `n`; this is
/// `Q_λ(1, q, …, q^{n−1})` — note the `n` variables, one fewer than the
/// progression `1, …, q^n` used by `P_n`.
pub fn gf_marked(lambda: &StrictPartition, n: usize) -> LaurentPoly {
    gf_dp(lambda, n, false)
}

/// `Σ_T q^{|T|}` over column-strict shifted tableaux with letters `≤ bound`.
pub fn gf_column_strict(lambda: &StrictPartition, bound: usize) -> LaurentPoly {
    gf_dp(lambda, bound, true)
}

/// `Q_λ(x_1, …, x_n) = Σ_T x^T` over marked shifted tableaux.
pub fn q_tableau_sum<F: Field>(lambda: &StrictPartition, x: &[F]) -> F {
    weighted_sum(lambda, x, false)
}

/// Number of marked shifted tableaux, `Q_λ(1^n)`.
pub fn count_marked(lambda: &StrictPartition, n: usize) -> BigInt {
    gf_marked(lambda, n).terms().map(|(_, c)| c.to_integer()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn sp(v: &[usize]) -> StrictPartition {
        StrictPartition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn single_box() {
        let t: Vec<_> = enumerate_marked(&sp(&[1]), 1).collect();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].symbols[0].to_string(), "1'");
        assert_eq!(t[1].symbols[0].to_string(), "1");
        assert_eq!(enumerate_marked(&sp(&[1]), 3).count(), 6);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_marked(&sp(&[2, 1]), 2).count(), 8);
        assert_eq!(enumerate_marked(&sp(&[2]), 1).count(), 2);
        assert_eq!(enumerate_marked(&StrictPartition::empty(), 3).count(), 1);
        assert_eq!(enumerate_marked(&sp(&[1]), 0).count(), 0);
    }

    #[test]
    fn generating_functions() {
        assert_eq!(gf_marked(&sp(&[1]), 2), LaurentPoly::from_coeffs(&[2, 2]));
        assert_eq!(gf_marked(&StrictPartition::empty(), 4), LaurentPoly::one());
        assert_eq!(gf_marked(&sp(&[2]), 1), LaurentPoly::from_coeffs(&[2]));
    }

    #[test]
    fn dp_matches_enumeration() {
        for lam in StrictPartition::all(4, 3) {
            for n in 0..=4 {
                assert_eq!(
                    gf_marked(&lam, n),
                    gf_by_enumeration(enumerate_marked(&lam, n)),
                    "{lam} n={n}"
                );
                assert_eq!(
                    gf_column_strict(&lam, n),
                    gf_by_enumeration(enumerate_column_strict(&lam, n)),
                    "column-strict {lam} n={n}"
                );
            }
        }
    }

    #[test]
    fn column_strict_minimal_tableau() {
        // (2,1): row 1 is 1 1, the box below column 2 must exceed 1
        let gf = gf_column_strict(&sp(&[2, 1]), 4);
        assert_eq!(gf.coeff(0), int(0));
        assert_eq!(gf.coeff(1), int(1));
    }

    #[test]
    fn weighted_sum_specializes() {
        let x = [int(1), int(1)];
        assert_eq!(q_tableau_sum(&sp(&[2, 1]), &x), int(8));
    }
}
