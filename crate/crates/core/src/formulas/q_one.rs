//! `Q_λ(1^n)` — the number of marked shifted tableaux of shape `λ` with
//! entries at most `n` — through the formulas that are regular at `q = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{int, rat};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qseries::{classical_pk, f_poly, factorial, hyp_f, poch};
use crate::tableaux::StrictPartition;

use super::points::index_tuples;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum QOneMethod {
    /// The hyperoctahedral sum at `q = 1`.
    Qc,
    /// Determinant of the one-row polynomials `f_k`.
    Fdc,
    /// Rectangular determinant of continuous dual Hahn polynomials.
    Kernel,
    /// One row, terminating ₃F₂.
    Row3F2,
    /// One row, terminating ₂F₁ at 2.
    Row2F1,
}

impl QOneMethod {
    pub const ALL: [QOneMethod; 5] =
        [QOneMethod::Qc, QOneMethod::Fdc, QOneMethod::Kernel, QOneMethod::Row3F2, QOneMethod::Row2F1];

    pub fn applies_to(self, lambda: &StrictPartition) -> bool {
        !matches!(self, QOneMethod::Row3F2 | QOneMethod::Row2F1) || lambda.len() == 1
    }
}

impl fmt::Display for QOneMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QOneMethod::Qc => "qc",
            QOneMethod::Fdc => "fdc",
            QOneMethod::Kernel => "kernel",
            QOneMethod::Row3F2 => "row3f2",
            QOneMethod::Row2F1 => "row2f1",
        })
    }
}

impl FromStr for QOneMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        QOneMethod::ALL
            .into_iter()
            .find(|m| m.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown q = 1 method {s:?}")))
    }
}

/// `Q_λ(1^n)` by the chosen method. The value must be a nonnegative
/// integer; anything else is reported as an invariant violation.
pub fn q_one(lambda: &StrictPartition, n: usize, method: QOneMethod) -> Result<BigInt> {
    let m = lambda.len();
    if m == 0 {
        return Ok(BigInt::one());
    }
    if !method.applies_to(lambda) {
        return Err(Error::InvalidArgument(format!("method {method} needs a single row, got {lambda}")));
    }
    // more rows than letters: no tableaux at all
    if m > n {
        return Ok(BigInt::zero());
    }
    let v = match method {
        QOneMethod::Qc => qc(lambda.parts(), n - 1),
        QOneMethod::Fdc => fdc(lambda.parts(), n)?,
        QOneMethod::Kernel => kernel(lambda.parts(), n)?,
        QOneMethod::Row3F2 => {
            let n = n as i64 - 1;
            let l = lambda.parts()[0] as i64;
            int(2 * n + 2) * hyp_f(&[int(-n), int(n + 2), rat(1 - l, 2)], &[int(1), rat(3, 2)], &int(1))?
        }
        QOneMethod::Row2F1 => {
            let n = n as i64 - 1;
            let l = lambda.parts()[0] as i64;
            int(2 * n + 2) * hyp_f(&[int(-n), int(1 - l)], &[int(2)], &int(2))?
        }
    };
    if !v.is_integer() || v < BigRational::zero() {
        return Err(Error::Invariant(format!("{method} gave {v} for {lambda}, n = {n}")));
    }
    Ok(v.to_integer())
}

/// `Q_λ(1^{n+1}) = (2n+2)^m Σ_k Π_{i<j} (k_i−k_j)/(k_i+k_j+1) Π_i (−n, n+2, (1−λ_i)/2)_{k_i}/(1, 1, 3/2)_{k_i}`.
fn qc(lambda: &[usize], n: usize) -> BigRational {
    let m = lambda.len();
    let ni = n as i64;
    let w: Vec<Vec<BigRational>> = lambda
        .iter()
        .map(|&l| {
            (0..=n as u64)
                .map(|k| {
                    poch(&int(-ni), k) * poch(&int(ni + 2), k) * poch(&rat(1 - l as i64, 2), k)
                        / (poch(&int(1), k) * poch(&int(1), k) * poch(&rat(3, 2), k))
                })
                .collect()
        })
        .collect();
    let mut sum = BigRational::zero();
    for k in index_tuples(m, n) {
        if (0..m).any(|i| (i + 1..m).any(|j| k[i] == k[j])) {
            continue;
        }
        let mut t = BigRational::one();
        for i in 0..m {
            t *= &w[i][k[i]];
            for j in i + 1..m {
                t *= rat(k[i] as i64 - k[j] as i64, (k[i] + k[j] + 1) as i64);
            }
        }
        sum += t;
    }
    sum * int(2 * ni + 2).pow(m as i32)
}

fn two_power_prefactor(m: usize, n: usize) -> BigRational {
    // 2^{m(2n+1−m)/2}; m(2n+1−m) is always even
    int(2).pow((m * (2 * n + 1 - m) / 2) as i32)
}

/// Determinant of the one-row polynomials `f_{n+m−2j}(λ_i)`.
fn fdc(lambda: &[usize], n: usize) -> Result<BigRational> {
    let m = lambda.len();
    let mat = Matrix::try_from_fn(m, m, |i, j| f_poly(n + m - 2 * (j + 1)).eval(&int(lambda[i] as i64)))?;
    let mut v = two_power_prefactor(m, n) * mat.det()?;
    for i in 1..=m {
        v /= BigRational::from_integer(factorial((n - m + i - 1) as u64));
    }
    for i in 0..m {
        for j in i + 1..m {
            v /= int((lambda[i] + lambda[j]) as i64);
        }
    }
    Ok(v)
}

/// With `n − m = 2k + ε`: the rectangular determinant of `p_{k+j−1}^{(ε)}`
/// at `y_i = −λ_i²`, divided by the Vandermonde in the `y_i`.
fn kernel(lambda: &[usize], n: usize) -> Result<BigRational> {
    let m = lambda.len();
    let (k, eps) = ((n - m) / 2, ((n - m) % 2) as u8);
    let ys: Vec<BigRational> = lambda.iter().map(|&l| -int((l * l) as i64)).collect();
    let mat = Matrix::try_from_fn(m, m, |i, j| classical_pk(k + j, eps).eval(&ys[i]))?;
    let mut rect = mat.det()?;
    for i in 0..m {
        for j in i + 1..m {
            rect /= &ys[j] - &ys[i];
        }
    }
    let mut v = two_power_prefactor(m, n) * rect;
    if (k * m) % 2 == 1 {
        v = -v;
    }
    for i in 1..=m {
        v /= BigRational::from_integer(factorial((n - i) as u64));
        if eps == 1 {
            v *= int(lambda[i - 1] as i64);
        }
    }
    for i in 0..m {
        for j in i + 1..m {
            v *= int(lambda[i] as i64 - lambda[j] as i64);
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::count_marked;

    #[test]
    fn spot_values() {
        let p = |s: &str| s.parse::<StrictPartition>().unwrap();
        for method in [QOneMethod::Qc, QOneMethod::Fdc, QOneMethod::Kernel] {
            assert_eq!(q_one(&p("1"), 1, method).unwrap(), BigInt::from(2));
            assert_eq!(q_one(&p("2,1"), 2, method).unwrap(), BigInt::from(8));
            assert_eq!(q_one(&p("3,1"), 4, method).unwrap(), BigInt::from(320));
        }
    }

    #[test]
    fn all_methods_count_tableaux() {
        for lambda in StrictPartition::all(5, 3) {
            for n in 0..=5 {
                let expect = count_marked(&lambda, n);
                for method in QOneMethod::ALL.into_iter().filter(|m| m.applies_to(&lambda)) {
                    assert_eq!(q_one(&lambda, n, method).unwrap(), expect, "{method} {lambda} n={n}");
                }
            }
        }
    }
}
