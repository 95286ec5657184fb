use crate::arith::Field;
use crate::error::{Error, Result};

use super::matrix::Matrix;

/// A skew-symmetric matrix: `a_ij = −a_ji`, zero diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewMatrix<F> {
    n: usize,
    data: Vec<F>,
}

impl<F: Field> SkewMatrix<F> {
    /// Build from the strict upper triangle `f(i, j)`, `i < j`.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> Result<F>) -> Result<Self> {
        let mut data = vec![F::zero(); n * n];
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j)?;
                data[j * n + i] = -v.clone();
                data[i * n + j] = v;
            }
        }
        Ok(SkewMatrix { n, data })
    }

    /// Check skew-symmetry of a square matrix.
    pub fn from_matrix(m: &Matrix<F>) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::Dimension("skew matrix must be square".into()));
        }
        let n = m.rows();
        for i in 0..n {
            if !m.get(i, i).is_zero() {
                return Err(Error::InvalidArgument(format!("nonzero diagonal entry {i}")));
            }
            for j in i + 1..n {
                if *m.get(i, j) != -m.get(j, i).clone() {
                    return Err(Error::InvalidArgument(format!("entries ({i},{j}) not skew")));
                }
            }
        }
        Ok(SkewMatrix { n, data: (0..n * n).map(|k| m.get(k / n, k % n).clone()).collect() })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.n + j]
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.n, self.n, |i, j| self.get(i, j).clone())
    }

    /// Principal submatrix on `idx` (in the given order).
    pub fn select(&self, idx: &[usize]) -> Self {
        let k = idx.len();
        let mut data = Vec::with_capacity(k * k);
        for &i in idx {
            for &j in idx {
                data.push(self.get(i, j).clone());
            }
        }
        SkewMatrix { n: k, data }
    }

    /// Pfaffian; the matching expansion for small sizes, elimination otherwise.
    pub fn pfaffian(&self) -> Result<F> {
        if self.n % 2 == 1 {
            return Err(Error::OddDimension(self.n));
        }
        if self.n <= 6 {
            self.pfaffian_expansion()
        } else {
            self.pfaffian_elimination()
        }
    }

    /// Skew-symmetric elimination: pivot on a nonzero `a_{1j}`, then
    /// `pf(A) = a_12 · pf(B)` with `B_ij = a_ij − (a_1i a_2j − a_2i a_1j)/a_12`.
    pub fn pfaffian_elimination(&self) -> Result<F> {
        if self.n % 2 == 1 {
            return Err(Error::OddDimension(self.n));
        }
        let mut n = self.n;
        let mut a = self.data.clone();
        let mut acc = F::one();
        while n > 0 {
            let Some(p) = (1..n).find(|&j| !a[j].is_zero()) else {
                return Ok(F::zero());
            };
            if p != 1 {
                // swap index 1 and p in rows and columns
                for k in 0..n {
                    a.swap(n + k, p * n + k);
                }
                for k in 0..n {
                    a.swap(k * n + 1, k * n + p);
                }
                acc = -acc;
            }
            let a12 = a[1].clone();
            let inv = a12.inv()?;
            let m = n - 2;
            let mut b = Vec::with_capacity(m * m);
            for i in 2..n {
                for j in 2..n {
                    if i == j {
                        b.push(F::zero());
                        continue;
                    }
                    let corr = (a[i].clone() * &a[n + j] - a[n + i].clone() * &a[j]) * &inv;
                    b.push(a[i * n + j].clone() - corr);
                }
            }
            acc = acc * &a12;
            a = b;
            n = m;
        }
        Ok(acc)
    }

    /// Signed sum over perfect matchings (independent oracle).
    pub fn pfaffian_expansion(&self) -> Result<F> {
        if self.n % 2 == 1 {
            return Err(Error::OddDimension(self.n));
        }
        if self.n > 12 {
            return Err(Error::SizeGuard { what: "pfaffian expansion size".into(), limit: 12 });
        }
        let matchings = perfect_matchings(self.n);
        let terms = matchings
            .iter()
            .map(|(pairs, sign)| (*sign, pairs.iter().map(|&(i, j)| self.get(i, j)).collect()));
        Ok(F::sum_products(terms))
    }
}

/// Perfect matchings of `0..n` as ordered pairs `(i, j)`, `i < j`, with the
/// sign of the permutation `(i_1 j_1 i_2 j_2 …)`.
pub fn perfect_matchings(n: usize) -> Vec<(Vec<(usize, usize)>, i64)> {
    fn rec(rest: Vec<usize>, cur: &mut Vec<(usize, usize)>, sign: i64, out: &mut Vec<(Vec<(usize, usize)>, i64)>) {
        if rest.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        let first = rest[0];
        for k in 1..rest.len() {
            let mut next = rest.clone();
            let partner = next.remove(k);
            next.remove(0);
            cur.push((first, partner));
            // moving `partner` next to `first` crosses k − 1 elements
            let s = if (k - 1) % 2 == 0 { sign } else { -sign };
            rec(next, cur, s, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec((0..n).collect(), &mut Vec::new(), 1, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use num_rational::BigRational;

    #[test]
    fn small_pfaffians() {
        let s = SkewMatrix::from_upper(2, |_, _| Ok(rat(5, 3))).unwrap();
        assert_eq!(s.pfaffian().unwrap(), rat(5, 3));
        let vals = [int(2), int(3), int(5), int(7), int(11), int(13)];
        // a12 a34 − a13 a24 + a14 a23
        let idx = |i: usize, j: usize| match (i, j) {
            (0, 1) => 0,
            (0, 2) => 1,
            (0, 3) => 2,
            (1, 2) => 3,
            (1, 3) => 4,
            _ => 5,
        };
        let s = SkewMatrix::from_upper(4, |i, j| Ok(vals[idx(i, j)].clone())).unwrap();
        let expect = int(2 * 13 - 3 * 11 + 5 * 7);
        assert_eq!(s.pfaffian_expansion().unwrap(), expect);
        assert_eq!(s.pfaffian_elimination().unwrap(), expect);
    }

    #[test]
    fn odd_dimension_rejected() {
        let s = SkewMatrix::<BigRational>::from_upper(3, |_, _| Ok(int(1))).unwrap();
        assert_eq!(s.pfaffian(), Err(Error::OddDimension(3)));
    }

    #[test]
    fn zero_pivot_row_needs_swap() {
        let s = SkewMatrix::from_upper(4, |i, j| Ok(if (i, j) == (0, 1) { int(0) } else { int((i + 2 * j) as i64) }))
            .unwrap();
        assert_eq!(s.pfaffian_elimination().unwrap(), s.pfaffian_expansion().unwrap());
    }
}
