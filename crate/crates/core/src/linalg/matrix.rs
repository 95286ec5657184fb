use crate::arith::Field;
use crate::error::{Error, Result};

/// Dense row-major matrix over a field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn try_from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> Result<F>,
    ) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j)?);
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(Self::from_fn(self.rows, o.cols, |i, j| {
            let terms = (0..self.cols).map(|k| (1, vec![self.get(i, k), o.get(k, j)]));
            F::sum_products(terms)
        }))
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    fn require_square(&self) -> Result<usize> {
        if self.rows != self.cols {
            return Err(Error::Dimension(format!("{}x{} is not square", self.rows, self.cols)));
        }
        Ok(self.rows)
    }

    /// Determinant; uses the permutation expansion for small sizes and
    /// elimination otherwise.
    pub fn det(&self) -> Result<F> {
        let n = self.require_square()?;
        if n <= 4 {
            self.det_leibniz()
        } else {
            self.det_elimination()
        }
    }

    /// Gaussian elimination over the field with nonzero pivoting.
    pub fn det_elimination(&self) -> Result<F> {
        let n = self.require_square()?;
        let mut a = self.data.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Ok(F::zero());
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let pivot = a[col * n + col].clone();
            det = det * &pivot;
            let pinv = pivot.inv()?;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = a[r * n + col].clone() * &pinv;
                for j in col + 1..n {
                    let v = a[r * n + j].clone() - factor.clone() * &a[col * n + j];
                    a[r * n + j] = v;
                }
            }
        }
        Ok(det)
    }

    /// `Σ_σ sgn σ Π_i a_{i,σ(i)}`; an independent oracle for small sizes.
    pub fn det_leibniz(&self) -> Result<F> {
        let n = self.require_square()?;
        if n > 8 {
            return Err(Error::SizeGuard { what: "permutation expansion size".into(), limit: 8 });
        }
        let perms = permutations(n);
        let terms = perms.iter().map(|(p, sign)| (*sign, (0..n).map(|i| self.get(i, p[i])).collect()));
        Ok(F::sum_products(terms))
    }
}

/// All permutations of `0..n` with their signs, in lexicographic order.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        if cur.len() == n {
            out.push((cur.clone(), perm_sign(cur)));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut cur, &mut used, &mut out);
    out
}

pub fn perm_sign(p: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use num_rational::BigRational;

    #[test]
    fn identity_and_vandermonde() {
        assert_eq!(Matrix::<BigRational>::identity(3).det().unwrap(), int(1));
        let v = Matrix::from_fn(3, 3, |i, j| int((i as i64 + 1).pow(j as u32)));
        assert_eq!(v.det().unwrap(), int(2));
        assert_eq!(v.det_elimination().unwrap(), int(2));
    }

    #[test]
    fn elimination_matches_expansion() {
        let m = Matrix::from_fn(5, 5, |i, j| rat((i * 7 + j * 3 + 1) as i64 % 11 - 5, (i + j + 1) as i64));
        assert_eq!(m.det_elimination().unwrap(), m.det_leibniz().unwrap());
    }
}
