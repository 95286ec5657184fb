use crate::arith::Field;
use crate::error::Result;
use crate::linalg::Matrix;

use super::partition::Partition;

/// `s_μ(x_1, …, x_n)`: the bialternant when the points are distinct,
/// otherwise the sum over semistandard tableaux.
pub fn schur_poly<F: Field>(mu: &Partition, x: &[F]) -> Result<F> {
    let n = x.len();
    if mu.len() > n {
        return Ok(F::zero());
    }
    let vandermonde = Matrix::from_fn(n, n, |i, j| pow(&x[i], n - 1 - j)).det()?;
    if vandermonde.is_zero() {
        return Ok(schur_poly_tableaux(mu, x));
    }
    let alt = Matrix::from_fn(n, n, |i, j| pow(&x[i], mu.part(j) + n - 1 - j)).det()?;
    alt.checked_div(&vandermonde)
}

fn pow<F: Field>(x: &F, e: usize) -> F {
    x.powi(e as i64).expect("nonnegative exponent")
}

/// `Σ_T x^T` over semistandard tableaux of shape `μ` with entries in `1..=n`.
pub fn schur_poly_tableaux<F: Field>(mu: &Partition, x: &[F]) -> F {
    let n = x.len();
    if mu.len() > n {
        return F::zero();
    }
    let boxes: Vec<(usize, usize)> = mu
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &r)| (0..r).map(move |j| (i, j)))
        .collect();
    let width = mu.part(0);
    let mut grid = vec![0usize; mu.len() * width];
    let mut counts = vec![0i64; n];
    let mut acc = F::zero();

    fn rec<F: Field>(
        k: usize,
        boxes: &[(usize, usize)],
        width: usize,
        grid: &mut [usize],
        counts: &mut [i64],
        x: &[F],
        acc: &mut F,
    ) {
        if k == boxes.len() {
            let mut t = F::one();
            for (v, &c) in counts.iter().enumerate() {
                if c > 0 {
                    t = t * &x[v].powi(c).expect("nonnegative exponent");
                }
            }
            *acc = acc.clone() + t;
            return;
        }
        let (i, j) = boxes[k];
        let lo_row = if j > 0 { grid[i * width + j - 1] } else { 0 };
        let lo_col = if i > 0 { grid[(i - 1) * width + j] + 1 } else { 0 };
        for v in lo_row.max(lo_col)..x.len() {
            grid[i * width + j] = v;
            counts[v] += 1;
            rec(k + 1, boxes, width, grid, counts, x, acc);
            counts[v] -= 1;
        }
    }
    rec(0, &boxes, width, &mut grid, &mut counts, x, &mut acc);
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, RationalFn};
    use num_traits::One;
    use num_rational::BigRational;

    #[test]
    fn small_cases() {
        let x = vec![int(2), int(5)];
        assert_eq!(schur_poly(&Partition::new(vec![]).unwrap(), &x).unwrap(), int(1));
        assert_eq!(schur_poly(&Partition::new(vec![1]).unwrap(), &x).unwrap(), int(7));
        // s_{(2,1)}(2,5) = x1 x2 (x1 + x2) = 70
        assert_eq!(schur_poly(&Partition::new(vec![2, 1]).unwrap(), &x).unwrap(), int(70));
    }

    #[test]
    fn coincident_points_fall_back() {
        let ones: Vec<BigRational> = vec![int(1); 3];
        // s_{(2,1)}(1,1,1) = 8
        assert_eq!(schur_poly(&Partition::new(vec![2, 1]).unwrap(), &ones).unwrap(), int(8));
    }

    #[test]
    fn staircase_at_geometric_progression() {
        let q = RationalFn::s();
        let n = 4usize;
        let x: Vec<RationalFn> = (0..n).map(|i| q.powi(i as i64).unwrap()).collect();
        let mu = Partition::new(vec![2, 1]).unwrap();
        let lhs = schur_poly(&mu, &x).unwrap();
        let mut num = RationalFn::one();
        let mut den = RationalFn::one();
        for i in 0..n {
            for j in i + 1..n {
                let e = |k: usize| (mu.part(k) + n - 1 - k) as i64;
                num = num * (q.powi(e(j)).unwrap() - q.powi(e(i)).unwrap());
                den = den * (q.powi((n - 1 - j) as i64).unwrap() - q.powi((n - 1 - i) as i64).unwrap());
            }
        }
        assert_eq!(lhs, num.checked_div(&den).unwrap());
        assert_eq!(schur_poly_tableaux(&mu, &x), lhs);
    }
}
