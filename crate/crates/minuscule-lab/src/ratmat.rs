//! Exact rational linear algebra for small matrices.
//!
//! Everything here works over `BigRational`; no floating point anywhere.
//! Matrices are dense `Vec<Vec<_>>` since ranks never exceed a few dozen.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn from_integers(m: &[Vec<i64>]) -> RatMatrix {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// Invert a square matrix by Gauss-Jordan elimination.
///
/// Panics if the matrix is singular; Cartan matrices of finite type never are.
pub fn invert(m: &RatMatrix) -> RatMatrix {
    let n = m.len();
    let mut a = m.to_vec();
    let mut inv: RatMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot_row = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("singular matrix");
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);

        let pivot = a[col][col].clone();
        for j in 0..n {
            a[col][j] /= pivot.clone();
            inv[col][j] /= pivot.clone();
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for j in 0..n {
                let t = factor.clone() * a[col][j].clone();
                a[r][j] -= t;
                let t = factor.clone() * inv[col][j].clone();
                inv[r][j] -= t;
            }
        }
    }
    inv
}

pub fn mat_vec(m: &RatMatrix, v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(a, b)| a.clone() * b.clone())
                .fold(BigRational::zero(), |acc, x| acc + x)
        })
        .collect()
}

/// Rank of an integer matrix, computed by exact elimination over the rationals.
pub fn rank_int(rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut a = from_integers(rows);
    let ncols = a[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        let Some(pivot) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, pivot);
        let p = a[row][col].clone();
        for j in col..ncols {
            a[row][j] /= p.clone();
        }
        for r in 0..a.len() {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in col..ncols {
                    let t = f.clone() * a[row][j].clone();
                    a[r][j] -= t;
                }
            }
        }
        row += 1;
        rank += 1;
        if row == a.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn invert_a2_cartan() {
        let m = from_integers(&[vec![2, -1], vec![-1, 2]]);
        let inv = invert(&m);
        assert_eq!(inv[0][0], rat(2, 3));
        assert_eq!(inv[0][1], rat(1, 3));
        assert_eq!(inv[1][0], rat(1, 3));
        assert_eq!(inv[1][1], rat(2, 3));
    }

    #[test]
    fn invert_roundtrip_b3() {
        let m = from_integers(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]);
        let inv = invert(&m);
        for i in 0..3 {
            let e: Vec<BigRational> = (0..3)
                .map(|j| if i == j { rat(1, 1) } else { rat(0, 1) })
                .collect();
            let col: Vec<BigRational> = (0..3).map(|r| inv[r][i].clone()).collect();
            assert_eq!(mat_vec(&m, &col), e);
        }
    }

    #[test]
    fn rank_of_relations() {
        // e0 - e1, e1 - e2 span a rank-2 space inside R^3.
        assert_eq!(rank_int(&[vec![1, -1, 0], vec![0, 1, -1]]), 2);
        // Adding the cycle closure e2 - e0 changes nothing.
        assert_eq!(
            rank_int(&[vec![1, -1, 0], vec![0, 1, -1], vec![-1, 0, 1]]),
            2
        );
        assert_eq!(rank_int(&[vec![0, 0], vec![0, 0]]), 0);
    }
}
