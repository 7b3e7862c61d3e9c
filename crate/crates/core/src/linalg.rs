//! Dense Gaussian elimination over an exact [`Field`].

use crate::field::Field;

/// Rank of a dense matrix given as rows. Rows may be empty.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = F::one() / rows[rank][col].clone();
        for c in col..ncols {
            rows[rank][c] = rows[rank][c].clone() * inv.clone();
        }
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..ncols {
                let sub = factor.clone() * rows[rank][c].clone();
                rows[r][c] = rows[r][c].clone() - sub;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square matrix.
pub fn determinant<F: Field>(mut rows: Vec<Vec<F>>) -> F {
    let n = rows.len();
    assert!(
        rows.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return F::zero();
        };
        if pivot != col {
            rows.swap(col, pivot);
            det = -det;
        }
        let p = rows[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() / p.clone();
            for c in col..n {
                let sub = factor.clone() * rows[col][c].clone();
                rows[r][c] = rows[r][c].clone() - sub;
            }
        }
    }
    det
}

/// Convert an integer matrix into field entries.
pub fn from_integers<F: Field>(rows: &[Vec<i64>]) -> Vec<Vec<F>> {
    rows.iter()
        .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Fp, Rational};

    #[test]
    fn rank_of_k3_exponents() {
        let m = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(rank(from_integers::<Rational>(&m)), 3);
        // Over F_2 the three rows sum to zero.
        assert_eq!(rank(from_integers::<crate::F2>(&m)), 2);
    }

    #[test]
    fn rank_of_empty_and_zero() {
        assert_eq!(rank::<Fp>(vec![]), 0);
        assert_eq!(rank(from_integers::<Fp>(&[vec![0, 0], vec![0, 0]])), 0);
    }

    #[test]
    fn determinant_small() {
        let m = vec![vec![2, 1], vec![1, 3]];
        assert_eq!(
            determinant(from_integers::<Rational>(&m)),
            Rational::from_i64(5)
        );
        let m = vec![vec![0, 1], vec![1, 0]];
        assert_eq!(
            determinant(from_integers::<Rational>(&m)),
            Rational::from_i64(-1)
        );
    }
}
