use crate::linalg::dense::Matrix;
use crate::linalg::sparse::SparseMatrix;
use crate::scalar::{Field, Int, Rational};

/// Rank by Gaussian elimination over an exact field.
pub fn rank_over_field<F: Field>(m: &Matrix<F>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[(r, c)].is_zero()) else { continue };
        a.swap_rows(rank, p);
        let pivot = a[(rank, c)].clone();
        for r in rank + 1..rows {
            if a[(r, c)].is_zero() {
                continue;
            }
            let f = -(a[(r, c)].clone() / pivot.clone());
            a.add_row_multiple(r, rank, &f);
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Rank over the rationals of an integer matrix.
pub fn rational_rank(m: &Matrix<Int>) -> usize {
    rank_over_field(&m.map(|v| Rational::from_integer(v.clone())))
}

pub fn rational_rank_sparse(m: &SparseMatrix<Int>) -> usize {
    rational_rank(&m.to_dense())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn ranks() {
        let m = Matrix::from_rows(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]).map(|v: &i64| int(*v));
        assert_eq!(rational_rank(&m), 2);
        assert_eq!(rational_rank(&Matrix::zeros(0, 5)), 0);
        assert_eq!(rank_over_field(&Matrix::from_rows(vec![vec![2.0f64, 0.0], vec![0.0, 3.0]])), 2);
    }
}
