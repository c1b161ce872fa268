//! Smith normal form over a Euclidean ring.
//!
//! Pivoting always picks the entry of smallest nonzero absolute value in the
//! active submatrix (first in row-major order on ties). Boundary matrices of
//! Salvetti complexes are sparse with unit entries, so this keeps coefficient
//! growth negligible in practice.

use crate::linalg::dense::Matrix;
use crate::scalar::EuclideanRing;

/// Which transformation matrices to accumulate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SnfOptions {
    pub left: bool,
    pub left_inverse: bool,
    pub right: bool,
    pub right_inverse: bool,
}

impl SnfOptions {
    pub const NONE: Self = Self { left: false, left_inverse: false, right: false, right_inverse: false };
    pub const ALL: Self = Self { left: true, left_inverse: true, right: true, right_inverse: true };
}

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal,
/// `d_1 | d_2 | ... | d_r`, all `d_i > 0`.
#[derive(Clone, Debug)]
pub struct SnfDecomposition<T> {
    pub d: Matrix<T>,
    pub u: Option<Matrix<T>>,
    pub u_inv: Option<Matrix<T>>,
    pub v: Option<Matrix<T>>,
    pub v_inv: Option<Matrix<T>>,
    rank: usize,
}

impl<T: EuclideanRing> SnfDecomposition<T> {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<T> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<T> {
        self.invariant_factors().into_iter().filter(|d| !d.is_one()).collect()
    }

    /// Some integer solution of `A x = y`, if one exists. Needs `u` and `v`.
    pub fn solve(&self, y: &[T]) -> Option<Vec<T>> {
        let u = self.u.as_ref().expect("solve needs the left transform");
        let v = self.v.as_ref().expect("solve needs the right transform");
        let z = u.mul_vec(y);
        let mut x = vec![T::zero(); v.rows()];
        for (i, zi) in z.iter().enumerate() {
            if i < self.rank {
                let (q, r) = zi.div_rem(&self.d[(i, i)]);
                if !r.is_zero() {
                    return None;
                }
                x[i] = q;
            } else if !zi.is_zero() {
                return None;
            }
        }
        Some(v.mul_vec(&x))
    }
}

struct Reducer<T> {
    a: Matrix<T>,
    u: Option<Matrix<T>>,
    u_inv: Option<Matrix<T>>,
    v: Option<Matrix<T>>,
    v_inv: Option<Matrix<T>>,
}

impl<T: EuclideanRing> Reducer<T> {
    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        self.a.swap_rows(i, k);
        if let Some(u) = &mut self.u {
            u.swap_rows(i, k);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(i, k);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        self.a.swap_cols(j, k);
        if let Some(v) = &mut self.v {
            v.swap_cols(j, k);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(j, k);
        }
    }

    /// `row[dst] += f * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(u) = &mut self.u {
            u.add_row_multiple(dst, src, f);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.add_col_multiple(src, dst, &-f.clone());
        }
    }

    /// `col[dst] += f * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(v) = &mut self.v {
            v.add_col_multiple(dst, src, f);
        }
        if let Some(vi) = &mut self.v_inv {
            vi.add_row_multiple(src, dst, &-f.clone());
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = &mut self.u {
            u.negate_row(i);
        }
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(i);
        }
    }

    fn smallest_in_submatrix(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), T)> = None;
        for i in t..self.a.rows() {
            for j in t..self.a.cols() {
                let v = &self.a[(i, j)];
                if v.is_zero() {
                    continue;
                }
                let abs = v.abs();
                if abs.is_one() {
                    return Some((i, j));
                }
                if best.as_ref().map_or(true, |(_, b)| abs < *b) {
                    best = Some(((i, j), abs));
                }
            }
        }
        best.map(|(p, _)| p)
    }

    /// Smallest nonzero entry in row `t` or column `t` (from the pivot on).
    fn smallest_on_cross(&self, t: usize) -> (usize, usize) {
        let mut best = ((t, t), self.a[(t, t)].abs());
        let candidates = (t + 1..self.a.rows()).map(|i| (i, t)).chain((t + 1..self.a.cols()).map(|j| (t, j)));
        for (i, j) in candidates {
            let v = &self.a[(i, j)];
            if !v.is_zero() && (best.1.is_zero() || v.abs() < best.1) {
                best = ((i, j), v.abs());
            }
        }
        best.0
    }

    /// Entry of the trailing submatrix not divisible by the pivot.
    fn non_divisible(&self, t: usize) -> Option<usize> {
        let p = &self.a[(t, t)];
        if p.abs().is_one() {
            return None;
        }
        for i in t + 1..self.a.rows() {
            for j in t + 1..self.a.cols() {
                let v = &self.a[(i, j)];
                if !v.is_zero() && !v.is_multiple_of(p) {
                    return Some(i);
                }
            }
        }
        None
    }

    fn run(&mut self) -> usize {
        let (rows, cols) = self.a.shape();
        let mut t = 0;
        while t < rows.min(cols) {
            let Some((pi, pj)) = self.smallest_in_submatrix(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..rows {
                    if self.a[(i, t)].is_zero() {
                        continue;
                    }
                    let q = self.a[(i, t)].div_floor(&self.a[(t, t)]);
                    self.add_row(i, t, &-q);
                    dirty |= !self.a[(i, t)].is_zero();
                }
                for j in t + 1..cols {
                    if self.a[(t, j)].is_zero() {
                        continue;
                    }
                    let q = self.a[(t, j)].div_floor(&self.a[(t, t)]);
                    self.add_col(j, t, &-q);
                    dirty |= !self.a[(t, j)].is_zero();
                }
                if dirty {
                    let (i, j) = self.smallest_on_cross(t);
                    self.swap_rows(t, i);
                    self.swap_cols(t, j);
                    continue;
                }
                match self.non_divisible(t) {
                    Some(i) => self.add_row(t, i, &T::one()),
                    None => break,
                }
            }
            if self.a[(t, t)].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        t
    }
}

/// Smith normal form with all four transformation matrices.
pub fn smith_normal_form<T: EuclideanRing>(a: &Matrix<T>) -> SnfDecomposition<T> {
    smith_normal_form_with(a, SnfOptions::ALL)
}

pub fn smith_normal_form_with<T: EuclideanRing>(a: &Matrix<T>, opts: SnfOptions) -> SnfDecomposition<T> {
    let (rows, cols) = a.shape();
    let mut red = Reducer {
        a: a.clone(),
        u: opts.left.then(|| Matrix::identity(rows)),
        u_inv: opts.left_inverse.then(|| Matrix::identity(rows)),
        v: opts.right.then(|| Matrix::identity(cols)),
        v_inv: opts.right_inverse.then(|| Matrix::identity(cols)),
    };
    let rank = red.run();
    SnfDecomposition { d: red.a, u: red.u, u_inv: red.u_inv, v: red.v, v_inv: red.v_inv, rank }
}

/// Invariant factors only (no transforms).
pub fn invariant_factors<T: EuclideanRing>(a: &Matrix<T>) -> Vec<T> {
    smith_normal_form_with(a, SnfOptions::NONE).invariant_factors()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, Int};

    fn check(a: &Matrix<Int>) -> SnfDecomposition<Int> {
        let s = smith_normal_form(a);
        let (u, v) = (s.u.as_ref().unwrap(), s.v.as_ref().unwrap());
        assert_eq!(&(u * a) * v, s.d);
        assert_eq!(u * s.u_inv.as_ref().unwrap(), Matrix::identity(a.rows()));
        assert_eq!(v * s.v_inv.as_ref().unwrap(), Matrix::identity(a.cols()));
        s
    }

    fn m(rows: Vec<Vec<i64>>) -> Matrix<Int> {
        Matrix::from_rows(rows).map(|v| int(*v))
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&Matrix::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
        assert_eq!(s.u.unwrap(), Matrix::identity(3));
        assert_eq!(s.v.unwrap(), Matrix::identity(3));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&Matrix::zeros(2, 3));
        assert_eq!(s.rank(), 0);
        assert!(s.d.is_zero());
    }

    #[test]
    fn two_by_two_example() {
        let s = check(&m(vec![vec![2, 4], vec![6, 8]]));
        assert_eq!(s.invariant_factors(), vec![int(2), int(4)]);
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) is not in normal form; the answer is diag(1, 6).
        let s = check(&m(vec![vec![2, 0], vec![0, 3]]));
        assert_eq!(s.invariant_factors(), vec![int(1), int(6)]);
    }

    #[test]
    fn empty_dimensions() {
        let s = check(&Matrix::zeros(0, 4));
        assert_eq!(s.rank(), 0);
        assert_eq!(s.v.unwrap(), Matrix::identity(4));
        let s = check(&Matrix::zeros(3, 0));
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn solve_round_trip() {
        let a = m(vec![vec![2, 1, 0], vec![0, 2, 4]]);
        let s = smith_normal_form(&a);
        let y = vec![int(3), int(6)];
        let x = s.solve(&y).expect("solvable");
        assert_eq!(a.mul_vec(&x), y);
        // (1, 1) needs 2x0 + x1 = 1 and 2x1 + 4x2 = 1: parity obstruction.
        assert!(s.solve(&[int(1), int(1)]).is_none());
    }

    #[test]
    fn works_on_machine_integers() {
        let a = Matrix::from_rows(vec![vec![4i64, 6], vec![6, 9], vec![2, 3]]);
        assert_eq!(invariant_factors(&a), vec![1]);
    }
}
