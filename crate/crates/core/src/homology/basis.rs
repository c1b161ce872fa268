use crate::complex::ChainComplex;
use crate::error::{Error, Result};
use crate::linalg::{smith_normal_form_with, Matrix, SnfOptions};
use crate::scalar::{EuclideanRing, Int};

/// Explicit generators of `H_k` and the data to reduce any cycle onto them.
///
/// With `U d_k V = D` (rank `r`) the last columns of `V` span the cycles and
/// the last rows of `V^-1` give coordinates on them. Boundaries in those
/// coordinates are the columns of `X`; with `P X Q = D'` the class of a
/// cycle is read off from `P` times its coordinates.
#[derive(Clone, Debug)]
pub struct HomologyBasis<T = Int> {
    pub degree: usize,
    chain_dim: usize,
    /// `V^-1` (all rows): the first `r` coordinates vanish exactly on cycles.
    v_inv: Matrix<T>,
    rank_out: usize,
    p: Matrix<T>,
    /// Nonzero invariant factors of `X`, in order.
    factors: Vec<T>,
    /// Representatives of the free part.
    pub free: Vec<Vec<T>>,
    /// Representatives of the torsion summands, with their orders.
    pub torsion: Vec<(Vec<T>, T)>,
}

/// Class of a cycle: free coordinates and residues on the torsion generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyClass<T = Int> {
    pub free: Vec<T>,
    pub torsion: Vec<T>,
}

impl<T: EuclideanRing> HomologyClass<T> {
    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(|v| v.is_zero())
    }
}

pub fn homology_basis<T: EuclideanRing>(c: &ChainComplex<T>, k: usize) -> HomologyBasis<T> {
    let n = c.dim(k);
    let right = SnfOptions { right: true, right_inverse: true, ..SnfOptions::NONE };
    let (v, v_inv, r) = if k == 0 || n == 0 {
        (Matrix::identity(n), Matrix::identity(n), 0)
    } else {
        let snf = smith_normal_form_with(&c.dense_boundary(k), right);
        let r = snf.rank();
        (snf.v.expect("right transform"), snf.v_inv.expect("right inverse"), r)
    };
    let z = n - r;
    let x = if c.dim(k + 1) == 0 || z == 0 {
        Matrix::zeros(z, c.dim(k + 1))
    } else {
        let full = &v_inv * &c.dense_boundary(k + 1);
        full.block(r, n, 0, full.cols())
    };
    let left = SnfOptions { left: true, left_inverse: true, ..SnfOptions::NONE };
    let snf = smith_normal_form_with(&x, left);
    let factors = snf.invariant_factors();
    let p = snf.u.expect("left transform");
    let p_inv = snf.u_inv.expect("left inverse");
    let kernel = v.block(0, n, r, n);
    let generator = |i: usize| kernel.mul_vec(&p_inv.column(i));
    let torsion = factors
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_one())
        .map(|(i, d)| (generator(i), d.clone()))
        .collect();
    let free = (factors.len()..z).map(generator).collect();
    HomologyBasis { degree: k, chain_dim: n, v_inv, rank_out: r, p, factors, free, torsion }
}

/// Bases for every stored degree.
pub fn homology_bases<T: EuclideanRing>(c: &ChainComplex<T>) -> Vec<HomologyBasis<T>> {
    (0..c.num_degrees()).map(|k| homology_basis(c, k)).collect()
}

impl<T: EuclideanRing> HomologyBasis<T> {
    /// Basis of the zero group on a zero-dimensional chain module.
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            chain_dim: 0,
            v_inv: Matrix::zeros(0, 0),
            rank_out: 0,
            p: Matrix::zeros(0, 0),
            factors: Vec::new(),
            free: Vec::new(),
            torsion: Vec::new(),
        }
    }

    pub fn betti(&self) -> usize {
        self.free.len()
    }

    pub fn chain_dim(&self) -> usize {
        self.chain_dim
    }

    pub fn is_cycle(&self, v: &[T]) -> bool {
        let y = self.v_inv.mul_vec(v);
        y[..self.rank_out].iter().all(|c| c.is_zero())
    }

    /// Expresses the class of the cycle `v` in this basis.
    pub fn reduce(&self, v: &[T]) -> Result<HomologyClass<T>> {
        assert_eq!(v.len(), self.chain_dim, "chain has the wrong length");
        let y = self.v_inv.mul_vec(v);
        if y[..self.rank_out].iter().any(|c| !c.is_zero()) {
            return Err(Error::NotACycle(self.degree));
        }
        let q = self.p.mul_vec(&y[self.rank_out..]);
        let m = self.factors.len();
        let torsion = self
            .factors
            .iter()
            .zip(&q[..m])
            .filter(|(d, _)| !d.is_one())
            .map(|(d, c)| c.mod_floor(d))
            .collect();
        Ok(HomologyClass { free: q[m..].to_vec(), torsion })
    }
}
