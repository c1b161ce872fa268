use std::fmt;

use rayon::prelude::*;

use crate::complex::ChainComplex;
use crate::linalg::{smith_normal_form_with, SnfOptions};
use crate::scalar::{EuclideanRing, Int};

/// `H_k = Z^betti ⊕ Z/t_1 ⊕ ... ⊕ Z/t_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup<T = Int> {
    pub degree: usize,
    pub betti: usize,
    pub torsion: Vec<T>,
}

impl<T: EuclideanRing> HomologyGroup<T> {
    pub fn is_torsion_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl<T: EuclideanRing> fmt::Display for HomologyGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Rank and invariant factors of `d_k`.
fn boundary_data<T: EuclideanRing>(c: &ChainComplex<T>, k: usize) -> (usize, Vec<T>) {
    if k >= c.num_degrees() || c.dim(k) == 0 || k == 0 {
        return (0, Vec::new());
    }
    let snf = smith_normal_form_with(&c.dense_boundary(k), SnfOptions::NONE);
    (snf.rank(), snf.torsion())
}

/// `H_k(c)`; the zero group outside the range of stored degrees.
pub fn homology<T: EuclideanRing>(c: &ChainComplex<T>, k: usize) -> HomologyGroup<T> {
    let (r_out, _) = boundary_data(c, k);
    let (r_in, torsion) = boundary_data(c, k + 1);
    HomologyGroup { degree: k, betti: c.dim(k) - r_out - r_in, torsion }
}

/// Homology in every stored degree, boundary matrices reduced in parallel.
pub fn homology_all<T: EuclideanRing>(c: &ChainComplex<T>) -> Vec<HomologyGroup<T>> {
    let n = c.num_degrees();
    let data: Vec<(usize, Vec<T>)> = (0..=n).into_par_iter().map(|k| boundary_data(c, k)).collect();
    (0..n)
        .map(|k| HomologyGroup { degree: k, betti: c.dim(k) - data[k].0 - data[k + 1].0, torsion: data[k + 1].1.clone() })
        .collect()
}

pub fn betti_numbers<T: EuclideanRing>(groups: &[HomologyGroup<T>]) -> Vec<usize> {
    groups.iter().map(|g| g.betti).collect()
}
