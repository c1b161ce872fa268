use crate::complex::ChainMap;
use crate::error::{Error, Result};
use crate::homology::basis::{homology_basis, HomologyBasis, HomologyClass};
use crate::linalg::{invariant_factors, smith_normal_form_with, Matrix, SnfDecomposition, SnfOptions};
use crate::scalar::{EuclideanRing, Int};

/// `f_*` on one degree. `free` is the matrix on the free parts; the
/// images of the torsion generators are kept separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap<T = Int> {
    pub source_degree: usize,
    pub free: Matrix<T>,
    pub torsion_images: Vec<HomologyClass<T>>,
}

fn basis_for<T: EuclideanRing>(bases: &[HomologyBasis<T>], degree: Option<usize>) -> HomologyBasis<T> {
    match degree {
        Some(d) if d < bases.len() => bases[d].clone(),
        Some(d) => HomologyBasis::zero(d),
        None => HomologyBasis::zero(0),
    }
}

/// Matrix of `f_*` from `H_d(source)` to `H_{d+shift}(target)`.
pub fn induced_map_on_homology<T: EuclideanRing>(
    f: &ChainMap<T>,
    d: usize,
    source: &HomologyBasis<T>,
    target: &HomologyBasis<T>,
) -> Result<InducedMap<T>> {
    let m = f.matrix(d);
    let image = |v: &[T]| -> Result<HomologyClass<T>> {
        if target.chain_dim() == 0 {
            return Ok(HomologyClass { free: Vec::new(), torsion: Vec::new() });
        }
        target.reduce(&m.mul_vec(v)).map_err(|_| Error::NotAChainMap {
            name: f.name.clone(),
            detail: format!("image of a cycle in degree {d} is not a cycle"),
        })
    };
    let columns = source.free.iter().map(|g| image(g).map(|c| c.free)).collect::<Result<Vec<_>>>()?;
    let torsion_images = source.torsion.iter().map(|(g, _)| image(g)).collect::<Result<Vec<_>>>()?;
    Ok(InducedMap { source_degree: d, free: Matrix::from_columns(target.betti(), &columns), torsion_images })
}

/// `f_*` in every source degree, using precomputed bases of both complexes.
pub fn induced_maps<T: EuclideanRing>(
    f: &ChainMap<T>,
    source: &[HomologyBasis<T>],
    target: &[HomologyBasis<T>],
) -> Result<Vec<InducedMap<T>>> {
    (0..f.source.num_degrees())
        .map(|d| induced_map_on_homology(f, d, &source[d], &basis_for(target, f.target_degree(d))))
        .collect()
}

/// Convenience wrapper computing the bases on the fly.
pub fn induced_map<T: EuclideanRing>(f: &ChainMap<T>, d: usize) -> Result<InducedMap<T>> {
    let src = homology_basis(&f.source, d);
    let tgt = match f.target_degree(d) {
        Some(t) => homology_basis(&f.target, t),
        None => HomologyBasis::zero(0),
    };
    induced_map_on_homology(f, d, &src, &tgt)
}

fn solver<T: EuclideanRing>(m: &Matrix<T>) -> SnfDecomposition<T> {
    smith_normal_form_with(m, SnfOptions { left: true, right: true, ..SnfOptions::NONE })
}

/// The snake-lemma map `H_n(Q) -> H_{n-1-s}(K)` for `0 -> K -i-> M -j-> Q -> 0`
/// with `i` of degree `s`: lift through `j`, apply `d`, pull back through `i`.
///
/// Every class is also pushed through a second lift (shifted by an element
/// of `im i`) and both results must agree.
pub fn connecting_homomorphism<T: EuclideanRing>(
    i: &ChainMap<T>,
    j: &ChainMap<T>,
    n: usize,
    quotient: &HomologyBasis<T>,
    kernel: &HomologyBasis<T>,
) -> Result<Matrix<T>> {
    let middle = &j.source;
    let Some(kd) = usize::try_from(n as isize - 1 - i.shift).ok().filter(|_| n > 0) else {
        return Ok(Matrix::zeros(0, quotient.betti()));
    };
    let jm = j.matrix(n).to_dense();
    let lift = solver(&jm);
    let im_low = i.matrix(kd).to_dense();
    let pull = solver(&im_low);
    let d = middle.boundary(n);
    let alternative = usize::try_from(n as isize - i.shift)
        .ok()
        .filter(|&k| i.source.dim(k) > 0)
        .map(|k| i.matrix(k).to_dense().column(0));

    let class_of = |y: &[T]| -> Result<HomologyClass<T>> {
        let b = d.mul_vec(y);
        let x = pull
            .solve(&b)
            .ok_or_else(|| Error::NotExact(format!("boundary of a lift does not come from the kernel in degree {n}")))?;
        kernel.reduce(&x)
    };
    let mut columns = Vec::with_capacity(quotient.betti());
    for z in &quotient.free {
        let y = lift.solve(z).ok_or_else(|| Error::NotExact(format!("j is not onto in degree {n}")))?;
        let c = class_of(&y)?;
        if let Some(shift) = &alternative {
            let y2: Vec<T> = y.iter().zip(shift).map(|(a, b)| a.clone() + b.clone()).collect();
            if class_of(&y2)? != c {
                return Err(Error::NotExact(format!("connecting map depends on the lift in degree {n}")));
            }
        }
        columns.push(c.free);
    }
    Ok(Matrix::from_columns(kernel.betti(), &columns))
}

/// Every invariant factor of `f` is one, i.e. its image is a direct summand.
pub fn is_one_free<T: EuclideanRing>(f: &Matrix<T>) -> bool {
    invariant_factors(f).iter().all(|d| d.is_one())
}

/// A sequence of free abelian groups `A_0 -> A_1 -> ... -> A_n`.
#[derive(Clone, Debug)]
pub struct LongExactSequence<T = Int> {
    /// Label and rank of every node.
    pub nodes: Vec<(String, usize)>,
    /// `maps[t] : nodes[t] -> nodes[t + 1]`.
    pub maps: Vec<Matrix<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeExactness {
    pub label: String,
    pub rank: usize,
    pub composite_zero: bool,
    /// `rank(in) + rank(out) = rank(node)`.
    pub rational: bool,
    /// Image of the incoming map is a direct summand.
    pub saturated: bool,
}

impl NodeExactness {
    pub fn is_exact(&self) -> bool {
        self.composite_zero && self.rational && self.saturated
    }
}

/// Exactness at every node, with zero maps in and out at the two ends.
pub fn verify_long_exact<T: EuclideanRing>(seq: &LongExactSequence<T>) -> Vec<NodeExactness> {
    let rank = |m: &Matrix<T>| smith_normal_form_with(m, SnfOptions::NONE).rank();
    seq.nodes
        .iter()
        .enumerate()
        .map(|(t, (label, dim))| {
            let incoming = if t == 0 { Matrix::zeros(*dim, 0) } else { seq.maps[t - 1].clone() };
            let outgoing = seq.maps.get(t).cloned().unwrap_or_else(|| Matrix::zeros(0, *dim));
            let ri = rank(&incoming);
            let ro = rank(&outgoing);
            NodeExactness {
                label: label.clone(),
                rank: *dim,
                composite_zero: (&outgoing * &incoming).is_zero(),
                rational: ri + ro == *dim,
                saturated: invariant_factors(&incoming).iter().all(|d| d.is_one()),
            }
        })
        .collect()
}

/// Homology of the three complexes of `0 -> K -i-> M -j-> Q -> 0` with
/// the induced and connecting maps.
#[derive(Clone, Debug)]
pub struct HomologyLadder<T = Int> {
    pub kernel: Vec<HomologyBasis<T>>,
    pub middle: Vec<HomologyBasis<T>>,
    pub quotient: Vec<HomologyBasis<T>>,
    /// By kernel degree.
    pub i_star: Vec<InducedMap<T>>,
    /// By middle degree.
    pub j_star: Vec<InducedMap<T>>,
    /// By quotient degree.
    pub connecting: Vec<Matrix<T>>,
}

pub fn homology_ladder<T: EuclideanRing>(i: &ChainMap<T>, j: &ChainMap<T>) -> Result<HomologyLadder<T>> {
    let kernel = crate::homology::basis::homology_bases(&i.source);
    let middle = crate::homology::basis::homology_bases(&j.source);
    let quotient = crate::homology::basis::homology_bases(&j.target);
    let i_star = induced_maps(i, &kernel, &middle)?;
    let j_star = induced_maps(j, &middle, &quotient)?;
    let connecting = (0..quotient.len())
        .map(|n| {
            let kd = usize::try_from(n as isize - 1 - i.shift).ok().filter(|_| n > 0);
            connecting_homomorphism(i, j, n, &quotient[n], &basis_for(&kernel, kd))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyLadder { kernel, middle, quotient, i_star, j_star, connecting })
}

impl<T: EuclideanRing> HomologyLadder<T> {
    /// `... -> H_{n-s}(K) -> H_n(M) -> H_n(Q) -> H_{n-1-s}(K) -> ...`,
    /// from the top degree of `M` down to `H_0(Q)`.
    pub fn long_exact_sequence(&self, shift: isize) -> LongExactSequence<T> {
        let betti = |bases: &[HomologyBasis<T>], d: Option<usize>| d.and_then(|d| bases.get(d)).map_or(0, |b| b.betti());
        let kdeg = |n: isize| usize::try_from(n - shift).ok();
        let top = self.middle.len().max(self.quotient.len()).max(self.kernel.len() + shift.max(0) as usize) as isize;
        let mut nodes = Vec::new();
        let mut maps = Vec::new();
        for n in (0..=top).rev() {
            let k = kdeg(n);
            let un = n as usize;
            nodes.push((format!("H{}(K)", k.map_or(-1, |k| k as isize)), betti(&self.kernel, k)));
            nodes.push((format!("H{n}(M)"), betti(&self.middle, Some(un))));
            nodes.push((format!("H{n}(Q)"), betti(&self.quotient, Some(un))));
            let mi = match k.and_then(|k| self.i_star.get(k)) {
                Some(m) => m.free.clone(),
                None => Matrix::zeros(betti(&self.middle, Some(un)), betti(&self.kernel, k)),
            };
            let mj = match self.j_star.get(un) {
                Some(m) => m.free.clone(),
                None => Matrix::zeros(betti(&self.quotient, Some(un)), betti(&self.middle, Some(un))),
            };
            maps.push(mi);
            maps.push(mj);
            if n > 0 {
                let kd = kdeg(n - 1);
                let md = match self.connecting.get(un) {
                    Some(m) if kd.is_some() => m.clone(),
                    _ => Matrix::zeros(betti(&self.kernel, kd), betti(&self.quotient, Some(un))),
                };
                maps.push(md);
            }
        }
        LongExactSequence { nodes, maps }
    }
}
