use std::collections::HashMap;
use std::sync::Arc;

use crate::complex::cell::Cell;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, SparseMatrix};
use crate::scalar::{Int, Ring};
use crate::weyl::{GenSet, WeylType};

/// Sign rule for `mu(gamma, s_j)` in the boundary formula.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MuConvention {
    /// `#{ s_i in gamma : i <= j }`.
    #[default]
    Index,
    /// Zero-based ordinal of `s_j` inside `gamma`, i.e. `#{ s_i in gamma : i < j }`.
    Position,
}

impl MuConvention {
    pub fn mu(self, gamma: GenSet, label: usize) -> usize {
        let below = gamma.count_below(label);
        match self {
            MuConvention::Index => below + 1,
            MuConvention::Position => below,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MuConvention::Index => "index",
            MuConvention::Position => "position",
        }
    }
}

impl std::str::FromStr for MuConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "index" => Ok(MuConvention::Index),
            "position" => Ok(MuConvention::Position),
            other => Err(Error::Schema(format!("unknown mu convention `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Salvetti,
    Toric,
}

impl Construction {
    pub fn name(self) -> &'static str {
        match self {
            Construction::Salvetti => "salvetti",
            Construction::Toric => "toric",
        }
    }
}

/// Where a complex came from: the cells `E(w, gamma)` with
/// `required ⊆ gamma ⊆ generators`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ComplexInfo {
    pub kind: WeylType,
    pub construction: Construction,
    pub generators: GenSet,
    pub required: GenSet,
    pub mu: MuConvention,
}

/// Graded free module on cells with boundary maps.
///
/// `boundary[k]` is the matrix of `d_k : C_k -> C_{k-1}` (so `boundary[0]`
/// has zero rows).
#[derive(Clone, Debug)]
pub struct ChainComplex<T = Int> {
    pub info: Option<ComplexInfo>,
    basis: Vec<Vec<Cell>>,
    boundary: Vec<SparseMatrix<T>>,
    index: Vec<HashMap<Cell, usize>>,
}

impl<T: Ring> PartialEq for ChainComplex<T> {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis && self.boundary == other.boundary
    }
}

impl<T: Ring> ChainComplex<T> {
    pub fn new(info: Option<ComplexInfo>, basis: Vec<Vec<Cell>>, boundary: Vec<SparseMatrix<T>>) -> Result<Self> {
        if basis.len() != boundary.len() {
            return Err(Error::Schema(format!("{} degrees but {} boundary maps", basis.len(), boundary.len())));
        }
        for (k, d) in boundary.iter().enumerate() {
            let rows = if k == 0 { 0 } else { basis[k - 1].len() };
            if d.shape() != (rows, basis[k].len()) {
                return Err(Error::Schema(format!(
                    "boundary in degree {k} is {:?}, expected {:?}",
                    d.shape(),
                    (rows, basis[k].len())
                )));
            }
        }
        let index = basis.iter().map(|cells| cells.iter().enumerate().map(|(i, c)| (*c, i)).collect()).collect();
        Ok(Self { info, basis, boundary, index })
    }

    /// The complex with no cells.
    pub fn empty() -> Self {
        Self { info: None, basis: Vec::new(), boundary: Vec::new(), index: Vec::new() }
    }

    /// Number of stored degrees (`0..len`).
    pub fn num_degrees(&self) -> usize {
        self.basis.len()
    }

    pub fn dim(&self, k: usize) -> usize {
        self.basis.get(k).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.basis.iter().map(Vec::len).sum()
    }

    pub fn cells(&self, k: usize) -> &[Cell] {
        self.basis.get(k).map_or(&[], Vec::as_slice)
    }

    pub fn cell_index(&self, k: usize, cell: &Cell) -> Option<usize> {
        self.index.get(k)?.get(cell).copied()
    }

    pub fn boundary_ref(&self, k: usize) -> Option<&SparseMatrix<T>> {
        self.boundary.get(k)
    }

    /// `d_k`, with the zero map outside the stored range.
    pub fn boundary(&self, k: usize) -> SparseMatrix<T> {
        match self.boundary.get(k) {
            Some(d) => d.clone(),
            None => SparseMatrix::zeros(if k == 0 { 0 } else { self.dim(k - 1) }, self.dim(k)),
        }
    }

    pub fn dense_boundary(&self, k: usize) -> Matrix<T> {
        self.boundary(k).to_dense()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.basis.iter().enumerate().map(|(k, c)| if k % 2 == 0 { c.len() as i64 } else { -(c.len() as i64) }).sum()
    }

    /// Checks `d_{k-1} d_k = 0` in every degree.
    pub fn check_boundary_squares(&self) -> Result<()> {
        for k in 2..self.boundary.len() {
            let sq = self.boundary[k - 1].mul(&self.boundary[k]);
            let first = sq.triplets().next().map(|(row, col, v)| (row, col, v.to_string()));
            if let Some((row, col, value)) = first {
                return Err(Error::BoundarySquareNonzero { degree: k, row, col, value });
            }
        }
        Ok(())
    }

    /// Whether every boundary coefficient is `+1` or `-1`.
    pub fn has_unit_boundary(&self) -> bool {
        self.boundary.iter().all(|d| d.triplets().all(|(_, _, v)| v.abs().is_one()))
    }

    /// Keeps only the cells accepted by `keep`; the boundary drops every
    /// term that leaves the kept set.
    pub fn restrict(&self, keep: impl Fn(&Cell) -> bool, info: Option<ComplexInfo>) -> Self {
        let kept: Vec<Vec<usize>> =
            self.basis.iter().map(|cells| (0..cells.len()).filter(|&i| keep(&cells[i])).collect()).collect();
        let basis = kept.iter().zip(&self.basis).map(|(ix, cells)| ix.iter().map(|&i| cells[i]).collect()).collect();
        let boundary = (0..self.basis.len())
            .map(|k| {
                let rows: &[usize] = if k == 0 { &[] } else { &kept[k - 1] };
                self.boundary[k].select(rows, &kept[k])
            })
            .collect();
        Self::new(info, basis, boundary).expect("restriction preserves shapes")
    }
}

/// Degree-shifted map between complexes: `matrices[d]` sends source degree
/// `d` to target degree `d + shift`.
#[derive(Clone, Debug)]
pub struct ChainMap<T = Int> {
    pub name: String,
    pub source: Arc<ChainComplex<T>>,
    pub target: Arc<ChainComplex<T>>,
    pub shift: isize,
    matrices: Vec<SparseMatrix<T>>,
}

fn shifted(d: usize, shift: isize) -> Option<usize> {
    usize::try_from(d as isize + shift).ok()
}

impl<T: Ring> ChainMap<T> {
    pub fn new(
        name: impl Into<String>,
        source: Arc<ChainComplex<T>>,
        target: Arc<ChainComplex<T>>,
        shift: isize,
        matrices: Vec<SparseMatrix<T>>,
    ) -> Result<Self> {
        let name = name.into();
        if matrices.len() != source.num_degrees() {
            return Err(Error::Schema(format!("{name}: {} matrices for {} degrees", matrices.len(), source.num_degrees())));
        }
        for (d, m) in matrices.iter().enumerate() {
            let rows = shifted(d, shift).map_or(0, |t| target.dim(t));
            if m.shape() != (rows, source.dim(d)) {
                return Err(Error::Schema(format!("{name}: matrix in degree {d} has shape {:?}", m.shape())));
            }
        }
        Ok(Self { name, source, target, shift, matrices })
    }

    /// Builds the map column by column: `image(d, col)` lists the
    /// `(row, value)` entries of the image of basis cell `col` in degree `d`.
    pub fn from_fn(
        name: impl Into<String>,
        source: Arc<ChainComplex<T>>,
        target: Arc<ChainComplex<T>>,
        shift: isize,
        image: impl Fn(usize, usize) -> Vec<(usize, T)>,
    ) -> Self {
        let matrices = (0..source.num_degrees())
            .map(|d| {
                let rows = shifted(d, shift).map_or(0, |t| target.dim(t));
                SparseMatrix::from_columns(rows, (0..source.dim(d)).map(|c| image(d, c)).collect())
            })
            .collect();
        Self { name: name.into(), source, target, shift, matrices }
    }

    pub fn identity(complex: Arc<ChainComplex<T>>) -> Self {
        Self::from_fn("id", Arc::clone(&complex), complex, 0, |_, c| vec![(c, T::one())])
    }

    /// Matrix from source degree `d`, zero outside the stored range.
    pub fn matrix(&self, d: usize) -> SparseMatrix<T> {
        match self.matrices.get(d) {
            Some(m) => m.clone(),
            None => SparseMatrix::zeros(shifted(d, self.shift).map_or(0, |t| self.target.dim(t)), self.source.dim(d)),
        }
    }

    pub fn matrices(&self) -> &[SparseMatrix<T>] {
        &self.matrices
    }

    pub fn target_degree(&self, d: usize) -> Option<usize> {
        shifted(d, self.shift)
    }

    pub fn negate(&self) -> Self {
        Self { name: format!("-{}", self.name), matrices: self.matrices.iter().map(|m| m.neg()).collect(), ..self.clone() }
    }

    /// Checks `d^target f = f d^source` in every source degree.
    pub fn check_chain_map(&self) -> Result<()> {
        for d in 0..self.source.num_degrees() {
            let Some(t) = shifted(d, self.shift) else { continue };
            if t == 0 {
                continue;
            }
            let lhs = self.target.boundary(t).mul(&self.matrix(d));
            let rhs = if d == 0 {
                SparseMatrix::zeros(lhs.rows(), lhs.cols())
            } else {
                self.matrix(d - 1).mul(&self.source.boundary(d))
            };
            if lhs != rhs {
                let (row, col) = first_difference(&lhs, &rhs);
                return Err(Error::NotAChainMap {
                    name: self.name.clone(),
                    detail: format!(
                        "source degree {d}, entry ({row}, {col}): d f = {}, f d = {}",
                        lhs.get(row, col),
                        rhs.get(row, col)
                    ),
                });
            }
        }
        Ok(())
    }

    /// `self ∘ first`; `first.target` must be `self.source`.
    pub fn compose(&self, first: &ChainMap<T>) -> Result<ChainMap<T>> {
        if *first.target != *self.source {
            return Err(Error::NotAChainMap {
                name: format!("{} ∘ {}", self.name, first.name),
                detail: "maps are not composable".into(),
            });
        }
        let matrices = (0..first.source.num_degrees())
            .map(|d| match first.target_degree(d) {
                Some(t) => {
                    let m = self.matrix(t).mul(&first.matrix(d));
                    let rows = self.target_degree(t).map_or(0, |u| self.target.dim(u));
                    if m.rows() == rows {
                        m
                    } else {
                        SparseMatrix::zeros(rows, first.source.dim(d))
                    }
                }
                None => {
                    let rows = shifted(d, first.shift + self.shift).map_or(0, |u| self.target.dim(u));
                    SparseMatrix::zeros(rows, first.source.dim(d))
                }
            })
            .collect();
        ChainMap::new(
            format!("{} ∘ {}", self.name, first.name),
            Arc::clone(&first.source),
            Arc::clone(&self.target),
            first.shift + self.shift,
            matrices,
        )
    }
}

pub(crate) fn first_difference<T: Ring>(a: &SparseMatrix<T>, b: &SparseMatrix<T>) -> (usize, usize) {
    for c in 0..a.cols() {
        if a.column(c) != b.column(c) {
            let ra = a.column(c).iter().map(|e| e.0);
            let rb = b.column(c).iter().map(|e| e.0);
            let row = ra.chain(rb).find(|&r| a.get(r, c) != b.get(r, c)).unwrap_or(0);
            return (row, c);
        }
    }
    (0, 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interval() -> ChainComplex<i64> {
        let v = |e| Cell::new(e, GenSet::EMPTY);
        let basis = vec![vec![v(0), v(1)], vec![Cell::new(0, GenSet::single(1))]];
        let boundary = vec![SparseMatrix::zeros(0, 2), SparseMatrix::from_triplets(2, 1, [(0, 0, -1), (1, 0, 1)])];
        ChainComplex::new(None, basis, boundary).unwrap()
    }

    #[test]
    fn shapes_are_validated() {
        let bad = ChainComplex::<i64>::new(None, vec![vec![]], vec![SparseMatrix::zeros(1, 0)]);
        assert!(bad.is_err());
        let c = interval();
        assert_eq!(c.euler_characteristic(), 1);
        assert!(c.check_boundary_squares().is_ok());
        assert!(c.has_unit_boundary());
    }

    #[test]
    fn identity_is_a_chain_map_and_composes() {
        let c = Arc::new(interval());
        let id = ChainMap::identity(Arc::clone(&c));
        id.check_chain_map().unwrap();
        let twice = id.compose(&id).unwrap();
        assert_eq!(twice.matrices(), id.matrices());
    }

    #[test]
    fn collapsing_an_endpoint_is_not_a_chain_map() {
        let c = Arc::new(interval());
        let f = ChainMap::from_fn("bad", Arc::clone(&c), c, 0, |d, col| if d == 0 && col == 1 { vec![] } else { vec![(col, 1)] });
        assert!(matches!(f.check_chain_map(), Err(Error::NotAChainMap { .. })));
    }
}
