use crate::complex::chain::{first_difference, ChainMap};
use crate::error::Result;
use crate::linalg::{smith_normal_form_with, Matrix, SnfOptions, SparseMatrix};
use crate::scalar::EuclideanRing;

fn rank<T: EuclideanRing>(m: &Matrix<T>) -> usize {
    smith_normal_form_with(m, SnfOptions::NONE).rank()
}

/// Whether the column span of `m` is a direct summand (all invariant factors one).
pub(crate) fn saturated<T: EuclideanRing>(m: &Matrix<T>) -> bool {
    smith_normal_form_with(m, SnfOptions::NONE).torsion().is_empty()
}

/// Exactness data of `0 -> K -> M -> Q -> 0` in one degree of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeExactness {
    pub degree: usize,
    pub kernel_dim: usize,
    pub middle_dim: usize,
    pub quotient_dim: usize,
    pub injective: bool,
    pub surjective: bool,
    pub image_is_kernel: bool,
}

impl DegreeExactness {
    pub fn is_exact(&self) -> bool {
        self.injective && self.surjective && self.image_is_kernel
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortExactReport {
    pub degrees: Vec<DegreeExactness>,
}

impl ShortExactReport {
    pub fn is_exact(&self) -> bool {
        self.degrees.iter().all(DegreeExactness::is_exact)
    }

    pub fn first_failure(&self) -> Option<&DegreeExactness> {
        self.degrees.iter().find(|d| !d.is_exact())
    }
}

/// Checks injectivity of `i`, surjectivity of `j` and `im i = ker j`
/// degreewise. The last one is tested as `j i = 0`, matching ranks, and
/// `im i` being a direct summand.
pub fn verify_short_exact<T: EuclideanRing>(i: &ChainMap<T>, j: &ChainMap<T>) -> ShortExactReport {
    let middle = &j.source;
    let degrees = (0..middle.num_degrees())
        .map(|n| {
            let source_degree = usize::try_from(n as isize - i.shift).ok();
            let im = match source_degree {
                Some(d) if d < i.source.num_degrees() => i.matrix(d).to_dense(),
                _ => Matrix::zeros(middle.dim(n), 0),
            };
            let jm = j.matrix(n).to_dense();
            let ri = rank(&im);
            let rj = rank(&jm);
            let composite_zero = (&jm * &im).is_zero();
            DegreeExactness {
                degree: n,
                kernel_dim: im.cols(),
                middle_dim: middle.dim(n),
                quotient_dim: jm.rows(),
                injective: ri == im.cols(),
                surjective: rj == jm.rows(),
                image_is_kernel: composite_zero && ri + rj == middle.dim(n) && saturated(&im),
            }
        })
        .collect();
    ShortExactReport { degrees }
}

/// First disagreement of a square, as `(source degree, row, col)`.
pub type SquareWitness = (usize, usize, usize);

/// Compares `right ∘ top` with `bottom ∘ left` in every degree.
pub fn square_difference<T: EuclideanRing>(
    top: &ChainMap<T>,
    bottom: &ChainMap<T>,
    left: &ChainMap<T>,
    right: &ChainMap<T>,
) -> Result<Option<SquareWitness>> {
    let a = right.compose(top)?;
    let b = bottom.compose(left)?;
    if a.shift != b.shift || *a.target != *b.target {
        return Ok(Some((0, 0, 0)));
    }
    for d in 0..a.source.num_degrees() {
        let (ma, mb): (SparseMatrix<T>, SparseMatrix<T>) = (a.matrix(d), b.matrix(d));
        if ma != mb {
            let (r, c) = first_difference(&ma, &mb);
            return Ok(Some((d, r, c)));
        }
    }
    Ok(None)
}

pub fn verify_square_commutes<T: EuclideanRing>(
    top: &ChainMap<T>,
    bottom: &ChainMap<T>,
    left: &ChainMap<T>,
    right: &ChainMap<T>,
) -> bool {
    matches!(square_difference(top, bottom, left, right), Ok(None))
}
