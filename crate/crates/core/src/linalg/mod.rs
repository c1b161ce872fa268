//! Exact linear algebra: dense and sparse matrices, Smith normal form,
//! rank over a field.

pub mod dense;
pub mod rank;
pub mod snf;
pub mod sparse;

pub use dense::Matrix;
pub use rank::{rank_over_field, rational_rank, rational_rank_sparse};
pub use snf::{invariant_factors, smith_normal_form, smith_normal_form_with, SnfDecomposition, SnfOptions};
pub use sparse::SparseMatrix;
