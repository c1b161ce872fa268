use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported Weyl type `{0}`")]
    UnsupportedType(String),

    #[error("{kind} has {order} elements, above the configured bound of {bound}")]
    GroupTooLarge { kind: String, order: u128, bound: u128 },

    #[error("{0} is affine; only finite types can be enumerated")]
    NotFinite(String),

    #[error("generator s{label} does not exist in {kind}")]
    UnknownGenerator { label: usize, kind: String },

    #[error("subgroup generated by {gamma} has {found} elements, expected {expected}")]
    SubgroupOrderMismatch { gamma: String, found: usize, expected: u128 },

    #[error("generator set {0} does not generate a finite group")]
    InfiniteSubgroup(String),

    #[error("boundary does not square to zero in degree {degree}: entry ({row}, {col}) = {value}")]
    BoundarySquareNonzero { degree: usize, row: usize, col: usize, value: String },

    #[error("{name} is not a chain map: {detail}")]
    NotAChainMap { name: String, detail: String },

    #[error("invalid filtration: {0}")]
    InvalidFiltration(String),

    #[error("vector is not a cycle in degree {0}")]
    NotACycle(usize),

    #[error("exactness violated: {0}")]
    NotExact(String),

    #[error("malformed complex file: {0}")]
    Schema(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
