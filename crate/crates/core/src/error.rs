use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("interpolation nodes are not pairwise distinct")]
    RepeatedNodes,

    #[error("interpolation needs as many values as nodes ({nodes} nodes, {values} values)")]
    NodeValueMismatch { nodes: usize, values: usize },

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("invalid composition {parts:?} for ambient n = {n}")]
    InvalidComposition { n: usize, parts: Vec<usize> },

    #[error("invalid subset {members:?} of [{n}]")]
    InvalidSubset { n: usize, members: Vec<usize> },

    #[error("invalid index ordering: {0}")]
    IndexOrder(String),

    #[error("brute-force budget exceeded: {cells} cells > cap {cap}; use a smaller instance")]
    BudgetExceeded { cells: u128, cap: u128 },

    #[error("generator is not a vector of the declared lattice")]
    NotInLattice,

    #[error("cone is not unimodular (|det| = {det}); use the general decomposition")]
    NotUnimodular { det: String },

    #[error("cone is not pointed")]
    NotPointed,

    #[error("unsupported cone dimension {0}")]
    UnsupportedDimension(usize),

    #[error("weight vector must be strictly positive (generic permutohedron), got {0:?}")]
    NonGenericWeights(Vec<u64>),

    #[error("degenerate polygon: {0}")]
    DegeneratePolygon(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
