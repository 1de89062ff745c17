use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    NoVertices,

    #[error("{0} vertices requested, at most 64 are supported")]
    TooManyVertices(usize),

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} occurs in no facet")]
    UnusedVertex(usize),

    #[error("{0:?} is not a face of the complex")]
    NotAFace(Vec<usize>),

    #[error("stellar subdivision needs a face of dimension at least 1, got {0:?}")]
    FaceTooSmall(Vec<usize>),

    #[error("skeleton dimension {k} outside 0..={dim}")]
    SkeletonOutOfRange { k: isize, dim: isize },

    #[error("complex is not pure")]
    NotPure,

    #[error("complex has dimension {0}, at least 1 is required")]
    DimensionTooSmall(isize),

    #[error("monomials live in different rings ({0} vs {1} variables)")]
    LengthMismatch(usize, usize),

    #[error("symbolic powers need an exponent of at least 1")]
    ZeroPower,

    #[error("the unit ideal has no associated complex")]
    UnitIdeal,

    #[error("expected a squarefree monomial ideal")]
    NotSquarefree,

    #[error("degree vector has negative entry at variable {0}")]
    NegativeDegree(usize),

    #[error("brute-force check limited to n <= {bound}, got n = {n}")]
    BruteForceBound { n: usize, bound: usize },

    #[error("search space of {needed} degree vectors exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("unknown field {0:?} (expected Q or F<p> with p prime)")]
    InvalidField(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
