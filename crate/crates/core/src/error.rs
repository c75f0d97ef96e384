use crate::exactlin::LinError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("relation {0} is not length-homogeneous or mixes endpoints")]
    NonHomogeneousRelation(usize),
    #[error("algebra has a nonzero component in degree {0}; ideal not admissible within the cap")]
    CapExceeded(usize),
    #[error("algebra dimension exceeds {0}")]
    DimensionCapExceeded(usize),
    #[error("operation requires a quiver-presented algebra")]
    NotQuiverPresented,
    #[error("algebra is not basic")]
    NotBasic,
    #[error("representation violates relation {0}")]
    RelationViolated(usize),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("submodule is not contained in the module")]
    NotNested,
    #[error("could not split module over the rationals: {0}")]
    NonSplitInput(String),
    #[error("unsupported algebra shape: {0}")]
    WrongShape(String),
    #[error("{0} vertices exceed the search bound {1}")]
    TooManyVertices(usize, usize),
    #[error("global dimension {0} exceeds two")]
    GlobalDimensionTooLarge(String),
    #[error("resolution did not terminate within cap {0}")]
    Undetermined(usize),
    #[error("chain is not right- or left-strongly heredity")]
    NotStrongChain,
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid order: {0}")]
    InvalidOrder(String),
    #[error("internal consistency check failed: {0}")]
    InternalDefect(String),
    #[error(transparent)]
    Lin(#[from] LinError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
