use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("malformed rational {0:?}")]
    BadNumber(String),
    #[error("zero normal vector")]
    ZeroNormal,
    #[error("zero generator at index {0}")]
    ZeroGenerator(usize),
    #[error("not full-dimensional: generators do not span 3-space")]
    NotFullDimensional,
    #[error("zero volume")]
    ZeroVolume,
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("invalid polygon: {0}")]
    InvalidPolygon(String),
    #[error("not belt-admissible: {0}")]
    NotBeltAdmissible(String),
    #[error("no edge with index {0}")]
    NoSuchEdge(usize),
    #[error("unclassifiable: passes the belt criterion but facet signature {0} is not one of the five parallelohedra")]
    Unclassifiable(String),
    #[error("singular basis (determinant 0)")]
    SingularBasis,
    #[error("candidate box of radius {0} did not bound the Voronoi cell")]
    CandidateBoxTooSmall(i64),
    #[error("not locally tiling at v: {0}")]
    NotLocallyTiling(String),
    #[error("cannot verify unbounded multiset: a period lattice is required")]
    UnboundedMultiset,
    #[error("middle-index range empty for m = {0}; no contradiction derivable here")]
    MiddleRangeEmpty(u64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0}")]
    Document(String),
}

pub type Result<T, E = GeomError> = std::result::Result<T, E>;
