use thiserror::Error;

/// Errors raised by the exact-arithmetic, braiding and group layers.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field tag mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("field order must be positive")]
    ZeroOrder,
    #[error("root order {requested} does not divide the ambient field order {ambient}")]
    OrderNotDividing { requested: u32, ambient: u32 },
    #[error("field too small: sqrt({radicand}) is not in Q(zeta_{order})")]
    FieldTooSmall { radicand: u32, order: u32 },
    #[error("square root of {0} is not supported (only 2, 3, 6)")]
    UnsupportedRadicand(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("phase outside field: no root of unity in Q(zeta_{order}) normalises the determinant")]
    PhaseOutsideField { order: u32 },
    #[error("invalid topological charge {0} (level 4 admits 0..=4)")]
    InvalidCharge(u8),
    #[error("inadmissible fusion labels {0:?}")]
    Inadmissible(Vec<u8>),
    #[error("strand index {index} out of range for {strands} anyons")]
    StrandOutOfRange { index: usize, strands: usize },
    #[error("tree edge {edge} out of range (valid 1..={max})")]
    EdgeOutOfRange { edge: usize, max: usize },
    #[error("fusion space {0} is empty")]
    EmptySpace(String),
    #[error("no Kauffman variable reproduces the sigma_1 generator")]
    NoMatchingConvention,
    #[error("{identity} violated at labels {labels:?}")]
    ConsistencyViolation { identity: &'static str, labels: Vec<u8> },
    #[error("generator {0:?} is not unitary")]
    NotUnitary(String),
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("closure exceeded cap of {cap} elements: group may be infinite or cap too small")]
    CapExceeded { cap: usize },
    #[error("element order exceeds cap {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("coset limit of {limit} exceeded: enumeration inconclusive")]
    CosetLimit { limit: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {0:?} has no matrix assigned")]
    UnassignedGenerator(String),
    #[error("duplicate generator name {0:?}")]
    DuplicateGenerator(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownCatalogEntry(String),
    #[error("empty generator list")]
    EmptyGenerators,
}

pub type Result<T> = std::result::Result<T, Error>;
