use thiserror::Error;

/// Malformed input: tables of the wrong shape, dangling element references,
/// duplicate names. Always distinct from an axiom failure, which is reported
/// through a [`crate::ValidationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("{what}: expected {expected} entries, found {found}")]
    Shape {
        what: String,
        expected: usize,
        found: usize,
    },
    #[error("{what}: index {index} out of range for carrier of size {size}")]
    OutOfRange {
        what: String,
        index: usize,
        size: usize,
    },
    #[error("unknown element {name:?} in {what}")]
    UnknownElement { what: String, name: String },
    #[error("duplicate element name {0:?}")]
    DuplicateName(String),
    #[error("{0}")]
    Invalid(String),
}

/// A bounded search gave up before reaching a verdict.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error(
        "morphism search exceeded the enumeration bound of {bound} nodes; \
         restrict the search to an additive generating set instead"
    )]
    EnumerationBound { bound: u64 },
    #[error("carrier of size {size} exceeds the configured bound {bound}")]
    CarrierBound { size: usize, bound: usize },
    #[error("free module closure exceeded the cap of {cap} elements (reached {reached})")]
    FreeOverflow { cap: usize, reached: usize },
    #[error("tensor congruence enumeration exceeded the cap of {cap} classes (reached {reached})")]
    TensorOverflow { cap: usize, reached: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// A bilinear map was rejected by one of the congruence generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("map is not balanced bilinear: {generator} violated at {witness}")]
pub struct BilinearityError {
    pub generator: String,
    pub witness: String,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Bilinear(#[from] BilinearityError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
