use thiserror::Error;

/// Largest vector space any computation is allowed to build.
pub const SIZE_CAP: usize = 10_000;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("size cap exceeded: {what} needs dimension {dim} > {cap}", cap = SIZE_CAP)]
    SizeCap { what: String, dim: usize },
    #[error("invalid field: {0}")]
    Field(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("relation {relation} fails on {entry}")]
    RelationFailure { entry: String, relation: usize },
    #[error("entries {0} and {1} are isomorphic")]
    DuplicateIso(String, String),
    #[error("Hom-Gram matrix is singular over the rationals")]
    SingularGram,
    #[error("invalid catalog: {0}")]
    InvalidCatalog(String),
    #[error("endomorphism of {0} is not scalar plus nilpotent over the prime field")]
    LambdaMethod(String),
    #[error("catalog is not self-injective")]
    NotSelfInjective,
    #[error("map is not a monomorphism")]
    NotMono,
    #[error("{0}: no decision after the allotted trials")]
    Undetermined(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("factorization bound exceeded ({0})")]
    BoundExceeded(usize),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_cap(what: impl FnOnce() -> String, dim: usize) -> Result<()> {
    if dim > SIZE_CAP {
        Err(Error::SizeCap { what: what(), dim })
    } else {
        Ok(())
    }
}
