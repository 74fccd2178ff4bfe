use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("site {site} out of range for a {register_size}-site register")]
    SiteOutOfRange { site: usize, register_size: usize },

    #[error("site {0} listed more than once")]
    DuplicateSite(usize),

    #[error("expected {expected} entries, found {found}")]
    EntryCount { expected: usize, found: usize },

    #[error("operator arity must be at least 1")]
    ZeroArity,

    #[error("axis is not a unit vector (norm {norm})")]
    NonUnitAxis { norm: f64 },

    #[error("DegenerateEigenvalues: eigenvalues e^(+i theta) and e^(-i theta) coincide at theta = {theta}")]
    DegenerateEigenvalues { theta: f64 },

    #[error("unknown gate name `{0}`")]
    UnknownGate(String),

    #[error("simplex order must be at least 2, got {0}")]
    InvalidOrder(usize),

    #[error("dense mode refused for {sites} sites (limit {limit})")]
    DenseTooLarge { sites: usize, limit: usize },

    #[error("site {0} has no spectral parameter assigned")]
    UnassignedSite(usize),

    #[error("site {site} carries {found} parameters, operator needs {expected}")]
    WrongParameterKind {
        site: usize,
        expected: &'static str,
        found: &'static str,
    },

    #[error("Q family is not noncommuting enough (median commutator norm {0})")]
    CommutingFamily(f64),

    #[error("no entry for mu = {0} in custom Q family")]
    MissingFamilyEntry(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("non-finite entry in operator")]
    NonFinite,

    #[error("malformed operator file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
