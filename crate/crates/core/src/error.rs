use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Every variant carries enough context to be
/// rendered as a structured JSON error by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("exponent denominator {denominator} exceeds the configured bound {bound}")]
    DenominatorOverflow { denominator: String, bound: u64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix of size {size} exceeds the determinant size bound {bound}")]
    MatrixTooLarge { size: usize, bound: usize },

    #[error("column vectors are rank deficient: rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },

    #[error("enumeration requires {required} items but the cap is {cap}")]
    CapExceeded { required: u128, cap: u128 },

    #[error("all coordinates are zero")]
    AllZero,

    #[error("basis is singular")]
    SingularBasis,

    #[error("invalid weights: {0}")]
    InvalidWeights(String),

    #[error("input is not trivially valued: {0}")]
    NotTriviallyValued(String),

    #[error("zero set {0} is not a flat of the underlying matroid")]
    NotAFlat(String),

    #[error("hyperfield mismatch: {0}")]
    HyperfieldMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("morphism inconsistent with embeddings: {0}")]
    InconsistentMorphism(String),

    #[error("no applicable embedding for probe {0}")]
    NoApplicableEmbedding(String),

    #[error("family is not compatible: {0}")]
    InconsistentFamily(String),

    #[error("diagonalization failed: {0}")]
    Diagonalization(String),

    #[error("fiber is infinite: {0}")]
    InfiniteFiber(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Syntax { .. } => "syntax",
            Error::DenominatorOverflow { .. } => "denominator_overflow",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::MatrixTooLarge { .. } => "matrix_too_large",
            Error::RankDeficient { .. } => "rank_deficient",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::AllZero => "all_zero",
            Error::SingularBasis => "singular_basis",
            Error::InvalidWeights(_) => "invalid_weights",
            Error::NotTriviallyValued(_) => "not_trivially_valued",
            Error::NotAFlat(_) => "not_a_flat",
            Error::HyperfieldMismatch(_) => "hyperfield_mismatch",
            Error::Invalid(_) => "invalid_input",
            Error::InconsistentMorphism(_) => "inconsistent_morphism",
            Error::NoApplicableEmbedding(_) => "no_applicable_embedding",
            Error::InconsistentFamily(_) => "inconsistent_family",
            Error::Diagonalization(_) => "diagonalization",
            Error::InfiniteFiber(_) => "infinite_fiber",
        }
    }
}
