use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// How a failure should be classified by callers such as the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    /// Malformed input text.
    Usage,
    /// Well-formed input outside the domain of an operation.
    Domain,
    /// A computed object contradicts a proven identity: a bug.
    Internal,
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no monic integer-rooted polynomial solves the ratio equation: {0}")]
    NoIntegralSolution(String),
    #[error("rational function is not regular at infinity")]
    NotRegularAtInfinity,
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("rank {rank} exceeds the enumeration bound {bound}")]
    RankTooLarge { rank: usize, bound: usize },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not admissible: {0}")]
    NotAdmissible(String),
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("not a representation of the symmetric group: {0}")]
    NotARepresentation(String),
    #[error("interval [{a}, {b}] does not have nonnegative integral length")]
    BadInterval { a: String, b: String },
    #[error("relation violated: {0}")]
    RelationViolation(String),
    #[error("fundamental index {k} out of range for gl_{n}")]
    BadFundamentalIndex { k: usize, n: usize },
    #[error("quantum determinant does not act by a scalar")]
    NotScalar,
    #[error("negative multiplicity while peeling characters at weight {0:?}")]
    NegativeMultiplicity(Vec<i64>),
    #[error("module dimension {dim} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { dim: usize, bound: usize },
    #[error("irreducibility test inconclusive after {attempts} attempts (seed {seed})")]
    InconclusiveIrreducibility { attempts: usize, seed: u64 },
    #[error("gl_n decomposition mismatch: predicted {predicted}, observed {observed}")]
    DecompositionMismatch { predicted: String, observed: String },
    #[error("negative Schur multiplicity in predicted character: {0}")]
    NegativeCharacter(String),
    #[error("matrix is singular")]
    Singular,
    #[error("invalid module data: {0}")]
    InvalidModule(String),
}

impl Error {
    /// Stable machine-readable code, equal to the variant name.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::NoIntegralSolution(_) => "NoIntegralSolution",
            Error::NotRegularAtInfinity => "NotRegularAtInfinity",
            Error::RankMismatch(..) => "RankMismatch",
            Error::RankTooLarge { .. } => "RankTooLarge",
            Error::NotDominant(_) => "NotDominant",
            Error::NotAdmissible(_) => "NotAdmissible",
            Error::NotIntegral(_) => "NotIntegral",
            Error::SizeMismatch(..) => "SizeMismatch",
            Error::NotARepresentation(_) => "NotARepresentation",
            Error::BadInterval { .. } => "BadInterval",
            Error::RelationViolation(_) => "RelationViolation",
            Error::BadFundamentalIndex { .. } => "BadFundamentalIndex",
            Error::NotScalar => "NotScalar",
            Error::NegativeMultiplicity(_) => "NegativeMultiplicity",
            Error::OracleBoundExceeded { .. } => "OracleBoundExceeded",
            Error::InconclusiveIrreducibility { .. } => "InconclusiveIrreducibility",
            Error::DecompositionMismatch { .. } => "DecompositionMismatch",
            Error::NegativeCharacter(_) => "NegativeCharacter",
            Error::Singular => "Singular",
            Error::InvalidModule(_) => "InvalidModule",
        }
    }

    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Parse(_) => ErrorClass::Usage,
            Error::NotScalar
            | Error::NegativeMultiplicity(_)
            | Error::DecompositionMismatch { .. }
            | Error::NegativeCharacter(_)
            | Error::RelationViolation(_) => ErrorClass::Internal,
            _ => ErrorClass::Domain,
        }
    }
}
