use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The variants fall into three families that the command line driver maps
/// to distinct exit codes: malformed input, exhausted capacity, and failed
/// internal consistency checks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("generator {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("group order exceeds the cap of {cap}")]
    OrderCap { cap: usize },

    #[error("groups differ")]
    GroupMismatch,

    #[error("unknown catalog entry `{0}`")]
    UnknownAutomorphism(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("marked map is not surjective")]
    NotSurjective,

    #[error("automorphism does not preserve the kernel")]
    NotInGammaR,

    #[error("automorphism does not induce the identity on the quotient")]
    NotInGammaGPi,

    #[error("{0} does not divide {1}")]
    NotDivisor(u64, u64),

    #[error("coset enumeration exceeded {cap} cosets")]
    CosetCap { cap: usize },

    #[error("orbit exceeded its bound of {bound}")]
    OrbitBound { bound: usize },

    #[error("coset table is incomplete")]
    IncompleteTable,

    #[error("no admissible prime below {0}")]
    NoPrime(u64),

    #[error("consistency check failed: {0}")]
    Consistency(String),

    #[error("invalid input: {0}")]
    Input(String),
}

impl Error {
    pub(crate) fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// True for errors caused by exceeding a configured size cap.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::OrderCap { .. } | Error::CosetCap { .. } | Error::OrbitBound { .. }
        )
    }

    /// True for errors that signal a failed internal assertion rather than
    /// bad input.
    pub fn is_assertion(&self) -> bool {
        matches!(self, Error::Consistency(_) | Error::NoPrime(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
