use thiserror::Error;

/// Failures of a run, each mapped to a process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("capacity exceeded: {0}")]
    Capacity(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
    #[error("{context}: {source}")]
    Core {
        context: String,
        #[source]
        source: relmod::Error,
    },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// 1 for assertion failures, 2 for bad input, 3 for exceeded caps.
    pub fn exit_code(&self) -> i32 {
        use relmod::Error as E;
        match self {
            CliError::Assertion(_) => 1,
            CliError::Input(_) | CliError::Io { .. } => 2,
            CliError::Capacity(_) => 3,
            CliError::Core { source, .. } => match source {
                E::CosetCap { .. } | E::OrbitBound { .. } | E::OrderCap { .. } => 3,
                E::Consistency(_) | E::IncompleteTable | E::NoPrime(_) | E::GroupMismatch => 1,
                _ => 2,
            },
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Attaches task context to core errors.
pub(crate) trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> CliResult<T>;
}

impl<T> Context<T> for relmod::Result<T> {
    fn context(self, what: impl FnOnce() -> String) -> CliResult<T> {
        self.map_err(|source| CliError::Core {
            context: what(),
            source,
        })
    }
}
