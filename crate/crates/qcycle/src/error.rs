use qcycle_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed JSON at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("input matches no known format (expected dot/colon, r, base/alpha or source/target/p keys)")]
    UnknownInput,
    #[error("ambiguous input: keys of {0}")]
    Ambiguous(String),
    #[error("expected {expected} input, found {found}")]
    WrongKind {
        expected: &'static str,
        found: &'static str,
    },
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 1 when the input was well-formed but a property failed, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                Error::CapExceeded { .. }
                | Error::EmptyCarrier
                | Error::OutOfRange { .. }
                | Error::ShapeMismatch { .. }
                | Error::DegreeMismatch { .. }
                | Error::NotAPermutation
                | Error::BudgetExceeded { .. }
                | Error::CongruenceBudgetExceeded { .. } => 2,
                _ => 1,
            },
            _ => 2,
        }
    }
}
