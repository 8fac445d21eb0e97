use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum PipelineError {
    #[error("cannot read {path}: {source}")]
    FileUnreadable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: no gauss_code column")]
    NoCodeColumn { path: PathBuf },
    #[error("{path}: {message}")]
    MalformedInput { path: PathBuf, message: String },
    #[error("{path}: bad structure table: {message}")]
    BadTable { path: PathBuf, message: String },
    #[error("cannot write {path}: {source}")]
    OutputUnwritable {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("internal inconsistency on {code}: {source}")]
    Inconsistent {
        code: String,
        #[source]
        source: bridgekit_core::Error,
    },
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("accounting mismatch: {0}")]
    Accounting(String),
}

impl PipelineError {
    /// Process exit status: 1 for bad input, 2 for internal inconsistencies.
    pub fn exit_code(&self) -> i32 {
        match self {
            PipelineError::Inconsistent { .. } | PipelineError::Accounting(_) => 2,
            _ => 1,
        }
    }
}

pub type Result<T, E = PipelineError> = std::result::Result<T, E>;
