use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{kind} `{name}`: unresolved reference to {target_kind} `{target}`")]
    Unresolved {
        kind: &'static str,
        name: String,
        target_kind: &'static str,
        target: String,
    },
    #[error("{kind} `{name}`: {source}")]
    Invalid {
        kind: &'static str,
        name: String,
        #[source]
        source: Box<norphism_core::Error>,
    },
    #[error("{kind} `{name}`: {message}")]
    Malformed {
        kind: &'static str,
        name: String,
        message: String,
    },
    #[error("unknown {kind} `{name}`")]
    UnknownEntity { kind: &'static str, name: String },
    #[error("`{0}` names several entities; prefix it with one of poset:, dp:, norphism:, graph:")]
    Ambiguous(String),
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error(transparent)]
    Core(#[from] norphism_core::Error),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
