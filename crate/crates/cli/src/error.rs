use std::path::PathBuf;

use fuzzycover::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot access {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: u64,
        col: usize,
        message: String,
    },
    #[error("value {value} at line {line}, column {col} is outside [0, 1]")]
    Range { line: u64, col: usize, value: f64 },
    #[error("element {0} is not covered: no member reaches 1")]
    NotACovering(String),
    #[error("{0}")]
    Config(String),
    #[error("declared axioms fail: {0}")]
    AxiomFailure(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const IO: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const VALIDATION: i32 = 3;
    pub const DEGENERATE: i32 = 4;
    pub const TOO_LARGE: i32 = 5;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => exit::IO,
            CliError::Parse { .. } => exit::PARSE,
            CliError::Range { .. }
            | CliError::NotACovering(_)
            | CliError::Config(_)
            | CliError::AxiomFailure(_) => exit::VALIDATION,
            CliError::Core(e) => match e {
                CoreError::ZeroUpperCardinality
                | CoreError::DegenerateIdeal
                | CoreError::DegenerateWeights => exit::DEGENERATE,
                CoreError::CoveringTooLarge { .. } => exit::TOO_LARGE,
                _ => exit::VALIDATION,
            },
        }
    }

    /// Short machine-readable name used in error records.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Range { .. } => "range",
            CliError::NotACovering(_) => "not_a_covering",
            CliError::Config(_) => "config",
            CliError::AxiomFailure(_) => "axiom_failure",
            CliError::Core(e) => match e {
                CoreError::ZeroUpperCardinality => "zero_upper_cardinality",
                CoreError::DegenerateIdeal => "degenerate_ideal",
                CoreError::DegenerateWeights => "degenerate_weights",
                CoreError::CoveringTooLarge { .. } => "covering_too_large",
                CoreError::MissingO7 => "missing_o7",
                CoreError::UnknownAggregator(_) => "unknown_aggregator",
                CoreError::UnknownGroup(_) | CoreError::GroupNotInFamily(_) => "unknown_group",
                CoreError::NoUniversalMember => "no_universal_member",
                _ => "validation",
            },
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
