use thiserror::Error;

/// Errors raised by the library. Each variant has a stable machine-readable
/// code (see [`Error::code`]) used by the command-line front end.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NonSquare { rows: usize, cols: usize },
    #[error("{0}")]
    DimensionMismatch(String),
    #[error("entry ({row}, {col}) of the expansion is {value}, not an integer")]
    ExpansionNotIntegral {
        row: usize,
        col: usize,
        value: String,
    },
    #[error("partition has {blocks} blocks but the matrix has dimension {dim}")]
    BlockCountMismatch { blocks: usize, dim: usize },
    #[error("polynomial is not monic")]
    NonMonic,
    #[error("{0}")]
    InvalidPartition(String),
    #[error("{0}")]
    InvalidDfa(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("position {position}: {reason}")]
    RegexSyntax { position: usize, reason: String },
    #[error("automaton has no states")]
    EmptyAutomaton,
    #[error("language is empty")]
    EmptyLanguage,
    #[error("{}", not_a_congruence(*.block, *.symbol))]
    NotACongruence { block: usize, symbol: Option<char> },
    #[error("{0}")]
    NotRankOne(String),
    #[error("matrix is zero")]
    ZeroMatrix,
    #[error("matrix has a negative entry")]
    NegativeEntry,
    #[error("exponent must be at least 1")]
    InvalidExponent,
    #[error("word {0:?} is not in the language")]
    WordNotInLanguage(String),
    #[error("index {0} is beyond the last word of the language")]
    IndexOutOfLanguage(String),
    #[error("index bytes have a leading zero byte")]
    MalformedIndexBytes,
}

fn not_a_congruence(block: usize, symbol: Option<char>) -> String {
    match symbol {
        Some(a) => format!("block {block} is not closed under symbol '{a}'"),
        None => format!("block {block} mixes final and non-final states"),
    }
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NonSquare { .. } => "NonSquare",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::ExpansionNotIntegral { .. } => "ExpansionNotIntegral",
            Error::BlockCountMismatch { .. } => "BlockCountMismatch",
            Error::NonMonic => "NonMonic",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::InvalidDfa(_) => "InvalidDfa",
            Error::Parse { .. } => "ParseError",
            Error::RegexSyntax { .. } => "RegexSyntaxError",
            Error::EmptyAutomaton => "EmptyAutomaton",
            Error::EmptyLanguage => "EmptyLanguage",
            Error::NotACongruence { .. } => "NotACongruence",
            Error::NotRankOne(_) => "NotRankOne",
            Error::ZeroMatrix => "ZeroMatrix",
            Error::NegativeEntry => "NegativeEntry",
            Error::InvalidExponent => "InvalidExponent",
            Error::WordNotInLanguage(_) => "WordNotInLanguage",
            Error::IndexOutOfLanguage(_) => "IndexOutOfLanguage",
            Error::MalformedIndexBytes => "MalformedIndexBytes",
        }
    }

    /// Whether the error stems from malformed input (as opposed to a
    /// well-formed request the mathematics rejects).
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse { .. } | Error::RegexSyntax { .. } | Error::InvalidPartition(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
