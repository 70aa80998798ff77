use std::fmt;

use thiserror::Error;

/// Largest operand count the engine accepts (2^20 channels / table entries).
pub const MAX_OPERANDS: usize = 20;

#[derive(Debug, Error)]
pub enum Error {
    #[error("channel {channel} out of range for {operands} operands")]
    ChannelOutOfRange { channel: usize, operands: usize },
    #[error("stage {stage} out of range 1..={operands}")]
    StageOutOfRange { stage: usize, operands: usize },
    #[error("operand count {0} exceeds the maximum of {MAX_OPERANDS}")]
    TooManyOperands(usize),
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("invalid device parameters: {0}")]
    InvalidParams(String),
    #[error("invalid hex mask: {0}")]
    InvalidHex(String),
    #[error("empty level set")]
    EmptySet,
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("unknown stdlib function `{0}`")]
    UnknownFunction(String),
    #[error("invalid spatial plan: {0}")]
    InvalidPlan(String),
    #[error("invalid wavelengths or bandwidth: {0}")]
    InvalidCapacityInput(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("output `{name}` is not separable: min(high) {min_high:.4e} mW <= max(low) {max_low:.4e} mW")]
    NonSeparable {
        name: String,
        min_high: f64,
        max_low: f64,
    },
    #[error("invalid waveform request: {0}")]
    InvalidWaveform(String),
    #[error("invalid cell grid: {0}")]
    InvalidGrid2d(String),
    #[error("invalid file format: {0}")]
    Format(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Failure while reading a Boolean expression.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    /// Character offset of the offending token (or the end of input).
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    EmptyInput,
    UnexpectedChar(char),
    UnexpectedToken(String),
    UnexpectedEnd,
    UnknownVariable(String),
}

impl ParseError {
    /// Syntax errors are malformed text; unknown variables are well-formed
    /// text naming something that was not declared.
    pub fn is_syntax(&self) -> bool {
        !matches!(self.kind, ParseErrorKind::UnknownVariable(_))
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ParseErrorKind::EmptyInput => write!(f, "empty expression"),
            ParseErrorKind::UnexpectedChar(c) => {
                write!(f, "syntax error at position {}: unexpected character `{c}`", self.position)
            }
            ParseErrorKind::UnexpectedToken(t) => {
                write!(f, "syntax error at position {}: unexpected `{t}`", self.position)
            }
            ParseErrorKind::UnexpectedEnd => {
                write!(f, "syntax error at position {}: unexpected end of expression", self.position)
            }
            ParseErrorKind::UnknownVariable(name) => {
                write!(f, "unknown variable `{name}` at position {}", self.position)
            }
        }
    }
}
