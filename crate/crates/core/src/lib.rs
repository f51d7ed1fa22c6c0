//! Homotopy posets of finite categories and the obstructions they classify.

pub mod cli;
pub mod fincat;
pub mod homotopy;
pub mod opengraph;
pub mod order;
pub mod setcat;
pub mod states;

use thiserror::Error;

/// A syntax error in one of the line-oriented input formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

/// Any failure of the library, tagged with a stable name.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Category(#[from] fincat::CategoryError),
    #[error(transparent)]
    Homotopy(#[from] homotopy::HomotopyError),
    #[error(transparent)]
    Order(#[from] order::OrderError),
    #[error(transparent)]
    Set(#[from] setcat::SetError),
    #[error(transparent)]
    Graph(#[from] opengraph::GraphError),
    #[error(transparent)]
    States(#[from] states::StatesError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Parse(_) => "ParseError",
            Self::Category(e) => e.name(),
            Self::Homotopy(e) => e.name(),
            Self::Order(e) => e.name(),
            Self::Set(e) => e.name(),
            Self::Graph(e) => e.name(),
            Self::States(e) => e.name(),
            Self::Io { .. } => "IoError",
        }
    }
}
