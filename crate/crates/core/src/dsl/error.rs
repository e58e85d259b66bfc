use std::fmt;

use thiserror::Error;

/// 1-based position in source text. Columns count characters, not bytes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pos {
    pub line: usize,
    pub column: usize,
}

impl Pos {
    pub const START: Pos = Pos { line: 1, column: 1 };

    pub fn new(line: usize, column: usize) -> Pos {
        Pos { line, column }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    LexError,
    ParseError,
    UnknownIdentifier,
    TypeMismatch,
    UniverseMismatch,
    NonPositiveScalar,
}

impl ErrorKind {
    pub fn name(self) -> &'static str {
        match self {
            ErrorKind::LexError => "lex error",
            ErrorKind::ParseError => "parse error",
            ErrorKind::UnknownIdentifier => "unknown identifier",
            ErrorKind::TypeMismatch => "type mismatch",
            ErrorKind::UniverseMismatch => "universe mismatch",
            ErrorKind::NonPositiveScalar => "non-positive scalar",
        }
    }

    /// Lexing and parsing problems, as opposed to evaluation failures.
    pub fn is_syntax(self) -> bool {
        matches!(self, ErrorKind::LexError | ErrorKind::ParseError)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{pos}: {}: {message}", kind.name())]
pub struct SourceError {
    pub kind: ErrorKind,
    pub pos: Pos,
    pub message: String,
}

impl SourceError {
    pub fn new(kind: ErrorKind, pos: Pos, message: impl Into<String>) -> Self {
        SourceError {
            kind,
            pos,
            message: message.into(),
        }
    }
}
