//! Recursive-descent parser for a C subset.
//!
//! Trees use the node kinds of [`nodevec::ast::NodeKind`] and have the same
//! shape pycparser produces for the same source: `switch` bodies are
//! regrouped under their `case` labels, declarators nest outermost-first,
//! and qualifiers and storage classes leave no node.
//!
//! Not supported: preprocessor lines, bit-fields, variadic parameters,
//! designated initializers, and declarators with more than one function
//! derivation (`int (*(*f)(int))(int)`).

use std::fs;
use std::path::{Path, PathBuf};

use nodevec::ast::AstNode;
use thiserror::Error;

mod lexer;
mod parser;

pub use lexer::{tokenize, LexError, Token, TokenCategory, KEYWORDS};
pub use parser::{parse_program, ParseError, Parser};

#[derive(Debug, Error)]
pub enum CParseError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("lexical error at {0}")]
    Lex(#[from] LexError),
    #[error("syntax error at {0}")]
    Parse(#[from] ParseError),
}

impl CParseError {
    /// 1-based line and column of the offending character or token.
    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            CParseError::Io { .. } => None,
            CParseError::Lex(e) => Some((e.line, e.column)),
            CParseError::Parse(e) => Some((e.line, e.column)),
        }
    }
}

pub fn parse_source(source: &str) -> Result<AstNode, CParseError> {
    let tokens = tokenize(source)?;
    Ok(parse_program(&tokens)?)
}

pub fn parse_file(path: impl AsRef<Path>) -> Result<AstNode, CParseError> {
    let path = path.as_ref();
    let source = fs::read_to_string(path).map_err(|source| CParseError::Io {
        path: path.to_owned(),
        source,
    })?;
    parse_source(&source)
}
