//! Color tags.
//!
//! A color is an opaque token. Equality and the (lexicographic) total
//! order on tokens are used only for deterministic tie-breaking, never
//! for packing semantics. The color set is open-ended: instances may
//! introduce arbitrary new colors at any point.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColorError {
    #[error("color token must be non-empty")]
    EmptyToken,
    #[error("color token `{0}` must not contain whitespace")]
    WhitespaceInToken(String),
}

/// An item color, identified by a whitespace-free token.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(String);

impl Color {
    pub fn new(token: impl Into<String>) -> Result<Color, ColorError> {
        let token = token.into();
        if token.is_empty() {
            return Err(ColorError::EmptyToken);
        }
        if token.chars().any(char::is_whitespace) {
            return Err(ColorError::WhitespaceInToken(token));
        }
        Ok(Color(token))
    }

    pub fn token(&self) -> &str {
        &self.0
    }

    pub fn white() -> Color {
        Color("white".to_owned())
    }

    pub fn black() -> Color {
        Color("black".to_owned())
    }

    pub fn red() -> Color {
        Color("red".to_owned())
    }

    pub fn blue() -> Color {
        Color("blue".to_owned())
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}
