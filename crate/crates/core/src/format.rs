//! The instance file format.
//!
//! Text, UTF-8, line oriented: one item per line as `<color-token> <size>`,
//! where the size is a decimal or a `p/q` rational. Lines starting with `#`
//! are comments; blank lines are ignored. This format is the interchange
//! contract for all CLI commands.

use crate::color::{Color, ColorError};
use crate::instance::Instance;
use crate::size::{Size, SizeError};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("expected `<color> <size>`")]
    MalformedLine,
    #[error(transparent)]
    BadColor(#[from] ColorError),
    #[error(transparent)]
    BadSize(#[from] SizeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    let mut items = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |kind: ParseErrorKind| ParseError {
            line: lineno + 1,
            kind,
        };
        let mut fields = line.split_whitespace();
        let (color, size) = match (fields.next(), fields.next(), fields.next()) {
            (Some(color), Some(size), None) => (color, size),
            _ => return Err(err(ParseErrorKind::MalformedLine)),
        };
        let color = Color::new(color).map_err(|e| err(e.into()))?;
        let size = Size::parse(size).map_err(|e| err(e.into()))?;
        items.push((color, size));
    }
    Ok(Instance::new(items))
}

pub fn serialize_instance(instance: &Instance) -> String {
    let mut out = String::new();
    for item in instance.items() {
        out.push_str(item.color.token());
        out.push(' ');
        out.push_str(&item.size.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_a_small_instance() {
        let inst = parse_instance("white 1/2\nblack 1/2\n").unwrap();
        assert_eq!(inst.len(), 2);
        assert_eq!(inst.get(1).unwrap().color, Color::white());
        assert_eq!(inst.get(2).unwrap().size, Size::ratio(1, 2).unwrap());
        assert_eq!(serialize_instance(&inst), "white 1/2\nblack 1/2\n");
    }

    #[test]
    fn accepts_comments_and_blank_lines() {
        let inst = parse_instance("# three zero-size reds\n\nred 0\nred 0\nred 0\n").unwrap();
        assert_eq!(inst.len(), 3);
        assert!(inst.all_zero_size());
    }

    #[test]
    fn reports_size_out_of_range_with_line_number() {
        let err = parse_instance("white 1/2\nwhite 3/2\n").unwrap_err();
        assert_eq!(err.line, 2);
        assert!(matches!(
            err.kind,
            ParseErrorKind::BadSize(SizeError::OutOfRange(_))
        ));
    }

    #[test]
    fn reports_malformed_lines() {
        let err = parse_instance("white\n").unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.kind, ParseErrorKind::MalformedLine);
        let err = parse_instance("white 1/2 extra\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::MalformedLine);
    }

    #[test]
    fn round_trips() {
        let text = "white 1/2\nblack 0\nred 1\nblue 2/7\n";
        let inst = parse_instance(text).unwrap();
        let again = parse_instance(&serialize_instance(&inst)).unwrap();
        assert_eq!(inst, again);
    }
}
