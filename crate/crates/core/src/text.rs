//! The textual form of a symbol: `(a1,a2,...,ak)`, no spaces, base 10.

use std::fmt::Write;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseSymbolError {
    #[error("symbol text must be enclosed in parentheses: {0:?}")]
    MissingParens(String),
    #[error("bad entry {entry:?} in symbol text")]
    BadEntry { entry: String },
}

pub fn format_entries(entries: &[u32]) -> String {
    let mut out = String::with_capacity(2 + entries.len() * 3);
    out.push('(');
    for (i, a) in entries.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{a}").unwrap();
    }
    out.push(')');
    out
}

/// Parses `(a1,...,ak)`. Surrounding whitespace and spaces after commas are
/// tolerated on input; `format_entries` never emits them.
pub fn parse_entries(text: &str) -> Result<Vec<u32>, ParseSymbolError> {
    let t = text.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|s| s.strip_suffix(')'))
        .ok_or_else(|| ParseSymbolError::MissingParens(t.to_string()))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|e| {
            e.trim()
                .parse::<u32>()
                .map_err(|_| ParseSymbolError::BadEntry {
                    entry: e.to_string(),
                })
        })
        .collect()
}
