//! Text format for preference lists and rankings: `(a,b,c)`, with optional
//! whitespace after commas. The empty tuple is written `()`.

use crate::error::{Error, Result};

/// Parses `(3,1,1,3,4,5)` into `vec![3, 1, 1, 3, 4, 5]`.
pub fn parse_tuple(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::MalformedInput(format!("expected (a,b,...), got {s:?}")))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| Error::MalformedInput(format!("bad tuple entry {:?}", part.trim())))
        })
        .collect()
}

/// Formats entries back into the `(a,b,c)` form.
pub fn format_tuple(entries: &[usize]) -> String {
    let parts: Vec<String> = entries.iter().map(|e| e.to_string()).collect();
    format!("({})", parts.join(","))
}
