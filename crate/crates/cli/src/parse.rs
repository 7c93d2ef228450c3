//! Argument parsing for words and integer lists.

use anyhow::{bail, Context, Result};

/// A word written as bare digits (`001101`) or comma separated integers
/// (`0,0,11,-2`). Bare form means one symbol per character.
pub fn symbols(text: &str) -> Result<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        bail!("empty word");
    }
    if text.contains(',') {
        return text
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<i64>()
                    .with_context(|| format!("invalid symbol {s:?} in {text:?}"))
            })
            .collect();
    }
    text.chars()
        .map(|c| {
            c.to_digit(10).map(i64::from).with_context(|| {
                format!("invalid symbol {c:?} in {text:?}; use commas for multi-digit symbols")
            })
        })
        .collect()
}

/// A candidate sequence; whitespace and the optional block separator are dropped.
pub fn sequence(text: &str, separator: Option<char>) -> Result<Vec<i64>> {
    let cleaned: String = text
        .chars()
        .filter(|c| !c.is_whitespace() && Some(*c) != separator)
        .collect();
    symbols(&cleaned)
}

/// `2,1,1`
pub fn unsigned_list(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("expected a non-negative integer, got {s:?}"))
        })
        .collect()
}

/// `n,m`
pub fn pair(text: &str) -> Result<(usize, usize)> {
    match unsigned_list(text)?.as_slice() {
        &[a, b] => Ok((a, b)),
        _ => bail!("expected two integers n,m, got {text:?}"),
    }
}
