//! Listing formats.
//!
//! `compat` is the bracketed style `[ 0 0 1 1 ]  ( 1 )`, with two spaces before
//! the running index. `lines` prints the count, then one item per line. `json`
//! prints a `{"count": n}` header and one object per item.

use std::io::{self, Write};

use clap::ValueEnum;
use necklace_core::{ContentVector, MultiIndexComposition, Word};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Compat,
    Lines,
    Json,
}

enum Item {
    Sequence(Vec<i64>),
    Terms(Vec<Vec<usize>>),
}

pub struct Listing {
    items: Vec<Item>,
}

impl Listing {
    pub fn words(words: &[Word]) -> Self {
        Listing {
            items: words
                .iter()
                .map(|w| Item::Sequence(w.symbols().to_vec()))
                .collect(),
        }
    }

    pub fn sequences(seqs: &[Vec<i64>]) -> Self {
        Listing {
            items: seqs.iter().cloned().map(Item::Sequence).collect(),
        }
    }

    pub fn compositions(compositions: &[MultiIndexComposition]) -> Self {
        Listing {
            items: compositions
                .iter()
                .map(|c| Item::Terms(c.terms().iter().map(|t| t.parts().to_vec()).collect()))
                .collect(),
        }
    }

    /// Each vector as a list of one-part multi-indexes: `[( 2 )( 2 )]`.
    pub fn counting_vectors(vectors: &[ContentVector]) -> Self {
        Listing {
            items: vectors
                .iter()
                .map(|v| Item::Terms(v.parts().iter().map(|&p| vec![p]).collect()))
                .collect(),
        }
    }

    pub fn write(&self, out: &mut impl Write, format: Format, index: bool) -> io::Result<()> {
        match format {
            Format::Compat => {
                for (k, item) in self.items.iter().enumerate() {
                    let body = match item {
                        Item::Sequence(s) => bracketed(s),
                        Item::Terms(t) => bracketed_terms(t),
                    };
                    if index {
                        writeln!(out, "{body}  ( {} )", k + 1)?;
                    } else {
                        writeln!(out, "{body}")?;
                    }
                }
            }
            Format::Lines => {
                writeln!(out, "{}", self.items.len())?;
                for item in &self.items {
                    match item {
                        Item::Sequence(s) => writeln!(out, "{}", flat(s))?,
                        Item::Terms(t) => {
                            let terms: Vec<String> = t.iter().map(|v| flat(v)).collect();
                            writeln!(out, "{}", terms.join(" "))?
                        }
                    }
                }
            }
            Format::Json => {
                writeln!(out, "{}", json!({ "count": self.items.len() }))?;
                for (k, item) in self.items.iter().enumerate() {
                    let value = match item {
                        Item::Sequence(s) => json!({ "word": s, "index": k + 1 }),
                        Item::Terms(t) => json!({ "terms": t, "index": k + 1 }),
                    };
                    writeln!(out, "{value}")?;
                }
            }
        }
        Ok(())
    }

    pub fn write_count(&self, out: &mut impl Write, format: Format) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", json!({ "count": self.items.len() })),
            Format::Compat | Format::Lines => writeln!(out, "{}", self.items.len()),
        }
    }
}

fn spaced<T: ToString>(values: &[T]) -> String {
    values
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn bracketed<T: ToString>(values: &[T]) -> String {
    format!("[ {} ]", spaced(values))
}

fn bracketed_terms(terms: &[Vec<usize>]) -> String {
    let inner: String = terms.iter().map(|t| format!("( {} )", spaced(t))).collect();
    format!("[{inner}]")
}

/// `0011` when every value is a single digit, else `0,0,11`.
fn flat<T: ToString>(values: &[T]) -> String {
    let parts: Vec<String> = values.iter().map(T::to_string).collect();
    if parts
        .iter()
        .all(|p| p.len() == 1 && p.as_bytes()[0].is_ascii_digit())
    {
        parts.concat()
    } else {
        parts.join(",")
    }
}
