//! The lexicographically least de Bruijn sequence, built by concatenating the
//! aperiodic prefixes of the necklaces of length `n` in increasing order, and
//! the circular-window checks that go with it.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};
use crate::generators::NecklaceWalk;
use crate::limits::Limits;
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeBruijnSequence {
    symbols: Vec<i64>,
    order: usize,
    alphabet: Alphabet,
    blocks: Vec<Range<usize>>,
}

impl DeBruijnSequence {
    pub fn symbols(&self) -> &[i64] {
        &self.symbols
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// One range per concatenated aperiodic prefix, tiling `symbols` in order.
    pub fn blocks(&self) -> &[Range<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn block_symbols(&self) -> impl Iterator<Item = &[i64]> {
        self.blocks.iter().map(|r| &self.symbols[r.clone()])
    }

    pub fn as_word(&self) -> Word {
        Word::new(self.symbols.clone(), self.alphabet).expect("symbols come from the alphabet")
    }

    /// Symbols written as integers and concatenated; with a separator,
    /// blocks are joined by it.
    ///
    /// The unseparated form is only unambiguous when every symbol is a
    /// single digit, see [`DeBruijnSequence::needs_separator`].
    pub fn render(&self, separator: Option<char>) -> String {
        let mut out = String::with_capacity(self.symbols.len() + self.blocks.len());
        for (i, block) in self.block_symbols().enumerate() {
            if i > 0 {
                if let Some(sep) = separator {
                    out.push(sep);
                }
            }
            for s in block {
                out.push_str(&s.to_string());
            }
        }
        out
    }

    /// True when some symbol is not one of `0..=9`.
    pub fn needs_separator(&self) -> bool {
        !(0..=9).contains(&self.alphabet.first()) || !(0..=9).contains(&self.alphabet.last())
    }

    /// The `m^n` windows of length `n`, read from the sequence with its own
    /// first `n - 1` symbols appended, in positional order.
    pub fn circular_windows(&self) -> Vec<Word> {
        circular_windows(&self.symbols, self.order)
            .map(|w| Word::new(w.to_vec(), self.alphabet).expect("symbols come from the alphabet"))
            .collect()
    }
}

impl fmt::Display for DeBruijnSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(None))
    }
}

/// `m^n` as a checked integer.
fn word_count(n: usize, m: usize) -> Option<u64> {
    u64::try_from(m).ok()?.checked_pow(u32::try_from(n).ok()?)
}

/// Builds the least de Bruijn sequence of order `n` over `{fn, ..., fn+m-1}`.
pub fn build_de_bruijn(
    n: usize,
    m: usize,
    fn_offset: i64,
    limits: &Limits,
) -> Result<DeBruijnSequence> {
    if n < 1 || m < 1 {
        return Err(Error::positive_n_m());
    }
    let alphabet = Alphabet::new(m, fn_offset)?;
    let total = word_count(n, m);
    if total.is_none_or(|t| t > limits.debruijn_symbols) {
        return Err(Error::ResourceLimit {
            what: "de Bruijn sequence",
            required: total.map_or_else(|| format!("{m}^{n}"), |t| t.to_string()),
            limit: limits.debruijn_symbols,
        });
    }
    let total = total.unwrap() as usize;
    let mut symbols = Vec::with_capacity(total);
    let mut blocks = Vec::new();
    let mut walk = NecklaceWalk::unrestricted(n, m);
    while let Some((necklace, period)) = walk.next_necklace() {
        let start = symbols.len();
        symbols.extend(necklace[..period].iter().map(|&i| alphabet.symbol(i)));
        blocks.push(start..symbols.len());
    }
    debug_assert_eq!(symbols.len(), total);
    Ok(DeBruijnSequence {
        symbols,
        order: n,
        alphabet,
        blocks,
    })
}

/// Windows of length `n` over `s` followed by its first `n - 1` symbols.
fn circular_windows<T: Clone>(s: &[T], n: usize) -> impl Iterator<Item = Vec<T>> + '_ {
    let mut extended = s.to_vec();
    extended.extend(s.iter().cycle().take(n - 1).cloned());
    let count = s.len();
    (0..count).map(move |i| extended[i..i + n].to_vec())
}

/// Why a candidate is not a de Bruijn sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Defect {
    /// Length differs from `m^n`. `expected` is `None` when `m^n` overflows.
    Length {
        expected: Option<u64>,
        actual: usize,
    },
    /// A window occurring at two positions.
    Duplicate {
        window: Word,
        first: usize,
        second: usize,
    },
    /// A word of length `n` that never occurs.
    Missing { window: Word },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Length {
                expected: Some(e),
                actual,
            } => write!(f, "length {actual} differs from the expected {e}"),
            Defect::Length {
                expected: None,
                actual,
            } => {
                write!(
                    f,
                    "length {actual} differs from the expected m^n, which overflows"
                )
            }
            Defect::Duplicate {
                window,
                first,
                second,
            } => {
                write!(
                    f,
                    "window {window} occurs at positions {first} and {second}"
                )
            }
            Defect::Missing { window } => write!(f, "window {window} is missing"),
        }
    }
}

/// Outcome of [`verify_de_bruijn`]. Empty `defects` means the candidate is valid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub defects: Vec<Defect>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.defects.is_empty()
    }
}

/// Checks that `candidate` has length `m^n` (with `m` the arity of its
/// alphabet) and that its circular windows of length `n` are pairwise
/// distinct. On failure reports the first duplicated window and the first
/// missing one.
pub fn verify_de_bruijn(candidate: &Word, n: usize) -> Verification {
    let alphabet = candidate.alphabet();
    let s = candidate.symbols();
    let expected = word_count(n, alphabet.arity());
    if n < 1 || expected != Some(s.len() as u64) {
        return Verification {
            defects: vec![Defect::Length {
                expected,
                actual: s.len(),
            }],
        };
    }

    let mut seen: HashMap<Vec<i64>, usize> = HashMap::with_capacity(s.len());
    let mut defects = Vec::new();
    for (pos, window) in circular_windows(s, n).enumerate() {
        if let Some(&first) = seen.get(&window) {
            if defects.is_empty() {
                defects.push(Defect::Duplicate {
                    window: Word::new(window, alphabet).expect("window of a valid word"),
                    first,
                    second: pos,
                });
            }
        } else {
            seen.insert(window, pos);
        }
    }
    if !defects.is_empty() {
        // as many windows as words, so a repeat forces a gap
        if let Some(missing) = first_missing(&seen, n, alphabet) {
            defects.push(Defect::Missing { window: missing });
        }
    }
    Verification { defects }
}

fn first_missing(seen: &HashMap<Vec<i64>, usize>, n: usize, alphabet: Alphabet) -> Option<Word> {
    let mut digits = vec![0usize; n];
    loop {
        let word: Vec<i64> = digits.iter().map(|&d| alphabet.symbol(d)).collect();
        if !seen.contains_key(&word) {
            return Some(Word::new(word, alphabet).expect("built from the alphabet"));
        }
        // odometer increment
        let mut i = n;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < alphabet.arity() {
                break;
            }
            digits[i] = 0;
        }
    }
}
