//! Words over an offset integer alphabet and the rotation / reflection actions
//! on them.
//!
//! Rotation is the left cyclic shift `x1 x2 ... xn -> x2 ... xn x1`. Orbit sets
//! do not depend on the direction, only [`Word::rotate`] does.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// The symbol set `{offset, offset + 1, ..., offset + arity - 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Alphabet {
    arity: usize,
    offset: i64,
}

impl Alphabet {
    pub fn new(arity: usize, offset: i64) -> Result<Self> {
        if arity == 0 {
            return Err(Error::invalid("alphabet arity must be at least 1"));
        }
        if i64::try_from(arity - 1)
            .ok()
            .and_then(|a| offset.checked_add(a))
            .is_none()
        {
            return Err(Error::invalid("alphabet does not fit in 64-bit symbols"));
        }
        Ok(Alphabet { arity, offset })
    }

    /// Smallest alphabet containing every symbol of `symbols`.
    pub fn spanning(symbols: &[i64]) -> Result<Self> {
        let (Some(&low), Some(&high)) = (symbols.iter().min(), symbols.iter().max()) else {
            return Err(Error::invalid("a word needs at least one symbol"));
        };
        let arity = high
            .checked_sub(low)
            .and_then(|d| usize::try_from(d).ok())
            .and_then(|d| d.checked_add(1))
            .ok_or_else(|| Error::invalid("symbol range too wide"))?;
        Alphabet::new(arity, low)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn first(&self) -> i64 {
        self.offset
    }

    pub fn last(&self) -> i64 {
        self.offset + (self.arity as i64 - 1)
    }

    pub fn contains(&self, symbol: i64) -> bool {
        (self.first()..=self.last()).contains(&symbol)
    }

    /// Symbol at zero-based position `index` of the alphabet.
    pub fn symbol(&self, index: usize) -> i64 {
        debug_assert!(index < self.arity);
        self.offset + index as i64
    }

    /// Zero-based position of `symbol`, if it belongs to the alphabet.
    pub fn index_of(&self, symbol: i64) -> Option<usize> {
        self.contains(symbol)
            .then(|| (symbol - self.offset) as usize)
    }

    pub fn symbols(&self) -> impl Iterator<Item = i64> + '_ {
        self.first()..=self.last()
    }
}

/// A non-empty sequence of symbols of a fixed [`Alphabet`].
///
/// Ordering is lexicographic on the symbol values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<i64>,
    alphabet: Alphabet,
}

impl Word {
    pub fn new(symbols: Vec<i64>, alphabet: Alphabet) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::invalid("a word needs at least one symbol"));
        }
        if let Some(&bad) = symbols.iter().find(|&&s| !alphabet.contains(s)) {
            return Err(Error::SymbolOutOfRange {
                symbol: bad,
                low: alphabet.first(),
                high: alphabet.last(),
            });
        }
        Ok(Word { symbols, alphabet })
    }

    /// Word over the smallest alphabet spanning its own symbols.
    pub fn inferred(symbols: Vec<i64>) -> Result<Self> {
        let alphabet = Alphabet::spanning(&symbols)?;
        Word::new(symbols, alphabet)
    }

    /// Builds a word from zero-based alphabet indices.
    pub(crate) fn from_indices(indices: &[usize], alphabet: Alphabet) -> Self {
        debug_assert!(!indices.is_empty());
        Word {
            symbols: indices.iter().map(|&i| alphabet.symbol(i)).collect(),
            alphabet,
        }
    }

    /// Same alphabet, new symbols already known to be valid.
    fn with_symbols(&self, symbols: Vec<i64>) -> Self {
        Word {
            symbols,
            alphabet: self.alphabet,
        }
    }

    pub fn symbols(&self) -> &[i64] {
        &self.symbols
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `sigma^j(w)`: `j` steps of the left cyclic shift, `j` taken modulo the length.
    pub fn rotate(&self, j: i64) -> Word {
        let n = self.len();
        let shift = j.rem_euclid(n as i64) as usize;
        let mut symbols = Vec::with_capacity(n);
        symbols.extend_from_slice(&self.symbols[shift..]);
        symbols.extend_from_slice(&self.symbols[..shift]);
        self.with_symbols(symbols)
    }

    pub fn reflect(&self) -> Word {
        self.with_symbols(self.symbols.iter().rev().copied().collect())
    }

    pub fn rotation_orbit(&self) -> Orbit {
        let members: BTreeSet<Word> = (0..self.len() as i64).map(|j| self.rotate(j)).collect();
        Orbit::from_members(OrbitKind::Rotation, members)
    }

    pub fn dihedral_orbit(&self) -> Orbit {
        let reflected = self.reflect();
        let members: BTreeSet<Word> = (0..self.len() as i64)
            .flat_map(|j| [self.rotate(j), reflected.rotate(j)])
            .collect();
        Orbit::from_members(OrbitKind::Dihedral, members)
    }

    /// Lexicographically smallest member of the orbit of the given kind.
    pub fn canonical(&self, kind: OrbitKind) -> Word {
        match kind {
            OrbitKind::Rotation => self.rotate(least_rotation(&self.symbols) as i64),
            OrbitKind::Dihedral => {
                let a = self.canonical(OrbitKind::Rotation);
                let b = self.reflect().canonical(OrbitKind::Rotation);
                a.min(b)
            }
        }
    }

    pub fn is_canonical(&self, kind: OrbitKind) -> bool {
        match kind {
            OrbitKind::Rotation => is_necklace(&self.symbols),
            OrbitKind::Dihedral => is_bracelet(&self.symbols),
        }
    }

    pub fn periodicity(&self) -> Periodicity {
        let p = smallest_period(&self.symbols);
        Periodicity {
            prefix: self.with_symbols(self.symbols[..p].to_vec()),
            repetitions: self.len() / p,
        }
    }

    pub fn is_aperiodic(&self) -> bool {
        smallest_period(&self.symbols) == self.len()
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols
            .cmp(&other.symbols)
            .then_with(|| self.alphabet.cmp(&other.alphabet))
    }
}

/// Digits run together when every symbol is a single digit, otherwise
/// symbols are comma separated.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let compact = self.symbols.iter().all(|s| (0..=9).contains(s));
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 && !compact {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrbitKind {
    /// Cyclic group: necklaces.
    Rotation,
    /// Dihedral group: bracelets.
    Dihedral,
}

/// An equivalence class of words, members sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    kind: OrbitKind,
    members: Vec<Word>,
}

impl Orbit {
    fn from_members(kind: OrbitKind, members: BTreeSet<Word>) -> Self {
        Orbit {
            kind,
            members: members.into_iter().collect(),
        }
    }

    pub fn kind(&self) -> OrbitKind {
        self.kind
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn representative(&self) -> &Word {
        &self.members[0]
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

/// `w = prefix^repetitions` with `prefix` as short as possible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Periodicity {
    pub prefix: Word,
    pub repetitions: usize,
}

/// Start index of the lexicographically least rotation of `s`.
///
/// Two-candidate scan, linear time. Ties go to the smaller index.
pub fn least_rotation<T: Ord>(s: &[T]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        match s[(i + k) % n].cmp(&s[(j + k) % n]) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i == j {
                    i += 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if i == j {
                    j += 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

/// Length of the shortest `b` with `s = b^r`.
pub fn smallest_period<T: Eq>(s: &[T]) -> usize {
    let n = s.len();
    if n == 0 {
        return 0;
    }
    // prefix function; n - border is the smallest (possibly non-dividing) period
    let mut border = vec![0usize; n];
    for i in 1..n {
        let mut k = border[i - 1];
        while k > 0 && s[i] != s[k] {
            k = border[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        border[i] = k;
    }
    let p = n - border[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// Whether `s` is the least of its rotations.
pub fn is_necklace<T: Ord>(s: &[T]) -> bool {
    compare_with_rotation(s, s, least_rotation(s)) != Ordering::Greater
}

/// Whether `s` is the least word of its dihedral orbit.
pub fn is_bracelet<T: Ord + Clone>(s: &[T]) -> bool {
    if !is_necklace(s) {
        return false;
    }
    let rev: Vec<T> = s.iter().rev().cloned().collect();
    compare_with_rotation(s, &rev, least_rotation(&rev)) != Ordering::Greater
}

/// Compares `a` with the rotation of `b` starting at `shift`.
fn compare_with_rotation<T: Ord>(a: &[T], b: &[T], shift: usize) -> Ordering {
    let rotated = b[shift..].iter().chain(&b[..shift]);
    a.iter().cmp(rotated)
}
