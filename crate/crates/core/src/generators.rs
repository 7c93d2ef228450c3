//! Enumeration of canonical representatives.
//!
//! The direct path walks prenecklaces depth first in lexicographic order,
//! extending a prefix `a_1 .. a_{t-1}` (with longest Lyndon prefix length `p`)
//! only by symbols `>= a_{t-p}` that are still available in the requested
//! content. A complete prefix is a necklace iff `p | n`, and a Lyndon word iff
//! `p = n`. Bracelets are the necklaces that are no larger than the least
//! rotation of their reversal.
//!
//! The oracle path materializes every multiset permutation of the content and
//! keeps the words equal to their own canonical form.

use crate::compositions::{counting_vectors, multinomial, ContentVector, MultisetPermutations};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::word::{is_bracelet, Alphabet, OrbitKind, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Necklace,
    Bracelet,
    Lyndon,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scope {
    FixedContent(ContentVector),
    All { length: usize, arity: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GenerationRequest {
    pub mode: Mode,
    pub scope: Scope,
    pub offset: i64,
}

impl GenerationRequest {
    pub fn run(&self) -> Result<RepresentativeList> {
        match (&self.scope, self.mode) {
            (Scope::FixedContent(i), Mode::Necklace) => fixed_content_necklaces(i, self.offset),
            (Scope::FixedContent(i), Mode::Bracelet) => fixed_content_bracelets(i, self.offset),
            (Scope::FixedContent(i), Mode::Lyndon) => fixed_content_lyndon(i, self.offset),
            (&Scope::All { length, arity }, Mode::Necklace) => {
                all_necklaces(length, arity, self.offset)
            }
            (&Scope::All { length, arity }, Mode::Bracelet) => {
                all_bracelets(length, arity, self.offset)
            }
            (&Scope::All { length, arity }, Mode::Lyndon) => {
                lyndon_words(length, arity, self.offset)
            }
        }
    }
}

/// Sorted canonical words together with their count.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RepresentativeList {
    pub count: usize,
    pub words: Vec<Word>,
}

impl RepresentativeList {
    fn from_sorted(words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|w| w[0] < w[1]));
        RepresentativeList {
            count: words.len(),
            words,
        }
    }
}

impl FromIterator<Word> for RepresentativeList {
    fn from_iter<I: IntoIterator<Item = Word>>(iter: I) -> Self {
        RepresentativeList::from_sorted(iter.into_iter().collect())
    }
}

/// Depth-first walk over prenecklaces with an optional content budget.
///
/// Yields every complete prefix whose Lyndon period divides `n`, together
/// with that period, in lexicographic order. Slices hold zero-based symbol
/// indices.
#[derive(Debug, Clone)]
pub struct NecklaceWalk {
    n: usize,
    m: usize,
    /// `a[0]` is a zero sentinel, positions `1..=n` hold the prefix.
    a: Vec<usize>,
    remaining: Vec<usize>,
    stack: Vec<Frame>,
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    /// Lyndon period of the prefix ending just before this position.
    p: usize,
    next: usize,
    placed: bool,
}

impl NecklaceWalk {
    /// All necklaces of length `n` over `m` symbols.
    pub fn unrestricted(n: usize, m: usize) -> Self {
        Self::with_budget(n, vec![n; m])
    }

    /// Necklaces whose symbol `j` occurs exactly `content[j]` times.
    pub fn fixed_content(content: &ContentVector) -> Self {
        Self::with_budget(content.total(), content.parts().to_vec())
    }

    fn with_budget(n: usize, remaining: Vec<usize>) -> Self {
        let m = remaining.len();
        let stack = if n > 0 && m > 0 {
            vec![Frame {
                p: 1,
                next: 0,
                placed: false,
            }]
        } else {
            Vec::new()
        };
        NecklaceWalk {
            n,
            m,
            a: vec![0; n + 1],
            remaining,
            stack,
        }
    }

    /// Advances to the next necklace and returns it with its Lyndon period
    /// (the length of its aperiodic prefix).
    pub fn next_necklace(&mut self) -> Option<(&[usize], usize)> {
        loop {
            let t = self.stack.len();
            let frame = self.stack.last_mut()?;
            if frame.placed {
                self.remaining[self.a[t]] += 1;
                frame.placed = false;
            }
            let mut j = frame.next;
            while j < self.m && self.remaining[j] == 0 {
                j += 1;
            }
            if j >= self.m {
                self.stack.pop();
                continue;
            }
            frame.next = j + 1;
            frame.placed = true;
            self.remaining[j] -= 1;
            self.a[t] = j;
            let p = if j == self.a[t - frame.p] { frame.p } else { t };
            if t == self.n {
                if self.n.is_multiple_of(p) {
                    return Some((&self.a[1..], p));
                }
            } else {
                let next = self.a[t + 1 - p];
                self.stack.push(Frame {
                    p,
                    next,
                    placed: false,
                });
            }
        }
    }

    /// Streams words of the given mode over `alphabet`.
    pub fn words(self, mode: Mode, alphabet: Alphabet) -> Representatives {
        Representatives {
            walk: self,
            mode,
            alphabet,
        }
    }
}

/// Iterator adaptor over a [`NecklaceWalk`] producing [`Word`]s.
#[derive(Debug, Clone)]
pub struct Representatives {
    walk: NecklaceWalk,
    mode: Mode,
    alphabet: Alphabet,
}

impl Iterator for Representatives {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let n = self.walk.n;
        loop {
            let (indices, p) = self.walk.next_necklace()?;
            let keep = match self.mode {
                Mode::Necklace => true,
                Mode::Lyndon => p == n,
                Mode::Bracelet => is_bracelet(indices),
            };
            if keep {
                return Some(Word::from_indices(indices, self.alphabet));
            }
        }
    }
}

fn content_alphabet(i: &ContentVector, fn_offset: i64) -> Result<Alphabet> {
    if i.total() == 0 {
        return Err(Error::invalid("content vector must have a positive total"));
    }
    Alphabet::new(i.len(), fn_offset)
}

fn length_alphabet(n: usize, m: usize, fn_offset: i64) -> Result<Alphabet> {
    if n < 1 || m < 1 {
        return Err(Error::positive_n_m());
    }
    Alphabet::new(m, fn_offset)
}

/// Streaming form of the fixed-content generators.
pub fn fixed_content_stream(
    i: &ContentVector,
    mode: Mode,
    fn_offset: i64,
) -> Result<Representatives> {
    let alphabet = content_alphabet(i, fn_offset)?;
    Ok(NecklaceWalk::fixed_content(i).words(mode, alphabet))
}

/// Streaming form of the fixed-length generators.
pub fn all_stream(n: usize, m: usize, mode: Mode, fn_offset: i64) -> Result<Representatives> {
    let alphabet = length_alphabet(n, m, fn_offset)?;
    Ok(NecklaceWalk::unrestricted(n, m).words(mode, alphabet))
}

/// Necklace representatives of content `i`: symbol `fn + j` occurs `i[j]` times.
pub fn fixed_content_necklaces(i: &ContentVector, fn_offset: i64) -> Result<RepresentativeList> {
    Ok(fixed_content_stream(i, Mode::Necklace, fn_offset)?.collect())
}

pub fn fixed_content_bracelets(i: &ContentVector, fn_offset: i64) -> Result<RepresentativeList> {
    Ok(fixed_content_stream(i, Mode::Bracelet, fn_offset)?.collect())
}

pub fn fixed_content_lyndon(i: &ContentVector, fn_offset: i64) -> Result<RepresentativeList> {
    Ok(fixed_content_stream(i, Mode::Lyndon, fn_offset)?.collect())
}

/// Union of the fixed-content lists over every counting vector of `(n, m)`.
fn union_over_contents(
    n: usize,
    m: usize,
    fn_offset: i64,
    mode: Mode,
) -> Result<RepresentativeList> {
    let alphabet = length_alphabet(n, m, fn_offset)?;
    let mut words = Vec::new();
    for content in counting_vectors(n, m)? {
        words.extend(NecklaceWalk::fixed_content(&content).words(mode, alphabet));
    }
    // the classes are disjoint, so sorting is the whole merge
    words.sort_unstable();
    Ok(RepresentativeList::from_sorted(words))
}

/// All necklace representatives of length `n` over `{fn, ..., fn+m-1}`.
pub fn all_necklaces(n: usize, m: usize, fn_offset: i64) -> Result<RepresentativeList> {
    union_over_contents(n, m, fn_offset, Mode::Necklace)
}

pub fn all_bracelets(n: usize, m: usize, fn_offset: i64) -> Result<RepresentativeList> {
    union_over_contents(n, m, fn_offset, Mode::Bracelet)
}

/// Necklace representatives whose rotation orbit has full size `n`.
pub fn lyndon_words(n: usize, m: usize, fn_offset: i64) -> Result<RepresentativeList> {
    union_over_contents(n, m, fn_offset, Mode::Lyndon)
}

/// Brute-force route: filter all multiset permutations of the content by
/// `canonical(w) == w`. Refuses when there are more than
/// `limits.oracle_permutations` permutations.
pub fn oracle_fixed_content(
    i: &ContentVector,
    fn_offset: i64,
    kind: OrbitKind,
    limits: &Limits,
) -> Result<RepresentativeList> {
    let alphabet = content_alphabet(i, fn_offset)?;
    let required = multinomial(i.parts());
    if required.is_none_or(|r| r > limits.oracle_permutations as u128) {
        return Err(Error::ResourceLimit {
            what: "oracle enumeration",
            required: required.map_or_else(|| "more than 2^128".to_string(), |r| r.to_string()),
            limit: limits.oracle_permutations,
        });
    }
    let start: Vec<i64> = i
        .smallest_arrangement()
        .into_iter()
        .map(|j| alphabet.symbol(j))
        .collect();
    Ok(MultisetPermutations::new(start)
        .map(|symbols| Word::new(symbols, alphabet).expect("symbols come from the alphabet"))
        .filter(|w| w.canonical(kind) == *w)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::counting;
    use num_bigint::BigUint;

    fn cv(parts: &[usize]) -> ContentVector {
        ContentVector::new(parts.to_vec()).unwrap()
    }

    fn strings(list: &RepresentativeList) -> Vec<String> {
        list.words.iter().map(|w| w.to_string()).collect()
    }

    #[test]
    fn fixed_content_necklace_examples() {
        let got = fixed_content_necklaces(&cv(&[2, 1, 1]), 1).unwrap();
        assert_eq!(strings(&got), ["1123", "1132", "1213"]);
        assert_eq!(got.count, 3);
        let got = fixed_content_necklaces(&cv(&[2, 1, 1]), 0).unwrap();
        assert_eq!(strings(&got), ["0012", "0021", "0102"]);
        assert_eq!(
            strings(&fixed_content_necklaces(&cv(&[3, 1]), 0).unwrap()),
            ["0001"]
        );
        assert_eq!(
            strings(&fixed_content_necklaces(&cv(&[1, 3]), 0).unwrap()),
            ["0111"]
        );
        assert_eq!(
            strings(&fixed_content_necklaces(&cv(&[2, 2]), 0).unwrap()),
            ["0011", "0101"]
        );
        assert_eq!(
            strings(&fixed_content_necklaces(&cv(&[0, 4]), 0).unwrap()),
            ["1111"]
        );
        assert_eq!(
            strings(&fixed_content_necklaces(&cv(&[4, 0]), 0).unwrap()),
            ["0000"]
        );
    }

    #[test]
    fn fixed_content_bracelet_examples() {
        let got = fixed_content_bracelets(&cv(&[2, 1, 1]), 1).unwrap();
        assert_eq!(strings(&got), ["1123", "1213"]);
        assert_eq!(
            strings(&fixed_content_bracelets(&cv(&[2, 2]), 0).unwrap()),
            ["0011", "0101"]
        );
        assert_eq!(
            strings(&fixed_content_bracelets(&cv(&[4]), 1).unwrap()),
            ["1111"]
        );
    }

    #[test]
    fn zero_total_is_rejected() {
        assert!(fixed_content_necklaces(&cv(&[0, 0]), 0).is_err());
        assert!(fixed_content_bracelets(&cv(&[0]), 0).is_err());
        assert!(
            oracle_fixed_content(&cv(&[0, 0]), 0, OrbitKind::Rotation, &Limits::default()).is_err()
        );
    }

    #[test]
    fn all_necklaces_examples() {
        let got = all_necklaces(4, 2, 1).unwrap();
        assert_eq!(got.count, 6);
        assert_eq!(
            strings(&got),
            ["1111", "1112", "1122", "1212", "1222", "2222"]
        );
        assert_eq!(all_necklaces(6, 2, 0).unwrap().count, 14);
        assert_eq!(
            strings(&all_necklaces(2, 3, 1).unwrap()),
            ["11", "12", "13", "22", "23", "33"]
        );
        let err = all_necklaces(0, 2, 0).unwrap_err();
        assert_eq!(err.to_string(), "n and m must be positive integers");
        assert!(all_necklaces(3, 0, 0).is_err());
    }

    #[test]
    fn all_bracelets_examples() {
        assert_eq!(all_bracelets(6, 2, 0).unwrap().count, 13);
        assert_eq!(
            strings(&all_bracelets(4, 2, 0).unwrap()),
            ["0000", "0001", "0011", "0101", "0111", "1111"]
        );
        assert_eq!(
            strings(&all_bracelets(1, 4, 3).unwrap()),
            ["3", "4", "5", "6"]
        );
        assert!(all_bracelets(0, 1, 0).is_err());
    }

    #[test]
    fn lyndon_examples() {
        assert_eq!(
            strings(&lyndon_words(3, 3, 1).unwrap()),
            ["112", "113", "122", "123", "132", "133", "223", "233"]
        );
        assert_eq!(
            strings(&lyndon_words(4, 2, 0).unwrap()),
            ["0001", "0011", "0111"]
        );
        assert_eq!(strings(&lyndon_words(1, 3, 0).unwrap()), ["0", "1", "2"]);
    }

    #[test]
    fn request_dispatch() {
        let req = GenerationRequest {
            mode: Mode::Bracelet,
            scope: Scope::FixedContent(cv(&[2, 1, 1])),
            offset: 1,
        };
        assert_eq!(strings(&req.run().unwrap()), ["1123", "1213"]);
        let req = GenerationRequest {
            mode: Mode::Lyndon,
            scope: Scope::FixedContent(cv(&[2, 2])),
            offset: 0,
        };
        assert_eq!(strings(&req.run().unwrap()), ["0011"]);
        let req = GenerationRequest {
            mode: Mode::Necklace,
            scope: Scope::All {
                length: 6,
                arity: 2,
            },
            offset: 0,
        };
        assert_eq!(req.run().unwrap().count, 14);
    }

    #[test]
    fn oracle_examples() {
        let limits = Limits::default();
        let got = oracle_fixed_content(&cv(&[2, 1, 1]), 1, OrbitKind::Rotation, &limits).unwrap();
        assert_eq!(strings(&got), ["1123", "1132", "1213"]);
        let got = oracle_fixed_content(&cv(&[2, 2]), 0, OrbitKind::Rotation, &limits).unwrap();
        assert_eq!(strings(&got), ["0011", "0101"]);
        let got = oracle_fixed_content(&cv(&[1, 3]), 0, OrbitKind::Rotation, &limits).unwrap();
        assert_eq!(strings(&got), ["0111"]);
    }

    #[test]
    fn oracle_respects_limit() {
        let limits = Limits {
            oracle_permutations: 11,
            ..Limits::default()
        };
        let err =
            oracle_fixed_content(&cv(&[2, 1, 1]), 1, OrbitKind::Rotation, &limits).unwrap_err();
        assert!(matches!(err, Error::ResourceLimit { limit: 11, .. }));
        let limits = Limits {
            oracle_permutations: 12,
            ..Limits::default()
        };
        assert!(oracle_fixed_content(&cv(&[2, 1, 1]), 1, OrbitKind::Rotation, &limits).is_ok());
    }

    fn contents_up_to(total: usize, m: usize) -> Vec<ContentVector> {
        (1..=total)
            .flat_map(|n| counting_vectors(n, m).unwrap())
            .collect()
    }

    #[test]
    fn direct_path_matches_oracle() {
        let limits = Limits::default();
        for m in 1..=4 {
            for content in contents_up_to(9, m) {
                for offset in [0, 1] {
                    let direct_n = fixed_content_necklaces(&content, offset).unwrap();
                    let oracle_n =
                        oracle_fixed_content(&content, offset, OrbitKind::Rotation, &limits)
                            .unwrap();
                    assert_eq!(direct_n, oracle_n, "necklaces {content}");
                    let direct_b = fixed_content_bracelets(&content, offset).unwrap();
                    let oracle_b =
                        oracle_fixed_content(&content, offset, OrbitKind::Dihedral, &limits)
                            .unwrap();
                    assert_eq!(direct_b, oracle_b, "bracelets {content}");
                }
            }
        }
    }

    #[test]
    fn union_matches_unrestricted_walk() {
        for (n, m) in [
            (1, 1),
            (1, 5),
            (4, 2),
            (6, 2),
            (5, 3),
            (4, 4),
            (10, 2),
            (3, 7),
        ] {
            for mode in [Mode::Necklace, Mode::Bracelet, Mode::Lyndon] {
                let union = match mode {
                    Mode::Necklace => all_necklaces(n, m, 0),
                    Mode::Bracelet => all_bracelets(n, m, 0),
                    Mode::Lyndon => lyndon_words(n, m, 0),
                }
                .unwrap();
                let direct: RepresentativeList = all_stream(n, m, mode, 0).unwrap().collect();
                assert_eq!(union, direct, "n={n} m={m} {mode:?}");
            }
        }
    }

    #[test]
    fn partition_and_bracelet_relations() {
        for (n, m) in [(4, 2), (6, 2), (7, 2), (5, 3), (6, 3), (4, 4), (12, 2)] {
            let necklaces = all_necklaces(n, m, 0).unwrap();
            let bracelets = all_bracelets(n, m, 0).unwrap();
            let total: usize = necklaces
                .words
                .iter()
                .map(|w| w.rotation_orbit().size())
                .sum();
            assert_eq!(total, m.pow(n as u32));
            let total: usize = bracelets
                .words
                .iter()
                .map(|w| w.dihedral_orbit().size())
                .sum();
            assert_eq!(total, m.pow(n as u32));

            assert!(bracelets.count <= necklaces.count);
            let mut kept = Vec::new();
            for r in &necklaces.words {
                let mirror = r.reflect().canonical(OrbitKind::Rotation);
                assert!(necklaces.words.binary_search(&mirror).is_ok());
                kept.push(r.clone().min(mirror));
            }
            kept.sort();
            kept.dedup();
            assert_eq!(kept, bracelets.words);
        }
    }

    #[test]
    fn lyndon_words_are_strictly_least() {
        for (n, m) in [(6, 2), (5, 3), (4, 4), (8, 2)] {
            let list = lyndon_words(n, m, 0).unwrap();
            assert_eq!(
                BigUint::from(list.count),
                counting::count_lyndon(n, m).unwrap()
            );
            for w in &list.words {
                assert_eq!(w.periodicity().repetitions, 1);
                for j in 1..n as i64 {
                    assert!(*w < w.rotate(j));
                }
            }
        }
    }

    #[test]
    fn binary_necklaces_of_length_20() {
        let list = all_necklaces(20, 2, 0).unwrap();
        assert_eq!(list.count, 52_488);
    }
}
