//! Multiset permutations, compositions of a multi-index into a fixed number of
//! multi-indexes, and counting vectors (weak compositions of an integer).

use std::fmt;

use crate::error::{Error, Result};

/// Multiplicities `(i_1, ..., i_m)` of the symbols of an `m`-letter alphabet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ContentVector {
    parts: Vec<usize>,
}

impl ContentVector {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid("a content vector needs at least one part"));
        }
        Ok(ContentVector { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of parts `m`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `n = i_1 + ... + i_m`.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Content of a word given by zero-based symbol indices.
    pub fn of_indices(indices: &[usize], arity: usize) -> Self {
        let mut parts = vec![0; arity];
        for &i in indices {
            parts[i] += 1;
        }
        ContentVector { parts }
    }

    /// The sorted sequence of zero-based indices with this content.
    pub fn smallest_arrangement(&self) -> Vec<usize> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &c)| std::iter::repeat_n(i, c))
            .collect()
    }
}

impl fmt::Display for ContentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for p in &self.parts {
            write!(f, " {p}")?;
        }
        f.write_str(" )")
    }
}

/// Ordered terms `(v_1, ..., v_n)` summing componentwise to a target.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndexComposition {
    terms: Vec<ContentVector>,
}

impl MultiIndexComposition {
    pub fn terms(&self) -> &[ContentVector] {
        &self.terms
    }

    /// Componentwise sum of the terms.
    pub fn sum(&self) -> Vec<usize> {
        let m = self.terms[0].len();
        let mut acc = vec![0; m];
        for t in &self.terms {
            for (a, p) in acc.iter_mut().zip(t.parts()) {
                *a += p;
            }
        }
        acc
    }
}

/// `[( a b )( c d )]`
impl fmt::Display for MultiIndexComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for t in &self.terms {
            write!(f, "{t}")?;
        }
        f.write_str("]")
    }
}

/// Distinct orderings of a multiset, in lexicographic order.
///
/// Starts from the sorted arrangement and steps with the classic
/// next-permutation successor, which never revisits an ordering when
/// entries repeat.
#[derive(Debug, Clone)]
pub struct MultisetPermutations<T> {
    current: Option<Vec<T>>,
}

impl<T: Ord + Clone> MultisetPermutations<T> {
    pub fn new(mut items: Vec<T>) -> Self {
        items.sort();
        MultisetPermutations {
            current: (!items.is_empty()).then_some(items),
        }
    }
}

impl<T: Ord + Clone> Iterator for MultisetPermutations<T> {
    type Item = Vec<T>;

    fn next(&mut self) -> Option<Vec<T>> {
        let current = self.current.as_mut()?;
        let out = current.clone();
        if !next_permutation(current) {
            self.current = None;
        }
        Some(out)
    }
}

/// Rearranges `s` into its lexicographic successor. Returns false when `s`
/// is already the last arrangement.
pub fn next_permutation<T: Ord>(s: &mut [T]) -> bool {
    let n = s.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

/// All distinct orderings of `values`, lexicographically sorted.
pub fn multiset_permutations(values: &[i64]) -> Result<Vec<Vec<i64>>> {
    if values.is_empty() {
        return Err(Error::invalid("cannot permute an empty vector"));
    }
    Ok(MultisetPermutations::new(values.to_vec()).collect())
}

/// `n! / (c_1! c_2! ...)`, or `None` on `u128` overflow.
pub fn multinomial(multiplicities: &[usize]) -> Option<u128> {
    // product of binomials C(c_1 + ... + c_k, c_k), each step exact
    let mut acc: u128 = 1;
    let mut seen: u128 = 0;
    for &c in multiplicities {
        for i in 1..=c as u128 {
            seen += 1;
            acc = acc.checked_mul(seen)? / i;
        }
    }
    Some(acc)
}

/// Every weak composition of `n` into `m` parts, in lexicographic order.
pub fn counting_vectors(n: usize, m: usize) -> Result<Vec<ContentVector>> {
    if n < 1 || m < 1 {
        return Err(Error::positive_n_m());
    }
    let mut out = Vec::new();
    let mut parts = vec![0; m];
    weak_compositions(n, 0, &mut parts, &mut |p| {
        out.push(ContentVector { parts: p.to_vec() })
    });
    Ok(out)
}

fn weak_compositions(rest: usize, at: usize, parts: &mut [usize], emit: &mut impl FnMut(&[usize])) {
    if at + 1 == parts.len() {
        parts[at] = rest;
        emit(parts);
        return;
    }
    for v in 0..=rest {
        parts[at] = v;
        weak_compositions(rest - v, at + 1, parts, emit);
    }
}

/// Every ordered list of `n` multi-indexes of the target's length summing
/// componentwise to `target`, ordered lexicographically by the flattened terms.
pub fn multi_index_compositions(
    target: &ContentVector,
    n: usize,
) -> Result<Vec<MultiIndexComposition>> {
    if n < 1 {
        return Err(Error::invalid(
            "the number of terms must be a positive integer",
        ));
    }
    let mut out = Vec::new();
    let mut terms: Vec<Vec<usize>> = vec![vec![0; target.len()]; n];
    let mut remaining = target.parts.clone();
    split_terms(0, &mut remaining, &mut terms, &mut out);
    Ok(out)
}

fn split_terms(
    term: usize,
    remaining: &mut [usize],
    terms: &mut [Vec<usize>],
    out: &mut Vec<MultiIndexComposition>,
) {
    if term + 1 == terms.len() {
        terms[term].copy_from_slice(remaining);
        out.push(MultiIndexComposition {
            terms: terms
                .iter()
                .map(|t| ContentVector { parts: t.clone() })
                .collect(),
        });
        return;
    }
    // walk every v <= remaining componentwise in lexicographic order
    choose_term(term, 0, remaining, terms, out);
}

fn choose_term(
    term: usize,
    component: usize,
    remaining: &mut [usize],
    terms: &mut [Vec<usize>],
    out: &mut Vec<MultiIndexComposition>,
) {
    if component == remaining.len() {
        split_terms(term + 1, remaining, terms, out);
        return;
    }
    let available = remaining[component];
    for v in 0..=available {
        terms[term][component] = v;
        remaining[component] = available - v;
        choose_term(term, component + 1, remaining, terms, out);
    }
    remaining[component] = available;
}
