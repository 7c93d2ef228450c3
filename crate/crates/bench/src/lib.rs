//! Shared workloads for the generation benchmarks.

use necklace_core::generators::{all_necklaces, oracle_fixed_content};
use necklace_core::{compositions::counting_vectors, Limits, OrbitKind, RepresentativeList, Word};

/// All binary necklaces of length `n` through the direct walk.
pub fn direct_binary_necklaces(n: usize) -> RepresentativeList {
    all_necklaces(n, 2, 0).expect("valid arguments")
}

/// The same list assembled from the brute-force oracle, one content at a time.
pub fn oracle_binary_necklaces(n: usize) -> RepresentativeList {
    let limits = Limits::default();
    let mut words: Vec<Word> = Vec::new();
    for content in counting_vectors(n, 2).expect("valid arguments") {
        let list =
            oracle_fixed_content(&content, 0, OrbitKind::Rotation, &limits).expect("within limits");
        words.extend(list.words);
    }
    words.sort_unstable();
    words.into_iter().collect()
}
