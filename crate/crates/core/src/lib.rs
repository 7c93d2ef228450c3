//! Necklaces, bracelets and their relatives over small integer alphabets.
//!
//! Words are finite sequences over an offset alphabet `{fn, fn+1, ..., fn+m-1}`.
//! The crate builds rotation and dihedral orbits with their lexicographically
//! smallest representatives, enumerates representatives of fixed content or
//! fixed length, generates Lyndon words and the lexicographically least
//! de Bruijn sequence, and counts all of these in closed form.
//!
//! Every generator has two routes: a direct canonical-extension walk
//! ([`generators`]) and a brute-force filter over multiset permutations
//! ([`generators::oracle_fixed_content`]). They are required to agree.

pub mod compositions;
pub mod counting;
pub mod debruijn;
mod error;
pub mod generators;
mod limits;
pub mod word;

pub use compositions::{ContentVector, MultiIndexComposition};
pub use debruijn::{DeBruijnSequence, Defect, Verification};
pub use error::{Error, Result};
pub use generators::{GenerationRequest, Mode, RepresentativeList, Scope};
pub use limits::{Limits, DEBRUIJN_LIMIT_VAR, ORACLE_LIMIT_VAR};
pub use word::{Alphabet, Orbit, OrbitKind, Periodicity, Word};
