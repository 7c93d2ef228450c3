use std::env;

use crate::error::{Error, Result};

/// Environment variable overriding [`Limits::oracle_permutations`].
pub const ORACLE_LIMIT_VAR: &str = "NECKLACES_ORACLE_LIMIT";
/// Environment variable overriding [`Limits::debruijn_symbols`].
pub const DEBRUIJN_LIMIT_VAR: &str = "NECKLACES_DEBRUIJN_LIMIT";

/// Size guards for the routines whose output or work grows exponentially.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of multiset permutations the oracle path may visit.
    pub oracle_permutations: u64,
    /// Maximum length `m^n` of a de Bruijn sequence.
    pub debruijn_symbols: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            oracle_permutations: 10_000_000,
            debruijn_symbols: 1 << 26,
        }
    }
}

impl Limits {
    /// Defaults, overridden by `NECKLACES_ORACLE_LIMIT` and
    /// `NECKLACES_DEBRUIJN_LIMIT` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Some(v) = read_var(ORACLE_LIMIT_VAR)? {
            limits.oracle_permutations = v;
        }
        if let Some(v) = read_var(DEBRUIJN_LIMIT_VAR)? {
            limits.debruijn_symbols = v;
        }
        Ok(limits)
    }
}

fn read_var(name: &str) -> Result<Option<u64>> {
    match env::var(name) {
        Ok(raw) => raw.trim().parse().map(Some).map_err(|_| {
            Error::invalid(format!("{name} must be an unsigned integer, got {raw:?}"))
        }),
        Err(_) => Ok(None),
    }
}
