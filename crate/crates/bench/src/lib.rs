//! Shared inputs for the criterion benchmarks.

use braidwork_core::fpgroups::word::{letter, Word};

/// Deterministic pseudo-random word of `len` letters over `ngens` generators.
pub fn scrambled_word(ngens: usize, len: usize, seed: u64) -> Word {
    let mut s = seed | 1;
    Word::new((0..len).map(|_| {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        letter((s % ngens as u64) as usize, s & 64 != 0)
    }))
}

pub const LIMIT: usize = 2_000_000;
