//! Deterministic seed derivation.
//!
//! Every stage of the pipeline takes one user-facing seed and derives
//! per-pair, per-trace or per-realization child seeds from it, so that work
//! items stay independent (and therefore parallelizable) without sharing an
//! RNG stream.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer; the standard 64-bit mixer.
fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives a child seed from a base seed and one tag.
pub fn derive(base: u64, tag: u64) -> u64 {
    splitmix64(splitmix64(base) ^ splitmix64(tag.wrapping_add(0x51ed_270b)))
}

/// Derives a child seed from a base seed and two tags, e.g. an
/// (inline, xline) address.
pub fn derive2(base: u64, a: u64, b: u64) -> u64 {
    derive(derive(base, a), b)
}

/// The RNG used everywhere in this crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
