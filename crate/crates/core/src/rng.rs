//! Seeding conventions.
//!
//! Every randomized operation takes an explicit `u64` seed and draws from a
//! ChaCha8 stream (`rand_chacha::ChaCha8Rng`), so results are reproducible
//! across platforms and across the parallel and sequential builds. Independent
//! work units (a fold, a tree, a trial attempt) never share one stream:
//! each gets its own seed derived with [`derive_seed`], which makes the result
//! independent of evaluation order.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic RNG used throughout the crate.
pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Mixes a base seed with a stream tag (SplitMix64 finalizer, Steele et al.).
///
/// `derive_seed(s, a) != derive_seed(s, b)` for `a != b` in practice; the
/// constants are the standard ones: 0x9E3779B97F4A7C15 increment,
/// 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB multipliers.
pub fn derive_seed(base: u64, tag: u64) -> u64 {
    let mut z = base
        .wrapping_add(tag.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Two-level derivation for nested loops (e.g. fold within subset).
pub fn derive_seed2(base: u64, tag_a: u64, tag_b: u64) -> u64 {
    derive_seed(derive_seed(base, tag_a), tag_b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derive_is_stable() {
        assert_eq!(derive_seed(7, 0), derive_seed(7, 0));
        assert_ne!(derive_seed(7, 0), derive_seed(7, 1));
        assert_ne!(derive_seed(7, 0), derive_seed(8, 0));
    }

    #[test]
    fn nested_tags_do_not_collide_on_small_grid() {
        let mut seen = std::collections::HashSet::new();
        for a in 0..64u64 {
            for b in 0..64u64 {
                assert!(seen.insert(derive_seed2(42, a, b)));
            }
        }
    }
}
