//! Counter-based pseudo-randomness.
//!
//! Every random decision is a pure function of a key, not of a stream
//! position: the Bernoulli variable at a vertex depends only on
//! (seed, trial, site label). Trials can therefore run on any thread layout,
//! in any order, and still reproduce bit for bit, and a configuration is
//! stable when the window around it grows. The mixer is the splitmix64
//! finalizer, whose avalanche quality is more than enough for Monte Carlo
//! sampling of independent bits.

/// Odd constant used to decorrelate the seed from the trial counter
/// (the splitmix64 stream increment).
pub const GOLDEN_GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;

/// splitmix64 finalizer: a bijective avalanche mix on 64 bits.
#[inline]
pub fn mix64(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^= z >> 31;
    z
}

/// Hash of (seed, trial, site words) used for per-vertex Bernoulli draws.
///
/// The words are the vertex label (lattice coordinates or group word) when the
/// graph carries labels, and the bare index otherwise. Chaining through
/// `mix64` keeps each word's influence nonlinear; the length is folded in so
/// distinct-length labels cannot collide by zero padding.
#[inline]
pub fn hash_words(seed: u64, trial: u64, words: &[i64]) -> u64 {
    let mut h = mix64(seed ^ GOLDEN_GAMMA);
    h = mix64(h ^ trial);
    for &w in words {
        h = mix64(h ^ (w as u64));
    }
    mix64(h ^ (words.len() as u64))
}

/// Maps a hash to [0, 1) with 53 uniform mantissa bits.
#[inline]
pub fn unit(r: u64) -> f64 {
    // 2^-53; the top 53 bits of r become the mantissa.
    (r >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
}

/// Sequential splitmix64 stream for places where a plain RNG is the right
/// tool: drawing random subsets in tests, starting vectors for inverse
/// iteration. Not used for percolation configurations.
#[derive(Clone, Debug)]
pub struct SplitMix {
    state: u64,
}

impl SplitMix {
    pub fn new(seed: u64) -> Self {
        SplitMix { state: seed }
    }

    #[inline]
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        mix64(self.state)
    }

    #[inline]
    pub fn next_unit(&mut self) -> f64 {
        unit(self.next_u64())
    }

    /// Uniform draw from 0..n via the widening-multiply trick.
    #[inline]
    pub fn next_below(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.next_u64() as u128 * n as u128) >> 64) as usize
    }
}
