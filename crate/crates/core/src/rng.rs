//! Seeded random stream shared by every generator.
//!
//! The stream is ChaCha8 (`rand_chacha::ChaCha8Rng`) keyed through
//! `SeedableRng::seed_from_u64`, which expands the 64-bit seed with PCG32.
//! Two derived draws are used on top of raw `u64` output:
//!
//! * `unit`: `(next_u64() >> 11) * 2^-53`, uniform on `[0, 1)`.
//! * `below(bound)`: rejection sampling on `next_u64()`; values at or above
//!   the largest multiple of `bound` are discarded, the rest reduced
//!   modulo `bound`.
//!
//! Any reimplementation following these rules reproduces the same graphs.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

pub struct Stream(ChaCha8Rng);

impl Stream {
    pub fn new(seed: u64) -> Self {
        Self(ChaCha8Rng::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// `true` with probability `p`; exact at `p = 0` and `p = 1`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.unit() < p
    }

    /// Uniform integer in `0..bound`. `bound` must be nonzero.
    pub fn below(&mut self, bound: usize) -> usize {
        debug_assert!(bound > 0);
        let bound = bound as u64;
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let x = self.next_u64();
            if x < zone {
                return (x % bound) as usize;
            }
        }
    }
}
