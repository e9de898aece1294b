//! Seeded random number generation for measurement sampling.
//!
//! Shot counts must be bit-reproducible from a seed, across runs and across
//! reimplementations, so the generator is pinned down completely:
//!
//! * the stream is xoshiro256** (Blackman/Vigna reference algorithm);
//! * a 64-bit seed is expanded into the 256-bit state with splitmix64;
//! * unit-interval draws use the top 53 bits: `(u >> 11) * 2^-53`.
//!
//! [`SimRng`] wraps the `rand_xoshiro` implementation of the stream; the seed
//! expansion and float mapping live here so the whole contract is visible in
//! one place.

use rand_xoshiro::rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

#[derive(Debug, Clone)]
pub struct SimRng {
    inner: Xoshiro256StarStar,
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl SimRng {
    pub fn seed_from_u64(seed: u64) -> Self {
        let mut s = seed;
        let mut bytes = [0u8; 32];
        for chunk in bytes.chunks_exact_mut(8) {
            chunk.copy_from_slice(&splitmix64(&mut s).to_le_bytes());
        }
        SimRng {
            inner: Xoshiro256StarStar::from_seed(bytes),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform draw from [0, 1) with 53 bits of precision.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in 0..=bound.
    pub fn below_inclusive(&mut self, bound: u64) -> u64 {
        debug_assert!(bound < u64::MAX);
        self.next_u64() % (bound + 1)
    }
}
