//! The reproducible 64-bit generator behind every "general" choice.
//!
//! The generator is SplitMix64. With state `x` (a `u64`), one step is
//!
//! ```text
//! x  = x + 0x9E3779B97F4A7C15            (wrapping)
//! z  = x
//! z  = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9   (wrapping)
//! z  = (z ^ (z >> 27)) * 0x94D049BB133111EB   (wrapping)
//! out = z ^ (z >> 31)
//! ```
//!
//! A uniform residue below `m` is drawn by rejection: outputs `>= m * floor(2^64 / m)`
//! are discarded and the next output is tried, otherwise `out mod m` is returned.
//!
//! Independent streams for parallel tasks are derived with
//! `derive(master, index) = SplitMix64::new(master ^ index.wrapping_mul(0xD1B54A32D192ED03)).next_u64()`
//! so results never depend on thread scheduling.

use crate::algebra::field::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Default published seed, used when neither a flag nor `SPLITKIT_SEED` is given.
pub const DEFAULT_SEED: u64 = 0x5EED_2017_C05C_0001;

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;
const STREAM: u64 = 0xD1B5_4A32_D192_ED03;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// A generator for task `index` of a run seeded with `master`.
    pub fn derive(master: u64, index: u64) -> Self {
        let mut g = SplitMix64::new(master ^ index.wrapping_mul(STREAM));
        SplitMix64::new(g.next_u64())
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, bound)`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let x = self.next_u64();
            // `zone` is the largest multiple of `bound` minus one
            if x <= zone {
                return x % bound;
            }
        }
    }

    /// Uniform integer in the inclusive range `[lo, hi]`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let width = (hi - lo) as u64 + 1;
        lo + self.below(width) as i64
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// A uniformly random element of a prime field.
pub fn random_scalar(rng: &mut SplitMix64, field: FieldSpec) -> Result<Scalar> {
    match field {
        FieldSpec::Prime(p) => Ok(Scalar::Residue(rng.below(p))),
        FieldSpec::Rational => Err(Error::RationalField),
    }
}

/// A uniformly random nonzero element of a prime field.
pub fn random_nonzero_scalar(rng: &mut SplitMix64, field: FieldSpec) -> Result<Scalar> {
    match field {
        FieldSpec::Prime(p) => Ok(Scalar::Residue(1 + rng.below(p - 1))),
        FieldSpec::Rational => Err(Error::RationalField),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_stream() {
        // Reference values of SplitMix64 seeded with 1234567.
        let mut g = SplitMix64::new(1234567);
        let got: Vec<u64> = (0..5).map(|_| g.next_u64()).collect();
        assert_eq!(
            got,
            vec![
                6457827717110365317,
                3203168211198807973,
                9817491932198370423,
                4593380528125082431,
                16408922859458223821
            ]
        );
    }

    #[test]
    fn below_stays_in_range() {
        let mut g = SplitMix64::new(7);
        for bound in [1u64, 2, 3, 7, 1 << 31, u64::MAX] {
            for _ in 0..100 {
                assert!(g.below(bound) < bound);
            }
        }
    }

    #[test]
    fn derived_streams_differ() {
        let a = SplitMix64::derive(DEFAULT_SEED, 0).next_u64();
        let b = SplitMix64::derive(DEFAULT_SEED, 1).next_u64();
        assert_ne!(a, b);
        assert_eq!(a, SplitMix64::derive(DEFAULT_SEED, 0).next_u64());
    }

    #[test]
    fn rational_sampling_rejected() {
        let mut g = SplitMix64::new(1);
        assert_eq!(random_scalar(&mut g, FieldSpec::Rational), Err(Error::RationalField));
    }
}
