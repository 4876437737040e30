//! Seeded random rationals for polynomial-identity checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactmath::Rational;

pub const DEFAULT_SEED: u64 = 20020521;

/// Draws rationals `p/q` with `p` in `[-9, 9]` and `q` in `1..=7`.
#[derive(Clone, Debug)]
pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        RationalSampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rational(&mut self) -> Rational {
        let num: i64 = self.rng.gen_range(-9..=9);
        let den: i64 = self.rng.gen_range(1..=7);
        Rational::new(num, den).expect("denominator is positive")
    }

    /// Rejection-samples until `accept` holds; gives up after `max_tries`.
    pub fn rational_where(
        &mut self,
        max_tries: usize,
        mut accept: impl FnMut(&Rational) -> bool,
    ) -> Option<Rational> {
        (0..max_tries).map(|_| self.rational()).find(|x| accept(x))
    }
}
