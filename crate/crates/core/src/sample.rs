//! Seeded pseudo-random rationals.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::scalar::{int, ratio, Rational};

pub struct RationalSampler {
    rng: ChaCha8Rng,
}

impl RationalSampler {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.gen_range(0..len)
    }

    /// Uniform on `{1/q, ..., (q-1)/q}` for a fixed prime `q`.
    pub fn open_unit(&mut self) -> Rational {
        const Q: i64 = 1009;
        ratio(self.rng.gen_range(1..Q), Q)
    }

    /// Rational in `[-bound, bound]` with denominator up to 97.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let q = self.rng.gen_range(1..=97);
        ratio(self.rng.gen_range(-bound * q..=bound * q), q)
    }

    pub fn int_vector(&mut self, len: usize, bound: i64) -> Vec<Rational> {
        (0..len).map(|_| int(self.int_in(-bound, bound))).collect()
    }

    pub fn rational_vector(&mut self, len: usize, bound: i64) -> Vec<Rational> {
        (0..len).map(|_| self.rational(bound)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let mut a = RationalSampler::new(7);
        let mut b = RationalSampler::new(7);
        assert_eq!(a.rational_vector(5, 10), b.rational_vector(5, 10));
        let u = a.open_unit();
        assert!(u > int(0) && u < int(1));
    }
}
