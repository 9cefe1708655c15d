//! Seeded inputs shared by the benchmarks under `benches/`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vanishing_core::{FpMultiset, FpVector, PrimeModulus};

/// `size` uniform vectors of `F_p^n`, fixed by `seed`.
pub fn random_multiset(p: u32, n: usize, size: usize, seed: u64) -> FpMultiset {
    let q = PrimeModulus::new(p as u64).expect("prime");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let entries = (0..size)
        .map(|_| FpVector::new(q, (0..n).map(|_| rng.gen_range(0..p)).collect()).expect("reduced"))
        .collect();
    FpMultiset::new(q, n, entries).expect("same p and n")
}

/// A multiset of the smallest size that always vanishes, `(p - 1) n + 1`.
pub fn threshold_multiset(p: u32, n: usize, seed: u64) -> FpMultiset {
    random_multiset(p, n, (p as usize - 1) * n + 1, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_deterministic() {
        assert_eq!(threshold_multiset(5, 2, 1), threshold_multiset(5, 2, 1));
        assert_eq!(threshold_multiset(5, 2, 1).len(), 9);
    }
}
