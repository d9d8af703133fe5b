//! Fixed workloads shared by the benchmarks.

use mazic_core::dmc::{fixtures, DiscreteMazic, InputFactorization};
use mazic_core::{GaussianMazic, SplitParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The strong-interference reference channel used throughout the docs.
pub fn strong_channel() -> GaussianMazic {
    GaussianMazic::new(1.2, 3.0, 2.0, 3.0, 2.0).expect("valid channel")
}

/// A weak channel whose sum-rate profile is not concave in P1.
pub fn weak_channel() -> GaussianMazic {
    GaussianMazic::new(0.1, 0.5, 1.0, 1.0, 1.0).expect("valid channel")
}

pub fn split() -> SplitParams {
    SplitParams::new(0.3, 0.3).expect("valid split")
}

/// A seeded discrete channel and a common-message input distribution.
pub fn discrete_instance(seed: u64) -> (DiscreteMazic, InputFactorization) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ch = fixtures::random_channel(&mut rng, [2, 2, 2, 3, 3]);
    let (p1, p2, p3) = (fixtures::random_pmf(&mut rng, 2), fixtures::random_pmf(&mut rng, 2), fixtures::random_pmf(&mut rng, 2));
    (ch, InputFactorization::full_common(&p1, &p2, &p3))
}

/// A seeded channel whose second output is degraded in the given direction.
pub fn degraded_instance(seed: u64, direction: mazic_core::dmc::Direction) -> DiscreteMazic {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    fixtures::degraded_channel(&mut rng, [3, 3, 2, 2, 2], direction)
}
