//! Seeded random monomial ideals for the property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use vfilt_core::{MonomialIdeal, RingContext};

pub const DEFAULT_SEED: u64 = 0x005e_ed0f_1de4;
pub const MAX_VARS: usize = 4;
pub const MAX_EXPONENT: u32 = 3;
pub const MAX_GENERATORS: usize = 5;

/// A proper nonzero ideal in at most [`MAX_VARS`] variables with exponents
/// at most [`MAX_EXPONENT`].
pub fn random_ideal(rng: &mut impl Rng) -> MonomialIdeal {
    let dim = rng.gen_range(1..=MAX_VARS);
    let count = rng.gen_range(1..=MAX_GENERATORS);
    let gens = (0..count)
        .map(|_| loop {
            let g: Vec<u32> = (0..dim).map(|_| rng.gen_range(0..=MAX_EXPONENT)).collect();
            if g.iter().any(|&e| e > 0) {
                break g;
            }
        })
        .collect();
    MonomialIdeal::from_exponents(RingContext::numbered("x", dim), gens)
        .expect("generators have the ring's dimension")
}

/// `count` ideals drawn from a ChaCha stream; the same seed always gives the
/// same corpus.
pub fn corpus(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_ideal(&mut rng)).collect()
}

/// A second ideal in the ring of `ideal`, for the binary identities.
pub fn companion(ideal: &MonomialIdeal, rng: &mut impl Rng) -> MonomialIdeal {
    let dim = ideal.dim();
    let count = rng.gen_range(1..=3);
    let gens = (0..count)
        .map(|_| (0..dim).map(|_| rng.gen_range(0..=MAX_EXPONENT)).collect())
        .collect();
    MonomialIdeal::from_exponents(ideal.ring().clone(), gens)
        .expect("generators have the ring's dimension")
}
