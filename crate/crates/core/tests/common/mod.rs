#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symgame::rational::{ratio, Rational};
use symgame::PayoffMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-60..=60), rng.gen_range(1..=12))
}

pub fn random_positive<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(1..=60), rng.gen_range(1..=12))
}

pub fn random_matrix<R: Rng>(rng: &mut R) -> PayoffMatrix {
    PayoffMatrix::new(
        random_rational(rng),
        random_rational(rng),
        random_rational(rng),
        random_rational(rng),
    )
}

/// Random matrix with pairwise distinct entries.
pub fn random_strict_matrix<R: Rng>(rng: &mut R) -> PayoffMatrix {
    loop {
        let m = random_matrix(rng);
        if m.is_strict() {
            return m;
        }
    }
}

/// 1000 seeded random matrices; a few are forced to tie so boundary
/// handling is exercised too.
pub fn random_suite(seed: u64) -> Vec<PayoffMatrix> {
    let mut rng = rng(seed);
    (0..1000)
        .map(|k| {
            let m = random_matrix(&mut rng);
            if k % 50 == 0 {
                PayoffMatrix::new(m.a.clone(), m.a.clone(), m.c, m.d)
            } else {
                m
            }
        })
        .collect()
}
