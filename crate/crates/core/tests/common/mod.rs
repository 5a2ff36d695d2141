//! Random inputs shared by the integration suites.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wall_cf::{SchurParams64, WallParams64};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform in the disc of radius `max_mod`.
pub fn random_point_in_disc(rng: &mut impl Rng, max_mod: f64) -> Complex64 {
    let r = max_mod * rng.gen::<f64>().sqrt();
    Complex64::from_polar(r, rng.gen::<f64>() * std::f64::consts::TAU)
}

pub fn random_schur(rng: &mut impl Rng, len: usize, max_mod: f64) -> SchurParams64 {
    SchurParams64::new(
        (0..len)
            .map(|_| random_point_in_disc(rng, max_mod))
            .collect(),
    )
    .unwrap()
}

/// `g` uniform in `[0.05, 0.95]`, `r` uniform in `[-2, 2]`.
pub fn random_wall(rng: &mut impl Rng, len: usize) -> WallParams64 {
    let g = (0..len).map(|_| rng.gen_range(0.05..0.95)).collect();
    let r = (0..len).map(|_| rng.gen_range(-2.0..2.0)).collect();
    WallParams64::new(g, r).unwrap()
}

/// Point in the upper half-plane with `Im λ ∈ [0.2, 3]`, `Re λ ∈ [-3, 3]`.
pub fn random_upper(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(0.2..3.0))
}

pub fn fixture(name: &str) -> String {
    format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}
