//! Seeded random inputs for property checks.

use std::f64::consts::PI;

use nalgebra::Vector3;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::spinor::{Branch, Spin};
use crate::tensor::{Momentum, Primitive, Word};

pub type SampleRng = ChaCha8Rng;

/// Independent stream for check number `stream` under a run seed.
pub fn rng_for(seed: u64, stream: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub fn unit_vector<R: Rng>(rng: &mut R) -> Vector3<f64> {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..2.0 * PI);
    let r = (1.0 - z * z).max(0.0).sqrt();
    Vector3::new(r * phi.cos(), r * phi.sin(), z)
}

/// On-shell momentum with uniformly random direction and `|p|` in `[0, p_max]`.
pub fn momentum<R: Rng>(rng: &mut R, mass: f64, p_max: f64) -> Momentum {
    let mag = rng.random_range(0.0..=p_max);
    Momentum::new(mass, unit_vector(rng) * mag).expect("mass validated by caller")
}

pub fn position<R: Rng>(rng: &mut R, extent: f64) -> Vector3<f64> {
    Vector3::new(
        rng.random_range(-extent..=extent),
        rng.random_range(-extent..=extent),
        rng.random_range(-extent..=extent),
    )
}

pub fn branch<R: Rng>(rng: &mut R) -> Branch {
    if rng.random_bool(0.5) {
        Branch::Particle
    } else {
        Branch::Antiparticle
    }
}

pub fn spin<R: Rng>(rng: &mut R) -> Spin {
    if rng.random_bool(0.5) {
        Spin::Up
    } else {
        Spin::Down
    }
}

/// Word of `0..=max_len` primitives about random axes.
pub fn word<R: Rng>(rng: &mut R, max_len: usize, max_rapidity: f64) -> Word {
    let len = rng.random_range(0..=max_len);
    let prims = (0..len)
        .map(|_| {
            let axis = unit_vector(rng);
            if rng.random_bool(0.5) {
                Primitive::boost(axis, rng.random_range(-max_rapidity..=max_rapidity))
            } else {
                Primitive::rotation(axis, rng.random_range(-PI..=PI))
            }
            .expect("unit axis")
        })
        .collect();
    Word::new(prims)
}
