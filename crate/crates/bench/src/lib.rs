//! Fixed seeded inputs shared by the benchmarks.

use wittgauge_core::{Restriction, Sampler, SmashElement, EnvElement, TensorElement, WeylElement};

pub const N: usize = 2;

pub fn smash_pairs(count: usize) -> Vec<(SmashElement, SmashElement)> {
    let mut s = Sampler::new(1, N, 2, 2);
    (0..count).map(|_| (s.smash(2), s.smash(2))).collect()
}

pub fn tensor_inputs(count: usize) -> Vec<TensorElement> {
    let mut s = Sampler::new(2, N, 2, 2);
    (0..count).map(|_| s.tensor(2)).collect()
}

pub fn env_pairs(count: usize, max_len: usize) -> Vec<(EnvElement, EnvElement)> {
    let mut s = Sampler::new(3, N, 3, max_len);
    (0..count)
        .map(|_| (s.env_product(Restriction::All), s.env_product(Restriction::All)))
        .collect()
}

pub fn weyl_pairs(count: usize) -> Vec<(WeylElement, WeylElement)> {
    let mut s = Sampler::new(4, N, 4, 1);
    (0..count).map(|_| (s.weyl(4), s.weyl(4))).collect()
}
