//! Seeded samplers for small random elements of every algebra.
//!
//! Coefficients are drawn from {−2, −1, 1, 2}; exponents stay below the
//! configured bounds. Identical seeds give identical elements.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::env::{EnvElement, Restriction};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::smash::SmashElement;
use crate::tensor::TensorElement;
use crate::weyl::{WeylElement, WeylMonomial};
use crate::witt::{VectorField, VectorFieldGen};
use crate::Rational;

const COEFFS: [i64; 4] = [-2, -1, 1, 2];

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    pub n: usize,
    /// Bound on |r|, |s| and generator |k|.
    pub max_deg: u32,
    /// Bound on the number of generators in a product.
    pub max_len: usize,
}

impl Sampler {
    pub fn new(seed: u64, n: usize, max_deg: u32, max_len: usize) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            n,
            max_deg,
            max_len,
        }
    }

    pub fn coeff(&mut self) -> Rational {
        Rational::from_integer((*COEFFS.choose(&mut self.rng).expect("non-empty")).into())
    }

    pub fn range(&mut self, hi: usize) -> usize {
        self.rng.random_range(0..=hi)
    }

    pub fn multi_index(&mut self, max_total: u32) -> MultiIndex {
        let all = MultiIndex::up_to_total(self.n, max_total);
        all.choose(&mut self.rng).expect("non-empty").clone()
    }

    pub fn polynomial(&mut self, max_deg: u32, max_terms: usize) -> Polynomial {
        let terms = 1 + self.range(max_terms.saturating_sub(1));
        let mut f = Polynomial::zero(self.n);
        for _ in 0..terms {
            let k = self.multi_index(max_deg);
            let c = self.coeff();
            f = f.add(&Polynomial::monomial(k, c)).expect("same dimension");
        }
        f
    }

    pub fn gen(&mut self, lplus: bool) -> VectorFieldGen {
        let min = if lplus { 0 } else { -1 };
        let all = VectorFieldGen::all_of_degree(self.n, min, i64::from(self.max_deg) - 1);
        all.choose(&mut self.rng).expect("non-empty").clone()
    }

    pub fn vector_field(&mut self, max_terms: usize) -> VectorField {
        let terms = 1 + self.range(max_terms.saturating_sub(1));
        let mut v = VectorField::zero(self.n);
        for _ in 0..terms {
            let g = VectorField::from(self.gen(false)).scale(&self.coeff());
            v = v.add(&g).expect("same dimension");
        }
        v
    }

    pub fn weyl(&mut self, max_terms: usize) -> WeylElement {
        let terms = 1 + self.range(max_terms.saturating_sub(1));
        let mut w = WeylElement::zero(self.n);
        for _ in 0..terms {
            let x = self.multi_index(self.max_deg);
            let d = self.multi_index(self.max_deg);
            let c = self.coeff();
            w = w.add(&WeylElement::term(WeylMonomial::new(x, d), c)).expect("same dimension");
        }
        w
    }

    fn word(&mut self, lplus: bool) -> Vec<VectorFieldGen> {
        let len = self.range(self.max_len);
        (0..len).map(|_| self.gen(lplus)).collect()
    }

    /// `c · g_1 ··· g_m` with m <= `max_len`.
    pub fn env_product(&mut self, restriction: Restriction) -> EnvElement {
        let word = self.word(restriction == Restriction::Lplus);
        let c = self.coeff();
        EnvElement::from_word(self.n, restriction, &word)
            .expect("sampled generators respect the restriction")
            .scale(&c)
    }

    /// A short sum of random env products.
    pub fn env(&mut self, restriction: Restriction, max_terms: usize) -> EnvElement {
        let terms = 1 + self.range(max_terms.saturating_sub(1));
        let mut e = EnvElement::zero(self.n, restriction);
        for _ in 0..terms {
            let p = self.env_product(restriction);
            e = e.add(&p).expect("compatible");
        }
        e
    }

    /// `c · x^r # g_1 ··· g_m` with |r| <= `max_deg`, m <= `max_len`.
    pub fn smash_product(&mut self) -> SmashElement {
        let r = self.multi_index(self.max_deg);
        let u = self.env_product(Restriction::All);
        SmashElement::from_parts(&Polynomial::monomial(r, Rational::from_integer(1.into())), &u)
            .expect("same dimension")
    }

    /// `c · x^r ∂^s ⊗ g_1 ··· g_m` over L+.
    pub fn tensor_product(&mut self) -> TensorElement {
        let x = self.multi_index(self.max_deg);
        let d = self.multi_index(self.max_deg);
        let u = self.env_product(Restriction::Lplus);
        TensorElement::from_parts(&WeylElement::word(x, d), &u).expect("L+ word")
    }

    pub fn smash(&mut self, max_terms: usize) -> SmashElement {
        let terms = 1 + self.range(max_terms.saturating_sub(1));
        let mut s = SmashElement::zero(self.n);
        for _ in 0..terms {
            let t = self.smash_product();
            s = s.add(&t).expect("same dimension");
        }
        s
    }

    pub fn tensor(&mut self, max_terms: usize) -> TensorElement {
        let terms = 1 + self.range(max_terms.saturating_sub(1));
        let mut t = TensorElement::zero(self.n);
        for _ in 0..terms {
            let p = self.tensor_product();
            t = t.add(&p).expect("same dimension");
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_for_equal_seeds() {
        let mut a = Sampler::new(11, 2, 3, 2);
        let mut b = Sampler::new(11, 2, 3, 2);
        for _ in 0..10 {
            assert_eq!(a.smash(2), b.smash(2));
            assert_eq!(a.tensor(2), b.tensor(2));
        }
    }

    #[test]
    fn respects_bounds() {
        let mut s = Sampler::new(3, 2, 2, 3);
        for _ in 0..50 {
            let t = s.tensor_product();
            assert!(t.lplus_leg_valid());
            assert!(t.max_word_len() <= 3);
            assert!(s.gen(true).in_lplus());
        }
    }
}
