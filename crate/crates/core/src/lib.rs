//! Exact computer algebra for the Witt algebra of polynomial vector fields,
//! its enveloping algebra, the smash product `A # U(V)`, the isomorphism
//! with `D ⊗ U(L+)`, and gauge modules over affine space.
//!
//! All arithmetic is over ℚ. Variable and direction indices are 0-based in
//! the API and 1-based in the text grammar (`x1`, `d1`).

use std::collections::BTreeMap;

use num::Zero;

pub mod comb;
mod display;
pub mod element;
pub mod env;
pub mod error;
pub mod gauge;
pub mod iso;
pub mod multi_index;
pub mod parse;
pub mod poly;
pub mod random;
pub mod smash;
pub mod tensor;
pub mod weyl;
pub mod witt;

pub type Rational = num::BigRational;

pub use comb::{lemma_comb_check, lemma_comb_suite, CombOutcome, CombPart};
pub use element::{Algebra, Element};
pub use env::{EnvElement, PbwMonomial, Restriction};
pub use error::{AlgebraError, Result};
pub use gauge::{AxiomReport, CheckGroup, GaugeModuleSpec, ModuleElement, PolyMatrix, VerificationReport};
pub use iso::{phi, phi_gen, psi, psi_d, psi_l, Comparison, IsoMaps, RelationFailure};
pub use multi_index::MultiIndex;
pub use poly::Polynomial;
pub use random::Sampler;
pub use smash::{SmashElement, SmashMonomial};
pub use tensor::{TensorElement, TensorMonomial};
pub use weyl::{WeylElement, WeylMonomial};
pub use witt::{VectorField, VectorFieldGen};

/// Adds `c` to the coefficient of `k`, dropping the entry if it cancels.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}
