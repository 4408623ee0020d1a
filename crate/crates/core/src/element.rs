//! Runtime selection of an algebra, for text front ends.

use std::fmt;
use std::str::FromStr;

use crate::env::EnvElement;
use crate::error::{AlgebraError, Result};
use crate::parse;
use crate::poly::Polynomial;
use crate::random::Sampler;
use crate::smash::SmashElement;
use crate::tensor::TensorElement;
use crate::weyl::WeylElement;
use crate::witt::VectorField;
use crate::Restriction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algebra {
    Poly,
    Weyl,
    VectorField,
    Env,
    Smash,
    Tensor,
}

impl Algebra {
    pub const ALL: [Algebra; 6] = [
        Algebra::Poly,
        Algebra::Weyl,
        Algebra::VectorField,
        Algebra::Env,
        Algebra::Smash,
        Algebra::Tensor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Poly => "poly",
            Algebra::Weyl => "weyl",
            Algebra::VectorField => "vectorfield",
            Algebra::Env => "env",
            Algebra::Smash => "smash",
            Algebra::Tensor => "tensor",
        }
    }

    pub fn parse(self, input: &str, n: usize) -> Result<Element> {
        Ok(match self {
            Algebra::Poly => Element::Poly(parse::parse_polynomial(input, n)?),
            Algebra::Weyl => Element::Weyl(parse::parse_weyl(input, n)?),
            Algebra::VectorField => Element::VectorField(parse::parse_vector_field(input, n)?),
            Algebra::Env => Element::Env(parse::parse_env(input, n)?),
            Algebra::Smash => Element::Smash(parse::parse_smash(input, n)?),
            Algebra::Tensor => Element::Tensor(parse::parse_tensor(input, n)?),
        })
    }

    /// A seeded random element with a few terms.
    pub fn sample(self, sampler: &mut Sampler) -> Element {
        match self {
            Algebra::Poly => Element::Poly(sampler.polynomial(3, 3)),
            Algebra::Weyl => Element::Weyl(sampler.weyl(3)),
            Algebra::VectorField => Element::VectorField(sampler.vector_field(3)),
            Algebra::Env => Element::Env(sampler.env(Restriction::All, 2)),
            Algebra::Smash => Element::Smash(sampler.smash(2)),
            Algebra::Tensor => Element::Tensor(sampler.tensor(2)),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Algebra::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| AlgebraError::Unsupported(format!("unknown algebra '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Poly(Polynomial),
    Weyl(WeylElement),
    VectorField(VectorField),
    Env(EnvElement),
    Smash(SmashElement),
    Tensor(TensorElement),
}

fn mismatch() -> AlgebraError {
    AlgebraError::Unsupported("operands belong to different algebras".into())
}

impl Element {
    pub fn algebra(&self) -> Algebra {
        match self {
            Element::Poly(_) => Algebra::Poly,
            Element::Weyl(_) => Algebra::Weyl,
            Element::VectorField(_) => Algebra::VectorField,
            Element::Env(_) => Algebra::Env,
            Element::Smash(_) => Algebra::Smash,
            Element::Tensor(_) => Algebra::Tensor,
        }
    }

    /// Associative product; vector fields only have a bracket.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        Ok(match (self, other) {
            (Element::Poly(a), Element::Poly(b)) => Element::Poly(a.mul(b)?),
            (Element::Weyl(a), Element::Weyl(b)) => Element::Weyl(a.mul(b)?),
            (Element::Env(a), Element::Env(b)) => Element::Env(a.mul(b)?),
            (Element::Smash(a), Element::Smash(b)) => Element::Smash(a.mul(b)?),
            (Element::Tensor(a), Element::Tensor(b)) => Element::Tensor(a.mul(b)?),
            (Element::VectorField(_), Element::VectorField(_)) => {
                return Err(AlgebraError::Unsupported(
                    "vector fields have no associative product; use bracket or the env algebra".into(),
                ))
            }
            _ => return Err(mismatch()),
        })
    }

    /// Lie bracket, or the commutator `ab - ba` in an associative algebra.
    pub fn bracket(&self, other: &Element) -> Result<Element> {
        Ok(match (self, other) {
            (Element::Poly(a), Element::Poly(b)) => {
                crate::error::check_dim(a.n(), b.n())?;
                Element::Poly(Polynomial::zero(a.n()))
            }
            (Element::Weyl(a), Element::Weyl(b)) => Element::Weyl(a.commutator(b)?),
            (Element::VectorField(a), Element::VectorField(b)) => Element::VectorField(a.bracket(b)?),
            (Element::Env(a), Element::Env(b)) => Element::Env(a.commutator(b)?),
            (Element::Smash(a), Element::Smash(b)) => Element::Smash(a.commutator(b)?),
            (Element::Tensor(a), Element::Tensor(b)) => Element::Tensor(a.commutator(b)?),
            _ => return Err(mismatch()),
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Poly(a) => a.fmt(f),
            Element::Weyl(a) => a.fmt(f),
            Element::VectorField(a) => a.fmt(f),
            Element::Env(a) => a.fmt(f),
            Element::Smash(a) => a.fmt(f),
            Element::Tensor(a) => a.fmt(f),
        }
    }
}
