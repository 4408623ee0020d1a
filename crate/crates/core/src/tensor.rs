//! The tensor product algebra D ⊗ U(L+).

use std::collections::BTreeMap;
use std::fmt;

use num::One;

use crate::env::{EnvElement, PbwMonomial, Restriction};
use crate::error::{check_dim, AlgebraError, Result};
use crate::weyl::{WeylElement, WeylMonomial};
use crate::{display, Rational};

/// Basis element `x^r ∂^s ⊗ w` with `w` a PBW word over L+.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorMonomial {
    pub d: WeylMonomial,
    pub w: PbwMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    n: usize,
    terms: BTreeMap<TensorMonomial, Rational>,
}

impl TensorElement {
    pub fn zero(n: usize) -> Self {
        TensorElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_weyl(&WeylElement::one(n))
    }

    /// `a ⊗ 1`
    pub fn from_weyl(a: &WeylElement) -> Self {
        let mut t = TensorElement::zero(a.n());
        for (w, c) in a.terms() {
            t.add_term(
                TensorMonomial {
                    d: w.clone(),
                    w: PbwMonomial::unit(),
                },
                c.clone(),
            );
        }
        t
    }

    /// `a ⊗ u`; `u` must lie in U(L+).
    pub fn from_parts(a: &WeylElement, u: &EnvElement) -> Result<Self> {
        check_dim(a.n(), u.n())?;
        let u = u.with_restriction(Restriction::Lplus)?;
        let mut t = TensorElement::zero(a.n());
        for (d, ca) in a.terms() {
            for (w, cu) in u.terms() {
                t.add_term(
                    TensorMonomial {
                        d: d.clone(),
                        w: w.clone(),
                    },
                    ca * cu,
                );
            }
        }
        Ok(t)
    }

    /// `1 ⊗ u`
    pub fn from_env(u: &EnvElement) -> Result<Self> {
        Self::from_parts(&WeylElement::one(u.n()), u)
    }

    pub fn term(d: WeylMonomial, w: PbwMonomial, c: Rational) -> Result<Self> {
        if let Some(g) = w.gens().iter().find(|g| !g.in_lplus()) {
            return Err(AlgebraError::NotInLplus(g.to_string()));
        }
        let mut t = TensorElement::zero(d.n());
        t.add_term(TensorMonomial { d, w }, c);
        Ok(t)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&TensorMonomial, &Rational)> {
        self.terms.iter()
    }

    /// True when the U(L+) leg never contains a degree −1 generator.
    pub fn lplus_leg_valid(&self) -> bool {
        self.terms.keys().all(|m| m.w.in_lplus())
    }

    pub(crate) fn add_term(&mut self, m: TensorMonomial, c: Rational) {
        debug_assert!(m.w.in_lplus());
        crate::accumulate(&mut self.terms, m, c);
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &TensorElement) -> Result<TensorElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> TensorElement {
        let mut out = TensorElement::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Componentwise product `(a ⊗ u)(b ⊗ v) = ab ⊗ uv`.
    pub fn mul(&self, other: &TensorElement) -> Result<TensorElement> {
        check_dim(self.n, other.n)?;
        let n = self.n;
        let mut out = TensorElement::zero(n);
        let mut weyl_cache: BTreeMap<(WeylMonomial, WeylMonomial), WeylElement> = BTreeMap::new();
        let mut env_cache: BTreeMap<(PbwMonomial, PbwMonomial), EnvElement> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let left = weyl_cache
                    .entry((a.d.clone(), b.d.clone()))
                    .or_insert_with(|| {
                        WeylElement::term(a.d.clone(), Rational::one())
                            .mul(&WeylElement::term(b.d.clone(), Rational::one()))
                            .expect("same dimension")
                    });
                let right = env_cache.entry((a.w.clone(), b.w.clone())).or_insert_with(|| {
                    let u = EnvElement::from_monomial(n, Restriction::Lplus, a.w.clone())
                        .expect("stored words are PBW over L+");
                    let v = EnvElement::from_monomial(n, Restriction::Lplus, b.w.clone())
                        .expect("stored words are PBW over L+");
                    u.mul(&v).expect("same restriction")
                });
                let c = ca * cb;
                for (d, cd) in left.terms() {
                    let c2 = &c * cd;
                    for (w, cw) in right.terms() {
                        out.add_term(
                            TensorMonomial {
                                d: d.clone(),
                                w: w.clone(),
                            },
                            &c2 * cw,
                        );
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> TensorElement {
        let mut acc = TensorElement::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    pub fn commutator(&self, other: &TensorElement) -> Result<TensorElement> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|m| m.w.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = display::combination(
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| (c.clone(), m.d.word_string(), format!(" @ {}", m.w))),
        );
        f.write_str(&s)
    }
}
