//! The smash product A#U(V).

use std::collections::BTreeMap;
use std::fmt;

use num::One;

use crate::env::{act_word, coproduct_split, EnvElement, PbwMonomial, Restriction};
use crate::error::{check_dim, Result};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::witt::VectorFieldGen;
use crate::{display, Rational};

/// Basis element `x^r # w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmashMonomial {
    pub x: MultiIndex,
    pub w: PbwMonomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SmashElement {
    n: usize,
    terms: BTreeMap<SmashMonomial, Rational>,
}

impl SmashElement {
    pub fn zero(n: usize) -> Self {
        SmashElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::from_poly(&Polynomial::one(n))
    }

    /// `f # 1`
    pub fn from_poly(f: &Polynomial) -> Self {
        let mut s = SmashElement::zero(f.n());
        for (k, c) in f.terms() {
            s.add_term(
                SmashMonomial {
                    x: k.clone(),
                    w: PbwMonomial::unit(),
                },
                c.clone(),
            );
        }
        s
    }

    /// `1 # u`
    pub fn from_env(u: &EnvElement) -> Self {
        Self::from_parts(&Polynomial::one(u.n()), u).expect("same dimension")
    }

    /// `1 # g`
    pub fn from_gen(g: &VectorFieldGen) -> Self {
        let u = EnvElement::from_gen(g.clone(), Restriction::All).expect("U(V) accepts every generator");
        Self::from_env(&u)
    }

    /// `f # u`. An L+ element is regarded as an element of U(V).
    pub fn from_parts(f: &Polynomial, u: &EnvElement) -> Result<Self> {
        check_dim(f.n(), u.n())?;
        let mut s = SmashElement::zero(f.n());
        for (k, a) in f.terms() {
            for (w, b) in u.terms() {
                s.add_term(
                    SmashMonomial {
                        x: k.clone(),
                        w: w.clone(),
                    },
                    a * b,
                );
            }
        }
        Ok(s)
    }

    pub fn term(x: MultiIndex, w: PbwMonomial, c: Rational) -> Self {
        let mut s = SmashElement::zero(x.n());
        s.add_term(SmashMonomial { x, w }, c);
        s
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SmashMonomial, &Rational)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: SmashMonomial, c: Rational) {
        crate::accumulate(&mut self.terms, m, c);
    }

    pub fn add(&self, other: &SmashElement) -> Result<SmashElement> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SmashElement) -> Result<SmashElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> SmashElement {
        let mut out = SmashElement::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// `(f # u)(g # v) = Σ f·u⁽¹⁾(g) # u⁽²⁾v`.
    pub fn mul(&self, other: &SmashElement) -> Result<SmashElement> {
        check_dim(self.n, other.n)?;
        let n = self.n;
        let mut out = SmashElement::zero(n);
        let mut right_products: BTreeMap<(Vec<VectorFieldGen>, PbwMonomial), EnvElement> =
            BTreeMap::new();
        for (a, ca) in &self.terms {
            let splits = coproduct_split(a.w.gens());
            for (b, cb) in &other.terms {
                let c = ca * cb;
                let g = Polynomial::monomial(b.x.clone(), Rational::one());
                for (left, right) in &splits {
                    let acted = act_word(left, &g)?;
                    if acted.is_zero() {
                        continue;
                    }
                    let tail = right_products
                        .entry((right.clone(), b.w.clone()))
                        .or_insert_with(|| {
                            EnvElement::from_monomial(n, Restriction::All, b.w.clone())
                                .expect("stored words are PBW")
                                .mul_raw_left(right, &Rational::one())
                        });
                    for (s, cs) in acted.terms() {
                        let x = a.x.add(s);
                        let c2 = &c * cs;
                        for (w, cw) in tail.terms() {
                            out.add_term(
                                SmashMonomial {
                                    x: x.clone(),
                                    w: w.clone(),
                                },
                                &c2 * cw,
                            );
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> SmashElement {
        let mut acc = SmashElement::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    pub fn commutator(&self, other: &SmashElement) -> Result<SmashElement> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// The natural action on A: `(f # u)(g) = f · u(g)`.
    pub fn act_on_poly(&self, g: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, g.n())?;
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let ug = act_word(m.w.gens(), g)?;
            out = out.add(&ug.mul_monomial(&m.x, c)?)?;
        }
        Ok(out)
    }

    /// Longest U(V) word among the terms.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(|m| m.w.len()).max().unwrap_or(0)
    }
}

impl fmt::Display for SmashElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = display::combination(self.terms.iter().rev().map(|(m, c)| {
            (
                c.clone(),
                m.x.monomial_string('x'),
                format!(" # {}", m.w),
            )
        }));
        f.write_str(&s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_smash};
    use crate::witt::VectorField;

    fn s(e: &str, n: usize) -> SmashElement {
        parse_smash(e, n).unwrap()
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            s("1 # d1", 1).mul(&s("x1", 1)).unwrap().to_string(),
            "x1 # d1 + 1 # 1"
        );
        let f = parse_polynomial("x1^2 + x2", 2).unwrap();
        let g = parse_polynomial("x2 - 3", 2).unwrap();
        assert_eq!(
            SmashElement::from_poly(&f).mul(&SmashElement::from_poly(&g)).unwrap(),
            SmashElement::from_poly(&f.mul(&g).unwrap())
        );
        assert_eq!(
            s("1 # x1*d1", 1).mul(&s("x1 # 1", 1)).unwrap(),
            s("x1 # x1*d1 + x1 # 1", 1)
        );
    }

    #[test]
    fn commutator_examples() {
        assert_eq!(s("1 # d1", 1).commutator(&s("x1", 1)).unwrap(), SmashElement::one(1));
        assert!(s("x1", 2).commutator(&s("x2", 2)).unwrap().is_zero());
        assert_eq!(
            s("1 # x1*d1", 1).commutator(&s("1 # x1^2*d1", 1)).unwrap(),
            s("1 # x1^2*d1", 1)
        );
    }

    #[test]
    fn leibniz_relation_on_generators() {
        for n in 1..=2 {
            for g in VectorFieldGen::all_of_degree(n, -1, 2) {
                for r in MultiIndex::up_to_total(n, 3) {
                    let f = Polynomial::monomial(r, Rational::one());
                    let lhs = SmashElement::from_gen(&g)
                        .commutator(&SmashElement::from_poly(&f))
                        .unwrap();
                    let rhs = SmashElement::from_poly(&VectorField::from(g.clone()).apply(&f).unwrap());
                    assert_eq!(lhs, rhs, "g={g} f={f}");
                }
            }
        }
    }

    #[test]
    fn unit_is_two_sided() {
        let a = s("x1^2 # (d1)*(x1*d2) - x2 # x2^2*d1 + 3", 2);
        let one = SmashElement::one(2);
        assert_eq!(one.mul(&a).unwrap(), a);
        assert_eq!(a.mul(&one).unwrap(), a);
    }

    #[test]
    fn action_on_functions() {
        let a = s("x2 # d1 + 3", 2);
        let g = parse_polynomial("x1^2", 2).unwrap();
        assert_eq!(a.act_on_poly(&g).unwrap(), parse_polynomial("2*x1*x2 + 3*x1^2", 2).unwrap());
    }
}
