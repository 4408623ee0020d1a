//! The Weyl algebra D of polynomial differential operators, kept in the
//! normal-ordered basis `x^r ∂^s` (all multiplications left of all
//! derivatives).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::One;

use crate::error::{check_dim, Result};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::{display, Rational};

/// A normal-ordered word `x^r ∂^s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylMonomial {
    pub x: MultiIndex,
    pub d: MultiIndex,
}

impl WeylMonomial {
    pub fn new(x: MultiIndex, d: MultiIndex) -> Self {
        debug_assert_eq!(x.n(), d.n());
        WeylMonomial { x, d }
    }

    pub fn unit(n: usize) -> Self {
        WeylMonomial::new(MultiIndex::zero(n), MultiIndex::zero(n))
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }

    pub fn is_unit(&self) -> bool {
        self.x.is_zero() && self.d.is_zero()
    }

    pub(crate) fn word_string(&self) -> String {
        let xs = self.x.monomial_string('x');
        let ds = self.d.monomial_string('d');
        match (xs.is_empty(), ds.is_empty()) {
            (_, true) => xs,
            (true, false) => ds,
            (false, false) => format!("{xs}*{ds}"),
        }
    }
}

// Graded-lex on the concatenation (r, s).
impl Ord for WeylMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let t1 = self.x.total() + self.d.total();
        let t2 = other.x.total() + other.d.total();
        t1.cmp(&t2)
            .then_with(|| self.x.exponents().cmp(other.x.exponents()))
            .then_with(|| self.d.exponents().cmp(other.d.exponents()))
    }
}

impl PartialOrd for WeylMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite rational combination of normal-ordered words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    n: usize,
    terms: BTreeMap<WeylMonomial, Rational>,
}

impl WeylElement {
    pub fn zero(n: usize) -> Self {
        WeylElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::scalar(n, Rational::one())
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        Self::term(WeylMonomial::unit(n), c)
    }

    pub fn term(w: WeylMonomial, c: Rational) -> Self {
        let mut e = WeylElement::zero(w.n());
        e.add_term(w, c);
        e
    }

    /// `x^r ∂^s` with coefficient one.
    pub fn word(x: MultiIndex, d: MultiIndex) -> Self {
        Self::term(WeylMonomial::new(x, d), Rational::one())
    }

    /// Multiplication operator `x_{i+1}`.
    pub fn x(n: usize, i: usize) -> Self {
        Self::word(MultiIndex::unit(n, i), MultiIndex::zero(n))
    }

    /// Derivative `∂/∂x_{i+1}`.
    pub fn d(n: usize, i: usize) -> Self {
        Self::word(MultiIndex::zero(n), MultiIndex::unit(n, i))
    }

    /// The multiplication operator by `f`.
    pub fn from_polynomial(f: &Polynomial) -> Self {
        let n = f.n();
        let mut e = WeylElement::zero(n);
        for (k, c) in f.terms() {
            e.add_term(WeylMonomial::new(k.clone(), MultiIndex::zero(n)), c.clone());
        }
        e
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&WeylMonomial, &Rational)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, w: WeylMonomial, c: Rational) {
        crate::accumulate(&mut self.terms, w, c);
    }

    pub fn add(&self, other: &WeylElement) -> Result<WeylElement> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &WeylElement) -> Result<WeylElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> WeylElement {
        let mut out = WeylElement::zero(self.n);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    /// Product in the normal-ordered basis, using
    /// `∂^s x^r = Σ_{t <= min(r,s)} t! C(s,t) C(r,t) x^{r-t} ∂^{s-t}`.
    pub fn mul(&self, other: &WeylElement) -> Result<WeylElement> {
        check_dim(self.n, other.n)?;
        let mut out = WeylElement::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let coeff = ca * cb;
                mul_words_into(&mut out, a, b, &coeff);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> WeylElement {
        let mut acc = WeylElement::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &WeylElement) -> Result<WeylElement> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Applies the operator to `f`: `(x^r ∂^s)(f) = x^r · ∂^s f`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, f.n())?;
        let mut out = Polynomial::zero(self.n);
        for (w, c) in &self.terms {
            let g = f.partial(&w.d)?.mul_monomial(&w.x, c)?;
            out = out.add(&g)?;
        }
        Ok(out)
    }

    /// Coefficient of the pure-multiplication part, if the element has no
    /// derivative terms.
    pub fn as_polynomial(&self) -> Option<Polynomial> {
        let mut p = Polynomial::zero(self.n);
        for (w, c) in &self.terms {
            if !w.d.is_zero() {
                return None;
            }
            p.add_term(w.x.clone(), c.clone());
        }
        Some(p)
    }
}

fn mul_words_into(out: &mut WeylElement, a: &WeylMonomial, b: &WeylMonomial, coeff: &Rational) {
    let cap = MultiIndex::new(
        a.d.exponents()
            .iter()
            .zip(b.x.exponents())
            .map(|(s, r)| (*s).min(*r))
            .collect(),
    );
    let x_total = a.x.add(&b.x);
    let d_total = a.d.add(&b.d);
    for t in cap.below() {
        let c = t.factorial() * a.d.binomial_unchecked(&t) * b.x.binomial_unchecked(&t);
        let w = WeylMonomial::new(
            x_total.checked_sub(&t).expect("t <= r"),
            d_total.checked_sub(&t).expect("t <= s"),
        );
        out.add_term(w, coeff * Rational::from_integer(c));
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = display::combination(
            self.terms
                .iter()
                .rev()
                .map(|(w, c)| (c.clone(), w.word_string(), String::new())),
        );
        f.write_str(&s)
    }
}
