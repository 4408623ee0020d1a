//! Commutative polynomials A = Q[x1, ..., xn].

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{check_dim, Result};
use crate::multi_index::MultiIndex;
use crate::{display, Rational};

/// A polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(MultiIndex::zero(n), c)
    }

    pub fn monomial(k: MultiIndex, c: Rational) -> Self {
        let mut p = Polynomial::zero(k.n());
        p.add_term(k, c);
        p
    }

    /// The coordinate function `x_{i+1}`.
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(MultiIndex::unit(n, i), Rational::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (MultiIndex, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (k, c) in terms {
            check_dim(n, k.n())?;
            p.add_term(k, c);
        }
        Ok(p)
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

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: &MultiIndex) -> Rational {
        self.terms.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::total).max()
    }

    pub(crate) fn add_term(&mut self, k: MultiIndex, c: Rational) {
        crate::accumulate(&mut self.terms, k, c);
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, other.n)?;
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.add(b), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies by `c · x^k`.
    pub fn mul_monomial(&self, k: &MultiIndex, c: &Rational) -> Result<Polynomial> {
        check_dim(self.n, k.n())?;
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            out.add_term(a.add(k), ca * c);
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..e {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    /// ∂^k f / ∂x^k.
    pub fn partial(&self, k: &MultiIndex) -> Result<Polynomial> {
        check_dim(self.n, k.n())?;
        let mut out = Polynomial::zero(self.n);
        for (a, c) in &self.terms {
            if let Some(rest) = a.checked_sub(k) {
                // a!/(a-k)! = k! · C(a, k)
                let falling: BigInt = a.binomial_unchecked(k) * k.factorial();
                out.add_term(rest, c * Rational::from_integer(falling));
            }
        }
        Ok(out)
    }

    /// ∂f/∂x_{i+1}.
    pub fn partial_var(&self, i: usize) -> Polynomial {
        self.partial(&MultiIndex::unit(self.n, i))
            .expect("unit index has matching dimension")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = display::combination(
            self.terms
                .iter()
                .rev()
                .map(|(k, c)| (c.clone(), k.monomial_string('x'), String::new())),
        );
        f.write_str(&s)
    }
}
