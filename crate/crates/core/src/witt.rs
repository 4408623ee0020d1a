//! The Witt algebra V of polynomial vector fields on affine n-space, its
//! grading, and the subalgebra L+ of fields vanishing at the origin.

use std::collections::BTreeMap;
use std::fmt;

use num::One;

use crate::error::{check_dim, AlgebraError, Result};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::{display, Rational};

/// The monomial field `x^k ∂/∂x_{dir+1}`.
///
/// Ordered by (|k|, lex on k, dir); this is the PBW generator order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorFieldGen {
    k: MultiIndex,
    dir: usize,
}

impl VectorFieldGen {
    pub fn new(k: MultiIndex, dir: usize) -> Result<Self> {
        if dir >= k.n() {
            return Err(AlgebraError::DirectionOutOfRange { dir, n: k.n() });
        }
        Ok(VectorFieldGen { k, dir })
    }

    /// `∂/∂x_{dir+1}`.
    pub fn partial(n: usize, dir: usize) -> Self {
        VectorFieldGen::new(MultiIndex::zero(n), dir).expect("dir < n")
    }

    pub fn k(&self) -> &MultiIndex {
        &self.k
    }

    pub fn dir(&self) -> usize {
        self.dir
    }

    pub fn n(&self) -> usize {
        self.k.n()
    }

    /// |k| - 1
    pub fn degree(&self) -> i64 {
        i64::from(self.k.total()) - 1
    }

    pub fn in_lplus(&self) -> bool {
        self.k.total() >= 1
    }

    /// All generators with degree in `min..=max`.
    pub fn all_of_degree(n: usize, min: i64, max: i64) -> Vec<VectorFieldGen> {
        let mut out = Vec::new();
        for d in min.max(-1)..=max {
            for k in MultiIndex::of_total(n, (d + 1) as u32) {
                for dir in 0..n {
                    out.push(VectorFieldGen { k: k.clone(), dir });
                }
            }
        }
        out.sort();
        out
    }

    /// `[x^k ∂_p, x^l ∂_q] = l_p x^{k+l-ε_p} ∂_q - k_q x^{k+l-ε_q} ∂_p`.
    pub fn bracket(&self, other: &VectorFieldGen) -> Result<VectorField> {
        check_dim(self.n(), other.n())?;
        let (k, p) = (&self.k, self.dir);
        let (l, q) = (&other.k, other.dir);
        let kl = k.add(l);
        let mut out = VectorField::zero(self.n());
        for (coeff, shift, target, sign) in [(l.get(p), p, q, 1), (k.get(q), q, p, -1)] {
            match kl.minus_unit(shift) {
                Some(e) => {
                    if coeff != 0 {
                        let c = Rational::from_integer((i64::from(coeff) * sign).into());
                        out.add_term(VectorFieldGen { k: e, dir: target }, c);
                    }
                }
                // A negative exponent can only appear with a vanishing prefactor.
                None => assert_eq!(coeff, 0, "bracket index bookkeeping broken"),
            }
        }
        Ok(out)
    }

    /// `x^k · ∂f/∂x_p`.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n(), f.n())?;
        f.partial_var(self.dir).mul_monomial(&self.k, &Rational::one())
    }
}

impl fmt::Display for VectorFieldGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xs = self.k.monomial_string('x');
        if xs.is_empty() {
            write!(f, "d{}", self.dir + 1)
        } else {
            write!(f, "{xs}*d{}", self.dir + 1)
        }
    }
}

/// A polynomial vector field, stored expanded over monomial generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VectorField {
    n: usize,
    terms: BTreeMap<VectorFieldGen, Rational>,
}

impl VectorField {
    pub fn zero(n: usize) -> Self {
        VectorField {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_gen(g: VectorFieldGen) -> Self {
        let mut v = VectorField::zero(g.n());
        v.add_term(g, Rational::one());
        v
    }

    /// `f ∂/∂x_{dir+1}` expanded over monomials.
    pub fn from_component(f: &Polynomial, dir: usize) -> Result<Self> {
        let n = f.n();
        if dir >= n {
            return Err(AlgebraError::DirectionOutOfRange { dir, n });
        }
        let mut v = VectorField::zero(n);
        for (k, c) in f.terms() {
            v.add_term(VectorFieldGen { k: k.clone(), dir }, c.clone());
        }
        Ok(v)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&VectorFieldGen, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &VectorFieldGen) -> Rational {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    /// The polynomial `f_i` in `Σ f_i ∂_i`.
    pub fn component(&self, dir: usize) -> Polynomial {
        let mut f = Polynomial::zero(self.n);
        for (g, c) in self.terms.iter().filter(|(g, _)| g.dir == dir) {
            f.add_term(g.k.clone(), c.clone());
        }
        f
    }

    pub(crate) fn add_term(&mut self, g: VectorFieldGen, c: Rational) {
        crate::accumulate(&mut self.terms, g, c);
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        check_dim(self.n, other.n)?;
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &VectorField) -> Result<VectorField> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> VectorField {
        let mut out = VectorField::zero(self.n);
        for (g, v) in &self.terms {
            out.add_term(g.clone(), v * c);
        }
        out
    }

    /// Lie bracket, the bilinear extension of [`VectorFieldGen::bracket`].
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        check_dim(self.n, other.n)?;
        let mut out = VectorField::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let c = ca * cb;
                for (g, v) in a.bracket(b)?.terms {
                    out.add_term(g, v * &c);
                }
            }
        }
        Ok(out)
    }

    /// Derivation action on A.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, f.n())?;
        let mut out = Polynomial::zero(self.n);
        for dir in 0..self.n {
            let comp = self.component(dir);
            if !comp.is_zero() {
                out = out.add(&comp.mul(&f.partial_var(dir))?)?;
            }
        }
        Ok(out)
    }

    /// True when every generator has |k| >= 1.
    pub fn in_lplus(&self) -> bool {
        self.terms.keys().all(VectorFieldGen::in_lplus)
    }

    /// The generator when this field is exactly one generator with
    /// coefficient one.
    pub fn as_gen(&self) -> Option<&VectorFieldGen> {
        match self.terms.iter().next() {
            Some((g, c)) if self.terms.len() == 1 && c.is_one() => Some(g),
            _ => None,
        }
    }
}

impl From<VectorFieldGen> for VectorField {
    fn from(g: VectorFieldGen) -> Self {
        VectorField::from_gen(g)
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = display::combination(
            self.terms
                .iter()
                .rev()
                .map(|(g, c)| (c.clone(), g.to_string(), String::new())),
        );
        f.write_str(&s)
    }
}
