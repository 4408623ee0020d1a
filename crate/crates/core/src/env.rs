//! Universal enveloping algebras U(V) and U(L+) in PBW normal form.
//!
//! A PBW word is a weakly increasing sequence of generators in the order of
//! [`VectorFieldGen`]. Products are normalized by rewriting the leftmost
//! descent `g h` (with `g > h`) into `h g + [g, h]`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num::One;

use crate::error::{check_dim, AlgebraError, Result};
use crate::poly::Polynomial;
use crate::witt::{VectorField, VectorFieldGen};
use crate::{display, Rational};

/// A weakly increasing word of generators. The empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PbwMonomial(Vec<VectorFieldGen>);

impl PbwMonomial {
    pub fn unit() -> Self {
        PbwMonomial(Vec::new())
    }

    /// Sorts `gens` into PBW order. Only valid when the generators commute,
    /// e.g. a word of partial derivatives.
    pub fn from_commuting(mut gens: Vec<VectorFieldGen>) -> Self {
        gens.sort();
        PbwMonomial(gens)
    }

    pub fn gens(&self) -> &[VectorFieldGen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn in_lplus(&self) -> bool {
        self.0.iter().all(VectorFieldGen::in_lplus)
    }

    /// Rendering used by every printer; the empty word renders as `""`.
    pub(crate) fn word_string(&self) -> String {
        match self.0.as_slice() {
            [] => String::new(),
            [g] => g.to_string(),
            gens => {
                let mut parts = Vec::new();
                let mut i = 0;
                while i < gens.len() {
                    let mut j = i + 1;
                    while j < gens.len() && gens[j] == gens[i] {
                        j += 1;
                    }
                    if j - i == 1 {
                        parts.push(format!("({})", gens[i]));
                    } else {
                        parts.push(format!("({})^{}", gens[i], j - i));
                    }
                    i = j;
                }
                parts.join("*")
            }
        }
    }
}

impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&self.word_string())
        }
    }
}

/// Which enveloping algebra an element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Restriction {
    /// U(V)
    All,
    /// U(L+): every generator has |k| >= 1.
    Lplus,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EnvElement {
    n: usize,
    restriction: Restriction,
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl EnvElement {
    pub fn zero(n: usize, restriction: Restriction) -> Self {
        EnvElement {
            n,
            restriction,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, restriction: Restriction) -> Self {
        Self::scalar(n, restriction, Rational::one())
    }

    pub fn scalar(n: usize, restriction: Restriction, c: Rational) -> Self {
        let mut e = Self::zero(n, restriction);
        e.add_term(PbwMonomial::unit(), c);
        e
    }

    pub fn from_gen(g: VectorFieldGen, restriction: Restriction) -> Result<Self> {
        Self::from_vector_field(&VectorField::from_gen(g), restriction)
    }

    /// Embeds a vector field as a sum of length-one words.
    pub fn from_vector_field(v: &VectorField, restriction: Restriction) -> Result<Self> {
        let mut e = Self::zero(v.n(), restriction);
        for (g, c) in v.terms() {
            check_gen(g, restriction)?;
            e.add_term(PbwMonomial(vec![g.clone()]), c.clone());
        }
        Ok(e)
    }

    /// The product `g_1 g_2 ... g_m` of arbitrary (unsorted) generators.
    pub fn from_word(n: usize, restriction: Restriction, word: &[VectorFieldGen]) -> Result<Self> {
        for g in word {
            check_dim(n, g.n())?;
            check_gen(g, restriction)?;
        }
        let mut out = Self::zero(n, restriction);
        normalize_into(&mut out.terms, vec![(word.to_vec(), Rational::one())]);
        Ok(out)
    }

    /// A single PBW monomial. Fails if the word is not weakly increasing.
    pub fn from_monomial(n: usize, restriction: Restriction, w: PbwMonomial) -> Result<Self> {
        for g in w.gens() {
            check_dim(n, g.n())?;
            check_gen(g, restriction)?;
        }
        assert!(w.0.windows(2).all(|p| p[0] <= p[1]), "PBW word not ordered");
        let mut out = Self::zero(n, restriction);
        out.add_term(w, Rational::one());
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn restriction(&self) -> Restriction {
        self.restriction
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    /// Longest word length, 0 for scalars and zero.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(PbwMonomial::len).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, w: PbwMonomial, c: Rational) {
        crate::accumulate(&mut self.terms, w, c);
    }

    fn compatible(&self, other: &EnvElement) -> Result<()> {
        check_dim(self.n, other.n)?;
        if self.restriction != other.restriction {
            return Err(AlgebraError::RestrictionMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &EnvElement) -> Result<EnvElement> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &EnvElement) -> Result<EnvElement> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> EnvElement {
        let mut out = Self::zero(self.n, self.restriction);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &EnvElement) -> Result<EnvElement> {
        self.compatible(other)?;
        let mut pending = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut word = a.0.clone();
                word.extend_from_slice(&b.0);
                pending.push((word, ca * cb));
            }
        }
        let mut out = Self::zero(self.n, self.restriction);
        normalize_into(&mut out.terms, pending);
        Ok(out)
    }

    /// Left multiplication by a raw (not necessarily ordered) word.
    pub(crate) fn mul_raw_left(&self, word: &[VectorFieldGen], c: &Rational) -> EnvElement {
        let pending = self
            .terms
            .iter()
            .map(|(b, cb)| {
                let mut w = word.to_vec();
                w.extend_from_slice(&b.0);
                (w, c * cb)
            })
            .collect();
        let mut out = Self::zero(self.n, self.restriction);
        normalize_into(&mut out.terms, pending);
        out
    }

    pub fn pow(&self, e: u32) -> EnvElement {
        let mut acc = Self::one(self.n, self.restriction);
        for _ in 0..e {
            acc = acc.mul(self).expect("compatible with itself");
        }
        acc
    }

    pub fn commutator(&self, other: &EnvElement) -> Result<EnvElement> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Action on A: a word acts by composing generator actions right to left.
    pub fn act_on_poly(&self, f: &Polynomial) -> Result<Polynomial> {
        check_dim(self.n, f.n())?;
        let mut out = Polynomial::zero(self.n);
        for (w, c) in &self.terms {
            out = out.add(&act_word(w.gens(), f)?.scale(c))?;
        }
        Ok(out)
    }

    /// Converts to U(V) or U(L+) without changing terms.
    pub fn with_restriction(&self, restriction: Restriction) -> Result<EnvElement> {
        if restriction == Restriction::Lplus {
            for w in self.terms.keys() {
                for g in w.gens() {
                    check_gen(g, restriction)?;
                }
            }
        }
        Ok(EnvElement {
            n: self.n,
            restriction,
            terms: self.terms.clone(),
        })
    }
}

fn check_gen(g: &VectorFieldGen, restriction: Restriction) -> Result<()> {
    if restriction == Restriction::Lplus && !g.in_lplus() {
        return Err(AlgebraError::NotInLplus(g.to_string()));
    }
    Ok(())
}

/// Applies a raw word to `f`, rightmost generator first.
pub fn act_word(word: &[VectorFieldGen], f: &Polynomial) -> Result<Polynomial> {
    let mut g = f.clone();
    for gen in word.iter().rev() {
        if g.is_zero() {
            break;
        }
        g = gen.apply(&g)?;
    }
    Ok(g)
}

/// All `2^m` splits of the coproduct `Δ(g_1 ... g_m)`, each side keeping the
/// relative order of the word.
pub fn coproduct_split(word: &[VectorFieldGen]) -> Vec<(Vec<VectorFieldGen>, Vec<VectorFieldGen>)> {
    let m = word.len();
    (0u64..1 << m)
        .map(|mask| {
            let mut left = Vec::new();
            let mut right = Vec::new();
            for (i, g) in word.iter().enumerate() {
                if mask >> (m - 1 - i) & 1 == 1 {
                    right.push(g.clone());
                } else {
                    left.push(g.clone());
                }
            }
            (left, right)
        })
        .collect()
}

fn inversions(word: &[VectorFieldGen]) -> usize {
    let mut count = 0;
    for i in 0..word.len() {
        for j in i + 1..word.len() {
            if word[i] > word[j] {
                count += 1;
            }
        }
    }
    count
}

/// Rewrites raw words into PBW normal form and accumulates into `out`.
///
/// Pending words are processed in decreasing (length, inversions) order, so
/// every rewrite lands strictly below the word it came from and equal words
/// are merged before they are rewritten.
fn normalize_into(
    out: &mut BTreeMap<PbwMonomial, Rational>,
    words: Vec<(Vec<VectorFieldGen>, Rational)>,
) {
    type Key = (usize, usize, Vec<VectorFieldGen>);
    let mut pending: BTreeMap<Key, Rational> = BTreeMap::new();
    let push = |pending: &mut BTreeMap<Key, Rational>, w: Vec<VectorFieldGen>, c: Rational| {
        let key = (w.len(), inversions(&w), w);
        crate::accumulate(pending, key, c);
    };
    for (w, c) in words {
        push(&mut pending, w, c);
    }
    let mut brackets: HashMap<(VectorFieldGen, VectorFieldGen), VectorField> = HashMap::new();
    while let Some(((_, inv, word), c)) = pending.pop_last() {
        if inv == 0 {
            crate::accumulate(out, PbwMonomial(word), c);
            continue;
        }
        let i = word
            .windows(2)
            .position(|p| p[0] > p[1])
            .expect("inversion count > 0");
        let (g, h) = (word[i].clone(), word[i + 1].clone());
        let mut swapped = word.clone();
        swapped.swap(i, i + 1);
        push(&mut pending, swapped, c.clone());
        let br = brackets
            .entry((g.clone(), h.clone()))
            .or_insert_with(|| g.bracket(&h).expect("same dimension"));
        for (t, ct) in br.terms() {
            let mut shorter = Vec::with_capacity(word.len() - 1);
            shorter.extend_from_slice(&word[..i]);
            shorter.push(t.clone());
            shorter.extend_from_slice(&word[i + 2..]);
            push(&mut pending, shorter, &c * ct);
        }
    }
}

impl fmt::Display for EnvElement {
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

impl Default for PbwMonomial {
    fn default() -> Self {
        PbwMonomial::unit()
    }
}
