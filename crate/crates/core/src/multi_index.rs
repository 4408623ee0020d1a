//! Multi-indices in Z^n_{>=0}: exponent vectors for `x^k` and orders for `∂^k`.

use std::cmp::Ordering;
use std::fmt;

use num::{BigInt, One, Zero};

use crate::error::{check_dim, Result};

/// An exponent vector of fixed length `n`.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with `x1` the most significant variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        MultiIndex(exponents)
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    /// The standard basis vector ε_i (0-based `i`).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        MultiIndex(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// |k|
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.n(), other.n());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` if some entry would go negative.
    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        debug_assert_eq!(self.n(), other.n());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// `self - ε_i`, or `None` when the i-th entry is zero.
    pub fn minus_unit(&self, i: usize) -> Option<MultiIndex> {
        let mut e = self.0.clone();
        e[i] = e[i].checked_sub(1)?;
        Some(MultiIndex(e))
    }

    pub fn plus_unit(&self, i: usize) -> MultiIndex {
        let mut e = self.0.clone();
        e[i] += 1;
        MultiIndex(e)
    }

    /// Componentwise `self <= other`.
    pub fn leq(&self, other: &MultiIndex) -> Result<bool> {
        check_dim(self.n(), other.n())?;
        Ok(self.leq_unchecked(other))
    }

    pub(crate) fn leq_unchecked(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Π_i C(k_i, m_i); zero unless `m <= k`.
    pub fn binomial(&self, m: &MultiIndex) -> Result<BigInt> {
        check_dim(self.n(), m.n())?;
        Ok(self.binomial_unchecked(m))
    }

    pub(crate) fn binomial_unchecked(&self, m: &MultiIndex) -> BigInt {
        self.0
            .iter()
            .zip(&m.0)
            .map(|(&k, &m)| binomial(k, m))
            .product()
    }

    /// Π_i k_i!
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&k| factorial(k)).product()
    }

    /// Every `m` with `0 <= m <= self`, in odometer order (last index fastest).
    pub fn below(&self) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.n()];
        loop {
            out.push(MultiIndex(cur.clone()));
            let mut i = self.n();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] < self.0[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// All multi-indices of length `n` with |k| = `degree`.
    pub fn of_total(n: usize, degree: u32) -> Vec<MultiIndex> {
        fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == n {
                prefix.push(left);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=left).rev() {
                prefix.push(e);
                rec(n, left - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if degree == 0 {
                out.push(MultiIndex(Vec::new()));
            }
            return out;
        }
        rec(n, degree, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All multi-indices of length `n` with |k| <= `max`, by increasing degree.
    pub fn up_to_total(n: usize, max: u32) -> Vec<MultiIndex> {
        (0..=max).flat_map(|d| MultiIndex::of_total(n, d)).collect()
    }

    /// Monomial rendering with the given variable letter, e.g. `x1^2*x3`.
    /// Empty for the zero index.
    pub(crate) fn monomial_string(&self, var: char) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("{var}{}", i + 1)),
                _ => parts.push(format!("{var}{}^{e}", i + 1)),
            }
        }
        parts.join("*")
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// (-1)^e
pub(crate) fn sign(e: u32) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(mi(&[2, 1]).binomial(&mi(&[1, 1])).unwrap(), BigInt::from(2));
        assert_eq!(mi(&[3, 0]).binomial(&mi(&[0, 0])).unwrap(), BigInt::from(1));
        assert_eq!(mi(&[1, 0]).binomial(&mi(&[2, 0])).unwrap(), BigInt::from(0));
        assert!(mi(&[1]).binomial(&mi(&[1, 0])).is_err());
    }

    #[test]
    fn leq_examples() {
        assert!(mi(&[1, 0]).leq(&mi(&[1, 1])).unwrap());
        assert!(!mi(&[2, 0]).leq(&mi(&[1, 1])).unwrap());
        assert!(mi(&[0, 0]).leq(&mi(&[0, 0])).unwrap());
        assert!(mi(&[0]).leq(&mi(&[0, 0])).is_err());
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(mi(&[0, 0]).factorial(), BigInt::from(1));
        assert_eq!(mi(&[2, 1]).factorial(), BigInt::from(2));
        assert_eq!(mi(&[3, 0]).factorial(), BigInt::from(6));
    }

    #[test]
    fn below_enumerates_box() {
        let k = mi(&[2, 1]);
        let all = k.below();
        assert_eq!(all.len(), 6);
        assert!(all.iter().all(|m| m.leq(&k).unwrap()));
    }

    #[test]
    fn of_total_counts() {
        // C(d + n - 1, n - 1)
        assert_eq!(MultiIndex::of_total(2, 3).len(), 4);
        assert_eq!(MultiIndex::of_total(3, 2).len(), 6);
        assert_eq!(MultiIndex::up_to_total(2, 3).len(), 10);
    }

    #[test]
    fn graded_lex_order() {
        assert!(mi(&[0, 2]) > mi(&[1, 0]));
        assert!(mi(&[2, 0]) > mi(&[1, 1]));
        assert!(mi(&[1, 1]) > mi(&[0, 2]));
    }

    #[test]
    fn vandermonde() {
        // mi_binomial(k + l, m) = Σ_{a+b=m} C(k,a)·C(l,b)
        for k in MultiIndex::up_to_total(2, 3) {
            for l in MultiIndex::up_to_total(2, 2) {
                let kl = k.add(&l);
                for m in kl.below() {
                    let lhs = kl.binomial(&m).unwrap();
                    let rhs: BigInt = m
                        .below()
                        .iter()
                        .map(|a| {
                            let b = m.checked_sub(a).unwrap();
                            k.binomial(a).unwrap() * l.binomial(&b).unwrap()
                        })
                        .sum();
                    assert_eq!(lhs, rhs, "k={k} l={l} m={m}");
                }
            }
        }
    }
}
