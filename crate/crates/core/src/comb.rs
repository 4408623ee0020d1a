//! Brute-force evaluation of the binomial identities behind the isomorphism
//! maps.
//!
//! Both sides of each identity are expanded as exact polynomials in `2n`
//! variables: `x1..xn` occupy indices `0..n` and `y1..yn` occupy `n..2n`.

use num::{One, Zero};

use crate::error::{check_dim, AlgebraError, Result};
use crate::multi_index::{sign, MultiIndex};
use crate::poly::Polynomial;
use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombPart {
    /// Σ_{0<=m<=k} (-1)^|m| C(k,m) = δ_{k,0}
    A,
    /// The shifted-sum identity over 0 < m <= k, 0 < j <= l.
    B,
    /// The alternating identity over 0 <= m <= k, 0 <= j <= l.
    C,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CombOutcome {
    pub lhs: Polynomial,
    pub rhs: Polynomial,
}

impl CombOutcome {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `x^a y^b` packed into one exponent vector of length `2n`.
pub fn xy(a: &MultiIndex, b: &MultiIndex) -> MultiIndex {
    let mut e = a.exponents().to_vec();
    e.extend_from_slice(b.exponents());
    MultiIndex::new(e)
}

/// Evaluates one part of the combinatorial lemma for `(k, l, p)`.
///
/// `p` is a 0-based direction. Part A ignores `l` and `p`; its sides are
/// constants in the `2n`-variable ring.
pub fn lemma_comb_check(
    part: CombPart,
    k: &MultiIndex,
    l: &MultiIndex,
    p: usize,
) -> Result<CombOutcome> {
    let n = k.n();
    if part == CombPart::A {
        let lhs: Rational = k
            .below()
            .iter()
            .map(|m| Rational::from_integer(k.binomial_unchecked(m) * sign(m.total())))
            .sum();
        let rhs = if k.is_zero() {
            Rational::one()
        } else {
            Rational::zero()
        };
        return Ok(CombOutcome {
            lhs: Polynomial::constant(2 * n, lhs),
            rhs: Polynomial::constant(2 * n, rhs),
        });
    }
    check_dim(n, l.n())?;
    if p >= n {
        return Err(AlgebraError::DirectionOutOfRange { dir: p, n });
    }
    let lp = Rational::from_integer(l.get(p).into());
    let kl = k.add(l);
    let mut lhs = Polynomial::zero(2 * n);
    let mut rhs = Polynomial::zero(2 * n);
    match part {
        CombPart::B => {
            for m in k.below().iter().filter(|m| !m.is_zero()) {
                for j in l.below().iter().filter(|j| !j.is_zero()) {
                    if j.get(p) == 0 {
                        continue;
                    }
                    let coeff = k.binomial_unchecked(m) * l.binomial_unchecked(j) * j.get(p);
                    let xe = kl.checked_sub(&m.add(j)).expect("m <= k, j <= l");
                    let ye = m.add(j).minus_unit(p).expect("j_p > 0");
                    lhs.add_term(xy(&xe, &ye), Rational::from_integer(coeff));
                }
            }
            if !lp.is_zero() {
                let top = kl.minus_unit(p).expect("l_p > 0");
                let low = l.minus_unit(p).expect("l_p > 0");
                for (bound, s) in [(&top, 1), (&low, -1)] {
                    for j in bound.below().iter().filter(|j| !j.is_zero()) {
                        let xe = top.checked_sub(j).expect("j <= bound <= top");
                        let c = Rational::from_integer(bound.binomial_unchecked(j) * s);
                        rhs.add_term(xy(&xe, j), &lp * c);
                    }
                }
            }
        }
        CombPart::C => {
            for m in k.below() {
                for j in l.below() {
                    if j.get(p) == 0 {
                        continue;
                    }
                    let mj = m.add(&j);
                    let xe = kl.checked_sub(&mj).expect("m <= k, j <= l");
                    let coeff = k.binomial_unchecked(&m)
                        * l.binomial_unchecked(&j)
                        * j.get(p)
                        * sign(xe.total());
                    let ye = mj.minus_unit(p).expect("j_p > 0");
                    lhs.add_term(xy(&xe, &ye), Rational::from_integer(coeff));
                }
            }
            if !lp.is_zero() {
                let top = kl.minus_unit(p).expect("l_p > 0");
                for j in top.below() {
                    let xe = top.checked_sub(&j).expect("j <= top");
                    let c = top.binomial_unchecked(&j) * sign(xe.total());
                    rhs.add_term(xy(&xe, &j), &lp * Rational::from_integer(c));
                }
            }
        }
        CombPart::A => unreachable!(),
    }
    Ok(CombOutcome { lhs, rhs })
}

/// Runs every part for all `k, l` with |k|, |l| <= `max_total` and every `p`.
/// Returns the failing cases (empty on success).
pub fn lemma_comb_suite(n: usize, max_total: u32) -> Vec<(CombPart, MultiIndex, MultiIndex, usize)> {
    let indices = MultiIndex::up_to_total(n, max_total);
    let mut failures = Vec::new();
    for k in &indices {
        let zero = MultiIndex::zero(n);
        if !lemma_comb_check(CombPart::A, k, &zero, 0)
            .map(|o| o.holds())
            .unwrap_or(false)
        {
            failures.push((CombPart::A, k.clone(), zero, 0));
        }
        for l in &indices {
            for p in 0..n {
                for part in [CombPart::B, CombPart::C] {
                    let ok = lemma_comb_check(part, k, l, p)
                        .map(|o| o.holds())
                        .unwrap_or(false);
                    if !ok {
                        failures.push((part, k.clone(), l.clone(), p));
                    }
                }
            }
        }
    }
    failures
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(v: &[u32]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn part_a_examples() {
        let z = mi(&[0, 0]);
        let o = lemma_comb_check(CombPart::A, &z, &z, 0).unwrap();
        assert!(o.holds());
        assert_eq!(o.lhs, Polynomial::one(4));
        let o = lemma_comb_check(CombPart::A, &mi(&[1, 0]), &z, 0).unwrap();
        assert!(o.holds());
        assert!(o.lhs.is_zero());
    }

    #[test]
    fn part_b_single_variable() {
        let o = lemma_comb_check(CombPart::B, &mi(&[1]), &mi(&[2]), 0).unwrap();
        assert!(o.holds());
        assert!(!o.lhs.is_zero());
    }

    #[test]
    fn direction_out_of_range() {
        assert!(lemma_comb_check(CombPart::B, &mi(&[1]), &mi(&[1]), 1).is_err());
        assert!(lemma_comb_check(CombPart::C, &mi(&[1]), &mi(&[1, 0]), 0).is_err());
    }

    // Closed forms from the generating functions:
    //   (b) lhs = ((x+y)^k - x^k) · ∂/∂y_p ((x+y)^l - x^l)
    //   (c) lhs = (y-x)^k · ∂/∂y_p (y-x)^l
    fn closed_forms(k: &MultiIndex, l: &MultiIndex, p: usize) -> (Polynomial, Polynomial) {
        let n = k.n();
        let var = |i| Polynomial::var(2 * n, i);
        let power = |base: &dyn Fn(usize) -> Polynomial, e: &MultiIndex| {
            (0..n).fold(Polynomial::one(2 * n), |acc, i| {
                acc.mul(&base(i).pow(e.get(i))).unwrap()
            })
        };
        let sum = |i: usize| var(i).add(&var(n + i)).unwrap();
        let diff = |i: usize| var(n + i).sub(&var(i)).unwrap();
        let x = |i: usize| var(i);
        let b_left = power(&sum, k).sub(&power(&x, k)).unwrap();
        let b_right = power(&sum, l).sub(&power(&x, l)).unwrap().partial_var(n + p);
        let c = power(&diff, k).mul(&power(&diff, l).partial_var(n + p)).unwrap();
        (b_left.mul(&b_right).unwrap(), c)
    }

    #[test]
    fn brute_force_matches_closed_forms() {
        for n in 1..=2 {
            let max = if n == 1 { 4 } else { 2 };
            let idx = MultiIndex::up_to_total(n, max);
            for k in &idx {
                for l in &idx {
                    for p in 0..n {
                        let (b, c) = closed_forms(k, l, p);
                        let ob = lemma_comb_check(CombPart::B, k, l, p).unwrap();
                        let oc = lemma_comb_check(CombPart::C, k, l, p).unwrap();
                        assert_eq!(ob.lhs, b, "b lhs k={k} l={l} p={p}");
                        assert_eq!(ob.rhs, b, "b rhs k={k} l={l} p={p}");
                        assert_eq!(oc.lhs, c, "c lhs k={k} l={l} p={p}");
                        assert_eq!(oc.rhs, c, "c rhs k={k} l={l} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn part_a_small_suite() {
        for n in 1..=3 {
            for k in MultiIndex::up_to_total(n, 4) {
                let z = MultiIndex::zero(n);
                assert!(lemma_comb_check(CombPart::A, &k, &z, 0).unwrap().holds());
            }
        }
    }
}
