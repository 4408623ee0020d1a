//! The mutually inverse algebra maps
//! φ: A#U(V) → D⊗U(L+) and ψ: D⊗U(L+) → A#U(V),
//! together with exact checks of the relations that make them homomorphisms.
//!
//! Both maps are given on generators only and extended multiplicatively:
//!
//! * φ(f # 1) = f ⊗ 1
//! * φ(1 # x^k∂_p) = x^k∂_p ⊗ 1 + Σ_{0<m<=k} C(k,m) x^{k-m} ⊗ x^m∂_p
//! * ψ(x^r∂^s ⊗ 1) = x^r # ∂_1^{s_1}···∂_n^{s_n}
//! * ψ(1 ⊗ x^m∂_p) = Σ_{0<=k<=m} (-1)^{|m-k|} C(m,k) x^{m-k} # x^k∂_p

use std::collections::HashMap;

use num::One;

use crate::env::{EnvElement, PbwMonomial, Restriction};
use crate::error::{AlgebraError, Result};
use crate::multi_index::{sign, MultiIndex};
use crate::poly::Polynomial;
use crate::smash::SmashElement;
use crate::tensor::TensorElement;
use crate::weyl::{WeylElement, WeylMonomial};
use crate::witt::{VectorField, VectorFieldGen};
use crate::Rational;

/// φ on a single vector-field generator.
pub fn phi_gen(g: &VectorFieldGen) -> TensorElement {
    let n = g.n();
    let k = g.k();
    let mut out = TensorElement::from_weyl(&WeylElement::word(k.clone(), MultiIndex::unit(n, g.dir())));
    for m in k.below().into_iter().filter(|m| !m.is_zero()) {
        let c = Rational::from_integer(k.binomial_unchecked(&m));
        let left = WeylMonomial::new(k.checked_sub(&m).expect("m <= k"), MultiIndex::zero(n));
        let right = VectorFieldGen::new(m, g.dir()).expect("dir < n");
        let term = TensorElement::term(left, PbwMonomial::from_commuting(vec![right]), c)
            .expect("|m| >= 1");
        out = out.add(&term).expect("same dimension");
    }
    out
}

/// Memoizing evaluator for φ and ψ on generators.
#[derive(Debug, Default)]
pub struct IsoMaps {
    phi_cache: HashMap<VectorFieldGen, TensorElement>,
    psi_cache: HashMap<VectorFieldGen, SmashElement>,
}

impl IsoMaps {
    pub fn new() -> Self {
        Self::default()
    }

    fn phi_of_gen(&mut self, g: &VectorFieldGen) -> &TensorElement {
        self.phi_cache.entry(g.clone()).or_insert_with(|| phi_gen(g))
    }

    fn psi_of_gen(&mut self, g: &VectorFieldGen) -> Result<&SmashElement> {
        if !self.psi_cache.contains_key(g) {
            let v = psi_l(g.k(), g.dir())?;
            self.psi_cache.insert(g.clone(), v);
        }
        Ok(&self.psi_cache[g])
    }

    pub fn phi(&mut self, a: &SmashElement) -> Result<TensorElement> {
        let n = a.n();
        let mut out = TensorElement::zero(n);
        for (m, c) in a.terms() {
            let mut acc = TensorElement::from_weyl(&WeylElement::term(
                WeylMonomial::new(m.x.clone(), MultiIndex::zero(n)),
                c.clone(),
            ));
            for g in m.w.gens() {
                let img = self.phi_of_gen(g).clone();
                acc = acc.mul(&img)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }

    pub fn psi(&mut self, b: &TensorElement) -> Result<SmashElement> {
        let n = b.n();
        let mut out = SmashElement::zero(n);
        for (m, c) in b.terms() {
            let mut acc = psi_d(&m.d.x, &m.d.d).scale(c);
            for g in m.w.gens() {
                let img = self.psi_of_gen(g)?.clone();
                acc = acc.mul(&img)?;
            }
            out = out.add(&acc)?;
        }
        Ok(out)
    }
}

/// φ, extended linearly and multiplicatively.
pub fn phi(a: &SmashElement) -> Result<TensorElement> {
    IsoMaps::new().phi(a)
}

/// ψ, extended linearly and multiplicatively.
pub fn psi(b: &TensorElement) -> Result<SmashElement> {
    IsoMaps::new().psi(b)
}

/// ψ(x^r ∂^s ⊗ 1) = x^r # ∂_1^{s_1}···∂_n^{s_n}
pub fn psi_d(r: &MultiIndex, s: &MultiIndex) -> SmashElement {
    let n = r.n();
    let mut word = Vec::new();
    for i in 0..n {
        for _ in 0..s.get(i) {
            word.push(VectorFieldGen::partial(n, i));
        }
    }
    SmashElement::term(r.clone(), PbwMonomial::from_commuting(word), Rational::one())
}

/// ψ(1 ⊗ x^m ∂_p), defined for |m| >= 1.
pub fn psi_l(m: &MultiIndex, dir: usize) -> Result<SmashElement> {
    let n = m.n();
    if m.is_zero() {
        return Err(AlgebraError::NotInLplus(VectorFieldGen::partial(n, dir).to_string()));
    }
    let mut out = SmashElement::zero(n);
    for k in m.below() {
        let rest = m.checked_sub(&k).expect("k <= m");
        let c = Rational::from_integer(m.binomial_unchecked(&k) * sign(rest.total()));
        let g = VectorFieldGen::new(k, dir)?;
        out = out.add(&SmashElement::term(rest, PbwMonomial::from_commuting(vec![g]), c))?;
    }
    Ok(out)
}

/// Both sides of an identity, kept for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> Comparison<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn env_gen(g: &VectorFieldGen, r: Restriction) -> Result<EnvElement> {
    EnvElement::from_gen(g.clone(), r)
}

/// [φ(x^k∂_p), φ(x^l∂_q)] = φ([x^k∂_p, x^l∂_q])
pub fn check_phi_bracket(g1: &VectorFieldGen, g2: &VectorFieldGen) -> Result<Comparison<TensorElement>> {
    let lhs = phi_gen(g1).commutator(&phi_gen(g2))?;
    let br = g1.bracket(g2)?;
    let rhs = phi(&SmashElement::from_env(&EnvElement::from_vector_field(&br, Restriction::All)?))?;
    Ok(Comparison { lhs, rhs })
}

/// [φ(x^k∂_p), φ(x^l)] = φ([x^k∂_p, x^l]), where the right bracket in the
/// smash product is `(x^k∂_p)(x^l) # 1`.
pub fn check_phi_function(g: &VectorFieldGen, l: &MultiIndex) -> Result<Comparison<TensorElement>> {
    let f = Polynomial::monomial(l.clone(), Rational::one());
    let lhs = phi_gen(g).commutator(&TensorElement::from_weyl(&WeylElement::from_polynomial(&f)))?;
    let rhs = phi(&SmashElement::from_poly(&VectorField::from(g.clone()).apply(&f)?))?;
    Ok(Comparison { lhs, rhs })
}

/// [ψ(x^k∂_p), ψ(x^l∂_q)] = ψ([x^k∂_p, x^l∂_q]) for L+ generators.
pub fn check_psi_bracket(g1: &VectorFieldGen, g2: &VectorFieldGen) -> Result<Comparison<SmashElement>> {
    let lhs = psi_l(g1.k(), g1.dir())?.commutator(&psi_l(g2.k(), g2.dir())?)?;
    let br = g1.bracket(g2)?;
    let rhs = psi(&TensorElement::from_env(&EnvElement::from_vector_field(&br, Restriction::Lplus)?)?)?;
    Ok(Comparison { lhs, rhs })
}

/// The Weyl relations survive ψ: [ψ(x_p), ψ(x_q)] = 0, [ψ(∂_p), ψ(∂_q)] = 0
/// and [ψ(∂_p), ψ(x_q)] = δ_{p,q}.
pub fn check_psi_weyl(n: usize, p: usize, q: usize) -> Result<Vec<Comparison<SmashElement>>> {
    let x = |i| psi(&TensorElement::from_weyl(&WeylElement::x(n, i)));
    let d = |i| psi(&TensorElement::from_weyl(&WeylElement::d(n, i)));
    let delta = if p == q {
        SmashElement::one(n)
    } else {
        SmashElement::zero(n)
    };
    Ok(vec![
        Comparison {
            lhs: x(p)?.commutator(&x(q)?)?,
            rhs: SmashElement::zero(n),
        },
        Comparison {
            lhs: d(p)?.commutator(&d(q)?)?,
            rhs: SmashElement::zero(n),
        },
        Comparison {
            lhs: d(p)?.commutator(&x(q)?)?,
            rhs: delta,
        },
    ])
}

/// ψ(D) commutes with ψ(U(L+)) on generators: [ψ(x_i), ψ(g)] = 0 and
/// [ψ(∂_i), ψ(g)] = 0.
pub fn check_psi_commuting(i: usize, g: &VectorFieldGen) -> Result<Vec<Comparison<SmashElement>>> {
    let n = g.n();
    let pg = psi(&TensorElement::from_env(&env_gen(g, Restriction::Lplus)?)?)?;
    let mut out = Vec::new();
    for gen in [WeylElement::x(n, i), WeylElement::d(n, i)] {
        let pd = psi(&TensorElement::from_weyl(&gen))?;
        out.push(Comparison {
            lhs: pd.commutator(&pg)?,
            rhs: SmashElement::zero(n),
        });
    }
    Ok(out)
}

/// ψ(φ(a)) = a
pub fn check_roundtrip(a: &SmashElement) -> Result<Comparison<SmashElement>> {
    let mut maps = IsoMaps::new();
    let there = maps.phi(a)?;
    Ok(Comparison {
        lhs: maps.psi(&there)?,
        rhs: a.clone(),
    })
}

/// φ(ψ(b)) = b
pub fn check_roundtrip_tensor(b: &TensorElement) -> Result<Comparison<TensorElement>> {
    let mut maps = IsoMaps::new();
    let there = maps.psi(b)?;
    Ok(Comparison {
        lhs: maps.phi(&there)?,
        rhs: b.clone(),
    })
}

/// φ(ab) = φ(a)φ(b)
pub fn check_phi_multiplicative(a: &SmashElement, b: &SmashElement) -> Result<Comparison<TensorElement>> {
    let mut maps = IsoMaps::new();
    let lhs = maps.phi(&a.mul(b)?)?;
    let rhs = maps.phi(a)?.mul(&maps.phi(b)?)?;
    Ok(Comparison { lhs, rhs })
}

/// ψ(ab) = ψ(a)ψ(b)
pub fn check_psi_multiplicative(a: &TensorElement, b: &TensorElement) -> Result<Comparison<SmashElement>> {
    let mut maps = IsoMaps::new();
    let lhs = maps.psi(&a.mul(b)?)?;
    let rhs = maps.psi(a)?.mul(&maps.psi(b)?)?;
    Ok(Comparison { lhs, rhs })
}

/// A failed relation in one of the batch suites.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFailure {
    pub relation: &'static str,
    pub case: String,
}

/// Exhaustive bracket, function-bracket and Weyl/commutation checks over generators
/// with |k| <= `max_total`.
pub fn hom_suite(n: usize, max_total: u32) -> Result<(usize, Vec<RelationFailure>)> {
    let all = VectorFieldGen::all_of_degree(n, -1, i64::from(max_total) - 1);
    let lplus: Vec<_> = all.iter().filter(|g| g.in_lplus()).cloned().collect();
    let monomials = MultiIndex::up_to_total(n, max_total);
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut record = |rel: &'static str, ok: bool, case: String| {
        checked += 1;
        if !ok {
            failures.push(RelationFailure { relation: rel, case });
        }
    };
    for g1 in &all {
        for g2 in &all {
            record("phi-bracket", check_phi_bracket(g1, g2)?.holds(), format!("[{g1}, {g2}]"));
        }
        for l in &monomials {
            record("phi-function", check_phi_function(g1, l)?.holds(), format!("[{g1}, x^{l}]"));
        }
    }
    for g1 in &lplus {
        for g2 in &lplus {
            record("psi-bracket", check_psi_bracket(g1, g2)?.holds(), format!("[{g1}, {g2}]"));
        }
        for i in 0..n {
            let ok = check_psi_commuting(i, g1)?.iter().all(Comparison::holds);
            record("psi-commute", ok, format!("[D_{}, {g1}]", i + 1));
        }
    }
    for p in 0..n {
        for q in 0..n {
            let ok = check_psi_weyl(n, p, q)?.iter().all(Comparison::holds);
            record("psi-weyl", ok, format!("p={} q={}", p + 1, q + 1));
        }
    }
    Ok((checked, failures))
}

/// ψ∘φ and φ∘ψ on the generator families: 1 # x^k∂_p and f # 1 (|k|, |r| <=
/// `max_total`), x^r∂^s ⊗ 1 (|r|, |s| <= 2) and 1 ⊗ x^m∂_p (1 <= |m| <=
/// `max_total`).
pub fn inverse_generator_suite(n: usize, max_total: u32) -> Result<(usize, Vec<RelationFailure>)> {
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut record = |rel: &'static str, ok: bool, case: String| {
        checked += 1;
        if !ok {
            failures.push(RelationFailure { relation: rel, case });
        }
    };
    for g in VectorFieldGen::all_of_degree(n, -1, i64::from(max_total) - 1) {
        let a = SmashElement::from_gen(&g);
        record("psi∘phi", check_roundtrip(&a)?.holds(), format!("1 # {g}"));
        if g.in_lplus() {
            let b = TensorElement::from_env(&env_gen(&g, Restriction::Lplus)?)?;
            record("phi∘psi", check_roundtrip_tensor(&b)?.holds(), format!("1 @ {g}"));
        }
    }
    for r in MultiIndex::up_to_total(n, max_total) {
        let a = SmashElement::from_poly(&Polynomial::monomial(r.clone(), Rational::one()));
        record("psi∘phi", check_roundtrip(&a)?.holds(), format!("{a}"));
    }
    let small = MultiIndex::up_to_total(n, 2);
    for r in &small {
        for s in &small {
            let b = TensorElement::from_weyl(&WeylElement::word(r.clone(), s.clone()));
            record("phi∘psi", check_roundtrip_tensor(&b)?.holds(), format!("{b}"));
        }
    }
    Ok((checked, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_smash, parse_tensor};

    fn gen(k: &[u32], dir: usize) -> VectorFieldGen {
        VectorFieldGen::new(MultiIndex::new(k.to_vec()), dir).unwrap()
    }

    #[test]
    fn phi_gen_examples() {
        assert_eq!(phi_gen(&gen(&[0, 0], 1)), parse_tensor("d2", 2).unwrap());
        assert_eq!(phi_gen(&gen(&[1], 0)), parse_tensor("x1*d1 @ 1 + 1 @ x1*d1", 1).unwrap());
        assert_eq!(
            phi_gen(&gen(&[2], 0)).to_string(),
            "x1^2*d1 @ 1 + 2*x1 @ x1*d1 + 1 @ x1^2*d1"
        );
    }

    #[test]
    fn phi_examples() {
        let f = parse_smash("x1^2 - 3*x2", 2).unwrap();
        assert_eq!(
            phi(&f).unwrap(),
            parse_tensor("x1^2 - 3*x2", 2).unwrap()
        );
        assert_eq!(phi(&parse_smash("1 # d1", 2).unwrap()).unwrap(), parse_tensor("d1", 2).unwrap());
        assert_eq!(
            phi(&parse_smash("x1 # x1*d1", 1).unwrap()).unwrap(),
            parse_tensor("x1^2*d1 @ 1 + x1 @ x1*d1", 1).unwrap()
        );
    }

    #[test]
    fn psi_examples() {
        let r = MultiIndex::new(vec![2, 1]);
        assert_eq!(psi_d(&r, &MultiIndex::zero(2)), parse_smash("x1^2*x2", 2).unwrap());
        assert_eq!(
            psi_l(&MultiIndex::new(vec![1]), 0).unwrap(),
            parse_smash("1 # x1*d1 - x1 # d1", 1).unwrap()
        );
        assert_eq!(
            psi_l(&MultiIndex::new(vec![2]), 0).unwrap(),
            parse_smash("1 # x1^2*d1 - 2*x1 # x1*d1 + x1^2 # d1", 1).unwrap()
        );
        assert!(psi_l(&MultiIndex::zero(2), 0).is_err());
        assert_eq!(psi(&TensorElement::one(2)).unwrap(), SmashElement::one(2));
        assert_eq!(
            psi(&parse_tensor("x1*d1 @ 1 + 1 @ x1*d1", 1).unwrap()).unwrap(),
            parse_smash("1 # x1*d1", 1).unwrap()
        );
        assert_eq!(
            psi(&parse_tensor("x1*d1*d2", 2).unwrap()).unwrap(),
            parse_smash("x1 # (d1)*(d2)", 2).unwrap()
        );
    }

    #[test]
    fn relation_examples() {
        assert!(check_phi_bracket(&gen(&[0], 0), &gen(&[2], 0)).unwrap().holds());
        let f = parse_smash("x1^2 + x1", 1).unwrap();
        assert!(check_roundtrip(&f).unwrap().holds());
        for c in check_psi_weyl(2, 0, 0).unwrap() {
            assert!(c.holds());
        }
    }

    #[test]
    fn image_of_phi_stays_in_lplus() {
        let a = parse_smash("x1 # (d1)*(d2)*(x1*x2*d1) + x2^2 # (d2)^2", 2).unwrap();
        assert!(phi(&a).unwrap().lplus_leg_valid());
    }

    #[test]
    fn small_suites_pass() {
        let (count, failures) = hom_suite(1, 2).unwrap();
        assert!(count > 0);
        assert!(failures.is_empty(), "{failures:?}");
        let (_, failures) = inverse_generator_suite(2, 2).unwrap();
        assert!(failures.is_empty(), "{failures:?}");
    }
}
