//! Gauge-module checks against independently computed values.

use std::collections::BTreeMap;

use wittgauge_core::parse::{parse_polynomial, parse_vector_field};
use wittgauge_core::{
    GaugeModuleSpec, ModuleElement, MultiIndex, PolyMatrix, Polynomial, Rational, Sampler, VectorField, VectorFieldGen,
};

fn p(s: &str, n: usize) -> Polynomial {
    parse_polynomial(s, n).unwrap()
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Frame change `g = 1 + N` with `N = [[0, h], [0, 0]]`, so `g⁻¹ = 1 - N`.
fn unipotent(h: &str) -> (PolyMatrix, PolyMatrix) {
    let n = 2;
    let mut nil = PolyMatrix::zero(n, 2);
    nil.set(0, 1, p(h, n));
    let id = PolyMatrix::identity(n, 2);
    (id.add(&nil).unwrap(), id.sub(&nil).unwrap())
}

/// The adjoint module written in the frame `g e_j`: `B_i = g⁻¹ ∂_i g` and
/// `ρ' = g⁻¹ ρ g`.
fn transformed_adjoint(h: &str) -> (GaugeModuleSpec, PolyMatrix, PolyMatrix) {
    let (g, ginv) = unipotent(h);
    let adj = GaugeModuleSpec::adjoint(2);
    let b = (0..2).map(|i| ginv.mul(&g.partial_var(i)).unwrap()).collect();
    let rho: BTreeMap<_, _> = adj
        .rho_support()
        .iter()
        .map(|(k, m)| (k.clone(), ginv.mul(m).unwrap().mul(&g).unwrap()))
        .collect();
    (GaugeModuleSpec::new(2, 2, b, rho).unwrap(), g, ginv)
}

#[test]
fn gauge_transformed_adjoint_is_a_gauge_module() {
    let (spec, g, ginv) = transformed_adjoint("x1^2*x2");
    assert!(spec.gauge_fields().iter().any(|b| !b.is_zero()));
    assert!(spec.verify().passed(), "{}", spec.verify().to_text());
    assert!(spec.check_module_axioms(2, 4).unwrap().passed());
    assert!(spec.transport_suite(3, 4).unwrap().passed());
    let adj = GaugeModuleSpec::adjoint(2);
    let mut s = Sampler::new(8, 2, 2, 1);
    for _ in 0..20 {
        let eta = s.vector_field(3);
        let m = ModuleElement::new(2, vec![s.polynomial(2, 2), s.polynomial(2, 2)]).unwrap();
        let expect = ginv.apply(&adj.act(&eta, &g.apply(&m).unwrap()).unwrap()).unwrap();
        assert_eq!(spec.act(&eta, &m).unwrap(), expect);
    }
}

#[test]
fn gauge_transform_with_nonclosed_field_is_rejected() {
    // replacing B_1 = x2 E12 by x2^2 E12 leaves a curved connection
    let (spec, _, _) = transformed_adjoint("x1*x2");
    let mut b1 = PolyMatrix::zero(2, 2);
    b1.set(0, 1, p("x2^2", 2));
    let broken = spec.with_gauge_field(0, b1).unwrap();
    let report = broken.verify();
    assert!(!report.group("GF1").unwrap().passed());
    assert!(!report.group("GF2").unwrap().passed());
}

/// `(x^a ∂_i) e_j = x^a θ_i e_j + Σ_{0<k<=a} C(a,k) x^{a-k} ρ(x^k∂_i) e_j`
fn monomial_action(spec: &GaugeModuleSpec, a: &MultiIndex, i: usize, m: &ModuleElement) -> ModuleElement {
    let xa = Polynomial::monomial(a.clone(), int(1));
    let mut out = spec.theta_partial(i, m).unwrap().mul_poly(&xa).unwrap();
    for k in a.below().into_iter().filter(|k| !k.is_zero()) {
        let g = VectorFieldGen::new(k.clone(), i).unwrap();
        let c = Rational::from_integer(a.binomial(&k).unwrap());
        let coeff = Polynomial::monomial(a.checked_sub(&k).unwrap(), c);
        out = out.add(&spec.rho_gen(&g).apply(m).unwrap().mul_poly(&coeff).unwrap()).unwrap();
    }
    out
}

#[test]
fn action_matches_binomial_expansion_on_monomials() {
    let (spec, _, _) = transformed_adjoint("x2^2");
    for a in MultiIndex::up_to_total(2, 4) {
        for i in 0..2 {
            let field = VectorField::from(VectorFieldGen::new(a.clone(), i).unwrap());
            for j in 0..2 {
                let e = ModuleElement::basis(2, 2, j);
                assert_eq!(spec.act(&field, &e).unwrap(), monomial_action(&spec, &a, i, &e), "x^{a} d{}", i + 1);
            }
        }
    }
}

#[test]
fn action_is_additive_in_the_field() {
    let spec = GaugeModuleSpec::adjoint(2);
    let mut s = Sampler::new(3, 2, 3, 1);
    for _ in 0..20 {
        let (f, g) = (s.polynomial(3, 3), s.polynomial(3, 3));
        let i = s.range(1);
        let m = ModuleElement::new(2, vec![s.polynomial(2, 2), s.polynomial(2, 2)]).unwrap();
        let sum = VectorField::from_component(&f.add(&g).unwrap(), i).unwrap();
        let parts = spec
            .act(&VectorField::from_component(&f, i).unwrap(), &m)
            .unwrap()
            .add(&spec.act(&VectorField::from_component(&g, i).unwrap(), &m).unwrap())
            .unwrap();
        assert_eq!(spec.act(&sum, &m).unwrap(), parts);
    }
}

#[test]
fn explicit_zero_entries_change_nothing() {
    let adj = GaugeModuleSpec::adjoint(2);
    let mut padded = adj.clone();
    for g in VectorFieldGen::all_of_degree(2, 1, 4) {
        padded = padded.with_rho(g, PolyMatrix::zero(2, 2)).unwrap();
    }
    let eta = parse_vector_field("x1^3*x2^2*d1 - 2*x2^5*d2 + x1*d2", 2).unwrap();
    let m = ModuleElement::new(2, vec![p("x1*x2", 2), p("x2^3 + 1", 2)]).unwrap();
    assert_eq!(padded.act(&eta, &m).unwrap(), adj.act(&eta, &m).unwrap());
}

/// `Σ_{0<=k<=m} (-1)^{|m-k|} C(m,k) x^{m-k} [x^k∂_p, ∂_j]` as coordinates.
fn adjoint_rho_oracle(n: usize, m: &MultiIndex, p: usize, j: usize) -> ModuleElement {
    let dj = VectorField::from(VectorFieldGen::partial(n, j));
    let mut acc = VectorField::zero(n);
    for k in m.below() {
        let sign = if (m.total() - k.total()).is_multiple_of(2) { 1 } else { -1 };
        let c = Rational::from_integer(m.binomial(&k).unwrap()) * int(sign);
        let br = VectorField::from(VectorFieldGen::new(k.clone(), p).unwrap()).bracket(&dj).unwrap();
        let x = Polynomial::monomial(m.checked_sub(&k).unwrap(), c);
        for i in 0..n {
            let comp = br.component(i).mul(&x).unwrap();
            acc = acc.add(&VectorField::from_component(&comp, i).unwrap()).unwrap();
        }
    }
    ModuleElement::new(n, (0..n).map(|i| acc.component(i)).collect()).unwrap()
}

#[test]
fn adjoint_rho_matches_bracket_oracle() {
    for n in 1..=3 {
        let spec = GaugeModuleSpec::adjoint(n);
        for m in MultiIndex::up_to_total(n, 4).into_iter().filter(|m| !m.is_zero()) {
            for p in 0..n {
                let g = VectorFieldGen::new(m.clone(), p).unwrap();
                for j in 0..n {
                    let e = ModuleElement::basis(n, n, j);
                    assert_eq!(spec.rho_gen(&g).apply(&e).unwrap(), adjoint_rho_oracle(n, &m, p, j));
                }
            }
        }
    }
}

#[test]
fn mutated_adjoint_fails_lie_action() {
    let x1d1 = VectorFieldGen::new(MultiIndex::unit(2, 0), 0).unwrap();
    let adj = GaugeModuleSpec::adjoint(2);
    let neg = adj.rho_gen(&x1d1).scale(&int(-1));
    let mutant = adj.with_rho(x1d1, neg).unwrap();
    assert!(mutant.check_module_axioms(2, 0).unwrap().failed("lie-action"));
    assert!(!mutant.verify().passed());
}

#[test]
fn trace_character_specs_satisfy_the_axioms() {
    // rank 1, ρ(x_i∂_i) = c: the character c·trace of gl_n pulled back to L+
    for c in [-2, -1, 1, 3] {
        let n = 2;
        let mut rho = BTreeMap::new();
        for i in 0..n {
            let g = VectorFieldGen::new(MultiIndex::unit(n, i), i).unwrap();
            let mut m = PolyMatrix::zero(n, 1);
            m.set(0, 0, Polynomial::constant(n, int(c)));
            rho.insert(g, m);
        }
        let spec = GaugeModuleSpec::new(n, 1, vec![PolyMatrix::zero(n, 1); n], rho).unwrap();
        assert!(spec.verify().passed());
        assert!(spec.check_module_axioms(2, c as u64).unwrap().passed());
        assert!(spec.transport_suite(3, 0).unwrap().passed());
    }
}
