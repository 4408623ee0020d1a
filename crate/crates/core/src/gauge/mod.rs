//! Gauge modules over affine space.
//!
//! A gauge module is the free module `M = A⊗U` (coordinates in a fixed
//! frame) carrying an A-linear representation ρ of L+ and gauge fields
//! `B_1..B_n`. The connection `θ(∂_i) = ∂_i ⊗ id + B_i` must be flat (GF1)
//! and commute with ρ (GF2). V then acts by
//!
//! ```text
//! (f∂_i)(m) = f ∂_i(m) + f B_i(m) + Σ_{k≠0} (1/k!) (∂^k f) ρ(x^k∂_i)(m)
//! ```
//!
//! Matrices act on coordinate columns, and in every composite the operator
//! written nearest the element applies first.

mod file;
mod matrix;

use std::collections::BTreeMap;

use num::One;
use serde::Serialize;

use crate::env::Restriction;
use crate::error::{check_dim, AlgebraError, Result};
use crate::iso::{phi, Comparison};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::random::Sampler;
use crate::smash::SmashElement;
use crate::witt::{VectorField, VectorFieldGen};
use crate::{env::EnvElement, Rational};

pub use file::{GaugeSpecFile, RhoEntryFile};
pub use matrix::{ModuleElement, PolyMatrix};

/// Composition convention printed with every report.
pub const CONVENTION: &str =
    "matrices act on coordinate columns; in a composite the operator nearest the element applies first";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaugeModuleSpec {
    n: usize,
    rank: usize,
    b: Vec<PolyMatrix>,
    rho: BTreeMap<VectorFieldGen, PolyMatrix>,
}

impl GaugeModuleSpec {
    /// Validates shapes; `rho` lists the finitely many nonzero generators.
    pub fn new(
        n: usize,
        rank: usize,
        b: Vec<PolyMatrix>,
        rho: BTreeMap<VectorFieldGen, PolyMatrix>,
    ) -> Result<Self> {
        let malformed = |s: String| Err(AlgebraError::MalformedSpec(s));
        if n == 0 || rank == 0 {
            return malformed("n and rank must be positive".into());
        }
        if b.len() != n {
            return malformed(format!("expected {n} gauge fields, found {}", b.len()));
        }
        for (i, m) in b.iter().enumerate() {
            if m.n() != n || m.rank() != rank {
                return malformed(format!("B{} has the wrong shape", i + 1));
            }
        }
        for (g, m) in &rho {
            if g.n() != n {
                return malformed(format!("rho key {g} has dimension {}", g.n()));
            }
            if !g.in_lplus() {
                return malformed(format!("rho key {g} is not in L+ (|k| = 0)"));
            }
            if m.n() != n || m.rank() != rank {
                return malformed(format!("rho({g}) has the wrong shape"));
            }
        }
        Ok(GaugeModuleSpec { n, rank, b, rho })
    }

    /// Rank-`rank` module with B = 0 and ρ = 0: A^rank as a D-module.
    pub fn trivial(n: usize, rank: usize) -> Self {
        GaugeModuleSpec::new(n, rank, vec![PolyMatrix::zero(n, rank); n], BTreeMap::new())
            .expect("well formed")
    }

    /// The adjoint module V in the frame `e_j = ∂_j`: B = 0 and
    /// ρ(x_q∂_p) sends `e_q` to `-e_p`; higher generators act by zero.
    pub fn adjoint(n: usize) -> Self {
        let mut rho = BTreeMap::new();
        for q in 0..n {
            for p in 0..n {
                let g = VectorFieldGen::new(MultiIndex::unit(n, q), p).expect("p < n");
                let mut m = PolyMatrix::zero(n, n);
                m.set(p, q, Polynomial::constant(n, -Rational::one()));
                rho.insert(g, m);
            }
        }
        GaugeModuleSpec::new(n, n, vec![PolyMatrix::zero(n, n); n], rho).expect("well formed")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gauge_fields(&self) -> &[PolyMatrix] {
        &self.b
    }

    pub fn rho_support(&self) -> &BTreeMap<VectorFieldGen, PolyMatrix> {
        &self.rho
    }

    /// Replaces one ρ value; used to build deliberately broken specs.
    pub fn with_rho(mut self, g: VectorFieldGen, m: PolyMatrix) -> Result<Self> {
        self.rho.insert(g, m);
        GaugeModuleSpec::new(self.n, self.rank, self.b, self.rho)
    }

    pub fn with_gauge_field(mut self, i: usize, m: PolyMatrix) -> Result<Self> {
        self.b[i] = m;
        GaugeModuleSpec::new(self.n, self.rank, self.b, self.rho)
    }

    /// ρ on a generator; zero outside the support.
    pub fn rho_gen(&self, g: &VectorFieldGen) -> PolyMatrix {
        self.rho
            .get(g)
            .cloned()
            .unwrap_or_else(|| PolyMatrix::zero(self.n, self.rank))
    }

    /// ρ extended linearly to a vector field in L+.
    pub fn rho(&self, v: &VectorField) -> Result<PolyMatrix> {
        check_dim(self.n, v.n())?;
        let mut out = PolyMatrix::zero(self.n, self.rank);
        for (g, c) in v.terms() {
            if !g.in_lplus() {
                return Err(AlgebraError::NotInLplus(g.to_string()));
            }
            if let Some(m) = self.rho.get(g) {
                out = out.add(&m.scale(c))?;
            }
        }
        Ok(out)
    }

    /// Largest generator degree in the support of ρ.
    pub fn max_support_degree(&self) -> Option<i64> {
        self.rho.keys().map(VectorFieldGen::degree).max()
    }

    fn check_element(&self, m: &ModuleElement) -> Result<()> {
        check_dim(self.n, m.n())?;
        check_dim(self.rank, m.rank())
    }

    /// θ(∂_i) = ∂_i ⊗ id + B_i
    pub fn theta_partial(&self, i: usize, m: &ModuleElement) -> Result<ModuleElement> {
        self.check_element(m)?;
        m.partial_var(i).add(&self.b[i].apply(m)?)
    }

    /// The V-action on M.
    pub fn act(&self, eta: &VectorField, m: &ModuleElement) -> Result<ModuleElement> {
        self.check_element(m)?;
        check_dim(self.n, eta.n())?;
        let mut out = ModuleElement::zero(self.n, self.rank);
        for i in 0..self.n {
            let f = eta.component(i);
            if f.is_zero() {
                continue;
            }
            out = out.add(&self.theta_partial(i, m)?.mul_poly(&f)?)?;
            for (g, mat) in self.rho.iter().filter(|(g, _)| g.dir() == i) {
                let df = f.partial(g.k())?;
                if df.is_zero() {
                    continue;
                }
                let c = Rational::new(One::one(), g.k().factorial());
                out = out.add(&mat.apply(m)?.mul_poly(&df.scale(&c))?)?;
            }
        }
        Ok(out)
    }

    /// Acts by `φ(1 # η)`: each term `c x^r∂^s ⊗ w` acts as
    /// `c x^r θ(∂)^s ρ(w)`.
    pub fn act_via_phi(&self, eta: &VectorField, m: &ModuleElement) -> Result<ModuleElement> {
        self.check_element(m)?;
        let image = phi(&SmashElement::from_env(&EnvElement::from_vector_field(eta, Restriction::All)?))?;
        let mut out = ModuleElement::zero(self.n, self.rank);
        for (t, c) in image.terms() {
            let mut v = m.clone();
            for g in t.w.gens().iter().rev() {
                v = self.rho_gen(g).apply(&v)?;
            }
            for i in (0..self.n).rev() {
                for _ in 0..t.d.d.get(i) {
                    v = self.theta_partial(i, &v)?;
                }
            }
            let x = Polynomial::monomial(t.d.x.clone(), c.clone());
            out = out.add(&v.mul_poly(&x)?)?;
        }
        Ok(out)
    }

    /// Checks GF1, GF2 and the Lie-homomorphism property of ρ.
    pub fn verify(&self) -> VerificationReport {
        let n = self.n;
        let mut gf1 = CheckGroup::new("GF1", "dB_j/dx_i - dB_i/dx_j + [B_i, B_j] = 0");
        for i in 0..n {
            for j in i + 1..n {
                let r = self.b[j]
                    .partial_var(i)
                    .sub(&self.b[i].partial_var(j))
                    .and_then(|m| m.add(&self.b[i].commutator(&self.b[j])?))
                    .expect("shapes validated");
                gf1.record(format!("i={} j={}", i + 1, j + 1), r);
            }
        }
        let mut gf2 = CheckGroup::new("GF2", "d rho(xi)/dx_i + [B_i, rho(xi)] = 0");
        for (g, rho) in &self.rho {
            for i in 0..n {
                let r = rho
                    .partial_var(i)
                    .add(&self.b[i].commutator(rho).expect("shapes validated"))
                    .expect("shapes validated");
                gf2.record(format!("xi={g} i={}", i + 1), r);
            }
        }
        let mut hom = CheckGroup::new("rho-hom", "rho([xi, eta]) - [rho(xi), rho(eta)] = 0");
        for (a, b) in self.hom_pairs() {
            let br = a.bracket(&b).expect("same dimension");
            let r = self
                .rho(&br)
                .expect("bracket of L+ generators stays in L+")
                .sub(&self.rho_gen(&a).commutator(&self.rho_gen(&b)).expect("shapes validated"))
                .expect("shapes validated");
            hom.record(format!("[{a}, {b}]"), r);
        }
        VerificationReport {
            groups: vec![gf1, gf2, hom],
            convention: CONVENTION,
        }
    }

    /// Generator pairs `a < b` whose ρ-homomorphism condition can be
    /// nontrivial: every pair with deg a + deg b <= D_max, plus every pair
    /// drawn from the support.
    fn hom_pairs(&self) -> Vec<(VectorFieldGen, VectorFieldGen)> {
        let Some(dmax) = self.max_support_degree() else {
            return Vec::new();
        };
        let gens = VectorFieldGen::all_of_degree(self.n, 0, dmax);
        let mut pairs = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                if a.degree() + b.degree() <= dmax {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        let support: Vec<_> = self.rho.keys().cloned().collect();
        for (i, a) in support.iter().enumerate() {
            for b in &support[i + 1..] {
                if a.degree() + b.degree() > dmax {
                    pairs.push((a.clone(), b.clone()));
                }
            }
        }
        pairs
    }

    /// Compares the direct V-action with the action through φ.
    pub fn check_phi_transport(&self, eta: &VectorField, m: &ModuleElement) -> Result<Comparison<ModuleElement>> {
        Ok(Comparison {
            lhs: self.act_via_phi(eta, m)?,
            rhs: self.act(eta, m)?,
        })
    }

    /// φ-transport over every generator with |k| <= `max_total`, on each
    /// frame vector and one seeded random element per generator.
    pub fn transport_suite(&self, max_total: u32, seed: u64) -> Result<AxiomReport> {
        let mut report = AxiomReport::default();
        let mut sampler = Sampler::new(seed, self.n, 2, 1);
        for g in VectorFieldGen::all_of_degree(self.n, -1, i64::from(max_total) - 1) {
            let eta = VectorField::from(g.clone());
            let mut elements: Vec<_> = (0..self.rank).map(|j| ModuleElement::basis(self.n, self.rank, j)).collect();
            elements.push(self.random_element(&mut sampler));
            for m in elements {
                let ok = self.check_phi_transport(&eta, &m)?.holds();
                report.record("phi-transport", ok, || format!("eta={g} m={m}"));
            }
        }
        Ok(report)
    }

    fn random_element(&self, sampler: &mut Sampler) -> ModuleElement {
        let coords = (0..self.rank).map(|_| sampler.polynomial(2, 2)).collect();
        ModuleElement::new(self.n, coords).expect("sampler uses the spec dimension")
    }

    /// Leibniz rule and Lie-action axiom over all generator pairs with
    /// degree <= `degree_bound`, on frame vectors plus seeded random data.
    pub fn check_module_axioms(&self, degree_bound: i64, seed: u64) -> Result<AxiomReport> {
        let n = self.n;
        let mut report = AxiomReport::default();
        let mut sampler = Sampler::new(seed, n, 2, 1);
        let gens = VectorFieldGen::all_of_degree(n, -1, degree_bound);
        let frame: Vec<_> = (0..self.rank).map(|j| ModuleElement::basis(n, self.rank, j)).collect();
        for g in &gens {
            let eta = VectorField::from(g.clone());
            let mut elements = frame.clone();
            elements.push(self.random_element(&mut sampler));
            let f = sampler.polynomial(2, 2);
            for m in &elements {
                // η(fm) = f(ηm) + η(f)m
                let lhs = self.act(&eta, &m.mul_poly(&f)?)?;
                let rhs = self.act(&eta, m)?.mul_poly(&f)?.add(&m.mul_poly(&eta.apply(&f)?)?)?;
                report.record("leibniz", lhs == rhs, || format!("eta={g} f={f} m={m}"));
            }
        }
        for (i, a) in gens.iter().enumerate() {
            let xi = VectorField::from(a.clone());
            for b in &gens[i + 1..] {
                let eta = VectorField::from(b.clone());
                let br = xi.bracket(&eta)?;
                let mut elements = frame.clone();
                elements.push(self.random_element(&mut sampler));
                for m in &elements {
                    // [ξ,η]m = ξ(ηm) - η(ξm)
                    let lhs = self.act(&br, m)?;
                    let rhs = self.act(&xi, &self.act(&eta, m)?)?.sub(&self.act(&eta, &self.act(&xi, m)?)?)?;
                    report.record("lie-action", lhs == rhs, || format!("xi={a} eta={b} m={m}"));
                }
            }
        }
        Ok(report)
    }
}

/// One family of matrix identities with its failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckGroup {
    pub name: &'static str,
    pub identity: &'static str,
    pub checked: usize,
    pub failures: Vec<(String, PolyMatrix)>,
}

impl CheckGroup {
    fn new(name: &'static str, identity: &'static str) -> Self {
        CheckGroup {
            name,
            identity,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, case: String, residual: PolyMatrix) {
        self.checked += 1;
        if !residual.is_zero() {
            self.failures.push((case, residual));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub groups: Vec<CheckGroup>,
    pub convention: &'static str,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.groups.iter().all(CheckGroup::passed)
    }

    pub fn group(&self, name: &str) -> Option<&CheckGroup> {
        self.groups.iter().find(|g| g.name == name)
    }

    /// Plain-text rendering; failing groups show their first residual.
    pub fn to_text(&self) -> String {
        let mut out = format!("convention: {}\n", self.convention);
        for g in &self.groups {
            let status = if g.passed() { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {} ({} checks): {}\n", g.name, g.checked, g.identity));
            if let Some((case, r)) = g.failures.first() {
                out.push_str(&format!(
                    "  first counterexample {case}: residual {r} ({} failing)\n",
                    g.failures.len()
                ));
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Failure<'a> {
            case: &'a str,
            residual: Vec<Vec<String>>,
        }
        #[derive(Serialize)]
        struct Group<'a> {
            name: &'a str,
            identity: &'a str,
            status: &'a str,
            checked: usize,
            failures: Vec<Failure<'a>>,
        }
        let groups: Vec<_> = self
            .groups
            .iter()
            .map(|g| Group {
                name: g.name,
                identity: g.identity,
                status: if g.passed() { "pass" } else { "fail" },
                checked: g.checked,
                failures: g
                    .failures
                    .iter()
                    .map(|(case, r)| Failure {
                        case,
                        residual: r
                            .rows()
                            .iter()
                            .map(|row| row.iter().map(ToString::to_string).collect())
                            .collect(),
                    })
                    .collect(),
            })
            .collect();
        serde_json::json!({
            "convention": self.convention,
            "passed": self.passed(),
            "checks": groups,
        })
    }
}

/// Counts and first failures of sampled identity checks.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: BTreeMap<&'static str, usize>,
    pub failures: Vec<(&'static str, String)>,
}

impl AxiomReport {
    fn record(&mut self, name: &'static str, ok: bool, case: impl FnOnce() -> String) {
        *self.checked.entry(name).or_default() += 1;
        if !ok {
            self.failures.push((name, case()));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, name: &str) -> bool {
        self.failures.iter().any(|(n, _)| *n == name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_polynomial, parse_vector_field};

    fn p(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n).unwrap()
    }

    #[test]
    fn trivial_spec_verifies_and_acts_as_derivation() {
        let spec = GaugeModuleSpec::trivial(2, 1);
        assert!(spec.verify().passed());
        let eta = parse_vector_field("(x1^2 + x2)*d1", 2).unwrap();
        let m = ModuleElement::new(2, vec![p("x1^3*x2", 2)]).unwrap();
        let expect = ModuleElement::new(2, vec![p("(x1^2 + x2)*3*x1^2*x2", 2)]).unwrap();
        assert_eq!(spec.act(&eta, &m).unwrap(), expect);
        assert!(spec.act(&eta, &ModuleElement::zero(2, 1)).unwrap().is_zero());
    }

    #[test]
    fn adjoint_shape() {
        let one = GaugeModuleSpec::adjoint(1);
        assert_eq!(one.rank(), 1);
        let x_d = VectorFieldGen::new(MultiIndex::new(vec![1]), 0).unwrap();
        assert_eq!(one.rho_gen(&x_d).get(0, 0), &p("-1", 1));
        let two = GaugeModuleSpec::adjoint(2);
        let x1d2 = VectorFieldGen::new(MultiIndex::new(vec![1, 0]), 1).unwrap();
        let e1 = ModuleElement::basis(2, 2, 0);
        let e2 = ModuleElement::basis(2, 2, 1);
        assert_eq!(two.rho_gen(&x1d2).apply(&e1).unwrap(), e2.scale(&-Rational::one()));
        assert!(two.rho_gen(&x1d2).apply(&e2).unwrap().is_zero());
        assert!(GaugeModuleSpec::adjoint(3).verify().passed());
    }

    #[test]
    fn adjoint_action_is_bracket() {
        // x2∂1 · e2 = [x2∂1, ∂2] = -∂1
        let spec = GaugeModuleSpec::adjoint(2);
        let eta = parse_vector_field("x2*d1", 2).unwrap();
        let e1 = ModuleElement::basis(2, 2, 0);
        let e2 = ModuleElement::basis(2, 2, 1);
        assert!(spec.act(&eta, &e1).unwrap().is_zero());
        assert_eq!(spec.act(&eta, &e2).unwrap(), e1.scale(&-Rational::one()));
    }

    #[test]
    fn gf1_violation_reports_residual() {
        let b1 = PolyMatrix::from_rows(2, vec![vec![p("x2", 2)]]).unwrap();
        let spec = GaugeModuleSpec::trivial(2, 1).with_gauge_field(0, b1).unwrap();
        let report = spec.verify();
        let gf1 = report.group("GF1").unwrap();
        assert!(!gf1.passed());
        assert_eq!(gf1.failures[0].1.get(0, 0), &p("-1", 2));
        assert!(report.to_text().contains("FAIL GF1"));
    }

    #[test]
    fn malformed_specs_rejected() {
        let d1 = VectorFieldGen::partial(1, 0);
        let err = GaugeModuleSpec::trivial(1, 1).with_rho(d1, PolyMatrix::zero(1, 1));
        assert!(matches!(err, Err(AlgebraError::MalformedSpec(_))));
        assert!(GaugeModuleSpec::new(2, 1, vec![PolyMatrix::zero(2, 1)], BTreeMap::new()).is_err());
        assert!(GaugeModuleSpec::new(1, 2, vec![PolyMatrix::zero(1, 1)], BTreeMap::new()).is_err());
    }

    #[test]
    fn transport_examples() {
        let adj = GaugeModuleSpec::adjoint(1);
        let eta = parse_vector_field("x1^2*d1", 1).unwrap();
        assert!(adj.check_phi_transport(&eta, &ModuleElement::basis(1, 1, 0)).unwrap().holds());
        let triv = GaugeModuleSpec::trivial(2, 1);
        let eta = parse_vector_field("x1*d2", 2).unwrap();
        let m = ModuleElement::new(2, vec![p("x1*x2^2 - 3", 2)]).unwrap();
        assert!(triv.check_phi_transport(&eta, &m).unwrap().holds());
    }

    #[test]
    fn d_module_degeneration() {
        // ρ = 0: (f∂_i)m = f (∂_i + B_i) m
        let b = |s: &str| PolyMatrix::from_rows(1, vec![vec![p(s, 1)]]).unwrap();
        let spec = GaugeModuleSpec::new(1, 1, vec![b("x1^2")], BTreeMap::new()).unwrap();
        let f = p("x1 + 2", 1);
        let eta = VectorField::from_component(&f, 0).unwrap();
        let m = ModuleElement::new(1, vec![p("x1^3", 1)]).unwrap();
        let expect = spec.theta_partial(0, &m).unwrap().mul_poly(&f).unwrap();
        assert_eq!(spec.act(&eta, &m).unwrap(), expect);
    }
}
