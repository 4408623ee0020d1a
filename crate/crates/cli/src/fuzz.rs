//! Seeded fuzzing of the isomorphism identities and associativity.
//!
//! Iteration `i` draws its inputs from a sampler seeded by mixing the run
//! seed with `i`, so any single failure can be replayed in isolation. A
//! failure is shrunk by lowering the degree bound and then the word-length
//! bound while the same draw keeps failing.

use rayon::prelude::*;
use serde::Serialize;
use wittgauge_core::{
    EnvElement, Restriction, Result, Sampler, SmashElement, TensorElement, VectorField, WeylElement,
};

/// The maps under test; swapped out to check that the fuzzer notices.
#[derive(Clone, Copy)]
pub struct IsoPair {
    pub phi: fn(&SmashElement) -> Result<TensorElement>,
    pub psi: fn(&TensorElement) -> Result<SmashElement>,
}

impl Default for IsoPair {
    fn default() -> Self {
        IsoPair {
            phi: wittgauge_core::phi,
            psi: wittgauge_core::psi,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    PsiPhi,
    PhiPsi,
    PhiMul,
    PsiMul,
    PhiBracket,
    PsiBracket,
    WeylAssoc,
    EnvAssoc,
    SmashAssoc,
}

impl CheckKind {
    pub const ALL: [CheckKind; 9] = [
        CheckKind::PsiPhi,
        CheckKind::PhiPsi,
        CheckKind::PhiMul,
        CheckKind::PsiMul,
        CheckKind::PhiBracket,
        CheckKind::PsiBracket,
        CheckKind::WeylAssoc,
        CheckKind::EnvAssoc,
        CheckKind::SmashAssoc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::PsiPhi => "psi-phi-roundtrip",
            CheckKind::PhiPsi => "phi-psi-roundtrip",
            CheckKind::PhiMul => "phi-multiplicative",
            CheckKind::PsiMul => "psi-multiplicative",
            CheckKind::PhiBracket => "phi-bracket",
            CheckKind::PsiBracket => "psi-bracket",
            CheckKind::WeylAssoc => "weyl-associative",
            CheckKind::EnvAssoc => "env-associative",
            CheckKind::SmashAssoc => "smash-associative",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub n: usize,
    pub max_deg: u32,
    pub max_len: usize,
    pub iterations: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzFailure {
    pub iteration: usize,
    pub check: &'static str,
    pub max_deg: u32,
    pub max_len: usize,
    pub case: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub seed: u64,
    pub iterations: usize,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn iteration_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

fn mismatch<T: std::fmt::Display>(inputs: String, lhs: &T, rhs: &T) -> Option<String> {
    Some(format!("{inputs}: lhs = {lhs}, rhs = {rhs}"))
}

fn compare<T: PartialEq + std::fmt::Display>(inputs: impl FnOnce() -> String, lhs: Result<T>, rhs: Result<T>) -> Option<String> {
    match (lhs, rhs) {
        (Ok(l), Ok(r)) if l == r => None,
        (Ok(l), Ok(r)) => mismatch(inputs(), &l, &r),
        (Err(e), _) | (_, Err(e)) => Some(format!("{}: error {e}", inputs())),
    }
}

/// Runs one check on one draw; `Some(description)` on failure.
fn run_check(kind: CheckKind, maps: IsoPair, s: &mut Sampler) -> Option<String> {
    let (phi, psi) = (maps.phi, maps.psi);
    match kind {
        CheckKind::PsiPhi => {
            let a = s.smash(2);
            compare(|| format!("a = {a}"), phi(&a).and_then(|b| psi(&b)), Ok(a.clone()))
        }
        CheckKind::PhiPsi => {
            let b = s.tensor(2);
            compare(|| format!("b = {b}"), psi(&b).and_then(|a| phi(&a)), Ok(b.clone()))
        }
        CheckKind::PhiMul => {
            let (a, b) = (s.smash_product(), s.smash_product());
            let lhs = a.mul(&b).and_then(|ab| phi(&ab));
            let rhs = phi(&a).and_then(|x| x.mul(&phi(&b)?));
            compare(|| format!("a = {a}, b = {b}"), lhs, rhs)
        }
        CheckKind::PsiMul => {
            let (a, b) = (s.tensor_product(), s.tensor_product());
            let lhs = a.mul(&b).and_then(|ab| psi(&ab));
            let rhs = psi(&a).and_then(|x| x.mul(&psi(&b)?));
            compare(|| format!("a = {a}, b = {b}"), lhs, rhs)
        }
        CheckKind::PhiBracket => {
            let (g, h) = (s.gen(false), s.gen(false));
            let lift = |v: &VectorField| {
                EnvElement::from_vector_field(v, Restriction::All).map(|u| SmashElement::from_env(&u))
            };
            let lhs = g.bracket(&h).and_then(|b| phi(&lift(&b)?));
            let rhs = lift(&g.clone().into())
                .and_then(|a| phi(&a))
                .and_then(|x| x.commutator(&phi(&lift(&h.clone().into())?)?));
            compare(|| format!("[{g}, {h}]"), lhs, rhs)
        }
        CheckKind::PsiBracket => {
            let (g, h) = (s.gen(true), s.gen(true));
            let lift = |v: &VectorField| {
                EnvElement::from_vector_field(v, Restriction::Lplus).and_then(|u| TensorElement::from_env(&u))
            };
            let lhs = g.bracket(&h).and_then(|b| psi(&lift(&b)?));
            let rhs = lift(&g.clone().into())
                .and_then(|a| psi(&a))
                .and_then(|x| x.commutator(&psi(&lift(&h.clone().into())?)?));
            compare(|| format!("[{g}, {h}]"), lhs, rhs)
        }
        CheckKind::WeylAssoc => {
            let (a, b, c) = (s.weyl(2), s.weyl(2), s.weyl(2));
            assoc(|| format!("a = {a}, b = {b}, c = {c}"), &a, &b, &c, WeylElement::mul)
        }
        CheckKind::EnvAssoc => {
            let (a, b, c) = (
                s.env(Restriction::All, 2),
                s.env(Restriction::All, 2),
                s.env(Restriction::All, 2),
            );
            assoc(|| format!("a = {a}, b = {b}, c = {c}"), &a, &b, &c, EnvElement::mul)
        }
        CheckKind::SmashAssoc => {
            let (a, b, c) = (s.smash_product(), s.smash_product(), s.smash_product());
            assoc(|| format!("a = {a}, b = {b}, c = {c}"), &a, &b, &c, SmashElement::mul)
        }
    }
}

fn assoc<T: PartialEq + std::fmt::Display>(
    inputs: impl FnOnce() -> String,
    a: &T,
    b: &T,
    c: &T,
    mul: fn(&T, &T) -> Result<T>,
) -> Option<String> {
    let lhs = mul(a, b).and_then(|ab| mul(&ab, c));
    let rhs = mul(b, c).and_then(|bc| mul(a, &bc));
    compare(inputs, lhs, rhs)
}

fn attempt(cfg: &FuzzConfig, maps: IsoPair, i: usize, max_deg: u32, max_len: usize) -> Option<String> {
    let kind = CheckKind::ALL[i % CheckKind::ALL.len()];
    let mut s = Sampler::new(iteration_seed(cfg.seed, i), cfg.n, max_deg, max_len);
    run_check(kind, maps, &mut s)
}

fn shrink(cfg: &FuzzConfig, maps: IsoPair, i: usize, first: String) -> FuzzFailure {
    let (mut deg, mut len, mut case) = (cfg.max_deg, cfg.max_len, first);
    loop {
        if deg > 1 {
            if let Some(c) = attempt(cfg, maps, i, deg - 1, len) {
                deg -= 1;
                case = c;
                continue;
            }
        }
        if len > 0 {
            if let Some(c) = attempt(cfg, maps, i, deg, len - 1) {
                len -= 1;
                case = c;
                continue;
            }
        }
        break;
    }
    FuzzFailure {
        iteration: i,
        check: CheckKind::ALL[i % CheckKind::ALL.len()].name(),
        max_deg: deg,
        max_len: len,
        case,
    }
}

/// Iterations run in parallel; failures are reported in iteration order.
pub fn fuzz(cfg: &FuzzConfig, maps: IsoPair) -> FuzzReport {
    let max_deg = cfg.max_deg.max(1);
    let cfg = FuzzConfig { max_deg, ..*cfg };
    let failures = (0..cfg.iterations)
        .into_par_iter()
        .filter_map(|i| attempt(&cfg, maps, i, cfg.max_deg, cfg.max_len).map(|c| shrink(&cfg, maps, i, c)))
        .collect();
    FuzzReport {
        seed: cfg.seed,
        iterations: cfg.iterations,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(iterations: usize) -> FuzzConfig {
        FuzzConfig {
            n: 2,
            max_deg: 2,
            max_len: 2,
            iterations,
            seed: 3,
        }
    }

    #[test]
    fn zero_iterations_pass() {
        assert!(fuzz(&cfg(0), IsoPair::default()).passed());
    }

    #[test]
    fn deterministic() {
        assert_eq!(fuzz(&cfg(27), IsoPair::default()), fuzz(&cfg(27), IsoPair::default()));
        assert!(fuzz(&cfg(27), IsoPair::default()).passed());
    }
}
