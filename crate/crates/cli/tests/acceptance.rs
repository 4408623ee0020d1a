//! Acceptance suite. Every criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails. All comparisons are exact.

use std::path::PathBuf;
use std::time::Instant;

use wittgauge_cli::run_args;
use wittgauge_core::iso::{hom_suite, inverse_generator_suite};
use wittgauge_core::{
    lemma_comb_suite, psi_l, Algebra, GaugeModuleSpec, IsoMaps, ModuleElement, MultiIndex, PolyMatrix, Rational,
    Restriction, Sampler, VectorField, VectorFieldGen,
};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn published_seeds() -> Vec<u64> {
    let text = std::fs::read_to_string(fixture("seeds.json")).expect("seed fixture");
    let value: serde_json::Value = serde_json::from_str(&text).expect("seed fixture is JSON");
    value["seeds"]
        .as_array()
        .expect("seeds array")
        .iter()
        .map(|s| s.as_u64().expect("integer seed"))
        .collect()
}

/// Outcome of one criterion: failing cases, empty on success.
type Failures = Vec<String>;

type Criterion = (&'static str, fn() -> Failures);

fn comb() -> Failures {
    let mut out = Vec::new();
    for (n, bound) in [(1, 4), (2, 3)] {
        for (part, k, l, p) in lemma_comb_suite(n, bound) {
            out.push(format!("n={n} part {part:?} k={k} l={l} p={}", p + 1));
        }
    }
    out
}

fn homomorphism() -> Failures {
    let mut out = Vec::new();
    for n in 1..=2 {
        let (_, failures) = hom_suite(n, 3).expect("well-formed generators");
        out.extend(failures.into_iter().map(|f| format!("n={n} {} {}", f.relation, f.case)));
    }
    out
}

fn inverse() -> Failures {
    let mut out = Vec::new();
    for n in 1..=2 {
        let (_, failures) = inverse_generator_suite(n, 3).expect("well-formed generators");
        out.extend(failures.into_iter().map(|f| format!("n={n} {} {}", f.relation, f.case)));
    }
    let seeds = published_seeds();
    let per_seed = 100 / seeds.len();
    let mut maps = IsoMaps::new();
    for seed in seeds {
        let mut s = Sampler::new(seed, 2, 2, 2);
        for _ in 0..per_seed {
            let a = s.smash_product();
            let there = maps.phi(&a).unwrap();
            if maps.psi(&there).unwrap() != a {
                out.push(format!("seed {seed}: psi(phi({a})) != {a}"));
            }
            let b = s.tensor_product();
            let back = maps.psi(&b).unwrap();
            if maps.phi(&back).unwrap() != b {
                out.push(format!("seed {seed}: phi(psi({b})) != {b}"));
            }
        }
    }
    out
}

fn multiplicativity() -> Failures {
    let mut out = Vec::new();
    let mut maps = IsoMaps::new();
    let mut s = Sampler::new(2024, 2, 2, 2);
    for i in 0..200 {
        let (a, b) = (s.smash_product(), s.smash_product());
        let lhs = maps.phi(&a.mul(&b).unwrap()).unwrap();
        let rhs = maps.phi(&a).unwrap().mul(&maps.phi(&b).unwrap()).unwrap();
        if lhs != rhs {
            out.push(format!("pair {i}: phi({a} * {b})"));
        }
        let (c, d) = (s.tensor_product(), s.tensor_product());
        let lhs = maps.psi(&c.mul(&d).unwrap()).unwrap();
        let rhs = maps.psi(&c).unwrap().mul(&maps.psi(&d).unwrap()).unwrap();
        if lhs != rhs {
            out.push(format!("pair {i}: psi({c} * {d})"));
        }
    }
    out
}

fn associativity_and_action() -> Failures {
    let mut out = Vec::new();
    let mut s = Sampler::new(99, 2, 2, 2);
    for i in 0..100 {
        let f = s.polynomial(3, 3);
        let (a, b, c) = (s.weyl(2), s.weyl(2), s.weyl(2));
        let ab = a.mul(&b).unwrap();
        if ab.mul(&c).unwrap() != a.mul(&b.mul(&c).unwrap()).unwrap() {
            out.push(format!("weyl triple {i}"));
        }
        if ab.apply(&f).unwrap() != a.apply(&b.apply(&f).unwrap()).unwrap() {
            out.push(format!("weyl action {i}"));
        }
        let (a, b, c) = (
            s.env(Restriction::All, 2),
            s.env(Restriction::All, 2),
            s.env(Restriction::All, 2),
        );
        let ab = a.mul(&b).unwrap();
        if ab.mul(&c).unwrap() != a.mul(&b.mul(&c).unwrap()).unwrap() {
            out.push(format!("env triple {i}"));
        }
        if ab.act_on_poly(&f).unwrap() != a.act_on_poly(&b.act_on_poly(&f).unwrap()).unwrap() {
            out.push(format!("env action {i}"));
        }
        let (a, b, c) = (s.smash(2), s.smash(2), s.smash(2));
        let ab = a.mul(&b).unwrap();
        if ab.mul(&c).unwrap() != a.mul(&b.mul(&c).unwrap()).unwrap() {
            out.push(format!("smash triple {i}"));
        }
        if ab.act_on_poly(&f).unwrap() != a.act_on_poly(&b.act_on_poly(&f).unwrap()).unwrap() {
            out.push(format!("smash action {i}"));
        }
    }
    out
}

fn load(name: &str) -> GaugeModuleSpec {
    GaugeModuleSpec::from_json(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

/// ρ(x^m∂_p)e_j computed as the action of ψ(1 ⊗ x^m∂_p) on the adjoint
/// module, where `x^a # w` sends a field X to x^a [w, X].
fn adjoint_oracle(n: usize, m: &MultiIndex, p: usize, j: usize) -> ModuleElement {
    let target = VectorField::from(VectorFieldGen::partial(n, j));
    let mut field = VectorField::zero(n);
    for (t, c) in psi_l(m, p).unwrap().terms() {
        let moved = match t.w.gens() {
            [] => target.clone(),
            [g] => VectorField::from(g.clone()).bracket(&target).unwrap(),
            long => panic!("psi of a generator has a word of length {}", long.len()),
        };
        for i in 0..n {
            let comp = moved.component(i).mul_monomial(&t.x, c).unwrap();
            field = field.add(&VectorField::from_component(&comp, i).unwrap()).unwrap();
        }
    }
    ModuleElement::new(n, (0..n).map(|i| field.component(i)).collect()).unwrap()
}

fn gauge() -> Failures {
    let mut out = Vec::new();
    for n in 1..=3 {
        for (name, spec) in [("trivial", GaugeModuleSpec::trivial(n, 1)), ("adjoint", GaugeModuleSpec::adjoint(n))] {
            if !spec.verify().passed() {
                out.push(format!("{name} n={n}: verify"));
            }
            let axioms = spec.check_module_axioms(2, n as u64).unwrap();
            if !axioms.passed() {
                out.push(format!("{name} n={n}: axioms {:?}", axioms.failures.first()));
            }
            let transport = spec.transport_suite(3, n as u64).unwrap();
            if !transport.passed() {
                out.push(format!("{name} n={n}: transport {:?}", transport.failures.first()));
            }
        }
        let adj = GaugeModuleSpec::adjoint(n);
        for m in MultiIndex::up_to_total(n, 3).into_iter().filter(|m| !m.is_zero()) {
            for p in 0..n {
                let rho = adj.rho_gen(&VectorFieldGen::new(m.clone(), p).unwrap());
                if m.total() >= 2 && !rho.is_zero() {
                    out.push(format!("adjoint n={n}: rho(x^{m} d{}) is nonzero", p + 1));
                }
                for j in 0..n {
                    let e = ModuleElement::basis(n, n, j);
                    if rho.apply(&e).unwrap() != adjoint_oracle(n, &m, p, j) {
                        out.push(format!("adjoint n={n}: rho(x^{m} d{}) e{} disagrees with oracle", p + 1, j + 1));
                    }
                }
            }
        }
    }
    for (file, group) in [
        ("broken_gf1.json", "GF1"),
        ("broken_gf2.json", "GF2"),
        ("broken_hom.json", "rho-hom"),
    ] {
        let report = load(file).verify();
        let g = report.group(group).unwrap();
        if report.passed() || g.failures.is_empty() || g.failures.iter().any(|(_, r)| r.is_zero()) {
            out.push(format!("{file}: not rejected by {group} with a nonzero residual"));
        }
    }
    // negating ρ(x1∂1) in the rank-2 adjoint module breaks the Lie action
    let x1d1 = VectorFieldGen::new(MultiIndex::unit(2, 0), 0).unwrap();
    let adj = GaugeModuleSpec::adjoint(2);
    let negated: PolyMatrix = adj.rho_gen(&x1d1).scale(&Rational::from_integer((-1).into()));
    let mutant = adj.with_rho(x1d1, negated).unwrap();
    if !mutant.check_module_axioms(2, 0).unwrap().failed("lie-action") {
        out.push("mutated adjoint passes the Lie-action check".into());
    }
    out
}

fn cli_round_trip() -> Failures {
    let mut out = Vec::new();
    let algebras = [Algebra::Weyl, Algebra::Env, Algebra::Smash, Algebra::Tensor];
    let mut s = Sampler::new(7, 2, 2, 2);
    for i in 0..200 {
        let a = algebras[i % algebras.len()];
        let e = a.sample(&mut s);
        let printed = e.to_string();
        match a.parse(&printed, 2) {
            Ok(back) if back == e && back.to_string() == printed => {}
            Ok(back) => out.push(format!("{a}: {printed} reparsed as {back}")),
            Err(err) => out.push(format!("{a}: {printed} failed to parse: {err}")),
        }
        let via_cli = run_args(["-n", "2", "-a", a.name(), "normalize", printed.as_str()]);
        if via_cli.code != 0 || via_cli.report.trim_end() != printed {
            out.push(format!("{a}: normalize {printed} gave {}", via_cli.report.trim_end()));
        }
    }
    let adjoint = fixture("adjoint2.json");
    let adjoint = adjoint.to_str().unwrap();
    let commands: [&[&str]; 4] = [
        &["fuzz", "-n", "2", "--max-deg", "2", "--iterations", "45", "--seed", "11"],
        &["roundtrip", "-n", "2", "--max-deg", "2", "--seed", "11", "--samples", "20", "--json"],
        &["gauge", "transport", adjoint, "--max-deg", "2", "--seed", "11"],
        &["gauge", "axioms", adjoint, "--bound", "1", "--seed", "11", "--json"],
    ];
    for args in commands {
        let first = run_args(args.iter().copied());
        let second = run_args(args.iter().copied());
        if first != second {
            out.push(format!("{} is not reproducible", args.join(" ")));
        }
        if first.code != 0 {
            out.push(format!("{} exited {}", args.join(" "), first.code));
        }
    }
    out
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 binomial lemma suite (n=1 |k|,|l|<=4; n=2 |k|,|l|<=3)", comb),
        ("2 homomorphism relations of phi and psi (n<=2, |k|,|l|<=3)", homomorphism),
        ("3 inverse suite (generator families + 100 seeded products)", inverse),
        ("4 multiplicativity of phi and psi (200 seeded pairs)", multiplicativity),
        ("5 weyl/env/smash associativity and action (100 triples each)", associativity_and_action),
        ("6 gauge suite (trivial, adjoint n=1..3, oracle, broken specs)", gauge),
        ("7 cli parse/print round trip and reproducibility", cli_round_trip),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let failures = check();
        let secs = start.elapsed().as_secs_f64();
        if failures.is_empty() {
            println!("PASS criterion {name} [{secs:.2}s]");
        } else {
            failed += 1;
            println!("FAIL criterion {name} [{secs:.2}s]: {} failing cases", failures.len());
            for f in failures.iter().take(5) {
                println!("    {f}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
