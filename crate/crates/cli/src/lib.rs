//! Command-line front end: parsing and printing, batch identity checks,
//! gauge-spec verification and seeded fuzzing.
//!
//! [`run`] returns the exit status and the full report text so that tests
//! can drive the tool without spawning a process.

pub mod fuzz;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use wittgauge_core::{
    lemma_comb_suite, AlgebraError, Algebra, GaugeModuleSpec, IsoMaps, ModuleElement,
    MultiIndex, Sampler,
};
use wittgauge_core::{iso, parse};

pub use fuzz::{fuzz, FuzzConfig, FuzzReport, IsoPair};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wittgauge", version, about = "Exact algebra for polynomial vector fields and gauge modules")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Global {
    /// Dimension of the affine space.
    #[arg(short = 'n', long = "dim", global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Bound on total degrees |k|, |r|, |s|.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_deg: u32,
    /// Bound on the length of enveloping-algebra words.
    #[arg(long, global = true, default_value_t = 2)]
    pub max_len: usize,
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Algebra for normalize, mul and bracket.
    #[arg(short = 'a', long, global = true, default_value = "smash", value_parser = parse_algebra)]
    pub algebra: Algebra,
}

fn parse_algebra(s: &str) -> Result<Algebra, String> {
    s.parse().map_err(|e: AlgebraError| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of an expression.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Multiply two expressions.
    Mul {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Bracket (or commutator) of two expressions.
    Bracket {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Map a smash-product expression into D ⊗ U(L+).
    Phi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Map a D ⊗ U(L+) expression back into the smash product.
    Psi {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Check that phi and psi are mutually inverse.
    Roundtrip {
        /// Number of seeded random products checked in each direction.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Check that phi and psi respect the defining relations.
    HomCheck,
    /// Check the binomial identities behind phi and psi.
    LemmaCheck,
    /// Gauge-module tools.
    #[command(subcommand)]
    Gauge(GaugeCommand),
    /// Randomized identity checks.
    Fuzz {
        #[arg(long, default_value_t = 1000)]
        iterations: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum GaugeCommand {
    /// Check flatness, compatibility and the representation property.
    Verify { spec: PathBuf },
    /// Apply a vector field to a module element given as comma-separated coordinates.
    Act {
        spec: PathBuf,
        #[arg(allow_hyphen_values = true)]
        field: String,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Compare the direct action with the action through phi.
    Transport { spec: PathBuf },
    /// Check the Leibniz rule and the Lie-action axiom.
    Axioms {
        spec: PathBuf,
        /// Largest generator degree |k| - 1 to include.
        #[arg(long, default_value_t = 2)]
        bound: i64,
    },
    /// Write the adjoint module spec as JSON.
    Adjoint,
}

/// Exit status plus report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

impl Outcome {
    fn new(passed: bool, report: String) -> Self {
        Outcome {
            code: if passed { EXIT_PASS } else { EXIT_VERIFY },
            report,
        }
    }

    fn usage(e: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_USAGE,
            report: format!("error: {e}\n"),
        }
    }
}

impl From<AlgebraError> for Outcome {
    fn from(e: AlgebraError) -> Self {
        Outcome::usage(e)
    }
}

type Run = std::result::Result<Outcome, Outcome>;

fn status(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn emit(g: &Global, passed: bool, text: String, value: serde_json::Value) -> Outcome {
    if g.json {
        Outcome::new(passed, format!("{}\n", serde_json::to_string_pretty(&value).expect("json value")))
    } else {
        Outcome::new(passed, text)
    }
}

pub fn run(cli: &Cli) -> Outcome {
    run_with(cli, IsoPair::default())
}

/// As [`run`], with the maps used by `fuzz` supplied by the caller.
pub fn run_with(cli: &Cli, maps: IsoPair) -> Outcome {
    match dispatch(cli, maps) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(cli: &Cli, maps: IsoPair) -> Run {
    let g = &cli.global;
    let n = g.n as usize;
    match &cli.command {
        Command::Normalize { expr } => {
            let e = g.algebra.parse(expr, n)?;
            Ok(emit(g, true, format!("{e}\n"), json!({"algebra": g.algebra.name(), "result": e.to_string()})))
        }
        Command::Mul { left, right } | Command::Bracket { left, right } => {
            let a = g.algebra.parse(left, n)?;
            let b = g.algebra.parse(right, n)?;
            let r = if matches!(cli.command, Command::Mul { .. }) {
                a.mul(&b)?
            } else {
                a.bracket(&b)?
            };
            Ok(emit(g, true, format!("{r}\n"), json!({"algebra": g.algebra.name(), "result": r.to_string()})))
        }
        Command::Phi { expr } => {
            let r = iso::phi(&parse::parse_smash(expr, n)?)?;
            Ok(emit(g, true, format!("{r}\n"), json!({"result": r.to_string()})))
        }
        Command::Psi { expr } => {
            let r = iso::psi(&parse::parse_tensor(expr, n)?)?;
            Ok(emit(g, true, format!("{r}\n"), json!({"result": r.to_string()})))
        }
        Command::Roundtrip { samples } => roundtrip(g, *samples),
        Command::HomCheck => {
            let (checked, failures) = iso::hom_suite(n, g.max_deg)?;
            let mut text = format!("{} hom-check n={n} max-deg={}: {checked} relations\n", status(failures.is_empty()), g.max_deg);
            for f in &failures {
                let _ = writeln!(text, "  {} fails at {}", f.relation, f.case);
            }
            let value = json!({
                "n": n, "max_deg": g.max_deg, "checked": checked, "passed": failures.is_empty(),
                "failures": failures.iter().map(|f| json!({"relation": f.relation, "case": f.case})).collect::<Vec<_>>(),
            });
            Ok(emit(g, failures.is_empty(), text, value))
        }
        Command::LemmaCheck => {
            let failures = lemma_comb_suite(n, g.max_deg);
            let c = MultiIndex::up_to_total(n, g.max_deg).len();
            let checked = c + 2 * c * c * n;
            let mut text = format!("{} lemma-check n={n} max-deg={}: {checked} identities\n", status(failures.is_empty()), g.max_deg);
            let cases: Vec<_> = failures
                .iter()
                .map(|(part, k, l, p)| format!("part {part:?} k={k} l={l} p={}", p + 1))
                .collect();
            for c in &cases {
                let _ = writeln!(text, "  fails: {c}");
            }
            let value = json!({"n": n, "max_deg": g.max_deg, "checked": checked, "passed": failures.is_empty(), "failures": cases});
            Ok(emit(g, failures.is_empty(), text, value))
        }
        Command::Gauge(cmd) => gauge(g, cmd),
        Command::Fuzz { iterations } => {
            let cfg = FuzzConfig {
                n,
                max_deg: g.max_deg,
                max_len: g.max_len,
                iterations: *iterations,
                seed: g.seed,
            };
            let report = fuzz(&cfg, maps);
            let mut text = format!(
                "{} fuzz seed={} n={n} max-deg={} max-len={} iterations={}: {} failures\n",
                status(report.passed()),
                report.seed,
                cfg.max_deg,
                cfg.max_len,
                report.iterations,
                report.failures.len()
            );
            for f in &report.failures {
                let _ = writeln!(
                    text,
                    "  iteration {} {} (shrunk to max-deg={} max-len={}): {}",
                    f.iteration, f.check, f.max_deg, f.max_len, f.case
                );
            }
            let value = serde_json::to_value(&report).expect("serializable");
            Ok(emit(g, report.passed(), text, value))
        }
    }
}

fn roundtrip(g: &Global, samples: usize) -> Run {
    let n = g.n as usize;
    let (mut checked, failures) = iso::inverse_generator_suite(n, g.max_deg)?;
    let mut cases: Vec<String> = failures.iter().map(|f| format!("{} at {}", f.relation, f.case)).collect();
    let mut sampler = Sampler::new(g.seed, n, g.max_deg, g.max_len);
    let mut maps = IsoMaps::new();
    for _ in 0..samples {
        let a = sampler.smash_product();
        let image = maps.phi(&a)?;
        if maps.psi(&image)? != a {
            cases.push(format!("psi∘phi at {a}"));
        }
        let b = sampler.tensor_product();
        let image = maps.psi(&b)?;
        if maps.phi(&image)? != b {
            cases.push(format!("phi∘psi at {b}"));
        }
        checked += 2;
    }
    let passed = cases.is_empty();
    let mut text = format!(
        "{} roundtrip seed={} n={n} max-deg={} max-len={}: {checked} cases\n",
        status(passed),
        g.seed,
        g.max_deg,
        g.max_len
    );
    for c in &cases {
        let _ = writeln!(text, "  fails: {c}");
    }
    let value = json!({"seed": g.seed, "n": n, "max_deg": g.max_deg, "max_len": g.max_len, "checked": checked, "passed": passed, "failures": cases});
    Ok(emit(g, passed, text, value))
}

fn load_spec(path: &PathBuf) -> std::result::Result<GaugeModuleSpec, Outcome> {
    let text = std::fs::read_to_string(path).map_err(|e| Outcome {
        code: EXIT_IO,
        report: format!("error: cannot read {}: {e}\n", path.display()),
    })?;
    Ok(GaugeModuleSpec::from_json(&text)?)
}

fn axiom_text(title: &str, r: &wittgauge_core::AxiomReport) -> String {
    let mut text = format!("{} {title}\n", status(r.passed()));
    for (name, count) in &r.checked {
        let failed = r.failures.iter().filter(|(n, _)| n == name).count();
        let _ = writeln!(text, "  {name}: {count} checks, {failed} failures");
    }
    if let Some((name, case)) = r.failures.first() {
        let _ = writeln!(text, "  first counterexample ({name}): {case}");
    }
    text
}

fn axiom_json(r: &wittgauge_core::AxiomReport) -> serde_json::Value {
    json!({
        "passed": r.passed(),
        "checked": r.checked,
        "failures": r.failures.iter().map(|(n, c)| json!({"check": n, "case": c})).collect::<Vec<_>>(),
    })
}

fn gauge(g: &Global, cmd: &GaugeCommand) -> Run {
    match cmd {
        GaugeCommand::Verify { spec } => {
            let spec = load_spec(spec)?;
            let report = spec.verify();
            Ok(emit(g, report.passed(), report.to_text(), report.to_json()))
        }
        GaugeCommand::Act { spec, field, element } => {
            let spec = load_spec(spec)?;
            let n = spec.n();
            let eta = parse::parse_vector_field(field, n)?;
            let coords = element
                .split(',')
                .map(|s| parse::parse_polynomial(s.trim(), n))
                .collect::<wittgauge_core::Result<Vec<_>>>()?;
            if coords.len() != spec.rank() {
                return Err(Outcome::usage(format!(
                    "module element has {} coordinates, spec rank is {}",
                    coords.len(),
                    spec.rank()
                )));
            }
            let m = ModuleElement::new(n, coords)?;
            let r = spec.act(&eta, &m)?;
            let coords: Vec<_> = r.coords().iter().map(ToString::to_string).collect();
            Ok(emit(g, true, format!("{r}\n"), json!({"result": coords})))
        }
        GaugeCommand::Transport { spec } => {
            let spec = load_spec(spec)?;
            let r = spec.transport_suite(g.max_deg, g.seed)?;
            let title = format!("transport seed={} max-deg={}", g.seed, g.max_deg);
            Ok(emit(g, r.passed(), axiom_text(&title, &r), axiom_json(&r)))
        }
        GaugeCommand::Axioms { spec, bound } => {
            let spec = load_spec(spec)?;
            let r = spec.check_module_axioms(*bound, g.seed)?;
            let title = format!("axioms seed={} bound={bound}", g.seed);
            Ok(emit(g, r.passed(), axiom_text(&title, &r), axiom_json(&r)))
        }
        GaugeCommand::Adjoint => {
            let spec = GaugeModuleSpec::adjoint(g.n as usize);
            Ok(Outcome::new(true, format!("{}\n", spec.to_json())))
        }
    }
}

/// Parses arguments (without the program name) and runs; clap usage errors
/// map to exit status 2.
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("wittgauge")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            Outcome {
                code,
                report: e.to_string(),
            }
        }
    }
}
