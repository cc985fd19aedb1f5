//! `yrep`: verification suites, intertwiners, quotient modules and orbit
//! search, reported as JSON. Exit codes: 0 pass, 1 mathematical failure,
//! 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use yrep::fusion::IntertwinerKind;
use yrep::rmat::YbeVariant;
use yrep::suites::{self, all_pass, Check, Filter};
use yrep::weights::{Algebra, WeightPair};
use yrep::{Error, Rational};

#[derive(Parser)]
#[command(name = "yrep", version, about = "Exact R-matrix fusion for Yangian modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an invariant suite.
    Verify(VerifyArgs),
    /// Normalized intertwiner I (gl) or J (sp, so) for a weight pair.
    Intertwiner(IntertwinerArgs),
    /// Quotient module, irreducibility, so-even split and Drinfeld data.
    Module(ModuleArgs),
    /// Search the shifted-action orbit for a good pair.
    Orbit(OrbitArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Ybe,
    FusionAntisym,
    Eigen,
    Additive,
    Intertwining,
    Regularity,
    Annihilation,
    Rtt,
    Lemmas,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgebraArg {
    Gl,
    Sp,
    So,
}

impl From<AlgebraArg> for Algebra {
    fn from(a: AlgebraArg) -> Self {
        match a {
            AlgebraArg::Gl => Algebra::Gl,
            AlgebraArg::Sp => Algebra::Sp,
            AlgebraArg::So => Algebra::So,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    So,
    Sp,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Ybe,
    Tybe,
    Cybe,
    Hybe,
    Bybe,
}

impl From<VariantArg> for YbeVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Ybe => YbeVariant::Ybe,
            VariantArg::Tybe => YbeVariant::Tybe,
            VariantArg::Cybe => YbeVariant::Cybe,
            VariantArg::Hybe => YbeVariant::Hybe,
            VariantArg::Bybe => YbeVariant::Bybe,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    I,
    J,
}

#[derive(Args)]
struct Output {
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_enum)]
    algebra: Option<AlgebraArg>,
    /// Restrict form-dependent checks to one form (same as --algebra so|sp).
    #[arg(long, value_enum)]
    form: Option<FormArg>,
    /// Yang–Baxter variant (ybe suite only).
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    /// Symbolic YBE check over Q(x) instead of sampled points.
    #[arg(long)]
    symbolic: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Generic samples per shape in randomized sweeps.
    #[arg(long, default_value_t = 3)]
    samples: usize,
    /// Truncation order of generator series.
    #[arg(long, default_value_t = 3)]
    order: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct WeightArgs {
    /// Weight descriptor {"algebra", "m", "n", "lambda", "mu"}.
    #[arg(long, conflicts_with_all = ["algebra", "n", "lambda", "mu"])]
    weights: Option<PathBuf>,
    #[arg(long, value_enum, requires_all = ["n", "lambda", "mu"])]
    algebra: Option<AlgebraArg>,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated labels, e.g. "4/3,1".
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
}

#[derive(Args)]
struct IntertwinerArgs {
    #[arg(ignore_case = true)]
    kind: KindArg,
    #[command(flatten)]
    weights: WeightArgs,
    /// Take the limit along the default line even at a generic pair.
    #[arg(long)]
    line: bool,
    /// Include the matrix as sparse (row, col, "p/q") triples.
    #[arg(long)]
    emit_matrix: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    weights: WeightArgs,
    #[arg(long)]
    line: bool,
    #[arg(long, default_value_t = 3)]
    order: usize,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct OrbitArgs {
    #[command(flatten)]
    weights: WeightArgs,
    #[command(flatten)]
    output: Output,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Regularity { .. } => Failure { code: 1, message: format!("regularity violation: {e}") },
            Error::Pole(_) | Error::Contradiction(_) | Error::NoGoodPair => Failure { code: 1, message: e.to_string() },
            _ => usage(e.to_string()),
        }
    }
}

#[derive(Serialize)]
struct VerifyReport {
    report: &'static str,
    suite: String,
    seed: u64,
    pass: bool,
    checks: Vec<Check>,
}

fn parse_labels(s: &str) -> Result<Vec<Rational>, Failure> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| t.trim().parse::<Rational>().map_err(|e| usage(format!("bad label {t:?}: {e}")))).collect()
}

fn load_pair(w: &WeightArgs) -> Result<WeightPair, Failure> {
    if let Some(path) = &w.weights {
        let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
        return Ok(WeightPair::from_json(&text)?);
    }
    match (w.algebra, w.n, &w.lambda, &w.mu) {
        (Some(a), Some(n), Some(l), Some(m)) => Ok(WeightPair::new(a.into(), n, parse_labels(l)?, parse_labels(m)?)?),
        _ => Err(usage("give --weights <file> or all of --algebra, --n, --lambda, --mu")),
    }
}

fn emit<T: Serialize>(report: &T, out: &Output) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(report).map_err(|e| usage(e.to_string()))?;
    text.push('\n');
    match &out.out {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verdict(pass: bool) -> u8 {
    if pass {
        0
    } else {
        1
    }
}

fn verify(a: &VerifyArgs) -> Result<u8, Failure> {
    let algebra = match (a.algebra, a.form) {
        (Some(x), Some(f)) if !matches!((x, f), (AlgebraArg::So, FormArg::So) | (AlgebraArg::Sp, FormArg::Sp)) => return Err(usage("--algebra and --form disagree")),
        (Some(x), _) => Some(x.into()),
        (None, Some(FormArg::So)) => Some(Algebra::So),
        (None, Some(FormArg::Sp)) => Some(Algebra::Sp),
        (None, None) => None,
    };
    let filter = Filter { n: a.n, m: a.m, algebra };
    let sweep = || suites::generic_sweep(&filter, a.samples, a.seed);
    let checks = match a.suite {
        Suite::Ybe => suites::ybe(&filter, a.variant.map(Into::into), a.symbolic, a.seed),
        Suite::FusionAntisym => suites::fusion_antisym(&filter),
        Suite::Eigen => suites::eigen(&sweep()?),
        Suite::Additive => suites::additive(&sweep()?),
        Suite::Intertwining => suites::intertwining(&sweep()?),
        Suite::Regularity => suites::regularity(&suites::regularity_cases(&filter)?),
        Suite::Annihilation => suites::annihilation(&suites::annihilation_cases(&filter)?).into_iter().filter(|c| c.name.starts_with("annihilation")).collect(),
        Suite::Rtt => {
            let mut c = suites::rtt(&sweep()?, a.order);
            c.extend(suites::rtt_quotients(&suites::regularity_cases(&filter)?, a.order));
            c
        }
        Suite::Lemmas => suites::lemmas(&filter)?,
    };
    if checks.is_empty() {
        return Err(usage("the filters leave no checks to run"));
    }
    let name = a.suite.to_possible_value().expect("no skipped suites").get_name().to_string();
    let report = VerifyReport { report: "verify", suite: name, seed: a.seed, pass: all_pass(&checks), checks };
    emit(&report, &a.output)?;
    Ok(verdict(report.pass))
}

fn intertwiner(a: &IntertwinerArgs) -> Result<u8, Failure> {
    let pair = load_pair(&a.weights)?;
    let kind = match a.kind {
        KindArg::I => IntertwinerKind::I,
        KindArg::J => IntertwinerKind::J,
    };
    let (report, _) = yrep::report::intertwiner(kind, &pair, a.line, a.emit_matrix)?;
    emit(&report, &a.output)?;
    Ok(verdict(report.verified))
}

fn module(a: &ModuleArgs) -> Result<u8, Failure> {
    let pair = load_pair(&a.weights)?;
    let report = yrep::report::module(&pair, a.line, a.order)?;
    emit(&report, &a.output)?;
    // only a good pair promises an irreducible (or split) quotient
    Ok(verdict(!report.good || report.consistent()))
}

fn orbit(a: &OrbitArgs) -> Result<u8, Failure> {
    let pair = load_pair(&a.weights)?;
    let report = yrep::report::orbit(&pair)?;
    emit(&report, &a.output)?;
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify(a) => verify(a),
        Command::Intertwiner(a) => intertwiner(a),
        Command::Module(a) => module(a),
        Command::Orbit(a) => orbit(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("yrep: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
