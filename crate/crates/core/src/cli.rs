//! The `qtw` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails,
//! 2 for usage, configuration and I/O errors.

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_rational::Rational64;
use serde_json::Value;

use crate::herm_form::{crosscheck, gram, BasisSpec, ClassConvention, FormEngine};
use crate::unitarity::mu_scan;
use crate::verify::{run_all, Fault};
use crate::Error;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "qtw", version, about = "Exact computations for gl3 over the quantum torus and its free-field module")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub run: RunConfig,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the homomorphism, Lie-algebra, ω, Weyl and degree identities on seeded samples.
    VerifyBrackets,
    /// Write the Gram matrix of the hermitian form at one level.
    Gram,
    /// Compare the recursive and combinatorial form evaluators on every word pair.
    FormCrosscheck,
    /// Scan positive definiteness of a specialized Gram matrix over a μ grid.
    UnitarityScan,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Level `k,l` (number of E12 and E32 factors).
    #[arg(long, global = true, default_value = "0,0", value_parser = parse_pair::<usize>)]
    pub level: (usize, usize),
    /// Exponent window: arguments range over [-W, W]².
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(i64).range(0..))]
    pub window: i64,
    /// Truncate to nonnegative exponents with s-sum ≤ M and t-sum ≤ N.
    #[arg(long, global = true, value_parser = parse_pair::<i64>)]
    pub constraint: Option<(i64, i64)>,
    /// q = exp(2πiθ) with θ = p/q.
    #[arg(long, global = true, default_value = "1/7", value_parser = parse_theta)]
    pub theta: Rational64,
    /// Comma-separated μ values.
    #[arg(long, global = true, default_value = "-1,-0.5,0.25,0.5,1,5", value_parser = parse_list, allow_hyphen_values = true)]
    pub mu: MuGrid,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Samples per verification suite.
    #[arg(long, global = true, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Largest k+l compared by form-crosscheck.
    #[arg(long, global = true, default_value_t = 3)]
    pub max_total: usize,
    /// Write the JSON report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, hide = true, default_value = "cycles-unordered")]
    pub class_convention: ClassConvention,
    #[arg(long, global = true, hide = true, default_value = "none")]
    pub inject_fault: Fault,
}

fn parse_pair<T: FromStr>(s: &str) -> Result<(T, T), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected 'a,b', got '{s}'"))?;
    let parse = |x: &str| x.trim().parse::<T>().map_err(|_| format!("invalid number '{x}'"));
    Ok((parse(a)?, parse(b)?))
}

fn parse_theta(s: &str) -> Result<Rational64, String> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: i64 = p.trim().parse().map_err(|_| format!("invalid numerator in '{s}'"))?;
    let q: i64 = q.trim().parse().map_err(|_| format!("invalid denominator in '{s}'"))?;
    if q == 0 {
        return Err("zero denominator".into());
    }
    Ok(Rational64::new(p, q))
}

/// Comma-separated list of finite reals.
#[derive(Debug, Clone, PartialEq)]
pub struct MuGrid(pub Vec<f64>);

fn parse_list(s: &str) -> Result<MuGrid, String> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| format!("invalid μ value '{x}'"))
        })
        .collect::<Result<_, _>>()
        .map(MuGrid)
}

/// Parse arguments, run, and return the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return EXIT_USAGE;
    }
    let outcome = match cli.command {
        Command::VerifyBrackets => cmd_verify_brackets(&cli.run),
        Command::Gram => cmd_gram(&cli.run),
        Command::FormCrosscheck => cmd_form_crosscheck(&cli.run),
        Command::UnitarityScan => cmd_unitarity_scan(&cli.run),
    };
    match outcome {
        Ok(true) => EXIT_PASS,
        Ok(false) => EXIT_CHECK_FAILED,
        Err(Error::NotHermitian { .. } | Error::HermiticityResidual(_)) => EXIT_CHECK_FAILED,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn configure_threads() -> Result<(), Error> {
    let Ok(raw) = std::env::var("QTW_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| Error::Usage(format!("QTW_THREADS must be a positive integer, got '{raw}'")))?;
    // A pool may already exist when `run` is called twice in one process.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn emit(cfg: &RunConfig, report: &Value) -> Result<(), Error> {
    let mut text = serde_json::to_string_pretty(report).expect("JSON values serialize");
    text.push('\n');
    match &cfg.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn spec_of(cfg: &RunConfig) -> BasisSpec {
    let spec = BasisSpec::new(cfg.level, cfg.window);
    match cfg.constraint {
        Some((m, n)) => spec.with_constraint(m, n),
        None => spec,
    }
}

pub fn cmd_verify_brackets(cfg: &RunConfig) -> Result<bool, Error> {
    let report = run_all(cfg.seed, cfg.samples as usize, cfg.inject_fault);
    emit(cfg, &report.to_json())?;
    if let Some(f) = report.first_failure() {
        eprintln!("FAIL {f}");
    }
    Ok(report.passed())
}

pub fn cmd_gram(cfg: &RunConfig) -> Result<bool, Error> {
    let g = gram(&FormEngine::new(), spec_of(cfg))?;
    emit(cfg, &g.to_json())?;
    Ok(true)
}

pub fn cmd_form_crosscheck(cfg: &RunConfig) -> Result<bool, Error> {
    let report = crosscheck(&FormEngine::new(), cfg.max_total, cfg.window, cfg.class_convention);
    if let Some(m) = &report.mismatch {
        eprintln!("FAIL mismatch at u = {}, v = {}: recursive {} vs combinatorial {}", m.u, m.v, m.recursive, m.combinatorial);
    }
    emit(cfg, &report.to_json())?;
    Ok(report.passed())
}

pub fn cmd_unitarity_scan(cfg: &RunConfig) -> Result<bool, Error> {
    let g = gram(&FormEngine::new(), spec_of(cfg))?;
    let report = mu_scan(&g, cfg.theta, &cfg.mu.0)?;
    emit(cfg, &report.to_json())?;
    Ok(true)
}
