//! The `skeintorus` command line.
//!
//! Exit codes: 0 success, 1 a check found a mismatch, 2 bad input,
//! 3 oracle crossing budget exceeded, 4 cache or other I/O failure.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bench::{run_suite, BenchConfig};
use crate::check::{differential, Corpus};
use crate::closedforms::{check_all, CheckLimits, Verdict};
use crate::discrepancy::{Engine, MemoTable};
use crate::expr::parse;
use crate::oracle::{oracle_multiply_skein, OracleConfig, OracleError, DEFAULT_BUDGET};
use crate::skein::{to_multicurve, to_s_basis, SkeinElement};

pub const CACHE_ENV: &str = "SKEINTORUS_CACHE";

pub const EXIT_MISMATCH: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const EXIT_IO: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "skeintorus", version, about = "Products in the skein algebra of the one-holed torus")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    /// `eta^k T(p,q)`
    Chebyshev,
    /// `d^k (p,q)`
    Multicurve,
    /// Threaded by Chebyshev polynomials of the second kind (text only)
    S,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Latex,
}

#[derive(clap::Args, Debug, Clone)]
pub struct CacheArg {
    /// Persistent memo table; loaded if present and updated afterwards.
    #[arg(long, env = CACHE_ENV)]
    pub cache: Option<PathBuf>,
}

#[derive(clap::Args, Debug, Clone, Copy)]
pub struct OracleArgs {
    /// Largest crossing number the oracle attempts.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Strand offset seed for oracle diagrams.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        OracleConfig { budget: self.budget, seed: self.seed }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Multiply two expressions such as "T(2,1)" and "(0,1) + A^2*d".
    Product {
        x: String,
        y: String,
        #[arg(long, value_enum, default_value_t = Basis::Chebyshev)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Compute by the state-sum oracle instead of the recursion.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        oracle_args: OracleArgs,
        #[command(flatten)]
        cache: CacheArg,
    },
    /// The discrepancy D(p,q;r,s).
    #[command(name = "disc", alias = "discrepancy")]
    Disc {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[arg(allow_negative_numbers = true)]
        r: i64,
        #[arg(allow_negative_numbers = true)]
        s: i64,
        #[arg(long, value_enum, default_value_t = Basis::Chebyshev)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        #[command(flatten)]
        cache: CacheArg,
    },
    /// Fill the memo table and write it to the cache file.
    Table {
        #[arg(long)]
        pmax: i64,
        /// Defaults to pmax/2.
        #[arg(long)]
        qmax: Option<i64>,
        /// Also fill D(p,q;0,s) for 2 <= s <= smax.
        #[arg(long, default_value_t = 1)]
        smax: i64,
        #[command(flatten)]
        cache: CacheArg,
    },
    /// Differential suite against the oracle, optionally closed forms.
    Check {
        /// Run the closed-form suite instead of the oracle comparison.
        #[arg(long)]
        closed_forms: bool,
        /// Negate one engine coefficient to exercise failure reporting.
        #[arg(long)]
        inject_fault: bool,
        /// Print a JSON report.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 5)]
        pmax: i64,
        #[arg(long, default_value_t = 5)]
        qmax: i64,
        #[arg(long, default_value_t = 3)]
        rmax: i64,
        #[arg(long, default_value_t = 3)]
        smax: i64,
        #[arg(long, default_value_t = 16)]
        max_crossings: i64,
        #[command(flatten)]
        oracle_args: OracleArgs,
    },
    /// Time the engine on D(p, p/2; 0, 1) and print CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = vec![20, 40, 60, 80, 100, 120, 140, 160, 180, 200])]
        dets: Vec<i64>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        /// The oracle is timed for determinants up to this value.
        #[arg(long, default_value_t = crate::bench::ORACLE_MAX_DET)]
        oracle_max_det: i64,
    },
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

fn fail(code: u8, message: impl ToString) -> Failure {
    Failure { code, message: message.to_string() }
}

fn oracle_failure(e: OracleError) -> Failure {
    match e {
        OracleError::OverBudget { .. } => fail(EXIT_BUDGET, e),
        _ => fail(EXIT_MISMATCH, e),
    }
}

fn open_engine(cache: &CacheArg) -> Result<Engine, Failure> {
    match &cache.cache {
        Some(path) if path.exists() => Ok(Engine::with_table(MemoTable::load(path).map_err(|e| fail(EXIT_IO, e))?)),
        _ => Ok(Engine::new()),
    }
}

fn close_engine(engine: Engine, cache: &CacheArg) -> Result<(), Failure> {
    if let Some(path) = &cache.cache {
        save(engine.table(), path)?;
    }
    Ok(())
}

fn save(table: &MemoTable, path: &Path) -> Result<(), Failure> {
    table.save(path).map_err(|e| fail(EXIT_IO, e))
}

/// Renders `x` in the requested basis and format.
pub fn render(x: &SkeinElement, basis: Basis, format: OutputFormat) -> Result<String, Failure> {
    Ok(match (basis, format) {
        (Basis::Chebyshev, OutputFormat::Text) => x.to_string(),
        (Basis::Chebyshev, OutputFormat::Json) => x.to_json(),
        (Basis::Chebyshev, OutputFormat::Latex) => x.to_latex(),
        (Basis::Multicurve, OutputFormat::Text) => to_multicurve(x).to_string(),
        (Basis::Multicurve, OutputFormat::Json) => to_multicurve(x).to_json(),
        (Basis::Multicurve, OutputFormat::Latex) => to_multicurve(x).to_latex(),
        (Basis::S, OutputFormat::Text) => to_s_basis(x).to_string(),
        (Basis::S, _) => return Err(fail(EXIT_INPUT, "the S basis is only rendered as text")),
    })
}

/// Runs a parsed command, writing results to `out`.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let io = |e: std::io::Error| fail(EXIT_IO, e);
    match cli.command {
        Command::Product { x, y, basis, format, oracle, oracle_args, cache } => {
            let ex = parse(&x).map_err(|e| fail(EXIT_INPUT, format!("first factor: {e}")))?;
            let ey = parse(&y).map_err(|e| fail(EXIT_INPUT, format!("second factor: {e}")))?;
            let value = if oracle {
                let cfg = oracle_args.config();
                let mut mul = |a: &SkeinElement, b: &SkeinElement| oracle_multiply_skein(a, b, &cfg);
                let (a, b) = (ex.eval(&mut mul).map_err(oracle_failure)?, ey.eval(&mut mul).map_err(oracle_failure)?);
                mul(&a, &b).map_err(oracle_failure)?
            } else {
                let mut engine = open_engine(&cache)?;
                let mut mul = |a: &SkeinElement, b: &SkeinElement| Ok::<_, Failure>(engine.multiply(a, b));
                let (a, b) = (ex.eval(&mut mul)?, ey.eval(&mut mul)?);
                let value = mul(&a, &b)?;
                close_engine(engine, &cache)?;
                value
            };
            writeln!(out, "{}", render(&value, basis, format)?).map_err(io)?;
            Ok(0)
        }
        Command::Disc { p, q, r, s, basis, format, cache } => {
            let mut engine = open_engine(&cache)?;
            let d = engine.discrepancy(p, q, r, s);
            close_engine(engine, &cache)?;
            writeln!(out, "{}", render(&d, basis, format)?).map_err(io)?;
            Ok(0)
        }
        Command::Table { pmax, qmax, smax, cache } => {
            let path = cache.cache.clone().ok_or_else(|| fail(EXIT_INPUT, format!("table needs --cache or {CACHE_ENV}")))?;
            if pmax < 0 || smax < 1 {
                return Err(fail(EXIT_INPUT, "need pmax >= 0 and smax >= 1"));
            }
            let qmax = qmax.unwrap_or(pmax / 2).min(pmax / 2);
            let mut engine = open_engine(&cache)?;
            engine.fill_table_s1(pmax, qmax).map_err(|e| fail(EXIT_MISMATCH, e))?;
            if smax >= 2 {
                engine.fill_table_s1(pmax, pmax / 2).map_err(|e| fail(EXIT_MISMATCH, e))?;
                for p in 1..=pmax {
                    for q in 0..=qmax.min(p / 2) {
                        engine.fill_table_s(p, q, smax).map_err(|e| fail(EXIT_MISMATCH, e))?;
                    }
                }
            }
            save(engine.table(), &path)?;
            let t = engine.table();
            let nonzero = t.sorted().iter().filter(|(_, v)| !v.is_zero()).count();
            writeln!(out, "entries: {} (non-zero {nonzero})", t.len()).map_err(io)?;
            writeln!(out, "max terms per entry: {}", t.peak_terms()).map_err(io)?;
            writeln!(out, "monomials: {}", t.monomial_count()).map_err(io)?;
            writeln!(out, "written: {}", path.display()).map_err(io)?;
            Ok(0)
        }
        Command::Check { closed_forms, inject_fault, json, pmax, qmax, rmax, smax, max_crossings, oracle_args } => {
            let mut engine = Engine::new();
            if closed_forms {
                let reports = check_all(&mut engine, &CheckLimits::default());
                let failed = reports.iter().any(|r| r.verdict == Verdict::Fail);
                if json {
                    writeln!(out, "{}", json!({ "suite": "closed-forms", "passed": !failed, "forms": reports }))
                        .map_err(io)?;
                } else {
                    for r in &reports {
                        let verdict = serde_json::to_value(r.verdict).unwrap();
                        write!(out, "{} {} {}..={}", verdict.as_str().unwrap(), r.name, r.range.0, r.range.1).map_err(io)?;
                        if let Some(m) = &r.mismatch {
                            write!(out, " first mismatch at {}: closed form {} engine {}", m.arg, m.closed_form, m.engine)
                                .map_err(io)?;
                        }
                        writeln!(out).map_err(io)?;
                    }
                }
                return Ok(if failed { EXIT_MISMATCH } else { 0 });
            }
            let corpus = Corpus { p_min: 1, p_max: pmax, q_max: qmax, r_max: rmax, s_max: smax, max_crossings };
            let report = differential(&mut engine, &corpus, &oracle_args.config(), inject_fault).map_err(oracle_failure)?;
            if json {
                writeln!(out, "{}", json!({ "suite": "oracle", "passed": report.passed(), "pairs": report.pairs, "failures": report.failures }))
                    .map_err(io)?;
            } else {
                for f in &report.failures {
                    let (p, q, r, s) = f.pair;
                    writeln!(out, "FAIL T({p},{q})*T({r},{s}) [{}] at {}: expected {} got {}", f.check, f.term, f.expected, f.got)
                        .map_err(io)?;
                }
                let verdict = if report.passed() { "PASS" } else { "FAIL" };
                writeln!(out, "{verdict} {} pairs, {} failures", report.pairs, report.failures.len()).map_err(io)?;
            }
            Ok(if report.passed() { 0 } else { EXIT_MISMATCH })
        }
        Command::Bench { mut dets, reps, oracle_max_det } => {
            if dets.iter().any(|&d| d < 2) {
                return Err(fail(EXIT_INPUT, "determinants must be at least 2"));
            }
            dets.sort();
            let report = run_suite(&dets, &BenchConfig { reps: reps.max(1), oracle_max_det, oracle_reps: reps.max(1) });
            write!(out, "{}", report.to_csv()).map_err(io)?;
            if let Some(slope) = report.slope {
                eprintln!("log-log slope of engine time: {slope:.3}");
            }
            Ok(0)
        }
    }
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { 0 });
        }
    };
    let stdout = std::io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
