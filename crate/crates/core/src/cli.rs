//! Command-line front end. [`run`] returns the process exit code.

use crate::arith::{format_rational, quad_to_decimal, quad_to_scientific, QuadRat, MAX_DIGITS};
use crate::catalog::{self, family_title, Params};
use crate::config::SuiteConfig;
use crate::verifier::{effective_sums, run_suite, Scope};
use clap::{Parser, Subcommand, ValueEnum};
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONFIG: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "fibsum", version, about = "Exact Fibonacci-Lucas reciprocal sums and their verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List catalog entries whose id starts with PREFIX.
    Catalog { prefix: Option<String> },
    /// Partial sum, closed form and gap for one entry.
    Eval {
        entry: String,
        #[arg(long)]
        m: Option<i64>,
        #[arg(long)]
        n: Option<i64>,
        #[arg(long)]
        q: Option<i64>,
        #[arg(long)]
        p: Option<i64>,
        #[arg(long, default_value_t = 64)]
        terms: u64,
        #[arg(long, default_value_t = 40)]
        digits: usize,
    },
    /// Run verification suites and print JSON-lines reports.
    Verify {
        scope: ScopeArg,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        /// Include timings (per-report `ms` and the summary's `elapsed_ms`).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ScopeArg {
    Identities,
    Finite,
    Infinite,
    Examples,
    All,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::Identities => Scope::Identities,
            ScopeArg::Finite => Scope::Finite,
            ScopeArg::Infinite => Scope::Infinite,
            ScopeArg::Examples => Scope::Examples,
            ScopeArg::All => Scope::All,
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Catalog { prefix } => cmd_catalog(prefix.as_deref().unwrap_or(""), out),
        Command::Eval { entry, m, n, q, p, terms, digits } => cmd_eval(&entry, [m, n, q, p], terms, digits, out),
        Command::Verify { scope, config, seed, timing } => cmd_verify(scope.into(), config, seed, timing, out),
    };
    match result {
        Ok(code) => code,
        Err((code, msg)) => {
            let _ = writeln!(err, "error: {msg}");
            code
        }
    }
}

type CmdResult = Result<i32, (i32, String)>;

fn io_err(e: std::io::Error) -> (i32, String) {
    (EXIT_FAIL, e.to_string())
}

fn cmd_catalog(prefix: &str, out: &mut dyn Write) -> CmdResult {
    let entries = catalog::filter_prefix(prefix);
    let mut family = "";
    for e in &entries {
        if e.family != family {
            family = e.family;
            writeln!(out, "== {family}: {}\n", family_title(family)).map_err(io_err)?;
        }
        writeln!(out, "{}", e.dump()).map_err(io_err)?;
    }
    writeln!(out, "{} entries", entries.len()).map_err(io_err)?;
    Ok(EXIT_OK)
}

fn cmd_eval(id: &str, args: [Option<i64>; 4], terms: u64, digits: usize, out: &mut dyn Write) -> CmdResult {
    let usage = |m: String| (EXIT_USAGE, m);
    let entry = catalog::find(id).map_err(|e| usage(e.to_string()))?;
    if terms == 0 {
        return Err(usage("--terms must be at least 1".into()));
    }
    if digits == 0 || digits > MAX_DIGITS {
        return Err(usage(format!("--digits must be between 1 and {MAX_DIGITS}")));
    }
    let [m, n, q, p] = args;
    let params = match (entry.default_params(), m, n, q) {
        (_, Some(m), Some(n), Some(q)) => Params::new(m, n, q, p.unwrap_or(0)),
        (Some(fp), None, None, None) if p.is_none() => fp,
        _ => return Err(usage(format!("{id} needs --m, --n and --q"))),
    };
    entry.check_params(&params).map_err(|e| usage(e.to_string()))?;
    let fail = |e: catalog::CatalogError| (EXIT_FAIL, e.to_string());
    let closed = catalog::closed_form(entry, &params).map_err(fail)?;
    let sum = effective_sums(entry, &params, &[terms]).map_err(fail)?.remove(0);
    let gap = (QuadRat::from(&sum) - &closed).abs();
    let dec = |x: &QuadRat| quad_to_decimal(x, digits).expect("digits checked");
    let sum_label = match entry.summation {
        catalog::Summation::Ordinary => "partial sum",
        catalog::Summation::Cesaro => "cesaro mean",
    };
    let lines = [
        ("entry", entry.id.to_string()),
        ("params", params.to_string()),
        ("terms", terms.to_string()),
        (sum_label, format_rational(&sum)),
        ("closed form", closed.to_string()),
        ("sum ~", dec(&QuadRat::from(&sum))),
        ("closed ~", dec(&closed)),
        ("gap", gap.to_string()),
        ("gap ~", quad_to_scientific(&gap, 6).expect("6 significant digits")),
    ];
    for (k, v) in lines {
        writeln!(out, "{:<13}{v}", format!("{k}:")).map_err(io_err)?;
    }
    Ok(EXIT_OK)
}

fn cmd_verify(
    scope: Scope,
    config: Option<PathBuf>,
    seed: Option<u64>,
    timing: bool,
    out: &mut dyn Write,
) -> CmdResult {
    let mut cfg = match &config {
        Some(path) => SuiteConfig::load(path).map_err(|e| (EXIT_CONFIG, e.to_string()))?,
        None => SuiteConfig::default(),
    };
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let (mut reports, mut summary) = run_suite(&cfg, scope).map_err(|e| (EXIT_USAGE, e.to_string()))?;
    if !timing {
        reports.iter_mut().for_each(|r| r.ms = 0);
        summary.elapsed_ms = None;
    }
    let mut file;
    let sink: &mut dyn Write = if cfg.output == "-" {
        out
    } else {
        file = std::io::BufWriter::new(
            std::fs::File::create(&cfg.output).map_err(|e| (EXIT_CONFIG, format!("output {}: {e}", cfg.output)))?,
        );
        &mut file
    };
    for r in &reports {
        let line = serde_json::to_string(r).expect("report serializes");
        writeln!(sink, "{line}").map_err(io_err)?;
    }
    let s = serde_json::json!({ "summary": summary });
    writeln!(sink, "{s}").map_err(io_err)?;
    sink.flush().map_err(io_err)?;
    Ok(if summary.ok() { EXIT_OK } else { EXIT_FAIL })
}
