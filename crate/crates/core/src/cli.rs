//! Command-line front end. [`run_cli`] takes the argument vector and output
//! streams explicitly, so the whole surface can be driven from tests.
//!
//! Exit codes: 0 on success, 1 on usage or validation errors, 2 when a
//! verification check fails.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::error::{Error, Result};
use crate::optimizer::{maximize, qubit_rstar, MethodChoice, DEFAULT_BUDGET};
use crate::partition::{count_partitions_capped, Partition};
use crate::rates::{balanced_rate_series, code_rate};
use crate::report::{
    render_decomposition, render_optimum, render_qubit_table, render_rate, render_rate_series,
    render_report, Format, QubitRow, RateRow, VerificationReport,
};
use crate::schur_weyl::{decomposition, multiplicity};
use crate::verify::{run_check, Check, VerifyParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qudit-ns",
    version,
    about = "Noiseless-subsystem dimensions for collective rotation channels on qudits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format: table, csv or json
    #[arg(long, default_value = "table")]
    format: Format,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every block f(p), g(p) for d levels and n qudits
    Decompose {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Find all partitions maximizing the multiplicity
    Maximize {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        /// auto, brute, closed, local or incremental
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: MethodChoice,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Rate log_d f / n of one block (--parts) or of the optimum for --n
    Rate {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..), required_unless_present = "parts", conflicts_with = "parts")]
        n: Option<u32>,
        /// Comma-separated rows, e.g. 6,4
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        parts: Option<Vec<i64>>,
        #[arg(long, default_value = "auto", value_parser = parse_method)]
        method: MethodChoice,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Rates at the balanced partitions (k, ..., k) for k = 1..kmax
    RateSeries {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        d: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Qubit optimum table: n, r*, f(n-r*, r*), floor(log2 f)
    QubitTable {
        #[arg(long, default_value_t = 15, value_parser = clap::value_parser!(u32).range(3..))]
        nmax: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification sweep
    Verify {
        /// One of: dimension-sum, hook-oracle, ssyt-oracle, closed-form-d2,
        /// closed-form-d3, local-optimality, mbm-chain, tie-families,
        /// rate-bounds, quadratic-sign-d2
        #[arg(long)]
        check: Check,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        d: Option<u32>,
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        kmax: Option<u32>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        common: Common,
    },
}

fn parse_method(s: &str) -> std::result::Result<MethodChoice, String> {
    match s {
        "auto" => Ok(MethodChoice::Auto),
        "brute" => Ok(MethodChoice::Brute),
        "closed" => Ok(MethodChoice::Closed),
        "local" => Ok(MethodChoice::Local),
        "incremental" => Ok(MethodChoice::Incremental),
        other => Err(format!(
            "unknown method '{other}' (expected auto, brute, closed, local or incremental)"
        )),
    }
}

/// Decomposition listing with its dimension-sum trailer.
pub fn cmd_decompose(d: usize, n: u32, format: Format, budget: u64) -> Result<String> {
    if count_partitions_capped(n, d, budget).is_none() {
        return Err(Error::BudgetExceeded { d, n, budget });
    }
    Ok(render_decomposition(&decomposition(d, n)?, format))
}

/// Rows of the qubit optimum table for `n = 3..=n_max`.
pub fn qubit_table(n_max: u32) -> Result<Vec<QubitRow>> {
    if n_max < 3 {
        return Err(Error::InvalidArgument(format!("qubit table needs nmax >= 3, got {n_max}")));
    }
    Ok((3..=n_max)
        .map(|n| {
            let r = qubit_rstar(u64::from(n)) as u32;
            let f = multiplicity(&Partition::from_valid(vec![n - r, r]));
            let floor_log2_f = f.bits() - 1;
            QubitRow { n, r_star: r, f, floor_log2_f }
        })
        .collect())
}

pub fn cmd_qubit_table(n_max: u32, format: Format) -> Result<String> {
    Ok(render_qubit_table(&qubit_table(n_max)?, format))
}

pub fn cmd_verify(check: Check, params: &VerifyParams) -> Result<VerificationReport> {
    run_check(check, params)
}

pub fn verify_exit_code(report: &VerificationReport) -> i32 {
    if report.passed() {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn width(d: u32) -> usize {
    d as usize
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };

    let jobs = match &cli.command {
        Command::Decompose { common, .. }
        | Command::Maximize { common, .. }
        | Command::Rate { common, .. }
        | Command::RateSeries { common, .. }
        | Command::QubitTable { common, .. }
        | Command::Verify { common, .. } => common.jobs,
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
        Ok(pool) => pool,
        Err(e) => {
            let _ = writeln!(err, "error: --jobs {jobs}: {e}");
            return EXIT_USAGE;
        }
    };

    match pool.install(|| dispatch(cli.command)) {
        Ok(outcome) => {
            for note in &outcome.notes {
                let _ = writeln!(err, "{note}");
            }
            let _ = out.write_all(outcome.text.as_bytes());
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Text for stdout, diagnostic lines for stderr, and the exit code.
struct Outcome {
    text: String,
    notes: Vec<String>,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, notes: Vec::new(), code: EXIT_OK }
    }
}

fn dispatch(command: Command) -> Result<Outcome> {
    let mut notes = Vec::new();
    match command {
        Command::Decompose { d, n, budget, common } => {
            Ok(Outcome::ok(cmd_decompose(width(d), n, common.format, budget)?))
        }
        Command::Maximize { d, n, method, budget, common } => {
            let result = maximize(width(d), n, method, budget)?;
            notes.extend(result.warning.map(|w| format!("warning: {w}")));
            let text = render_optimum(&result.optimum, common.format);
            Ok(Outcome { text, notes, code: EXIT_OK })
        }
        Command::Rate { d, n, parts, method, budget, common } => {
            let partition = match (parts, n) {
                (Some(parts), _) => Partition::new(&parts, width(d))
                    .map_err(|e| Error::InvalidArgument(format!("--parts: {e}")))?,
                (None, Some(n)) => {
                    let result = maximize(width(d), n, method, budget)?;
                    notes.extend(result.warning.map(|w| format!("warning: {w}")));
                    result.optimum.primary().clone()
                }
                (None, None) => unreachable!("clap requires --n or --parts"),
            };
            if partition.n() == 0 {
                return Err(Error::InvalidArgument("--parts: rate needs at least one box".into()));
            }
            let row = RateRow {
                multiplicity: multiplicity(&partition),
                rate: code_rate(&partition)?,
                partition,
            };
            Ok(Outcome { text: render_rate(&row, common.format), notes, code: EXIT_OK })
        }
        Command::RateSeries { d, kmax, common } => {
            let series = balanced_rate_series(width(d), kmax)?;
            Ok(Outcome::ok(render_rate_series(&series, common.format)))
        }
        Command::QubitTable { nmax, common } => Ok(Outcome::ok(cmd_qubit_table(nmax, common.format)?)),
        Command::Verify { check, d, nmax, kmax, budget, common } => {
            let params = VerifyParams { d: d.map(width), nmax, kmax, budget };
            let report = cmd_verify(check, &params)
                .map_err(|e| Error::InvalidArgument(format!("--check {check}: {e}")))?;
            notes.push(format!("elapsed: {:.3}s", report.elapsed.as_secs_f64()));
            Ok(Outcome {
                text: render_report(&report, common.format),
                notes,
                code: verify_exit_code(&report),
            })
        }
    }
}
