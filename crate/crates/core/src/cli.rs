//! The `bch` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 backend
//! overflow.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use crate::backend::IntegerBackend;
use crate::bchcore::{bch_coefficient, EvalOptions, Fault};
use crate::denominators::DenominatorInfo;
use crate::error::BchError;
use crate::lietools::dynkin_representation;
use crate::tabulation::{coefficient_table_with, coefficients_for, partitions_up_to};
use crate::verify::run_verification;
use crate::word::{parse_block_list, BlockWord};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

/// Largest degree accepted by `dynkin`, which enumerates all `2^n` words.
const DYNKIN_CLI_MAX: u32 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Tsv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "bch", version, about = "Exact Baker-Campbell-Hausdorff coefficients")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Integer backend: auto, 64, 128 or big.
    #[arg(long, global = true, default_value = "auto")]
    pub backend: IntegerBackend,

    /// Output format (table defaults to tsv).
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Worker threads for table and bench.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient of one word, given as letters (ABAB) or as --blocks.
    Coeff {
        word: Option<String>,
        /// Comma-separated block lengths, e.g. 2,1,1.
        #[arg(long, conflicts_with = "word")]
        blocks: Option<String>,
        /// The first block consists of A's (default).
        #[arg(long, conflicts_with = "bfirst")]
        afirst: bool,
        /// The first block consists of B's.
        #[arg(long)]
        bfirst: bool,
    },
    /// The factor d_n and the common denominator n! d_n.
    Dn {
        n: u32,
        /// List every degree from 1 to n.
        #[arg(long)]
        all: bool,
    },
    /// Coefficients for all partitions of all degrees up to n.
    Table { n: u32 },
    /// H_n as a sum of right-nested commutators.
    Dynkin { n: u32 },
    /// Cross-check the recurrence against the brute-force oracle.
    Verify {
        n: u32,
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
    /// Time the coefficient phase of `table n`.
    Bench {
        n: u32,
        #[arg(long, default_value_t = 3)]
        repetitions: usize,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<BchError> for Failure {
    fn from(err: BchError) -> Self {
        match err {
            BchError::BackendOverflow { .. } => Failure {
                code: EXIT_OVERFLOW,
                message: err.to_string(),
            },
            BchError::InexactDivision { .. } => Failure {
                code: EXIT_VERIFY_FAILED,
                message: err.to_string(),
            },
            _ => Failure::usage(err.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(err: io::Error) -> Self {
        Failure::usage(format!("I/O error: {err}"))
    }
}

/// Rejects a forced fixed-width backend whose safe range does not reach `n`.
fn check_range(backend: IntegerBackend, n: u32) -> Result<(), Failure> {
    match backend.max_degree() {
        Some(max) if n > max => Err(Failure {
            code: EXIT_OVERFLOW,
            message: format!(
                "degree {n} exceeds the {backend} range (n <= {max}); use --backend {}",
                IntegerBackend::minimal_for(n).cli_name()
            ),
        }),
        _ => Ok(()),
    }
}

fn positive(n: u32) -> Result<u32, Failure> {
    if n == 0 {
        Err(Failure::usage("degree must be at least 1"))
    } else {
        Ok(n)
    }
}

fn json_int(value: impl ToString) -> serde_json::Value {
    serde_json::Value::Number(value.to_string().parse().expect("integer literal"))
}

fn run_coeff(
    cli: &Cli,
    word: Option<&str>,
    blocks: Option<&str>,
    bfirst: bool,
    out: &mut Vec<u8>,
) -> Result<(), Failure> {
    let word = match (word, blocks) {
        (Some(letters), None) => BlockWord::parse(letters)?,
        (None, Some(list)) => BlockWord::new(parse_block_list(list)?, !bfirst)?,
        _ => return Err(Failure::usage("give either a word or --blocks")),
    };
    check_range(cli.backend, word.degree())?;
    let h = bch_coefficient(&word, cli.backend).map_err(|e| match e {
        BchError::BackendOverflow { degree, .. } => Failure {
            code: EXIT_OVERFLOW,
            message: format!(
                "{e}; the minimal sufficient backend for degree {degree} is --backend {}",
                IntegerBackend::minimal_for(degree).cli_name()
            ),
        },
        other => other.into(),
    })?;
    match cli.format.unwrap_or(OutputFormat::Text) {
        OutputFormat::Text => writeln!(out, "{h}")?,
        OutputFormat::Tsv => {
            writeln!(out, "word\tnumerator\tdenominator")?;
            writeln!(out, "{}\t{}\t{}", word, h.numer(), h.denom())?;
        }
        OutputFormat::Json => {
            let v = serde_json::json!({
                "word": word.render(),
                "num": json_int(h.numer()),
                "den": json_int(h.denom()),
            });
            writeln!(out, "{v}")?;
        }
    }
    Ok(())
}

fn run_dn(cli: &Cli, n: u32, all: bool, out: &mut Vec<u8>) -> Result<(), Failure> {
    positive(n)?;
    let infos: Vec<DenominatorInfo> = if all {
        (1..=n).map(DenominatorInfo::new).collect()
    } else {
        vec![DenominatorInfo::new(n)]
    };
    match cli.format.unwrap_or(OutputFormat::Text) {
        OutputFormat::Text => {
            for i in &infos {
                writeln!(out, "d_{n} = {d}, {n}! d_{n} = {c}", n = i.n, d = i.d_n, c = i.common)?;
            }
        }
        OutputFormat::Tsv => {
            writeln!(out, "n\td_n\tdenominator")?;
            for i in &infos {
                writeln!(out, "{}\t{}\t{}", i.n, i.d_n, i.common)?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = infos
                .iter()
                .map(|i| serde_json::json!({"n": i.n, "d_n": json_int(&i.d_n), "denominator": json_int(&i.common)}))
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
    }
    Ok(())
}

fn overflow_for_table(err: BchError, n: u32) -> Failure {
    match err {
        BchError::BackendOverflow { .. } => Failure {
            code: EXIT_OVERFLOW,
            message: format!(
                "{err}; a table up to degree {n} needs --backend {}",
                IntegerBackend::minimal_for(n).cli_name()
            ),
        },
        other => other.into(),
    }
}

fn run_table(cli: &Cli, n: u32, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<(), Failure> {
    positive(n)?;
    check_range(cli.backend, n)?;
    let start = Instant::now();
    let table = coefficient_table_with(n, cli.backend, &EvalOptions::default(), cli.threads)
        .map_err(|e| overflow_for_table(e, n))?;
    let elapsed = start.elapsed();
    match cli.format.unwrap_or(OutputFormat::Tsv) {
        OutputFormat::Text | OutputFormat::Tsv => table.write_tsv(&mut *out)?,
        OutputFormat::Json => writeln!(out, "{}", table.to_json())?,
    }
    writeln!(
        err,
        "{} partitions, coefficient phase {:.3} s",
        table.len(),
        elapsed.as_secs_f64()
    )?;
    Ok(())
}

fn run_dynkin(cli: &Cli, n: u32, out: &mut Vec<u8>) -> Result<(), Failure> {
    positive(n)?;
    if n > DYNKIN_CLI_MAX {
        return Err(Failure::usage(format!(
            "dynkin enumerates all 2^n words; degree must be at most {DYNKIN_CLI_MAX}"
        )));
    }
    check_range(cli.backend, n)?;
    let terms = dynkin_representation(n, cli.backend)?;
    match cli.format.unwrap_or(OutputFormat::Text) {
        OutputFormat::Text => {
            for t in &terms {
                writeln!(out, "{} [{}]", t.coefficient, t.word)?;
            }
        }
        OutputFormat::Tsv => {
            writeln!(out, "word\tnumerator\tdenominator")?;
            for t in &terms {
                writeln!(out, "{}\t{}\t{}", t.word, t.coefficient.numer(), t.coefficient.denom())?;
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = terms
                .iter()
                .map(|t| {
                    serde_json::json!({
                        "word": t.word,
                        "num": json_int(t.coefficient.numer()),
                        "den": json_int(t.coefficient.denom()),
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::Value::Array(rows))?;
        }
    }
    Ok(())
}

fn run_verify(n: u32, fault: Option<&str>, out: &mut Vec<u8>) -> Result<(), Failure> {
    positive(n)?;
    let fault = match fault {
        None => None,
        Some("diagonal") => Some(Fault::DoubledDiagonal),
        Some(other) => return Err(Failure::usage(format!("unknown fault {other:?}"))),
    };
    let opts = EvalOptions {
        fault,
        ..EvalOptions::checked()
    };
    let report = run_verification(n, &opts);
    for outcome in &report.outcomes {
        writeln!(out, "{outcome}")?;
    }
    match report.first_failure() {
        None => {
            writeln!(out, "all checks passed")?;
            Ok(())
        }
        Some((name, m)) => Err(Failure {
            code: EXIT_VERIFY_FAILED,
            message: format!("{name} failed at {m}"),
        }),
    }
}

fn run_bench(cli: &Cli, n: u32, repetitions: usize, out: &mut Vec<u8>) -> Result<(), Failure> {
    positive(n)?;
    check_range(cli.backend, n)?;
    if repetitions == 0 {
        return Err(Failure::usage("repetitions must be at least 1"));
    }
    // Partition generation is not part of the timed phase.
    let partitions = partitions_up_to(n);
    let opts = EvalOptions {
        check_divisions: false,
        ..EvalOptions::default()
    };
    let mut times: Vec<Duration> = Vec::with_capacity(repetitions);
    for _ in 0..repetitions {
        let start = Instant::now();
        coefficients_for(&partitions, cli.backend, &opts, cli.threads)
            .map_err(|e| overflow_for_table(e, n))?;
        times.push(start.elapsed());
    }
    times.sort();
    let min = times[0];
    let median = times[times.len() / 2];
    writeln!(out, "degree: {n}")?;
    writeln!(out, "partitions: {}", partitions.len())?;
    writeln!(out, "backend: {}", cli.backend)?;
    writeln!(out, "threads: {}", cli.threads)?;
    writeln!(out, "repetitions: {repetitions}")?;
    writeln!(out, "min: {:.4} s", min.as_secs_f64())?;
    writeln!(out, "median: {:.4} s", median.as_secs_f64())?;
    Ok(())
}

fn dispatch(cli: &Cli, out: &mut Vec<u8>, err: &mut dyn Write) -> Result<(), Failure> {
    if cli.threads == 0 {
        return Err(Failure::usage("--threads must be at least 1"));
    }
    match &cli.command {
        Command::Coeff {
            word,
            blocks,
            afirst: _,
            bfirst,
        } => run_coeff(cli, word.as_deref(), blocks.as_deref(), *bfirst, out),
        Command::Dn { n, all } => run_dn(cli, *n, *all, out),
        Command::Table { n } => run_table(cli, *n, out, err),
        Command::Dynkin { n } => run_dynkin(cli, *n, out),
        Command::Verify { n, inject_fault } => run_verify(*n, inject_fault.as_deref(), out),
        Command::Bench { n, repetitions } => run_bench(cli, *n, *repetitions, out),
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };

    let mut buffer = Vec::new();
    let result = dispatch(&cli, &mut buffer, stderr);
    let written = match &cli.out {
        Some(path) => fs::write(path, &buffer),
        None => stdout.write_all(&buffer),
    };
    match (result, written) {
        (Ok(()), Ok(())) => EXIT_OK,
        (Ok(()), Err(e)) => {
            let _ = writeln!(stderr, "error: cannot write output: {e}");
            EXIT_USAGE
        }
        (Err(failure), _) => {
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
