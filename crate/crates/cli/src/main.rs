//! `codezeta`: weight enumerators, zeta polynomials and Riemann hypothesis checks
//! for linear codes.

mod decimal;
mod error;
mod pipeline;
mod report;
mod scan;
mod source;

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use codezeta::RhStatus;
use serde::Serialize;

use crate::error::{exit, CliError, CliResult, EXIT_INCONCLUSIVE, EXIT_NUMERIC_FAIL};
use crate::report::{render_table, Coefficient, RunReport};
use crate::scan::ScanFamily;
use crate::source::{Family, Source, SourceArgs};

#[derive(Debug, Parser)]
#[command(name = "codezeta", version, about = "Zeta polynomials of linear codes and their Riemann hypothesis")]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// JSON output (the default).
    #[arg(long, global = true, conflicts_with = "table")]
    json: bool,
    /// Human-readable table.
    #[arg(long, global = true)]
    table: bool,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Include per-stage timings in reports.
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a weight enumerator.
    We {
        /// Family, as an alternative to --family.
        #[arg(value_enum)]
        kind: Option<Family>,
        #[command(flatten)]
        source: SourceArgs,
    },
    /// Print a zeta polynomial.
    Zeta {
        #[command(flatten)]
        source: SourceArgs,
        /// Use the MacWilliams-invariant combination of the code and its dual.
        #[arg(long)]
        invariantize: bool,
        /// Cross-check against the linear-system algorithm.
        #[arg(long)]
        oracle: bool,
        /// Cross-check against the family's closed form.
        #[arg(long)]
        closed_form: bool,
    },
    /// Verify the Riemann hypothesis for a zeta polynomial.
    CheckRh {
        #[command(flatten)]
        source: SourceArgs,
        /// Initial sign-scan grid size.
        #[arg(long)]
        grid: Option<usize>,
        /// Tolerance on the root modulus deviation.
        #[arg(long)]
        tol: Option<f64>,
        /// Check the code's own zeta polynomial instead of the invariant one.
        #[arg(long)]
        plain: bool,
    },
    /// Sweep a family over parameter ranges.
    Scan {
        #[arg(long, value_enum)]
        family: ScanFamily,
        /// Comma-separated field sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        q_list: Vec<u64>,
        /// Largest length for MDS codes.
        #[arg(long)]
        n_max: Option<usize>,
        /// Largest redundancy for Hamming codes.
        #[arg(long)]
        r_max: Option<usize>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long = "json-out", value_name = "PATH")]
        json_path: Option<PathBuf>,
    },
}

struct Output {
    text: String,
    code: u8,
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| CliError::Malformed(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn code_source(source: &SourceArgs) -> CliResult<source::CodeSource> {
    match source.resolve()? {
        Source::Code(c) => Ok(c),
        Source::Zeta(..) => Err(CliError::BadParams("expected an enumerator, got a zeta polynomial".into())),
    }
}

fn cmd_we(kind: Option<Family>, mut source: SourceArgs) -> CliResult<Output> {
    if let Some(kind) = kind {
        if source.family.is_some_and(|f| f != kind) {
            return Err(CliError::BadParams("conflicting family arguments".into()));
        }
        source.family = Some(kind);
    }
    let src = code_source(&source)?;
    Ok(Output {
        text: json(&src.code.to_json(src.k))?,
        code: 0,
    })
}

fn cmd_zeta(source: &SourceArgs, invariantize: bool, oracle: bool, closed: bool) -> CliResult<Output> {
    let src = code_source(source)?;
    let z = if invariantize {
        pipeline::invariant(&src)?
    } else {
        pipeline::plain_zeta(&src)
    };
    if oracle {
        pipeline::oracle_check(&src, &z, invariantize)?;
    }
    if closed {
        pipeline::closed_form_check(&src, &z, invariantize)?;
    }
    Ok(Output {
        text: json(&z.to_json())?,
        code: 0,
    })
}

fn status_code(status: RhStatus) -> u8 {
    match status {
        RhStatus::ProvedEk | RhStatus::ProvedSignScan | RhStatus::NumericPass => 0,
        RhStatus::NumericFail => EXIT_NUMERIC_FAIL,
        RhStatus::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

fn ms_since(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e4).round() / 10.0
}

fn cmd_check_rh(
    source: &SourceArgs,
    grid: Option<usize>,
    tol: Option<f64>,
    plain: bool,
    out: &OutputArgs,
) -> CliResult<Output> {
    let mut timings = BTreeMap::new();
    let start = Instant::now();
    let (inputs, family, enumerator, z) = match source.resolve()? {
        Source::Zeta(inputs, z) => (inputs, None, None, z),
        Source::Code(src) => {
            timings.insert("enumerator".to_string(), ms_since(start));
            let started = Instant::now();
            let z = if plain || src.pair.is_none() {
                pipeline::plain_zeta(&src)
            } else {
                pipeline::invariant(&src)?
            };
            timings.insert("zeta".to_string(), ms_since(started));
            (src.inputs.clone(), src.family, Some(src.code.to_json(src.k)), z)
        }
    };
    let opts = pipeline::rh_options(family, z.q(), grid, tol);
    let started = Instant::now();
    let verdict = pipeline::verify(&z, &opts)?;
    timings.insert("verify".to_string(), ms_since(started));
    let table = pipeline::table(&z)?;
    let report = RunReport {
        inputs,
        enumerator,
        zeta: z.to_json(),
        normalized_coeffs: table.iter().map(Coefficient::new).collect(),
        verdict,
        timings: out.timings.then_some(timings),
    };
    let text = if out.table {
        render_table(&report, &table)
    } else {
        json(&report)?
    };
    Ok(Output {
        text,
        code: status_code(report.verdict.status),
    })
}

fn write_file(path: &PathBuf, text: &str) -> CliResult<()> {
    std::fs::write(path, text).map_err(CliError::Io)
}

fn cmd_scan(
    family: ScanFamily,
    q_list: &[u64],
    n_max: Option<usize>,
    r_max: Option<usize>,
    csv: Option<&PathBuf>,
    json_path: Option<&PathBuf>,
    out: &OutputArgs,
) -> CliResult<Output> {
    let max = match family {
        ScanFamily::Mds => n_max.ok_or_else(|| CliError::BadParams("--n-max is required for mds".into()))?,
        ScanFamily::Hamming => r_max.ok_or_else(|| CliError::BadParams("--r-max is required for hamming".into()))?,
    };
    let rows = scan::run(family, q_list, max)?;
    let csv_text = scan::to_csv(&rows);
    if let Some(path) = csv {
        write_file(path, &csv_text)?;
    }
    if let Some(path) = json_path {
        write_file(path, &json(&rows)?)?;
    }
    let text = if out.json && csv.is_none() && json_path.is_none() {
        json(&rows)?
    } else {
        csv_text
    };
    Ok(Output { text, code: 0 })
}

fn run(cli: &Cli) -> CliResult<Output> {
    match &cli.command {
        Command::We { kind, source } => cmd_we(*kind, source.clone()),
        Command::Zeta {
            source,
            invariantize,
            oracle,
            closed_form,
        } => cmd_zeta(source, *invariantize, *oracle, *closed_form),
        Command::CheckRh { source, grid, tol, plain } => cmd_check_rh(source, *grid, *tol, *plain, &cli.output),
        Command::Scan {
            family,
            q_list,
            n_max,
            r_max,
            csv,
            json_path,
        } => cmd_scan(*family, q_list, *n_max, *r_max, csv.as_ref(), json_path.as_ref(), &cli.output),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|output| {
        match &cli.output.out {
            Some(path) => write_file(path, &output.text)?,
            None => print!("{}", output.text),
        }
        Ok(output.code)
    });
    match result {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("codezeta: {e}");
            exit(e.exit_code())
        }
    }
}
