use std::path::PathBuf;
use std::process::ExitCode;

use adrg::Tolerances;
use adrg_cli::{run_scan, report_single, Filter, Format, ScanConfig, Sections};
use clap::Parser;

/// Classify regular graphs from graph6 input.
#[derive(Debug, Parser)]
#[command(name = "adrg", version)]
struct Args {
    /// Input file, one `[NAME] GRAPH6` per line (default: stdin).
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file (default: stdout).
    #[arg(long = "out", value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, default_value = "jsonl", value_name = "jsonl|csv")]
    format: Format,
    /// Relative gap for merging eigenvalues.
    #[arg(long = "tol-eig", value_name = "F")]
    tol_eig: Option<f64>,
    /// Tolerance for matrix identities and entry matches.
    #[arg(long = "tol-match", value_name = "F")]
    tol_match: Option<f64>,
    /// Relative tolerance for equality in the bounds.
    #[arg(long = "tol-bound", value_name = "F")]
    tol_bound: Option<f64>,
    #[arg(long = "max-n", value_name = "INT")]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 1, value_name = "INT")]
    jobs: usize,
    /// Keep only reports matching EXPR, e.g. "m_wr >= 2 && !distance_regular".
    #[arg(long, value_name = "EXPR")]
    filter: Option<String>,
    /// Comma-separated sections: spectrum, punctual, regularity, intersection,
    /// bounds, diagnostics, tolerances (default: all).
    #[arg(long, value_name = "LIST")]
    sections: Option<Sections>,
    /// Print a text report for one graph instead of scanning.
    #[arg(long, value_name = "GRAPH6STRING")]
    single: Option<String>,
}

fn main() -> ExitCode {
    let args = Args::parse();
    let defaults = Tolerances::default();
    let tolerances = Tolerances {
        eig_group: args.tol_eig.unwrap_or(defaults.eig_group),
        mat: args.tol_match.unwrap_or(defaults.mat),
        bound: args.tol_bound.unwrap_or(defaults.bound),
        max_n: args.max_n.unwrap_or(defaults.max_n),
    };
    if let Err(e) = tolerances.validate() {
        eprintln!("adrg: {e}");
        return ExitCode::from(2);
    }

    if let Some(line) = args.single {
        return match report_single(&line, &tolerances) {
            Ok(text) => {
                print!("{text}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("adrg: {}", e.error.message);
                ExitCode::from(if e.error.kind.is_internal() { 1 } else { 0 })
            }
        };
    }

    let filter = match args.filter.as_deref().map(Filter::parse).transpose() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("adrg: {e}");
            return ExitCode::from(2);
        }
    };
    let cfg = ScanConfig {
        input: args.input,
        output: args.output,
        format: args.format,
        tolerances,
        jobs: args.jobs,
        filter,
        sections: args.sections.unwrap_or_default(),
    };
    match run_scan(&cfg) {
        Ok(summary) => {
            eprintln!(
                "parsed {}, classified {}, failed {}, filtered {}, internal errors {}",
                summary.parsed, summary.classified, summary.failed, summary.filtered, summary.internal_errors
            );
            ExitCode::from(summary.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("adrg: {e}");
            ExitCode::from(2)
        }
    }
}
