//! Batch scanning of graph6 files.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use adrg::{classify, parse_graph6, ClassificationReport, Tolerances};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::filter::{Filter, FilterError};
use crate::record::{CsvRow, ErrorDetail, ErrorKind, ErrorRecord, Record, Sections};

/// Lines classified per parallel batch.
const BATCH: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Jsonl,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "jsonl" => Ok(Format::Jsonl),
            "csv" => Ok(Format::Csv),
            _ => Err(format!("unknown format {s:?} (expected jsonl or csv)")),
        }
    }
}

/// Batch scan settings. `None` paths mean stdin / stdout.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub input: Option<PathBuf>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub tolerances: Tolerances,
    pub jobs: usize,
    pub filter: Option<Filter>,
    pub sections: Sections,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig {
            input: None,
            output: None,
            format: Format::Jsonl,
            tolerances: Tolerances::default(),
            jobs: 1,
            filter: None,
            sections: Sections::all(),
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<(), ScanError> {
        self.tolerances.validate().map_err(ScanError::Config)?;
        if self.jobs == 0 {
            return Err(ScanError::Config("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum ScanError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error(transparent)]
    Filter(#[from] FilterError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("serialization error: {0}")]
    Csv(#[from] csv::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

/// Counts over one scan.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Input lines that decoded as graph6.
    pub parsed: usize,
    /// Graphs with a full report.
    pub classified: usize,
    /// Lines that produced an error record.
    pub failed: usize,
    /// Reports suppressed by the filter.
    pub filtered: usize,
    /// Failures other than parse or validation rejections.
    pub internal_errors: usize,
}

impl Summary {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.internal_errors > 0)
    }
}

/// Splits an input line into an optional name and the graph6 text.
/// Accepted shapes are `GRAPH6` and `NAME GRAPH6`.
pub fn split_line(line: &str) -> (Option<&str>, &str) {
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next(), parts.next()) {
        (Some(name), Some(g6), None) => (Some(name), g6),
        _ => (None, line.trim()),
    }
}

/// Outcome for one input line.
pub enum Outcome {
    Report(Box<ClassificationReport>),
    Error(ErrorRecord),
}

pub fn process_line(line_no: usize, line: &str, tol: &Tolerances) -> (bool, Outcome) {
    let (name, g6) = split_line(line);
    let fail = |parsed: bool, e: adrg::Error| {
        (
            parsed,
            Outcome::Error(ErrorRecord {
                line: line_no,
                name: name.map(str::to_string),
                input: line.trim().to_string(),
                error: ErrorDetail {
                    kind: ErrorKind::from(&e),
                    message: e.to_string(),
                },
            }),
        )
    };
    let g = match parse_graph6(g6) {
        Ok(g) => g,
        Err(e) => return fail(false, e.into()),
    };
    let g = match name {
        Some(n) => g.with_name(n),
        None => g,
    };
    match classify(g, tol) {
        Ok(r) => (true, Outcome::Report(Box::new(r))),
        Err(e) => fail(true, e),
    }
}

enum Rendered {
    Line(String),
    Row(CsvRow),
    Filtered,
}

struct Done {
    parsed: bool,
    internal: bool,
    failed: bool,
    out: Rendered,
}

fn render(cfg: &ScanConfig, line_no: usize, line: &str) -> Result<Done, serde_json::Error> {
    let (parsed, outcome) = process_line(line_no, line, &cfg.tolerances);
    Ok(match outcome {
        Outcome::Report(r) => {
            let out = if cfg.filter.as_ref().is_some_and(|f| !f.matches(&r)) {
                Rendered::Filtered
            } else {
                match cfg.format {
                    Format::Jsonl => Rendered::Line(serde_json::to_string(&Record::new(*r, &cfg.sections))?),
                    Format::Csv => Rendered::Row(CsvRow::report(line_no, &r)),
                }
            };
            Done {
                parsed,
                internal: false,
                failed: false,
                out,
            }
        }
        Outcome::Error(e) => Done {
            parsed,
            internal: e.error.kind.is_internal(),
            failed: true,
            out: match cfg.format {
                Format::Jsonl => Rendered::Line(serde_json::to_string(&e)?),
                Format::Csv => Rendered::Row(CsvRow::error(&e)),
            },
        },
    })
}

enum Sink<W: Write> {
    Jsonl(W),
    Csv(csv::Writer<W>),
}

/// Scans `input`, writing one record per non-blank line to `output` in input order.
pub fn scan<R: BufRead, W: Write>(cfg: &ScanConfig, input: R, output: W) -> Result<Summary, ScanError> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build()?;
    let mut sink = match cfg.format {
        Format::Jsonl => Sink::Jsonl(output),
        Format::Csv => Sink::Csv(csv::Writer::from_writer(output)),
    };
    let mut summary = Summary::default();
    let mut lines = input.lines().enumerate();
    loop {
        let mut batch = Vec::with_capacity(BATCH);
        for (i, line) in lines.by_ref() {
            let line = line?;
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            batch.push((i + 1, line));
            if batch.len() == BATCH {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let done: Vec<Done> = pool
            .install(|| batch.par_iter().map(|(no, line)| render(cfg, *no, line)).collect::<Result<_, _>>())
            .map_err(io::Error::from)?;
        for d in done {
            summary.parsed += usize::from(d.parsed);
            summary.failed += usize::from(d.failed);
            summary.internal_errors += usize::from(d.internal);
            summary.classified += usize::from(!d.failed);
            match (d.out, &mut sink) {
                (Rendered::Filtered, _) => summary.filtered += 1,
                (Rendered::Line(s), Sink::Jsonl(w)) => writeln!(w, "{s}")?,
                (Rendered::Row(r), Sink::Csv(w)) => w.serialize(r)?,
                _ => unreachable!("record kind matches the sink format"),
            }
        }
    }
    match sink {
        Sink::Jsonl(mut w) => w.flush()?,
        Sink::Csv(mut w) => w.flush()?,
    }
    Ok(summary)
}

/// Runs a scan between the configured paths (stdin / stdout when unset).
pub fn run_scan(cfg: &ScanConfig) -> Result<Summary, ScanError> {
    let input: Box<dyn BufRead> = match &cfg.input {
        Some(p) => Box::new(BufReader::new(File::open(p)?)),
        None => Box::new(io::stdin().lock()),
    };
    match &cfg.output {
        Some(p) => scan(cfg, input, BufWriter::new(File::create(p)?)),
        None => scan(cfg, input, BufWriter::new(io::stdout().lock())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_shapes() {
        assert_eq!(split_line("Bw"), (None, "Bw"));
        assert_eq!(split_line("K2 Bw\n"), (Some("K2"), "Bw"));
        assert_eq!(split_line("a b c"), (None, "a b c"));
    }

    #[test]
    fn blank_and_comment_lines_are_skipped() {
        let input = "# header\n\nBw\n";
        let mut out = Vec::new();
        let s = scan(&ScanConfig::default(), input.as_bytes(), &mut out).unwrap();
        assert_eq!(s.classified, 1);
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), 1);
    }

    #[test]
    fn zero_jobs_is_a_config_error() {
        let cfg = ScanConfig {
            jobs: 0,
            ..ScanConfig::default()
        };
        assert!(matches!(scan(&cfg, &b""[..], Vec::new()), Err(ScanError::Config(_))));
    }
}
