//! Human-readable single-graph report.

use std::fmt::Write;

use adrg::ClassificationReport;

use crate::scan::{process_line, Outcome};
use crate::record::ErrorRecord;

fn num(x: f64) -> String {
    if (x - x.round()).abs() <= 1e-9 * x.abs().max(1.0) {
        format!("{}", x.round() as i64)
    } else {
        format!("{x:.6}")
    }
}

fn indices(flags: &[bool], want: bool) -> String {
    let v: Vec<String> = flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f == want)
        .map(|(h, _)| h.to_string())
        .collect();
    if v.is_empty() {
        "-".into()
    } else {
        v.join(" ")
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or_else(|| "-".into(), |v| v.to_string())
}

/// Renders `r` as plain text.
pub fn render_report(r: &ClassificationReport) -> String {
    let mut s = String::new();
    let w = &mut s;
    let name = r.name.as_deref().unwrap_or("(unnamed)");
    writeln!(w, "graph: {name}  n={}  degree={}", r.n, r.degree).unwrap();
    writeln!(w, "girth: {}  bipartite: {}", opt(r.girth), r.bipartite).unwrap();
    let spec: Vec<String> = r.spectrum.iter().map(|e| format!("{}^{}", num(e.value), e.mult)).collect();
    writeln!(w, "spectrum: {}", spec.join(" ")).unwrap();
    let dd = if r.diameter == r.d {
        format!("D=d={}", r.d)
    } else {
        format!("D={} d={}", r.diameter, r.d)
    };
    writeln!(w, "distance-regular: {}; {dd}", r.distance_regular).unwrap();
    let ex = &r.spectral_excess;
    let exact = if *ex.delta_d.denom() == 1 {
        ex.delta_d.numer().to_string()
    } else {
        format!("{}/{}", ex.delta_d.numer(), ex.delta_d.denom())
    };
    let rel = if ex.equal { "=" } else { "<" };
    writeln!(w, "spectral excess: {exact} {rel} {}", num(ex.polynomial)).unwrap();
    writeln!(w, "distance-polynomial: {}", r.distance_polynomial).unwrap();
    writeln!(w, "m_pdr: {}  m_wr: {}", r.m_pdr, opt(r.m_wr)).unwrap();
    for (label, flags) in [("DP", &r.punctual_dp), ("DR", &r.punctual_dr), ("WR", &r.punctual_wr)] {
        writeln!(w, "punctual {label}: {}  failing: {}", indices(flags, true), indices(flags, false)).unwrap();
    }

    let seq = |v: &[Option<u32>]| v.iter().map(|x| opt(*x)).collect::<Vec<_>>().join(" ");
    writeln!(w, "c: {}", seq(&r.intersection.c)).unwrap();
    writeln!(w, "a: {}", seq(&r.intersection.a)).unwrap();
    writeln!(w, "b: {}", seq(&r.intersection.b)).unwrap();

    writeln!(w, "bounds:").unwrap();
    writeln!(w, "{:>4} {:>14} {:>12} {:>12} {:>4} {:>4}", "h", "avg_deg", "boundA", "boundB", "eqA", "eqB").unwrap();
    for b in &r.bounds {
        let avg = format!("{}/{}", b.avg_deg.numer(), b.avg_deg.denom());
        let mark = |e: bool| if e { "=" } else { "" };
        writeln!(
            w,
            "{:>4} {:>14} {:>12.6} {:>12.6} {:>4} {:>4}",
            b.h,
            avg,
            b.bound_a,
            b.bound_b,
            mark(b.eq_a),
            mark(b.eq_b)
        )
        .unwrap();
    }

    let frontier: Vec<String> = r.lm_frontier.iter().map(|(l, m)| format!("({l},{m})")).collect();
    writeln!(w, "(l,m) frontier: {}", if frontier.is_empty() { "-".into() } else { frontier.join(" ") }).unwrap();
    writeln!(w, "{}", staircase(r)).unwrap();

    let diag = &r.diagnostics;
    writeln!(
        w,
        "diagnostics: idempotents {:.1e}, orthogonality {:.1e}, recurrence {:.1e}",
        diag.idempotent_residual, diag.orthogonality_offdiagonal, diag.recurrence_residual
    )
    .unwrap();
    for c in &diag.cross_checks {
        writeln!(w, "cross-check {}: {}", c.check, c.detail).unwrap();
    }
    for v in &diag.invariant_violations {
        writeln!(w, "invariant violated: {v}").unwrap();
    }
    s
}

/// Grid of `(l, m)` pairs: rows `m = D..0`, columns `l = 0..d`, `#` where
/// the graph is `(l, m)`-walk-regular and `.` where it is not.
pub fn staircase(r: &ClassificationReport) -> String {
    let ell = |m: usize| r.lm_frontier.iter().find(|(_, mm)| *mm == m).map(|(l, _)| *l);
    let mut s = String::new();
    for m in (0..=r.diameter).rev() {
        let _ = write!(s, "{m:>3} |");
        for l in 0..=r.d {
            let c = if l < m {
                ' '
            } else if ell(m).is_some_and(|e| l <= e) {
                '#'
            } else {
                '.'
            };
            s.push(' ');
            s.push(c);
        }
        s.push('\n');
    }
    let _ = write!(s, "    +");
    for _ in 0..=r.d {
        s.push_str("--");
    }
    s.push('\n');
    let _ = write!(s, "     ");
    for l in 0..=r.d {
        let _ = write!(s, "{:>2}", l % 10);
    }
    s.push_str("   (l)");
    s
}

/// Classifies one `[NAME] GRAPH6` line and renders it.
pub fn report_single(line: &str, tol: &adrg::Tolerances) -> Result<String, ErrorRecord> {
    match process_line(1, line, tol).1 {
        Outcome::Report(r) => Ok(render_report(&r)),
        Outcome::Error(e) => Err(e),
    }
}
