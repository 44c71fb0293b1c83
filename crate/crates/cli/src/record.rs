//! JSONL and CSV record layouts.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use adrg::classify::{BoundRow, Diagnostics as CoreDiagnostics, SpectralExcess, SpectrumEntry};
use adrg::{ClassificationReport, Tolerances};
use serde::Serialize;

/// Optional report sections. Identity fields (`name`, `n`, `degree`, `D`,
/// `d`, `girth`, `bipartite`) are always emitted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Section {
    Spectrum,
    Punctual,
    Regularity,
    Intersection,
    Bounds,
    Diagnostics,
    Tolerances,
}

impl Section {
    pub const ALL: [Section; 7] = [
        Section::Spectrum,
        Section::Punctual,
        Section::Regularity,
        Section::Intersection,
        Section::Bounds,
        Section::Diagnostics,
        Section::Tolerances,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Section::Spectrum => "spectrum",
            Section::Punctual => "punctual",
            Section::Regularity => "regularity",
            Section::Intersection => "intersection",
            Section::Bounds => "bounds",
            Section::Diagnostics => "diagnostics",
            Section::Tolerances => "tolerances",
        }
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Section {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Section::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| {
                let names: Vec<&str> = Section::ALL.iter().map(|x| x.name()).collect();
                format!("unknown section {s:?} (expected one of {})", names.join(", "))
            })
    }
}

/// A set of sections, parsed from a comma-separated list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sections(Vec<Section>);

impl Sections {
    pub fn all() -> Self {
        Sections(Section::ALL.to_vec())
    }

    pub fn contains(&self, s: Section) -> bool {
        self.0.contains(&s)
    }
}

impl Default for Sections {
    fn default() -> Self {
        Sections::all()
    }
}

impl FromStr for Sections {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "all" {
            return Ok(Sections::all());
        }
        let mut v = s
            .split(',')
            .filter(|x| !x.trim().is_empty())
            .map(str::parse)
            .collect::<Result<Vec<Section>, _>>()?;
        v.sort();
        v.dedup();
        Ok(Sections(v))
    }
}

#[derive(Debug, Serialize)]
pub struct AvgDeg {
    pub exact: String,
    pub value: f64,
}

#[derive(Debug, Serialize)]
pub struct BoundRecord {
    pub h: usize,
    pub avg_deg: AvgDeg,
    #[serde(rename = "boundA")]
    pub bound_a: f64,
    #[serde(rename = "boundB")]
    pub bound_b: f64,
    #[serde(rename = "eqA")]
    pub eq_a: bool,
    #[serde(rename = "eqB")]
    pub eq_b: bool,
}

impl From<&BoundRow> for BoundRecord {
    fn from(r: &BoundRow) -> Self {
        BoundRecord {
            h: r.h,
            avg_deg: AvgDeg {
                exact: format!("{}/{}", r.avg_deg.numer(), r.avg_deg.denom()),
                value: r.avg_deg_value,
            },
            bound_a: r.bound_a,
            bound_b: r.bound_b,
            eq_a: r.eq_a,
            eq_b: r.eq_b,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct WellDefined {
    pub through: Option<usize>,
    pub c: Vec<Option<Vec<u32>>>,
    pub a: Vec<Option<Vec<u32>>>,
    pub b: Vec<Option<Vec<u32>>>,
}

#[derive(Debug, Serialize)]
pub struct DiagnosticsRecord {
    #[serde(flatten)]
    pub residuals: CoreDiagnostics,
    pub spectrally_max_diameter: bool,
    pub m_pdr_algebraic: usize,
    pub m_wr_hadamard: Option<usize>,
    pub distance_regular_algebraic: bool,
    pub spectral_excess: SpectralExcessRecord,
    pub provenance: BTreeMap<&'static str, String>,
}

#[derive(Debug, Serialize)]
pub struct SpectralExcessRecord {
    pub delta_d: AvgDeg,
    pub p_d_lambda0: f64,
    pub p_d_lambda0_closed_form: f64,
    pub equal: bool,
}

impl From<&SpectralExcess> for SpectralExcessRecord {
    fn from(s: &SpectralExcess) -> Self {
        SpectralExcessRecord {
            delta_d: AvgDeg {
                exact: format!("{}/{}", s.delta_d.numer(), s.delta_d.denom()),
                value: s.delta_d_value,
            },
            p_d_lambda0: s.polynomial,
            p_d_lambda0_closed_form: s.closed_form,
            equal: s.equal,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SpectrumPart {
    pub spectrum: Vec<SpectrumEntry>,
}

#[derive(Debug, Serialize)]
pub struct PunctualPart {
    pub punctual_dp: Vec<bool>,
    pub punctual_dr: Vec<bool>,
    pub punctual_wr: Vec<bool>,
}

#[derive(Debug, Serialize)]
pub struct RegularityPart {
    pub m_pdr: usize,
    pub m_wr: Option<usize>,
    pub lm_frontier: Vec<(usize, usize)>,
    pub distance_polynomial: bool,
    pub distance_regular: bool,
}

#[derive(Debug, Serialize)]
pub struct IntersectionPart {
    pub c: Vec<Option<u32>>,
    pub a: Vec<Option<u32>>,
    pub b: Vec<Option<u32>>,
    pub well_defined: WellDefined,
}

#[derive(Debug, Serialize)]
pub struct BoundsPart {
    pub bounds: Vec<BoundRecord>,
}

#[derive(Debug, Serialize)]
pub struct DiagnosticsPart {
    pub diagnostics: DiagnosticsRecord,
}

#[derive(Debug, Serialize)]
pub struct TolerancesPart {
    pub tolerances: Tolerances,
}

/// One JSONL line for a classified graph.
#[derive(Debug, Serialize)]
pub struct Record {
    pub name: Option<String>,
    pub n: usize,
    pub degree: usize,
    #[serde(rename = "D")]
    pub diameter: usize,
    pub d: usize,
    pub girth: Option<usize>,
    pub bipartite: bool,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumPart>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub punctual: Option<PunctualPart>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub regularity: Option<RegularityPart>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub intersection: Option<IntersectionPart>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<BoundsPart>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub diagnostics: Option<DiagnosticsPart>,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<TolerancesPart>,
}

fn float(tol: f64) -> String {
    format!("float(tol={tol:e})")
}

/// How each emitted numeric or derived field was obtained.
pub fn provenance(t: &Tolerances) -> BTreeMap<&'static str, String> {
    let exact = || "exact".to_string();
    BTreeMap::from([
        ("n", exact()),
        ("degree", exact()),
        ("D", exact()),
        ("d", float(t.eig_group)),
        ("girth", exact()),
        ("bipartite", exact()),
        ("spectrum.value", float(t.eig_group)),
        ("spectrum.mult", float(t.eig_group)),
        ("punctual_dp", float(t.mat)),
        ("punctual_dr", float(t.mat)),
        ("punctual_wr", exact()),
        ("m_pdr", exact()),
        ("m_wr", exact()),
        ("lm_frontier", exact()),
        ("distance_polynomial", float(t.mat)),
        ("distance_regular", exact()),
        ("c", exact()),
        ("a", exact()),
        ("b", exact()),
        ("well_defined", exact()),
        ("bounds.avg_deg.exact", exact()),
        ("bounds.avg_deg.value", float(f64::EPSILON)),
        ("bounds.boundA", float(t.bound)),
        ("bounds.boundB", float(t.bound)),
        ("bounds.eqA", float(t.bound)),
        ("bounds.eqB", float(t.bound)),
        ("diagnostics.spectral_excess.delta_d.exact", exact()),
        ("diagnostics.spectral_excess.p_d_lambda0", float(t.mat)),
        ("diagnostics.spectral_excess.equal", float(t.bound)),
        ("diagnostics.residuals", float(t.mat)),
    ])
}

impl Record {
    pub fn new(r: ClassificationReport, sections: &Sections) -> Record {
        let on = |s| sections.contains(s);
        let diagnostics = on(Section::Diagnostics).then(|| DiagnosticsPart {
            diagnostics: DiagnosticsRecord {
                residuals: r.diagnostics.clone(),
                spectrally_max_diameter: r.spectrally_max_diameter,
                m_pdr_algebraic: r.m_pdr_algebraic,
                m_wr_hadamard: r.m_wr_hadamard,
                distance_regular_algebraic: r.distance_regular_algebraic,
                spectral_excess: (&r.spectral_excess).into(),
                provenance: provenance(&r.tolerances),
            },
        });
        Record {
            spectrum: on(Section::Spectrum).then(|| SpectrumPart {
                spectrum: r.spectrum.clone(),
            }),
            punctual: on(Section::Punctual).then(|| PunctualPart {
                punctual_dp: r.punctual_dp.clone(),
                punctual_dr: r.punctual_dr.clone(),
                punctual_wr: r.punctual_wr.clone(),
            }),
            regularity: on(Section::Regularity).then(|| RegularityPart {
                m_pdr: r.m_pdr,
                m_wr: r.m_wr,
                lm_frontier: r.lm_frontier.clone(),
                distance_polynomial: r.distance_polynomial,
                distance_regular: r.distance_regular,
            }),
            intersection: on(Section::Intersection).then(|| IntersectionPart {
                c: r.intersection.c.clone(),
                a: r.intersection.a.clone(),
                b: r.intersection.b.clone(),
                well_defined: WellDefined {
                    through: r.intersection.well_defined_through,
                    c: r.intersection.c_spread.clone(),
                    a: r.intersection.a_spread.clone(),
                    b: r.intersection.b_spread.clone(),
                },
            }),
            bounds: on(Section::Bounds).then(|| BoundsPart {
                bounds: r.bounds.iter().map(BoundRecord::from).collect(),
            }),
            diagnostics,
            tolerances: on(Section::Tolerances).then_some(TolerancesPart {
                tolerances: r.tolerances,
            }),
            name: r.name,
            n: r.n,
            degree: r.degree,
            diameter: r.diameter,
            d: r.d,
            girth: r.girth,
            bipartite: r.bipartite,
        }
    }
}

/// Kinds of per-line failure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Parse,
    Validation,
    Spectral,
    Predistance,
    Classify,
}

impl ErrorKind {
    /// Parse and validation failures reject the input; the rest are internal.
    pub fn is_internal(self) -> bool {
        !matches!(self, ErrorKind::Parse | ErrorKind::Validation)
    }
}

impl From<&adrg::Error> for ErrorKind {
    fn from(e: &adrg::Error) -> Self {
        match e {
            adrg::Error::Parse(_) => ErrorKind::Parse,
            adrg::Error::Validation(_) => ErrorKind::Validation,
            adrg::Error::Spectral(_) => ErrorKind::Spectral,
            adrg::Error::Predistance(_) => ErrorKind::Predistance,
            adrg::Error::Classify(_) => ErrorKind::Classify,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ErrorDetail {
    pub kind: ErrorKind,
    pub message: String,
}

/// One JSONL line for an input line that produced no report.
#[derive(Debug, Serialize)]
pub struct ErrorRecord {
    pub line: usize,
    pub name: Option<String>,
    pub input: String,
    pub error: ErrorDetail,
}

/// Flattened CSV row.
#[derive(Debug, Serialize)]
pub struct CsvRow {
    pub line: usize,
    pub name: Option<String>,
    pub n: Option<usize>,
    pub degree: Option<usize>,
    #[serde(rename = "D")]
    pub diameter: Option<usize>,
    pub d: Option<usize>,
    pub girth: Option<usize>,
    pub bipartite: Option<bool>,
    pub m_pdr: Option<usize>,
    pub m_wr: Option<usize>,
    pub distance_polynomial: Option<bool>,
    pub distance_regular: Option<bool>,
    pub spectrally_max_diameter: Option<bool>,
    pub spectral_excess_equal: Option<bool>,
    pub invariant_violations: Option<usize>,
    pub cross_checks: Option<usize>,
    pub error: Option<String>,
}

impl CsvRow {
    pub fn report(line: usize, r: &ClassificationReport) -> CsvRow {
        CsvRow {
            line,
            name: r.name.clone(),
            n: Some(r.n),
            degree: Some(r.degree),
            diameter: Some(r.diameter),
            d: Some(r.d),
            girth: r.girth,
            bipartite: Some(r.bipartite),
            m_pdr: Some(r.m_pdr),
            m_wr: r.m_wr,
            distance_polynomial: Some(r.distance_polynomial),
            distance_regular: Some(r.distance_regular),
            spectrally_max_diameter: Some(r.spectrally_max_diameter),
            spectral_excess_equal: Some(r.spectral_excess.equal),
            invariant_violations: Some(r.diagnostics.invariant_violations.len()),
            cross_checks: Some(r.diagnostics.cross_checks.len()),
            error: None,
        }
    }

    pub fn error(e: &ErrorRecord) -> CsvRow {
        CsvRow {
            line: e.line,
            name: e.name.clone(),
            n: None,
            degree: None,
            diameter: None,
            d: None,
            girth: None,
            bipartite: None,
            m_pdr: None,
            m_wr: None,
            distance_polynomial: None,
            distance_regular: None,
            spectrally_max_diameter: None,
            spectral_excess_equal: None,
            invariant_violations: None,
            cross_checks: None,
            error: Some(e.error.message.clone()),
        }
    }
}
