//! Regularity predicates, distance-degree bounds and the per-graph report.
//!
//! Predicates with both a combinatorial and an algebraic characterization
//! are evaluated both ways. The exact combinatorial answer is the one
//! reported; disagreements are recorded as [`CrossCheck`] entries.

mod intersection;
mod invariants;
mod stats;

pub use intersection::{IntersectionAnalysis, IntersectionValue};
pub use stats::ClassRange;

use nalgebra::DMatrix;
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{ClassifyError, Error};
use crate::graph::{DistanceStructure, Graph, ValidatedGraph};
use crate::predistance::{build_predistance, multiplicity_from_pd, spectral_excess_closed_form, PredistanceSystem};
use crate::scalar::Real;
use crate::spectral::{walks_from_multiplicities, LagrangeBasis, MultiplicityTable, Spectrum, WalkTable};
use crate::tolerance::Tolerances;
use stats::ClassStats;

/// Largest index of the full intersection tensor kept by [`Analysis`].
pub const TENSOR_LIMIT: usize = 10;

/// Walk tables keep every entry while `n^2 (d + 1)` stays below this.
const FULL_WALK_BUDGET: usize = 1 << 22;

fn ratio_string<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

fn ratio_f64(r: &Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

fn rel_eq(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs()).max(f64::MIN_POSITIVE)
}

/// Outcome of the distance-polynomial test at one distance.
#[derive(Debug, Clone, Serialize)]
pub struct PunctualDp {
    pub holds: bool,
    /// `max |q_h(A) - A_h|`.
    pub residual: f64,
    /// `q_h(lambda_0)`, the degree of the distance-`h` graph when `holds`.
    pub degree: Option<f64>,
    pub distance_graph_regular: bool,
}

/// Walk-count and idempotent-entry verdicts of punctual walk-regularity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PunctualWr {
    /// Exact walk counts constant on the class for lengths `0..d`.
    pub walks: bool,
    /// Every `m_uv(lambda_i)` constant on the class.
    pub spectral: bool,
}

/// A quantity computed by two independent methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Dual<X> {
    pub combinatorial: X,
    pub algebraic: X,
}

impl<X: PartialEq> Dual<X> {
    pub fn agree(&self) -> bool {
        self.combinatorial == self.algebraic
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundRow {
    pub h: usize,
    #[serde(serialize_with = "ratio_string")]
    pub avg_deg: Ratio<u64>,
    pub avg_deg_value: f64,
    pub bound_a: f64,
    pub bound_b: f64,
    pub eq_a: bool,
    pub eq_b: bool,
    /// `avg_deg <= bound_a <= bound_b` within the bound tolerance.
    pub sandwich: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralExcess {
    /// `delta_d`, zero when `d > D`.
    #[serde(serialize_with = "ratio_string")]
    pub delta_d: Ratio<u64>,
    pub delta_d_value: f64,
    /// `p_d(lambda_0)` from the predistance system.
    pub polynomial: f64,
    /// `p_d(lambda_0)` from the spectrum alone.
    pub closed_form: f64,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Orthogonality {
    pub h: usize,
    /// `<p_h(A), A_i>` for `i < h`.
    pub below: Vec<f64>,
    /// `<p_i(A), A_h>` for `h < i <= d`.
    pub above: Vec<f64>,
    pub holds: bool,
}

/// A disagreement between two characterizations of the same property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub check: String,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntersectionSummary {
    pub c: Vec<Option<u32>>,
    pub a: Vec<Option<u32>>,
    pub b: Vec<Option<u32>>,
    pub c_spread: Vec<Option<Vec<u32>>>,
    pub a_spread: Vec<Option<Vec<u32>>>,
    pub b_spread: Vec<Option<Vec<u32>>>,
    /// Largest `k` with `c_1..c_k`, `a_0..a_k`, `b_0..b_k` all well defined.
    pub well_defined_through: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PredistanceSummary {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub gamma: Vec<f64>,
    pub at_lambda0: Vec<f64>,
    pub nonpositive_beta: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Diagnostics {
    pub idempotent_residual: f64,
    pub idempotent_products_checked: bool,
    pub eigenvector_orthonormality: f64,
    pub lagrange_residual: Option<f64>,
    pub min_eigenvalue_gap: Option<f64>,
    pub orthogonality_offdiagonal: f64,
    pub orthogonality_diagonal: f64,
    pub recurrence_residual: f64,
    pub row_sum_residual: f64,
    pub omega_d_residual: f64,
    pub multiplicity_recovery: f64,
    pub walk_round_trip: f64,
    pub walk_reconstruction: f64,
    pub cross_checks: Vec<CrossCheck>,
    pub invariant_violations: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub value: f64,
    pub mult: usize,
}

/// Everything computed for one graph.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub name: Option<String>,
    pub n: usize,
    pub degree: usize,
    pub diameter: usize,
    pub d: usize,
    pub girth: Option<usize>,
    pub bipartite: bool,
    pub spectrally_max_diameter: bool,
    pub spectrum: Vec<SpectrumEntry>,
    pub punctual_dp: Vec<bool>,
    pub punctual_dr: Vec<bool>,
    pub punctual_wr: Vec<bool>,
    pub punctual_sr: Vec<bool>,
    pub m_pdr: usize,
    pub m_pdr_algebraic: usize,
    pub m_wr: Option<usize>,
    pub m_wr_hadamard: Option<usize>,
    pub lm_frontier: Vec<(usize, usize)>,
    pub distance_polynomial: bool,
    pub distance_regular: bool,
    pub distance_regular_algebraic: bool,
    pub intersection: IntersectionSummary,
    pub bounds: Vec<BoundRow>,
    pub spectral_excess: SpectralExcess,
    pub orthogonality: Vec<Orthogonality>,
    pub predistance: PredistanceSummary,
    pub diagnostics: Diagnostics,
    pub tolerances: Tolerances,
}

/// All intermediate structures for one graph, with the predicates as methods.
#[derive(Debug, Clone)]
pub struct Analysis<T: Real> {
    pub graph: ValidatedGraph,
    pub distances: DistanceStructure,
    pub spectrum: Spectrum<T>,
    pub multiplicities: MultiplicityTable<T>,
    pub walks: WalkTable,
    pub predistance: PredistanceSystem<T>,
    pub intersection: IntersectionAnalysis,
    pub tolerances: Tolerances,
    stats: ClassStats,
}

impl<T: Real> Analysis<T> {
    pub fn new(graph: ValidatedGraph, tolerances: Tolerances) -> Result<Analysis<T>, Error> {
        let distances = DistanceStructure::new(&graph);
        let spectrum = Spectrum::<T>::new(&graph, tolerances.eig_group)?;
        let multiplicities = MultiplicityTable::new(&spectrum, &distances);
        let n = graph.order();
        let d = spectrum.d();
        let walks = if n * n * (d + 1) <= FULL_WALK_BUDGET {
            WalkTable::new(&graph, &distances, d)
        } else {
            WalkTable::with_rows(&graph, &distances, d, &[0])
        };
        let predistance = build_predistance(&spectrum)?;
        let partial = IntersectionAnalysis::new(&graph, &distances, 0).partial_regularity();
        let intersection = IntersectionAnalysis::new(&graph, &distances, partial.min(TENSOR_LIMIT));

        let diameter = distances.diameter();
        let mut values = DMatrix::<T>::zeros(d + 1, d + 2 + diameter);
        for i in 0..=d {
            for j in 0..=d {
                values[(j, i)] = predistance.value(i, j);
            }
        }
        for h in 0..=diameter {
            let size = T::of_usize(distances.class_size(h));
            for j in 0..=d {
                values[(j, d + 1 + h)] =
                    size * multiplicities.average(h, j) / T::of_usize(spectrum.multiplicity(j));
            }
        }
        let stats = ClassStats::new(&spectrum, &distances, &values);
        Ok(Analysis {
            graph,
            distances,
            spectrum,
            multiplicities,
            walks,
            predistance,
            intersection,
            tolerances,
            stats,
        })
    }

    pub fn d(&self) -> usize {
        self.spectrum.d()
    }

    pub fn diameter(&self) -> usize {
        self.distances.diameter()
    }

    fn check_h(&self, h: usize) -> Result<(), ClassifyError> {
        if h > self.diameter() {
            Err(ClassifyError::EmptyDistanceClass {
                h,
                diameter: self.diameter(),
            })
        } else {
            Ok(())
        }
    }

    fn p_range(&self, i: usize, h: usize) -> &ClassRange {
        self.stats.range(i, h)
    }

    fn q_range(&self, h: usize, k: usize) -> &ClassRange {
        self.stats.range(self.d() + 1 + h, k)
    }

    /// Values `q_h(lambda_i)` of the projection of `A_h` onto the adjacency algebra.
    pub fn q_values(&self, h: usize) -> Vec<T> {
        let size = T::of_usize(self.distances.class_size(h));
        (0..=self.d())
            .map(|i| size * self.multiplicities.average(h, i) / T::of_usize(self.spectrum.multiplicity(i)))
            .collect()
    }

    /// `max_k max |f(A) - [k == h]|` over the classes `k`.
    fn indicator_residual(&self, range: impl Fn(usize) -> ClassRange, h: usize) -> f64 {
        (0..=self.diameter())
            .map(|k| range(k).deviation(if k == h { 1.0 } else { 0.0 }))
            .fold(0.0, f64::max)
    }

    pub fn punctually_distance_polynomial(&self, h: usize) -> Result<PunctualDp, ClassifyError> {
        self.check_h(h)?;
        let residual = self.indicator_residual(|k| *self.q_range(h, k), h);
        let holds = residual <= self.tolerances.mat;
        Ok(PunctualDp {
            holds,
            residual,
            degree: holds.then(|| self.q_values(h)[0].f64()),
            distance_graph_regular: self.distances.distance_graph_is_regular(h),
        })
    }

    /// `max |p_h(A) - A_h|`.
    pub fn pdr_residual(&self, h: usize) -> Result<f64, ClassifyError> {
        self.check_h(h)?;
        Ok(self.indicator_residual(|k| *self.p_range(h, k), h))
    }

    pub fn punctually_distance_regular(&self, h: usize) -> Result<bool, ClassifyError> {
        Ok(self.pdr_residual(h)? <= self.tolerances.mat)
    }

    /// Whether `p_h(A)` lies in the distance algebra: constant on every class.
    pub fn predistance_in_distance_algebra(&self, h: usize) -> bool {
        let scale = self.predistance.at_lambda0(h).f64().max(1.0);
        (0..=self.diameter()).all(|k| self.p_range(h, k).spread() <= self.tolerances.mat * scale)
    }

    /// Largest `m` with `m`-partial distance-regularity, by well-defined
    /// intersection numbers and by `p_h(A) = A_h` for `h <= m`.
    pub fn partially_distance_regular(&self) -> Dual<usize> {
        let algebraic = (0..=self.diameter())
            .take_while(|&h| self.punctually_distance_regular(h).unwrap())
            .last()
            .unwrap_or(0);
        Dual {
            combinatorial: self.intersection.partial_regularity(),
            algebraic,
        }
    }

    pub fn punctually_walk_regular(&self, h: usize) -> Result<PunctualWr, ClassifyError> {
        self.check_h(h)?;
        Ok(PunctualWr {
            walks: self.walks.constant_prefix(h) >= self.d(),
            spectral: self.multiplicities.constant_on_class(h, self.tolerances.mat),
        })
    }

    /// Scale-free Hadamard deviation `max_{class j} |p_i(A) - delta_ij| / max(1, p_i(lambda_0))`.
    pub fn hadamard_deviation(&self, i: usize, j: usize) -> f64 {
        let target = if i == j { 1.0 } else { 0.0 };
        let scale = self.predistance.at_lambda0(i).f64().max(1.0);
        self.p_range(i, j).deviation(target) / scale
    }

    fn hadamard(&self, l: usize, m: usize) -> bool {
        (0..=l).all(|i| (0..=m).all(|j| self.hadamard_deviation(i, j) <= self.tolerances.mat))
    }

    /// Largest `m` with `m`-walk-regularity; `None` when the graph is not walk-regular.
    pub fn walk_regular_m(&self) -> Dual<Option<usize>> {
        let d = self.d();
        let combinatorial = (0..=self.diameter())
            .take_while(|&h| self.walks.constant_prefix(h) >= d)
            .last();
        let algebraic = (0..=self.diameter()).take_while(|&m| self.hadamard(d, m)).last();
        Dual {
            combinatorial,
            algebraic,
        }
    }

    pub fn lm_walk_regular(&self, l: usize, m: usize) -> Result<Dual<bool>, ClassifyError> {
        let (d, diameter) = (self.d(), self.diameter());
        if m > l || l > d || m > diameter {
            return Err(ClassifyError::InvalidRange { l, m, d, diameter });
        }
        Ok(Dual {
            combinatorial: (0..=m).all(|h| self.walks.constant_prefix(h) > l),
            algebraic: self.hadamard(l, m),
        })
    }

    /// Largest `l` with `(l, m)`-walk-regularity, if any.
    pub fn frontier_ell(&self, m: usize) -> Option<usize> {
        if m > self.diameter() {
            return None;
        }
        let prefix = (0..=m).map(|h| self.walks.constant_prefix(h)).min().unwrap();
        let l = (prefix - 1).min(self.d());
        (l >= m).then_some(l)
    }

    /// The staircase `(l(m), m)` for every `m` where some `l >= m` works.
    pub fn lm_frontier(&self) -> Vec<(usize, usize)> {
        (0..=self.diameter())
            .filter_map(|m| self.frontier_ell(m).map(|l| (l, m)))
            .collect()
    }

    pub fn bounds(&self, h: usize) -> Result<BoundRow, ClassifyError> {
        self.check_h(h)?;
        let n = self.spectrum.order() as f64;
        let avg_deg = self.distances.average_degree(h);
        let delta = ratio_f64(&avg_deg);
        let sum: f64 = (0..=self.d())
            .map(|i| {
                let m = self.multiplicities.average(h, i).f64();
                m * m / self.spectrum.multiplicity(i) as f64
            })
            .sum();
        let bound_a = 1.0 / (n * sum);
        let walks = self.walks.average(h, h).to_f64().unwrap_or(f64::NAN);
        let denom = self.predistance.omega(h).f64() * walks;
        let bound_b = self.predistance.at_lambda0(h).f64() / (denom * denom);
        let tol = self.tolerances.bound;
        Ok(BoundRow {
            h,
            avg_deg,
            avg_deg_value: delta,
            bound_a,
            bound_b,
            eq_a: rel_eq(delta, bound_a, tol),
            eq_b: rel_eq(delta, bound_b, tol),
            sandwich: delta <= bound_a * (1.0 + tol) && bound_a <= bound_b * (1.0 + tol),
        })
    }

    pub fn spectral_excess(&self) -> SpectralExcess {
        let d = self.d();
        let delta_d = if d <= self.diameter() {
            self.distances.average_degree(d)
        } else {
            Ratio::from_integer(0)
        };
        let polynomial = self.predistance.at_lambda0(d).f64();
        let closed_form = spectral_excess_closed_form(&self.spectrum).f64();
        let value = ratio_f64(&delta_d);
        SpectralExcess {
            delta_d,
            delta_d_value: value,
            polynomial,
            closed_form,
            equal: rel_eq(value, polynomial, self.tolerances.bound),
        }
    }

    pub fn orthogonality_conditions(&self, h: usize) -> Result<Orthogonality, ClassifyError> {
        self.check_h(h)?;
        let n = self.spectrum.order() as f64;
        let below: Vec<f64> = (0..h).map(|i| self.p_range(h, i).sum / n).collect();
        let above: Vec<f64> = ((h + 1)..=self.d()).map(|i| self.p_range(i, h).sum / n).collect();
        let tol = self.tolerances.mat * self.predistance.at_lambda0(h).f64().max(1.0);
        let holds = below.iter().chain(&above).all(|x| x.abs() <= tol);
        Ok(Orthogonality {
            h,
            below,
            above,
            holds,
        })
    }

    /// Compares `xi_ij^k` with the combinatorial intersection numbers on every
    /// staircase pair `(l, m)`, for indices up to the stored tensor range.
    fn preintersection_mismatches(&self) -> Vec<CrossCheck> {
        let mut out = Vec::new();
        let limit = self.intersection.max_index();
        for (l, m) in self.lm_frontier() {
            let m = m.min(limit);
            for i in 0..=m {
                for j in 0..=m {
                    for k in 0..=m {
                        let xi = self.predistance.xi(i, j, k).f64();
                        let (expected, what) = if i + j <= l {
                            match self.intersection.value(i, j, k).value() {
                                Some(v) => (f64::from(v), "p"),
                                None => {
                                    out.push(CrossCheck {
                                        check: "preintersection".into(),
                                        detail: format!("p_{i}{j}^{k} not well defined under ({l},{m})-walk-regularity"),
                                    });
                                    continue;
                                }
                            }
                        } else {
                            (ratio_f64(&self.intersection.average(i, j, k)), "average p")
                        };
                        if (xi - expected).abs() > self.tolerances.mat * expected.abs().max(1.0) {
                            out.push(CrossCheck {
                                check: "preintersection".into(),
                                detail: format!("xi_{i}{j}^{k} = {xi} but {what} = {expected} at ({l},{m})"),
                            });
                        }
                    }
                }
            }
        }
        out
    }

    fn cross_checks(&self) -> Vec<CrossCheck> {
        let mut out = Vec::new();
        let mut push = |check: &str, detail: String| {
            out.push(CrossCheck {
                check: check.into(),
                detail,
            })
        };
        let diameter = self.diameter();
        let d = self.d();
        for h in 0..=diameter {
            let wr = self.punctually_walk_regular(h).unwrap();
            if wr.walks != wr.spectral {
                push("punctual_wr", format!("h={h}: walks {} vs idempotents {}", wr.walks, wr.spectral));
            }
            if self.distances.is_bipartite() && d >= 2 {
                let short = self.walks.constant_prefix(h) >= d - 1;
                if short != wr.walks {
                    push("punctual_wr_bipartite", format!("h={h}: lengths <= d-2 give {short}, <= d-1 give {}", wr.walks));
                }
            }
            if wr.walks && !self.walks.constancy(h, d).is_constant() {
                push("punctual_wr_length_d", format!("h={h}: constant below d but not at d"));
            }
            let pdr = self.punctually_distance_regular(h).unwrap();
            let pdp = self.punctually_distance_polynomial(h).unwrap().holds;
            let b = self.bounds(h).unwrap();
            if b.eq_a != pdp {
                push("bound_a", format!("h={h}: equality {} vs distance-polynomial {pdp}", b.eq_a));
            }
            if b.eq_b != pdr {
                push("bound_b", format!("h={h}: equality {} vs distance-regular {pdr}", b.eq_b));
            }
            if !b.sandwich {
                push("sandwich", format!("h={h}: {} <= {} <= {} fails", b.avg_deg_value, b.bound_a, b.bound_b));
            }
            let orth = self.orthogonality_conditions(h).unwrap().holds;
            if orth != pdr {
                push("orthogonality", format!("h={h}: inner products vanish {orth} vs distance-regular {pdr}"));
            }
        }
        let pdr = self.partially_distance_regular();
        if !pdr.agree() {
            push("m_pdr", format!("intersection numbers {} vs polynomials {}", pdr.combinatorial, pdr.algebraic));
        }
        let wr = self.walk_regular_m();
        if !wr.agree() {
            push("m_wr", format!("walk counts {:?} vs Hadamard {:?}", wr.combinatorial, wr.algebraic));
        }
        for (l, m) in self.lm_frontier() {
            if !self.hadamard(l, m) {
                push("lm_frontier", format!("({l},{m}) holds on walks but not by the Hadamard test"));
            }
            if l < d && self.hadamard(l + 1, m) {
                push("lm_frontier", format!("({},{m}) holds by the Hadamard test but not on walks", l + 1));
            }
        }
        let dr_alg = self.distance_regular_algebraic();
        let dr = self.intersection.all_well_defined();
        if dr != dr_alg {
            push("distance_regular", format!("intersection numbers {dr} vs distance algebra {dr_alg}"));
        }
        if self.distances.is_bipartite() != self.spectrum.is_symmetric_about_zero(self.tolerances.mat) {
            push("bipartite", "bipartition and spectral symmetry disagree".into());
        }
        let se = self.spectral_excess();
        if !rel_eq(se.polynomial, se.closed_form, self.tolerances.mat) {
            push("spectral_excess", format!("p_d(lambda_0) = {} vs closed form {}", se.polynomial, se.closed_form));
        }
        if se.equal != dr {
            push("spectral_excess", format!("equality {} vs distance-regular {dr}", se.equal));
        }
        out.extend(self.preintersection_mismatches());
        out
    }

    /// `A_h = p_h(A)` and `p_h(A)` in the distance algebra for every `h <= D`.
    pub fn distance_regular_algebraic(&self) -> bool {
        (0..=self.diameter()).all(|h| {
            self.punctually_distance_regular(h).unwrap() && self.predistance_in_distance_algebra(h)
        })
    }

    fn diagnostics(&self) -> Diagnostics {
        let n = self.spectrum.order();
        let d = self.d();
        let with_products = n <= 128;
        let residuals = self.spectrum.identity_residuals(&self.graph, with_products);
        let lagrange_residual =
            (d <= 12).then(|| self.spectrum.lagrange_residuals(&self.graph).into_iter().fold(0.0, f64::max));
        let (off, diag) = self.predistance.orthogonality_residuals();
        let omega_d = T::of_usize(n) / self.spectrum.pi(0);
        let omega_d_residual = ((self.predistance.omega(d) - omega_d) / omega_d).abs().f64();
        let multiplicity_recovery = match multiplicity_from_pd(&self.predistance, &self.spectrum) {
            Ok(m) => m
                .iter()
                .zip(self.spectrum.multiplicities())
                .map(|(x, &e)| (x.f64() - e as f64).abs())
                .fold(0.0, f64::max),
            Err(_) => f64::INFINITY,
        };

        let basis = LagrangeBasis::new(&self.spectrum);
        let lambda0 = self.spectrum.eigenvalue(0).f64();
        let mut walk_round_trip = 0.0f64;
        let mut walk_reconstruction = 0.0f64;
        for v in 0..n {
            let m: Vec<T> = self.walks.crossed_from_walks(&basis, 0, v);
            for (i, x) in m.iter().enumerate() {
                walk_round_trip = walk_round_trip.max((x.f64() - self.spectrum.crossed(0, v, i).f64()).abs());
            }
            for l in 0..=d {
                let exact = self.walks.get(0, v, l).to_f64().unwrap_or(f64::INFINITY);
                let approx = walks_from_multiplicities(&self.spectrum, 0, v, l).f64();
                walk_reconstruction = walk_reconstruction.max((exact - approx).abs() / lambda0.powi(l as i32));
            }
        }

        Diagnostics {
            idempotent_residual: residuals.worst(),
            idempotent_products_checked: with_products,
            eigenvector_orthonormality: self.spectrum.orthonormality_residual(),
            lagrange_residual,
            min_eigenvalue_gap: self.spectrum.min_gap().is_finite().then(|| self.spectrum.min_gap()),
            orthogonality_offdiagonal: off,
            orthogonality_diagonal: diag,
            recurrence_residual: self.predistance.recurrence_residual(),
            row_sum_residual: self.predistance.row_sum_residual(),
            omega_d_residual,
            multiplicity_recovery,
            walk_round_trip,
            walk_reconstruction,
            cross_checks: self.cross_checks(),
            invariant_violations: self.invariant_violations(),
        }
    }

    fn intersection_summary(&self) -> IntersectionSummary {
        let ia = &self.intersection;
        let diameter = self.diameter();
        let (c, a, b) = ia.sequences();
        let spread = |v: IntersectionValue| match v {
            IntersectionValue::Spread(s) => Some(s),
            IntersectionValue::WellDefined(_) => None,
        };
        let c_spread = (0..=diameter).map(|k| if k == 0 { None } else { spread(ia.c(k)) }).collect();
        let a_spread = (0..=diameter).map(|k| spread(ia.a(k))).collect();
        let b_spread = (0..=diameter).map(|k| if k == diameter { None } else { spread(ia.b(k)) }).collect();
        let through = (0..=diameter)
            .take_while(|&k| {
                (k == 0 || c[k].is_some()) && a[k].is_some() && (k == diameter || b[k].is_some())
            })
            .last();
        IntersectionSummary {
            c,
            a,
            b,
            c_spread,
            a_spread,
            b_spread,
            well_defined_through: through,
        }
    }

    pub fn report(&self) -> ClassificationReport {
        let diameter = self.diameter();
        let d = self.d();
        let hs = 0..=diameter;
        let punctual_dp: Vec<bool> = hs.clone().map(|h| self.punctually_distance_polynomial(h).unwrap().holds).collect();
        let punctual_dr = hs.clone().map(|h| self.punctually_distance_regular(h).unwrap()).collect();
        let wr: Vec<PunctualWr> = hs.clone().map(|h| self.punctually_walk_regular(h).unwrap()).collect();
        let pdr = self.partially_distance_regular();
        let mwr = self.walk_regular_m();
        let ps = &self.predistance;
        let to_f64 = |v: &[T]| v.iter().map(|x| x.f64()).collect::<Vec<_>>();
        ClassificationReport {
            name: self.graph.name().map(str::to_owned),
            n: self.graph.order(),
            degree: self.graph.degree(),
            diameter,
            d,
            girth: self.distances.girth(),
            bipartite: self.distances.is_bipartite(),
            spectrally_max_diameter: diameter == d,
            spectrum: (0..=d)
                .map(|i| SpectrumEntry {
                    value: self.spectrum.eigenvalue(i).f64(),
                    mult: self.spectrum.multiplicity(i),
                })
                .collect(),
            distance_polynomial: punctual_dp.iter().all(|&x| x),
            punctual_dp,
            punctual_dr,
            punctual_wr: wr.iter().map(|w| w.walks).collect(),
            punctual_sr: wr.iter().map(|w| w.spectral).collect(),
            m_pdr: pdr.combinatorial,
            m_pdr_algebraic: pdr.algebraic,
            m_wr: mwr.combinatorial,
            m_wr_hadamard: mwr.algebraic,
            lm_frontier: self.lm_frontier(),
            distance_regular: self.intersection.all_well_defined(),
            distance_regular_algebraic: self.distance_regular_algebraic(),
            intersection: self.intersection_summary(),
            bounds: hs.clone().map(|h| self.bounds(h).unwrap()).collect(),
            spectral_excess: self.spectral_excess(),
            orthogonality: hs.map(|h| self.orthogonality_conditions(h).unwrap()).collect(),
            predistance: PredistanceSummary {
                alpha: to_f64(ps.alpha()),
                beta: to_f64(ps.beta()),
                gamma: to_f64(ps.gammas()),
                at_lambda0: (0..=d).map(|i| ps.at_lambda0(i).f64()).collect(),
                nonpositive_beta: ps.nonpositive_betas(),
            },
            diagnostics: self.diagnostics(),
            tolerances: self.tolerances,
        }
    }
}

/// Validates `g` and classifies it in `f64`.
pub fn classify(g: Graph, cfg: &Tolerances) -> Result<ClassificationReport, Error> {
    classify_as::<f64>(g, cfg)
}

/// Validates `g` and classifies it with scalar type `T`.
pub fn classify_as<T: Real>(g: Graph, cfg: &Tolerances) -> Result<ClassificationReport, Error> {
    let g = g.validate(cfg.max_n)?;
    Ok(Analysis::<T>::new(g, *cfg)?.report())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn analysis(g: Graph) -> Analysis<f64> {
        Analysis::new(g.validate(512).unwrap(), Tolerances::default()).unwrap()
    }

    #[test]
    fn petersen_is_distance_regular() {
        let a = analysis(families::petersen());
        let r = a.report();
        assert!(r.distance_regular && r.distance_regular_algebraic);
        assert_eq!(r.m_wr, Some(2));
        assert_eq!(r.lm_frontier.last(), Some(&(2, 2)));
        let b = a.bounds(2).unwrap();
        assert!(b.eq_b && (b.bound_b - 6.0).abs() < 1e-9);
        let se = a.spectral_excess();
        assert!(se.equal && (se.polynomial - 6.0).abs() < 1e-9);
        assert!(r.diagnostics.cross_checks.is_empty(), "{:?}", r.diagnostics.cross_checks);
        assert!(r.diagnostics.invariant_violations.is_empty(), "{:?}", r.diagnostics.invariant_violations);
        let o = a.orthogonality_conditions(2).unwrap();
        assert!(o.holds && o.below.iter().all(|x| x.abs() < 1e-7));
    }

    #[test]
    fn f026a_punctual_flags() {
        let a = analysis(families::foster_f026a());
        let r = a.report();
        assert_eq!(r.punctual_dr, vec![true, true, true, false, true, false]);
        assert_eq!(r.punctual_dp, r.punctual_dr);
        assert_eq!(r.punctual_wr, vec![true, true, true, false, true, true]);
        assert_eq!(r.m_wr, Some(2));
        assert!(!r.distance_regular);
        assert!(!a.spectral_excess().equal);
        assert!(!a.orthogonality_conditions(3).unwrap().holds);
        assert!(r.diagnostics.cross_checks.is_empty(), "{:?}", r.diagnostics.cross_checks);
        assert!(r.diagnostics.invariant_violations.is_empty(), "{:?}", r.diagnostics.invariant_violations);
    }

    #[test]
    fn trivial_punctual_cases() {
        let a = analysis(families::lcf(14, &[5, -5]));
        let dp0 = a.punctually_distance_polynomial(0).unwrap();
        assert!(dp0.holds && (dp0.degree.unwrap() - 1.0).abs() < 1e-9);
        assert!(a.punctually_distance_regular(1).unwrap());
        assert!(matches!(
            a.punctually_distance_regular(9),
            Err(ClassifyError::EmptyDistanceClass { h: 9, .. })
        ));
        assert!(matches!(a.lm_walk_regular(1, 2), Err(ClassifyError::InvalidRange { .. })));
        assert!(a.frontier_ell(0).unwrap() >= 2);
    }

    #[test]
    fn diameter_two_graph_is_two_punctually_polynomial() {
        // K_{3,3} minus a perfect matching is the 6-cycle; take the 3-prism instead.
        let prism = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]);
        let a = analysis(prism);
        assert_eq!(a.diameter(), 2);
        assert!(a.punctually_distance_polynomial(2).unwrap().holds);
    }

    #[test]
    fn k2_report() {
        let r = classify(families::complete(2), &Tolerances::default()).unwrap();
        assert!(r.distance_regular);
        assert_eq!((r.diameter, r.d), (1, 1));
        assert!(r.spectral_excess.equal);
        assert_eq!(r.lm_frontier, vec![(1, 0), (1, 1)]);
    }

    #[test]
    fn f32_classification_agrees_on_petersen() {
        let r = classify_as::<f32>(families::petersen(), &Tolerances::for_scalar::<f32>()).unwrap();
        assert!(r.distance_regular && r.distance_regular_algebraic);
        assert_eq!(r.m_wr_hadamard, Some(2));
    }
}
