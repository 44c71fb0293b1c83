//! Predistance polynomials of a spectrum.
//!
//! The polynomials are orthogonal for `<p, q> = (1/n) sum_i m_i p(lambda_i) q(lambda_i)`
//! and normalized by `<p_i, p_i> = p_i(lambda_0)`. They are built in the
//! representation by values at the eigenvalues; monomial coefficients are
//! recovered afterwards by Newton interpolation on Leja-ordered nodes and are
//! used only for reporting and Horner cross-checks.

use nalgebra::DMatrix;

use crate::error::PredistanceError;
use crate::graph::{DistanceStructure, ValidatedGraph};
use crate::scalar::Real;
use crate::spectral::{horner, horner_matrix, Spectrum};

/// The system `p_0, ..., p_d` with its recurrence data.
#[derive(Debug, Clone)]
pub struct PredistanceSystem<T: Real> {
    n: usize,
    nodes: Vec<T>,
    weights: Vec<T>,
    values: DMatrix<T>,
    coeffs: Vec<Vec<T>>,
    alpha: Vec<T>,
    beta: Vec<T>,
    gamma: Vec<T>,
    omega: Vec<T>,
}

fn dot<T: Real>(w: &[T], f: &[T], g: &[T]) -> T {
    w.iter()
        .zip(f)
        .zip(g)
        .fold(T::zero(), |acc, ((&w, &a), &b)| acc + w * a * b)
}

/// `<p, q>` for monomial coefficient vectors (constant term first).
pub fn inner_product<T: Real>(s: &Spectrum<T>, p: &[T], q: &[T]) -> Result<T, PredistanceError> {
    let d = s.d();
    for c in [p, q] {
        let degree = c.iter().rposition(|x| *x != T::zero()).unwrap_or(0);
        if degree > d {
            return Err(PredistanceError::DegreeOverflow { degree, d });
        }
    }
    let n = T::of_usize(s.order());
    Ok((0..=d).fold(T::zero(), |acc, i| {
        acc + T::of_usize(s.multiplicity(i)) * s.eval_at(p, i) * s.eval_at(q, i)
    }) / n)
}

/// Leja ordering: start at the node of largest modulus, then repeatedly take
/// the node maximizing the product of distances to those already chosen.
fn leja_order<T: Real>(nodes: &[T]) -> Vec<usize> {
    let m = nodes.len();
    let mut order = Vec::with_capacity(m);
    let mut score: Vec<T> = vec![T::one(); m];
    let first = (0..m)
        .max_by(|&a, &b| nodes[a].abs().partial_cmp(&nodes[b].abs()).unwrap())
        .unwrap();
    order.push(first);
    let mut used = vec![false; m];
    used[first] = true;
    for _ in 1..m {
        let last = nodes[*order.last().unwrap()];
        for j in 0..m {
            score[j] *= (nodes[j] - last).abs();
        }
        let next = (0..m)
            .filter(|&j| !used[j])
            .max_by(|&a, &b| score[a].partial_cmp(&score[b]).unwrap())
            .unwrap();
        used[next] = true;
        order.push(next);
    }
    order
}

/// Monomial coefficients of the interpolant through `(x_k, y_k)`.
fn newton_monomial<T: Real>(x: &[T], y: &[T]) -> Vec<T> {
    let m = x.len();
    let mut dd = y.to_vec();
    for level in 1..m {
        for k in (level..m).rev() {
            dd[k] = (dd[k] - dd[k - 1]) / (x[k] - x[k - level]);
        }
    }
    let mut coeffs = vec![dd[m - 1]];
    for k in (0..m - 1).rev() {
        // coeffs <- coeffs * (X - x_k) + dd_k
        let mut next = vec![T::zero(); coeffs.len() + 1];
        for (j, &c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * x[k];
        }
        next[0] += dd[k];
        coeffs = next;
    }
    coeffs
}

/// Builds `p_0, ..., p_d` by Stieltjes orthogonalization of `x p_i` against
/// the previous polynomials (twice, for stability), then rescaling.
pub fn build_predistance<T: Real>(s: &Spectrum<T>) -> Result<PredistanceSystem<T>, PredistanceError> {
    let d = s.d();
    let n = s.order();
    let nodes = s.eigenvalues().to_vec();
    let weights: Vec<T> = s
        .multiplicities()
        .iter()
        .map(|&m| T::of_usize(m) / T::of_usize(n))
        .collect();

    let mut polys: Vec<Vec<T>> = vec![vec![T::one(); d + 1]];
    let mut norms: Vec<T> = vec![T::one()];
    for i in 0..d {
        let mut q: Vec<T> = polys[i].iter().zip(&nodes).map(|(&p, &x)| p * x).collect();
        for _ in 0..2 {
            for (p, &nrm) in polys.iter().zip(&norms) {
                let c = dot(&weights, &q, p) / nrm;
                for (qj, &pj) in q.iter_mut().zip(p) {
                    *qj -= c * pj;
                }
            }
        }
        let at0 = q[0];
        let scale = q.iter().fold(T::zero(), |m, x| m.max(x.abs()));
        if !(at0.f64() > 1e-12 * scale.f64()) {
            return Err(PredistanceError::NormalizationDegenerate {
                index: i + 1,
                lambda0: nodes[0].f64(),
                value: at0.f64(),
            });
        }
        let c = at0 / dot(&weights, &q, &q);
        let p: Vec<T> = q.into_iter().map(|x| x * c).collect();
        norms.push(p[0]);
        polys.push(p);
    }

    let xp: Vec<Vec<T>> = polys
        .iter()
        .map(|p| p.iter().zip(&nodes).map(|(&a, &x)| a * x).collect())
        .collect();
    let alpha: Vec<T> = (0..=d)
        .map(|i| dot(&weights, &xp[i], &polys[i]) / norms[i])
        .collect();
    let beta: Vec<T> = (0..d)
        .map(|k| dot(&weights, &xp[k + 1], &polys[k]) / norms[k])
        .collect();
    let mut gamma = vec![T::zero(); d + 1];
    for k in 1..=d {
        gamma[k] = dot(&weights, &xp[k - 1], &polys[k]) / norms[k];
        if !(gamma[k].f64() > 1e-9) {
            return Err(PredistanceError::GammaNotPositive {
                index: k,
                value: gamma[k].f64(),
            });
        }
    }
    let mut omega = vec![T::one(); d + 1];
    for k in 1..=d {
        omega[k] = omega[k - 1] / gamma[k];
    }

    let order = leja_order(&nodes);
    let coeffs = (0..=d)
        .map(|i| {
            let x: Vec<T> = order[..=i].iter().map(|&j| nodes[j]).collect();
            let y: Vec<T> = order[..=i].iter().map(|&j| polys[i][j]).collect();
            newton_monomial(&x, &y)
        })
        .collect();

    let values = DMatrix::from_fn(d + 1, d + 1, |i, j| polys[i][j]);
    Ok(PredistanceSystem {
        n,
        nodes,
        weights,
        values,
        coeffs,
        alpha,
        beta,
        gamma,
        omega,
    })
}

impl<T: Real> PredistanceSystem<T> {
    pub fn d(&self) -> usize {
        self.nodes.len() - 1
    }

    /// `p_i(lambda_j)`.
    pub fn value(&self, i: usize, j: usize) -> T {
        self.values[(i, j)]
    }

    /// The table `p_i(lambda_j)`, rows indexed by `i`.
    pub fn values(&self) -> &DMatrix<T> {
        &self.values
    }

    /// `(p_i(lambda_0), ..., p_i(lambda_d))`.
    pub fn values_of(&self, i: usize) -> Vec<T> {
        self.values.row(i).iter().copied().collect()
    }

    /// `p_i(lambda_0)`.
    pub fn at_lambda0(&self, i: usize) -> T {
        self.values[(i, 0)]
    }

    /// Monomial coefficients of `p_i`, constant term first.
    pub fn coefficients(&self, i: usize) -> &[T] {
        &self.coeffs[i]
    }

    /// `alpha_0, ..., alpha_d`.
    pub fn alpha(&self) -> &[T] {
        &self.alpha
    }

    /// `beta_0, ..., beta_{d-1}`.
    pub fn beta(&self) -> &[T] {
        &self.beta
    }

    /// `gamma_i` for `1 <= i <= d`.
    pub fn gamma(&self, i: usize) -> T {
        assert!(i >= 1, "gamma_0 is not defined");
        self.gamma[i]
    }

    /// `gamma_1, ..., gamma_d`.
    pub fn gammas(&self) -> &[T] {
        &self.gamma[1..]
    }

    /// `omega_k = 1 / (gamma_1 ... gamma_k)`, the leading coefficient of `p_k`.
    pub fn omega(&self, k: usize) -> T {
        self.omega[k]
    }

    /// Leading monomial coefficient of `p_k` as recovered by interpolation.
    pub fn leading_coefficient(&self, k: usize) -> T {
        self.coeffs[k][k]
    }

    /// `p_i(x)` by the three-term recurrence.
    pub fn eval(&self, i: usize, x: T) -> T {
        let (mut prev, mut cur) = (T::zero(), T::one());
        for k in 0..i {
            let b = if k == 0 { T::zero() } else { self.beta[k - 1] };
            let next = ((x - self.alpha[k]) * cur - b * prev) / self.gamma[k + 1];
            prev = cur;
            cur = next;
        }
        cur
    }

    /// Values of the Hoffman polynomial `H = p_0 + ... + p_d`.
    pub fn hoffman_values(&self) -> Vec<T> {
        (0..=self.d())
            .map(|j| self.values.column(j).iter().fold(T::zero(), |a, &b| a + b))
            .collect()
    }

    /// Monomial coefficients of `H`.
    pub fn hoffman(&self) -> Vec<T> {
        self.sum_coeffs(|_| true)
    }

    /// Monomial coefficients of `H_0 = p_0 + p_2 + ...` and `H_1 = H - H_0`.
    pub fn hoffman_even_odd(&self) -> (Vec<T>, Vec<T>) {
        (
            self.sum_coeffs(|i| i % 2 == 0),
            self.sum_coeffs(|i| i % 2 == 1),
        )
    }

    fn sum_coeffs(&self, keep: impl Fn(usize) -> bool) -> Vec<T> {
        let mut out = vec![T::zero(); self.d() + 1];
        for (_, c) in self.coeffs.iter().enumerate().filter(|(i, _)| keep(*i)) {
            for (o, &x) in out.iter_mut().zip(c) {
                *o += x;
            }
        }
        out
    }

    /// Preintersection number
    /// `xi_ij^k = (1 / (n p_k(lambda_0))) sum_l m_l p_i(lambda_l) p_j(lambda_l) p_k(lambda_l)`.
    pub fn xi(&self, i: usize, j: usize, k: usize) -> T {
        let s = (0..=self.d()).fold(T::zero(), |acc, l| {
            acc + self.weights[l] * self.values[(i, l)] * self.values[(j, l)] * self.values[(k, l)]
        });
        s / self.values[(k, 0)]
    }

    /// `<p_i, p_j>` in the value representation.
    pub fn gram(&self, i: usize, j: usize) -> T {
        let ri: Vec<T> = self.values_of(i);
        let rj: Vec<T> = self.values_of(j);
        dot(&self.weights, &ri, &rj)
    }

    /// `max_{i != j} |<p_i, p_j>| / max_i p_i(lambda_0)` and
    /// `max_i |<p_i, p_i> / p_i(lambda_0) - 1|`.
    pub fn orthogonality_residuals(&self) -> (f64, f64) {
        let d = self.d();
        let pmax = (0..=d).map(|i| self.at_lambda0(i).f64()).fold(0.0, f64::max);
        let mut off = 0.0f64;
        let mut diag = 0.0f64;
        for i in 0..=d {
            for j in 0..=d {
                let g = self.gram(i, j).f64();
                if i == j {
                    diag = diag.max((g / self.at_lambda0(i).f64() - 1.0).abs());
                } else {
                    off = off.max(g.abs() / pmax);
                }
            }
        }
        (off, diag)
    }

    /// `max_i ||x p_i - beta_{i-1} p_{i-1} - alpha_i p_i - gamma_{i+1} p_{i+1}||`,
    /// each term relative to `max(1, ||x p_i||)`.
    pub fn recurrence_residual(&self) -> f64 {
        let d = self.d();
        let mut worst = 0.0f64;
        for i in 0..=d {
            let r: Vec<T> = (0..=d)
                .map(|j| {
                    let mut v = self.nodes[j] * self.values[(i, j)] - self.alpha[i] * self.values[(i, j)];
                    if i > 0 {
                        v -= self.beta[i - 1] * self.values[(i - 1, j)];
                    }
                    if i < d {
                        v -= self.gamma[i + 1] * self.values[(i + 1, j)];
                    }
                    v
                })
                .collect();
            let xp: Vec<T> = (0..=d).map(|j| self.nodes[j] * self.values[(i, j)]).collect();
            let scale = dot(&self.weights, &xp, &xp).f64().sqrt().max(1.0);
            worst = worst.max(dot(&self.weights, &r, &r).f64().sqrt() / scale);
        }
        worst
    }

    /// `max_i |alpha_i + beta_i + gamma_i - lambda_0|` with `beta_d = gamma_0 = 0`.
    pub fn row_sum_residual(&self) -> f64 {
        let d = self.d();
        (0..=d)
            .map(|i| {
                let b = if i < d { self.beta[i] } else { T::zero() };
                (self.alpha[i] + b + self.gamma[i] - self.nodes[0]).abs().f64()
            })
            .fold(0.0, f64::max)
    }

    /// Indices `i` with `beta_i <= 0` (reported, not treated as an error).
    pub fn nonpositive_betas(&self) -> Vec<usize> {
        (0..self.beta.len())
            .filter(|&i| self.beta[i] <= T::zero())
            .collect()
    }

    /// `p_i(A) = sum_j p_i(lambda_j) E_j`.
    pub fn matrix(&self, i: usize, s: &Spectrum<T>) -> DMatrix<T> {
        s.matrix_from_values(&self.values_of(i))
    }

    /// `p_i(A)` by Horner's rule on the monomial coefficients.
    pub fn matrix_horner(&self, i: usize, g: &ValidatedGraph) -> DMatrix<T> {
        horner_matrix(g, &self.coeffs[i])
    }

    /// Monomial-coefficient evaluation, for cross-checking against [`Self::eval`].
    pub fn eval_monomial(&self, i: usize, x: T) -> T {
        horner(&self.coeffs[i], x)
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

/// `p_i(A)` in both forms: `(from idempotents, by Horner)`.
pub fn evaluate_in_a<T: Real>(
    ps: &PredistanceSystem<T>,
    s: &Spectrum<T>,
    g: &ValidatedGraph,
    i: usize,
) -> (DMatrix<T>, DMatrix<T>) {
    (ps.matrix(i, s), ps.matrix_horner(i, g))
}

/// `H_0(A)` and `H_1(A)` for a bipartite graph.
pub fn hoffman_split<T: Real>(
    ps: &PredistanceSystem<T>,
    s: &Spectrum<T>,
    ds: &DistanceStructure,
) -> Result<(DMatrix<T>, DMatrix<T>), PredistanceError> {
    if !ds.is_bipartite() {
        return Err(PredistanceError::NotBipartite);
    }
    let d = ps.d();
    let even: Vec<T> = (0..=d)
        .map(|j| (0..=d).step_by(2).fold(T::zero(), |a, i| a + ps.value(i, j)))
        .collect();
    let odd: Vec<T> = (0..=d)
        .map(|j| (1..=d).step_by(2).fold(T::zero(), |a, i| a + ps.value(i, j)))
        .collect();
    Ok((s.matrix_from_values(&even), s.matrix_from_values(&odd)))
}

/// Multiplicities recomputed as `m_i = (-1)^i pi_0 p_d(lambda_0) / (pi_i p_d(lambda_i))`.
pub fn multiplicity_from_pd<T: Real>(
    ps: &PredistanceSystem<T>,
    s: &Spectrum<T>,
) -> Result<Vec<T>, PredistanceError> {
    let d = ps.d();
    let scale = (0..=d).map(|j| ps.value(d, j).abs().f64()).fold(0.0, f64::max);
    (0..=d)
        .map(|i| {
            let pdi = ps.value(d, i);
            if pdi.abs().f64() <= 1e-14 * scale {
                return Err(PredistanceError::ZeroDenominator { index: i });
            }
            Ok(s.phi_sign(i) * s.pi_ratio(0, i) * ps.value(d, 0) / pdi)
        })
        .collect()
}

/// `p_d(lambda_0)` from the spectrum alone: `(n / pi_0^2) (sum_i 1 / (m_i pi_i^2))^-1`.
pub fn spectral_excess_closed_form<T: Real>(s: &Spectrum<T>) -> T {
    let sum = (0..=s.d()).fold(T::zero(), |acc, i| {
        let r = s.pi_ratio(0, i);
        acc + r * r / T::of_usize(s.multiplicity(i))
    });
    T::of_usize(s.order()) / sum
}
