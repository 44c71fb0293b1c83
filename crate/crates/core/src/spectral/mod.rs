//! Eigenstructure of the adjacency matrix.
//!
//! The spectrum is computed numerically and clustered into distinct
//! eigenvalues; each cluster yields a principal idempotent `E_i` built from
//! orthonormal eigenvectors. Walk counts are kept exact (see [`WalkTable`]).

mod multiplicity;
mod walks;

pub use multiplicity::MultiplicityTable;
pub use walks::{
    multiplicities_from_walks, walks_from_multiplicities, Constancy, LagrangeBasis, WalkTable,
};

use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::SpectralError;
use crate::graph::ValidatedGraph;
use crate::scalar::Real;

/// Distinct eigenvalues, multiplicities and principal idempotents.
#[derive(Debug, Clone)]
pub struct Spectrum<T: Real> {
    n: usize,
    degree: usize,
    eigenvalues: Vec<T>,
    multiplicities: Vec<usize>,
    idempotents: Vec<DMatrix<T>>,
    pi: Vec<T>,
    min_gap: f64,
    orthonormality_residual: f64,
}

/// Dense adjacency matrix of `g` in scalar type `T`.
pub fn adjacency_matrix<T: Real>(g: &ValidatedGraph) -> DMatrix<T> {
    let n = g.order();
    DMatrix::from_fn(n, n, |u, v| {
        if g.is_adjacent(u, v) {
            T::one()
        } else {
            T::zero()
        }
    })
}

impl<T: Real> Spectrum<T> {
    /// Full symmetric eigendecomposition followed by clustering.
    ///
    /// Sorted eigenvalues whose gap is at most `eig_group * max(1, |lambda_0|)`
    /// are merged; a gap strictly between that threshold and ten times it is
    /// reported as [`SpectralError::ClusterAmbiguity`].
    pub fn new(g: &ValidatedGraph, eig_group: f64) -> Result<Spectrum<T>, SpectralError> {
        if !(eig_group.is_finite() && eig_group > 0.0) {
            return Err(SpectralError::Tolerance(format!(
                "eigenvalue grouping tolerance must be positive, got {eig_group}"
            )));
        }
        let n = g.order();
        let degree = g.degree();
        let a = adjacency_matrix::<T>(g);
        let eig = SymmetricEigen::try_new(a, T::default_epsilon(), 0)
            .ok_or_else(|| SpectralError::Eigensolver("symmetric QR did not converge".into()))?;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| {
            eig.eigenvalues[j]
                .partial_cmp(&eig.eigenvalues[i])
                .expect("finite eigenvalues")
        });
        let raw: Vec<f64> = order.iter().map(|&i| eig.eigenvalues[i].f64()).collect();
        if raw.iter().any(|x| !x.is_finite()) {
            return Err(SpectralError::Eigensolver("non-finite eigenvalue".into()));
        }

        let scale = raw[0].abs().max(1.0);
        let threshold = eig_group * scale;
        let mut clusters: Vec<Vec<usize>> = vec![vec![0]];
        let mut min_gap = f64::INFINITY;
        for k in 1..n {
            let gap = raw[k - 1] - raw[k];
            if gap <= threshold {
                clusters.last_mut().unwrap().push(k);
            } else if gap < 10.0 * threshold {
                return Err(SpectralError::ClusterAmbiguity {
                    upper: raw[k - 1],
                    lower: raw[k],
                    gap,
                    lo: threshold,
                    hi: 10.0 * threshold,
                });
            } else {
                min_gap = min_gap.min(gap);
                clusters.push(vec![k]);
            }
        }

        let lambda0 = raw[0];
        if clusters[0].len() != 1 || (lambda0 - degree as f64).abs() > 1e-6 * scale {
            return Err(SpectralError::PerronMismatch {
                found: lambda0,
                degree,
            });
        }

        let mut eigenvalues = Vec::with_capacity(clusters.len());
        let mut multiplicities = Vec::with_capacity(clusters.len());
        let mut idempotents = Vec::with_capacity(clusters.len());
        for (i, members) in clusters.iter().enumerate() {
            let value = if i == 0 {
                T::of_usize(degree)
            } else {
                T::of(members.iter().map(|&k| raw[k]).sum::<f64>() / members.len() as f64)
            };
            let cols: Vec<usize> = members.iter().map(|&k| order[k]).collect();
            let v = eig.eigenvectors.select_columns(cols.iter());
            idempotents.push(&v * v.transpose());
            eigenvalues.push(value);
            multiplicities.push(members.len());
        }
        let vtv = eig.eigenvectors.transpose() * &eig.eigenvectors;
        let orthonormality_residual = (&vtv - DMatrix::<T>::identity(n, n)).amax().f64();

        let pi = (0..eigenvalues.len())
            .map(|i| {
                eigenvalues
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .fold(T::one(), |acc, (_, &lj)| acc * (eigenvalues[i] - lj).abs())
            })
            .collect();

        Ok(Spectrum {
            n,
            degree,
            eigenvalues,
            multiplicities,
            idempotents,
            pi,
            min_gap,
            orthonormality_residual,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Index `d` of the smallest eigenvalue (number of distinct eigenvalues minus one).
    pub fn d(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    /// Distinct eigenvalues in decreasing order.
    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn eigenvalue(&self, i: usize) -> T {
        self.eigenvalues[i]
    }

    pub fn multiplicities(&self) -> &[usize] {
        &self.multiplicities
    }

    pub fn multiplicity(&self, i: usize) -> usize {
        self.multiplicities[i]
    }

    pub fn idempotent(&self, i: usize) -> &DMatrix<T> {
        &self.idempotents[i]
    }

    pub fn idempotents(&self) -> &[DMatrix<T>] {
        &self.idempotents
    }

    /// Crossed local multiplicity `m_uv(lambda_i) = (E_i)_uv`.
    pub fn crossed(&self, u: usize, v: usize, i: usize) -> T {
        self.idempotents[i][(u, v)]
    }

    /// `pi_i = prod_{j != i} |lambda_i - lambda_j|`.
    pub fn pi(&self, i: usize) -> T {
        self.pi[i]
    }

    pub fn pis(&self) -> &[T] {
        &self.pi
    }

    /// `pi_i / pi_k`, formed factor by factor so that neither product needs
    /// to be representable on its own.
    pub fn pi_ratio(&self, i: usize, k: usize) -> T {
        if i == k {
            return T::one();
        }
        let l = &self.eigenvalues;
        (0..l.len())
            .filter(|&j| j != i && j != k)
            .fold(T::one(), |acc, j| acc * ((l[i] - l[j]) / (l[k] - l[j])).abs())
    }

    /// Sign of `phi_i = prod_{j != i} (lambda_i - lambda_j)`, which is `(-1)^i`.
    pub fn phi_sign(&self, i: usize) -> T {
        if i % 2 == 0 {
            T::one()
        } else {
            -T::one()
        }
    }

    /// Smallest gap between consecutive distinct eigenvalues.
    pub fn min_gap(&self) -> f64 {
        self.min_gap
    }

    /// `max |V^T V - I|` for the eigenvector matrix returned by the solver.
    pub fn orthonormality_residual(&self) -> f64 {
        self.orthonormality_residual
    }

    /// Whether `lambda_i = -lambda_{d-i}` and `m_i = m_{d-i}` for all `i`.
    pub fn is_symmetric_about_zero(&self, tol: f64) -> bool {
        let d = self.d();
        (0..=d).all(|i| {
            (self.eigenvalues[i] + self.eigenvalues[d - i]).abs().f64() <= tol
                && self.multiplicities[i] == self.multiplicities[d - i]
        })
    }

    /// Monomial coefficients (constant term first) of the Lagrange polynomial
    /// `lambda_i^*`, which is 1 at `lambda_i` and 0 at the other eigenvalues.
    pub fn lagrange_coefficients(&self, i: usize) -> Vec<T> {
        let mut coeffs = vec![T::one()];
        let mut denom = T::one();
        for (j, &lj) in self.eigenvalues.iter().enumerate() {
            if j == i {
                continue;
            }
            let mut next = vec![T::zero(); coeffs.len() + 1];
            for (k, &c) in coeffs.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * lj;
            }
            coeffs = next;
            denom *= self.eigenvalues[i] - lj;
        }
        coeffs.into_iter().map(|c| c / denom).collect()
    }

    /// `p(lambda_i)` for monomial coefficients `p`.
    pub fn eval_at(&self, coeffs: &[T], i: usize) -> T {
        horner(coeffs, self.eigenvalues[i])
    }

    /// `sum_i values[i] * E_i`, i.e. `p(A)` for the polynomial `p` with
    /// `p(lambda_i) = values[i]`.
    pub fn matrix_from_values(&self, values: &[T]) -> DMatrix<T> {
        let mut out = DMatrix::zeros(self.n, self.n);
        for (e, &c) in self.idempotents.iter().zip(values) {
            out += e * c;
        }
        out
    }

    /// Max-norm residuals of the idempotent identities.
    pub fn identity_residuals(&self, g: &ValidatedGraph, with_products: bool) -> IdempotentResiduals {
        let n = self.n;
        let mut sum = DMatrix::<T>::zeros(n, n);
        let mut eigen = 0.0f64;
        let mut trace = 0.0f64;
        for (i, e) in self.idempotents.iter().enumerate() {
            sum += e;
            let ae = sparse_left_multiply(g, e);
            eigen = eigen.max((ae - e * self.eigenvalues[i]).amax().f64());
            trace = trace.max((e.trace().f64() - self.multiplicities[i] as f64).abs());
        }
        let partition = (sum - DMatrix::<T>::identity(n, n)).amax().f64();
        let products = with_products.then(|| {
            let mut worst = 0.0f64;
            for (i, ei) in self.idempotents.iter().enumerate() {
                for (j, ej) in self.idempotents.iter().enumerate().skip(i) {
                    let mut p = ei * ej;
                    if i == j {
                        p -= ei;
                    }
                    worst = worst.max(p.amax().f64());
                }
            }
            worst
        });
        IdempotentResiduals {
            products,
            partition,
            eigen,
            trace,
        }
    }

    /// Evaluates `lambda_i^*(A)` by Horner's rule on the adjacency matrix and
    /// returns `max |lambda_i^*(A) - E_i|` for each `i`.
    ///
    /// Independent of the eigenvector construction; its conditioning degrades
    /// with `d` and with close eigenvalues.
    pub fn lagrange_residuals(&self, g: &ValidatedGraph) -> Vec<f64> {
        (0..=self.d())
            .map(|i| {
                let m = horner_matrix(g, &self.lagrange_coefficients(i));
                (m - &self.idempotents[i]).amax().f64()
            })
            .collect()
    }
}

/// Residuals reported by [`Spectrum::identity_residuals`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdempotentResiduals {
    /// `max |E_i E_j - delta_ij E_i|`, when requested.
    pub products: Option<f64>,
    /// `max |sum_i E_i - I|`.
    pub partition: f64,
    /// `max |A E_i - lambda_i E_i|`.
    pub eigen: f64,
    /// `max |tr E_i - m_i|`.
    pub trace: f64,
}

impl IdempotentResiduals {
    pub fn worst(&self) -> f64 {
        self.products
            .unwrap_or(0.0)
            .max(self.partition)
            .max(self.eigen)
            .max(self.trace)
    }
}

pub(crate) fn horner<T: Real>(coeffs: &[T], x: T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * x + c)
}

/// `A * m` using the adjacency lists of `g`.
pub(crate) fn sparse_left_multiply<T: Real>(g: &ValidatedGraph, m: &DMatrix<T>) -> DMatrix<T> {
    let n = g.order();
    let mut out = DMatrix::<T>::zeros(n, n);
    for u in 0..n {
        for &w in g.neighbors(u) {
            for v in 0..n {
                out[(u, v)] += m[(w, v)];
            }
        }
    }
    out
}

/// `p(A)` by Horner's rule for monomial coefficients `p` (constant term first).
pub fn horner_matrix<T: Real>(g: &ValidatedGraph, coeffs: &[T]) -> DMatrix<T> {
    let n = g.order();
    let mut acc = DMatrix::<T>::zeros(n, n);
    for &c in coeffs.iter().rev() {
        acc = sparse_left_multiply(g, &acc);
        for u in 0..n {
            acc[(u, u)] += c;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn spectrum(g: crate::graph::Graph) -> (ValidatedGraph, Spectrum<f64>) {
        let g = g.validate(512).unwrap();
        let s = Spectrum::new(&g, 1e-9).unwrap();
        (g, s)
    }

    fn assert_spectrum(s: &Spectrum<f64>, expected: &[(f64, usize)]) {
        assert_eq!(s.d() + 1, expected.len());
        for (i, &(value, mult)) in expected.iter().enumerate() {
            assert!((s.eigenvalue(i) - value).abs() < 1e-10, "{i}: {}", s.eigenvalue(i));
            assert_eq!(s.multiplicity(i), mult);
        }
    }

    #[test]
    fn four_cycle() {
        let (_, s) = spectrum(families::cycle(4));
        assert_spectrum(&s, &[(2.0, 1), (0.0, 2), (-2.0, 1)]);
        assert!(s.is_symmetric_about_zero(1e-9));
    }

    #[test]
    fn petersen() {
        let (g, s) = spectrum(families::petersen());
        assert_spectrum(&s, &[(3.0, 1), (1.0, 5), (-2.0, 4)]);
        assert!(!s.is_symmetric_about_zero(1e-9));
        let r = s.identity_residuals(&g, true);
        assert!(r.worst() < 1e-10, "{r:?}");
        assert!(s.lagrange_residuals(&g).iter().all(|&x| x < 1e-7));
    }

    #[test]
    fn k2_idempotents() {
        let (g, s) = spectrum(families::complete(2));
        assert_spectrum(&s, &[(1.0, 1), (-1.0, 1)]);
        assert!((s.crossed(0, 1, 0) - 0.5).abs() < 1e-12);
        assert!((s.crossed(0, 1, 1) + 0.5).abs() < 1e-12);
        assert!((s.crossed(0, 0, 1) - 0.5).abs() < 1e-12);
        assert!(s.lagrange_residuals(&g).iter().all(|&x| x <= 1e-12));
        assert_eq!(s.pi(0), 2.0);
        assert_eq!(s.phi_sign(1), -1.0);
    }

    #[test]
    fn f026a_is_symmetric_with_six_eigenvalues() {
        let (_, s) = spectrum(families::foster_f026a());
        assert_eq!(s.d(), 5);
        assert!(s.is_symmetric_about_zero(1e-9));
        assert_eq!(s.multiplicities().iter().sum::<usize>(), 26);
    }

    #[test]
    fn ambiguity_band_is_reported() {
        // C_7 has gaps of order 1; a huge grouping tolerance puts one in the band.
        let g = families::cycle(7).validate(512).unwrap();
        let err = Spectrum::<f64>::new(&g, 0.12).unwrap_err();
        assert!(matches!(err, SpectralError::ClusterAmbiguity { .. }), "{err}");
    }

    #[test]
    fn f32_spectrum_of_petersen() {
        let g = families::petersen().validate(512).unwrap();
        let s = Spectrum::<f32>::new(&g, 1e-4).unwrap();
        assert_eq!(s.multiplicities(), &[1, 5, 4]);
        assert!((s.eigenvalue(2) + 2.0).abs() < 1e-4);
    }
}
