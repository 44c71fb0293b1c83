use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{FromPrimitive, ToPrimitive, Zero};

use crate::graph::{DistanceStructure, ValidatedGraph};
use crate::scalar::Real;
use crate::spectral::Spectrum;

#[derive(Debug, Clone)]
enum Power {
    Narrow(Vec<u128>),
    Wide(Vec<BigUint>),
}

impl Power {
    fn get(&self, k: usize) -> BigUint {
        match self {
            Power::Narrow(v) => BigUint::from(v[k]),
            Power::Wide(v) => v[k].clone(),
        }
    }

    fn widen(&self) -> Vec<BigUint> {
        match self {
            Power::Narrow(v) => v.iter().map(|&x| BigUint::from(x)).collect(),
            Power::Wide(v) => v.clone(),
        }
    }
}

/// Walk counts on one distance class for one walk length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Constancy {
    /// Every pair in the class has this many walks.
    Constant(BigUint),
    /// The distinct counts observed, ascending.
    Spread(Vec<BigUint>),
}

impl Constancy {
    pub fn is_constant(&self) -> bool {
        matches!(self, Constancy::Constant(_))
    }

    pub fn value(&self) -> Option<&BigUint> {
        match self {
            Constancy::Constant(x) => Some(x),
            Constancy::Spread(_) => None,
        }
    }
}

/// Exact walk counts `a_uv^(l) = (A^l)_uv` for `0 <= l <= max_len`.
///
/// Entries are stored as `u128` while they fit and switch to arbitrary
/// precision at the first overflow, so no count is ever truncated.
/// Class statistics cover every pair; individual entries are retained only
/// for the source vertices requested at construction.
#[derive(Debug, Clone)]
pub struct WalkTable {
    n: usize,
    max_len: usize,
    row_slot: Vec<Option<usize>>,
    retained: Vec<Power>,
    constancy: Vec<Vec<Constancy>>,
    averages: Vec<Vec<BigRational>>,
}

impl WalkTable {
    /// Powers `A^0..A^max_len`, retaining every entry.
    pub fn new(g: &ValidatedGraph, ds: &DistanceStructure, max_len: usize) -> WalkTable {
        let all: Vec<usize> = (0..g.order()).collect();
        Self::with_rows(g, ds, max_len, &all)
    }

    /// Powers `A^0..A^max_len`, retaining only the rows `rows`.
    pub fn with_rows(
        g: &ValidatedGraph,
        ds: &DistanceStructure,
        max_len: usize,
        rows: &[usize],
    ) -> WalkTable {
        let n = g.order();
        let mut row_slot = vec![None; n];
        let mut kept = Vec::new();
        for &r in rows {
            if row_slot[r].is_none() {
                row_slot[r] = Some(kept.len());
                kept.push(r);
            }
        }
        let classes = ds.diameter() + 1;
        let mut constancy = vec![Vec::with_capacity(max_len + 1); classes];
        let mut averages = vec![Vec::with_capacity(max_len + 1); classes];
        let mut retained = Vec::with_capacity(max_len + 1);

        let mut identity = vec![0u128; n * n];
        for u in 0..n {
            identity[u * n + u] = 1;
        }
        let mut current = Power::Narrow(identity);
        for l in 0..=max_len {
            if l > 0 {
                current = step(g, &current);
            }
            for h in 0..classes {
                let pairs = ds.class(h);
                let (c, sum) = class_stats(&current, n, pairs);
                constancy[h].push(c);
                averages[h].push(BigRational::new(BigInt::from(sum), BigInt::from(pairs.len())));
            }
            retained.push(match &current {
                Power::Narrow(p) => {
                    Power::Narrow(kept.iter().flat_map(|&r| p[r * n..(r + 1) * n].iter().copied()).collect())
                }
                Power::Wide(p) => {
                    Power::Wide(kept.iter().flat_map(|&r| p[r * n..(r + 1) * n].iter().cloned()).collect())
                }
            });
        }
        WalkTable {
            n,
            max_len,
            row_slot,
            retained,
            constancy,
            averages,
        }
    }

    /// Convenience constructor with `max_len = d`.
    pub fn for_spectrum<T: Real>(
        g: &ValidatedGraph,
        s: &Spectrum<T>,
        ds: &DistanceStructure,
    ) -> WalkTable {
        Self::new(g, ds, s.d())
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Whether entries with source `u` were retained.
    pub fn has_row(&self, u: usize) -> bool {
        self.row_slot[u].is_some()
    }

    fn index(&self, u: usize, v: usize) -> usize {
        let slot = self.row_slot[u].unwrap_or_else(|| panic!("walk counts from vertex {u} were not retained"));
        slot * self.n + v
    }

    /// `a_uv^(l)`. Panics if row `u` was not retained.
    pub fn get(&self, u: usize, v: usize, l: usize) -> BigUint {
        self.retained[l].get(self.index(u, v))
    }

    /// `a_uv^(l)` when it fits in a `u128`.
    pub fn get_u128(&self, u: usize, v: usize, l: usize) -> Option<u128> {
        let k = self.index(u, v);
        match &self.retained[l] {
            Power::Narrow(p) => Some(p[k]),
            Power::Wide(p) => p[k].to_u128(),
        }
    }

    /// The profile `(a_uv^(0), ..., a_uv^(max_len))`.
    pub fn profile(&self, u: usize, v: usize) -> Vec<BigUint> {
        (0..=self.max_len).map(|l| self.get(u, v, l)).collect()
    }

    pub fn constancy(&self, h: usize, l: usize) -> &Constancy {
        &self.constancy[h][l]
    }

    /// `a_h^(l)` when it is well defined.
    pub fn constant(&self, h: usize, l: usize) -> Option<&BigUint> {
        self.constancy[h][l].value()
    }

    /// Average `a_h^(l)` over ordered pairs at distance `h`.
    pub fn average(&self, h: usize, l: usize) -> &BigRational {
        &self.averages[h][l]
    }

    /// `tr A^l`, from the class-0 average.
    pub fn trace(&self, l: usize) -> BigUint {
        let total = self.averages[0][l].clone() * BigRational::from_integer(BigInt::from(self.n));
        total.to_integer().to_biguint().expect("walk counts are nonnegative")
    }

    /// Length of the longest prefix `0..L` of walk lengths with constant
    /// counts on class `h`.
    pub fn constant_prefix(&self, h: usize) -> usize {
        self.constancy[h]
            .iter()
            .position(|c| !c.is_constant())
            .unwrap_or(self.max_len + 1)
    }

    /// Crossed multiplicities `m_uv(lambda_i)` recovered from the walk profile
    /// by applying `lambda_i^*` coefficientwise.
    pub fn crossed_from_walks<T: Real>(&self, basis: &LagrangeBasis, u: usize, v: usize) -> Vec<T> {
        basis.apply(&self.profile(u, v))
    }
}

fn step(g: &ValidatedGraph, prev: &Power) -> Power {
    let n = g.order();
    if let Power::Narrow(p) = prev {
        let mut out = vec![0u128; n * n];
        let mut ok = true;
        'rows: for u in 0..n {
            for &w in g.neighbors(u) {
                let src = &p[w * n..(w + 1) * n];
                let dst = &mut out[u * n..(u + 1) * n];
                for (d, &s) in dst.iter_mut().zip(src) {
                    match d.checked_add(s) {
                        Some(x) => *d = x,
                        None => {
                            ok = false;
                            break 'rows;
                        }
                    }
                }
            }
        }
        if ok {
            return Power::Narrow(out);
        }
    }
    let p = prev.widen();
    let mut out = vec![BigUint::zero(); n * n];
    for u in 0..n {
        for &w in g.neighbors(u) {
            for v in 0..n {
                out[u * n + v] += &p[w * n + v];
            }
        }
    }
    Power::Wide(out)
}

fn class_stats(p: &Power, n: usize, pairs: &[(u32, u32)]) -> (Constancy, BigUint) {
    let idx = |&(u, v): &(u32, u32)| u as usize * n + v as usize;
    match p {
        Power::Narrow(p) => {
            let mut sum = BigUint::zero();
            let mut acc: u128 = 0;
            let first = p[idx(&pairs[0])];
            let mut constant = true;
            for pair in pairs {
                let x = p[idx(pair)];
                constant &= x == first;
                acc = match acc.checked_add(x) {
                    Some(y) => y,
                    None => {
                        sum += acc;
                        x
                    }
                };
            }
            sum += acc;
            let c = if constant {
                Constancy::Constant(BigUint::from(first))
            } else {
                let set: BTreeSet<u128> = pairs.iter().map(|q| p[idx(q)]).collect();
                Constancy::Spread(set.into_iter().map(BigUint::from).collect())
            };
            (c, sum)
        }
        Power::Wide(p) => {
            let first = &p[idx(&pairs[0])];
            let constant = pairs.iter().all(|q| &p[idx(q)] == first);
            let sum = pairs.iter().map(|q| &p[idx(q)]).sum();
            let c = if constant {
                Constancy::Constant(first.clone())
            } else {
                let set: BTreeSet<&BigUint> = pairs.iter().map(|q| &p[idx(q)]).collect();
                Constancy::Spread(set.into_iter().cloned().collect())
            };
            (c, sum)
        }
    }
}

/// The Lagrange polynomials `lambda_i^*` on a dyadic grid, for exact
/// evaluation on integer walk profiles.
///
/// Eigenvalues are rounded to multiples of `2^-60`; with `L_j` the scaled
/// integers, `lambda_i^*` applied to a profile `a` equals
/// `sum_k C_ik 2^(60k) a_k / prod_{j != i} (L_i - L_j)` where `C_ik` are the
/// coefficients of `prod_{j != i} (X - L_j)`. Everything but the final
/// division is integer arithmetic.
#[derive(Debug, Clone)]
pub struct LagrangeBasis {
    scaled: Vec<Vec<BigInt>>,
    denominators: Vec<BigInt>,
}

const GRID_BITS: i32 = 60;

impl LagrangeBasis {
    pub fn new<T: Real>(s: &Spectrum<T>) -> LagrangeBasis {
        let grid: Vec<BigInt> = s
            .eigenvalues()
            .iter()
            .map(|x| {
                let y = (x.f64() * 2f64.powi(GRID_BITS)).round();
                BigInt::from_f64(y).expect("finite eigenvalue")
            })
            .collect();
        let width = grid.len();
        let mut scaled = Vec::with_capacity(width);
        let mut denominators = Vec::with_capacity(width);
        for i in 0..width {
            let mut coeffs = vec![BigInt::from(1)];
            let mut denom = BigInt::from(1);
            for (j, lj) in grid.iter().enumerate() {
                if j == i {
                    continue;
                }
                let mut next = vec![BigInt::zero(); coeffs.len() + 1];
                for (k, c) in coeffs.iter().enumerate() {
                    next[k + 1] += c;
                    next[k] -= c * lj;
                }
                coeffs = next;
                denom *= &grid[i] - lj;
            }
            let scaled_row = coeffs
                .into_iter()
                .enumerate()
                .map(|(k, c)| c << (GRID_BITS as usize * k))
                .collect();
            scaled.push(scaled_row);
            denominators.push(denom);
        }
        LagrangeBasis {
            scaled,
            denominators,
        }
    }

    /// `lambda_i^*(a)` for every `i`, where `a` holds at least `d + 1` entries.
    pub fn apply<T: Real>(&self, profile: &[BigUint]) -> Vec<T> {
        self.apply_exact(profile)
            .into_iter()
            .map(|r| T::of(r.to_f64().unwrap_or(f64::NAN)))
            .collect()
    }

    /// Exact values of `lambda_i^*(a)` on the dyadic grid.
    pub fn apply_exact(&self, profile: &[BigUint]) -> Vec<BigRational> {
        self.scaled
            .iter()
            .zip(&self.denominators)
            .map(|(row, den)| {
                let num: BigInt = row
                    .iter()
                    .zip(profile)
                    .map(|(c, a)| c * BigInt::from(a.clone()))
                    .sum();
                BigRational::new(num, den.clone())
            })
            .collect()
    }
}

/// `sum_i m_uv(lambda_i) lambda_i^l`.
pub fn walks_from_multiplicities<T: Real>(s: &Spectrum<T>, u: usize, v: usize, l: usize) -> T {
    (0..=s.d()).fold(T::zero(), |acc, i| {
        acc + s.crossed(u, v, i) * s.eigenvalue(i).powi(l as i32)
    })
}

/// Crossed multiplicities of `(u, v)` recovered from its exact walk profile.
pub fn multiplicities_from_walks<T: Real>(
    wt: &WalkTable,
    s: &Spectrum<T>,
    u: usize,
    v: usize,
) -> Vec<T> {
    wt.crossed_from_walks(&LagrangeBasis::new(s), u, v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{families, Graph};

    fn setup(g: Graph) -> (ValidatedGraph, Spectrum<f64>, DistanceStructure, WalkTable) {
        let g = g.validate(512).unwrap();
        let s = Spectrum::new(&g, 1e-9).unwrap();
        let ds = DistanceStructure::new(&g);
        let wt = WalkTable::for_spectrum(&g, &s, &ds);
        (g, s, ds, wt)
    }

    #[test]
    fn four_cycle_antipodal_walks() {
        let (_, s, _, wt) = setup(families::cycle(4));
        assert_eq!(wt.constant(2, 2), Some(&BigUint::from(2u32)));
        assert!((walks_from_multiplicities(&s, 0, 2, 2) - 2.0).abs() < 1e-12);
        let m = multiplicities_from_walks(&wt, &s, 0, 1);
        assert!(m[1].abs() < 1e-12);
    }

    #[test]
    fn k2_walks_and_round_trip() {
        let (_, s, _, wt) = setup(families::complete(2));
        assert_eq!(wt.constant(1, 1), Some(&BigUint::from(1u32)));
        assert!((walks_from_multiplicities(&s, 0, 1, 1) - 1.0).abs() < 1e-12);
        let m: Vec<f64> = multiplicities_from_walks(&wt, &s, 0, 1);
        assert!((m[0] - 0.5).abs() < 1e-12 && (m[1] + 0.5).abs() < 1e-12);
    }

    #[test]
    fn petersen_adjacent_pairs_share_no_neighbour() {
        let (_, s, _, wt) = setup(families::petersen());
        assert_eq!(wt.get(0, 1, 2), BigUint::zero());
        assert!(walks_from_multiplicities(&s, 0, 1, 2).abs() < 1e-10);
    }

    #[test]
    fn petersen_round_trip_on_all_pairs() {
        let (_, s, _, wt) = setup(families::petersen());
        let basis = LagrangeBasis::new(&s);
        for u in 0..10 {
            for v in 0..10 {
                let m: Vec<f64> = wt.crossed_from_walks(&basis, u, v);
                for (i, x) in m.iter().enumerate() {
                    assert!((x - s.crossed(u, v, i)).abs() < 1e-7);
                }
            }
        }
    }

    #[test]
    fn basic_walk_invariants() {
        let (g, _, ds, wt) = setup(families::foster_f026a());
        for u in 0..26 {
            for v in 0..26 {
                assert_eq!(wt.get(u, v, 0), BigUint::from((u == v) as u8));
                assert_eq!(wt.get(u, v, 1), BigUint::from(g.is_adjacent(u, v) as u8));
                for l in 0..ds.dist(u, v) {
                    assert!(wt.get(u, v, l).is_zero());
                }
            }
        }
    }

    #[test]
    fn retained_rows_only() {
        let g = families::petersen().validate(512).unwrap();
        let ds = DistanceStructure::new(&g);
        let full = WalkTable::new(&g, &ds, 4);
        let part = WalkTable::with_rows(&g, &ds, 4, &[3]);
        assert!(part.has_row(3) && !part.has_row(0));
        assert_eq!(part.profile(3, 7), full.profile(3, 7));
        assert_eq!(part.constancy(2, 4), full.constancy(2, 4));
        assert_eq!(part.trace(4), full.trace(4));
    }

    #[test]
    fn counts_beyond_u128_are_exact() {
        // K_40 has (A^l)_uu = (39^l + 39 (-1)^l) / 40, which passes 2^128 at l = 25.
        let g = families::complete(40).validate(512).unwrap();
        let ds = DistanceStructure::new(&g);
        let wt = WalkTable::new(&g, &ds, 30);
        for l in [10usize, 24, 25, 30] {
            let big = BigInt::from(39u32).pow(l as u32);
            let sign = if l % 2 == 0 { 39 } else { -39 };
            let expected = (big + sign) / 40;
            assert_eq!(BigInt::from(wt.get(5, 5, l)), expected);
        }
        assert!(wt.get_u128(0, 0, 30).is_none());
        assert!(wt.constancy(0, 30).is_constant());
    }
}
