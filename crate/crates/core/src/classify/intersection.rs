use num_rational::Ratio;
use serde::Serialize;

use crate::graph::{DistanceStructure, ValidatedGraph};

/// An intersection number over one distance class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntersectionValue {
    WellDefined(u32),
    /// Distinct values observed, ascending.
    Spread(Vec<u32>),
}

impl IntersectionValue {
    pub fn value(&self) -> Option<u32> {
        match self {
            IntersectionValue::WellDefined(x) => Some(*x),
            IntersectionValue::Spread(_) => None,
        }
    }

    pub fn is_well_defined(&self) -> bool {
        matches!(self, IntersectionValue::WellDefined(_))
    }
}

#[derive(Debug, Clone)]
struct Cell {
    values: Vec<u32>,
    sum: u64,
}

impl Cell {
    fn new() -> Cell {
        Cell {
            values: Vec::new(),
            sum: 0,
        }
    }

    fn add(&mut self, x: u32) {
        if !self.values.contains(&x) {
            self.values.push(x);
        }
        self.sum += u64::from(x);
    }

    fn value(&self) -> IntersectionValue {
        match self.values.as_slice() {
            [x] => IntersectionValue::WellDefined(*x),
            _ => {
                let mut v = self.values.clone();
                v.sort_unstable();
                IntersectionValue::Spread(v)
            }
        }
    }
}

/// Exact combinatorial intersection numbers
/// `p_ij^k(u, v) = |Gamma_i(u) cap Gamma_j(v)|` over ordered pairs at distance `k`.
#[derive(Debug, Clone)]
pub struct IntersectionAnalysis {
    diameter: usize,
    max_index: usize,
    cells: Vec<Cell>,
    class_sizes: Vec<u64>,
    c: Vec<Cell>,
    a: Vec<Cell>,
    b: Vec<Cell>,
}

impl IntersectionAnalysis {
    /// Full tensor for `i, j, k <= max_index`, plus `c_k`, `a_k`, `b_k` for every `k <= D`.
    pub fn new(g: &ValidatedGraph, ds: &DistanceStructure, max_index: usize) -> IntersectionAnalysis {
        let n = g.order();
        let diameter = ds.diameter();
        let max_index = max_index.min(diameter);
        let w = max_index + 1;
        let mut cells = vec![Cell::new(); w * w * w];
        let mut hist = vec![0u32; w * w];
        for k in 0..=max_index {
            for &(u, v) in ds.class(k) {
                let (u, v) = (u as usize, v as usize);
                hist.fill(0);
                for x in 0..n {
                    let (i, j) = (ds.dist(u, x), ds.dist(x, v));
                    if i <= max_index && j <= max_index {
                        hist[i * w + j] += 1;
                    }
                }
                for i in 0..w {
                    for j in 0..w {
                        cells[(i * w + j) * w + k].add(hist[i * w + j]);
                    }
                }
            }
        }

        let mut c = vec![Cell::new(); diameter + 1];
        let mut a = vec![Cell::new(); diameter + 1];
        let mut b = vec![Cell::new(); diameter + 1];
        for (k, ((ck, ak), bk)) in c.iter_mut().zip(&mut a).zip(&mut b).enumerate() {
            for &(u, v) in ds.class(k) {
                let (u, v) = (u as usize, v as usize);
                let mut counts = [0u32; 3];
                for &x in g.neighbors(u) {
                    counts[ds.dist(x, v) + 1 - k] += 1;
                }
                ck.add(counts[0]);
                ak.add(counts[1]);
                bk.add(counts[2]);
            }
        }

        IntersectionAnalysis {
            diameter,
            max_index,
            cells,
            class_sizes: (0..=diameter).map(|h| ds.class_size(h) as u64).collect(),
            c,
            a,
            b,
        }
    }

    pub fn max_index(&self) -> usize {
        self.max_index
    }

    fn cell(&self, i: usize, j: usize, k: usize) -> &Cell {
        let w = self.max_index + 1;
        assert!(i < w && j < w && k < w, "index beyond the computed range");
        &self.cells[(i * w + j) * w + k]
    }

    /// `p_ij^k`, for `i, j, k <= max_index`.
    pub fn value(&self, i: usize, j: usize, k: usize) -> IntersectionValue {
        self.cell(i, j, k).value()
    }

    /// Average of `p_ij^k(u, v)` over ordered pairs at distance `k`.
    pub fn average(&self, i: usize, j: usize, k: usize) -> Ratio<u64> {
        Ratio::new(self.cell(i, j, k).sum, self.class_sizes[k])
    }

    /// `c_k = p_{1,k-1}^k` for `1 <= k <= D`.
    pub fn c(&self, k: usize) -> IntersectionValue {
        assert!(k >= 1, "c_0 is not defined");
        self.c[k].value()
    }

    /// `a_k = p_{1,k}^k` for `k <= D`.
    pub fn a(&self, k: usize) -> IntersectionValue {
        self.a[k].value()
    }

    /// `b_k = p_{1,k+1}^k` for `k < D`.
    pub fn b(&self, k: usize) -> IntersectionValue {
        assert!(k < self.diameter, "b_D is not defined");
        self.b[k].value()
    }

    /// `c_k`, `a_k` or `b_k` as an `Option` over the whole range `0..=D`,
    /// with `None` where undefined or not well defined.
    pub fn sequences(&self) -> (Vec<Option<u32>>, Vec<Option<u32>>, Vec<Option<u32>>) {
        let d = self.diameter;
        let c = (0..=d).map(|k| if k == 0 { None } else { self.c(k).value() }).collect();
        let a = (0..=d).map(|k| self.a(k).value()).collect();
        let b = (0..=d).map(|k| if k == d { None } else { self.b(k).value() }).collect();
        (c, a, b)
    }

    /// Largest `m <= D` with `c_1..c_m` and `a_1..a_{m-1}`, `b_1..b_{m-1}` well defined.
    pub fn partial_regularity(&self) -> usize {
        let mut m = 0;
        while m < self.diameter {
            let next = m + 1;
            let ok = self.c(next).is_well_defined()
                && (m == 0 || (self.a(m).is_well_defined() && self.b(m).is_well_defined()));
            if !ok {
                break;
            }
            m = next;
        }
        m
    }

    /// Whether every `c_k`, `a_k`, `b_k` is well defined (the graph is distance-regular).
    pub fn all_well_defined(&self) -> bool {
        self.partial_regularity() == self.diameter && self.a(self.diameter).is_well_defined()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn analysis(g: crate::graph::Graph, max_index: usize) -> IntersectionAnalysis {
        let g = g.validate(512).unwrap();
        let ds = DistanceStructure::new(&g);
        IntersectionAnalysis::new(&g, &ds, max_index)
    }

    #[test]
    fn petersen_p11_2() {
        let ia = analysis(families::petersen(), 2);
        assert_eq!(ia.value(1, 1, 2), IntersectionValue::WellDefined(1));
        assert_eq!(ia.value(1, 1, 1), IntersectionValue::WellDefined(0));
        assert_eq!(ia.value(2, 2, 0), IntersectionValue::WellDefined(6));
        assert!(ia.all_well_defined());
        assert_eq!(ia.partial_regularity(), 2);
    }

    #[test]
    fn f026a_c5_and_c4() {
        let ia = analysis(families::foster_f026a(), 0);
        assert_eq!(ia.c(5), IntersectionValue::WellDefined(3));
        assert_eq!(ia.c(4), IntersectionValue::Spread(vec![2, 3]));
        assert!(!ia.all_well_defined());
    }

    #[test]
    fn cycle_is_distance_regular() {
        let ia = analysis(families::cycle(6), 3);
        assert!(ia.all_well_defined());
        let (c, a, b) = ia.sequences();
        assert_eq!(c, vec![None, Some(1), Some(1), Some(2)]);
        assert_eq!(a, vec![Some(0); 4]);
        assert_eq!(b, vec![Some(2), Some(1), Some(1), None]);
    }

    #[test]
    fn averages_are_exact() {
        let ia = analysis(families::lcf(12, &[5, -5]), 2);
        let avg = ia.average(1, 1, 2);
        assert!(*avg.denom() > 0);
    }
}
