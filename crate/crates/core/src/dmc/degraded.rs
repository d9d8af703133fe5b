//! Tests whether receiver 2's output can be synthesised from receiver 1's.

use serde::Serialize;

use super::simplex::feasible_point;
use super::DiscreteMazic;

const FEAS_TOL: f64 = 1e-9;

/// Which factorization of `p(y2|x1,x2,x3)` to test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    /// `p(y2|x1x2x3) = Σ p(y1|x1x2) p'(y2|x2,x3,y1)`.
    ThroughX2,
    /// `p(y2|x1x2x3) = Σ p(y1|x1x2) p''(y2|x1,x3,y1)`.
    ThroughX1,
    /// The weak link of mixed interference: the `ThroughX2` kernel, so that
    /// `X1 - (X2, X3, Y1) - Y2`.
    Mixed,
    /// Weak interference: both factorizations.
    Weak,
}

/// A witness kernel `k[v][x3][y1][y2]`, with `v` the retained transmitter input.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Kernel {
    /// `"x2"` or `"x1"`.
    pub via: &'static str,
    /// `[|V|, |X3|, |Y1|, |Y2|]`.
    pub dims: [usize; 4],
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DegradedResult {
    pub direction: Direction,
    pub feasible: bool,
    /// Kernels found, one per factorization tested; empty when infeasible.
    pub kernels: Vec<Kernel>,
    /// Largest deviation between the composed channel and `p(y2|x1x2x3)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
}

#[derive(Clone, Copy, PartialEq)]
enum Via {
    X1,
    X2,
}

impl Kernel {
    fn idx(&self, v: usize, x3: usize, y1: usize, y2: usize) -> usize {
        let [_, n3, m1, m2] = self.dims;
        ((v * n3 + x3) * m1 + y1) * m2 + y2
    }

    fn get(&self, v: usize, x3: usize, y1: usize, y2: usize) -> f64 {
        self.values[self.idx(v, x3, y1, y2)]
    }

    /// Largest deviation of the composition from the channel's second table.
    pub fn residual(&self, ch: &DiscreteMazic) -> f64 {
        let [n1, n2, n3, m1, m2] = ch.nx;
        let via_x2 = self.via == "x2";
        let mut worst: f64 = 0.0;
        for x1 in 0..n1 {
            for x2 in 0..n2 {
                let v = if via_x2 { x2 } else { x1 };
                for x3 in 0..n3 {
                    for y2 in 0..m2 {
                        let s: f64 = (0..m1).map(|y1| ch.py1(x1, x2, y1) * self.get(v, x3, y1, y2)).sum();
                        worst = worst.max((s - ch.py2(x1, x2, x3, y2)).abs());
                    }
                }
            }
        }
        worst
    }
}

fn solve(ch: &DiscreteMazic, via: Via) -> Option<Kernel> {
    let [n1, n2, n3, m1, m2] = ch.nx;
    let nv = if via == Via::X2 { n2 } else { n1 };
    let kernel = Kernel { via: if via == Via::X2 { "x2" } else { "x1" }, dims: [nv, n3, m1, m2], values: Vec::new() };
    let nvar = nv * n3 * m1 * m2;
    let mut a = Vec::new();
    let mut b = Vec::new();
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            let v = if via == Via::X2 { x2 } else { x1 };
            for x3 in 0..n3 {
                for y2 in 0..m2 {
                    let mut row = vec![0.0; nvar];
                    for y1 in 0..m1 {
                        row[kernel.idx(v, x3, y1, y2)] += ch.py1(x1, x2, y1);
                    }
                    a.push(row);
                    b.push(ch.py2(x1, x2, x3, y2));
                }
            }
        }
    }
    for v in 0..nv {
        for x3 in 0..n3 {
            for y1 in 0..m1 {
                let mut row = vec![0.0; nvar];
                for y2 in 0..m2 {
                    row[kernel.idx(v, x3, y1, y2)] = 1.0;
                }
                a.push(row);
                b.push(1.0);
            }
        }
    }
    let values = feasible_point(&a, &b, FEAS_TOL)?;
    let k = Kernel { values, ..kernel };
    (k.residual(ch) <= FEAS_TOL).then_some(k)
}

/// Solve the linear feasibility problem for the chosen factorization(s).
pub fn check_degraded(ch: &DiscreteMazic, direction: Direction) -> DegradedResult {
    let vias: &[Via] = match direction {
        Direction::ThroughX2 | Direction::Mixed => &[Via::X2],
        Direction::ThroughX1 => &[Via::X1],
        Direction::Weak => &[Via::X2, Via::X1],
    };
    let mut kernels = Vec::with_capacity(vias.len());
    for &via in vias {
        match solve(ch, via) {
            Some(k) => kernels.push(k),
            None => return DegradedResult { direction, feasible: false, kernels: Vec::new(), max_residual: None },
        }
    }
    let max_residual = kernels.iter().map(|k| k.residual(ch)).fold(0.0, f64::max);
    DegradedResult { direction, feasible: true, kernels, max_residual: Some(max_residual) }
}
