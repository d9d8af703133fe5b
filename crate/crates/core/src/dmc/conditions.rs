//! Grid checks of the strong and very strong interference conditions over
//! product input distributions.

use serde::{Serialize, Serializer};

use super::joint::{build, mask, Joint};
use super::{DiscreteMazic, InputFactorization, Rx, Var};
use crate::{Error, Result};

const MARGIN_TOL: f64 = 1e-12;

/// Grid verdict. A pass is only evidence: no finite grid covers every
/// product distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    HoldsOnGrid,
    Counterexample,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::HoldsOnGrid => "HOLDS-ON-GRID",
            Verdict::Counterexample => "COUNTEREXAMPLE",
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProductInput {
    pub px1: Vec<f64>,
    pub px2: Vec<f64>,
    pub px3: Vec<f64>,
}

/// Margins (receiver-2 side minus receiver-1 side, in bits) at one grid point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PointMargins {
    pub input: ProductInput,
    pub margins: [f64; 3],
    /// The strong-condition margins at the same point, reported alongside
    /// the very strong ones.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strong_margins: Option<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConditionReport {
    pub verdict: Verdict,
    pub levels: usize,
    pub grid_points: usize,
    pub min_margin: f64,
    /// Smallest margin of each of the three inequalities.
    pub per_condition_min: [f64; 3],
    /// Distribution attaining `min_margin`; a counterexample when negative.
    pub argmin: ProductInput,
    pub points: Vec<PointMargins>,
}

/// All pmfs on `k` symbols whose entries are multiples of `1/(levels - 1)`.
pub fn simplex_grid(k: usize, levels: usize) -> Result<Vec<Vec<f64>>> {
    if k == 0 || levels < 2 {
        return Err(Error::invalid("simplex grid needs k >= 1 and at least 2 levels"));
    }
    let total = levels - 1;
    let mut out = Vec::new();
    let mut counts = vec![0usize; k];
    fn rec(i: usize, left: usize, counts: &mut [usize], total: usize, out: &mut Vec<Vec<f64>>) {
        if i + 1 == counts.len() {
            counts[i] = left;
            out.push(counts.iter().map(|&c| c as f64 / total as f64).collect());
            return;
        }
        for c in 0..=left {
            counts[i] = c;
            rec(i + 1, left - c, counts, total, out);
        }
    }
    rec(0, total, &mut counts, total, &mut out);
    Ok(out)
}

struct Sides {
    rx1: Joint,
    rx2: Joint,
}

impl Sides {
    fn new(ch: &DiscreteMazic, input: &ProductInput) -> Result<Self> {
        let d = InputFactorization::product(&input.px1, &input.px2, &input.px3);
        Ok(Sides { rx1: build(ch, &d, Rx::One)?, rx2: build(ch, &d, Rx::Two)? })
    }

    fn mi(j: &Joint, a: &[Var], c: &[Var]) -> f64 {
        j.mutual_information(mask(a), mask(&[Var::Y]), mask(c))
    }

    fn receiver1(&self) -> [f64; 3] {
        use Var::*;
        [Self::mi(&self.rx1, &[X1], &[X2]), Self::mi(&self.rx1, &[X2], &[X1]), Self::mi(&self.rx1, &[X1, X2], &[])]
    }

    fn strong(&self) -> [f64; 3] {
        use Var::*;
        let r1 = self.receiver1();
        [
            Self::mi(&self.rx2, &[X1], &[X2, X3]) - r1[0],
            Self::mi(&self.rx2, &[X2], &[X1, X3]) - r1[1],
            Self::mi(&self.rx2, &[X1, X2], &[X3]) - r1[2],
        ]
    }

    fn very_strong(&self) -> [f64; 3] {
        use Var::*;
        let r1 = self.receiver1();
        [
            Self::mi(&self.rx2, &[X1], &[X2]) - r1[0],
            Self::mi(&self.rx2, &[X2], &[X1]) - r1[1],
            Self::mi(&self.rx2, &[X1, X2], &[]) - r1[2],
        ]
    }
}

fn run(ch: &DiscreteMazic, levels: usize, very_strong: bool) -> Result<ConditionReport> {
    let [n1, n2, n3, _, _] = ch.nx;
    let (g1, g2, g3) = (simplex_grid(n1, levels)?, simplex_grid(n2, levels)?, simplex_grid(n3, levels)?);
    let mut points = Vec::with_capacity(g1.len() * g2.len() * g3.len());
    for p1 in &g1 {
        for p2 in &g2 {
            for p3 in &g3 {
                let input = ProductInput { px1: p1.clone(), px2: p2.clone(), px3: p3.clone() };
                let sides = Sides::new(ch, &input)?;
                let point = if very_strong {
                    PointMargins { input, margins: sides.very_strong(), strong_margins: Some(sides.strong()) }
                } else {
                    PointMargins { input, margins: sides.strong(), strong_margins: None }
                };
                points.push(point);
            }
        }
    }
    let mut per_condition_min = [f64::INFINITY; 3];
    let mut best = 0;
    let mut min_margin = f64::INFINITY;
    for (i, p) in points.iter().enumerate() {
        for (k, &m) in p.margins.iter().enumerate() {
            per_condition_min[k] = per_condition_min[k].min(m);
            if m < min_margin {
                min_margin = m;
                best = i;
            }
        }
    }
    let verdict = if min_margin >= -MARGIN_TOL { Verdict::HoldsOnGrid } else { Verdict::Counterexample };
    Ok(ConditionReport {
        verdict,
        levels,
        grid_points: points.len(),
        min_margin,
        per_condition_min,
        argmin: points[best].input.clone(),
        points,
    })
}

/// Evaluate the three strong-interference inequalities on a product grid
/// with `levels` values per simplex coordinate.
pub fn check_strong_conditions(ch: &DiscreteMazic, levels: usize) -> Result<ConditionReport> {
    run(ch, levels, false)
}

/// As [`check_strong_conditions`] for the very strong inequalities, whose
/// receiver-2 side drops the conditioning on `X3`.
pub fn check_very_strong_conditions(ch: &DiscreteMazic, levels: usize) -> Result<ConditionReport> {
    run(ch, levels, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        assert_eq!(simplex_grid(2, 5).unwrap().len(), 5);
        assert_eq!(simplex_grid(3, 5).unwrap().len(), 15);
        assert_eq!(simplex_grid(1, 5).unwrap(), vec![vec![1.0]]);
        assert!(simplex_grid(2, 1).is_err());
    }

    #[test]
    fn receiver2_seeing_everything_passes() {
        let ch = DiscreteMazic::from_fn(
            [2, 2, 2, 2, 8],
            |x1, x2, y| if y == x1 ^ x2 { 0.9 } else { 0.1 },
            |x1, x2, x3, y| f64::from(u8::from(y == 4 * x1 + 2 * x2 + x3)),
        )
        .unwrap();
        let s = check_strong_conditions(&ch, 5).unwrap();
        assert_eq!(s.verdict, Verdict::HoldsOnGrid);
        assert_eq!(s.grid_points, 125);
        assert!(s.min_margin >= -1e-12);
        let v = check_very_strong_conditions(&ch, 5).unwrap();
        assert_eq!(v.verdict, Verdict::HoldsOnGrid);
        assert!(v.points.iter().all(|p| p.strong_margins.is_some()));
    }

    #[test]
    fn receiver2_blind_to_x1_fails() {
        let ch = DiscreteMazic::from_fn(
            [2, 2, 2, 2, 2],
            |x1, x2, y| f64::from(u8::from(y == x1 ^ x2)),
            |_, _, x3, y| if y == x3 { 0.9 } else { 0.1 },
        )
        .unwrap();
        let s = check_strong_conditions(&ch, 5).unwrap();
        assert_eq!(s.verdict, Verdict::Counterexample);
        assert!(s.min_margin < -0.5);
        assert_eq!(s.argmin.px1.len(), 2);
    }

    #[test]
    fn swapping_inputs_mirrors_margins() {
        let ch = DiscreteMazic::from_fn(
            [2, 2, 2, 2, 3],
            |x1, x2, y| [[0.8, 0.2], [0.3, 0.7]][x1][y] * 0.6 + [[0.5, 0.5], [0.1, 0.9]][x2][y] * 0.4,
            |x1, x2, x3, y| [[0.6, 0.3, 0.1], [0.2, 0.2, 0.6]][x1][y] * 0.5 + [[0.3, 0.3, 0.4], [0.9, 0.05, 0.05]][x2 ^ x3][y] * 0.5,
        )
        .unwrap();
        let a = check_strong_conditions(&ch, 4).unwrap();
        let b = check_strong_conditions(&ch.swapped(), 4).unwrap();
        assert_eq!(a.verdict, b.verdict);
        assert!((a.per_condition_min[0] - b.per_condition_min[1]).abs() < 1e-12);
        assert!((a.per_condition_min[1] - b.per_condition_min[0]).abs() < 1e-12);
        assert!((a.per_condition_min[2] - b.per_condition_min[2]).abs() < 1e-12);
    }
}
