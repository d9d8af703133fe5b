//! The rate-splitting inner bound and its time-shared hull.

use super::{face, unit_grid, R1, R12, R123, R13, R2, R23, R3};
use crate::geometry::hull_union;
use crate::{gauss_cap as c, GaussianMazic, HalfSpace, Polytope3, Result, SplitParams};

/// The eleven inequalities of the split scheme, unpruned, in their usual
/// order (single rates, MAC sum, cross pairs, three triple sums, weighted sums).
///
/// `alpha`/`beta` are the private power fractions: receiver 2 sees the
/// private parts `aαP1 + bβP2` as noise.
pub fn inner_bound_constraints(ch: &GaussianMazic, split: SplitParams) -> Vec<HalfSpace> {
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    let (al, be) = (split.alpha, split.beta);
    let (alb, beb) = (split.alpha_bar(), split.beta_bar());
    let noise = 1.0 + a * al * p1 + b * be * p2;
    let rx2 = |s: f64| c(s / noise);
    let both = rx2(a * alb * p1 + b * beb * p2 + p3);

    vec![
        face(R1, c(p1)),
        face(R2, c(p2)),
        face(R3, rx2(p3)),
        face(R12, c(p1 + p2)),
        face(R13, c(al * p1) + rx2(a * alb * p1 + p3)),
        face(R23, c(be * p2) + rx2(b * beb * p2 + p3)),
        face(R123, c(al * p1 + be * p2) + both),
        face(R123, c(al * p1 + p2) + rx2(a * alb * p1 + p3)),
        face(R123, c(p1 + be * p2) + rx2(b * beb * p2 + p3)),
        face([1.0, 2.0, 1.0], c(be * p2) + c(al * p1 + p2) + both),
        face([2.0, 1.0, 1.0], c(al * p1) + c(p1 + be * p2) + both),
    ]
}

/// Achievable region for one power split, redundancy-pruned.
pub fn inner_bound(ch: &GaussianMazic, split: SplitParams) -> Result<Polytope3> {
    ch.validate()?;
    Ok(Polytope3::new(inner_bound_constraints(ch, split))?.remove_redundant())
}

/// Hull of [`inner_bound`] over the `n × n` grid of splits, i.e. the region
/// reachable by time sharing between grid schemes.
pub fn inner_bound_timeshared(ch: &GaussianMazic, n: usize) -> Result<Polytope3> {
    let grid = unit_grid(n)?;
    let mut slices = Vec::with_capacity(n * n);
    for &alpha in &grid {
        for &beta in &grid {
            slices.push(inner_bound(ch, SplitParams { alpha, beta })?);
        }
    }
    hull_union(&slices)
}

/// No rate splitting: both receivers decode every message they can.
pub fn nosplit_inner(ch: &GaussianMazic) -> Result<Polytope3> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    Polytope3::new([
        face(R1, c(p1)),
        face(R2, c(p2)),
        face(R3, c(p3)),
        face(R12, c(p1 + p2)),
        face(R13, c(a * p1 + p3)),
        face(R23, c(b * p2 + p3)),
        face(R123, c(a * p1 + b * p2 + p3)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RatePoint;

    fn unit(a: f64, b: f64) -> GaussianMazic {
        GaussianMazic::new(a, b, 1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn interference_free_all_private_is_mac_times_link() {
        let p = inner_bound(&unit(0.0, 0.0), SplitParams::new(1.0, 1.0).unwrap()).unwrap();
        let expect = Polytope3::new([
            face(R1, 0.5),
            face(R2, 0.5),
            face(R3, 0.5),
            face(R12, 0.5 * 3f64.log2()),
        ])
        .unwrap();
        assert!(p.region_eq(&expect, 1e-12));
        assert_eq!(p.faces().count(), 4);
    }

    #[test]
    fn no_split_unit_channel_has_one_bit_triple_sum() {
        let p = inner_bound(&unit(1.0, 1.0), SplitParams::NO_SPLIT).unwrap();
        assert!((p.max_sum_rate() - 1.0).abs() < 1e-12);
        let tight = p.faces().any(|h| h.coef == R123 && (h.rhs - 1.0).abs() < 1e-12);
        assert!(tight);
    }

    #[test]
    fn nosplit_matches_zero_split() {
        let ch = GaussianMazic::new(1.2, 3.0, 2.0, 3.0, 2.0).unwrap();
        let p = inner_bound(&ch, SplitParams::NO_SPLIT).unwrap();
        assert!(p.region_eq(&nosplit_inner(&ch).unwrap(), 1e-12));
    }

    #[test]
    fn origin_is_always_inside() {
        for (al, be) in [(0.0, 0.0), (0.3, 0.9), (1.0, 1.0)] {
            let p = inner_bound(&unit(0.4, 2.0), SplitParams::new(al, be).unwrap()).unwrap();
            assert!(p.contains_point(RatePoint::ORIGIN, 0.0));
        }
    }

    #[test]
    fn timeshared_contains_corner_slices() {
        let ch = unit(0.4, 0.7);
        let h = inner_bound_timeshared(&ch, 2).unwrap();
        for (al, be) in [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)] {
            let s = inner_bound(&ch, SplitParams::new(al, be).unwrap()).unwrap();
            assert!(h.contains_region(&s, 1e-9));
        }
        assert!(inner_bound_timeshared(&ch, 1).is_err());
    }
}
