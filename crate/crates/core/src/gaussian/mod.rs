//! Closed-form inner and outer bounds for the Gaussian channel.
//!
//! Constructors return [`Polytope3`] for single regions and [`RegionUnion`]
//! for bounds stated pointwise in a power-split parameter. Scalar sum-rate
//! results are in bits per channel use.

mod inner;
mod mixed;
mod strong;
mod sumrate;
mod weak;

pub use inner::{inner_bound, inner_bound_constraints, inner_bound_timeshared, nosplit_inner};
pub use mixed::{mixed_corner_point, mixed_inner, mixed_outer, mixed_outer_contains, mixed_outer_slice};
pub use strong::{
    boundary_segment, one_strong_outer, strong_capacity_b_large, strong_outer, very_strong_capacity, SegmentResult,
};
pub use sumrate::{
    sum_capacity_special, sum_capacity_symmetric, sum_rate_upper_theorem6, sumrate_objective, weak_sumrate_profile,
    weak_sumrate_profile_default, ProfileRow, SumRateBound, SumRateProfile,
};
pub use weak::{weak_outer, weak_outer_contains, weak_outer_slice, zic_a0_boundary, ZicBoundaryPoint};

use crate::{Error, HalfSpace, Result};

/// Uniform grid of `n >= 2` points on `[0, 1]`.
pub fn unit_grid(n: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::invalid(format!("grid resolution must be >= 2, got {n}")));
    }
    Ok((0..n).map(|i| if i == n - 1 { 1.0 } else { i as f64 / (n - 1) as f64 }).collect())
}

pub(crate) fn face(w: [f64; 3], rhs: f64) -> HalfSpace {
    HalfSpace::new(w, rhs)
}

pub(crate) const R1: [f64; 3] = [1.0, 0.0, 0.0];
pub(crate) const R2: [f64; 3] = [0.0, 1.0, 0.0];
pub(crate) const R3: [f64; 3] = [0.0, 0.0, 1.0];
pub(crate) const R12: [f64; 3] = [1.0, 1.0, 0.0];
pub(crate) const R13: [f64; 3] = [1.0, 0.0, 1.0];
pub(crate) const R23: [f64; 3] = [0.0, 1.0, 1.0];
pub(crate) const R123: [f64; 3] = [1.0, 1.0, 1.0];

/// Smallest fraction `x` with `½log2(1 + x·p) >= rate`.
pub(crate) fn fraction_for_rate(rate: f64, p: f64) -> f64 {
    ((2f64).powf(2.0 * rate.max(0.0)) - 1.0) / p
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_includes_both_ends() {
        assert_eq!(unit_grid(3).unwrap(), vec![0.0, 0.5, 1.0]);
        assert_eq!(unit_grid(101).unwrap().len(), 101);
        assert!(unit_grid(1).is_err());
    }

    #[test]
    fn fraction_inverts_capacity() {
        let r = crate::gauss_cap(0.3 * 5.0);
        assert!((fraction_for_rate(r, 5.0) - 0.3).abs() < 1e-14);
    }
}
