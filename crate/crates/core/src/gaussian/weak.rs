//! Weak interference (`a, b <= 1`) outer bound, and boundary points of the
//! channel with `a = 0`.

use serde::Serialize;

use super::{face, fraction_for_rate, unit_grid, R1, R12, R2, R3};
use crate::geometry::UnionSlice;
use crate::{gauss_cap as c, Error, GaussianMazic, Polytope3, RatePoint, RegionUnion, Result};

fn check_weak(ch: &GaussianMazic) -> Result<()> {
    ch.validate()?;
    if ch.a > 1.0 || ch.b > 1.0 {
        return Err(Error::precondition(format!("weak interference needs a, b <= 1 (a = {}, b = {})", ch.a, ch.b)));
    }
    Ok(())
}

fn r3_bound(gain: f64, p: f64, frac: f64, p3: f64) -> f64 {
    c((gain * (1.0 - frac) * p + p3) / (1.0 + gain * frac * p))
}

/// Outer-bound slice for one `(alpha, beta)`.
pub fn weak_outer_slice(ch: &GaussianMazic, alpha: f64, beta: f64) -> Result<Polytope3> {
    check_weak(ch)?;
    for (name, v) in [("alpha", alpha), ("beta", beta)] {
        if !(0.0..=1.0).contains(&v) {
            return Err(Error::invalid(format!("{name} must lie in [0, 1], got {v}")));
        }
    }
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    Polytope3::new([
        face(R1, c(alpha * p1)),
        face(R2, c(beta * p2)),
        face(R3, c(p3)),
        face(R3, r3_bound(a, p1, alpha, p3)),
        face(R3, r3_bound(b, p2, beta, p3)),
        face(R12, c(p1 + p2)),
    ])
}

/// Union of slices over the `n × n` grid in `(alpha, beta)`.
pub fn weak_outer(ch: &GaussianMazic, n: usize) -> Result<RegionUnion> {
    check_weak(ch)?;
    let grid = unit_grid(n)?;
    let mut slices = Vec::with_capacity(n * n);
    for &alpha in &grid {
        for &beta in &grid {
            slices.push(UnionSlice { params: vec![alpha, beta], region: weak_outer_slice(ch, alpha, beta)? });
        }
    }
    Ok(RegionUnion::new(["alpha", "beta"], slices))
}

/// Membership with `(alpha, beta)` ranging over all of `[0, 1]²`; both `R3`
/// bounds fall in their parameter, so the smallest admissible values win.
pub fn weak_outer_contains(ch: &GaussianMazic, r: RatePoint, tol: f64) -> Result<bool> {
    check_weak(ch)?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    let alpha = fraction_for_rate(r.r1, p1).clamp(0.0, 1.0);
    let beta = fraction_for_rate(r.r2, p2).clamp(0.0, 1.0);
    let r3_max = c(p3).min(r3_bound(a, p1, alpha, p3)).min(r3_bound(b, p2, beta, p3));
    Ok(r.r1 <= c(p1) + tol && r.r2 <= c(p2) + tol && r.r3 <= r3_max + tol && r.r1 + r.r2 <= c(p1 + p2) + tol)
}

/// A candidate boundary triple for the `a = 0` channel.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZicBoundaryPoint {
    pub point: RatePoint,
    pub valid: bool,
    /// `(1 + P3)/(1 + P1) <= b <= 1`.
    pub b_in_range: bool,
    pub p3_le_p1: bool,
    /// `R2 <= ½log(1 + bP2/(1 + P3))`: receiver 2 can decode user 2 while
    /// user 3 runs at full rate.
    pub r2_decodable: bool,
}

/// The triple obtained when user 2 sends a fraction `beta` of its power as a
/// second layer decoded after user 1, and user 3 runs at `½log(1 + P3)`.
pub fn zic_a0_boundary(ch: &GaussianMazic, beta: f64) -> Result<ZicBoundaryPoint> {
    ch.validate()?;
    if ch.a != 0.0 {
        return Err(Error::precondition(format!("needs a = 0 (a = {})", ch.a)));
    }
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::invalid(format!("beta must lie in [0, 1], got {beta}")));
    }
    let GaussianMazic { b, p1, p2, p3, .. } = *ch;
    let lower = (1.0 - beta) * p2;
    let point = RatePoint::new(c(p1 / (1.0 + lower)), c(lower) + c(beta * p2 / (1.0 + p1 + lower)), c(p3));
    let b_in_range = (1.0 + p3) / (1.0 + p1) <= b && b <= 1.0;
    let p3_le_p1 = p3 <= p1;
    let r2_decodable = point.r2 <= c(b * p2 / (1.0 + p3));
    Ok(ZicBoundaryPoint { point, valid: b_in_range && p3_le_p1 && r2_decodable, b_in_range, p3_le_p1, r2_decodable })
}
