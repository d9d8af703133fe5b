//! Mixed interference (`a <= 1 <= b`).

use super::{face, fraction_for_rate, unit_grid, R1, R12, R13, R123, R2, R23, R3};
use crate::geometry::UnionSlice;
use crate::{gauss_cap as c, Error, GaussianMazic, Polytope3, RatePoint, RegionUnion, Result};

fn check_mixed(ch: &GaussianMazic) -> Result<()> {
    ch.validate()?;
    if ch.a > 1.0 || ch.b < 1.0 {
        return Err(Error::precondition(format!("mixed interference needs a <= 1 <= b (a = {}, b = {})", ch.a, ch.b)));
    }
    Ok(())
}

/// `R3` bound at split `alpha` from the entropy power inequality step:
/// receiver 2 can only cancel the part of user 1's signal that receiver 1's
/// rate `½log(1 + αP1)` reveals.
fn r3_epi_bound(ch: &GaussianMazic, alpha: f64) -> f64 {
    c((ch.a * (1.0 - alpha) * ch.p1 + ch.p3) / (1.0 + ch.a * alpha * ch.p1))
}

/// The outer-bound slice for one value of `alpha`.
pub fn mixed_outer_slice(ch: &GaussianMazic, alpha: f64) -> Result<Polytope3> {
    check_mixed(ch)?;
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::invalid(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    let GaussianMazic { b, p1, p2, p3, .. } = *ch;
    Polytope3::new([
        face(R1, c(alpha * p1)),
        face(R2, c(p2)),
        face(R3, c(p3)),
        face(R3, r3_epi_bound(ch, alpha)),
        face(R12, c(p1 + p2)),
        face(R23, c(b * p2 + p3)),
    ])
}

/// Outer bound as a union of slices over an `n`-point grid in `alpha`.
pub fn mixed_outer(ch: &GaussianMazic, n: usize) -> Result<RegionUnion> {
    check_mixed(ch)?;
    let slices = unit_grid(n)?
        .into_iter()
        .map(|alpha| Ok(UnionSlice { params: vec![alpha], region: mixed_outer_slice(ch, alpha)? }))
        .collect::<Result<Vec<_>>>()?;
    Ok(RegionUnion::new(["alpha"], slices))
}

/// Membership in the outer bound with `alpha` ranging over all of `[0, 1]`.
///
/// The `R3` bound falls as `alpha` grows, so the best slice for `r` is the
/// smallest `alpha` admitting `r1`.
pub fn mixed_outer_contains(ch: &GaussianMazic, r: RatePoint, tol: f64) -> Result<bool> {
    check_mixed(ch)?;
    let GaussianMazic { b, p1, p2, p3, .. } = *ch;
    let alpha = fraction_for_rate(r.r1, p1).clamp(0.0, 1.0);
    Ok(r.r1 <= c(p1) + tol
        && r.r2 <= c(p2) + tol
        && r.r3 <= c(p3).min(r3_epi_bound(ch, alpha)) + tol
        && r.r1 + r.r2 <= c(p1 + p2) + tol
        && r.r2 + r.r3 <= c(b * p2 + p3) + tol)
}

/// Achievable region when receiver 2 can decode user 2 outright
/// (`b >= 1 + aP1 + P3`): only user 1 splits its power.
pub fn mixed_inner(ch: &GaussianMazic, alpha: f64) -> Result<Polytope3> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    if a > 1.0 || b < 1.0 + a * p1 + p3 {
        return Err(Error::precondition(format!("needs a <= 1 and b >= 1 + aP1 + P3 (a = {a}, b = {b})")));
    }
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::invalid(format!("alpha must lie in [0, 1], got {alpha}")));
    }
    let noise = 1.0 + a * alpha * p1;
    let shared = c((a * (1.0 - alpha) * p1 + p3) / noise);
    Polytope3::new([
        face(R1, c(p1)),
        face(R2, c(p2)),
        face(R3, c(p3 / noise)),
        face(R12, c(p1 + p2)),
        face(R13, c(alpha * p1) + shared),
        face(R123, c(alpha * p1 + p2) + shared),
    ])
}

/// Boundary point reached by decoding user 2's interference and treating
/// user 1's as noise; needs `a <= 1` and `b >= (1 + aP1 + P3)/(1 + P1)`.
pub fn mixed_corner_point(ch: &GaussianMazic) -> Result<RatePoint> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    if a > 1.0 || b < (1.0 + a * p1 + p3) / (1.0 + p1) {
        return Err(Error::precondition(format!("needs a <= 1 and b >= (1 + aP1 + P3)/(1 + P1) (a = {a}, b = {b})")));
    }
    Ok(RatePoint::new(c(p1), c(p2 / (1.0 + p1)), c(p3 / (1.0 + a * p1))))
}
