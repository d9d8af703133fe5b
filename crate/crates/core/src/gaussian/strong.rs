//! Strong and very strong interference: outer bounds, capacity regions and
//! the boundary line segment.

use serde::Serialize;

use super::{face, R1, R12, R13, R2, R23, R3};
use crate::{gauss_cap as c, Error, GaussianMazic, Polytope3, RatePoint, Result, EPS_CMP};

fn mac_and_links(ch: &GaussianMazic) -> Vec<crate::HalfSpace> {
    let GaussianMazic { p1, p2, p3, .. } = *ch;
    vec![face(R1, c(p1)), face(R2, c(p2)), face(R3, c(p3)), face(R12, c(p1 + p2))]
}

/// Outer bound for `a, b >= 1`: single-rate and MAC bounds plus both
/// receiver-2 pair sums. There is no triple-sum face.
pub fn strong_outer(ch: &GaussianMazic) -> Result<Polytope3> {
    ch.validate()?;
    if ch.a < 1.0 || ch.b < 1.0 {
        return Err(Error::precondition(format!("strong outer bound needs a, b >= 1 (a = {}, b = {})", ch.a, ch.b)));
    }
    let mut hs = mac_and_links(ch);
    hs.push(face(R23, c(ch.b * ch.p2 + ch.p3)));
    hs.push(face(R13, c(ch.a * ch.p1 + ch.p3)));
    Polytope3::new(hs)
}

/// Outer bound for `1 <= a <= 1 + P3`: the strong bound without the
/// `R2 + R3` face.
pub fn one_strong_outer(ch: &GaussianMazic) -> Result<Polytope3> {
    ch.validate()?;
    if !(1.0..=1.0 + ch.p3).contains(&ch.a) {
        return Err(Error::precondition(format!("one-strong outer bound needs 1 <= a <= 1 + P3 (a = {}, P3 = {})", ch.a, ch.p3)));
    }
    let mut hs = mac_and_links(ch);
    hs.push(face(R13, c(ch.a * ch.p1 + ch.p3)));
    Polytope3::new(hs)
}

/// Capacity region for `a > 1`, `b > 1 + aP1 + P3`.
pub fn strong_capacity_b_large(ch: &GaussianMazic) -> Result<Polytope3> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p3, .. } = *ch;
    if !(a > 1.0 && b > 1.0 + a * p1 + p3) {
        return Err(Error::precondition(format!("needs a > 1 and b > 1 + aP1 + P3 (a = {a}, b = {b}, 1 + aP1 + P3 = {})", 1.0 + a * p1 + p3)));
    }
    let mut hs = mac_and_links(ch);
    hs.push(face(R13, c(a * p1 + p3)));
    Polytope3::new(hs)
}

/// Capacity region for `a, b >= 1 + P3`: receiver 2 sees no interference cost.
pub fn very_strong_capacity(ch: &GaussianMazic) -> Result<Polytope3> {
    ch.validate()?;
    if ch.a < 1.0 + ch.p3 || ch.b < 1.0 + ch.p3 {
        return Err(Error::precondition(format!("very strong interference needs a, b >= 1 + P3 (a = {}, b = {}, P3 = {})", ch.a, ch.b, ch.p3)));
    }
    Polytope3::new(mac_and_links(ch))
}

/// A line segment on the capacity boundary where `R1 + R2` and `R1 + R3`
/// both meet their outer bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SegmentResult {
    pub endpoint_low: RatePoint,
    pub endpoint_high: RatePoint,
    pub valid: bool,
    /// `1 <= a <= 1 + P3`.
    pub a_in_range: bool,
    /// `b >= (1 + aP1 + P3)/(1 + P1)`.
    pub b_condition: bool,
    pub b_threshold: f64,
    /// The high endpoint respects the single-user bounds on `R2` and `R3`
    /// only for `b <= b_ceiling`.
    pub b_below_ceiling: bool,
    pub b_ceiling: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<&'static str>,
}

/// Endpoints of the boundary segment, in closed form, and whether the
/// segment conditions hold. Precondition failures are reported through
/// `valid` and `reason` rather than as errors.
pub fn boundary_segment(ch: &GaussianMazic) -> Result<SegmentResult> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    let threshold = (1.0 + a * p1 + p3) / (1.0 + p1);
    let a_in_range = (1.0..=1.0 + p3).contains(&a);
    let b_condition = b >= threshold;
    let ceiling = (1.0 + a * p1 + p3).min(1.0 + p3 + p1 * (1.0 + p3 - a) / p2);
    let b_below_ceiling = b <= ceiling;

    // Receiver 2 decodes user 2 first, then users 1 and 3 jointly, which puts
    // R1 + R3 on its outer face.
    let endpoint_low = RatePoint::new(c(p1), c(p2 / (1.0 + p1)), 0.5 * ((1.0 + a * p1 + p3) / (1.0 + p1)).log2());
    let r2_high = c(b * p2 / (1.0 + a * p1 + p3));
    let endpoint_high = RatePoint::new(
        c(p1 + p2) - r2_high,
        r2_high,
        0.5 * ((1.0 + a * p1 + b * p2 + p3) / (1.0 + p1 + p2)).log2(),
    );

    let reason = if !a_in_range {
        Some("a outside [1, 1 + P3]")
    } else if !b_condition {
        Some("b below (1 + aP1 + P3)/(1 + P1)")
    } else if !b_below_ceiling {
        Some("b above min(1 + aP1 + P3, 1 + P3 + P1(1 + P3 - a)/P2): high endpoint exceeds a single-user rate")
    } else {
        None
    };
    Ok(SegmentResult {
        endpoint_low,
        endpoint_high,
        valid: reason.is_none(),
        a_in_range,
        b_condition,
        b_threshold: threshold,
        b_below_ceiling,
        b_ceiling: ceiling,
        reason,
    })
}

impl SegmentResult {
    /// Largest deviation of either endpoint from the two defining planes.
    pub fn line_residual(&self, ch: &GaussianMazic) -> f64 {
        let s12 = c(ch.p1 + ch.p2);
        let s13 = c(ch.a * ch.p1 + ch.p3);
        [self.endpoint_low, self.endpoint_high]
            .iter()
            .flat_map(|p| [(p.r1 + p.r2 - s12).abs(), (p.r1 + p.r3 - s13).abs()])
            .fold(0.0, f64::max)
    }

    /// Both endpoints lie on the line within [`EPS_CMP`].
    pub fn on_line(&self, ch: &GaussianMazic) -> bool {
        self.line_residual(ch) <= EPS_CMP
    }
}
