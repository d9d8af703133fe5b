//! Sum-rate results under weak interference.

use serde::Serialize;

use crate::optimize::minimize;
use crate::{gauss_cap as c, Error, GaussianMazic, Result, EPS_CMP};

/// Sum capacity when `a = b <= 1`: users 1 and 2 act as one transmitter and
/// receiver 2 treats their signal as noise.
pub fn sum_capacity_symmetric(ch: &GaussianMazic) -> Result<f64> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    if (a - b).abs() > 1e-12 * a.max(1.0) || b > 1.0 {
        return Err(Error::precondition(format!("needs a = b <= 1 (a = {a}, b = {b})")));
    }
    Ok(c(p1 + p2) + c(p3 / (1.0 + a * p1 + b * p2)))
}

/// Upper bound value with the noise variance that attains it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SumRateBound {
    pub value_bits: f64,
    #[serde(rename = "argmin")]
    pub argmin_sigma2: f64,
}

/// Lower clearance above `a` for the `sigma2` search interval.
const SIGMA_GAP: f64 = 1e-9;

/// Argument of the first logarithm of the sum-rate objective, expanded as
/// `(P1 + P2 + 1)(σ² - a) + (P1 + 1)P2(√a - √b)²` to avoid cancellation.
fn first_log_arg(ch: &GaussianMazic, sigma2: f64) -> f64 {
    let GaussianMazic { a, b, p1, p2, .. } = *ch;
    let d = a.sqrt() - b.sqrt();
    (p1 + p2 + 1.0) * (sigma2 - a) + (p1 + 1.0) * p2 * d * d
}

/// The side-information sum-rate bound at auxiliary noise variance `sigma2`
/// (correlation fixed so that `ρσ = √a`). NaN outside the domain.
pub fn sumrate_objective(ch: &GaussianMazic, sigma2: f64) -> f64 {
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    let s = a * p1 + b * p2;
    let d = a.sqrt() - b.sqrt();
    // First log minus the log of (σ² - a), merged into one ratio.
    let ratio = (p1 + p2 + 1.0) + (p1 + 1.0) * p2 * d * d / (sigma2 - a);
    0.5 * ratio.log2() - 0.5 * (s + 1.0).log2() + 0.5 * (s + p3 + 1.0).log2()
}

/// Minimize [`sumrate_objective`] over `sigma2 ∈ (a, 1]`.
pub fn sum_rate_upper_theorem6(ch: &GaussianMazic) -> Result<SumRateBound> {
    ch.validate()?;
    let GaussianMazic { a, b, .. } = *ch;
    if a > b || b > 1.0 {
        return Err(Error::precondition(format!("needs 0 <= a <= b <= 1 (a = {a}, b = {b})")));
    }
    let lo = a + SIGMA_GAP;
    if lo >= 1.0 {
        return Err(Error::precondition(format!("needs a < 1 for a nonempty noise-variance interval (a = {a})")));
    }
    // The first argument is affine in sigma2, so checking both ends covers the interval.
    for s in [lo, 1.0] {
        let v = first_log_arg(ch, s);
        if v.is_nan() || v <= 0.0 {
            return Err(Error::DegenerateObjective(format!("first log argument {v} at sigma2 = {s}")));
        }
    }
    let (x, fx) = minimize(|s| sumrate_objective(ch, s), lo, 1.0, 1e-10);
    Ok(SumRateBound { value_bits: fx, argmin_sigma2: x })
}

/// Sum capacity at the special power `P1 = (1 - √ab)/(√ab - a)` with
/// `P3 >= √(b/a) - √ab`; `None` when the powers do not match.
pub fn sum_capacity_special(ch: &GaussianMazic) -> Result<Option<f64>> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    let g = (a * b).sqrt();
    if !(a > 0.0 && a <= b && b <= 1.0) || g <= a {
        return Err(Error::precondition(format!("needs 0 < a <= b <= 1 with √ab > a (a = {a}, b = {b})")));
    }
    let p1_req = (1.0 - g) / (g - a);
    let p3_min = (b / a).sqrt() - g;
    if (p1 - p1_req).abs() <= EPS_CMP && p3 >= p3_min - EPS_CMP {
        Ok(Some(c(p1) + c((b * p2 + p3) / (1.0 + a * p1))))
    } else {
        Ok(None)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProfileRow {
    pub p1: f64,
    pub f_bits: f64,
    pub envelope_bits: f64,
    pub gap_bits: f64,
}

/// The achievable sum rate `f` as a function of `P1`, and its upper concave
/// envelope (what time sharing between power levels reaches).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SumRateProfile {
    /// `(1 - b)/(b - a)`, where the two schemes swap.
    pub lower_break: f64,
    /// `(1 - √ab)/(√ab - a)`, the end of the second branch.
    pub upper_break: f64,
    pub rows: Vec<ProfileRow>,
    pub max_gap: f64,
    pub argmax_gap_p1: f64,
}

impl SumRateProfile {
    /// Rows where the envelope exceeds `f` by more than `tol`.
    pub fn gaps_above(&self, tol: f64) -> impl Iterator<Item = &ProfileRow> {
        self.rows.iter().filter(move |r| r.gap_bits > tol)
    }
}

fn breakpoints(a: f64, b: f64) -> (f64, f64) {
    let g = (a * b).sqrt();
    ((1.0 - b) / (b - a), (1.0 - g) / (g - a))
}

/// `f(P1)` for the channel's `a, b, P2, P3`: treat user 1 and 2 jointly at
/// receiver 1 with interference as noise at receiver 2 up to the lower
/// breakpoint, then decode user 2 at receiver 2 as well.
fn profile_f(ch: &GaussianMazic, lower_break: f64, p1: f64) -> f64 {
    let GaussianMazic { a, b, p2, p3, .. } = *ch;
    if p1 <= lower_break {
        c(p1 + p2) + c(p3 / (1.0 + a * p1 + b * p2))
    } else {
        c(p1) + c((b * p2 + p3) / (1.0 + a * p1))
    }
}

/// Upper hull of points sorted by `x` (monotone chain).
fn upper_hull(pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut hull: Vec<(f64, f64)> = Vec::new();
    for &p in pts {
        while hull.len() >= 2 {
            let (o, q) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let turn = (q.0 - o.0) * (p.1 - o.1) - (q.1 - o.1) * (p.0 - o.0);
            if turn >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull
}

/// Sample `f` at `n` evenly spaced powers in `[lo, hi]` and compare with
/// its concave envelope. The channel's own `p1` is ignored.
pub fn weak_sumrate_profile(ch: &GaussianMazic, lo: f64, hi: f64, n: usize) -> Result<SumRateProfile> {
    ch.validate()?;
    let GaussianMazic { a, b, .. } = *ch;
    if !(0.0 < a && a < b && b <= 1.0) {
        return Err(Error::precondition(format!("needs 0 < a < b <= 1 (a = {a}, b = {b})")));
    }
    if n < 2 || !(0.0 <= lo && lo < hi && hi.is_finite()) {
        return Err(Error::invalid(format!("need n >= 2 and 0 <= lo < hi (n = {n}, lo = {lo}, hi = {hi})")));
    }
    let (lower_break, upper_break) = breakpoints(a, b);
    let step = (hi - lo) / (n - 1) as f64;
    let pts: Vec<(f64, f64)> = (0..n)
        .map(|i| {
            let p1 = if i == n - 1 { hi } else { lo + step * i as f64 };
            (p1, profile_f(ch, lower_break, p1))
        })
        .collect();
    let hull = upper_hull(&pts);

    let mut rows = Vec::with_capacity(n);
    let mut seg = 0;
    for &(p1, f) in &pts {
        while seg + 2 < hull.len() && hull[seg + 1].0 <= p1 {
            seg += 1;
        }
        let (x0, y0) = hull[seg];
        let (x1, y1) = hull[(seg + 1).min(hull.len() - 1)];
        let env = if x1 == x0 || p1 == x0 {
            y0
        } else if p1 == x1 {
            y1
        } else {
            y0 + (y1 - y0) * (p1 - x0) / (x1 - x0)
        };
        rows.push(ProfileRow { p1, f_bits: f, envelope_bits: env, gap_bits: env - f });
    }
    let (argmax_gap_p1, max_gap) =
        rows.iter().map(|r| (r.p1, r.gap_bits)).fold((lo, f64::NEG_INFINITY), |m, v| if v.1 > m.1 { v } else { m });
    Ok(SumRateProfile { lower_break, upper_break, rows, max_gap, argmax_gap_p1 })
}

/// [`weak_sumrate_profile`] over `[0, (1 - √ab)/(√ab - a)]`.
pub fn weak_sumrate_profile_default(ch: &GaussianMazic, n: usize) -> Result<SumRateProfile> {
    let GaussianMazic { a, b, .. } = *ch;
    if !(0.0 < a && a < b && b <= 1.0) {
        return Err(Error::precondition(format!("needs 0 < a < b <= 1 (a = {a}, b = {b})")));
    }
    weak_sumrate_profile(ch, 0.0, breakpoints(a, b).1, n)
}
