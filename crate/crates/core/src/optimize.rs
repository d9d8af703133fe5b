//! Bounded 1-D minimization.

use crate::EPS_CMP;

const SCAN_POINTS: usize = 10_001;
const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search on `[lo, hi]` down to bracket width `tol`.
fn golden<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64) {
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    while hi - lo > tol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    let mut best = if f1 <= f2 { (x1, f1) } else { (x2, f2) };
    for x in [lo, hi] {
        let fx = f(x);
        if fx < best.1 {
            best = (x, fx);
        }
    }
    best
}

/// Uniform scan; returns the index of the best sample as well.
fn scan<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> (usize, f64, f64) {
    let step = (hi - lo) / (SCAN_POINTS - 1) as f64;
    let mut best = (0, lo, f(lo));
    for i in 1..SCAN_POINTS {
        let x = if i == SCAN_POINTS - 1 { hi } else { lo + step * i as f64 };
        let fx = f(x);
        if fx < best.2 {
            best = (i, x, fx);
        }
    }
    best
}

/// One parabolic step through three points around `x`; kept only if it improves.
fn polish<F: Fn(f64) -> f64>(f: &F, x: f64, fx: f64, h: f64, lo: f64, hi: f64) -> (f64, f64) {
    let (a, c) = ((x - h).max(lo), (x + h).min(hi));
    if !(a < x && x < c) {
        return (x, fx);
    }
    let (fa, fc) = (f(a), f(c));
    let num = (x - a).powi(2) * (fx - fc) - (x - c).powi(2) * (fx - fa);
    let den = (x - a) * (fx - fc) - (x - c) * (fx - fa);
    if den.abs() <= f64::MIN_POSITIVE {
        return (x, fx);
    }
    let v = (x - 0.5 * num / den).clamp(lo, hi);
    let fv = f(v);
    if fv < fx {
        (v, fv)
    } else {
        (x, fx)
    }
}

/// Minimize `f` over `[lo, hi]`: golden section to `tol`, cross-checked
/// against a 10,001-point scan, then a parabolic polish.
pub(crate) fn minimize<F: Fn(f64) -> f64>(f: F, lo: f64, hi: f64, tol: f64) -> (f64, f64) {
    let (mut x, mut fx) = golden(&f, lo, hi, tol);
    let (i, xs, fs) = scan(&f, lo, hi);
    if fs < fx - EPS_CMP {
        let step = (hi - lo) / (SCAN_POINTS - 1) as f64;
        let a = (lo + step * i.saturating_sub(1) as f64).max(lo);
        let b = (lo + step * (i + 1) as f64).min(hi);
        (x, fx) = golden(&f, a, b, tol);
        if fs < fx {
            (x, fx) = (xs, fs);
        }
    }
    polish(&f, x, fx, tol.max(1e-8), lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_interior_quadratic_minimum() {
        let (x, fx) = minimize(|x| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 1e-10);
        assert!((x - 0.3).abs() < 1e-6);
        assert!((fx - 1.0).abs() < 1e-12);
    }

    #[test]
    fn finds_boundary_minimum() {
        let (x, _) = minimize(|x| -x, 0.0, 2.0, 1e-10);
        assert!((x - 2.0).abs() < 1e-9);
    }

    #[test]
    fn scan_rescues_multimodal_objective() {
        // Golden section lands in the shallow basin near 0.8; the deep one is near 0.1.
        let f = |x: f64| -(-((x - 0.1) / 0.01).powi(2)).exp() * 2.0 - (-((x - 0.8) / 0.2).powi(2)).exp();
        let (x, _) = minimize(f, 0.0, 1.0, 1e-10);
        assert!((x - 0.1).abs() < 1e-3, "x = {x}");
    }
}
