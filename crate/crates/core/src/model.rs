//! Channel parameters, rate-space primitives and regime classification.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Normalized Gaussian MAZIC:
///
/// ```text
/// Y1 = X1 + X2 + Z1
/// Y2 = √a·X1 + √b·X2 + X3 + Z2
/// ```
///
/// with unit-variance noise and average power limits `p1`, `p2`, `p3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GaussianMazic {
    pub a: f64,
    pub b: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
}

impl GaussianMazic {
    pub fn new(a: f64, b: f64, p1: f64, p2: f64, p3: f64) -> Result<Self> {
        let ch = GaussianMazic { a, b, p1, p2, p3 };
        ch.validate()?;
        Ok(ch)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a", self.a), ("b", self.b)] {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::invalid(format!("gain {name} must be finite and >= 0, got {v}")));
            }
        }
        for (name, v) in [("p1", self.p1), ("p2", self.p2), ("p3", self.p3)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::invalid(format!("power {name} must be finite and > 0, got {v}")));
            }
        }
        Ok(())
    }

    /// Swap the roles of transmitters 1 and 2.
    pub fn swapped(&self) -> Self {
        GaussianMazic { a: self.b, b: self.a, p1: self.p2, p2: self.p1, p3: self.p3 }
    }

    pub fn has_zero_gain(&self) -> bool {
        self.a == 0.0 || self.b == 0.0
    }
}

/// A rate triple `(R1, R2, R3)` in bits per channel use.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RatePoint {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

impl RatePoint {
    pub const ORIGIN: RatePoint = RatePoint { r1: 0.0, r2: 0.0, r3: 0.0 };

    pub fn new(r1: f64, r2: f64, r3: f64) -> Self {
        RatePoint { r1, r2, r3 }
    }

    pub fn from_array(v: [f64; 3]) -> Self {
        RatePoint { r1: v[0], r2: v[1], r3: v[2] }
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.r1, self.r2, self.r3]
    }

    pub fn sum(self) -> f64 {
        self.r1 + self.r2 + self.r3
    }

    pub fn is_valid(self) -> bool {
        self.to_array().iter().all(|v| v.is_finite() && *v >= 0.0)
    }
}

/// Power fractions for rate splitting.
///
/// `alpha` (resp. `beta`) is the share of user 1's (resp. user 2's) power
/// carried by the private codeword that only receiver 1 decodes; the rest
/// carries the common message that receiver 2 decodes as well. `alpha = beta
/// = 0` is the no-split scheme.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitParams {
    pub alpha: f64,
    pub beta: f64,
}

impl SplitParams {
    pub const NO_SPLIT: SplitParams = SplitParams { alpha: 0.0, beta: 0.0 };

    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        for (name, v) in [("alpha", alpha), ("beta", beta)] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::invalid(format!("{name} must lie in [0, 1], got {v}")));
            }
        }
        Ok(SplitParams { alpha, beta })
    }

    pub fn alpha_bar(&self) -> f64 {
        1.0 - self.alpha
    }

    pub fn beta_bar(&self) -> f64 {
        1.0 - self.beta
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeTag {
    Weak,
    Mixed,
    Strong,
    VeryStrong,
    OneStrongOneVeryStrong,
}

/// Which sub-conditions held when classifying.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RegimeDetail {
    /// `1 <= a <= 1 + P3`, the one-strong-link condition.
    pub a_one_strong: bool,
    /// `b >= (1 + aP1 + P3)/(1 + P1)`, the boundary-segment condition.
    pub segment_condition: bool,
    /// `b > 1 + aP1 + P3`.
    pub b_exceeds_sum: bool,
    /// Mirror of `b_exceeds_sum` with users swapped: `a > 1 + bP2 + P3`.
    pub a_exceeds_sum: bool,
    /// `a == 1` or `b == 1`; ties resolve toward the stronger regime.
    pub unit_gain_tie: bool,
    pub zero_gain: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regime {
    pub tag: RegimeTag,
    pub detail: RegimeDetail,
}

/// Classify a Gaussian channel by its interference gains.
///
/// Only the gain conditions are used. For `a, b >= 1` the third single-letter
/// strong-interference inequality can still fail for some inputs, so a
/// `Strong` tag does not assert it.
pub fn classify(ch: &GaussianMazic) -> Result<Regime> {
    ch.validate()?;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;

    let detail = RegimeDetail {
        a_one_strong: (1.0..=1.0 + p3).contains(&a),
        segment_condition: b >= (1.0 + a * p1 + p3) / (1.0 + p1),
        b_exceeds_sum: b > 1.0 + a * p1 + p3,
        a_exceeds_sum: a > 1.0 + b * p2 + p3,
        unit_gain_tie: a == 1.0 || b == 1.0,
        zero_gain: ch.has_zero_gain(),
    };

    let tag = if a >= 1.0 + p3 && b >= 1.0 + p3 {
        RegimeTag::VeryStrong
    } else if a >= 1.0 && b >= 1.0 {
        if (a > 1.0 && detail.b_exceeds_sum) || (b > 1.0 && detail.a_exceeds_sum) {
            RegimeTag::OneStrongOneVeryStrong
        } else {
            RegimeTag::Strong
        }
    } else if a >= 1.0 || b >= 1.0 {
        RegimeTag::Mixed
    } else {
        RegimeTag::Weak
    };

    Ok(Regime { tag, detail })
}

/// Random channel generators used by the verification suites and tests.
pub mod sample {
    use rand::Rng;

    use super::GaussianMazic;

    fn powers<R: Rng + ?Sized>(rng: &mut R) -> (f64, f64, f64) {
        (rng.gen_range(0.2..10.0), rng.gen_range(0.2..10.0), rng.gen_range(0.2..10.0))
    }

    /// Any valid channel with gains in `(0, 12)`.
    pub fn any<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        GaussianMazic { a: rng.gen_range(0.01..12.0), b: rng.gen_range(0.01..12.0), p1, p2, p3 }
    }

    /// `0 < a, b < 1`.
    pub fn weak<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        GaussianMazic { a: rng.gen_range(0.01..0.99), b: rng.gen_range(0.01..0.99), p1, p2, p3 }
    }

    /// `0 < a = b < 1`.
    pub fn weak_symmetric<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        let g = rng.gen_range(0.01..0.99);
        GaussianMazic { a: g, b: g, p1, p2, p3 }
    }

    /// `0 < a < b < 1`.
    pub fn weak_ordered<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        let x: f64 = rng.gen_range(0.01..0.99);
        let y: f64 = rng.gen_range(0.01..0.99);
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        let b = if b - a < 1e-3 { (a + 1e-3).min(0.999) } else { b };
        GaussianMazic { a, b, p1, p2, p3 }
    }

    /// `a < 1 <= b`.
    pub fn mixed<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        GaussianMazic { a: rng.gen_range(0.01..0.99), b: rng.gen_range(1.0..12.0), p1, p2, p3 }
    }

    /// `a, b >= 1`.
    pub fn strong<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        GaussianMazic { a: rng.gen_range(1.0..12.0), b: rng.gen_range(1.0..12.0), p1, p2, p3 }
    }

    /// `a, b >= 1 + P3`.
    pub fn very_strong<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        let a = (1.0 + p3) * rng.gen_range(1.0..3.0);
        let b = (1.0 + p3) * rng.gen_range(1.0..3.0);
        GaussianMazic { a, b, p1, p2, p3 }
    }

    /// `1 < a <= 1 + P3` and `b > 1 + aP1 + P3`.
    pub fn b_large<R: Rng + ?Sized>(rng: &mut R) -> GaussianMazic {
        let (p1, p2, p3) = powers(rng);
        let a = 1.0 + p3 * rng.gen_range(0.01..1.0);
        let b = (1.0 + a * p1 + p3) * rng.gen_range(1.01..3.0);
        GaussianMazic { a, b, p1, p2, p3 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: f64, b: f64, p1: f64, p2: f64, p3: f64) -> GaussianMazic {
        GaussianMazic::new(a, b, p1, p2, p3).unwrap()
    }

    #[test]
    fn very_strong_when_both_gains_clear_one_plus_p3() {
        let r = classify(&ch(2.0, 2.0, 1.0, 4.0, 0.5)).unwrap();
        assert_eq!(r.tag, RegimeTag::VeryStrong);
    }

    #[test]
    fn reference_instance_is_strong_with_segment_condition() {
        let r = classify(&ch(1.2, 3.0, 2.0, 3.0, 2.0)).unwrap();
        assert_eq!(r.tag, RegimeTag::Strong);
        assert!(r.detail.a_one_strong);
        assert!(r.detail.segment_condition);
        assert!(!r.detail.b_exceeds_sum);
    }

    #[test]
    fn mixed_when_exactly_one_gain_below_one() {
        assert_eq!(classify(&ch(0.5, 2.0, 1.0, 1.0, 1.0)).unwrap().tag, RegimeTag::Mixed);
        assert_eq!(classify(&ch(2.0, 0.5, 1.0, 1.0, 1.0)).unwrap().tag, RegimeTag::Mixed);
    }

    #[test]
    fn unit_gains_resolve_to_stronger_regime() {
        let r = classify(&ch(1.0, 1.0, 1.0, 1.0, 1.0)).unwrap();
        assert_eq!(r.tag, RegimeTag::Strong);
        assert!(r.detail.unit_gain_tie);
        assert_eq!(classify(&ch(1.0, 0.3, 1.0, 1.0, 1.0)).unwrap().tag, RegimeTag::Mixed);
    }

    #[test]
    fn zero_gain_is_flagged() {
        let r = classify(&ch(0.0, 0.8, 3.0, 2.0, 1.0)).unwrap();
        assert_eq!(r.tag, RegimeTag::Weak);
        assert!(r.detail.zero_gain);
    }

    #[test]
    fn b_large_is_one_strong_one_very_strong() {
        let r = classify(&ch(1.5, 8.0, 1.0, 1.0, 1.0)).unwrap();
        assert_eq!(r.tag, RegimeTag::OneStrongOneVeryStrong);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(GaussianMazic::new(-0.1, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(GaussianMazic::new(1.0, 1.0, 0.0, 1.0, 1.0).is_err());
        assert!(GaussianMazic::new(f64::NAN, 1.0, 1.0, 1.0, 1.0).is_err());
        assert!(GaussianMazic::new(1.0, 1.0, 1.0, f64::INFINITY, 1.0).is_err());
        assert!(SplitParams::new(1.2, 0.0).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn channel() -> impl Strategy<Value = GaussianMazic> {
            (0.0..15.0f64, 0.0..15.0f64, 0.01..20.0f64, 0.01..20.0f64, 0.01..20.0f64)
                .prop_map(|(a, b, p1, p2, p3)| GaussianMazic { a, b, p1, p2, p3 })
        }

        proptest! {
            #[test]
            fn classify_is_symmetric_under_user_swap(c in channel()) {
                // Every tag is invariant under relabelling users 1 and 2.
                let r = classify(&c).unwrap();
                let s = classify(&c.swapped()).unwrap();
                prop_assert_eq!(r.tag, s.tag);
            }

            #[test]
            fn very_strong_implies_strong_gains(c in channel()) {
                let r = classify(&c).unwrap();
                if r.tag == RegimeTag::VeryStrong {
                    prop_assert!(c.a >= 1.0 && c.b >= 1.0);
                }
            }

            #[test]
            fn classify_is_deterministic(c in channel()) {
                prop_assert_eq!(classify(&c).unwrap(), classify(&c).unwrap());
            }
        }
    }
}
