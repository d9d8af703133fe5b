//! Rate regions of the multiple-access Z-interference channel (MAZIC).
//!
//! Two transmitters form a multiple-access channel into receiver 1 while also
//! interfering, with power gains `a` and `b`, at receiver 2, which serves a
//! third transmitter. This crate computes the achievable regions, outer bounds
//! and sum-rate results for the Gaussian channel, evaluates the same regions
//! for small discrete memoryless channels, and replays the random-coding rate
//! constraints through Fourier–Motzkin elimination to cross-check the closed
//! forms.
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`model`] | channel parameters, rate triples, regime classification |
//! | [`geometry`] | 3-D polytopes, hulls, redundancy removal, Fourier–Motzkin |
//! | [`gaussian`] | closed-form Gaussian inner/outer bounds and sum rates |
//! | [`dmc`] | discrete channels: mutual information, regions, condition checks |
//! | [`ratesystem`] | split-rate constraint system and its projection |
//! | [`json`] | 17-significant-digit JSON output |
//!
//! All rates are in bits per channel use.

pub mod dmc;
pub mod gaussian;
pub mod geometry;
pub mod json;
pub mod model;
pub mod ratesystem;

mod error;
mod optimize;

pub use error::{Error, Result};
pub use geometry::{HalfSpace, IneqSystem, Polytope3, RegionUnion};
pub use model::{classify, GaussianMazic, RatePoint, Regime, RegimeTag, SplitParams};

/// Tolerance for plane intersection, feasibility filtering and vertex dedup.
pub const EPS_GEO: f64 = 1e-9;

/// Tolerance for comparing regions and rates computed along different routes.
pub const EPS_CMP: f64 = 1e-6;

/// `½·log2(1 + snr)`, the Gaussian capacity of a unit-noise link.
#[inline]
pub fn gauss_cap(snr: f64) -> f64 {
    0.5 * (1.0 + snr).log2()
}
