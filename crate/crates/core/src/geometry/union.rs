//! Finite unions of polytopes indexed by a swept parameter.

use serde::Serialize;

use super::{Polytope3, RegionJson};
use crate::RatePoint;

#[derive(Debug, Clone, PartialEq)]
pub struct UnionSlice {
    /// Parameter values in the order of [`RegionUnion::param_names`].
    pub params: Vec<f64>,
    pub region: Polytope3,
}

/// A union of slices, e.g. one polytope per grid value of a power split.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionUnion {
    param_names: Vec<String>,
    slices: Vec<UnionSlice>,
}

#[derive(Serialize)]
struct SliceJson<'a> {
    params: std::collections::BTreeMap<&'a str, f64>,
    #[serde(flatten)]
    region: RegionJson,
}

impl RegionUnion {
    /// Slices are sorted lexicographically by parameter values.
    pub fn new<S: Into<String>>(param_names: impl IntoIterator<Item = S>, mut slices: Vec<UnionSlice>) -> Self {
        slices.sort_by(|x, y| {
            x.params.iter().zip(&y.params).map(|(a, b)| a.total_cmp(b)).find(|o| o.is_ne()).unwrap_or(std::cmp::Ordering::Equal)
        });
        RegionUnion { param_names: param_names.into_iter().map(Into::into).collect(), slices }
    }

    pub fn param_names(&self) -> &[String] {
        &self.param_names
    }

    pub fn slices(&self) -> &[UnionSlice] {
        &self.slices
    }

    pub fn len(&self) -> usize {
        self.slices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slices.is_empty()
    }

    /// The first slice containing `r`, if any.
    pub fn find(&self, r: RatePoint, tol: f64) -> Option<&UnionSlice> {
        self.slices.iter().find(|s| s.region.contains_point(r, tol))
    }

    pub fn contains_point(&self, r: RatePoint, tol: f64) -> bool {
        self.find(r, tol).is_some()
    }

    /// Every vertex of `inner` lies in some slice. Sufficient (not necessary)
    /// for containment of `inner` in the union when the union is convex.
    pub fn contains_vertices_of(&self, inner: &Polytope3, tol: f64) -> bool {
        inner.vertices().into_iter().all(|v| self.contains_point(v, tol))
    }

    /// JSON array of slices, each `{"params":{..},"halfspaces":..,"vertices":..}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let slices: Vec<SliceJson> = self
            .slices
            .iter()
            .map(|s| SliceJson {
                params: self.param_names.iter().map(String::as_str).zip(s.params.iter().copied()).collect(),
                region: s.region.to_json(),
            })
            .collect();
        serde_json::to_value(slices).expect("plain data serializes")
    }
}

/// `true` iff `r` belongs to at least one slice of `u`.
pub fn union_membership(u: &RegionUnion, r: RatePoint, tol: f64) -> bool {
    u.contains_point(r, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn staircase() -> RegionUnion {
        let slices = [(0.5, [2.0, 1.0, 1.0]), (0.0, [1.0, 2.0, 1.0])]
            .into_iter()
            .map(|(t, b)| UnionSlice { params: vec![t], region: Polytope3::boxed(b).unwrap() })
            .collect();
        RegionUnion::new(["t"], slices)
    }

    #[test]
    fn slices_are_sorted() {
        let u = staircase();
        assert_eq!(u.slices()[0].params, vec![0.0]);
        assert_eq!(u.len(), 2);
    }

    #[test]
    fn membership_needs_one_slice() {
        let u = staircase();
        assert!(union_membership(&u, RatePoint::new(1.9, 0.5, 0.5), 0.0));
        assert_eq!(u.find(RatePoint::new(0.5, 1.9, 0.5), 0.0).unwrap().params, vec![0.0]);
        assert!(!u.contains_point(RatePoint::new(1.5, 1.5, 0.5), 1e-9));
        assert!(!u.contains_point(RatePoint::new(5.0, 5.0, 5.0), 1e-9));
    }

    #[test]
    fn json_carries_parameters() {
        let v = staircase().to_json_value();
        assert_eq!(v[1]["params"]["t"], 0.5);
        assert_eq!(v[0]["vertices"].as_array().unwrap().len(), 8);
    }
}
