//! Polytopes in rate space.
//!
//! Every region handled here lives in the nonnegative octant of `(R1, R2, R3)`
//! and is described by at most a few dozen inequalities, so vertices are found
//! by intersecting triples of planes. To keep that cheap for long inequality
//! lists (Fourier–Motzkin output, hull facets) the enumeration runs as a
//! cutting loop: start from a bounded subset, and only re-enumerate when a new
//! inequality actually cuts off a current vertex.

mod fm;
mod hull;
mod union;

pub use fm::{fourier_motzkin, IneqRow, IneqSystem, Projection, FM_ROW_CAP};
pub use hull::hull_union;
pub use union::{union_membership, RegionUnion, UnionSlice};

use serde::{Deserialize, Serialize};

use crate::{Error, RatePoint, Result, EPS_GEO};

pub(crate) type Vec3 = [f64; 3];

#[inline]
pub(crate) fn dot(u: Vec3, v: Vec3) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

#[inline]
pub(crate) fn sub(u: Vec3, v: Vec3) -> Vec3 {
    [u[0] - v[0], u[1] - v[1], u[2] - v[2]]
}

#[inline]
pub(crate) fn cross(u: Vec3, v: Vec3) -> Vec3 {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

#[inline]
pub(crate) fn norm(u: Vec3) -> f64 {
    dot(u, u).sqrt()
}

/// The inequality `coef · r <= rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HalfSpace {
    pub coef: [f64; 3],
    pub rhs: f64,
}

impl HalfSpace {
    pub fn new(coef: [f64; 3], rhs: f64) -> Self {
        HalfSpace { coef, rhs }
    }

    /// `r_i >= 0`, written as `-r_i <= 0`.
    pub fn nonneg(axis: usize) -> Self {
        let mut coef = [0.0; 3];
        coef[axis] = -1.0;
        HalfSpace { coef, rhs: 0.0 }
    }

    /// `Σ weights_i · r_i <= rhs`.
    pub fn weighted(weights: [f64; 3], rhs: f64) -> Self {
        HalfSpace { coef: weights, rhs }
    }

    /// Signed violation `coef · r - rhs`; positive means outside.
    #[inline]
    pub fn excess(&self, r: Vec3) -> f64 {
        dot(self.coef, r) - self.rhs
    }

    pub fn contains(&self, r: RatePoint, tol: f64) -> bool {
        self.excess(r.to_array()) <= tol
    }

    fn is_nonneg(&self) -> bool {
        self.rhs == 0.0 && self.coef.iter().filter(|c| **c == -1.0).count() == 1 && self.coef.iter().filter(|c| **c == 0.0).count() == 2
    }

    /// Scaled so the normal has unit length; `None` for a zero normal.
    pub fn normalized(&self) -> Option<HalfSpace> {
        let n = norm(self.coef);
        if n <= f64::MIN_POSITIVE {
            return None;
        }
        Some(HalfSpace { coef: self.coef.map(|c| c / n), rhs: self.rhs / n })
    }
}

/// A bounded, nonempty polytope in rate space with its exact vertex set.
#[derive(Debug, Clone, PartialEq)]
pub struct Polytope3 {
    halfspaces: Vec<HalfSpace>,
    vertices: Vec<Vec3>,
}

/// Region JSON: `{"halfspaces":[{"coef":[..],"rhs":..}],"vertices":[[..]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RegionJson {
    pub halfspaces: Vec<HalfSpace>,
    #[serde(default)]
    pub vertices: Vec<[f64; 3]>,
}

impl Polytope3 {
    /// Build from inequalities; nonnegativity of all three rates is added
    /// when absent. Fails if the result is empty or unbounded.
    pub fn new(halfspaces: impl IntoIterator<Item = HalfSpace>) -> Result<Self> {
        let mut hs: Vec<HalfSpace> = Vec::new();
        for h in halfspaces {
            if h.coef.iter().chain(std::iter::once(&h.rhs)).any(|v| !v.is_finite()) {
                return Err(Error::invalid("non-finite halfspace coefficient"));
            }
            if h.coef.iter().all(|c| *c == 0.0) {
                if h.rhs < -EPS_GEO {
                    return Err(Error::Empty);
                }
                continue;
            }
            hs.push(h);
        }
        for axis in 0..3 {
            let nn = HalfSpace::nonneg(axis);
            if !hs.contains(&nn) {
                hs.insert(axis.min(hs.len()), nn);
            }
        }
        let vertices = enumerate_vertices(&hs)?;
        Ok(Polytope3 { halfspaces: hs, vertices })
    }

    /// Axis-aligned box `0 <= r_i <= upper_i`.
    pub fn boxed(upper: [f64; 3]) -> Result<Self> {
        Polytope3::new((0..3).map(|i| {
            let mut coef = [0.0; 3];
            coef[i] = 1.0;
            HalfSpace::new(coef, upper[i])
        }))
    }

    /// Trusted constructor for callers that already hold the exact vertex set.
    pub(crate) fn from_parts(halfspaces: Vec<HalfSpace>, vertices: Vec<Vec3>) -> Self {
        Polytope3 { halfspaces, vertices }
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    /// Halfspaces other than the three nonnegativity constraints.
    pub fn faces(&self) -> impl Iterator<Item = &HalfSpace> {
        self.halfspaces.iter().filter(|h| !h.is_nonneg())
    }

    pub fn vertex_arrays(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn vertices(&self) -> Vec<RatePoint> {
        self.vertices.iter().map(|v| RatePoint::from_array(*v)).collect()
    }

    pub fn contains_point(&self, r: RatePoint, tol: f64) -> bool {
        self.halfspaces.iter().all(|h| h.contains(r, tol))
    }

    /// Largest `w · r` over the region (attained at a vertex).
    pub fn support(&self, w: Vec3) -> (f64, RatePoint) {
        let mut best = (f64::NEG_INFINITY, RatePoint::ORIGIN);
        for v in &self.vertices {
            let s = dot(w, *v);
            if s > best.0 {
                best = (s, RatePoint::from_array(*v));
            }
        }
        best
    }

    pub fn max_sum_rate(&self) -> f64 {
        self.support([1.0, 1.0, 1.0]).0
    }

    /// The largest amount by which any vertex of `inner` violates a
    /// halfspace of `self`; `<= 0` means containment.
    pub fn max_excess_of(&self, inner: &Polytope3) -> f64 {
        inner
            .vertices
            .iter()
            .flat_map(|v| self.halfspaces.iter().map(move |h| h.excess(*v)))
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn contains_region(&self, inner: &Polytope3, tol: f64) -> bool {
        self.max_excess_of(inner) <= tol
    }

    /// Mutual containment within `tol`.
    pub fn region_eq(&self, other: &Polytope3, tol: f64) -> bool {
        self.contains_region(other, tol) && other.contains_region(self, tol)
    }

    /// Same point set, described without redundant inequalities.
    ///
    /// Nonnegativity is always retained. An inequality survives iff dropping
    /// it changes the vertex set.
    pub fn remove_redundant(&self) -> Polytope3 {
        let tight_tol = 1e-8;
        let verts = &self.vertices;

        // Syntactic duplicates: same unit normal, keep the tighter one.
        let mut kept: Vec<(HalfSpace, HalfSpace)> = Vec::new();
        for h in &self.halfspaces {
            let Some(n) = h.normalized() else { continue };
            match kept.iter_mut().find(|(_, k)| (0..3).all(|i| (k.coef[i] - n.coef[i]).abs() <= 1e-12)) {
                Some(slot) => {
                    if n.rhs < slot.1.rhs || h.is_nonneg() {
                        *slot = (*h, n);
                    }
                }
                None => kept.push((*h, n)),
            }
        }

        // Slack at every vertex means slack on the whole polytope.
        kept.retain(|(h, n)| h.is_nonneg() || verts.iter().any(|v| n.excess(*v).abs() <= tight_tol));

        let full_dim = affine_rank(verts) == 3;
        let mut i = 0;
        while i < kept.len() {
            let (h, n) = kept[i];
            if h.is_nonneg() {
                i += 1;
                continue;
            }
            if full_dim {
                let on_face: Vec<Vec3> =
                    verts.iter().copied().filter(|v| n.excess(*v).abs() <= tight_tol).collect();
                if affine_rank(&on_face) == 2 {
                    // A facet; never redundant.
                    i += 1;
                    continue;
                }
            }
            let trial: Vec<HalfSpace> = kept.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, (h, _))| *h).collect();
            let same = match enumerate_vertices(&trial) {
                Ok(tv) => same_vertex_set(&tv, verts, 1e-7),
                Err(_) => false,
            };
            if same {
                kept.remove(i);
            } else {
                i += 1;
            }
        }

        Polytope3 { halfspaces: kept.into_iter().map(|(h, _)| h).collect(), vertices: verts.clone() }
    }

    pub fn to_json(&self) -> RegionJson {
        RegionJson { halfspaces: self.halfspaces.clone(), vertices: self.vertices.clone() }
    }

    /// Rebuild from region JSON; the vertex list is recomputed, not trusted.
    pub fn from_json(json: &RegionJson) -> Result<Self> {
        Polytope3::new(json.halfspaces.iter().copied())
    }
}

/// Vertex list of the polytope, as rate points.
pub fn vertices(p: &Polytope3) -> Vec<RatePoint> {
    p.vertices()
}

pub fn contains_point(p: &Polytope3, r: RatePoint, tol: f64) -> bool {
    p.contains_point(r, tol)
}

pub fn contains_region(outer: &Polytope3, inner: &Polytope3, tol: f64) -> bool {
    outer.contains_region(inner, tol)
}

pub fn remove_redundant(p: &Polytope3) -> Polytope3 {
    p.remove_redundant()
}

/// Every point of `a` matches a point of `b` within `tol`, and vice versa.
pub fn same_vertex_set(a: &[Vec3], b: &[Vec3], tol: f64) -> bool {
    let close = |u: &Vec3, v: &Vec3| (0..3).all(|i| (u[i] - v[i]).abs() <= tol * (1.0 + u[i].abs()));
    a.iter().all(|u| b.iter().any(|v| close(u, v))) && b.iter().all(|v| a.iter().any(|u| close(u, v)))
}

/// Dimension of the affine hull of `pts` (`-1` for none).
pub(crate) fn affine_rank(pts: &[Vec3]) -> i32 {
    let Some(&p0) = pts.first() else { return -1 };
    let scale = pts.iter().flat_map(|p| p.iter()).fold(1.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-9 * scale;
    let Some(&p1) = pts.iter().max_by(|u, v| norm(sub(**u, p0)).total_cmp(&norm(sub(**v, p0)))) else {
        return 0;
    };
    let d1 = sub(p1, p0);
    if norm(d1) <= tol {
        return 0;
    }
    let u1 = d1.map(|c| c / norm(d1));
    let off_line = |p: &Vec3| norm(cross(u1, sub(*p, p0)));
    let p2 = *pts.iter().max_by(|u, v| off_line(u).total_cmp(&off_line(v))).unwrap();
    if off_line(&p2) <= tol {
        return 1;
    }
    let nrm = cross(d1, sub(p2, p0));
    let nrm = nrm.map(|c| c / norm(nrm));
    if pts.iter().all(|p| dot(nrm, sub(*p, p0)).abs() <= tol) {
        2
    } else {
        3
    }
}

/// Solve the 3×3 system formed by three planes; `None` if nearly singular.
fn intersect(a: &HalfSpace, b: &HalfSpace, c: &HalfSpace) -> Option<Vec3> {
    let bc = cross(b.coef, c.coef);
    let det = dot(a.coef, bc);
    let scale = norm(a.coef) * norm(b.coef) * norm(c.coef);
    if det.abs() <= 1e-12 * scale {
        return None;
    }
    let ca = cross(c.coef, a.coef);
    let ab = cross(a.coef, b.coef);
    let mut x = [0.0; 3];
    for i in 0..3 {
        x[i] = (a.rhs * bc[i] + b.rhs * ca[i] + c.rhs * ab[i]) / det;
    }
    Some(x)
}

fn feasible(hs: &[HalfSpace], x: Vec3) -> bool {
    hs.iter().all(|h| h.excess(x) <= EPS_GEO * (1.0 + h.rhs.abs() + norm(h.coef) * norm(x)))
}

fn push_unique(out: &mut Vec<Vec3>, x: Vec3) {
    let tol = EPS_GEO * (1.0 + x.iter().fold(0.0f64, |m, v| m.max(v.abs())));
    if !out.iter().any(|y| (0..3).all(|i| (x[i] - y[i]).abs() <= tol)) {
        out.push(x);
    }
}

/// Exhaustive triple-plane enumeration over `hs`.
fn enumerate_triples(hs: &[HalfSpace]) -> Vec<Vec3> {
    let mut out = Vec::new();
    let m = hs.len();
    for i in 0..m {
        for j in i + 1..m {
            for k in j + 1..m {
                if let Some(x) = intersect(&hs[i], &hs[j], &hs[k]) {
                    if feasible(hs, x) {
                        push_unique(&mut out, x);
                    }
                }
            }
        }
    }
    out
}

/// Bounded iff the recession cone `{d : coef·d <= 0}` is `{0}`.
fn is_bounded(hs: &[HalfSpace]) -> bool {
    let mut cone: Vec<HalfSpace> = hs.iter().filter_map(|h| h.normalized()).map(|h| HalfSpace::new(h.coef, 0.0)).collect();
    for i in 0..3 {
        let mut c = [0.0; 3];
        c[i] = 1.0;
        cone.push(HalfSpace::new(c, 1.0));
        c[i] = -1.0;
        cone.push(HalfSpace::new(c, 1.0));
    }
    enumerate_triples(&cone).iter().all(|v| norm(*v) <= 1e-9)
}

/// All extreme points of `{r : h.coef · r <= h.rhs for h in hs}`.
pub(crate) fn enumerate_vertices(hs: &[HalfSpace]) -> Result<Vec<Vec3>> {
    let unit: Vec<HalfSpace> = hs.iter().filter_map(|h| h.normalized()).collect();

    // Seed with a bounded subset: nonnegativity plus, per axis, the tightest
    // row with nonnegative coefficients that caps that axis.
    let mut active: Vec<usize> = Vec::new();
    for (idx, h) in unit.iter().enumerate() {
        if h.rhs == 0.0 && h.coef.iter().filter(|c| **c < 0.0).count() == 1 && h.coef.iter().all(|c| *c <= 0.0) {
            let axis = h.coef.iter().position(|c| *c < 0.0).unwrap();
            if (h.coef[axis] + 1.0).abs() < 1e-15 {
                active.push(idx);
            }
        }
    }
    let has_nonneg = (0..3).all(|axis| active.iter().any(|&i| unit[i].coef[axis] < 0.0));
    let mut seeded = has_nonneg;
    if seeded {
        for axis in 0..3 {
            let cap = unit
                .iter()
                .enumerate()
                .filter(|(_, h)| h.coef.iter().all(|c| *c >= 0.0) && h.coef[axis] > 1e-12)
                .min_by(|(_, g), (_, h)| (g.rhs / g.coef[axis]).total_cmp(&(h.rhs / h.coef[axis])));
            match cap {
                Some((i, _)) => {
                    if !active.contains(&i) {
                        active.push(i);
                    }
                }
                None => seeded = false,
            }
        }
    }

    if !seeded {
        if !is_bounded(&unit) {
            return Err(Error::Unbounded);
        }
        let verts = enumerate_triples(&unit);
        return if verts.is_empty() { Err(Error::Empty) } else { Ok(verts) };
    }

    let mut rows: Vec<HalfSpace> = active.iter().map(|&i| unit[i]).collect();
    let mut verts = enumerate_triples(&rows);
    if verts.is_empty() {
        return Err(Error::Empty);
    }
    for (idx, h) in unit.iter().enumerate() {
        if active.contains(&idx) {
            continue;
        }
        if verts.iter().all(|v| feasible(std::slice::from_ref(h), *v)) {
            continue;
        }
        rows.push(*h);
        verts = enumerate_triples(&rows);
        if verts.is_empty() {
            return Err(Error::Empty);
        }
    }
    Ok(verts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit_cube() -> Polytope3 {
        Polytope3::boxed([1.0, 1.0, 1.0]).unwrap()
    }

    fn simplex() -> Polytope3 {
        Polytope3::new([HalfSpace::weighted([1.0, 1.0, 1.0], 1.0)]).unwrap()
    }

    #[test]
    fn cube_has_eight_vertices() {
        assert_eq!(unit_cube().vertices().len(), 8);
    }

    #[test]
    fn simplex_has_four_vertices() {
        let s = simplex();
        assert_eq!(s.vertices().len(), 4);
        assert!(s.contains_point(RatePoint::ORIGIN, 0.0));
    }

    #[test]
    fn unbounded_and_empty_are_distinct_errors() {
        let open = Polytope3::new([HalfSpace::weighted([1.0, 0.0, 0.0], 1.0)]);
        assert_eq!(open.unwrap_err(), Error::Unbounded);
        let empty = Polytope3::new([
            HalfSpace::weighted([1.0, 1.0, 1.0], 1.0),
            HalfSpace::weighted([-1.0, 0.0, 0.0], -2.0),
        ]);
        assert_eq!(empty.unwrap_err(), Error::Empty);
    }

    #[test]
    fn simplex_inside_cube() {
        assert!(unit_cube().contains_region(&simplex(), 1e-12));
        assert!(!simplex().contains_region(&unit_cube(), 1e-6));
        assert!(unit_cube().region_eq(&unit_cube(), 0.0));
    }

    #[test]
    fn redundant_upper_bound_is_dropped() {
        let p = Polytope3::new([
            HalfSpace::weighted([1.0, 0.0, 0.0], 1.0),
            HalfSpace::weighted([1.0, 0.0, 0.0], 2.0),
            HalfSpace::weighted([0.0, 1.0, 0.0], 1.0),
            HalfSpace::weighted([0.0, 0.0, 1.0], 1.0),
        ])
        .unwrap();
        let q = p.remove_redundant();
        assert_eq!(q.faces().count(), 3);
        assert!(!q.halfspaces().contains(&HalfSpace::weighted([1.0, 0.0, 0.0], 2.0)));
        assert!(q.region_eq(&p, 1e-12));
        assert_eq!(q.remove_redundant().halfspaces(), q.halfspaces());
    }

    #[test]
    fn flat_polytope_keeps_its_edges() {
        // R3 pinned to zero: a 2-D pentagon in the R1-R2 plane.
        let p = Polytope3::new([
            HalfSpace::weighted([1.0, 0.0, 0.0], 1.0),
            HalfSpace::weighted([0.0, 1.0, 0.0], 1.0),
            HalfSpace::weighted([1.0, 1.0, 0.0], 1.5),
            HalfSpace::weighted([0.0, 0.0, 1.0], 0.0),
            HalfSpace::weighted([1.0, 1.0, 1.0], 5.0),
        ])
        .unwrap();
        assert_eq!(p.vertices().len(), 5);
        let q = p.remove_redundant();
        assert_eq!(q.faces().count(), 4);
        assert!(q.region_eq(&p, 1e-12));
    }

    #[test]
    fn support_finds_max_sum() {
        assert!((simplex().max_sum_rate() - 1.0).abs() < 1e-12);
        assert!((unit_cube().max_sum_rate() - 3.0).abs() < 1e-12);
    }

    #[test]
    fn json_roundtrip_recomputes_vertices() {
        let c = unit_cube();
        let back = Polytope3::from_json(&c.to_json()).unwrap();
        assert!(back.region_eq(&c, 0.0));
    }

    #[test]
    fn affine_rank_of_configurations() {
        assert_eq!(affine_rank(&[]), -1);
        assert_eq!(affine_rank(&[[1.0, 2.0, 3.0]]), 0);
        assert_eq!(affine_rank(&[[0.0; 3], [1.0, 0.0, 0.0], [2.0, 0.0, 0.0]]), 1);
        assert_eq!(affine_rank(&[[0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]), 2);
        assert_eq!(affine_rank(&[[0.0; 3], [1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]), 3);
    }
}
