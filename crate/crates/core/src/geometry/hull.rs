//! Convex hull of a finite point set in 3-D (incremental, with merged
//! coplanar facets), used to realize time sharing between regions.

use super::{affine_rank, cross, dot, norm, sub, HalfSpace, Polytope3, Vec3};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy)]
struct Face {
    v: [usize; 3],
    n: Vec3,
    d: f64,
}

fn make_face(pts: &[Vec3], v: [usize; 3], inside: Vec3) -> Face {
    let mut n = cross(sub(pts[v[1]], pts[v[0]]), sub(pts[v[2]], pts[v[0]]));
    let len = norm(n);
    n = n.map(|c| c / len);
    let mut f = Face { v, n, d: dot(n, pts[v[0]]) };
    if dot(f.n, inside) > f.d {
        f = Face { v: [v[0], v[2], v[1]], n: n.map(|c| -c), d: -f.d };
    }
    f
}

/// Outward facet planes of the hull of `pts`, assumed full-dimensional.
fn hull_planes(pts: &[Vec3], eps: f64) -> Result<Vec<Face>> {
    let far = |from: &dyn Fn(&Vec3) -> f64| {
        (0..pts.len()).max_by(|&i, &j| from(&pts[i]).total_cmp(&from(&pts[j]))).expect("nonempty")
    };
    let i0 = far(&|p| -p[0] - 1e-3 * p[1] - 1e-6 * p[2]);
    let i1 = far(&|p| norm(sub(*p, pts[i0])));
    let u = sub(pts[i1], pts[i0]);
    let i2 = far(&|p| norm(cross(u, sub(*p, pts[i0]))));
    let w = cross(u, sub(pts[i2], pts[i0]));
    let i3 = far(&|p| dot(w, sub(*p, pts[i0])).abs());
    if dot(w, sub(pts[i3], pts[i0])).abs() / norm(w).max(f64::MIN_POSITIVE) <= eps {
        return Err(Error::Degenerate);
    }
    let seed = [i0, i1, i2, i3];
    let inside = seed.iter().fold([0.0; 3], |acc, &i| [acc[0] + pts[i][0] / 4.0, acc[1] + pts[i][1] / 4.0, acc[2] + pts[i][2] / 4.0]);
    let mut faces: Vec<Face> = [[i0, i1, i2], [i0, i1, i3], [i0, i2, i3], [i1, i2, i3]]
        .into_iter()
        .map(|v| make_face(pts, v, inside))
        .collect();

    for (p, pt) in pts.iter().enumerate() {
        if seed.contains(&p) {
            continue;
        }
        let visible: Vec<bool> = faces.iter().map(|f| dot(f.n, *pt) - f.d > eps).collect();
        if !visible.iter().any(|v| *v) {
            continue;
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (f, vis) in faces.iter().zip(&visible) {
            if *vis {
                for k in 0..3 {
                    edges.push((f.v[k], f.v[(k + 1) % 3]));
                }
            }
        }
        let horizon: Vec<(usize, usize)> =
            edges.iter().copied().filter(|&(a, b)| !edges.contains(&(b, a))).collect();
        let mut kept: Vec<Face> = faces.iter().zip(&visible).filter(|(_, v)| !**v).map(|(f, _)| *f).collect();
        for (a, b) in horizon {
            kept.push(make_face(pts, [a, b, p], inside));
        }
        faces = kept;
    }
    Ok(faces)
}

/// Convex hull of the union of the given polytopes, with merged facets.
pub fn hull_union(polys: &[Polytope3]) -> Result<Polytope3> {
    let first = polys.first().ok_or_else(|| Error::invalid("hull of an empty list"))?;
    if polys.len() == 1 {
        return Ok(first.remove_redundant());
    }
    let mut pts: Vec<Vec3> = Vec::new();
    for p in polys {
        for v in p.vertex_arrays() {
            super::push_unique(&mut pts, *v);
        }
    }
    let scale = pts.iter().flat_map(|p| p.iter()).fold(1.0f64, |m, v| m.max(v.abs()));
    let eps = 1e-10 * scale;

    if affine_rank(&pts) < 3 {
        return flat_hull(&pts, eps);
    }

    let faces = hull_planes(&pts, eps)?;

    // Merge coplanar triangles into facets, then reset each offset to the
    // largest projection so rounding never excludes an input point.
    let mut planes: Vec<(Vec3, f64)> = Vec::new();
    for f in &faces {
        match planes.iter_mut().find(|(n, _)| norm(sub(*n, f.n)) <= 1e-9) {
            Some(_) => {}
            None => planes.push((f.n, f.d)),
        }
    }
    for (n, d) in &mut planes {
        *d = pts.iter().map(|p| dot(*n, *p)).fold(f64::NEG_INFINITY, f64::max);
    }

    // Extreme points: hull vertices where the tight facet normals span 3-D.
    let tight = 1e-9 * scale;
    let mut verts: Vec<Vec3> = Vec::new();
    for p in &pts {
        let normals: Vec<Vec3> =
            planes.iter().filter(|(n, d)| (dot(*n, *p) - d).abs() <= tight).map(|(n, _)| *n).collect();
        if spans_3d(&normals) {
            verts.push(*p);
        }
    }

    let halfspaces: Vec<HalfSpace> = planes.into_iter().map(|(n, d)| HalfSpace::new(n, d)).collect();
    let mut all = halfspaces;
    for axis in 0..3 {
        all.push(HalfSpace::nonneg(axis));
    }
    Ok(Polytope3::from_parts(all, verts).remove_redundant())
}

fn spans_3d(normals: &[Vec3]) -> bool {
    for i in 0..normals.len() {
        for j in i + 1..normals.len() {
            let c = cross(normals[i], normals[j]);
            if norm(c) <= 1e-9 {
                continue;
            }
            if normals[j + 1..].iter().any(|k| dot(c, *k).abs() > 1e-9) {
                return true;
            }
        }
    }
    false
}

/// Hull of points spanning fewer than three dimensions: equality pairs for
/// the directions orthogonal to the affine hull, plus a 2-D (or 1-D) hull
/// inside it.
fn flat_hull(pts: &[Vec3], eps: f64) -> Result<Polytope3> {
    let p0 = pts[0];
    let rank = affine_rank(pts);
    let far = |score: &dyn Fn(&Vec3) -> f64| *pts.iter().max_by(|u, v| score(u).total_cmp(&score(v))).expect("nonempty");

    // In-plane orthonormal basis.
    let mut basis: Vec<Vec3> = Vec::new();
    if rank >= 1 {
        let d = sub(far(&|p| norm(sub(*p, p0))), p0);
        basis.push(d.map(|c| c / norm(d)));
    }
    if rank >= 2 {
        let e1 = basis[0];
        let q = sub(far(&|p| norm(cross(e1, sub(*p, p0)))), p0);
        let e2 = sub(q, e1.map(|c| c * dot(q, e1)));
        basis.push(e2.map(|c| c / norm(e2)));
    }
    let mut normals = basis.clone();
    let mut hs: Vec<HalfSpace> = Vec::new();
    for axis in 0..3 {
        let mut e = [0.0; 3];
        e[axis] = 1.0;
        for b in &normals {
            e = sub(e, b.map(|c| c * dot(e, *b)));
        }
        if norm(e) > 1e-6 {
            let m = e.map(|c| c / norm(e));
            let c = dot(m, p0);
            hs.push(HalfSpace::new(m, c));
            hs.push(HalfSpace::new(m.map(|v| -v), -c));
            normals.push(m);
        }
    }

    let mut verts: Vec<Vec3> = Vec::new();
    match rank {
        0 => verts.push(p0),
        1 => {
            let e = basis[0];
            for s in [1.0, -1.0] {
                let v = far(&|p| s * dot(e, *p));
                hs.push(HalfSpace::new(e.map(|c| s * c), s * dot(e, v)));
                verts.push(v);
            }
        }
        _ => {
            let (e1, e2) = (basis[0], basis[1]);
            let mut flat: Vec<(f64, f64, usize)> =
                pts.iter().enumerate().map(|(i, p)| (dot(e1, sub(*p, p0)), dot(e2, sub(*p, p0)), i)).collect();
            flat.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.total_cmp(&b.1)));
            let turn = |o: (f64, f64, usize), a: (f64, f64, usize), b: (f64, f64, usize)| {
                (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
            };
            let mut chain: Vec<(f64, f64, usize)> = Vec::new();
            for pass in 0..2 {
                let start = chain.len();
                let iter: Box<dyn Iterator<Item = &(f64, f64, usize)>> =
                    if pass == 0 { Box::new(flat.iter()) } else { Box::new(flat.iter().rev()) };
                for &q in iter {
                    while chain.len() >= start + 2 && turn(chain[chain.len() - 2], chain[chain.len() - 1], q) <= eps {
                        chain.pop();
                    }
                    chain.push(q);
                }
                chain.pop();
            }
            for k in 0..chain.len() {
                let (a, b) = (chain[k], chain[(k + 1) % chain.len()]);
                let (dx, dy) = (b.0 - a.0, b.1 - a.1);
                let len = (dx * dx + dy * dy).sqrt();
                let n = [0, 1, 2].map(|i| (dy * e1[i] - dx * e2[i]) / len);
                hs.push(HalfSpace::new(n, dot(n, pts[a.2])));
                verts.push(pts[a.2]);
            }
        }
    }
    for axis in 0..3 {
        hs.push(HalfSpace::nonneg(axis));
    }
    Ok(Polytope3::from_parts(hs, verts).remove_redundant())
}
