//! Independent oracles shared by the integration tests and the acceptance
//! harness.

#![allow(dead_code)]

use std::collections::HashMap;

use mazic_core::dmc::{fixtures, DiscreteMazic, InputFactorization};
use mazic_core::{HalfSpace, IneqSystem, Polytope3};
use rand::Rng;

/// Outcome symbols `(q, u1, x1, u2, x2, x3, y1, y2)` with their probability.
pub type Outcomes = Vec<([usize; 8], f64)>;

pub const Q: usize = 0;
pub const U1: usize = 1;
pub const X1: usize = 2;
pub const U2: usize = 3;
pub const X2: usize = 4;
pub const X3: usize = 5;
pub const Y1: usize = 6;
pub const Y2: usize = 7;

/// Every outcome of positive probability, listed one by one.
pub fn outcomes(ch: &DiscreteMazic, d: &InputFactorization) -> Outcomes {
    let [_, _, _, m1, m2] = ch.nx;
    let mut out = Vec::new();
    for (q, pq) in d.q.iter().enumerate() {
        for (u1, pu1) in d.u1[q].iter().enumerate() {
            for (x1, px1) in d.x1_given_u1[q][u1].iter().enumerate() {
                for (u2, pu2) in d.u2[q].iter().enumerate() {
                    for (x2, px2) in d.x2_given_u2[q][u2].iter().enumerate() {
                        for (x3, px3) in d.x3[q].iter().enumerate() {
                            for y1 in 0..m1 {
                                for y2 in 0..m2 {
                                    let p = pq * pu1 * px1 * pu2 * px2 * px3 * ch.py1(x1, x2, y1) * ch.py2(x1, x2, x3, y2);
                                    if p > 0.0 {
                                        out.push(([q, u1, x1, u2, x2, x3, y1, y2], p));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn marginal(o: &Outcomes, vars: &[usize]) -> HashMap<Vec<usize>, f64> {
    let mut m = HashMap::new();
    for (s, p) in o {
        *m.entry(vars.iter().map(|&v| s[v]).collect()).or_insert(0.0) += p;
    }
    m
}

/// `I(A; B | C)` in bits as `Σ p(a,b,c) log p(a,b,c) p(c) / (p(a,c) p(b,c))`.
pub fn mi(o: &Outcomes, a: &[usize], b: &[usize], c: &[usize]) -> f64 {
    let cat = |xs: &[&[usize]]| xs.concat();
    let pabc = marginal(o, &cat(&[a, b, c]));
    let pac = marginal(o, &cat(&[a, c]));
    let pbc = marginal(o, &cat(&[b, c]));
    let pc = marginal(o, c);
    let (na, nb) = (a.len(), b.len());
    pabc.iter()
        .map(|(k, &p)| {
            let kc = k[na + nb..].to_vec();
            let kac = [&k[..na], &k[na + nb..]].concat();
            let kbc = k[na..].to_vec();
            p * (p * pc[&kc] / (pac[&kac] * pbc[&kbc])).log2()
        })
        .sum()
}

/// MAC region evaluated directly, with `R3 = 0`.
pub fn mac_region_direct(ch: &DiscreteMazic, d: &InputFactorization) -> Polytope3 {
    let o = outcomes(ch, d);
    Polytope3::new([
        HalfSpace::new([1.0, 0.0, 0.0], mi(&o, &[X1], &[Y1], &[X2, Q])),
        HalfSpace::new([0.0, 1.0, 0.0], mi(&o, &[X2], &[Y1], &[X1, Q])),
        HalfSpace::new([1.0, 1.0, 0.0], mi(&o, &[X1, X2], &[Y1], &[Q])),
        HalfSpace::new([0.0, 0.0, 1.0], 0.0),
    ])
    .unwrap()
}

/// Three-constraint Z-channel region on `(R1, R3)` with `R2 = 0`.
pub fn zic_region_direct(ch: &DiscreteMazic, d: &InputFactorization) -> Polytope3 {
    let o = outcomes(ch, d);
    Polytope3::new([
        HalfSpace::new([1.0, 0.0, 0.0], mi(&o, &[X1], &[Y1], &[Q])),
        HalfSpace::new([0.0, 0.0, 1.0], mi(&o, &[X3], &[Y2], &[U1, Q])),
        HalfSpace::new([1.0, 0.0, 1.0], mi(&o, &[X1], &[Y1], &[U1, Q]) + mi(&o, &[U1, X3], &[Y2], &[Q])),
        HalfSpace::new([0.0, 1.0, 0.0], 0.0),
    ])
    .unwrap()
}

/// A channel with `X3`, `U1`, `U2` degenerate and a random product input.
pub fn random_mac<R: Rng + ?Sized>(rng: &mut R) -> (DiscreteMazic, InputFactorization) {
    let nx = [rng.gen_range(2..4), rng.gen_range(2..4), 1, rng.gen_range(2..4), 2];
    let ch = fixtures::random_channel(rng, nx);
    let d = InputFactorization::product(&fixtures::random_pmf(rng, nx[0]), &fixtures::random_pmf(rng, nx[1]), &[1.0]);
    (ch, d)
}

/// A channel with `X2`, `U2` degenerate and a random two-symbol `U1`.
pub fn random_zic<R: Rng + ?Sized>(rng: &mut R) -> (DiscreteMazic, InputFactorization) {
    let nx = [rng.gen_range(2..4), 1, rng.gen_range(2..4), rng.gen_range(2..4), rng.gen_range(2..4)];
    let ch = fixtures::random_channel(rng, nx);
    let d = InputFactorization {
        q: vec![1.0],
        u1: vec![fixtures::random_pmf(rng, 2)],
        x1_given_u1: vec![(0..2).map(|_| fixtures::random_pmf(rng, nx[0])).collect()],
        u2: vec![vec![1.0]],
        x2_given_u2: vec![vec![vec![1.0]]],
        x3: vec![fixtures::random_pmf(rng, nx[2])],
    };
    (ch, d)
}

/// A channel with a random input law where `Q`, `U1` and `U2` all take two values.
pub fn random_instance<R: Rng + ?Sized>(rng: &mut R) -> (DiscreteMazic, InputFactorization) {
    let nx = [rng.gen_range(2..4), rng.gen_range(2..4), rng.gen_range(1..3), rng.gen_range(2..4), rng.gen_range(2..4)];
    let ch = fixtures::random_channel(rng, nx);
    let mut pmfs = |k: usize, n: usize| -> Vec<Vec<f64>> { (0..k).map(|_| fixtures::random_pmf(rng, n)).collect() };
    let d = InputFactorization {
        q: pmfs(1, 2).remove(0),
        u1: pmfs(2, 2),
        x1_given_u1: (0..2).map(|_| pmfs(2, nx[0])).collect(),
        u2: pmfs(2, 2),
        x2_given_u2: (0..2).map(|_| pmfs(2, nx[1])).collect(),
        x3: pmfs(2, nx[2]),
    };
    (ch, d)
}

/// A bounded system on four variables: the box `0 <= x_i <= 2` plus
/// `extra` rows with small integer coefficients.
pub fn random_system<R: Rng + ?Sized>(rng: &mut R, extra: usize) -> IneqSystem {
    let names = ["x", "y", "z", "w"];
    let mut sys = IneqSystem::new(names);
    for n in names {
        sys.add(&[(n, 1.0)], 2.0).unwrap();
    }
    sys.add_nonnegativity();
    for _ in 0..extra {
        let terms: Vec<(&str, f64)> = names.iter().map(|n| (*n, f64::from(rng.gen_range(-2i8..=2)))).collect();
        sys.add(&terms, f64::from(rng.gen_range(-1i8..=4)) * 0.5).unwrap();
    }
    sys
}

/// Interval of the last variable compatible with the others fixed at `x`,
/// computed row by row.
pub fn last_var_interval(sys: &IneqSystem, x: &[f64]) -> (f64, f64) {
    let k = sys.vars().len() - 1;
    let (mut lo, mut hi) = (f64::NEG_INFINITY, f64::INFINITY);
    for r in sys.rows() {
        let rest: f64 = r.coef[..k].iter().zip(x).map(|(c, v)| c * v).sum();
        let room = r.rhs - rest;
        let c = r.coef[k];
        if c > 0.0 {
            hi = hi.min(room / c);
        } else if c < 0.0 {
            lo = lo.max(room / c);
        } else if room < 0.0 {
            return (1.0, 0.0);
        }
    }
    (lo, hi)
}

/// Smallest slack of `x` over the rows of `sys` (negative when violated).
pub fn min_slack(sys: &IneqSystem, x: &[f64]) -> f64 {
    sys.rows()
        .iter()
        .map(|r| r.rhs - r.coef.iter().zip(x).map(|(c, v)| c * v).sum::<f64>())
        .fold(f64::INFINITY, f64::min)
}
