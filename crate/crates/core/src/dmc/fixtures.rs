//! Channels built by construction, with known degradedness and
//! interference-condition verdicts.

use rand::Rng;

use super::{DiscreteMazic, Direction};

/// A random pmf on `k` symbols with every entry bounded away from zero.
pub fn random_pmf<R: Rng + ?Sized>(rng: &mut R, k: usize) -> Vec<f64> {
    let w: Vec<f64> = (0..k).map(|_| 0.05 + rng.gen::<f64>()).collect();
    let s: f64 = w.iter().sum();
    w.into_iter().map(|v| v / s).collect()
}

fn random_table<R: Rng + ?Sized>(rng: &mut R, rows: usize, width: usize) -> Vec<f64> {
    (0..rows).flat_map(|_| random_pmf(rng, width)).collect()
}

/// A channel with independent random transition rows.
pub fn random_channel<R: Rng + ?Sized>(rng: &mut R, nx: [usize; 5]) -> DiscreteMazic {
    let [n1, n2, n3, m1, m2] = nx;
    let p_y1 = random_table(rng, n1 * n2, m1);
    let p_y2 = random_table(rng, n1 * n2 * n3, m2);
    DiscreteMazic::new(nx, p_y1, p_y2).expect("random rows are stochastic")
}

/// A channel whose receiver-2 output is receiver 1's output passed through a
/// random kernel that sees `x3` and, depending on `direction`, `x2`
/// (`ThroughX2`, `Mixed`), `x1` (`ThroughX1`) or neither (`Weak`).
pub fn degraded_channel<R: Rng + ?Sized>(rng: &mut R, nx: [usize; 5], direction: Direction) -> DiscreteMazic {
    let [n1, n2, n3, m1, m2] = nx;
    let p_y1 = random_table(rng, n1 * n2, m1);
    let kernel = random_table(rng, n1.max(n2) * n3 * m1, m2);
    let k = |v: usize, x3: usize, y1: usize, y2: usize| kernel[((v * n3 + x3) * m1 + y1) * m2 + y2];
    let mut p_y2 = Vec::with_capacity(n1 * n2 * n3 * m2);
    for x1 in 0..n1 {
        for x2 in 0..n2 {
            let v = match direction {
                Direction::ThroughX2 | Direction::Mixed => x2,
                Direction::ThroughX1 => x1,
                Direction::Weak => 0,
            };
            for x3 in 0..n3 {
                for y2 in 0..m2 {
                    p_y2.push((0..m1).map(|y1| p_y1[(x1 * n2 + x2) * m1 + y1] * k(v, x3, y1, y2)).sum());
                }
            }
        }
    }
    // Composition can drift from unit row sums by a few ulps.
    for row in p_y2.chunks_mut(m2) {
        let s: f64 = row.iter().sum();
        row.iter_mut().for_each(|p| *p /= s);
    }
    DiscreteMazic::new(nx, p_y1, p_y2).expect("composition of stochastic maps is stochastic")
}

/// Add `delta` to one receiver-2 cell and renormalize its row.
pub fn perturb_y2(ch: &DiscreteMazic, cell: [usize; 4], delta: f64) -> DiscreteMazic {
    let [x1, x2, x3, y] = cell;
    let m2 = ch.nx[4];
    let mut out = ch.clone();
    let row = ((x1 * ch.nx[1] + x2) * ch.nx[2] + x3) * m2;
    out.p_y2[row + y] += delta;
    let s: f64 = out.p_y2[row..row + m2].iter().sum();
    out.p_y2[row..row + m2].iter_mut().for_each(|p| *p /= s);
    out
}

/// Receiver 2 observes `(X1, X2, X3)` exactly, encoded as one symbol;
/// receiver 1 is given by `p_y1`.
pub fn full_view_receiver2(n: [usize; 3], m1: usize, p_y1: Vec<f64>) -> DiscreteMazic {
    let [n1, n2, n3] = n;
    let nx = [n1, n2, n3, m1, n1 * n2 * n3];
    let p_y2 = (0..n1 * n2 * n3).flat_map(|i| (0..n1 * n2 * n3).map(move |j| f64::from(u8::from(i == j)))).collect();
    DiscreteMazic::new(nx, p_y1, p_y2).expect("identity rows are stochastic")
}

/// Receiver 1 sees `X1 xor X2`; receiver 2 sees `X3` through a binary
/// symmetric channel and nothing of the other inputs.
pub fn xor_with_blind_receiver2(crossover: f64) -> DiscreteMazic {
    DiscreteMazic::from_fn(
        [2, 2, 2, 2, 2],
        |x1, x2, y| f64::from(u8::from(y == x1 ^ x2)),
        |_, _, x3, y| if y == x3 { 1.0 - crossover } else { crossover },
    )
    .expect("deterministic and BSC rows are stochastic")
}
