//! Dense joint distributions and entropies of their marginals.

use super::{DiscreteMazic, InputFactorization, Rx, Var};
use crate::{Error, Result};

/// Largest dense joint (cells) built before refusing.
pub const JOINT_CELL_LIMIT: usize = 10_000_000;

/// A pmf over a product alphabet, stored row-major.
#[derive(Debug, Clone)]
pub(crate) struct Joint {
    dims: Vec<usize>,
    p: Vec<f64>,
}

impl Joint {
    pub(crate) fn new(dims: Vec<usize>, p: Vec<f64>) -> Self {
        debug_assert_eq!(dims.iter().product::<usize>(), p.len());
        Joint { dims, p }
    }

    /// Entropy in bits of the marginal on the axes whose bit is set in `mask`.
    pub(crate) fn entropy(&self, mask: u32) -> f64 {
        let kept: Vec<usize> = (0..self.dims.len()).filter(|i| mask & (1 << i) != 0).collect();
        if kept.is_empty() {
            return 0.0;
        }
        let size: usize = kept.iter().map(|&i| self.dims[i]).product();
        // Stride of each original axis within the marginal (0 if summed out).
        let mut stride = vec![0usize; self.dims.len()];
        let mut s = 1;
        for &i in kept.iter().rev() {
            stride[i] = s;
            s *= self.dims[i];
        }
        let mut marg = vec![0.0; size];
        let mut idx = vec![0usize; self.dims.len()];
        let mut m = 0usize;
        for &v in &self.p {
            marg[m] += v;
            // Odometer increment, updating the marginal index incrementally.
            for ax in (0..self.dims.len()).rev() {
                idx[ax] += 1;
                m += stride[ax];
                if idx[ax] < self.dims[ax] {
                    break;
                }
                m -= stride[ax] * idx[ax];
                idx[ax] = 0;
            }
        }
        marg.iter().filter(|&&v| v > 0.0).map(|&v| -v * v.log2()).sum()
    }

    /// `I(A; B | C)` for disjoint axis masks.
    pub(crate) fn mutual_information(&self, a: u32, b: u32, c: u32) -> f64 {
        let v = self.entropy(a | c) + self.entropy(b | c) - self.entropy(a | b | c) - self.entropy(c);
        v.max(0.0)
    }
}

pub(crate) fn mask(vars: &[Var]) -> u32 {
    vars.iter().fold(0, |m, v| m | 1 << (*v as u32))
}

/// Joint of `(Q, U1, X1, U2, X2, X3, Y)` where `Y` is the output of `rx`.
pub(crate) fn build(ch: &DiscreteMazic, d: &InputFactorization, rx: Rx) -> Result<Joint> {
    d.validate(ch)?;
    let [n1, n2, n3, m1, m2] = ch.nx;
    let ny = match rx {
        Rx::One => m1,
        Rx::Two => m2,
    };
    let dims = vec![d.q_size(), d.u1_size(), n1, d.u2_size(), n2, n3, ny];
    let cells = dims.iter().try_fold(1usize, |acc, &n| acc.checked_mul(n)).unwrap_or(usize::MAX);
    if cells > JOINT_CELL_LIMIT {
        return Err(Error::TooLarge { cells, limit: JOINT_CELL_LIMIT });
    }
    let mut p = Vec::with_capacity(cells);
    for (q, &pq) in d.q.iter().enumerate() {
        for (u1, &pu1) in d.u1[q].iter().enumerate() {
            for (x1, &px1) in d.x1_given_u1[q][u1].iter().enumerate() {
                for (u2, &pu2) in d.u2[q].iter().enumerate() {
                    for (x2, &px2) in d.x2_given_u2[q][u2].iter().enumerate() {
                        for (x3, &px3) in d.x3[q].iter().enumerate() {
                            let w = pq * pu1 * px1 * pu2 * px2 * px3;
                            for y in 0..ny {
                                p.push(match rx {
                                    Rx::One => w * ch.py1(x1, x2, y),
                                    Rx::Two => w * ch.py2(x1, x2, x3, y),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(Joint::new(dims, p))
}
