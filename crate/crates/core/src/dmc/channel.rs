use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const ROW_TOL: f64 = 1e-12;

/// A discrete memoryless MAZIC given by its two marginal transition tables.
///
/// `p_y1` is indexed `[x1][x2][y1]` and `p_y2` is indexed
/// `[x1][x2][x3][y2]`, both flattened row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawChannel")]
pub struct DiscreteMazic {
    /// `[|X1|, |X2|, |X3|, |Y1|, |Y2|]`.
    pub nx: [usize; 5],
    pub p_y1: Vec<f64>,
    pub p_y2: Vec<f64>,
}

#[derive(Deserialize)]
struct RawChannel {
    nx: [usize; 5],
    p_y1: Vec<f64>,
    p_y2: Vec<f64>,
}

impl TryFrom<RawChannel> for DiscreteMazic {
    type Error = Error;

    fn try_from(raw: RawChannel) -> Result<Self> {
        DiscreteMazic::new(raw.nx, raw.p_y1, raw.p_y2)
    }
}

fn check_rows(name: &str, table: &[f64], width: usize) -> Result<()> {
    for (i, row) in table.chunks(width).enumerate() {
        if row.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::invalid(format!("{name} row {i} has a negative or non-finite entry")));
        }
        let s: f64 = row.iter().sum();
        if (s - 1.0).abs() > ROW_TOL {
            return Err(Error::invalid(format!("{name} row {i} sums to {s}")));
        }
    }
    Ok(())
}

impl DiscreteMazic {
    pub fn new(nx: [usize; 5], p_y1: Vec<f64>, p_y2: Vec<f64>) -> Result<Self> {
        if nx.contains(&0) {
            return Err(Error::invalid("alphabet sizes must be >= 1"));
        }
        let [n1, n2, n3, m1, m2] = nx;
        if p_y1.len() != n1 * n2 * m1 {
            return Err(Error::invalid(format!("p_y1 has {} entries, expected {}", p_y1.len(), n1 * n2 * m1)));
        }
        if p_y2.len() != n1 * n2 * n3 * m2 {
            return Err(Error::invalid(format!("p_y2 has {} entries, expected {}", p_y2.len(), n1 * n2 * n3 * m2)));
        }
        check_rows("p_y1", &p_y1, m1)?;
        check_rows("p_y2", &p_y2, m2)?;
        Ok(DiscreteMazic { nx, p_y1, p_y2 })
    }

    /// Build from transition functions.
    pub fn from_fn(
        nx: [usize; 5],
        f1: impl Fn(usize, usize, usize) -> f64,
        f2: impl Fn(usize, usize, usize, usize) -> f64,
    ) -> Result<Self> {
        let [n1, n2, n3, m1, m2] = nx;
        let mut p_y1 = Vec::with_capacity(n1 * n2 * m1);
        let mut p_y2 = Vec::with_capacity(n1 * n2 * n3 * m2);
        for x1 in 0..n1 {
            for x2 in 0..n2 {
                for y1 in 0..m1 {
                    p_y1.push(f1(x1, x2, y1));
                }
                for x3 in 0..n3 {
                    for y2 in 0..m2 {
                        p_y2.push(f2(x1, x2, x3, y2));
                    }
                }
            }
        }
        DiscreteMazic::new(nx, p_y1, p_y2)
    }

    #[inline]
    pub fn py1(&self, x1: usize, x2: usize, y1: usize) -> f64 {
        let [_, n2, _, m1, _] = self.nx;
        self.p_y1[(x1 * n2 + x2) * m1 + y1]
    }

    #[inline]
    pub fn py2(&self, x1: usize, x2: usize, x3: usize, y2: usize) -> f64 {
        let [_, n2, n3, _, m2] = self.nx;
        self.p_y2[((x1 * n2 + x2) * n3 + x3) * m2 + y2]
    }

    /// Swap the roles of transmitters 1 and 2.
    pub fn swapped(&self) -> Self {
        let [n1, n2, n3, m1, m2] = self.nx;
        DiscreteMazic::from_fn([n2, n1, n3, m1, m2], |x2, x1, y1| self.py1(x1, x2, y1), |x2, x1, x3, y2| {
            self.py2(x1, x2, x3, y2)
        })
        .expect("relabelled tables stay stochastic")
    }

    /// Relabel receiver-1 outputs: new symbol `perm[y]` carries old symbol `y`.
    pub fn relabel_y1(&self, perm: &[usize]) -> Result<Self> {
        let m1 = self.nx[3];
        let mut inv = vec![usize::MAX; m1];
        if perm.len() != m1 {
            return Err(Error::invalid("permutation length must equal |Y1|"));
        }
        for (y, &py) in perm.iter().enumerate() {
            if py >= m1 || inv[py] != usize::MAX {
                return Err(Error::invalid("not a permutation"));
            }
            inv[py] = y;
        }
        DiscreteMazic::from_fn(self.nx, |x1, x2, y1| self.py1(x1, x2, inv[y1]), |x1, x2, x3, y2| self.py2(x1, x2, x3, y2))
    }
}
