use serde::{Deserialize, Serialize};

use super::DiscreteMazic;
use crate::{Error, Result};

/// Largest time-sharing alphabet accepted.
pub const MAX_Q: usize = 12;

const SUM_TOL: f64 = 1e-9;

/// An input distribution of the form
/// `p(q) p(u1|q) p(x1|u1,q) p(u2|q) p(x2|u2,q) p(x3|q)`.
///
/// Nested vectors are indexed in the order of the conditioning, e.g.
/// `x1_given_u1[q][u1][x1]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputFactorization {
    pub q: Vec<f64>,
    pub u1: Vec<Vec<f64>>,
    pub x1_given_u1: Vec<Vec<Vec<f64>>>,
    pub u2: Vec<Vec<f64>>,
    pub x2_given_u2: Vec<Vec<Vec<f64>>>,
    pub x3: Vec<Vec<f64>>,
}

fn check_pmf(name: &str, p: &[f64], len: usize) -> Result<()> {
    if p.len() != len {
        return Err(Error::invalid(format!("{name} has {} entries, expected {len}", p.len())));
    }
    if p.iter().any(|v| !v.is_finite() || *v < 0.0) {
        return Err(Error::invalid(format!("{name} has a negative or non-finite entry")));
    }
    let s: f64 = p.iter().sum();
    if (s - 1.0).abs() > SUM_TOL {
        return Err(Error::invalid(format!("{name} sums to {s}")));
    }
    Ok(())
}

impl InputFactorization {
    /// Independent inputs without auxiliaries or time sharing.
    pub fn product(px1: &[f64], px2: &[f64], px3: &[f64]) -> Self {
        InputFactorization {
            q: vec![1.0],
            u1: vec![vec![1.0]],
            x1_given_u1: vec![vec![px1.to_vec()]],
            u2: vec![vec![1.0]],
            x2_given_u2: vec![vec![px2.to_vec()]],
            x3: vec![px3.to_vec()],
        }
    }

    /// `U1 = X1` and `U2 = X2`: every message is decodable at both receivers.
    pub fn full_common(px1: &[f64], px2: &[f64], px3: &[f64]) -> Self {
        let delta = |n: usize| (0..n).map(|i| (0..n).map(|j| f64::from(u8::from(i == j))).collect()).collect();
        InputFactorization {
            q: vec![1.0],
            u1: vec![px1.to_vec()],
            x1_given_u1: vec![delta(px1.len())],
            u2: vec![px2.to_vec()],
            x2_given_u2: vec![delta(px2.len())],
            x3: vec![px3.to_vec()],
        }
    }

    pub fn q_size(&self) -> usize {
        self.q.len()
    }

    pub fn u1_size(&self) -> usize {
        self.u1.first().map_or(0, Vec::len)
    }

    pub fn u2_size(&self) -> usize {
        self.u2.first().map_or(0, Vec::len)
    }

    /// Check shapes against the channel alphabets, stochasticity, and the
    /// cardinality caps `|Q| <= 12`, `|U1| <= |X1| + 5`, `|U2| <= |X2| + 5`.
    pub fn validate(&self, ch: &DiscreteMazic) -> Result<()> {
        let [n1, n2, n3, _, _] = ch.nx;
        let (nq, nu1, nu2) = (self.q_size(), self.u1_size(), self.u2_size());
        if nq == 0 || nq > MAX_Q {
            return Err(Error::invalid(format!("|Q| = {nq} outside [1, {MAX_Q}]")));
        }
        if nu1 == 0 || nu1 > n1 + 5 {
            return Err(Error::invalid(format!("|U1| = {nu1} outside [1, |X1| + 5 = {}]", n1 + 5)));
        }
        if nu2 == 0 || nu2 > n2 + 5 {
            return Err(Error::invalid(format!("|U2| = {nu2} outside [1, |X2| + 5 = {}]", n2 + 5)));
        }
        check_pmf("q", &self.q, nq)?;
        let per_q = |name: &str, len: usize| {
            if len != nq {
                Err(Error::invalid(format!("{name} has {len} time-sharing rows, expected {nq}")))
            } else {
                Ok(())
            }
        };
        per_q("u1", self.u1.len())?;
        per_q("x1_given_u1", self.x1_given_u1.len())?;
        per_q("u2", self.u2.len())?;
        per_q("x2_given_u2", self.x2_given_u2.len())?;
        per_q("x3", self.x3.len())?;
        for q in 0..nq {
            check_pmf("u1", &self.u1[q], nu1)?;
            check_pmf("u2", &self.u2[q], nu2)?;
            check_pmf("x3", &self.x3[q], n3)?;
            if self.x1_given_u1[q].len() != nu1 || self.x2_given_u2[q].len() != nu2 {
                return Err(Error::invalid("conditional tables must have one row per auxiliary symbol"));
            }
            for row in &self.x1_given_u1[q] {
                check_pmf("x1_given_u1", row, n1)?;
            }
            for row in &self.x2_given_u2[q] {
                check_pmf("x2_given_u2", row, n2)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch() -> DiscreteMazic {
        DiscreteMazic::from_fn([2, 2, 2, 2, 2], |_, _, y| 0.5 + 0.0 * y as f64, |_, _, _, _| 0.5).unwrap()
    }

    #[test]
    fn product_and_full_common_validate() {
        let d = InputFactorization::product(&[0.5, 0.5], &[0.3, 0.7], &[1.0, 0.0]);
        d.validate(&ch()).unwrap();
        let f = InputFactorization::full_common(&[0.5, 0.5], &[0.3, 0.7], &[1.0, 0.0]);
        f.validate(&ch()).unwrap();
        assert_eq!(f.x1_given_u1[0][1], vec![0.0, 1.0]);
    }

    #[test]
    fn caps_enforced() {
        let mut d = InputFactorization::product(&[0.5, 0.5], &[0.5, 0.5], &[0.5, 0.5]);
        d.u1 = vec![vec![0.125; 8]];
        d.x1_given_u1 = vec![vec![vec![0.5, 0.5]; 8]];
        assert!(d.validate(&ch()).is_err());
        let mut d = InputFactorization::product(&[0.5, 0.5], &[0.5, 0.5], &[0.5, 0.5]);
        let n = 13;
        d.q = vec![1.0 / n as f64; n];
        for v in [&mut d.u1, &mut d.u2, &mut d.x3] {
            *v = vec![v[0].clone(); n];
        }
        d.x1_given_u1 = vec![d.x1_given_u1[0].clone(); n];
        d.x2_given_u2 = vec![d.x2_given_u2[0].clone(); n];
        assert!(d.validate(&ch()).is_err());
    }

    #[test]
    fn shape_mismatch_rejected() {
        let d = InputFactorization::product(&[0.5, 0.5, 0.0], &[0.5, 0.5], &[0.5, 0.5]);
        assert!(d.validate(&ch()).is_err());
    }
}
