//! Mutual-information evaluation and the discrete achievable and capacity
//! regions built from it.

use super::joint::{build, mask, Joint};
use super::{DiscreteMazic, InputFactorization, MiTerm, MiTermTable, Rx, TableSource, Var};
use crate::{Error, HalfSpace, Polytope3, Result};

fn evaluate(j: &Joint, term: MiTerm) -> f64 {
    let (_, a, c) = term.spec();
    let cond = mask(c) | mask(&[Var::Q]);
    j.mutual_information(mask(a), mask(&[Var::Y]), cond)
}

/// Every named term, by exact summation over the joint distribution.
pub fn mi_terms(ch: &DiscreteMazic, dist: &InputFactorization) -> Result<MiTermTable> {
    let j1 = build(ch, dist, Rx::One)?;
    let j2 = build(ch, dist, Rx::Two)?;
    let mut t = MiTermTable::new(TableSource::Discrete);
    for term in MiTerm::ALL {
        let j = match term.spec().0 {
            Rx::One => &j1,
            Rx::Two => &j2,
        };
        t.set(term, evaluate(j, term));
    }
    Ok(t)
}

/// The eleven split-rate constraints on `(R1, R2, R3)` for a term table.
pub fn theorem1_halfspaces(mi: &MiTermTable) -> Result<Vec<HalfSpace>> {
    use MiTerm::*;
    let g = |t| mi.get(t);
    Ok(vec![
        HalfSpace::new([1.0, 0.0, 0.0], g(X1Y1GivenX2)?),
        HalfSpace::new([0.0, 1.0, 0.0], g(X2Y1GivenX1)?),
        HalfSpace::new([0.0, 0.0, 1.0], g(X3Y2GivenU1U2)?),
        HalfSpace::new([1.0, 1.0, 0.0], g(X1X2Y1)?),
        HalfSpace::new([1.0, 0.0, 1.0], g(X1Y1GivenU1X2)? + g(U1X3Y2GivenU2)?),
        HalfSpace::new([0.0, 1.0, 1.0], g(X2Y1GivenU2X1)? + g(U2X3Y2GivenU1)?),
        HalfSpace::new([1.0, 1.0, 1.0], g(X1X2Y1GivenU1U2)? + g(U1U2X3Y2)?),
        HalfSpace::new([1.0, 1.0, 1.0], g(X1X2Y1GivenU1)? + g(U1X3Y2GivenU2)?),
        HalfSpace::new([1.0, 1.0, 1.0], g(X1X2Y1GivenU2)? + g(U2X3Y2GivenU1)?),
        HalfSpace::new([1.0, 2.0, 1.0], g(X2Y1GivenU2X1)? + g(X1X2Y1GivenU1)? + g(U1U2X3Y2)?),
        HalfSpace::new([2.0, 1.0, 1.0], g(X1Y1GivenU1X2)? + g(X1X2Y1GivenU2)? + g(U1U2X3Y2)?),
    ])
}

/// Achievable region for one input distribution, redundancy-pruned.
pub fn theorem1_region(ch: &DiscreteMazic, dist: &InputFactorization) -> Result<Polytope3> {
    let mi = mi_terms(ch, dist)?;
    Ok(Polytope3::new(theorem1_halfspaces(&mi)?)?.remove_redundant())
}

/// The seven strong-interference capacity constraints for a term table.
pub fn theorem2_halfspaces(mi: &MiTermTable) -> Result<Vec<HalfSpace>> {
    use MiTerm::*;
    let g = |t| mi.get(t);
    Ok(vec![
        HalfSpace::new([1.0, 0.0, 0.0], g(X1Y1GivenX2)?),
        HalfSpace::new([0.0, 1.0, 0.0], g(X2Y1GivenX1)?),
        HalfSpace::new([0.0, 0.0, 1.0], g(X3Y2GivenX1X2)?),
        HalfSpace::new([1.0, 1.0, 0.0], g(X1X2Y1)?),
        HalfSpace::new([0.0, 1.0, 1.0], g(X2X3Y2GivenX1)?),
        HalfSpace::new([1.0, 0.0, 1.0], g(X1X3Y2GivenX2)?),
        HalfSpace::new([1.0, 1.0, 1.0], g(X1X2X3Y2)?),
    ])
}

/// Strong-interference capacity region for one input distribution. The
/// auxiliaries must be degenerate.
pub fn theorem2_region(ch: &DiscreteMazic, dist: &InputFactorization) -> Result<Polytope3> {
    if dist.u1_size() != 1 || dist.u2_size() != 1 {
        return Err(Error::precondition("strong-interference region needs singleton U1 and U2"));
    }
    let mi = mi_terms(ch, dist)?;
    Ok(Polytope3::new(theorem2_halfspaces(&mi)?)?.remove_redundant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RatePoint;

    fn h2(p: f64) -> f64 {
        if p <= 0.0 || p >= 1.0 {
            0.0
        } else {
            -p * p.log2() - (1.0 - p) * (1.0 - p).log2()
        }
    }

    #[test]
    fn xor_mac_terms() {
        let ch = DiscreteMazic::from_fn([2, 2, 1, 2, 1], |x1, x2, y| f64::from(u8::from(y == x1 ^ x2)), |_, _, _, _| 1.0)
            .unwrap();
        let u = [0.5, 0.5];
        let mi = mi_terms(&ch, &InputFactorization::full_common(&u, &u, &[1.0])).unwrap();
        assert!((mi.get(MiTerm::X1Y1GivenX2).unwrap() - 1.0).abs() < 1e-15);
        assert!((mi.get(MiTerm::X1X2Y1).unwrap() - 1.0).abs() < 1e-15);
        assert!(mi.get(MiTerm::X1Y1GivenU1X2).unwrap().abs() < 1e-15);
        assert!(mi.get(MiTerm::X1X2X3Y2).unwrap().abs() < 1e-15);
    }

    #[test]
    fn receiver2_copies_x3() {
        let ch = DiscreteMazic::from_fn([2, 2, 2, 2, 2], |_, _, _| 0.5, |_, _, x3, y| f64::from(u8::from(y == x3)))
            .unwrap();
        let u = [0.5, 0.5];
        let mi = mi_terms(&ch, &InputFactorization::full_common(&u, &u, &u)).unwrap();
        assert!((mi.get(MiTerm::X3Y2GivenU1U2).unwrap() - 1.0).abs() < 1e-15);
        assert!((mi.get(MiTerm::U1X3Y2GivenU2).unwrap() - 1.0).abs() < 1e-15);
        assert!(mi.get(MiTerm::X1X2Y1).unwrap().abs() < 1e-15);
    }

    #[test]
    fn capacity_region_r3_face_is_one_minus_binary_entropy() {
        let h = 0.11;
        // Y2 = (X1, X2, X3 xor N) encoded as 4*x1 + 2*x2 + y.
        let ch = DiscreteMazic::from_fn(
            [2, 2, 2, 2, 8],
            |x1, _, y| f64::from(u8::from(y == x1)),
            |x1, x2, x3, y| {
                if y >> 1 != 2 * x1 + x2 {
                    0.0
                } else if y & 1 == x3 {
                    1.0 - h
                } else {
                    h
                }
            },
        )
        .unwrap();
        let u = [0.5, 0.5];
        let d = InputFactorization::product(&u, &u, &u);
        let mi = mi_terms(&ch, &d).unwrap();
        assert!((mi.get(MiTerm::X3Y2GivenX1X2).unwrap() - (1.0 - h2(h))).abs() < 1e-12);
        let r = theorem2_region(&ch, &d).unwrap();
        let r3 = r.support([0.0, 0.0, 1.0]).0;
        assert!((r3 - (1.0 - h2(h))).abs() < 1e-12);
        assert!(theorem2_region(&ch, &InputFactorization::full_common(&u, &u, &u)).is_err());
    }

    #[test]
    fn degenerate_x3_collapses_to_mac() {
        let ch = DiscreteMazic::from_fn(
            [2, 2, 1, 3, 4],
            |x1, x2, y| [[0.7, 0.2, 0.1], [0.1, 0.6, 0.3]][x1][y] * 0.5 + [[0.3, 0.3, 0.4], [0.5, 0.25, 0.25]][x2][y] * 0.5,
            |x1, x2, _, y| f64::from(u8::from(y == 2 * x1 + x2)),
        )
        .unwrap();
        let d = InputFactorization::product(&[0.4, 0.6], &[0.5, 0.5], &[1.0]);
        let r = theorem2_region(&ch, &d).unwrap();
        assert!(r.vertices().iter().all(|v| v.r3.abs() < 1e-12));
        let t1 = theorem1_region(&ch, &d).unwrap();
        assert!(t1.region_eq(&r, 1e-12));
        assert!(t1.contains_point(RatePoint::ORIGIN, 0.0));
    }
}
