//! Discrete memoryless channels: mutual-information terms, achievable and
//! capacity regions, interference-condition checks and degradedness tests.

mod channel;
mod conditions;
mod degraded;
mod dist;
pub mod fixtures;
mod joint;
mod regions;
mod simplex;

pub use channel::DiscreteMazic;
pub use conditions::{
    check_strong_conditions, check_very_strong_conditions, simplex_grid, ConditionReport, PointMargins, ProductInput,
    Verdict,
};
pub use degraded::{check_degraded, DegradedResult, Direction, Kernel};
pub use dist::{InputFactorization, MAX_Q};
pub use joint::JOINT_CELL_LIMIT;
pub use regions::{mi_terms, theorem1_halfspaces, theorem1_region, theorem2_halfspaces, theorem2_region};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::Error;

/// A named mutual-information quantity. Every term is conditioned on the
/// time-sharing variable `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MiTerm {
    X1Y1GivenX2,
    X2Y1GivenX1,
    X3Y2GivenU1U2,
    X1X2Y1,
    X1Y1GivenU1X2,
    U1X3Y2GivenU2,
    X2Y1GivenU2X1,
    U2X3Y2GivenU1,
    X1X2Y1GivenU1U2,
    U1U2X3Y2,
    X1X2Y1GivenU1,
    X1X2Y1GivenU2,
    X3Y2GivenX1X2,
    X2X3Y2GivenX1,
    X1X3Y2GivenX2,
    X1X2X3Y2,
}

/// Variables of the joint distribution, in axis order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Var {
    Q = 0,
    U1 = 1,
    X1 = 2,
    U2 = 3,
    X2 = 4,
    X3 = 5,
    Y = 6,
}

/// Receiver whose output appears in a term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Rx {
    One,
    Two,
}

impl MiTerm {
    pub const ALL: [MiTerm; 16] = [
        MiTerm::X1Y1GivenX2,
        MiTerm::X2Y1GivenX1,
        MiTerm::X3Y2GivenU1U2,
        MiTerm::X1X2Y1,
        MiTerm::X1Y1GivenU1X2,
        MiTerm::U1X3Y2GivenU2,
        MiTerm::X2Y1GivenU2X1,
        MiTerm::U2X3Y2GivenU1,
        MiTerm::X1X2Y1GivenU1U2,
        MiTerm::U1U2X3Y2,
        MiTerm::X1X2Y1GivenU1,
        MiTerm::X1X2Y1GivenU2,
        MiTerm::X3Y2GivenX1X2,
        MiTerm::X2X3Y2GivenX1,
        MiTerm::X1X3Y2GivenX2,
        MiTerm::X1X2X3Y2,
    ];

    /// Terms consumed by the split-rate (auxiliary) region.
    pub const SPLIT: [MiTerm; 12] = [
        MiTerm::X1Y1GivenX2,
        MiTerm::X2Y1GivenX1,
        MiTerm::X3Y2GivenU1U2,
        MiTerm::X1X2Y1,
        MiTerm::X1Y1GivenU1X2,
        MiTerm::U1X3Y2GivenU2,
        MiTerm::X2Y1GivenU2X1,
        MiTerm::U2X3Y2GivenU1,
        MiTerm::X1X2Y1GivenU1U2,
        MiTerm::U1U2X3Y2,
        MiTerm::X1X2Y1GivenU1,
        MiTerm::X1X2Y1GivenU2,
    ];

    pub fn label(self) -> &'static str {
        match self {
            MiTerm::X1Y1GivenX2 => "I(X1;Y1|X2Q)",
            MiTerm::X2Y1GivenX1 => "I(X2;Y1|X1Q)",
            MiTerm::X3Y2GivenU1U2 => "I(X3;Y2|U1U2Q)",
            MiTerm::X1X2Y1 => "I(X1X2;Y1|Q)",
            MiTerm::X1Y1GivenU1X2 => "I(X1;Y1|U1X2Q)",
            MiTerm::U1X3Y2GivenU2 => "I(U1X3;Y2|U2Q)",
            MiTerm::X2Y1GivenU2X1 => "I(X2;Y1|U2X1Q)",
            MiTerm::U2X3Y2GivenU1 => "I(U2X3;Y2|U1Q)",
            MiTerm::X1X2Y1GivenU1U2 => "I(X1X2;Y1|U1U2Q)",
            MiTerm::U1U2X3Y2 => "I(U1U2X3;Y2|Q)",
            MiTerm::X1X2Y1GivenU1 => "I(X1X2;Y1|U1Q)",
            MiTerm::X1X2Y1GivenU2 => "I(X1X2;Y1|U2Q)",
            MiTerm::X3Y2GivenX1X2 => "I(X3;Y2|X1X2Q)",
            MiTerm::X2X3Y2GivenX1 => "I(X2X3;Y2|X1Q)",
            MiTerm::X1X3Y2GivenX2 => "I(X1X3;Y2|X2Q)",
            MiTerm::X1X2X3Y2 => "I(X1X2X3;Y2|Q)",
        }
    }

    /// `(receiver, informative variables, conditioning variables besides Q)`.
    pub(crate) fn spec(self) -> (Rx, &'static [Var], &'static [Var]) {
        use Var::*;
        match self {
            MiTerm::X1Y1GivenX2 => (Rx::One, &[X1], &[X2]),
            MiTerm::X2Y1GivenX1 => (Rx::One, &[X2], &[X1]),
            MiTerm::X3Y2GivenU1U2 => (Rx::Two, &[X3], &[U1, U2]),
            MiTerm::X1X2Y1 => (Rx::One, &[X1, X2], &[]),
            MiTerm::X1Y1GivenU1X2 => (Rx::One, &[X1], &[U1, X2]),
            MiTerm::U1X3Y2GivenU2 => (Rx::Two, &[U1, X3], &[U2]),
            MiTerm::X2Y1GivenU2X1 => (Rx::One, &[X2], &[U2, X1]),
            MiTerm::U2X3Y2GivenU1 => (Rx::Two, &[U2, X3], &[U1]),
            MiTerm::X1X2Y1GivenU1U2 => (Rx::One, &[X1, X2], &[U1, U2]),
            MiTerm::U1U2X3Y2 => (Rx::Two, &[U1, U2, X3], &[]),
            MiTerm::X1X2Y1GivenU1 => (Rx::One, &[X1, X2], &[U1]),
            MiTerm::X1X2Y1GivenU2 => (Rx::One, &[X1, X2], &[U2]),
            MiTerm::X3Y2GivenX1X2 => (Rx::Two, &[X3], &[X1, X2]),
            MiTerm::X2X3Y2GivenX1 => (Rx::Two, &[X2, X3], &[X1]),
            MiTerm::X1X3Y2GivenX2 => (Rx::Two, &[X1, X3], &[X2]),
            MiTerm::X1X2X3Y2 => (Rx::Two, &[X1, X2, X3], &[]),
        }
    }
}

impl fmt::Display for MiTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for MiTerm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MiTerm::ALL.into_iter().find(|t| t.label() == s).ok_or_else(|| Error::invalid(format!("unknown term {s}")))
    }
}

impl Serialize for MiTerm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// Where a table's values came from. Tables not derived from one joint
/// distribution may be mutually inconsistent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableSource {
    Gaussian,
    Discrete,
    User,
}

/// Named mutual-information values in bits.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MiTermTable {
    pub source: TableSource,
    values: BTreeMap<MiTerm, f64>,
}

impl MiTermTable {
    pub fn new(source: TableSource) -> Self {
        MiTermTable { source, values: BTreeMap::new() }
    }

    /// A table with every term set to `v`, flagged as user-supplied.
    pub fn constant(v: f64) -> Self {
        let mut t = MiTermTable::new(TableSource::User);
        for term in MiTerm::ALL {
            t.set(term, v);
        }
        t
    }

    pub fn set(&mut self, term: MiTerm, v: f64) {
        self.values.insert(term, v);
    }

    pub fn get(&self, term: MiTerm) -> crate::Result<f64> {
        self.values.get(&term).copied().ok_or_else(|| Error::MissingTerm(term.label().to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (MiTerm, f64)> + '_ {
        self.values.iter().map(|(k, v)| (*k, *v))
    }

    /// Copy with one term shifted by `delta`; the result is flagged as
    /// user-supplied since it no longer comes from a single distribution.
    pub fn perturbed(&self, term: MiTerm, delta: f64) -> crate::Result<Self> {
        let mut t = self.clone();
        t.set(term, self.get(term)? + delta);
        t.source = TableSource::User;
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_roundtrip_and_are_unique() {
        for t in MiTerm::ALL {
            assert_eq!(t.label().parse::<MiTerm>().unwrap(), t);
        }
        let mut labels: Vec<_> = MiTerm::ALL.iter().map(|t| t.label()).collect();
        labels.dedup();
        assert_eq!(labels.len(), 16);
    }

    #[test]
    fn missing_term_is_reported() {
        let t = MiTermTable::new(TableSource::User);
        assert_eq!(t.get(MiTerm::X1X2Y1), Err(Error::MissingTerm("I(X1X2;Y1|Q)".into())));
    }
}
