//! The random-coding constraint system over split rates `(S1, T1, S2, T2, R3)`,
//! where `T` is the common part decoded at both receivers and `S` the
//! private part, and its projection onto `(R1, R2, R3)`.

use serde::Serialize;

use crate::dmc::{MiTerm, MiTermTable, TableSource};
use crate::gaussian::inner_bound;
use crate::geometry::{fourier_motzkin, Projection};
use crate::{gauss_cap as c, Error, GaussianMazic, IneqSystem, Polytope3, RatePoint, Result, SplitParams, EPS_CMP};

/// Variable names of the split-rate system, in column order.
pub const SPLIT_VARS: [&str; 5] = ["s1", "t1", "s2", "t2", "r3"];

/// Rates of the private (`s`) and common (`t`) message parts.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitRateVector {
    pub s1: f64,
    pub t1: f64,
    pub s2: f64,
    pub t2: f64,
    pub r3: f64,
}

impl SplitRateVector {
    pub fn to_array(self) -> [f64; 5] {
        [self.s1, self.t1, self.s2, self.t2, self.r3]
    }

    pub fn rates(self) -> RatePoint {
        RatePoint::new(self.s1 + self.t1, self.s2 + self.t2, self.r3)
    }
}

/// The nineteen decoding constraints plus nonnegativity of all five rates.
pub fn build_appendix_system(mi: &MiTermTable) -> Result<IneqSystem> {
    use MiTerm::*;
    let rows: [(&[&str], MiTerm); 19] = [
        (&["t1"], X1Y1GivenX2),
        (&["t2"], X2Y1GivenX1),
        (&["s1"], X1Y1GivenU1X2),
        (&["s2"], X2Y1GivenU2X1),
        (&["t1", "t2"], X1X2Y1),
        (&["s1", "t1"], X1Y1GivenX2),
        (&["s2", "t1"], X1X2Y1GivenU2),
        (&["s1", "t2"], X1X2Y1GivenU1),
        (&["s2", "t2"], X2Y1GivenX1),
        (&["s1", "s2"], X1X2Y1GivenU1U2),
        (&["s1", "t1", "t2"], X1X2Y1),
        (&["t1", "s2", "t2"], X1X2Y1),
        (&["s1", "t1", "s2"], X1X2Y1GivenU2),
        (&["s1", "s2", "t2"], X1X2Y1GivenU1),
        (&["s1", "t1", "s2", "t2"], X1X2Y1),
        (&["r3"], X3Y2GivenU1U2),
        (&["t1", "r3"], U1X3Y2GivenU2),
        (&["t2", "r3"], U2X3Y2GivenU1),
        (&["t1", "t2", "r3"], U1U2X3Y2),
    ];
    let mut sys = IneqSystem::new(SPLIT_VARS);
    for (vars, term) in rows {
        let terms: Vec<(&str, f64)> = vars.iter().map(|v| (*v, 1.0)).collect();
        sys.add(&terms, mi.get(term)?)?;
    }
    sys.add_nonnegativity();
    Ok(sys)
}

/// Every term under jointly Gaussian inputs where user `i` keeps a private
/// layer holding fraction `alpha` (resp. `beta`) of its power.
pub fn gaussian_mi_table(ch: &GaussianMazic, split: SplitParams) -> MiTermTable {
    use MiTerm::*;
    let GaussianMazic { a, b, p1, p2, p3 } = *ch;
    let (al, be) = (split.alpha, split.beta);
    let (alb, beb) = (split.alpha_bar(), split.beta_bar());
    let noise = 1.0 + a * al * p1 + b * be * p2;
    let mut t = MiTermTable::new(TableSource::Gaussian);
    for (term, v) in [
        (X1Y1GivenX2, c(p1)),
        (X2Y1GivenX1, c(p2)),
        (X3Y2GivenU1U2, c(p3 / noise)),
        (X1X2Y1, c(p1 + p2)),
        (X1Y1GivenU1X2, c(al * p1)),
        (U1X3Y2GivenU2, c((a * alb * p1 + p3) / noise)),
        (X2Y1GivenU2X1, c(be * p2)),
        (U2X3Y2GivenU1, c((b * beb * p2 + p3) / noise)),
        (X1X2Y1GivenU1U2, c(al * p1 + be * p2)),
        (U1U2X3Y2, c((a * alb * p1 + b * beb * p2 + p3) / noise)),
        (X1X2Y1GivenU1, c(al * p1 + p2)),
        (X1X2Y1GivenU2, c(p1 + be * p2)),
        (X3Y2GivenX1X2, c(p3)),
        (X2X3Y2GivenX1, c(b * p2 + p3)),
        (X1X3Y2GivenX2, c(a * p1 + p3)),
        (X1X2X3Y2, c(a * p1 + b * p2 + p3)),
    ] {
        t.set(term, v);
    }
    t
}

/// A projected region with the size of the eliminated system.
#[derive(Debug, Clone)]
pub struct ProjectedRegion {
    pub region: Polytope3,
    pub rows_after_t1: usize,
    pub rows_after_fm: usize,
}

fn eliminate(sys: &IneqSystem, var: &str) -> Result<IneqSystem> {
    match fourier_motzkin(sys, var)? {
        Projection::Projected(s) => Ok(s),
        Projection::Infeasible { .. } => Err(Error::Empty),
    }
}

/// Substitute `s1 = r1 - t1`, `s2 = r2 - t2`, eliminate `t1` then `t2`, and
/// return the rate region with the row counts along the way.
pub fn project_with_counts(sys: &IneqSystem) -> Result<ProjectedRegion> {
    let sys = sys.substitute("s1", &[("r1", 1.0), ("t1", -1.0)])?;
    let sys = sys.substitute("s2", &[("r2", 1.0), ("t2", -1.0)])?;
    let after_t1 = eliminate(&sys, "t1")?;
    let after_t2 = eliminate(&after_t1, "t2")?;
    let region = after_t2.to_polytope(["r1", "r2", "r3"])?.remove_redundant();
    Ok(ProjectedRegion { region, rows_after_t1: after_t1.len(), rows_after_fm: after_t2.len() })
}

/// The `(R1, R2, R3)` projection of a split-rate system, redundancy-pruned.
pub fn project_to_rates(sys: &IneqSystem) -> Result<Polytope3> {
    Ok(project_with_counts(sys)?.region)
}

/// Outcome of comparing a projected region with a closed-form region.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquivalenceReport {
    pub equivalent: bool,
    /// Largest one-sided vertex slack, over both directions.
    pub max_slack_bits: f64,
    pub rows_after_fm: usize,
    /// How far projected vertices stick out of the closed form.
    pub projection_excess_bits: f64,
    /// How far closed-form vertices stick out of the projection.
    pub closed_form_excess_bits: f64,
    pub source: TableSource,
}

impl EquivalenceReport {
    /// The projection is strictly larger than the closed form.
    pub fn projection_larger(&self) -> bool {
        self.projection_excess_bits > EPS_CMP && self.closed_form_excess_bits <= EPS_CMP
    }
}

/// Project the system built from `mi` and compare it with `closed_form`.
pub fn compare_projection(mi: &MiTermTable, closed_form: &Polytope3) -> Result<EquivalenceReport> {
    let projected = project_with_counts(&build_appendix_system(mi)?)?;
    let projection_excess_bits = closed_form.max_excess_of(&projected.region).max(0.0);
    let closed_form_excess_bits = projected.region.max_excess_of(closed_form).max(0.0);
    let max_slack_bits = projection_excess_bits.max(closed_form_excess_bits);
    Ok(EquivalenceReport {
        equivalent: max_slack_bits <= EPS_CMP,
        max_slack_bits,
        rows_after_fm: projected.rows_after_fm,
        projection_excess_bits,
        closed_form_excess_bits,
        source: mi.source,
    })
}

/// Eliminate the split rates from the Gaussian system and compare with the
/// closed-form inner bound for the same split.
pub fn verify_theorem1_equivalence(ch: &GaussianMazic, split: SplitParams) -> Result<EquivalenceReport> {
    compare_projection(&gaussian_mi_table(ch, split), &inner_bound(ch, split)?)
}
