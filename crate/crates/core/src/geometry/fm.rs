//! Named-variable linear inequality systems and Fourier–Motzkin elimination.

use std::collections::HashMap;

use super::{HalfSpace, Polytope3};
use crate::{Error, Result};

/// Rows beyond this count abort an elimination with [`Error::RowCap`].
pub const FM_ROW_CAP: usize = 10_000;

const ZERO_TOL: f64 = 1e-12;

/// `coef · x <= rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct IneqRow {
    pub coef: Vec<f64>,
    pub rhs: f64,
}

impl IneqRow {
    fn is_zero(&self) -> bool {
        self.coef.iter().all(|c| *c == 0.0)
    }

    /// Divide by the largest coefficient magnitude and flush tiny entries.
    fn normalize(&mut self) {
        let m = self.coef.iter().fold(0.0f64, |m, c| m.max(c.abs()));
        if m == 0.0 {
            return;
        }
        for c in &mut self.coef {
            *c /= m;
            if c.abs() <= ZERO_TOL {
                *c = 0.0;
            }
        }
        self.rhs /= m;
    }

    fn key(&self) -> Vec<i64> {
        self.coef.iter().map(|c| (c * 1e9).round() as i64).collect()
    }
}

/// Result of eliminating one variable.
#[derive(Debug, Clone, PartialEq)]
pub enum Projection {
    Projected(IneqSystem),
    /// Some combination reduced to `0 <= rhs` with `rhs < 0`.
    Infeasible { witness_rhs: f64 },
}

impl Projection {
    pub fn into_system(self) -> Option<IneqSystem> {
        match self {
            Projection::Projected(s) => Some(s),
            Projection::Infeasible { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct IneqSystem {
    vars: Vec<String>,
    rows: Vec<IneqRow>,
}

impl IneqSystem {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>) -> Self {
        IneqSystem { vars: vars.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn rows(&self) -> &[IneqRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vars.iter().position(|v| v == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Add `Σ coef·var <= rhs` given as `(name, coef)` pairs.
    pub fn add(&mut self, terms: &[(&str, f64)], rhs: f64) -> Result<()> {
        let mut coef = vec![0.0; self.vars.len()];
        for (name, c) in terms {
            coef[self.index_of(name)?] += c;
        }
        self.add_row(IneqRow { coef, rhs })
    }

    pub fn add_row(&mut self, row: IneqRow) -> Result<()> {
        if row.coef.len() != self.vars.len() {
            return Err(Error::invalid(format!("row has {} coefficients for {} variables", row.coef.len(), self.vars.len())));
        }
        if row.coef.iter().chain(std::iter::once(&row.rhs)).any(|v| !v.is_finite()) {
            return Err(Error::invalid("non-finite coefficient"));
        }
        self.rows.push(row);
        Ok(())
    }

    /// `-var <= 0` for every variable.
    pub fn add_nonnegativity(&mut self) {
        for i in 0..self.vars.len() {
            let mut coef = vec![0.0; self.vars.len()];
            coef[i] = -1.0;
            self.rows.push(IneqRow { coef, rhs: 0.0 });
        }
    }

    /// True iff `x` satisfies every row within `tol`.
    pub fn is_satisfied(&self, x: &[f64], tol: f64) -> bool {
        self.rows.iter().all(|r| r.coef.iter().zip(x).map(|(c, v)| c * v).sum::<f64>() <= r.rhs + tol)
    }

    /// Replace `var` by `Σ coef·name`; new names are appended as variables.
    pub fn substitute(&self, var: &str, expr: &[(&str, f64)]) -> Result<IneqSystem> {
        let k = self.index_of(var)?;
        let mut vars: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        for (name, _) in expr {
            if *name != var && !vars.iter().any(|v| v == name) {
                vars.push(name.to_string());
            }
        }
        let pos = |name: &str| vars.iter().position(|v| v == name).expect("variable registered above");
        let mut out = IneqSystem { vars: vars.clone(), rows: Vec::with_capacity(self.rows.len()) };
        for row in &self.rows {
            let mut coef = vec![0.0; vars.len()];
            for (i, c) in row.coef.iter().enumerate() {
                if i != k {
                    coef[pos(&self.vars[i])] += c;
                }
            }
            for (name, e) in expr {
                if *name == var {
                    return Err(Error::invalid(format!("substitution for {var} refers to itself")));
                }
                coef[pos(name)] += row.coef[k] * e;
            }
            out.rows.push(IneqRow { coef, rhs: row.rhs });
        }
        Ok(out)
    }

    /// Fix `var` to `value` and drop it from the variable list.
    pub fn fix(&self, var: &str, value: f64) -> Result<IneqSystem> {
        let k = self.index_of(var)?;
        let vars = self.vars.iter().filter(|v| *v != var).cloned().collect();
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut coef = r.coef.clone();
                let c = coef.remove(k);
                IneqRow { coef, rhs: r.rhs - c * value }
            })
            .collect();
        Ok(IneqSystem { vars, rows })
    }

    /// Eliminate every variable in turn; `true` iff the system has a solution.
    pub fn is_feasible(&self) -> Result<bool> {
        let mut sys = self.clone();
        while let Some(v) = sys.vars.first().cloned() {
            match fourier_motzkin(&sys, &v)? {
                Projection::Projected(s) => sys = s,
                Projection::Infeasible { .. } => return Ok(false),
            }
        }
        Ok(sys.rows.iter().all(|r| r.rhs >= -ZERO_TOL))
    }

    /// Interpret a three-variable system as a rate-space polytope; `names`
    /// gives the variables for `R1, R2, R3`.
    pub fn to_polytope(&self, names: [&str; 3]) -> Result<Polytope3> {
        if self.vars.len() != 3 {
            return Err(Error::invalid(format!("expected 3 variables, found {}", self.vars.len())));
        }
        let idx = [self.index_of(names[0])?, self.index_of(names[1])?, self.index_of(names[2])?];
        Polytope3::new(self.rows.iter().map(|r| HalfSpace::new(idx.map(|i| r.coef[i]), r.rhs)))
    }
}

/// Project `sys` onto the remaining variables by eliminating `var`.
///
/// Rows free of `var` carry over; every (positive, negative) pair combines
/// into one row. Trivial rows are dropped and duplicates merged.
pub fn fourier_motzkin(sys: &IneqSystem, var: &str) -> Result<Projection> {
    let k = sys.index_of(var)?;
    let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for row in &sys.rows {
        let mut row = row.clone();
        row.normalize();
        let c = row.coef[k];
        if c > 0.0 {
            pos.push(row);
        } else if c < 0.0 {
            neg.push(row);
        } else {
            rest.push(row);
        }
    }
    let produced = rest.len() + pos.len() * neg.len();
    if produced > FM_ROW_CAP {
        return Err(Error::RowCap { rows: produced, cap: FM_ROW_CAP });
    }

    let strip = |mut r: IneqRow| {
        r.coef.remove(k);
        r
    };
    let mut candidates: Vec<IneqRow> = rest.into_iter().map(strip).collect();
    for p in &pos {
        for n in &neg {
            let (wp, wn) = (-n.coef[k], p.coef[k]);
            let coef = p.coef.iter().zip(&n.coef).map(|(a, b)| wp * a + wn * b).collect();
            candidates.push(strip(IneqRow { coef, rhs: wp * p.rhs + wn * n.rhs }));
        }
    }

    let mut rows: Vec<IneqRow> = Vec::with_capacity(candidates.len());
    let mut seen: HashMap<Vec<i64>, usize> = HashMap::new();
    for mut r in candidates {
        r.normalize();
        if r.is_zero() {
            if r.rhs < -ZERO_TOL {
                return Ok(Projection::Infeasible { witness_rhs: r.rhs });
            }
            continue;
        }
        match seen.get(&r.key()) {
            Some(&i) => rows[i].rhs = rows[i].rhs.min(r.rhs),
            None => {
                seen.insert(r.key(), rows.len());
                rows.push(r);
            }
        }
    }

    let vars = sys.vars.iter().filter(|v| *v != var).cloned().collect();
    Ok(Projection::Projected(IneqSystem { vars, rows }))
}
