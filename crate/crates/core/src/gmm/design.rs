//! Stacked per-unit regression and instrument blocks.
//!
//! Rows of a unit's block are its usable difference equations in period
//! order, followed (system GMM only) by its usable level equations. Missing
//! instrument cells are zero. Instrument columns that are zero for every
//! unit are dropped, so the reported instrument count is the column count.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use super::spec::{InstrumentPlan, ModelSpec};
use crate::error::{Error, Result};
use crate::linalg::greedy_independent;
use crate::panel::PanelDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    Difference,
    System,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Equation {
    Difference,
    Level,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InstrumentKind {
    /// Lagged levels (difference equations) or lagged differences (level
    /// equations).
    Gmm,
    Iv,
    Dummy,
    Constant,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstrumentColumn {
    pub name: String,
    pub equation: Equation,
    pub kind: InstrumentKind,
    pub variable: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowInfo {
    /// Period index into the panel's period axis.
    pub period: usize,
    pub equation: Equation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct UnitBlock {
    pub unit: String,
    pub rows: Vec<RowInfo>,
    pub y: DVector<f64>,
    /// Estimated columns only.
    pub x: DMatrix<f64>,
    pub z: DMatrix<f64>,
}

impl UnitBlock {
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    /// One-step weighting kernel: 2 on the diagonal and −1 between
    /// adjacent periods of the difference rows, identity on level rows.
    pub fn h_matrix(&self) -> DMatrix<f64> {
        let n = self.rows.len();
        let mut h = DMatrix::zeros(n, n);
        for (a, ra) in self.rows.iter().enumerate() {
            match ra.equation {
                Equation::Level => h[(a, a)] = 1.0,
                Equation::Difference => {
                    h[(a, a)] = 2.0;
                    for (b, rb) in self.rows.iter().enumerate() {
                        if rb.equation == Equation::Difference && rb.period.abs_diff(ra.period) == 1 {
                            h[(a, b)] = -1.0;
                        }
                    }
                }
            }
        }
        h
    }
}

/// Everything the estimator needs, fixed before any weighting is chosen.
#[derive(Debug, Clone, PartialEq)]
pub struct Design {
    pub scheme: Scheme,
    pub dependent: String,
    /// Right-hand-side terms in display order, including omitted ones.
    pub terms: Vec<String>,
    /// Estimated terms (columns of each `x`).
    pub names: Vec<String>,
    /// Terms dropped as collinear (dummies or the constant).
    pub omitted: Vec<String>,
    pub instruments: Vec<InstrumentColumn>,
    pub units: Vec<UnitBlock>,
    pub periods: Vec<i32>,
}

impl Design {
    pub fn instrument_count(&self) -> usize {
        self.instruments.len()
    }

    pub fn n_params(&self) -> usize {
        self.names.len()
    }

    pub fn group_count(&self) -> usize {
        self.units.len()
    }

    /// Reported observations: difference rows for difference GMM, level
    /// rows for system GMM.
    pub fn n_obs(&self) -> usize {
        let want = match self.scheme {
            Scheme::Difference => Equation::Difference,
            Scheme::System => Equation::Level,
        };
        self.units.iter().flat_map(|u| &u.rows).filter(|r| r.equation == want).count()
    }

    /// Same design with the listed instrument columns removed.
    pub fn without_instruments(&self, drop: &[usize]) -> Design {
        let keep: Vec<usize> = (0..self.instruments.len()).filter(|c| !drop.contains(c)).collect();
        let mut out = self.clone();
        out.instruments = keep.iter().map(|&c| self.instruments[c].clone()).collect();
        for u in out.units.iter_mut() {
            u.z = u.z.select_columns(&keep);
        }
        out
    }
}

/// Per-unit instrument matrices with their column descriptors.
#[derive(Debug, Clone, PartialEq)]
pub struct InstrumentBlocks {
    pub columns: Vec<InstrumentColumn>,
    pub blocks: Vec<(String, DMatrix<f64>)>,
}

pub fn build_difference_instruments(panel: &PanelDataset, spec: &ModelSpec, plan: &InstrumentPlan) -> Result<InstrumentBlocks> {
    Ok(blocks_of(&build_design(panel, spec, plan, Scheme::Difference)?))
}

pub fn build_system_instruments(panel: &PanelDataset, spec: &ModelSpec, plan: &InstrumentPlan) -> Result<InstrumentBlocks> {
    Ok(blocks_of(&build_design(panel, spec, plan, Scheme::System)?))
}

fn blocks_of(d: &Design) -> InstrumentBlocks {
    InstrumentBlocks {
        columns: d.instruments.clone(),
        blocks: d.units.iter().map(|u| (u.unit.clone(), u.z.clone())).collect(),
    }
}

/// Relative tolerance for the greedy collinearity check on the stacked
/// regressors.
const COLLINEAR_TOL: f64 = 1e-9;

struct Candidate {
    name: String,
    equation: Equation,
    kind: InstrumentKind,
    variable: String,
    /// For uncollapsed columns, the period index the column belongs to.
    period: Option<usize>,
    source: Source,
}

enum Source {
    /// Level of `var` at t − lag.
    LagLevel(usize),
    /// First difference of `var` at t − lag.
    LagDiff(usize),
    /// Dummy for period index k (differenced in difference rows).
    Dummy(usize),
    Constant,
}

pub fn build_design(panel: &PanelDataset, spec: &ModelSpec, plan: &InstrumentPlan, scheme: Scheme) -> Result<Design> {
    spec.validate(panel)?;
    plan.validate(spec, panel)?;
    if spec.lagged_dependent > 0 && !plan.gmm_style.iter().any(|g| g.variable == spec.dependent) {
        return Err(Error::Config(format!(
            "lagged dependent `{}` has no GMM-style instrument entry",
            spec.dependent
        )));
    }
    let n_t = panel.n_periods();
    if n_t < 3 {
        return Err(Error::InsufficientData("GMM needs at least three periods".into()));
    }
    let p = spec.lagged_dependent;
    let system = scheme == Scheme::System;

    let mut terms: Vec<String> = (1..=p).map(|l| spec.lag_name(l)).collect();
    terms.extend(spec.regressors.iter().map(|r| r.variable.clone()));
    let n_user = terms.len();
    if system {
        terms.push("_cons".into());
    }
    let first_dummy = terms.len();
    if spec.time_dummies {
        terms.extend((0..n_t).map(|k| format!("yr{}", k + 1)));
    }
    let k_all = terms.len();

    let value = |var: &str, i: usize, t: isize| -> Option<f64> {
        if t < 0 || t as usize >= n_t {
            return None;
        }
        panel.get(var, i, t as usize).ok().flatten()
    };
    let level_row = |i: usize, t: usize| -> Option<(f64, Vec<f64>)> {
        let ti = t as isize;
        let y = value(&spec.dependent, i, ti)?;
        let mut x = Vec::with_capacity(k_all);
        for l in 1..=p {
            x.push(value(&spec.dependent, i, ti - l as isize)?);
        }
        for r in &spec.regressors {
            x.push(value(&r.variable, i, ti)?);
        }
        if system {
            x.push(1.0);
        }
        if spec.time_dummies {
            x.extend((0..n_t).map(|k| if k == t { 1.0 } else { 0.0 }));
        }
        Some((y, x))
    };

    struct RawUnit {
        unit: String,
        index: usize,
        rows: Vec<RowInfo>,
        y: Vec<f64>,
        x: Vec<Vec<f64>>,
    }
    let mut raw = Vec::new();
    for (i, unit) in panel.units().iter().enumerate() {
        let levels: Vec<Option<(f64, Vec<f64>)>> = (0..n_t).map(|t| level_row(i, t)).collect();
        let mut r = RawUnit {
            unit: unit.clone(),
            index: i,
            rows: Vec::new(),
            y: Vec::new(),
            x: Vec::new(),
        };
        for t in 1..n_t {
            if let (Some((y1, x1)), Some((y0, x0))) = (&levels[t], &levels[t - 1]) {
                r.rows.push(RowInfo {
                    period: t,
                    equation: Equation::Difference,
                });
                r.y.push(y1 - y0);
                r.x.push(x1.iter().zip(x0).map(|(a, b)| a - b).collect());
            }
        }
        if system {
            for (t, lv) in levels.iter().enumerate() {
                if let Some((y, x)) = lv {
                    r.rows.push(RowInfo {
                        period: t,
                        equation: Equation::Level,
                    });
                    r.y.push(*y);
                    r.x.push(x.clone());
                }
            }
        }
        let has_diff = r.rows.iter().any(|row| row.equation == Equation::Difference);
        if has_diff || (system && !r.rows.is_empty()) {
            raw.push(r);
        }
    }
    if raw.is_empty() {
        return Err(Error::InsufficientData(format!(
            "no unit has a usable equation for `{}`",
            spec.dependent
        )));
    }

    // greedy collinearity in display order
    let mut gram = DMatrix::<f64>::zeros(k_all, k_all);
    for u in &raw {
        for row in &u.x {
            for a in 0..k_all {
                if row[a] == 0.0 {
                    continue;
                }
                for b in 0..k_all {
                    gram[(a, b)] += row[a] * row[b];
                }
            }
        }
    }
    let keep = greedy_independent(&gram, COLLINEAR_TOL);
    let bad_user: Vec<String> = (0..n_user).filter(|&j| !keep[j]).map(|j| terms[j].clone()).collect();
    if !bad_user.is_empty() {
        return Err(Error::Collinear(bad_user));
    }
    let kept_cols: Vec<usize> = (0..k_all).filter(|&j| keep[j]).collect();
    let omitted: Vec<String> = (0..k_all).filter(|&j| !keep[j]).map(|j| terms[j].clone()).collect();
    let names: Vec<String> = kept_cols.iter().map(|&j| terms[j].clone()).collect();

    // candidate instrument columns
    let diff_periods: Vec<usize> = {
        let mut v: Vec<usize> = raw
            .iter()
            .flat_map(|u| u.rows.iter().filter(|r| r.equation == Equation::Difference).map(|r| r.period))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let level_periods: Vec<usize> = {
        let mut v: Vec<usize> = raw
            .iter()
            .flat_map(|u| u.rows.iter().filter(|r| r.equation == Equation::Level).map(|r| r.period))
            .collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let period_label = |t: usize| panel.periods()[t];
    let mut cands: Vec<Candidate> = Vec::new();
    for g in &plan.gmm_style {
        let max = g.max_lag.unwrap_or(n_t - 1).min(n_t - 1);
        if g.collapse {
            for s in g.min_lag..=max {
                cands.push(Candidate {
                    name: format!("{} L{s}", g.variable),
                    equation: Equation::Difference,
                    kind: InstrumentKind::Gmm,
                    variable: g.variable.clone(),
                    period: None,
                    source: Source::LagLevel(s),
                });
            }
        } else {
            for &t in &diff_periods {
                for s in g.min_lag..=max.min(t) {
                    cands.push(Candidate {
                        name: format!("{} L{s} {}", g.variable, period_label(t)),
                        equation: Equation::Difference,
                        kind: InstrumentKind::Gmm,
                        variable: g.variable.clone(),
                        period: Some(t),
                        source: Source::LagLevel(s),
                    });
                }
            }
        }
    }
    for v in &plan.iv_style {
        cands.push(Candidate {
            name: format!("D.{v}"),
            equation: Equation::Difference,
            kind: InstrumentKind::Iv,
            variable: v.clone(),
            period: None,
            source: Source::LagDiff(0),
        });
    }
    let kept_dummies: Vec<usize> = if spec.time_dummies {
        (0..n_t).filter(|&k| keep[first_dummy + k]).collect()
    } else {
        Vec::new()
    };
    // in the system scheme difference residuals are differences of level
    // residuals, so differenced dummy moments would be exact combinations of
    // the level dummy and constant moments and Ω would be singular
    let diff_dummies: &[usize] = if system { &[] } else { &kept_dummies };
    for &k in diff_dummies {
        cands.push(Candidate {
            name: format!("D.yr{}", k + 1),
            equation: Equation::Difference,
            kind: InstrumentKind::Dummy,
            variable: format!("yr{}", k + 1),
            period: None,
            source: Source::Dummy(k),
        });
    }
    if system {
        for l in &plan.level {
            if l.collapse {
                cands.push(Candidate {
                    name: format!("D.{} L{} lev", l.variable, l.lag),
                    equation: Equation::Level,
                    kind: InstrumentKind::Gmm,
                    variable: l.variable.clone(),
                    period: None,
                    source: Source::LagDiff(l.lag),
                });
            } else {
                for &t in &level_periods {
                    cands.push(Candidate {
                        name: format!("D.{} L{} lev {}", l.variable, l.lag, period_label(t)),
                        equation: Equation::Level,
                        kind: InstrumentKind::Gmm,
                        variable: l.variable.clone(),
                        period: Some(t),
                        source: Source::LagDiff(l.lag),
                    });
                }
            }
        }
        for v in &plan.iv_style {
            cands.push(Candidate {
                name: format!("{v} lev"),
                equation: Equation::Level,
                kind: InstrumentKind::Iv,
                variable: v.clone(),
                period: None,
                source: Source::LagLevel(0),
            });
        }
        if keep[n_user] {
            cands.push(Candidate {
                name: "_cons lev".into(),
                equation: Equation::Level,
                kind: InstrumentKind::Constant,
                variable: "_cons".into(),
                period: None,
                source: Source::Constant,
            });
        }
        for &k in &kept_dummies {
            cands.push(Candidate {
                name: format!("yr{} lev", k + 1),
                equation: Equation::Level,
                kind: InstrumentKind::Dummy,
                variable: format!("yr{}", k + 1),
                period: None,
                source: Source::Dummy(k),
            });
        }
    }

    let fill = |c: &Candidate, i: usize, row: &RowInfo| -> f64 {
        if c.equation != row.equation || c.period.is_some_and(|t| t != row.period) {
            return 0.0;
        }
        let t = row.period as isize;
        let v = match (&c.source, row.equation) {
            (Source::LagLevel(0), Equation::Difference) => {
                // IV-style in a difference row enters differenced
                value(&c.variable, i, t).zip(value(&c.variable, i, t - 1)).map(|(a, b)| a - b)
            }
            (Source::LagLevel(s), _) => value(&c.variable, i, t - *s as isize),
            (Source::LagDiff(s), _) => {
                let s = *s as isize;
                value(&c.variable, i, t - s).zip(value(&c.variable, i, t - s - 1)).map(|(a, b)| a - b)
            }
            (Source::Dummy(k), Equation::Level) => Some(if *k == row.period { 1.0 } else { 0.0 }),
            (Source::Dummy(k), Equation::Difference) => {
                let now = if *k == row.period { 1.0 } else { 0.0 };
                let before = if *k + 1 == row.period { 1.0 } else { 0.0 };
                Some(now - before)
            }
            (Source::Constant, _) => Some(1.0),
        };
        v.unwrap_or(0.0)
    };

    let mut z_full: Vec<DMatrix<f64>> = Vec::with_capacity(raw.len());
    let mut nonzero = vec![false; cands.len()];
    for u in &raw {
        let z = DMatrix::from_fn(u.rows.len(), cands.len(), |r, c| fill(&cands[c], u.index, &u.rows[r]));
        for c in 0..cands.len() {
            if !nonzero[c] && z.column(c).iter().any(|&v| v != 0.0) {
                nonzero[c] = true;
            }
        }
        z_full.push(z);
    }
    let z_keep: Vec<usize> = (0..cands.len()).filter(|&c| nonzero[c]).collect();
    let instruments: Vec<InstrumentColumn> = z_keep
        .iter()
        .map(|&c| InstrumentColumn {
            name: cands[c].name.clone(),
            equation: cands[c].equation,
            kind: cands[c].kind,
            variable: cands[c].variable.clone(),
        })
        .collect();

    let units = raw
        .into_iter()
        .zip(z_full)
        .map(|(u, z)| UnitBlock {
            unit: u.unit,
            x: DMatrix::from_fn(u.rows.len(), kept_cols.len(), |r, c| u.x[r][kept_cols[c]]),
            y: DVector::from_vec(u.y),
            z: z.select_columns(&z_keep),
            rows: u.rows,
        })
        .collect();

    Ok(Design {
        scheme,
        dependent: spec.dependent.clone(),
        terms,
        names,
        omitted,
        instruments,
        units,
        periods: panel.periods().to_vec(),
    })
}
