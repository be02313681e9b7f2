//! Rectangular unit × period panel with a per-cell missing mask, plus the
//! series transforms (log, lag, first difference) and grouped descriptive
//! statistics that everything downstream consumes.
//!
//! Cells are stored unit-major: the value for unit `i` at period index `t`
//! lives at `i * n_periods + t`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One named variable: values plus an observed flag per cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Column {
    name: String,
    values: Vec<f64>,
    observed: Vec<bool>,
}

impl Column {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn get(&self, idx: usize) -> Option<f64> {
        if self.observed[idx] {
            Some(self.values[idx])
        } else {
            None
        }
    }

    pub fn observed_count(&self) -> usize {
        self.observed.iter().filter(|&&o| o).count()
    }
}

/// Immutable balanced-axis panel. Individual cells may be missing.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelDataset {
    units: Vec<String>,
    periods: Vec<i32>,
    columns: Vec<Column>,
    groups: Option<Vec<String>>,
}

impl PanelDataset {
    /// Creates an empty panel over the given axes. Units must be unique and
    /// periods unique, ascending and contiguous.
    pub fn new(units: Vec<String>, periods: Vec<i32>) -> Result<Self> {
        if units.is_empty() || periods.is_empty() {
            return Err(Error::InvalidPanel("panel needs at least one unit and one period".into()));
        }
        let mut seen = HashSet::new();
        for u in &units {
            if !seen.insert(u.as_str()) {
                return Err(Error::InvalidPanel(format!("duplicate unit `{u}`")));
            }
        }
        for w in periods.windows(2) {
            if w[1] != w[0] + 1 {
                return Err(Error::InvalidPanel(format!(
                    "periods must be contiguous and ascending, found {} followed by {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self {
            units,
            periods,
            columns: Vec::new(),
            groups: None,
        })
    }

    /// Returns a copy with `name` appended. `values` must have one entry per
    /// cell in unit-major order; `None` marks a missing cell.
    pub fn with_column(mut self, name: &str, values: Vec<Option<f64>>) -> Result<Self> {
        self.push_column(name, values)?;
        Ok(self)
    }

    fn push_column(&mut self, name: &str, values: Vec<Option<f64>>) -> Result<()> {
        if self.column(name).is_some() {
            return Err(Error::InvalidPanel(format!("variable `{name}` already exists")));
        }
        if values.len() != self.n_cells() {
            return Err(Error::InvalidPanel(format!(
                "variable `{name}` has {} cells, expected {}",
                values.len(),
                self.n_cells()
            )));
        }
        let observed: Vec<bool> = values.iter().map(|v| v.map_or(false, f64::is_finite)).collect();
        let values = values
            .into_iter()
            .map(|v| v.filter(|x| x.is_finite()).unwrap_or(0.0))
            .collect();
        self.columns.push(Column {
            name: name.to_string(),
            values,
            observed,
        });
        Ok(())
    }

    /// Attaches a group label to every unit, replacing any previous tags.
    pub fn with_groups(mut self, tags: Vec<String>) -> Result<Self> {
        if tags.len() != self.units.len() {
            return Err(Error::InvalidPanel(format!(
                "{} group tags for {} units",
                tags.len(),
                self.units.len()
            )));
        }
        self.groups = Some(tags);
        Ok(self)
    }

    pub fn units(&self) -> &[String] {
        &self.units
    }

    pub fn periods(&self) -> &[i32] {
        &self.periods
    }

    pub fn n_units(&self) -> usize {
        self.units.len()
    }

    pub fn n_periods(&self) -> usize {
        self.periods.len()
    }

    pub fn n_cells(&self) -> usize {
        self.units.len() * self.periods.len()
    }

    pub fn groups(&self) -> Option<&[String]> {
        self.groups.as_deref()
    }

    /// Distinct group labels in order of first appearance.
    pub fn group_labels(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        if let Some(g) = &self.groups {
            for label in g {
                if !out.contains(label) {
                    out.push(label.clone());
                }
            }
        }
        out
    }

    pub fn variable_names(&self) -> Vec<&str> {
        self.columns.iter().map(|c| c.name.as_str()).collect()
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        self.columns.iter().find(|c| c.name == name)
    }

    pub fn has_variable(&self, name: &str) -> bool {
        self.column(name).is_some()
    }

    fn require(&self, name: &str) -> Result<&Column> {
        self.column(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn unit_index(&self, unit: &str) -> Option<usize> {
        self.units.iter().position(|u| u == unit)
    }

    pub fn period_index(&self, period: i32) -> Option<usize> {
        let first = self.periods[0];
        let idx = period.checked_sub(first)?;
        usize::try_from(idx).ok().filter(|&i| i < self.periods.len())
    }

    /// Value of `variable` for unit index `unit` at period index `t`.
    pub fn get(&self, variable: &str, unit: usize, t: usize) -> Result<Option<f64>> {
        let col = self.require(variable)?;
        Ok(col.get(unit * self.n_periods() + t))
    }

    /// One unit's series, `None` where missing.
    pub fn series(&self, variable: &str, unit: usize) -> Result<Vec<Option<f64>>> {
        let col = self.require(variable)?;
        let tn = self.n_periods();
        Ok((0..tn).map(|t| col.get(unit * tn + t)).collect())
    }

    /// Panel restricted to the given unit indices (in the given order).
    pub fn select_units(&self, indices: &[usize]) -> Result<Self> {
        let tn = self.n_periods();
        let mut units = Vec::with_capacity(indices.len());
        for &i in indices {
            let u = self
                .units
                .get(i)
                .ok_or_else(|| Error::InvalidPanel(format!("unit index {i} out of range")))?;
            units.push(u.clone());
        }
        let mut out = PanelDataset::new(units, self.periods.clone())?;
        for col in &self.columns {
            let mut values = Vec::with_capacity(indices.len() * tn);
            for &i in indices {
                values.extend((0..tn).map(|t| col.get(i * tn + t)));
            }
            out.push_column(&col.name, values)?;
        }
        if let Some(g) = &self.groups {
            out.groups = Some(indices.iter().map(|&i| g[i].clone()).collect());
        }
        Ok(out)
    }

    /// Panel restricted to a contiguous period window `[first, last]`.
    pub fn select_periods(&self, first: i32, last: i32) -> Result<Self> {
        let a = self
            .period_index(first)
            .ok_or_else(|| Error::InvalidPanel(format!("period {first} out of range")))?;
        let b = self
            .period_index(last)
            .ok_or_else(|| Error::InvalidPanel(format!("period {last} out of range")))?;
        if b < a {
            return Err(Error::InvalidPanel(format!("empty period window {first}..={last}")));
        }
        let tn = self.n_periods();
        let mut out = PanelDataset::new(self.units.clone(), self.periods[a..=b].to_vec())?;
        for col in &self.columns {
            let mut values = Vec::with_capacity(self.n_units() * (b - a + 1));
            for i in 0..self.n_units() {
                values.extend((a..=b).map(|t| col.get(i * tn + t)));
            }
            out.push_column(&col.name, values)?;
        }
        out.groups = self.groups.clone();
        Ok(out)
    }
}

/// How natural-log transforms treat non-positive cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LogPolicy {
    /// Any non-positive observed value is an error.
    #[default]
    Strict,
    /// A column with any non-positive observed value is mapped through
    /// `sign(x) * ln(1 + |x|)` as a whole; strictly positive columns still
    /// get the plain natural log.
    SignedLog,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransformKind {
    NaturalLog,
    SignedLog,
    Lag(usize),
    FirstDifference,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesTransform {
    pub kind: TransformKind,
    pub source: String,
    pub output: String,
}

impl SeriesTransform {
    pub fn new(kind: TransformKind, source: impl Into<String>, output: impl Into<String>) -> Self {
        Self {
            kind,
            source: source.into(),
            output: output.into(),
        }
    }
}

pub fn signed_log(x: f64) -> f64 {
    x.signum() * x.abs().ln_1p()
}

/// Returns a new panel with the transform's output column appended.
pub fn apply_transform(panel: &PanelDataset, t: &SeriesTransform, policy: LogPolicy) -> Result<PanelDataset> {
    if t.output == t.source {
        return Err(Error::InvalidTransform(format!(
            "output name `{}` must differ from its source",
            t.output
        )));
    }
    if let TransformKind::Lag(0) = t.kind {
        return Err(Error::InvalidTransform("lag order must be at least 1".into()));
    }
    let col = panel.require(&t.source)?;
    let tn = panel.n_periods();
    let n = panel.n_cells();

    let values: Vec<Option<f64>> = match t.kind {
        TransformKind::NaturalLog => {
            let has_nonpositive = (0..n).any(|i| col.get(i).is_some_and(|v| v <= 0.0));
            if has_nonpositive && policy == LogPolicy::Strict {
                let i = (0..n).find(|&i| col.get(i).is_some_and(|v| v <= 0.0)).unwrap();
                return Err(Error::NonPositiveLog {
                    variable: t.source.clone(),
                    unit: panel.units[i / tn].clone(),
                    period: panel.periods[i % tn],
                    value: col.values[i],
                });
            }
            if has_nonpositive {
                (0..n).map(|i| col.get(i).map(signed_log)).collect()
            } else {
                (0..n).map(|i| col.get(i).map(f64::ln)).collect()
            }
        }
        TransformKind::SignedLog => (0..n).map(|i| col.get(i).map(signed_log)).collect(),
        TransformKind::Lag(k) => (0..n)
            .map(|i| {
                let s = i % tn;
                if s >= k {
                    col.get(i - k)
                } else {
                    None
                }
            })
            .collect(),
        TransformKind::FirstDifference => (0..n)
            .map(|i| {
                if i % tn == 0 {
                    return None;
                }
                match (col.get(i), col.get(i - 1)) {
                    (Some(a), Some(b)) => Some(a - b),
                    _ => None,
                }
            })
            .collect(),
    };
    panel.clone().with_column(&t.output, values)
}

/// Summary statistics of one variable within one group.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DescriptiveRow {
    pub variable: String,
    pub group: String,
    pub obs: usize,
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
}

/// Label used for the pooled (all units) rows.
pub const ALL_GROUP: &str = "all";

fn summarize(variable: &str, group: &str, values: &[f64]) -> DescriptiveRow {
    let n = values.len();
    let mean = values.iter().sum::<f64>() / n as f64;
    let std = if n > 1 {
        (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
    } else {
        0.0
    };
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    DescriptiveRow {
        variable: variable.to_string(),
        group: group.to_string(),
        obs: n,
        // clamp against rounding so min <= mean <= max holds exactly
        mean: mean.clamp(min, max),
        std,
        min,
        max,
    }
}

/// Descriptive statistics over observed cells, one row per variable for the
/// pooled panel and, with `by_group`, one more row per group label.
pub fn describe(panel: &PanelDataset, variables: &[&str], by_group: bool) -> Result<Vec<DescriptiveRow>> {
    let names: Vec<&str> = if variables.is_empty() {
        panel.variable_names()
    } else {
        variables.to_vec()
    };
    let labels = if by_group { panel.group_labels() } else { Vec::new() };
    let tn = panel.n_periods();
    let mut empty = Vec::new();
    let mut rows = Vec::new();
    for name in names {
        let col = panel.require(name)?;
        let all: Vec<f64> = (0..panel.n_cells()).filter_map(|i| col.get(i)).collect();
        if all.is_empty() {
            empty.push(name.to_string());
            continue;
        }
        rows.push(summarize(name, ALL_GROUP, &all));
        for label in &labels {
            let tags = panel.groups.as_ref().expect("labels imply tags");
            let vals: Vec<f64> = (0..panel.n_cells())
                .filter(|&i| &tags[i / tn] == label)
                .filter_map(|i| col.get(i))
                .collect();
            if !vals.is_empty() {
                rows.push(summarize(name, label, &vals));
            }
        }
    }
    if !empty.is_empty() {
        return Err(Error::EmptyVariable(empty.join(", ")));
    }
    Ok(rows)
}

/// Units carrying group tag `label`; periods unchanged.
pub fn subset_by_group(panel: &PanelDataset, label: &str) -> Result<PanelDataset> {
    let tags = panel
        .groups
        .as_ref()
        .ok_or_else(|| Error::UnknownGroup(label.to_string()))?;
    let idx: Vec<usize> = tags
        .iter()
        .enumerate()
        .filter(|(_, t)| t.as_str() == label)
        .map(|(i, _)| i)
        .collect();
    if idx.is_empty() {
        return Err(Error::UnknownGroup(label.to_string()));
    }
    panel.select_units(&idx)
}
