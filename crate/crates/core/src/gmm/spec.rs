use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::panel::PanelDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Role {
    /// Uncorrelated with past, present and future idiosyncratic errors.
    Exogenous,
    /// Uncorrelated with present and future errors only.
    Predetermined,
    /// Correlated with present errors.
    Endogenous,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regressor {
    pub variable: String,
    pub role: Role,
}

impl Regressor {
    pub fn new(variable: impl Into<String>, role: Role) -> Self {
        Self {
            variable: variable.into(),
            role,
        }
    }
}

/// One dynamic panel equation: the dependent variable on its own lags,
/// a list of regressors and optional period dummies, with error
/// `u_i + η_it`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSpec {
    pub dependent: String,
    /// Number of lags of the dependent variable on the right-hand side.
    pub lagged_dependent: usize,
    pub regressors: Vec<Regressor>,
    pub time_dummies: bool,
}

impl ModelSpec {
    pub fn new(dependent: impl Into<String>, lagged_dependent: usize) -> Self {
        Self {
            dependent: dependent.into(),
            lagged_dependent,
            regressors: Vec::new(),
            time_dummies: false,
        }
    }

    pub fn with_regressor(mut self, variable: impl Into<String>, role: Role) -> Self {
        self.regressors.push(Regressor::new(variable, role));
        self
    }

    pub fn with_time_dummies(mut self, on: bool) -> Self {
        self.time_dummies = on;
        self
    }

    /// Coefficient label of the `l`-th lag of the dependent variable.
    pub fn lag_name(&self, l: usize) -> String {
        if l == 1 {
            format!("L.{}", self.dependent)
        } else {
            format!("L{l}.{}", self.dependent)
        }
    }

    pub fn validate(&self, panel: &PanelDataset) -> Result<()> {
        if !panel.has_variable(&self.dependent) {
            return Err(Error::UnknownVariable(self.dependent.clone()));
        }
        let mut seen = std::collections::HashSet::new();
        for r in &self.regressors {
            if r.variable == self.dependent {
                return Err(Error::Config(format!(
                    "dependent variable `{}` cannot also be a regressor",
                    self.dependent
                )));
            }
            if !seen.insert(r.variable.as_str()) {
                return Err(Error::Config(format!("regressor `{}` listed twice", r.variable)));
            }
            if !panel.has_variable(&r.variable) {
                return Err(Error::UnknownVariable(r.variable.clone()));
            }
        }
        if self.lagged_dependent == 0 && self.regressors.is_empty() && !self.time_dummies {
            return Err(Error::Config("model has no right-hand-side terms".into()));
        }
        Ok(())
    }
}

/// Lagged levels of `variable` as instruments for the differenced equations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GmmStyle {
    pub variable: String,
    pub min_lag: usize,
    /// `None` uses every available lag.
    pub max_lag: Option<usize>,
    pub collapse: bool,
}

/// Lagged first difference of `variable` as instrument for the level
/// equations of system GMM.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelStyle {
    pub variable: String,
    pub lag: usize,
    pub collapse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct InstrumentPlan {
    pub gmm_style: Vec<GmmStyle>,
    /// Instruments for themselves: differenced in the difference equations,
    /// in levels in the level equations.
    pub iv_style: Vec<String>,
    /// Used only by system GMM.
    pub level: Vec<LevelStyle>,
}

/// Knobs for the default plan derived from regressor roles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanOptions {
    pub collapse: bool,
    /// Number of lags used per GMM-style variable, counted from its first
    /// valid lag; `None` uses all.
    pub lag_depth: Option<usize>,
    /// Lag of the differenced level instruments.
    pub level_lag: usize,
}

impl Default for PlanOptions {
    fn default() -> Self {
        Self {
            collapse: false,
            lag_depth: None,
            level_lag: 1,
        }
    }
}

impl InstrumentPlan {
    /// Lagged dependent and endogenous regressors from lag 2, predetermined
    /// from lag 1, exogenous as IV-style; level instruments for every
    /// GMM-style variable.
    pub fn from_roles(spec: &ModelSpec, opts: PlanOptions) -> Self {
        let mut plan = InstrumentPlan::default();
        let mut gmm = |variable: &str, min_lag: usize| {
            plan.gmm_style.push(GmmStyle {
                variable: variable.to_string(),
                min_lag,
                max_lag: opts.lag_depth.map(|d| min_lag + d.max(1) - 1),
                collapse: opts.collapse,
            });
        };
        if spec.lagged_dependent > 0 {
            gmm(&spec.dependent, spec.lagged_dependent + 1);
        }
        for r in &spec.regressors {
            match r.role {
                Role::Endogenous => gmm(&r.variable, 2),
                Role::Predetermined => gmm(&r.variable, 1),
                Role::Exogenous => {}
            }
        }
        plan.iv_style = spec
            .regressors
            .iter()
            .filter(|r| r.role == Role::Exogenous)
            .map(|r| r.variable.clone())
            .collect();
        plan.level = plan
            .gmm_style
            .iter()
            .map(|g| LevelStyle {
                variable: g.variable.clone(),
                lag: opts.level_lag,
                collapse: opts.collapse,
            })
            .collect();
        plan
    }

    pub fn validate(&self, spec: &ModelSpec, panel: &PanelDataset) -> Result<()> {
        let names = self
            .gmm_style
            .iter()
            .map(|g| &g.variable)
            .chain(self.iv_style.iter())
            .chain(self.level.iter().map(|l| &l.variable));
        for v in names {
            if !panel.has_variable(v) {
                return Err(Error::UnknownVariable(v.clone()));
            }
        }
        for g in &self.gmm_style {
            if g.min_lag == 0 {
                return Err(Error::Config(format!("GMM-style lags of `{}` must start at 1 or later", g.variable)));
            }
            if let Some(max) = g.max_lag {
                if max < g.min_lag {
                    return Err(Error::Config(format!(
                        "GMM-style lags of `{}`: max {max} below min {}",
                        g.variable, g.min_lag
                    )));
                }
            }
            if g.variable == spec.dependent && spec.lagged_dependent > 0 && g.min_lag < 2 {
                return Err(Error::Config(format!(
                    "lagged dependent `{}` needs GMM-style instruments from lag 2",
                    spec.dependent
                )));
            }
        }
        Ok(())
    }
}
