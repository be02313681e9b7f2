//! Panel unit-root tests: Levin–Lin–Chu (pooled, homogeneous ρ) and
//! Im–Pesaran–Shin (mean of individual ADF t statistics).
//!
//! Both tests work on the longest contiguous observed stretch of each
//! unit's series. Units too short for the requested lag order are dropped
//! and listed in the result.

mod ips_moments;
mod llc_moments;
mod llc_table;
mod moments;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{normal_cdf, ols};
use crate::panel::PanelDataset;

pub use moments::{ips_moments, llc_adjustments, simulate_ips_moments, simulate_llc_adjustments, MomentSource};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Deterministic {
    None,
    Intercept,
    Trend,
}

impl Deterministic {
    fn columns(self) -> usize {
        match self {
            Deterministic::None => 0,
            Deterministic::Intercept => 1,
            Deterministic::Trend => 2,
        }
    }

    pub(crate) fn code(self) -> u8 {
        self.columns() as u8
    }
}

/// ADF specification shared by both panel tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdfSpec {
    /// Augmentation lags; the maximum when `bic_lags` is set.
    pub lags: usize,
    pub deterministic: Deterministic,
    /// Choose each unit's lag order in `0..=lags` by BIC.
    pub bic_lags: bool,
}

impl Default for AdfSpec {
    fn default() -> Self {
        Self {
            lags: 1,
            deterministic: Deterministic::Intercept,
            bic_lags: false,
        }
    }
}

/// Controls the simulated fallback for moments not in the embedded tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitRootOptions {
    pub allow_simulation: bool,
    pub simulation_reps: usize,
    pub simulation_seed: u64,
}

impl Default for UnitRootOptions {
    fn default() -> Self {
        Self {
            allow_simulation: true,
            simulation_reps: 50_000,
            simulation_seed: 0x11C5_2002,
        }
    }
}

/// The stretch of one unit's series that entered a test.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UsedUnit {
    pub unit: String,
    pub first_period: i32,
    pub last_period: i32,
    pub lags: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitRootResult {
    pub test: String,
    pub variable: String,
    pub statistic: f64,
    /// Lower-tail standard normal p-value.
    pub p_value: f64,
    /// Individual ADF t statistics, IPS only.
    pub unit_t: Vec<f64>,
    pub spec: AdfSpec,
    pub n_units: usize,
    /// Average number of periods per unit regression.
    pub n_periods: f64,
    pub used: Vec<UsedUnit>,
    pub dropped: Vec<String>,
    pub moments: MomentSource,
}

/// Fitted ADF regression for one series.
#[derive(Debug, Clone)]
pub struct AdfFit {
    pub t_stat: f64,
    pub rho: f64,
    pub n_obs: usize,
    pub lags: usize,
}

/// Design of the ADF regression for lag order `p`, dropping the first
/// `skip` extra observations (used for BIC comparisons on a common sample).
fn adf_design(y: &[f64], p: usize, det: Deterministic, skip: usize) -> (DMatrix<f64>, DVector<f64>) {
    let n = y.len();
    let start = p + 1 + skip;
    let rows = n - start;
    let k = 1 + p + det.columns();
    let mut x = DMatrix::zeros(rows, k);
    let mut dy = DVector::zeros(rows);
    for (r, t) in (start..n).enumerate() {
        dy[r] = y[t] - y[t - 1];
        x[(r, 0)] = y[t - 1];
        for j in 1..=p {
            x[(r, j)] = y[t - j] - y[t - j - 1];
        }
        match det {
            Deterministic::None => {}
            Deterministic::Intercept => x[(r, p + 1)] = 1.0,
            Deterministic::Trend => {
                x[(r, p + 1)] = 1.0;
                x[(r, p + 2)] = t as f64;
            }
        }
    }
    (x, dy)
}

fn min_length(p: usize, det: Deterministic) -> usize {
    // usable = n - p - 1 must reach p + 3 and exceed the regressor count
    let usable = (p + 3).max(p + det.columns() + 2);
    usable + p + 1
}

fn adf_fixed(y: &[f64], p: usize, det: Deterministic) -> Result<AdfFit> {
    if y.len() < min_length(p, det) {
        return Err(Error::InsufficientData(format!(
            "ADF with {p} lags needs {} observations, got {}",
            min_length(p, det),
            y.len()
        )));
    }
    let (x, dy) = adf_design(y, p, det, 0);
    let fit = ols(&x, &dy)?;
    let scale = dy.norm_squared().max(x.column(0).norm_squared()).max(1.0);
    if fit.rss <= 1e-24 * scale * dy.len() as f64 {
        return Err(Error::Degenerate("ADF regression fits exactly (zero residual variance)".into()));
    }
    let se = fit.std_error(0);
    Ok(AdfFit {
        t_stat: fit.coef[0] / se,
        rho: fit.coef[0],
        n_obs: dy.len(),
        lags: p,
    })
}

fn bic_lag(y: &[f64], max_p: usize, det: Deterministic) -> Result<usize> {
    let mut best: Option<(f64, usize)> = None;
    for p in 0..=max_p {
        if y.len() < min_length(max_p, det) {
            break;
        }
        let (x, dy) = adf_design(y, p, det, max_p - p);
        let Ok(fit) = ols(&x, &dy) else { continue };
        let n = dy.len() as f64;
        let bic = n * (fit.rss / n).ln() + x.ncols() as f64 * n.ln();
        if best.map_or(true, |(b, _)| bic < b) {
            best = Some((bic, p));
        }
    }
    best.map(|(_, p)| p)
        .ok_or_else(|| Error::InsufficientData(format!("too few observations to compare lags up to {max_p}")))
}

/// Full ADF fit honouring the spec's lag-selection switch.
pub fn adf_regression(series: &[f64], spec: &AdfSpec) -> Result<AdfFit> {
    let p = if spec.bic_lags {
        bic_lag(series, spec.lags, spec.deterministic)?
    } else {
        spec.lags
    };
    adf_fixed(series, p, spec.deterministic)
}

/// t statistic on the lagged level in the augmented Dickey–Fuller regression.
pub fn adf_stat(series: &[f64], spec: &AdfSpec) -> Result<f64> {
    adf_regression(series, spec).map(|f| f.t_stat)
}

/// Longest contiguous observed run of one unit's series (latest on ties),
/// as (first period index, values).
fn longest_run(series: &[Option<f64>]) -> (usize, Vec<f64>) {
    let mut best = (0usize, 0usize);
    let mut start = None;
    for (t, v) in series.iter().enumerate() {
        match (v, start) {
            (Some(_), None) => start = Some(t),
            (None, Some(s)) => {
                if t - s >= best.1 - best.0 {
                    best = (s, t);
                }
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        if series.len() - s >= best.1 - best.0 {
            best = (s, series.len());
        }
    }
    (best.0, series[best.0..best.1].iter().map(|v| v.unwrap()).collect())
}

struct UnitSeries {
    unit: String,
    first: usize,
    values: Vec<f64>,
}

fn collect_units(panel: &PanelDataset, variable: &str, spec: &AdfSpec) -> Result<(Vec<UnitSeries>, Vec<String>)> {
    let need = min_length(spec.lags, spec.deterministic);
    let mut kept = Vec::new();
    let mut dropped = Vec::new();
    for (i, unit) in panel.units().iter().enumerate() {
        let (first, values) = longest_run(&panel.series(variable, i)?);
        if values.len() >= need {
            kept.push(UnitSeries {
                unit: unit.clone(),
                first,
                values,
            });
        } else {
            dropped.push(unit.clone());
        }
    }
    Ok((kept, dropped))
}

fn used_record(panel: &PanelDataset, u: &UnitSeries, lags: usize) -> UsedUnit {
    UsedUnit {
        unit: u.unit.clone(),
        first_period: panel.periods()[u.first],
        last_period: panel.periods()[u.first + u.values.len() - 1],
        lags,
    }
}

/// Per-unit quantities of the LLC procedure.
pub(crate) struct LlcUnit {
    /// Σ ṽ ẽ over the unit's regression sample.
    pub num: f64,
    /// Σ ṽ²
    pub den: f64,
    /// Σ ẽ²
    pub ee: f64,
    /// Ratio of long-run to regression standard deviation.
    pub s: f64,
    pub n_obs: usize,
    pub lags: usize,
}

fn residualize(target: &DVector<f64>, d: &DMatrix<f64>) -> Result<DVector<f64>> {
    if d.ncols() == 0 {
        return Ok(target.clone());
    }
    Ok(ols(d, target)?.resid)
}

fn bartlett_lrv(dy: &[f64], lags: usize) -> f64 {
    let n = dy.len() as f64;
    let mut v = dy.iter().map(|x| x * x).sum::<f64>() / n;
    for l in 1..=lags.min(dy.len().saturating_sub(1)) {
        let w = 1.0 - l as f64 / (lags as f64 + 1.0);
        let g: f64 = (l..dy.len()).map(|t| dy[t] * dy[t - l]).sum::<f64>() / n;
        v += 2.0 * w * g;
    }
    v
}

/// Orthogonalized and normalized residual sums for one unit.
pub(crate) fn llc_unit(y: &[f64], p: usize, det: Deterministic) -> Result<LlcUnit> {
    if y.len() < min_length(p, det) {
        return Err(Error::InsufficientData(format!("LLC unit needs {} observations", min_length(p, det))));
    }
    let (x, dy) = adf_design(y, p, det, 0);
    let rows = dy.len();
    let d = x.columns(1, x.ncols() - 1).into_owned();
    let e = residualize(&dy, &d)?;
    let v = residualize(&x.column(0).into_owned(), &d)?;
    let vv = v.norm_squared();
    if vv <= 0.0 {
        return Err(Error::Degenerate("lagged level is fully explained by deterministic terms".into()));
    }
    let delta = v.dot(&e) / vv;
    let rss = (&e - &v * delta).norm_squared();
    let dof = rows as f64 - p as f64 - 1.0;
    let sigma2 = rss / dof;
    if !(sigma2 > 0.0) {
        return Err(Error::Degenerate("zero residual variance in LLC unit regression".into()));
    }
    let mut diffs: Vec<f64> = y.windows(2).map(|w| w[1] - w[0]).collect();
    if det == Deterministic::Trend {
        let m = diffs.iter().sum::<f64>() / diffs.len() as f64;
        diffs.iter_mut().for_each(|d| *d -= m);
    }
    let kbar = (3.21 * (y.len() as f64).powf(1.0 / 3.0)).floor() as usize;
    let lrv = bartlett_lrv(&diffs, kbar);
    Ok(LlcUnit {
        num: v.dot(&e) / sigma2,
        den: vv / sigma2,
        ee: e.norm_squared() / sigma2,
        s: (lrv / sigma2).sqrt(),
        n_obs: rows,
        lags: p,
    })
}

/// Pooled LLC quantities.
pub(crate) struct LlcPooled {
    pub sigma2: f64,
    pub t_delta: f64,
    pub se: f64,
    pub s_n: f64,
    pub t_tilde: f64,
    pub n: usize,
}

pub(crate) fn llc_pool(units: &[LlcUnit]) -> LlcPooled {
    let n = units.len();
    let num: f64 = units.iter().map(|u| u.num).sum();
    let den: f64 = units.iter().map(|u| u.den).sum();
    let ee: f64 = units.iter().map(|u| u.ee).sum();
    let total: usize = units.iter().map(|u| u.n_obs).sum();
    let delta = num / den;
    // Σ(ẽ - δ ṽ)² = Σẽ² - 2δΣṽẽ + δ²Σṽ²
    let sigma2 = (ee - 2.0 * delta * num + delta * delta * den) / total as f64;
    let se = (sigma2 / den).sqrt();
    LlcPooled {
        sigma2,
        t_delta: delta / se,
        se,
        s_n: units.iter().map(|u| u.s).sum::<f64>() / n as f64,
        t_tilde: total as f64 / n as f64,
        n,
    }
}

fn unit_lags(values: &[f64], spec: &AdfSpec) -> Result<usize> {
    if spec.bic_lags {
        bic_lag(values, spec.lags, spec.deterministic)
    } else {
        Ok(spec.lags)
    }
}

/// Levin–Lin–Chu adjusted t* with a lower-tail normal p-value.
pub fn llc_test(panel: &PanelDataset, variable: &str, spec: &AdfSpec, opts: &UnitRootOptions) -> Result<UnitRootResult> {
    let (series, dropped) = collect_units(panel, variable, spec)?;
    if series.is_empty() {
        return Err(Error::InsufficientData(format!("no unit of `{variable}` is long enough for LLC")));
    }
    if series.len() < 2 {
        return Err(Error::InsufficientData(
            "LLC needs at least two units; use adf_stat for a single series".into(),
        ));
    }
    let units: Vec<LlcUnit> = series
        .par_iter()
        .map(|u| {
            let p = unit_lags(&u.values, spec)?;
            llc_unit(&u.values, p, spec.deterministic)
        })
        .collect::<Result<_>>()?;
    let pooled = llc_pool(&units);
    let mean_lags = units.iter().map(|u| u.lags as f64).sum::<f64>() / units.len() as f64;
    let (mu, sd, source) = llc_adjustments(pooled.t_tilde, mean_lags, spec.deterministic, opts)?;
    let adj = pooled.n as f64 * pooled.t_tilde * pooled.s_n / pooled.sigma2 * pooled.se * mu;
    let t_star = (pooled.t_delta - adj) / sd;
    let used = series.iter().zip(&units).map(|(u, f)| used_record(panel, u, f.lags)).collect();
    Ok(UnitRootResult {
        test: "Levin-Lin-Chu".into(),
        variable: variable.to_string(),
        statistic: t_star,
        p_value: normal_cdf(t_star),
        unit_t: Vec::new(),
        spec: *spec,
        n_units: pooled.n,
        n_periods: pooled.t_tilde,
        used,
        dropped,
        moments: source,
    })
}

/// Im–Pesaran–Shin W_t-bar with a lower-tail normal p-value.
pub fn ips_test(panel: &PanelDataset, variable: &str, spec: &AdfSpec, opts: &UnitRootOptions) -> Result<UnitRootResult> {
    let (series, dropped) = collect_units(panel, variable, spec)?;
    if series.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "IPS needs at least two usable units of `{variable}`, found {}",
            series.len()
        )));
    }
    let fits: Vec<AdfFit> = series
        .par_iter()
        .map(|u| adf_regression(&u.values, spec))
        .collect::<Result<_>>()?;
    let n = fits.len() as f64;
    let t_bar = fits.iter().map(|f| f.t_stat).sum::<f64>() / n;
    let mut mean_e = 0.0;
    let mut mean_v = 0.0;
    let mut source = MomentSource::Table;
    for (u, f) in series.iter().zip(&fits) {
        let (e, v, s) = ips_moments(u.values.len(), f.lags, spec.deterministic, opts)?;
        mean_e += e / n;
        mean_v += v / n;
        if s == MomentSource::Simulated {
            source = MomentSource::Simulated;
        }
    }
    let w = n.sqrt() * (t_bar - mean_e) / mean_v.sqrt();
    let used = series.iter().zip(&fits).map(|(u, f)| used_record(panel, u, f.lags)).collect();
    Ok(UnitRootResult {
        test: "Im-Pesaran-Shin".into(),
        variable: variable.to_string(),
        statistic: w,
        p_value: normal_cdf(w),
        unit_t: fits.iter().map(|f| f.t_stat).collect(),
        spec: *spec,
        n_units: fits.len(),
        n_periods: fits.iter().map(|f| f.n_obs as f64).sum::<f64>() / n,
        used,
        dropped,
        moments: source,
    })
}

#[cfg(test)]
mod tests;
