//! Dumitrescu–Hurlin Granger non-causality test for heterogeneous panels.
//!
//! Each unit gets its own regression of the effect on a constant, K own
//! lags and K lags of the cause. The individual Wald statistics are averaged
//! and standardized two ways: the asymptotic Z-bar and the fixed-T Z̃.

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{normal_two_sided, ols};
use crate::panel::PanelDataset;

/// Lag order, common usable length per unit regression, and unit count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DhConfig {
    pub lags: usize,
    pub periods: usize,
    pub n_units: usize,
}

impl DhConfig {
    pub fn new(lags: usize, periods: usize, n_units: usize) -> Result<Self> {
        if lags == 0 {
            return Err(Error::Config("lag order K must be at least 1".into()));
        }
        if periods < min_periods(lags) {
            return Err(Error::InsufficientData(format!(
                "T={periods} with K={lags}: the Wald variance needs T >= 2K+6 = {}",
                min_periods(lags)
            )));
        }
        if n_units == 0 {
            return Err(Error::InsufficientData("no units".into()));
        }
        Ok(Self { lags, periods, n_units })
    }

    /// Exact finite-T mean and variance of one unit's Wald statistic.
    pub fn wald_moments(&self) -> (f64, f64) {
        wald_moments(self.periods, self.lags)
    }
}

fn min_periods(k: usize) -> usize {
    2 * k + 6
}

fn wald_moments(t: usize, k: usize) -> (f64, f64) {
    let (t, k) = (t as f64, k as f64);
    let a = t - 2.0 * k - 1.0;
    let b = t - 2.0 * k - 3.0;
    let mean = k * a / b;
    let var = 2.0 * k * a * a * (t - k - 3.0) / (b * b * (t - 2.0 * k - 5.0));
    (mean, var)
}

/// How unequal usable lengths across units are harmonized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LengthPolicy {
    /// Error unless every unit has the same usable length.
    RequireBalanced,
    /// Cut every unit to its latest `T_min + K` observations.
    #[default]
    TruncateToShortest,
    /// Keep each unit's length; Z̃ averages the per-unit moments.
    PerUnitAveraging,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DhOptions {
    pub lags: usize,
    pub policy: LengthPolicy,
    /// Fix the usable length instead of deriving it from the data.
    pub periods: Option<usize>,
    /// Individual Walds above this are flagged as suspect.
    pub flag_threshold: f64,
}

impl Default for DhOptions {
    fn default() -> Self {
        Self {
            lags: 1,
            policy: LengthPolicy::default(),
            periods: None,
            flag_threshold: 1_000.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitWald {
    pub unit: String,
    pub wald: f64,
    /// Usable observations in the unit regression.
    pub n_obs: usize,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DhResult {
    pub cause: String,
    pub effect: String,
    pub w_bar: f64,
    pub z_bar: f64,
    pub z_bar_p: f64,
    pub z_bar_tilde: f64,
    pub z_bar_tilde_p: f64,
    pub per_unit: Vec<UnitWald>,
    /// Units left out, with the reason.
    pub excluded: Vec<(String, String)>,
    pub config: DhConfig,
    pub policy: LengthPolicy,
}

impl DhResult {
    /// Decision on Z̃ at level `alpha`.
    pub fn rejects(&self, alpha: f64) -> bool {
        self.z_bar_tilde_p < alpha
    }
}

fn lagged_design(x: &[f64], y: &[f64], k: usize, with_cause: bool) -> (DMatrix<f64>, DVector<f64>) {
    let rows = y.len() - k;
    let cols = 1 + k + if with_cause { k } else { 0 };
    let mut m = DMatrix::zeros(rows, cols);
    let mut v = DVector::zeros(rows);
    for (r, t) in (k..y.len()).enumerate() {
        v[r] = y[t];
        m[(r, 0)] = 1.0;
        for j in 1..=k {
            m[(r, j)] = y[t - j];
            if with_cause {
                m[(r, k + j)] = x[t - j];
            }
        }
    }
    (m, v)
}

/// Wald statistic (RSS_r − RSS_u) / (RSS_u / (T − 2K − 1)) for "x does not
/// Granger-cause y", with T the usable observations after lagging.
pub fn unit_wald(x: &[f64], y: &[f64], k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::Config("lag order K must be at least 1".into()));
    }
    if x.len() != y.len() {
        return Err(Error::InvalidPanel("cause and effect series differ in length".into()));
    }
    if y.len() < 3 * k + 2 {
        return Err(Error::InsufficientData(format!(
            "unit regression with K={k} needs {} observations, got {}",
            3 * k + 2,
            y.len()
        )));
    }
    let (xu, yv) = lagged_design(x, y, k, true);
    let (xr, _) = lagged_design(x, y, k, false);
    let unrestricted = ols(&xu, &yv)?;
    let restricted = ols(&xr, &yv)?;
    let t = yv.len() as f64;
    let dof = t - 2.0 * k as f64 - 1.0;
    if unrestricted.rss <= 1e-12 * restricted.rss.max(f64::MIN_POSITIVE) {
        return Err(Error::Degenerate("unrestricted regression fits exactly".into()));
    }
    Ok(((restricted.rss - unrestricted.rss) / (unrestricted.rss / dof)).max(0.0))
}

/// (Z-bar, Z̃) from the mean Wald.
pub fn standardize_dh(w_bar: f64, cfg: &DhConfig) -> Result<(f64, f64)> {
    let (mean, var) = cfg.wald_moments();
    if !(var > 0.0) {
        return Err(Error::InsufficientData(format!("Wald variance is not positive at T={}", cfg.periods)));
    }
    let n = cfg.n_units as f64;
    let k = cfg.lags as f64;
    let z_bar = (n / (2.0 * k)).sqrt() * (w_bar - k);
    let z_tilde = n.sqrt() * (w_bar - mean) / var.sqrt();
    Ok((z_bar, z_tilde))
}

/// Latest longest run where both series are observed.
fn joint_run(x: &[Option<f64>], y: &[Option<f64>]) -> (Vec<f64>, Vec<f64>) {
    let mut best = (0usize, 0usize);
    let mut start = None;
    for t in 0..=y.len() {
        let ok = t < y.len() && x[t].is_some() && y[t].is_some();
        match (ok, start) {
            (true, None) => start = Some(t),
            (false, Some(s)) => {
                if t - s >= best.1 - best.0 {
                    best = (s, t);
                }
                start = None;
            }
            _ => {}
        }
    }
    let r = best.0..best.1;
    (x[r.clone()].iter().map(|v| v.unwrap()).collect(), y[r].iter().map(|v| v.unwrap()).collect())
}

pub fn dh_test(panel: &PanelDataset, cause: &str, effect: &str, opts: &DhOptions) -> Result<DhResult> {
    let k = opts.lags;
    if k == 0 {
        return Err(Error::Config("lag order K must be at least 1".into()));
    }
    let floor = opts.periods.unwrap_or(min_periods(k));
    let mut excluded = Vec::new();
    let mut units = Vec::new();
    for (i, name) in panel.units().iter().enumerate() {
        let (x, y) = joint_run(&panel.series(cause, i)?, &panel.series(effect, i)?);
        let usable = y.len().saturating_sub(k);
        if usable < floor {
            excluded.push((name.clone(), format!("{usable} usable observations, need {floor}")));
        } else {
            units.push((name.clone(), x, y));
        }
    }
    if units.len() < 2 {
        return Err(Error::InsufficientData(format!(
            "fewer than two units have enough joint observations of `{cause}` and `{effect}`"
        )));
    }
    let shortest = units.iter().map(|u| u.2.len() - k).min().unwrap();
    let common = match (opts.periods, opts.policy) {
        (Some(t), _) => Some(t),
        (None, LengthPolicy::RequireBalanced) => {
            if units.iter().any(|u| u.2.len() - k != shortest) {
                return Err(Error::InsufficientData(
                    "usable lengths differ across units; choose a length policy that harmonizes them".into(),
                ));
            }
            Some(shortest)
        }
        (None, LengthPolicy::TruncateToShortest) => Some(shortest),
        (None, LengthPolicy::PerUnitAveraging) => None,
    };
    if let Some(t) = common {
        for u in units.iter_mut() {
            let drop = u.2.len() - (t + k);
            u.1.drain(..drop);
            u.2.drain(..drop);
        }
    }

    let fits: Vec<Result<f64>> = units.par_iter().map(|(_, x, y)| unit_wald(x, y, k)).collect();
    let mut per_unit = Vec::new();
    for ((name, _, y), fit) in units.iter().zip(fits) {
        match fit {
            Ok(w) => per_unit.push(UnitWald {
                unit: name.clone(),
                wald: w,
                n_obs: y.len() - k,
                flagged: w > opts.flag_threshold,
            }),
            Err(Error::Degenerate(msg)) | Err(Error::InsufficientData(msg)) => excluded.push((name.clone(), msg)),
            Err(e) => return Err(e),
        }
    }
    if per_unit.len() < 2 {
        return Err(Error::InsufficientData("fewer than two units produced a usable Wald statistic".into()));
    }
    let n = per_unit.len();
    let w_bar = per_unit.iter().map(|u| u.wald).sum::<f64>() / n as f64;
    let config = DhConfig::new(k, common.unwrap_or(shortest), n)?;
    let (z_bar, mut z_tilde) = standardize_dh(w_bar, &config)?;
    if common.is_none() {
        let (mut m, mut v) = (0.0, 0.0);
        for u in &per_unit {
            let (mi, vi) = wald_moments(u.n_obs, k);
            m += mi / n as f64;
            v += vi / n as f64;
        }
        z_tilde = (n as f64).sqrt() * (w_bar - m) / v.sqrt();
    }
    Ok(DhResult {
        cause: cause.to_string(),
        effect: effect.to_string(),
        w_bar,
        z_bar,
        z_bar_p: normal_two_sided(z_bar),
        z_bar_tilde: z_tilde,
        z_bar_tilde_p: normal_two_sided(z_tilde),
        per_unit,
        excluded,
        config,
        policy: opts.policy,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simulate::dense::least_squares;
    use crate::simulate::{cell_normal, replication_seed, unit_labels};
    use proptest::prelude::*;

    fn cfg94() -> DhConfig {
        DhConfig::new(1, 10, 94).unwrap()
    }

    #[test]
    fn table_rows_reproduce() {
        let rows = [
            (2.7476, 11.9806, 4.6661),
            (4.0522, 20.9252, 9.1838),
            (3.7233, 18.6701, 8.0448),
            (1.8239, 5.6486, 1.4679),
            (46.5882, 312.5372, 156.4701),
        ];
        for (w, zb, zt) in rows {
            let (a, b) = standardize_dh(w, &cfg94()).unwrap();
            assert!((a - zb).abs() < 5e-4, "{w}: z-bar {a}");
            assert!((b - zt).abs() < 5e-4, "{w}: z-tilde {b}");
        }
    }

    #[test]
    fn centered_at_k() {
        assert_eq!(standardize_dh(1.0, &cfg94()).unwrap().0, 0.0);
        let c = DhConfig::new(2, 20, 30).unwrap();
        assert_eq!(standardize_dh(2.0, &c).unwrap().0, 0.0);
    }

    #[test]
    fn t_bound() {
        assert!(DhConfig::new(1, 7, 10).is_err());
        assert!(DhConfig::new(1, 8, 10).is_ok());
        assert!(DhConfig::new(2, 9, 10).is_err());
        assert!(DhConfig::new(0, 30, 10).is_err());
    }

    fn pair(seed: u64, n: usize) -> (Vec<f64>, Vec<f64>) {
        let mut x = vec![0.0; n];
        let mut y = vec![0.0; n];
        for t in 1..n {
            x[t] = 0.5 * x[t - 1] + cell_normal(seed, 0, t as u64, 1);
            y[t] = 0.4 * y[t - 1] + 0.3 * x[t - 1] + cell_normal(seed, 0, t as u64, 2);
        }
        (x, y)
    }

    #[test]
    fn rss_oracle() {
        let (x, y) = pair(5, 30);
        let k = 2;
        let mut xu = Vec::new();
        let mut xr = Vec::new();
        let mut yy = Vec::new();
        for t in k..30 {
            xr.push(vec![1.0, y[t - 1], y[t - 2]]);
            xu.push(vec![1.0, y[t - 1], y[t - 2], x[t - 1], x[t - 2]]);
            yy.push(y[t]);
        }
        let rss = |m: &Vec<Vec<f64>>| {
            let b = least_squares(m, &yy).unwrap();
            m.iter()
                .zip(&yy)
                .map(|(r, v)| (v - r.iter().zip(&b).map(|(p, q)| p * q).sum::<f64>()).powi(2))
                .sum::<f64>()
        };
        let (ru, rr) = (rss(&xu), rss(&xr));
        let oracle = (rr - ru) / (ru / (28.0 - 5.0));
        let got = unit_wald(&x, &y, k).unwrap();
        assert!((got - oracle).abs() < 1e-8, "{got} vs {oracle}");
    }

    #[test]
    fn perfect_causation_is_degenerate() {
        let (x, _) = pair(1, 40);
        let y: Vec<f64> = (0..40).map(|t| if t == 0 { 0.0 } else { x[t - 1] }).collect();
        assert!(matches!(unit_wald(&x, &y, 1), Err(Error::Degenerate(_))));
    }

    #[test]
    fn independent_unit_wald_mostly_below_critical() {
        let crit = 6.634896601021214;
        let below = (0..1000u64)
            .into_par_iter()
            .filter(|&r| {
                let mut x = vec![0.0; 200];
                let mut y = vec![0.0; 200];
                for t in 1..200 {
                    x[t] = 0.5 * x[t - 1] + cell_normal(r, 0, t as u64, 1);
                    y[t] = 0.6 * y[t - 1] + cell_normal(r, 0, t as u64, 2);
                }
                unit_wald(&x, &y, 1).unwrap() < crit
            })
            .count();
        assert!(below >= 980, "{below}");
    }

    /// Cause is white noise; the effect is an AR(1) with fixed effect, or
    /// the lagged cause plus small noise when `causal`.
    fn dh_panel(n: usize, periods: usize, causal: bool, seed: u64) -> PanelDataset {
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for i in 0..n as u64 {
            let mu = cell_normal(seed, i, 0, 9);
            let mut y = mu;
            let mut prev_x = 0.0;
            for t in 0..periods as u64 + 20 {
                let x = cell_normal(seed, i, t, 1);
                y = if causal {
                    prev_x + 0.05 * cell_normal(seed, i, t, 2)
                } else {
                    0.5 * mu + 0.5 * y + cell_normal(seed, i, t, 2)
                };
                prev_x = x;
                if t >= 20 {
                    xs.push(Some(x));
                    ys.push(Some(y));
                }
            }
        }
        PanelDataset::new(unit_labels(n), (1..=periods as i32).collect())
            .unwrap()
            .with_column("x", xs)
            .unwrap()
            .with_column("y", ys)
            .unwrap()
    }

    #[test]
    fn usable_length_is_periods_minus_k() {
        let r = dh_test(&dh_panel(10, 11, false, 3), "x", "y", &DhOptions::default()).unwrap();
        assert_eq!(r.config.periods, 10);
        assert_eq!(r.per_unit.len(), r.config.n_units);
        let mean = r.per_unit.iter().map(|u| u.wald).sum::<f64>() / r.per_unit.len() as f64;
        assert_eq!(mean, r.w_bar);
        let (zb, _) = standardize_dh(r.w_bar, &r.config).unwrap();
        assert_eq!(zb.to_bits(), r.z_bar.to_bits());
    }

    #[test]
    fn identical_units_share_wald() {
        let base = dh_panel(1, 15, false, 4);
        let x = base.series("x", 0).unwrap();
        let y = base.series("y", 0).unwrap();
        let panel = PanelDataset::new(unit_labels(5), (1..=15).collect())
            .unwrap()
            .with_column("x", x.iter().cycle().take(75).copied().collect())
            .unwrap()
            .with_column("y", y.iter().cycle().take(75).copied().collect())
            .unwrap();
        let r = dh_test(&panel, "x", "y", &DhOptions::default()).unwrap();
        assert!(r.per_unit.iter().all(|u| u.wald == r.per_unit[0].wald));
        assert!((r.w_bar - r.per_unit[0].wald).abs() < 1e-12 * r.w_bar.max(1.0));
    }

    #[test]
    fn length_policies() {
        let panel = dh_panel(6, 14, false, 8);
        let mut y: Vec<Option<f64>> = (0..6).flat_map(|i| panel.series("y", i).unwrap()).collect();
        y[0] = None;
        y[1] = None;
        let panel = panel.with_column("y_gap", y).unwrap();
        let strict = DhOptions {
            policy: LengthPolicy::RequireBalanced,
            ..Default::default()
        };
        assert!(dh_test(&panel, "x", "y_gap", &strict).is_err());
        let trunc = dh_test(&panel, "x", "y_gap", &DhOptions::default()).unwrap();
        assert!(trunc.per_unit.iter().all(|u| u.n_obs == 11));
        let avg = DhOptions {
            policy: LengthPolicy::PerUnitAveraging,
            ..Default::default()
        };
        let r = dh_test(&panel, "x", "y_gap", &avg).unwrap();
        assert_eq!(r.per_unit[0].n_obs, 11);
        assert_eq!(r.per_unit[1].n_obs, 13);
    }

    #[test]
    fn flags_large_walds() {
        let opts = DhOptions {
            flag_threshold: 0.0,
            ..Default::default()
        };
        let r = dh_test(&dh_panel(4, 12, false, 2), "x", "y", &opts).unwrap();
        assert!(r.per_unit.iter().any(|u| u.flagged));
    }

    #[test]
    fn size_under_independence() {
        let ok = (0..200u64)
            .into_par_iter()
            .filter(|&r| {
                let p = dh_panel(94, 11, false, replication_seed(71, r));
                dh_test(&p, "x", "y", &DhOptions::default()).unwrap().z_bar_tilde.abs() < 1.96
            })
            .count();
        assert!(ok >= 180, "{ok}");
    }

    #[test]
    fn power_under_lagged_dependence() {
        let hits = (0..200u64)
            .into_par_iter()
            .filter(|&r| {
                let p = dh_panel(94, 11, true, replication_seed(72, r));
                dh_test(&p, "x", "y", &DhOptions::default()).unwrap().z_bar_tilde > 1.96
            })
            .count();
        assert!(hits >= 198, "{hits}");
    }

    proptest! {
        #[test]
        fn standardization_is_increasing(w in 0.0f64..50.0, dw in 1e-6f64..10.0, t in 8usize..40, n in 2usize..200) {
            let c = DhConfig::new(1, t, n).unwrap();
            let (a0, b0) = standardize_dh(w, &c).unwrap();
            let (a1, b1) = standardize_dh(w + dw, &c).unwrap();
            prop_assert!(a1 > a0 && b1 > b0);
        }
    }
}
