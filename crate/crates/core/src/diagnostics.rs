//! Specification tests for GMM estimates: over-identification (Sargan,
//! Hansen J, difference-in-Hansen), Arellano–Bond serial correlation,
//! Pesaran cross-sectional dependence and joint Wald tests.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gmm::{
    estimate_design, moment_sum, residuals, two_step_from, Equation, GmmEstimate, GmmOptions, InstrumentKind, Step,
};
use crate::linalg::{chi2_sf, inv_spd, normal_two_sided, symmetrize};
use crate::panel::PanelDataset;

/// Minimum overlapping periods for a pair to enter the CD statistic.
pub const CD_MIN_OVERLAP: usize = 3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TestResult {
    pub name: String,
    pub statistic: f64,
    /// `None` for normal-referenced statistics.
    pub df: Option<usize>,
    pub p_value: f64,
    /// Instrument columns tested (difference-in-Hansen only).
    pub subset: Option<Vec<String>>,
    pub warning: Option<String>,
}

impl TestResult {
    fn chi2(name: &str, statistic: f64, df: usize) -> Self {
        Self {
            name: name.to_string(),
            statistic,
            df: Some(df),
            p_value: chi2_sf(statistic, df),
            subset: None,
            warning: None,
        }
    }

    fn normal(name: &str, statistic: f64) -> Self {
        Self {
            name: name.to_string(),
            statistic,
            df: None,
            p_value: normal_two_sided(statistic),
            subset: None,
            warning: None,
        }
    }
}

fn overid_df(est: &GmmEstimate) -> usize {
    // L >= k is an estimate invariant
    est.instrument_count - est.coef.len()
}

/// Sargan statistic from one-step residuals and the one-step weighting,
/// scaled by the residual variance implied by H.
pub fn sargan(est: &GmmEstimate) -> Result<TestResult> {
    let d = est.design();
    let e = est.one_step_residuals();
    let g = moment_sum(d, &e);
    let ee: f64 = e.iter().map(|v| v.norm_squared()).sum();
    let tr: f64 = d.units.iter().map(|u| u.h_matrix().trace()).sum();
    let sigma2 = ee / tr;
    if !(sigma2 > 0.0) {
        return Err(Error::Degenerate("one-step residuals are identically zero".into()));
    }
    let stat = (g.dot(&(&est.w1 * &g)) / sigma2).max(0.0);
    Ok(TestResult::chi2("Sargan", stat, overid_df(est)))
}

/// Hansen J with the two-step robust weighting; for a one-step estimate the
/// two-step solution is computed on demand.
pub fn hansen_j(est: &GmmEstimate) -> Result<TestResult> {
    let d = est.design();
    let stat = match (&est.w2, est.step) {
        (Some(w2), Step::Two) => {
            let g = moment_sum(d, &est.residuals());
            g.dot(&(w2 * &g))
        }
        _ => {
            let two = two_step_from(d, est.one_step_coef(), GmmOptions::default().pinv_tol)?;
            let g = moment_sum(d, &residuals(d, &two.sol.beta));
            g.dot(&(&two.w2 * &g))
        }
    };
    Ok(TestResult::chi2("Hansen", stat.max(0.0), overid_df(est)))
}

/// J of the full instrument set minus J without `subset` (column indices);
/// χ² with |subset| degrees of freedom.
pub fn difference_in_hansen(est: &GmmEstimate, subset: &[usize]) -> Result<TestResult> {
    let d = est.design();
    let l = d.instrument_count();
    let mut cols = subset.to_vec();
    cols.sort_unstable();
    cols.dedup();
    if cols.is_empty() {
        return Err(Error::Config("difference-in-Hansen needs a nonempty instrument subset".into()));
    }
    if cols.len() >= l || cols.iter().any(|&c| c >= l) {
        return Err(Error::Config("difference-in-Hansen subset must be a proper subset of the instrument columns".into()));
    }
    let reduced_l = l - cols.len();
    if reduced_l < d.n_params() {
        return Err(Error::UnderIdentified {
            instruments: reduced_l,
            parameters: d.n_params(),
        });
    }
    let full = hansen_j(est)?;
    let opts = GmmOptions {
        windmeijer: false,
        ..Default::default()
    };
    let reduced = estimate_design(Arc::new(d.without_instruments(&cols)), Step::Two, &opts)?;
    let part = hansen_j(&reduced)?;
    let raw = full.statistic - part.statistic;
    let mut out = TestResult::chi2("Difference-in-Hansen", raw.max(0.0), cols.len());
    out.subset = Some(cols.iter().map(|&c| d.instruments[c].name.clone()).collect());
    if raw < 0.0 {
        out.warning = Some(format!("negative statistic {raw:.4e} clamped to zero"));
    }
    Ok(out)
}

/// Column indices of the level-equation instruments of a system estimate
/// (excluding the constant), the usual difference-in-Hansen subset.
pub fn level_instrument_columns(est: &GmmEstimate) -> Vec<usize> {
    est.design()
        .instruments
        .iter()
        .enumerate()
        .filter(|(_, c)| c.equation == Equation::Level && c.kind == InstrumentKind::Gmm)
        .map(|(j, _)| j)
        .collect()
}

/// Order-`m` lag of the difference-row residuals, zero where the lagged row
/// does not exist and on level rows.
fn lagged_difference_residual(est: &GmmEstimate, e: &[DVector<f64>], m: usize) -> Vec<DVector<f64>> {
    est.design()
        .units
        .iter()
        .zip(e)
        .map(|(u, ei)| {
            DVector::from_iterator(
                u.rows.len(),
                u.rows.iter().map(|r| {
                    if r.equation != Equation::Difference || r.period < m {
                        return 0.0;
                    }
                    u.rows
                        .iter()
                        .position(|s| s.equation == Equation::Difference && s.period == r.period - m)
                        .map_or(0.0, |b| ei[b])
                }),
            )
        })
        .collect()
}

/// Arellano–Bond test for order-`m` autocorrelation in the differenced
/// residuals of the reported coefficients.
pub fn ar_test(est: &GmmEstimate, m: usize) -> Result<TestResult> {
    if m == 0 {
        return Err(Error::Config("autocorrelation order must be at least 1".into()));
    }
    let d = est.design();
    let e = est.residuals();
    let ee: f64 = e.iter().map(|v| v.norm_squared()).sum();
    let yy: f64 = d.units.iter().map(|u| u.y.norm_squared()).sum();
    if ee <= 1e-20 * yy.max(f64::MIN_POSITIVE) {
        return Err(Error::Degenerate("residuals are identically zero".into()));
    }
    // only the difference-row part of e enters the autocovariance
    let e_diff: Vec<DVector<f64>> = d
        .units
        .iter()
        .zip(&e)
        .map(|(u, ei)| DVector::from_iterator(ei.len(), u.rows.iter().zip(ei.iter()).map(|(r, &v)| if r.equation == Equation::Difference { v } else { 0.0 })))
        .collect();
    let w = lagged_difference_residual(est, &e, m);
    let pairs = d
        .units
        .iter()
        .map(|u| {
            u.rows
                .iter()
                .filter(|r| {
                    r.equation == Equation::Difference
                        && r.period >= m
                        && u.rows.iter().any(|s| s.equation == Equation::Difference && s.period == r.period - m)
                })
                .count()
        })
        .sum::<usize>();
    if pairs == 0 {
        return Err(Error::InsufficientData(format!("no residual pairs {m} periods apart")));
    }
    let k = d.n_params();
    let l = d.instrument_count();
    let mut num = 0.0;
    let mut s_sq = 0.0;
    let mut wx = DVector::zeros(k);
    let mut zeew = DVector::zeros(l);
    for ((u, ei), (wi, edi)) in d.units.iter().zip(&e).zip(w.iter().zip(&e_diff)) {
        let we = wi.dot(edi);
        num += we;
        s_sq += we * we;
        wx += u.x.transpose() * wi;
        zeew += (u.z.transpose() * ei) * ei.dot(wi);
    }
    let (a, _) = crate::gmm::cross_moments(d);
    let wt = est.weight();
    let aw = &a * wt;
    let bread = inv_spd(&symmetrize(&(&aw * a.transpose())))
        .ok_or_else(|| Error::Degenerate("X'ZWZ'X is singular".into()))?;
    let map = bread * aw;
    let var = s_sq - 2.0 * wx.dot(&(&map * &zeew)) + wx.dot(&(&est.cov * &wx));
    if !(var > 0.0) || s_sq == 0.0 {
        return Err(Error::Degenerate(format!("AR({m}) variance is not positive")));
    }
    Ok(TestResult::normal(&format!("AR({m})"), num / var.sqrt()))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CdTest {
    pub result: TestResult,
    pub pairs_used: usize,
    /// Pairs with fewer than the minimum overlap or a constant series.
    pub pairs_dropped: usize,
}

/// Pesaran CD over pairwise correlations on overlapping periods:
/// √(1/P)·Σ √T_ij ρ_ij, which is √(2T/(N(N−1)))·Σρ_ij when balanced.
pub fn pesaran_cd(series: &[Vec<Option<f64>>]) -> Result<CdTest> {
    let n = series.len();
    if n < 2 {
        return Err(Error::InsufficientData("CD needs at least two units".into()));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let terms: Vec<Option<f64>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b): (Vec<f64>, Vec<f64>) = series[i]
                .iter()
                .zip(&series[j])
                .filter_map(|(x, y)| Some(((*x)?, (*y)?)))
                .unzip();
            let t = a.len();
            if t < CD_MIN_OVERLAP {
                return None;
            }
            let ma = a.iter().sum::<f64>() / t as f64;
            let mb = b.iter().sum::<f64>() / t as f64;
            let (mut sab, mut saa, mut sbb) = (0.0, 0.0, 0.0);
            for (x, y) in a.iter().zip(&b) {
                sab += (x - ma) * (y - mb);
                saa += (x - ma) * (x - ma);
                sbb += (y - mb) * (y - mb);
            }
            if saa <= 0.0 || sbb <= 0.0 {
                return None;
            }
            Some((t as f64).sqrt() * sab / (saa * sbb).sqrt())
        })
        .collect();
    let used: Vec<f64> = terms.iter().flatten().copied().collect();
    if used.is_empty() {
        return Err(Error::InsufficientData("no unit pair has enough overlapping periods".into()));
    }
    let cd = used.iter().sum::<f64>() / (used.len() as f64).sqrt();
    Ok(CdTest {
        result: TestResult::normal("Pesaran CD", cd),
        pairs_used: used.len(),
        pairs_dropped: pairs.len() - used.len(),
    })
}

pub fn pesaran_cd_panel(panel: &PanelDataset, variable: &str) -> Result<CdTest> {
    let series = (0..panel.n_units())
        .map(|i| panel.series(variable, i))
        .collect::<Result<Vec<_>>>()?;
    pesaran_cd(&series)
}

/// CD on the residuals of the equations counted as observations:
/// difference rows for difference GMM, level rows for system GMM.
pub fn pesaran_cd_residuals(est: &GmmEstimate) -> Result<CdTest> {
    let d = est.design();
    let want = match d.scheme {
        crate::gmm::Scheme::Difference => Equation::Difference,
        crate::gmm::Scheme::System => Equation::Level,
    };
    let t = d.periods.len();
    let series: Vec<Vec<Option<f64>>> = d
        .units
        .iter()
        .zip(est.residuals())
        .map(|(u, e)| {
            let mut s = vec![None; t];
            for (r, v) in u.rows.iter().zip(e.iter()) {
                if r.equation == want {
                    s[r.period] = Some(*v);
                }
            }
            s
        })
        .collect();
    pesaran_cd(&series)
}

/// b'V⁻¹b for a coefficient vector and its covariance.
pub(crate) fn wald_quadratic(b: &DVector<f64>, v: &DMatrix<f64>) -> Result<f64> {
    let inv = inv_spd(&symmetrize(v)).ok_or_else(|| Error::Degenerate("covariance block is singular".into()))?;
    Ok(b.dot(&(inv * b)))
}

/// Joint Wald test that the named coefficients are all zero.
pub fn wald_joint(est: &GmmEstimate, names: &[&str]) -> Result<TestResult> {
    if names.is_empty() {
        return Err(Error::Config("Wald test needs at least one coefficient".into()));
    }
    let idx = names
        .iter()
        .map(|n| {
            est.index_of(n).ok_or_else(|| {
                if est.omitted.iter().any(|o| o == n) {
                    Error::Config(format!("coefficient `{n}` was omitted as collinear"))
                } else {
                    Error::UnknownVariable((*n).to_string())
                }
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let b = DVector::from_iterator(idx.len(), idx.iter().map(|&j| est.coef[j]));
    let v = DMatrix::from_fn(idx.len(), idx.len(), |r, c| est.cov[(idx[r], idx[c])]);
    let stat = wald_quadratic(&b, &v)?;
    Ok(TestResult::chi2("Wald", stat, idx.len()))
}

#[cfg(test)]
mod tests;
