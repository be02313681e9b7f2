//! Linear GMM for dynamic panels: Arellano–Bond difference GMM and
//! Blundell–Bond system GMM, one- and two-step, with the Windmeijer
//! finite-sample correction for two-step standard errors.

mod design;
mod spec;

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use design::{
    build_design, build_difference_instruments, build_system_instruments, Design, Equation, InstrumentBlocks,
    InstrumentColumn, InstrumentKind, RowInfo, Scheme, UnitBlock,
};
pub use spec::{GmmStyle, InstrumentPlan, LevelStyle, ModelSpec, PlanOptions, Regressor, Role};

use crate::error::{Error, Result};
use crate::linalg::{greedy_independent, inv_spd, pinv, symmetrize};
use crate::panel::PanelDataset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Step {
    One,
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GmmOptions {
    /// Apply the Windmeijer correction to two-step covariances.
    pub windmeijer: bool,
    /// Relative singular-value cutoff for weighting-matrix pseudo-inverses.
    pub pinv_tol: f64,
}

impl Default for GmmOptions {
    fn default() -> Self {
        Self {
            windmeijer: true,
            pinv_tol: 1e-12,
        }
    }
}

#[derive(Debug, Clone)]
pub struct GmmEstimate {
    pub scheme: Scheme,
    pub step: Step,
    pub dependent: String,
    /// Estimated coefficient names.
    pub names: Vec<String>,
    pub coef: DVector<f64>,
    pub cov: DMatrix<f64>,
    /// Terms dropped as collinear; reported with zero coefficient.
    pub omitted: Vec<String>,
    pub instrument_count: usize,
    pub group_count: usize,
    pub n_obs: usize,
    pub w1: DMatrix<f64>,
    pub w2: Option<DMatrix<f64>>,
    pub windmeijer_applied: bool,
    pub warnings: Vec<String>,
    pub(crate) design: Arc<Design>,
    pub(crate) beta1: DVector<f64>,
    /// Robust one-step covariance.
    pub(crate) v1_robust: DMatrix<f64>,
}

impl GmmEstimate {
    pub fn std_errors(&self) -> Vec<f64> {
        (0..self.coef.len()).map(|j| self.cov[(j, j)].max(0.0).sqrt()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn design(&self) -> &Design {
        &self.design
    }

    /// Weighting matrix behind the reported coefficients.
    pub fn weight(&self) -> &DMatrix<f64> {
        self.w2.as_ref().unwrap_or(&self.w1)
    }

    /// Residuals of the reported coefficients, per unit.
    pub fn residuals(&self) -> Vec<DVector<f64>> {
        residuals(&self.design, &self.coef)
    }

    pub fn one_step_residuals(&self) -> Vec<DVector<f64>> {
        residuals(&self.design, &self.beta1)
    }

    pub fn one_step_coef(&self) -> &DVector<f64> {
        &self.beta1
    }
}

pub(crate) fn residuals(d: &Design, beta: &DVector<f64>) -> Vec<DVector<f64>> {
    d.units.iter().map(|u| &u.y - &u.x * beta).collect()
}

/// Σ Zᵢ'Xᵢ transposed (k × L) and Σ Zᵢ'yᵢ.
pub(crate) fn cross_moments(d: &Design) -> (DMatrix<f64>, DVector<f64>) {
    let parts: Vec<(DMatrix<f64>, DVector<f64>)> = d
        .units
        .par_iter()
        .map(|u| (u.x.transpose() * &u.z, u.z.transpose() * &u.y))
        .collect();
    let (k, l) = (d.n_params(), d.instrument_count());
    let mut a = DMatrix::zeros(k, l);
    let mut b = DVector::zeros(l);
    for (pa, pb) in parts {
        a += pa;
        b += pb;
    }
    (a, b)
}

/// Σ (Zᵢ'eᵢ)(Zᵢ'eᵢ)'
pub(crate) fn omega(d: &Design, resid: &[DVector<f64>]) -> DMatrix<f64> {
    let l = d.instrument_count();
    let parts: Vec<DVector<f64>> = d.units.par_iter().zip(resid).map(|(u, e)| u.z.transpose() * e).collect();
    let mut out = DMatrix::zeros(l, l);
    for g in parts {
        out += &g * g.transpose();
    }
    symmetrize(&out)
}

pub(crate) fn zhz(d: &Design) -> DMatrix<f64> {
    let l = d.instrument_count();
    let parts: Vec<DMatrix<f64>> = d.units.par_iter().map(|u| u.z.transpose() * u.h_matrix() * &u.z).collect();
    let mut out = DMatrix::zeros(l, l);
    for p in parts {
        out += p;
    }
    symmetrize(&out)
}

/// Σ Zᵢ'eᵢ
pub(crate) fn moment_sum(d: &Design, resid: &[DVector<f64>]) -> DVector<f64> {
    let mut g = DVector::zeros(d.instrument_count());
    for (u, e) in d.units.iter().zip(resid) {
        g += u.z.transpose() * e;
    }
    g
}

/// Solution of one weighted step: coefficients, (AWA')⁻¹ and the linear
/// map M = (AWA')⁻¹AW.
pub(crate) struct StepSolution {
    pub beta: DVector<f64>,
    pub bread: DMatrix<f64>,
    pub map: DMatrix<f64>,
}

pub(crate) fn solve_step(d: &Design, a: &DMatrix<f64>, b: &DVector<f64>, w: &DMatrix<f64>) -> Result<StepSolution> {
    let aw = a * w;
    let awa = symmetrize(&(&aw * a.transpose()));
    let full_rank = greedy_independent(&awa, 1e-12);
    if full_rank.iter().any(|k| !k) {
        let bad = full_rank
            .iter()
            .enumerate()
            .filter(|(_, k)| !**k)
            .map(|(j, _)| d.names[j].clone())
            .collect();
        return Err(Error::Collinear(bad));
    }
    let bread = inv_spd(&awa).ok_or_else(|| Error::Degenerate("X'ZWZ'X is singular".into()))?;
    let map = &bread * aw;
    let beta = &map * b;
    Ok(StepSolution { beta, bread, map })
}

/// Two-step weighting from one-step residuals and the resulting solution.
pub(crate) struct TwoStep {
    pub w2: DMatrix<f64>,
    pub sol: StepSolution,
}

pub(crate) fn two_step_from(d: &Design, beta1: &DVector<f64>, tol: f64) -> Result<TwoStep> {
    let (a, b) = cross_moments(d);
    let e1 = residuals(d, beta1);
    let (w2, _) = pinv(&omega(d, &e1), tol);
    let sol = solve_step(d, &a, &b, &w2)?;
    Ok(TwoStep { w2, sol })
}

pub fn estimate(
    panel: &PanelDataset,
    spec: &ModelSpec,
    plan: &InstrumentPlan,
    scheme: Scheme,
    step: Step,
    opts: &GmmOptions,
) -> Result<GmmEstimate> {
    let design = build_design(panel, spec, plan, scheme)?;
    estimate_design(Arc::new(design), step, opts)
}

pub fn estimate_design(design: Arc<Design>, step: Step, opts: &GmmOptions) -> Result<GmmEstimate> {
    let d = &*design;
    let (k, l) = (d.n_params(), d.instrument_count());
    if k == 0 {
        return Err(Error::Config("no estimable coefficients".into()));
    }
    if l < k {
        return Err(Error::UnderIdentified {
            instruments: l,
            parameters: k,
        });
    }
    let mut warnings = Vec::new();
    let (a, b) = cross_moments(d);
    let (w1, trunc1) = pinv(&zhz(d), opts.pinv_tol);
    if trunc1 {
        warnings.push("one-step weighting matrix is singular; pseudo-inverse used".to_string());
    }
    let one = solve_step(d, &a, &b, &w1)?;
    let e1 = residuals(d, &one.beta);
    let om1 = omega(d, &e1);
    let v1_robust = symmetrize(&(&one.map * &om1 * one.map.transpose()));

    let mut est = GmmEstimate {
        scheme: d.scheme,
        step,
        dependent: d.dependent.clone(),
        names: d.names.clone(),
        coef: one.beta.clone(),
        cov: v1_robust.clone(),
        omitted: d.omitted.clone(),
        instrument_count: l,
        group_count: d.group_count(),
        n_obs: d.n_obs(),
        w1,
        w2: None,
        windmeijer_applied: false,
        warnings,
        design: design.clone(),
        beta1: one.beta,
        v1_robust,
    };
    if step == Step::Two {
        let (w2, trunc2) = pinv(&om1, opts.pinv_tol);
        if trunc2 {
            est.warnings
                .push("two-step weighting matrix is singular; pseudo-inverse used".to_string());
        }
        let two = solve_step(d, &a, &b, &w2)?;
        est.coef = two.beta;
        est.cov = two.bread;
        est.w2 = Some(w2);
        if opts.windmeijer {
            est = windmeijer_correct(&est)?;
        }
    }
    Ok(est)
}

/// Replaces a two-step covariance with the Windmeijer (2005) corrected one.
pub fn windmeijer_correct(est: &GmmEstimate) -> Result<GmmEstimate> {
    if est.step != Step::Two {
        return Err(Error::EstimateState("the correction applies to two-step estimates only".into()));
    }
    if est.windmeijer_applied {
        return Err(Error::EstimateState("the correction has already been applied".into()));
    }
    let d = &*est.design;
    let w2 = est.w2.as_ref().expect("two-step estimate carries W2");
    let (a, _) = cross_moments(d);
    let aw = &a * w2;
    let bread = inv_spd(&symmetrize(&(&aw * a.transpose())))
        .ok_or_else(|| Error::Degenerate("X'ZW₂Z'X is singular".into()))?;
    let map = &bread * &aw;
    let e1 = residuals(d, &est.beta1);
    let e2 = residuals(d, &est.coef);
    let q = w2 * moment_sum(d, &e2);

    // column j of D is M·Σᵢ[Zᵢ'xᵢⱼ (Zᵢ'e1ᵢ)'q + Zᵢ'e1ᵢ (Zᵢ'xᵢⱼ)'q]
    let k = d.n_params();
    let parts: Vec<DMatrix<f64>> = d
        .units
        .par_iter()
        .zip(&e1)
        .map(|(u, e)| {
            let zx = u.z.transpose() * &u.x;
            let ze = u.z.transpose() * e;
            let zeq = ze.dot(&q);
            let zxq = zx.transpose() * &q;
            let mut v = DMatrix::zeros(d.instrument_count(), k);
            for j in 0..k {
                let col = zx.column(j) * zeq + &ze * zxq[j];
                v.set_column(j, &col);
            }
            v
        })
        .collect();
    let mut acc = DMatrix::zeros(d.instrument_count(), k);
    for p in parts {
        acc += p;
    }
    let dmat = &map * acc;
    let v2 = &bread;
    let corrected = v2 + &dmat * v2 + v2 * dmat.transpose() + &dmat * &est.v1_robust * dmat.transpose();
    let mut out = est.clone();
    out.cov = symmetrize(&corrected);
    out.windmeijer_applied = true;
    Ok(out)
}
