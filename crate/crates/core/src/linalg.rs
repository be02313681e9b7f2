//! Small dense linear-algebra and distribution helpers shared by the
//! estimators.

use nalgebra::{DMatrix, DVector};
use statrs::distribution::{ChiSquared, ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Least-squares fit of `y` on the columns of `x`.
#[derive(Debug, Clone)]
pub struct OlsFit {
    pub coef: DVector<f64>,
    pub resid: DVector<f64>,
    pub rss: f64,
    /// `(X'X)^{-1}`
    pub xtx_inv: DMatrix<f64>,
}

impl OlsFit {
    /// Residual variance with `n - k` degrees of freedom.
    pub fn sigma2(&self) -> f64 {
        let n = self.resid.len();
        let k = self.coef.len();
        self.rss / (n - k) as f64
    }

    pub fn std_error(&self, j: usize) -> f64 {
        (self.sigma2() * self.xtx_inv[(j, j)]).sqrt()
    }
}

/// Relative tolerance on the diagonal of R below which a column is treated
/// as linearly dependent on its predecessors.
const QR_RANK_TOL: f64 = 1e-10;

pub fn ols(x: &DMatrix<f64>, y: &DVector<f64>) -> Result<OlsFit> {
    let (n, k) = x.shape();
    if n <= k {
        return Err(Error::InsufficientData(format!("{n} observations for {k} regressors")));
    }
    let qr = x.clone().qr();
    let r = qr.r();
    let scale = (0..k).map(|j| x.column(j).norm()).fold(0.0, f64::max).max(f64::MIN_POSITIVE);
    for j in 0..k {
        if r[(j, j)].abs() <= QR_RANK_TOL * scale {
            return Err(Error::Degenerate(format!("regressor {j} is collinear with earlier columns")));
        }
    }
    let qty = qr.q().transpose() * y;
    let coef = r
        .solve_upper_triangular(&qty)
        .ok_or_else(|| Error::Degenerate("singular triangular factor".into()))?;
    let resid = y - x * &coef;
    let rss = resid.norm_squared();
    let r_inv = r
        .solve_upper_triangular(&DMatrix::identity(k, k))
        .ok_or_else(|| Error::Degenerate("singular triangular factor".into()))?;
    let xtx_inv = &r_inv * r_inv.transpose();
    Ok(OlsFit {
        coef,
        resid,
        rss,
        xtx_inv,
    })
}

/// Moore–Penrose pseudo-inverse of a symmetric matrix. Singular values below
/// `rel_tol * s_max` are zeroed; the flag reports whether any were.
pub fn pinv(m: &DMatrix<f64>, rel_tol: f64) -> (DMatrix<f64>, bool) {
    let n = m.nrows();
    if n == 0 {
        return (DMatrix::zeros(0, 0), false);
    }
    let svd = m.clone().svd(true, true);
    let smax = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let cut = rel_tol * smax;
    let mut truncated = false;
    let u = svd.u.as_ref().expect("u requested");
    let vt = svd.v_t.as_ref().expect("v_t requested");
    let mut out = DMatrix::zeros(m.ncols(), m.nrows());
    for (i, &s) in svd.singular_values.iter().enumerate() {
        if s > cut && s > 0.0 {
            out += (vt.row(i).transpose() / s) * u.column(i).transpose();
        } else {
            truncated = true;
        }
    }
    (symmetrize(&out), truncated)
}

pub fn symmetrize(m: &DMatrix<f64>) -> DMatrix<f64> {
    (m + m.transpose()) * 0.5
}

/// Inverse of a symmetric positive-definite matrix via Cholesky, falling
/// back to LU for indefinite but nonsingular input.
pub fn inv_spd(m: &DMatrix<f64>) -> Option<DMatrix<f64>> {
    if let Some(ch) = m.clone().cholesky() {
        return Some(symmetrize(&ch.inverse()));
    }
    m.clone().try_inverse().map(|i| symmetrize(&i))
}

/// Greedy column selection on a Gram matrix `g = X'X`: column j is kept
/// when its squared residual on the kept predecessors exceeds
/// `rel_tol * g_jj`. Scale-invariant per column.
pub fn greedy_independent(g: &DMatrix<f64>, rel_tol: f64) -> Vec<bool> {
    let k = g.nrows();
    let mut kept: Vec<usize> = Vec::new();
    // rows of the lower Cholesky factor of g restricted to kept columns
    let mut l: Vec<Vec<f64>> = Vec::new();
    let mut keep = vec![false; k];
    for j in 0..k {
        let gjj = g[(j, j)];
        if !(gjj > 0.0) {
            continue;
        }
        let mut v = Vec::with_capacity(kept.len());
        for (a, &ka) in kept.iter().enumerate() {
            let s: f64 = (0..a).map(|b| l[a][b] * v[b]).sum();
            v.push((g[(ka, j)] - s) / l[a][a]);
        }
        let r = gjj - v.iter().map(|x| x * x).sum::<f64>();
        if r > rel_tol * gjj {
            v.push(r.sqrt());
            l.push(v);
            kept.push(j);
            keep[j] = true;
        }
    }
    keep
}

pub fn normal_cdf(z: f64) -> f64 {
    Normal::standard().cdf(z)
}

/// Two-sided standard-normal p-value.
pub fn normal_two_sided(z: f64) -> f64 {
    if !z.is_finite() {
        return if z.is_nan() { f64::NAN } else { 0.0 };
    }
    (2.0 * Normal::standard().sf(z.abs())).min(1.0)
}

/// Upper-tail chi-square p-value; df = 0 returns 1.
pub fn chi2_sf(stat: f64, df: usize) -> f64 {
    if df == 0 {
        return 1.0;
    }
    if stat.is_infinite() {
        return 0.0;
    }
    ChiSquared::new(df as f64).expect("df > 0").sf(stat.max(0.0)).clamp(0.0, 1.0)
}
