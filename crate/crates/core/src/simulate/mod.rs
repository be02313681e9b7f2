//! Seeded data-generating processes and brute-force oracles.
//!
//! Every random draw comes from a generator keyed by
//! `(seed, unit, period, channel)`, so a panel is identical no matter how
//! units are scheduled across threads.

pub mod dense;
mod fixture;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::panel::PanelDataset;

pub use fixture::replication_fixture;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Generator for one cell. `period` may index burn-in draws.
pub fn cell_rng(seed: u64, unit: u64, period: u64, channel: u64) -> ChaCha8Rng {
    let mut h = splitmix64(seed);
    h = splitmix64(h ^ unit);
    h = splitmix64(h ^ period.wrapping_mul(0x100_0000_01B3));
    h = splitmix64(h ^ channel.wrapping_mul(0xC2B2_AE3D_27D4_EB4F));
    ChaCha8Rng::seed_from_u64(h)
}

pub fn cell_normal(seed: u64, unit: u64, period: u64, channel: u64) -> f64 {
    StandardNormal.sample(&mut cell_rng(seed, unit, period, channel))
}

pub fn cell_uniform(seed: u64, unit: u64, period: u64, channel: u64) -> f64 {
    use rand::Rng;
    cell_rng(seed, unit, period, channel).random::<f64>()
}

/// Seed for replication `rep` of a Monte Carlo experiment.
pub fn replication_seed(base: u64, rep: u64) -> u64 {
    splitmix64(base ^ splitmix64(rep.wrapping_add(0x5EED)))
}

const CH_FE: u64 = 1;
const CH_ETA: u64 = 2;
const CH_X: u64 = 100;
const CH_Z: u64 = 3;
const CH_LOADING: u64 = 4;
const CH_FACTOR: u64 = 5;

/// Configuration of `y_it = δ y_i,t-1 + x_it'β + u_i + η_it (+ γ_i f_t)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DgpConfig {
    pub n_units: usize,
    pub n_periods: usize,
    pub delta: f64,
    pub beta: Vec<f64>,
    /// Variance of the unit effect u_i.
    pub fe_variance: f64,
    /// Variance of the idiosyncratic error η_it.
    pub idio_variance: f64,
    /// AR(1) coefficient of each regressor x_k.
    pub regressor_persistence: f64,
    /// Scale of a common factor added to the error; loadings are drawn
    /// uniformly on `[0.5, 1.5] × loading`.
    pub common_factor_loading: f64,
    /// When nonzero, adds a column `z` with this correlation to η_it.
    pub invalid_instrument_corr: f64,
    pub burn_in: usize,
    pub seed: u64,
}

impl DgpConfig {
    pub fn new(n_units: usize, n_periods: usize, delta: f64, seed: u64) -> Self {
        Self {
            n_units,
            n_periods,
            delta,
            beta: Vec::new(),
            fe_variance: 1.0,
            idio_variance: 1.0,
            regressor_persistence: 0.5,
            common_factor_loading: 0.0,
            invalid_instrument_corr: 0.0,
            burn_in: 50,
            seed,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.n_units == 0 || self.n_periods == 0 {
            return Err(Error::Config("DGP needs at least one unit and one period".into()));
        }
        if self.fe_variance < 0.0 || self.idio_variance < 0.0 {
            return Err(Error::Config("DGP variances must be nonnegative".into()));
        }
        if !(-1.0..=1.0).contains(&self.invalid_instrument_corr) {
            return Err(Error::Config("instrument correlation must lie in [-1, 1]".into()));
        }
        Ok(())
    }
}

/// Unit labels `U0001`, `U0002`, ...
pub fn unit_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("U{i:04}")).collect()
}

/// Simulates the dynamic panel. Columns: `y`, `x1..xk`, and `z` when an
/// invalid instrument is requested. Periods are `1..=T`.
pub fn gen_dynamic_panel(cfg: &DgpConfig) -> Result<PanelDataset> {
    cfg.validate()?;
    let total = cfg.burn_in + cfg.n_periods;
    let k = cfg.beta.len();
    let sd_u = cfg.fe_variance.sqrt();
    let sd_eta = cfg.idio_variance.sqrt();
    let rho_z = cfg.invalid_instrument_corr;
    let seed = cfg.seed;

    // common factor path shared by all units
    let factor: Vec<f64> = if cfg.common_factor_loading != 0.0 {
        (0..total).map(|t| cell_normal(seed, u64::MAX, t as u64, CH_FACTOR)).collect()
    } else {
        vec![0.0; total]
    };

    struct UnitDraws {
        y: Vec<f64>,
        x: Vec<Vec<f64>>,
        z: Vec<f64>,
    }

    let units: Vec<UnitDraws> = (0..cfg.n_units)
        .into_par_iter()
        .map(|i| {
            let iu = i as u64;
            let u = sd_u * cell_normal(seed, iu, 0, CH_FE);
            let loading = cfg.common_factor_loading * (0.5 + cell_uniform(seed, iu, 0, CH_LOADING));
            let mut y_prev = if cfg.delta.abs() < 1.0 { u / (1.0 - cfg.delta) } else { 0.0 };
            let mut x_prev = vec![0.0; k];
            let mut ys = Vec::with_capacity(cfg.n_periods);
            let mut xs = vec![Vec::with_capacity(cfg.n_periods); k];
            let mut zs = Vec::with_capacity(cfg.n_periods);
            for t in 0..total {
                let tu = t as u64;
                let eta = sd_eta * cell_normal(seed, iu, tu, CH_ETA);
                let mut xb = 0.0;
                for j in 0..k {
                    let xj = cfg.regressor_persistence * x_prev[j] + cell_normal(seed, iu, tu, CH_X + j as u64);
                    x_prev[j] = xj;
                    xb += cfg.beta[j] * xj;
                }
                let y = cfg.delta * y_prev + xb + u + eta + loading * factor[t];
                y_prev = y;
                if t >= cfg.burn_in {
                    ys.push(y);
                    for j in 0..k {
                        xs[j].push(x_prev[j]);
                    }
                    if rho_z != 0.0 {
                        let std_eta = if sd_eta > 0.0 { eta / sd_eta } else { 0.0 };
                        let noise = cell_normal(seed, iu, tu, CH_Z);
                        zs.push(rho_z * std_eta + (1.0 - rho_z * rho_z).sqrt() * noise);
                    }
                }
            }
            UnitDraws { y: ys, x: xs, z: zs }
        })
        .collect();

    let periods: Vec<i32> = (1..=cfg.n_periods as i32).collect();
    let mut panel = PanelDataset::new(unit_labels(cfg.n_units), periods)?;
    panel = panel.with_column("y", units.iter().flat_map(|u| u.y.iter().map(|&v| Some(v))).collect())?;
    for j in 0..k {
        panel = panel.with_column(
            &format!("x{}", j + 1),
            units.iter().flat_map(|u| u.x[j].iter().map(|&v| Some(v))).collect(),
        )?;
    }
    if rho_z != 0.0 {
        panel = panel.with_column("z", units.iter().flat_map(|u| u.z.iter().map(|&v| Some(v))).collect())?;
    }
    Ok(panel)
}

/// Unit-root design: independent series `y_it = μ_i(1-ρ) + ρ y_i,t-1 + e_it`
/// with standard normal errors, `μ_i ~ N(0, 1)` and 50 burn-in periods for
/// `|ρ| < 1` (random walks start at zero).
pub fn gen_ar_panel(n_units: usize, n_periods: usize, rho: f64, seed: u64) -> Result<PanelDataset> {
    let mut cfg = DgpConfig::new(n_units, n_periods, rho, seed);
    cfg.fe_variance = if rho.abs() < 1.0 { (1.0 - rho).powi(2) } else { 0.0 };
    if rho.abs() >= 1.0 {
        cfg.burn_in = 0;
    }
    gen_dynamic_panel(&cfg)
}

/// Just-identified IV solution `(Z'X)^{-1} Z'y` via dense Gauss–Jordan
/// elimination. `x` and `z` are given as rows.
pub fn oracle_iv(y: &[f64], x: &[Vec<f64>], z: &[Vec<f64>]) -> Result<Vec<f64>> {
    if x.len() != y.len() || z.len() != y.len() {
        return Err(Error::Config("oracle_iv: row counts differ".into()));
    }
    if x.is_empty() || x[0].len() != z[0].len() {
        return Err(Error::Config("oracle_iv: Z must have as many columns as X".into()));
    }
    let zt = dense::transpose(&z.to_vec());
    let zx = dense::matmul(&zt, &x.to_vec());
    let zy = dense::matvec(&zt, y);
    dense::solve_vec(&zx, &zy).ok_or_else(|| Error::Degenerate("Z'X is singular".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_dgp_is_zero() {
        let mut cfg = DgpConfig::new(5, 10, 0.0, 1);
        cfg.fe_variance = 0.0;
        cfg.idio_variance = 0.0;
        let p = gen_dynamic_panel(&cfg).unwrap();
        let col = p.column("y").unwrap();
        assert!((0..p.n_cells()).all(|i| col.get(i) == Some(0.0)));
    }

    #[test]
    fn deterministic_per_seed() {
        let mut cfg = DgpConfig::new(20, 8, 0.5, 7);
        cfg.beta = vec![1.0];
        cfg.invalid_instrument_corr = 0.5;
        let a = gen_dynamic_panel(&cfg).unwrap();
        let b = gen_dynamic_panel(&cfg).unwrap();
        assert_eq!(a, b);
        cfg.seed = 8;
        assert_ne!(a, gen_dynamic_panel(&cfg).unwrap());
    }

    #[test]
    fn unit_draws_do_not_depend_on_panel_size() {
        let small = gen_dynamic_panel(&DgpConfig::new(3, 6, 0.5, 11)).unwrap();
        let big = gen_dynamic_panel(&DgpConfig::new(9, 6, 0.5, 11)).unwrap();
        assert_eq!(small.series("y", 2).unwrap(), big.series("y", 2).unwrap());
    }

    #[test]
    fn near_unit_root_stays_finite() {
        let mut cfg = DgpConfig::new(3, 1000, 0.99999, 5);
        cfg.fe_variance = 0.0;
        let p = gen_dynamic_panel(&cfg).unwrap();
        let col = p.column("y").unwrap();
        assert_eq!(col.observed_count(), p.n_cells());
        assert!((0..p.n_cells()).all(|i| col.get(i).unwrap().abs() < 1e6));
    }

    #[test]
    fn lag_one_autocorrelation_matches_delta() {
        // closed form: a stationary AR(1) has lag-1 autocorrelation δ
        let delta = 0.6;
        let mut cfg = DgpConfig::new(500, 50, delta, 3);
        cfg.fe_variance = 0.0;
        let p = gen_dynamic_panel(&cfg).unwrap();
        let all: Vec<Vec<f64>> = (0..p.n_units())
            .map(|i| p.series("y", i).unwrap().into_iter().map(Option::unwrap).collect())
            .collect();
        let m = all.iter().flatten().sum::<f64>() / p.n_cells() as f64;
        let (mut num, mut den) = (0.0, 0.0);
        for s in &all {
            for t in 1..s.len() {
                num += (s[t] - m) * (s[t - 1] - m);
            }
            den += s.iter().map(|v| (v - m).powi(2)).sum::<f64>();
        }
        let r = num / den;
        assert!((r - delta).abs() < 0.05, "r = {r}");
    }

    #[test]
    fn oracle_iv_basics() {
        let b = oracle_iv(&[1.0, 2.0], &[vec![1.0], vec![1.0]], &[vec![1.0], vec![1.0]]).unwrap();
        assert!((b[0] - 1.5).abs() < 1e-15);

        // Z = X gives least squares
        let x = vec![vec![1.0, 0.0], vec![1.0, 1.0], vec![1.0, 2.0], vec![1.0, 4.0]];
        let y = [0.5, 1.9, 4.2, 8.1];
        let iv = oracle_iv(&y, &x, &x).unwrap();
        let ls = dense::least_squares(&x, &y).unwrap();
        assert!(iv.iter().zip(&ls).all(|(a, b)| (a - b).abs() < 1e-12));

        let sing = vec![vec![1.0, 2.0], vec![2.0, 4.0]];
        assert!(oracle_iv(&[1.0, 2.0], &sing, &sing).is_err());
    }
}
