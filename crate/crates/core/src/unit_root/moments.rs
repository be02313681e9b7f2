//! Moment tables for the panel unit-root statistics and the seeded
//! simulation that produces them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use nalgebra::{DMatrix, DVector};
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::ips_moments::IPS_TABLE;
use super::llc_table::llc_table_lookup;
use super::{llc_pool, llc_unit, min_length, Deterministic, LlcUnit, UnitRootOptions};
use crate::error::{Error, Result};
use crate::simulate::cell_rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MomentSource {
    Table,
    Simulated,
}

const CHANNEL_IPS: u64 = 0x1B5;
const CHANNEL_LLC: u64 = 0x11C;

type Key = (usize, usize, u8, usize, u64);

fn ips_cache() -> &'static Mutex<HashMap<Key, (f64, f64)>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, (f64, f64)>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn llc_cache() -> &'static Mutex<HashMap<Key, (f64, f64)>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, (f64, f64)>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn random_walk(len: usize, seed: u64, rep: u64, channel: u64) -> Vec<f64> {
    let mut rng = cell_rng(seed, rep, len as u64, channel);
    let mut y = Vec::with_capacity(len);
    let mut level = 0.0;
    for _ in 0..len {
        let e: f64 = StandardNormal.sample(&mut rng);
        level += e;
        y.push(level);
    }
    y
}

/// ADF t statistic via the normal equations; the simulation hot loop.
fn fast_adf_t(y: &[f64], p: usize, det: Deterministic) -> Option<f64> {
    let k = 1 + p + det.columns();
    let start = p + 1;
    let mut xtx = DMatrix::<f64>::zeros(k, k);
    let mut xty = DVector::<f64>::zeros(k);
    let mut yty = 0.0;
    let mut row = vec![0.0; k];
    for t in start..y.len() {
        let dy = y[t] - y[t - 1];
        row[0] = y[t - 1];
        for j in 1..=p {
            row[j] = y[t - j] - y[t - j - 1];
        }
        if det != Deterministic::None {
            row[p + 1] = 1.0;
        }
        if det == Deterministic::Trend {
            row[p + 2] = t as f64;
        }
        for a in 0..k {
            xty[a] += row[a] * dy;
            for b in 0..=a {
                xtx[(a, b)] += row[a] * row[b];
            }
        }
        yty += dy * dy;
    }
    for a in 0..k {
        for b in 0..a {
            xtx[(b, a)] = xtx[(a, b)];
        }
    }
    let chol = xtx.cholesky()?;
    let beta = chol.solve(&xty);
    let rss = yty - beta.dot(&xty);
    let n = (y.len() - start) as f64;
    let s2 = rss / (n - k as f64);
    if !(s2 > 0.0) {
        return None;
    }
    let mut e0 = DVector::zeros(k);
    e0[0] = 1.0;
    let v00 = chol.solve(&e0)[0];
    Some(beta[0] / (s2 * v00).sqrt())
}

/// Mean and variance of the ADF t statistic for Gaussian random walks of
/// `len` observations starting at zero. Deterministic for a given seed,
/// independent of thread count.
pub fn simulate_ips_moments(len: usize, p: usize, det: Deterministic, reps: usize, seed: u64) -> Result<(f64, f64)> {
    if len < min_length(p, det) {
        return Err(Error::InsufficientData(format!(
            "series of length {len} too short for ADF moments with {p} lags"
        )));
    }
    if reps < 2 {
        return Err(Error::Config("moment simulation needs at least two replications".into()));
    }
    let channel = CHANNEL_IPS + 16 * (p as u64) + det.code() as u64;
    let draws: Vec<f64> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            // a singular draw has probability zero; redraw on a shifted stream
            (0..)
                .find_map(|attempt: u64| fast_adf_t(&random_walk(len, seed, r, channel + (attempt << 32)), p, det))
                .unwrap()
        })
        .collect();
    let n = draws.len() as f64;
    let mean = draws.iter().sum::<f64>() / n;
    let var = draws.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (n - 1.0);
    Ok((mean, var))
}

/// (E[t], Var[t]) for a unit of `len` observations with `p` lags.
pub fn ips_moments(len: usize, p: usize, det: Deterministic, opts: &UnitRootOptions) -> Result<(f64, f64, MomentSource)> {
    if let Some(&(_, _, _, m, v)) = IPS_TABLE
        .iter()
        .find(|(t, lp, d, _, _)| *t as usize == len && *lp as usize == p && *d == det.code())
    {
        return Ok((m, v, MomentSource::Table));
    }
    if !opts.allow_simulation {
        return Err(Error::MissingMoments(format!(
            "IPS moments for T={len}, p={p}, {det:?} are not tabulated and simulation is disabled"
        )));
    }
    let key = (len, p, det.code(), opts.simulation_reps, opts.simulation_seed);
    if let Some(&(m, v)) = ips_cache().lock().unwrap().get(&key) {
        return Ok((m, v, MomentSource::Simulated));
    }
    let (m, v) = simulate_ips_moments(len, p, det, opts.simulation_reps, opts.simulation_seed)?;
    ips_cache().lock().unwrap().insert(key, (m, v));
    Ok((m, v, MomentSource::Simulated))
}

/// LLC (μ*, σ*) estimated from `reps` simulated random-walk units with
/// regression length `t_tilde` (rounded) and `p` lags.
pub fn simulate_llc_adjustments(t_tilde: f64, p: usize, det: Deterministic, reps: usize, seed: u64) -> Result<(f64, f64)> {
    let len = t_tilde.round() as usize + p + 1;
    if len < min_length(p, det) {
        return Err(Error::InsufficientData(format!("T={t_tilde} too short for LLC adjustments")));
    }
    if reps < 2 {
        return Err(Error::Config("moment simulation needs at least two replications".into()));
    }
    let channel = CHANNEL_LLC + 16 * (p as u64) + det.code() as u64;
    let units: Vec<LlcUnit> = (0..reps as u64)
        .into_par_iter()
        .map(|r| {
            (0..)
                .find_map(|attempt: u64| llc_unit(&random_walk(len, seed, r, channel + (attempt << 32)), p, det).ok())
                .unwrap()
        })
        .collect();
    let pooled = llc_pool(&units);
    let tt = pooled.t_tilde;
    let num: f64 = units.iter().map(|u| u.num).sum();
    let s: f64 = units.iter().map(|u| u.s).sum();
    let mu = num / (tt * s);
    let n = units.len() as f64;
    let dev = units.iter().map(|u| (u.num - tt * u.s * mu).powi(2)).sum::<f64>() / n;
    let den = units.iter().map(|u| u.den).sum::<f64>() / n;
    Ok((mu, (dev / (pooled.sigma2 * den)).sqrt()))
}

/// (μ*, σ*) for the LLC adjustment: tabulated where the grid covers T̃ and
/// the (rounded) mean lag order, simulated elsewhere.
pub fn llc_adjustments(t_tilde: f64, mean_lags: f64, det: Deterministic, opts: &UnitRootOptions) -> Result<(f64, f64, MomentSource)> {
    let p = mean_lags.round() as usize;
    if let Some((m, s)) = llc_table_lookup(t_tilde, p, det) {
        return Ok((m, s, MomentSource::Table));
    }
    if !opts.allow_simulation {
        return Err(Error::MissingMoments(format!(
            "LLC adjustments for T={t_tilde:.1}, p={p} are not tabulated and simulation is disabled"
        )));
    }
    let key = (t_tilde.round() as usize, p, det.code(), opts.simulation_reps, opts.simulation_seed);
    if let Some(&(m, s)) = llc_cache().lock().unwrap().get(&key) {
        return Ok((m, s, MomentSource::Simulated));
    }
    let (m, s) = simulate_llc_adjustments(t_tilde, p, det, opts.simulation_reps, opts.simulation_seed)?;
    llc_cache().lock().unwrap().insert(key, (m, s));
    Ok((m, s, MomentSource::Simulated))
}
