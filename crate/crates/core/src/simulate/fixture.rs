//! Synthetic stand-in for the 94-country replication dataset: same units,
//! years and columns, with values drawn around plausible magnitudes and the
//! three dependent variables generated by dynamic equations.

use super::{cell_normal, cell_uniform};
use crate::error::Result;
use crate::ingest::{ClassificationList, REPLICATION_COLUMNS};
use crate::panel::PanelDataset;

const FIRST_YEAR: i32 = 2010;
const LAST_YEAR: i32 = 2020;
const BURN_IN: usize = 30;

const LPI_SUBS: [&str; 6] = ["LPIAC", "LPICQ", "LPIEA", "LPIEC", "LPIFS", "LPIQTT"];

struct Draw {
    seed: u64,
    unit: u64,
}

impl Draw {
    fn n(&self, t: usize, ch: u64) -> f64 {
        cell_normal(self.seed, self.unit, t as u64, ch)
    }

    fn u(&self, ch: u64) -> f64 {
        cell_uniform(self.seed, self.unit, 0, ch)
    }

    /// Stationary AR(1) path of length `len` around `mean`.
    fn ar(&self, len: usize, mean: f64, rho: f64, sd: f64, ch: u64) -> Vec<f64> {
        let mut dev = 0.0;
        let mut out = Vec::with_capacity(len);
        for t in 0..len {
            dev = rho * dev + sd * self.n(t, ch);
            out.push(mean + dev);
        }
        out
    }
}

/// Raw replication columns for the 94 countries, 2010–2020, fully observed.
pub fn replication_fixture(seed: u64) -> Result<PanelDataset> {
    let mut codes = ClassificationList::replication().all_codes();
    codes.sort();
    let years: Vec<i32> = (FIRST_YEAR..=LAST_YEAR).collect();
    let tn = years.len();
    let len = BURN_IN + tn;

    let mut cols: Vec<Vec<Option<f64>>> = vec![Vec::with_capacity(codes.len() * tn); REPLICATION_COLUMNS.len()];
    let idx = |name: &str| REPLICATION_COLUMNS.iter().position(|c| *c == name).unwrap();

    for i in 0..codes.len() {
        let d = Draw { seed, unit: i as u64 };
        let atce: Vec<f64> = d.ar(len, 2.0 + 13.0 * d.u(1), 0.5, 1.5, 11).into_iter().map(|v| v.max(1.0)).collect();
        let ln_pct = d.ar(len, 13.0 + 2.0 * d.n(0, 2), 0.7, 0.15, 12);
        let aft: Vec<f64> = d.ar(len, (4.0 + 1.5 * d.n(0, 3)).exp(), 0.6, 20.0, 13).into_iter().map(|v| v.max(0.0)).collect();
        let qpi: Vec<f64> = d.ar(len, 2.0 + 3.5 * d.u(4), 0.6, 0.2, 14).into_iter().map(|v| v.clamp(1.0, 7.0)).collect();
        let lpi_base = 2.0 + 1.5 * d.u(5);
        let subs: Vec<Vec<f64>> = (0..LPI_SUBS.len())
            .map(|s| {
                let offset = 0.15 * d.n(0, 20 + s as u64);
                d.ar(len, lpi_base + offset, 0.5, 0.1, 30 + s as u64)
                    .into_iter()
                    .map(|v| v.clamp(1.0, 5.0))
                    .collect()
            })
            .collect();
        let lpi: Vec<f64> = (0..len).map(|t| subs.iter().map(|s| s[t]).sum::<f64>() / 6.0).collect();
        let trf: Vec<f64> = d.ar(len, 1.0 + 14.0 * d.u(6), 0.6, 1.0, 15).into_iter().map(|v| v.max(0.1)).collect();
        let fdi_sign = if d.u(7) < 0.1 { 1.0 } else { -1.0 };
        let fdi: Vec<f64> = d.ar(len, 20.0 + 1.5 * d.n(0, 8), 0.5, 0.3, 16).into_iter().map(|v| fdi_sign * v.exp()).collect();
        let ln_gfcf = d.ar(len, 23.0 + 1.5 * d.n(0, 9), 0.7, 0.1, 17);

        // dependent variables: deviations follow dynamic equations around
        // unit-specific levels
        let mu_exp = 24.0 + 1.5 * d.n(0, 40);
        let mu_imp = mu_exp + 0.3 * d.n(0, 41);
        let mu_gni = 9.0 + 0.5 * d.n(0, 42);
        let (mut e, mut m, mut g) = (0.0_f64, 0.0_f64, 0.0_f64);
        let mut ln_exp = Vec::with_capacity(len);
        let mut ln_imp = Vec::with_capacity(len);
        let mut ln_gni = Vec::with_capacity(len);
        let lpi_mean = lpi.iter().sum::<f64>() / len as f64;
        let pct_mean = ln_pct.iter().sum::<f64>() / len as f64;
        let gfcf_mean = ln_gfcf.iter().sum::<f64>() / len as f64;
        for t in 0..len {
            let common = 0.3 * (ln_pct[t] - pct_mean) + 0.2 * (lpi[t] - lpi_mean) + 0.2 * (ln_gfcf[t] - gfcf_mean)
                - 0.01 * (atce[t] - atce[0]);
            e = 0.6 * e + common + 0.08 * d.n(t, 50);
            m = 0.5 * m + common + 0.08 * d.n(t, 51);
            g = 0.7 * g + 0.05 * e + 0.05 * m + 0.02 * d.n(t, 52);
            ln_exp.push(mu_exp + e);
            ln_imp.push(mu_imp + m);
            ln_gni.push(mu_gni + g);
        }

        let mut put = |name: &str, series: &[f64]| {
            cols[idx(name)].extend(series[BURN_IN..].iter().map(|&v| Some(v)));
        };
        put("GNI", &ln_gni.iter().map(|v| v.exp()).collect::<Vec<_>>());
        put("EXPG", &ln_exp.iter().map(|v| v.exp()).collect::<Vec<_>>());
        put("IMPG", &ln_imp.iter().map(|v| v.exp()).collect::<Vec<_>>());
        put("ATCE", &atce);
        put("PCT", &ln_pct.iter().map(|v| v.exp()).collect::<Vec<_>>());
        put("AFT", &aft);
        put("QPI", &qpi);
        for (s, name) in LPI_SUBS.iter().enumerate() {
            put(name, &subs[s]);
        }
        put("LPI", &lpi);
        put("TRF", &trf);
        put("FDI", &fdi);
        put("GFCF", &ln_gfcf.iter().map(|v| v.exp()).collect::<Vec<_>>());
    }

    let mut panel = PanelDataset::new(codes, years)?;
    for (name, values) in REPLICATION_COLUMNS.iter().zip(cols) {
        panel = panel.with_column(name, values)?;
    }
    Ok(panel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_shape() {
        let p = replication_fixture(42).unwrap();
        assert_eq!(p.n_units(), 94);
        assert_eq!(p.periods().first(), Some(&2010));
        assert_eq!(p.n_cells(), 1034);
        for name in REPLICATION_COLUMNS {
            assert_eq!(p.column(name).unwrap().observed_count(), 1034, "{name}");
        }
        assert_eq!(p, replication_fixture(42).unwrap());
    }
}
