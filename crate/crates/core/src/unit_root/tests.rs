use super::*;
use crate::simulate::dense::least_squares;
use crate::simulate::{cell_normal, gen_ar_panel};

fn spec(p: usize, det: Deterministic) -> AdfSpec {
    AdfSpec {
        lags: p,
        deterministic: det,
        bic_lags: false,
    }
}

fn fixed_series() -> Vec<f64> {
    let mut y = vec![0.3];
    for t in 1..20 {
        let prev = y[t - 1];
        y.push(0.7 * prev + cell_normal(99, 0, t as u64, 0) + 0.1 * t as f64);
    }
    y
}

#[test]
fn pure_trend_is_degenerate() {
    let y: Vec<f64> = (1..=30).map(|t| t as f64).collect();
    let err = adf_stat(&y, &spec(0, Deterministic::Trend)).unwrap_err();
    assert!(matches!(err, Error::Degenerate(_)), "{err}");
}

#[test]
fn too_short_series() {
    let err = adf_stat(&[1.0, 2.0, 1.5, 3.0], &spec(1, Deterministic::Intercept)).unwrap_err();
    assert!(matches!(err, Error::InsufficientData(_)));
}

#[test]
fn matches_normal_equations_oracle() {
    let y = fixed_series();
    let p = 2;
    // Δy_t on [y_{t-1}, Δy_{t-1}, Δy_{t-2}, 1, t]
    let mut x = Vec::new();
    let mut dy = Vec::new();
    for t in 3..y.len() {
        x.push(vec![y[t - 1], y[t - 1] - y[t - 2], y[t - 2] - y[t - 3], 1.0, t as f64]);
        dy.push(y[t] - y[t - 1]);
    }
    let b = least_squares(&x, &dy).unwrap();
    let resid: Vec<f64> = x.iter().zip(&dy).map(|(r, v)| v - r.iter().zip(&b).map(|(a, c)| a * c).sum::<f64>()).collect();
    let s2 = resid.iter().map(|e| e * e).sum::<f64>() / (dy.len() - 5) as f64;
    let xtx = crate::simulate::dense::matmul(&crate::simulate::dense::transpose(&x), &x);
    let inv = crate::simulate::dense::inverse(&xtx).unwrap();
    let oracle = b[0] / (s2 * inv[0][0]).sqrt();
    let got = adf_stat(&y, &spec(p, Deterministic::Trend)).unwrap();
    assert!((got - oracle).abs() < 1e-10, "{got} vs {oracle}");
}

#[test]
fn long_random_walk_matches_dickey_fuller_quantiles() {
    // independent oracle: the same draws through dense normal equations
    let reps = 1000u64;
    let draws: Vec<(f64, f64)> = (0..reps)
        .into_par_iter()
        .map(|r| {
            let mut y = vec![0.0];
            for t in 1..500 {
                let prev = y[t - 1];
                y.push(prev + cell_normal(17, r, t as u64, 0));
            }
            let x: Vec<Vec<f64>> = (1..500).map(|t| vec![y[t - 1], 1.0]).collect();
            let dy: Vec<f64> = (1..500).map(|t| y[t] - y[t - 1]).collect();
            let b = least_squares(&x, &dy).unwrap();
            let rss: f64 = x.iter().zip(&dy).map(|(r, v)| (v - r[0] * b[0] - r[1] * b[1]).powi(2)).sum();
            let xtx = crate::simulate::dense::matmul(&crate::simulate::dense::transpose(&x), &x);
            let inv = crate::simulate::dense::inverse(&xtx).unwrap();
            let oracle = b[0] / (rss / 497.0 * inv[0][0]).sqrt();
            (adf_stat(&y, &spec(0, Deterministic::Intercept)).unwrap(), oracle)
        })
        .collect();
    for (got, oracle) in &draws {
        assert!((got - oracle).abs() < 1e-8);
    }
    let share = |c: f64| draws.iter().filter(|d| d.0 > c).count() as f64 / reps as f64;
    // with an intercept the unit-root t has median near -1.57 and 5% point -2.86
    assert!((0.18..=0.32).contains(&share(-1.0)), "above -1: {}", share(-1.0));
    assert!(share(-2.86) >= 0.93, "above -2.86: {}", share(-2.86));
}

#[test]
fn constant_shift_invariance() {
    let y = fixed_series();
    let shifted: Vec<f64> = y.iter().map(|v| v + 123.456).collect();
    for det in [Deterministic::Intercept, Deterministic::Trend] {
        let a = adf_stat(&y, &spec(1, det)).unwrap();
        let b = adf_stat(&shifted, &spec(1, det)).unwrap();
        assert!((a - b).abs() < 1e-8);
    }
}

#[test]
fn bic_picks_a_lag_in_range() {
    let y = fixed_series();
    let s = AdfSpec {
        lags: 3,
        deterministic: Deterministic::Intercept,
        bic_lags: true,
    };
    let fit = adf_regression(&y, &s).unwrap();
    assert!(fit.lags <= 3);
}

#[test]
fn longest_run_prefers_latest_on_ties() {
    let s = [Some(1.0), Some(2.0), None, Some(3.0), Some(4.0), None];
    assert_eq!(longest_run(&s), (3, vec![3.0, 4.0]));
    let s = [None, Some(1.0), Some(2.0), Some(5.0), None, Some(3.0)];
    assert_eq!(longest_run(&s), (1, vec![1.0, 2.0, 5.0]));
}

fn identical_panel(n: usize) -> PanelDataset {
    let y = fixed_series();
    let units = crate::simulate::unit_labels(n);
    let periods: Vec<i32> = (1..=y.len() as i32).collect();
    let values = (0..n).flat_map(|_| y.iter().map(|&v| Some(v))).collect();
    PanelDataset::new(units, periods).unwrap().with_column("y", values).unwrap()
}

#[test]
fn ips_identical_units_share_t() {
    let panel = identical_panel(4);
    let s = spec(1, Deterministic::Intercept);
    let r = ips_test(&panel, "y", &s, &UnitRootOptions::default()).unwrap();
    let t = adf_stat(&fixed_series(), &s).unwrap();
    assert_eq!(r.unit_t.len(), 4);
    let t_bar = r.unit_t.iter().sum::<f64>() / 4.0;
    assert_eq!(t_bar, t);
    assert!((0.0..=1.0).contains(&r.p_value));
}

#[test]
fn single_unit_directs_to_adf() {
    let panel = identical_panel(1);
    let err = llc_test(&panel, "y", &AdfSpec::default(), &UnitRootOptions::default()).unwrap_err();
    assert!(err.to_string().contains("adf_stat"));
}

#[test]
fn short_units_are_dropped_and_reported() {
    let panel = gen_ar_panel(6, 30, 0.5, 3).unwrap();
    let mut col: Vec<Option<f64>> = (0..6).flat_map(|i| panel.series("y", i).unwrap()).collect();
    for t in 0..26 {
        col[2 * 30 + t] = None;
    }
    let panel = panel.with_column("y_gappy", col).unwrap();
    let r = ips_test(&panel, "y_gappy", &AdfSpec::default(), &UnitRootOptions::default()).unwrap();
    assert_eq!(r.dropped, vec![panel.units()[2].clone()]);
    assert_eq!(r.used.len(), 5);
    assert_eq!(r.unit_t.len(), 5);
}

#[test]
fn rerun_on_reported_subset_is_identical() {
    let panel = gen_ar_panel(8, 25, 0.9, 4).unwrap();
    let mut col: Vec<Option<f64>> = (0..8).flat_map(|i| panel.series("y", i).unwrap()).collect();
    col[25 + 3] = None;
    col[3 * 25 + 20] = None;
    let panel = panel.with_column("w", col).unwrap();
    let opts = UnitRootOptions::default();
    let s = AdfSpec::default();
    for test in [llc_test, ips_test] {
        let r = test(&panel, "w", &s, &opts).unwrap();
        // rebuild a panel containing only the reported stretches
        let units: Vec<String> = r.used.iter().map(|u| u.unit.clone()).collect();
        let periods = panel.periods().to_vec();
        let mut vals = Vec::new();
        for u in &r.used {
            let i = panel.unit_index(&u.unit).unwrap();
            for (t, &per) in periods.iter().enumerate() {
                let keep = per >= u.first_period && per <= u.last_period;
                vals.push(if keep { panel.get("w", i, t).unwrap() } else { None });
            }
        }
        let sub = PanelDataset::new(units, periods).unwrap().with_column("w", vals).unwrap();
        let again = test(&sub, "w", &s, &opts).unwrap();
        assert_eq!(r.statistic.to_bits(), again.statistic.to_bits());
    }
}

#[test]
fn ips_permutation() {
    let panel = gen_ar_panel(7, 30, 0.6, 11).unwrap();
    let perm = [3, 0, 6, 1, 5, 2, 4];
    let shuffled = panel.select_units(&perm).unwrap();
    let opts = UnitRootOptions::default();
    let s = AdfSpec::default();
    let a = ips_test(&panel, "y", &s, &opts).unwrap();
    let b = ips_test(&shuffled, "y", &s, &opts).unwrap();
    for (k, &i) in perm.iter().enumerate() {
        assert_eq!(b.unit_t[k], a.unit_t[i]);
    }
    assert!((a.statistic - b.statistic).abs() < 1e-12);
}

#[test]
fn deterministic_across_runs() {
    let panel = gen_ar_panel(10, 40, 1.0, 8).unwrap();
    let opts = UnitRootOptions::default();
    let a = llc_test(&panel, "y", &AdfSpec::default(), &opts).unwrap();
    let b = llc_test(&panel, "y", &AdfSpec::default(), &opts).unwrap();
    assert_eq!(a, b);
}

/// Rejection rate at 5% over `reps` panels of N=T=50.
pub(crate) fn rejection_rate(
    rho: f64,
    reps: u64,
    test: fn(&PanelDataset, &str, &AdfSpec, &UnitRootOptions) -> Result<UnitRootResult>,
) -> f64 {
    let opts = UnitRootOptions::default();
    let rejections: usize = (0..reps)
        .into_par_iter()
        .map(|r| {
            let panel = gen_ar_panel(50, 50, rho, crate::simulate::replication_seed(2024, r)).unwrap();
            usize::from(test(&panel, "y", &AdfSpec::default(), &opts).unwrap().p_value < 0.05)
        })
        .sum();
    rejections as f64 / reps as f64
}

#[test]
fn llc_size_and_power() {
    let size = rejection_rate(1.0, 500, llc_test);
    assert!((0.03..=0.07).contains(&size), "LLC size {size}");
    let power = rejection_rate(0.5, 500, llc_test);
    assert!(power >= 0.9, "LLC power {power}");
}

#[test]
fn ips_size_and_power() {
    let size = rejection_rate(1.0, 500, ips_test);
    assert!((0.03..=0.07).contains(&size), "IPS size {size}");
    let power = rejection_rate(0.5, 500, ips_test);
    assert!(power >= 0.9, "IPS power {power}");
}
