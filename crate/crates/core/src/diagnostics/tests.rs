use super::*;
use crate::gmm::{
    estimate, Design, GmmStyle, InstrumentColumn, InstrumentPlan, LevelStyle, ModelSpec, PlanOptions, Role, RowInfo,
    Scheme, UnitBlock,
};
use crate::simulate::dense::{inverse, matmul, matvec, transpose, Mat};
use crate::simulate::{cell_normal, gen_dynamic_panel, replication_seed, unit_labels, DgpConfig};

fn toy_panel(n: usize, t: usize, seed: u64) -> PanelDataset {
    let mut y = Vec::new();
    let mut x = Vec::new();
    for i in 0..n as u64 {
        for s in 0..t as u64 {
            y.push(Some(cell_normal(seed, i, s, 0) + i as f64));
            x.push(Some(cell_normal(seed, i, s, 1)));
        }
    }
    PanelDataset::new(unit_labels(n), (2001..2001 + t as i32).collect())
        .unwrap()
        .with_column("y", y)
        .unwrap()
        .with_column("x", x)
        .unwrap()
}

fn fixture_plan(max_lag: usize) -> (ModelSpec, InstrumentPlan) {
    let spec = ModelSpec::new("y", 1).with_regressor("x", Role::Exogenous);
    let plan = InstrumentPlan {
        gmm_style: vec![GmmStyle {
            variable: "y".into(),
            min_lag: 2,
            max_lag: Some(max_lag),
            collapse: true,
        }],
        iv_style: vec!["x".into()],
        level: vec![],
    };
    (spec, plan)
}

fn one_step(panel: &PanelDataset, spec: &ModelSpec, plan: &InstrumentPlan) -> GmmEstimate {
    estimate(panel, spec, plan, Scheme::Difference, Step::One, &GmmOptions::default()).unwrap()
}

fn two_step(panel: &PanelDataset, spec: &ModelSpec, plan: &InstrumentPlan, scheme: Scheme) -> GmmEstimate {
    estimate(panel, spec, plan, scheme, Step::Two, &GmmOptions::default()).unwrap()
}

#[test]
fn exactly_identified_statistics_vanish() {
    let panel = toy_panel(6, 5, 6);
    let (spec, plan) = fixture_plan(2);
    let est = two_step(&panel, &spec, &plan, Scheme::Difference);
    for r in [sargan(&est).unwrap(), hansen_j(&est).unwrap()] {
        assert!(r.statistic.abs() < 1e-8, "{}: {}", r.name, r.statistic);
        assert_eq!(r.df, Some(0));
    }
}

/// Per-unit dense blocks of the fixture's difference equations, built
/// directly from the panel: rows t = 2..T-1, X = [Δy_{t-1}, Δx_t],
/// Z = [y_{t-2}, y_{t-3} (0 if absent), Δx_t].
struct DenseUnit {
    y: Vec<f64>,
    x: Mat,
    z: Mat,
}

fn dense_units(panel: &PanelDataset) -> Vec<DenseUnit> {
    let g = |v: &str, i: usize, t: usize| panel.get(v, i, t).unwrap().unwrap();
    (0..panel.n_units())
        .map(|i| {
            let mut u = DenseUnit {
                y: vec![],
                x: vec![],
                z: vec![],
            };
            for t in 2..panel.n_periods() {
                let dx = g("x", i, t) - g("x", i, t - 1);
                u.y.push(g("y", i, t) - g("y", i, t - 1));
                u.x.push(vec![g("y", i, t - 1) - g("y", i, t - 2), dx]);
                u.z.push(vec![g("y", i, t - 2), if t >= 3 { g("y", i, t - 3) } else { 0.0 }, dx]);
            }
            u
        })
        .collect()
}

fn add(a: &mut Mat, b: &Mat) {
    for (ra, rb) in a.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += y;
        }
    }
}

fn col(v: &[f64]) -> Mat {
    v.iter().map(|&x| vec![x]).collect()
}

fn flat(m: &Mat) -> Vec<f64> {
    m.iter().map(|r| r[0]).collect()
}

fn tridiag(n: usize) -> Mat {
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match a.abs_diff(b) {
                    0 => 2.0,
                    1 => -1.0,
                    _ => 0.0,
                })
                .collect()
        })
        .collect()
}

struct DenseOneStep {
    w: Mat,
    a: Mat,
    beta: Vec<f64>,
    e: Vec<Vec<f64>>,
    v: Mat,
}

fn dense_one_step(units: &[DenseUnit]) -> DenseOneStep {
    let (l, k) = (3, 2);
    let mut zhz = vec![vec![0.0; l]; l];
    let mut a = vec![vec![0.0; l]; k];
    let mut b = vec![vec![0.0]; l];
    for u in units {
        let zt = transpose(&u.z);
        add(&mut zhz, &matmul(&matmul(&zt, &tridiag(u.y.len())), &u.z));
        add(&mut a, &matmul(&transpose(&u.x), &u.z));
        add(&mut b, &matmul(&zt, &col(&u.y)));
    }
    let w = inverse(&zhz).unwrap();
    let aw = matmul(&a, &w);
    let bread = inverse(&matmul(&aw, &transpose(&a))).unwrap();
    let map = matmul(&bread, &aw);
    let beta = flat(&matmul(&map, &b));
    let e: Vec<Vec<f64>> = units
        .iter()
        .map(|u| u.y.iter().zip(matvec(&u.x, &beta)).map(|(y, f)| y - f).collect())
        .collect();
    let mut om = vec![vec![0.0; l]; l];
    for (u, ei) in units.iter().zip(&e) {
        let g = matmul(&transpose(&u.z), &col(ei));
        add(&mut om, &matmul(&g, &transpose(&g)));
    }
    let v = matmul(&matmul(&map, &om), &transpose(&map));
    DenseOneStep { w, a, beta, e, v }
}

#[test]
fn sargan_matches_dense_oracle() {
    let panel = toy_panel(6, 5, 6);
    let (spec, plan) = fixture_plan(3);
    let est = one_step(&panel, &spec, &plan);
    assert_eq!(est.instrument_count, 3);
    let units = dense_units(&panel);
    let o = dense_one_step(&units);
    for j in 0..2 {
        assert!((est.coef[j] - o.beta[j]).abs() < 1e-10);
    }
    let mut g = vec![0.0; 3];
    let (mut ee, mut tr) = (0.0, 0.0);
    for (u, ei) in units.iter().zip(&o.e) {
        for (gj, v) in g.iter_mut().zip(flat(&matmul(&transpose(&u.z), &col(ei)))) {
            *gj += v;
        }
        ee += ei.iter().map(|v| v * v).sum::<f64>();
        tr += 2.0 * ei.len() as f64;
    }
    let oracle = g.iter().zip(matvec(&o.w, &g)).map(|(a, b)| a * b).sum::<f64>() / (ee / tr);
    let s = sargan(&est).unwrap();
    assert!((s.statistic - oracle).abs() < 1e-10 * oracle.max(1.0), "{} vs {oracle}", s.statistic);
    assert_eq!(s.df, Some(1));
}

#[test]
fn ar_matches_dense_oracle() {
    let panel = toy_panel(6, 6, 21);
    let (spec, plan) = fixture_plan(3);
    let est = one_step(&panel, &spec, &plan);
    let units = dense_units(&panel);
    let o = dense_one_step(&units);
    let aw = matmul(&o.a, &o.w);
    let map = matmul(&inverse(&matmul(&aw, &transpose(&o.a))).unwrap(), &aw);
    for m in [1usize, 2] {
        let (mut num, mut s2) = (0.0, 0.0);
        let mut wx = vec![0.0; 2];
        let mut zeew = vec![0.0; 3];
        for (u, e) in units.iter().zip(&o.e) {
            let w: Vec<f64> = (0..e.len()).map(|r| if r >= m { e[r - m] } else { 0.0 }).collect();
            let we: f64 = w.iter().zip(e).map(|(a, b)| a * b).sum();
            num += we;
            s2 += we * we;
            for (j, v) in matvec(&transpose(&u.x), &w).into_iter().enumerate() {
                wx[j] += v;
            }
            for (j, v) in matvec(&transpose(&u.z), e).into_iter().enumerate() {
                zeew[j] += v * we;
            }
        }
        let mid: f64 = wx.iter().zip(matvec(&map, &zeew)).map(|(a, b)| a * b).sum();
        let last: f64 = wx.iter().zip(matvec(&o.v, &wx)).map(|(a, b)| a * b).sum();
        let oracle = num / (s2 - 2.0 * mid + last).sqrt();
        let got = ar_test(&est, m).unwrap();
        assert!((got.statistic - oracle).abs() < 1e-8, "AR({m}) {} vs {oracle}", got.statistic);
        assert!(got.df.is_none());
    }
}

#[test]
fn zero_residuals_are_degenerate() {
    let panel = toy_panel(6, 6, 22);
    let y: Vec<Option<f64>> = (0..6)
        .flat_map(|i| panel.series("x", i).unwrap())
        .map(|v| v.map(|x| 2.0 * x))
        .collect();
    let panel = panel.with_column("y_exact", y).unwrap();
    let spec = ModelSpec::new("y_exact", 0).with_regressor("x", Role::Predetermined);
    let plan = InstrumentPlan::from_roles(&spec, PlanOptions::default());
    let est = one_step(&panel, &spec, &plan);
    assert!(matches!(ar_test(&est, 1), Err(Error::Degenerate(_))));
    assert!(matches!(ar_test(&est, 0), Err(Error::Config(_))));
    let short = toy_panel(6, 4, 23);
    let (spec, plan) = fixture_plan(2);
    let est = one_step(&short, &spec, &plan);
    assert!(matches!(ar_test(&est, 2), Err(Error::InsufficientData(_))));
}

/// Four units with one level row each, x in the instrument span and
/// ±1 errors orthogonal to x: the one-step residuals equal the errors, so
/// Ω₁ = ΣZ'Z and the two-step weighting is proportional to W₁.
fn homoskedastic_design() -> Design {
    let z = [[1.0, 1.0], [1.0, 2.0], [1.0, 0.0], [1.0, 0.0]];
    let e = [1.0, 1.0, -1.0, -1.0];
    let units = (0..4)
        .map(|i| UnitBlock {
            unit: format!("u{i}"),
            rows: vec![RowInfo {
                period: 0,
                equation: Equation::Level,
            }],
            y: DVector::from_element(1, 0.7 + e[i]),
            x: DMatrix::from_element(1, 1, 1.0),
            z: DMatrix::from_row_slice(1, 2, &z[i]),
        })
        .collect();
    let column = |name: &str| InstrumentColumn {
        name: name.into(),
        equation: Equation::Level,
        kind: InstrumentKind::Iv,
        variable: name.into(),
    };
    Design {
        scheme: Scheme::System,
        dependent: "y".into(),
        terms: vec!["_cons".into()],
        names: vec!["_cons".into()],
        omitted: vec![],
        instruments: vec![column("a"), column("b")],
        units,
        periods: vec![1],
    }
}

#[test]
fn sargan_equals_hansen_when_weights_coincide() {
    let est = estimate_design(Arc::new(homoskedastic_design()), Step::Two, &GmmOptions::default()).unwrap();
    assert!((est.coef[0] - 0.7).abs() < 1e-12);
    let s = sargan(&est).unwrap();
    let j = hansen_j(&est).unwrap();
    assert!(s.statistic > 0.1);
    assert!((s.statistic - j.statistic).abs() < 1e-10, "{} vs {}", s.statistic, j.statistic);
}

/// Collapsed, depth-limited plan: few enough columns that Ω has full rank.
fn compact_plan(spec: &ModelSpec) -> InstrumentPlan {
    InstrumentPlan::from_roles(
        spec,
        PlanOptions {
            collapse: true,
            lag_depth: Some(3),
            level_lag: 1,
        },
    )
}

#[test]
fn hansen_is_scale_invariant_and_computed_for_one_step() {
    let panel = toy_panel(40, 7, 24);
    let scaled: Vec<Option<f64>> = (0..40)
        .flat_map(|i| panel.series("x", i).unwrap())
        .map(|v| v.map(|x| 1e3 * x))
        .collect();
    let panel = panel.with_column("xs", scaled).unwrap();
    let spec = ModelSpec::new("y", 1).with_regressor("x", Role::Predetermined);
    let spec_s = ModelSpec::new("y", 1).with_regressor("xs", Role::Predetermined);
    for scheme in [Scheme::Difference, Scheme::System] {
        let a = two_step(&panel, &spec, &compact_plan(&spec), scheme);
        let b = two_step(&panel, &spec_s, &compact_plan(&spec_s), scheme);
        assert!(a.warnings.is_empty() && b.warnings.is_empty());
        let (ja, jb) = (hansen_j(&a).unwrap(), hansen_j(&b).unwrap());
        assert!((ja.statistic - jb.statistic).abs() < 1e-8 * ja.statistic.max(1.0), "{scheme:?} {} vs {}", ja.statistic, jb.statistic);
        let one = estimate(&panel, &spec, &compact_plan(&spec), scheme, Step::One, &GmmOptions::default()).unwrap();
        assert!((hansen_j(&one).unwrap().statistic - ja.statistic).abs() < 1e-8 * ja.statistic.max(1.0));
        let s = sargan(&a).unwrap();
        assert_eq!(s.df.unwrap() + a.coef.len(), a.instrument_count);
    }
}

#[test]
fn difference_in_hansen_bookkeeping() {
    let panel = toy_panel(40, 7, 25);
    let spec = ModelSpec::new("y", 1).with_regressor("x", Role::Predetermined);
    let est = two_step(&panel, &spec, &compact_plan(&spec), Scheme::System);
    assert!(matches!(difference_in_hansen(&est, &[]), Err(Error::Config(_))));
    let l = est.instrument_count;
    let k = est.coef.len();
    let all: Vec<usize> = (0..l).collect();
    assert!(matches!(difference_in_hansen(&est, &all), Err(Error::Config(_))));
    assert!(matches!(
        difference_in_hansen(&est, &all[..l - k + 1]),
        Err(Error::UnderIdentified { .. })
    ));
    // keep one level column per GMM variable plus the constant: the reduced
    // model is exactly identified, so J_reduced = 0
    let lev = level_instrument_columns(&est);
    let cons = est.design().instruments.iter().position(|c| c.kind == InstrumentKind::Constant).unwrap();
    let keep = [lev[0], lev[1], cons];
    let overid: Vec<usize> = (0..l).filter(|c| !keep.contains(c)).collect();
    let full = hansen_j(&est).unwrap();
    let dh = difference_in_hansen(&est, &overid).unwrap();
    assert!((dh.statistic - full.statistic).abs() < 1e-8 * full.statistic.max(1.0), "{} vs {}", dh.statistic, full.statistic);
    assert_eq!(dh.df, Some(l - k));
    assert_eq!(dh.subset.as_ref().unwrap().len(), l - k);
    let r = difference_in_hansen(&est, &lev).unwrap();
    assert!(r.statistic >= 0.0 && (0.0..=1.0).contains(&r.p_value));
    assert_eq!(r.df, Some(lev.len()));
}

#[test]
fn statistics_ignore_unit_order() {
    let panel = toy_panel(20, 7, 26);
    let perm: Vec<usize> = (0..20).rev().collect();
    let shuffled = panel.select_units(&perm).unwrap();
    let spec = ModelSpec::new("y", 1).with_regressor("x", Role::Predetermined);
    let plan = InstrumentPlan::from_roles(&spec, PlanOptions::default());
    let a = two_step(&panel, &spec, &plan, Scheme::System);
    let b = two_step(&shuffled, &spec, &plan, Scheme::System);
    let stats = |e: &GmmEstimate| {
        [
            sargan(e).unwrap().statistic,
            hansen_j(e).unwrap().statistic,
            ar_test(e, 1).unwrap().statistic,
            ar_test(e, 2).unwrap().statistic,
            pesaran_cd_residuals(e).unwrap().result.statistic,
            wald_joint(e, &["L.y", "x"]).unwrap().statistic,
        ]
    };
    for (x, y) in stats(&a).iter().zip(stats(&b)) {
        assert!((x - y).abs() < 1e-7 * x.abs().max(1.0), "{x} vs {y}");
    }
}

#[test]
fn wald_single_coefficient_is_squared_t() {
    let panel = toy_panel(30, 7, 27);
    let spec = ModelSpec::new("y", 1).with_regressor("x", Role::Predetermined);
    let plan = InstrumentPlan::from_roles(&spec, PlanOptions::default());
    let est = two_step(&panel, &spec, &plan, Scheme::System);
    let j = est.index_of("x").unwrap();
    let t = est.coef[j] / est.std_errors()[j];
    let w = wald_joint(&est, &["x"]).unwrap();
    assert!((w.statistic - t * t).abs() < 1e-10 * (t * t).max(1.0));
    assert_eq!(w.df, Some(1));
    assert!(matches!(wald_joint(&est, &[]), Err(Error::Config(_))));
    assert!(matches!(wald_joint(&est, &["nope"]), Err(Error::UnknownVariable(_))));
}

#[test]
fn wald_invariant_to_reparameterization() {
    let b = DVector::from_vec(vec![0.3, -1.2, 0.8]);
    let v = DMatrix::from_row_slice(3, 3, &[0.5, 0.1, 0.05, 0.1, 0.4, -0.02, 0.05, -0.02, 0.3]);
    let r = DMatrix::from_row_slice(3, 3, &[1.0, 2.0, 0.0, -0.5, 1.0, 3.0, 0.2, 0.0, 1.5]);
    let w0 = wald_quadratic(&b, &v).unwrap();
    let w1 = wald_quadratic(&(&r * &b), &(&r * &v * r.transpose())).unwrap();
    assert!((w0 - w1).abs() < 1e-10 * w0);
    let singular = DMatrix::from_row_slice(2, 2, &[1.0, 1.0, 1.0, 1.0]);
    assert!(wald_quadratic(&DVector::from_vec(vec![1.0, 1.0]), &singular).is_err());
}

#[test]
fn cd_perfect_correlation_and_unbalanced_pairs() {
    let s: Vec<Option<f64>> = (0..25).map(|t| Some(cell_normal(3, 0, t, 0))).collect();
    let r = pesaran_cd(&[s.clone(), s.clone()]).unwrap();
    assert!((r.result.statistic - 5.0).abs() < 1e-12);
    // balanced panel: √(2T/(N(N−1)))·Σρ
    let panel: Vec<Vec<Option<f64>>> = (0..5)
        .map(|i| (0..12).map(|t| Some(cell_normal(4, i, t, 0) + 0.3 * cell_normal(4, 99, t, 0))).collect())
        .collect();
    let mut sum = 0.0;
    for i in 0..5 {
        for j in i + 1..5 {
            let a: Vec<f64> = panel[i].iter().map(|v| v.unwrap()).collect();
            let b: Vec<f64> = panel[j].iter().map(|v| v.unwrap()).collect();
            let (ma, mb) = (a.iter().sum::<f64>() / 12.0, b.iter().sum::<f64>() / 12.0);
            let cov: f64 = a.iter().zip(&b).map(|(x, y)| (x - ma) * (y - mb)).sum();
            let va: f64 = a.iter().map(|x| (x - ma).powi(2)).sum();
            let vb: f64 = b.iter().map(|y| (y - mb).powi(2)).sum();
            sum += cov / (va * vb).sqrt();
        }
    }
    let oracle = (2.0 * 12.0 / 20.0f64).sqrt() * sum;
    assert!((pesaran_cd(&panel).unwrap().result.statistic - oracle).abs() < 1e-12);
    let mut gappy = panel.clone();
    for t in 0..10 {
        gappy[4][t] = None;
    }
    let r = pesaran_cd(&gappy).unwrap();
    assert_eq!((r.pairs_used, r.pairs_dropped), (6, 4));
    let sparse = vec![vec![Some(1.0), Some(2.0), None, None], vec![None, None, Some(1.0), Some(3.0)]];
    assert!(matches!(pesaran_cd(&sparse), Err(Error::InsufficientData(_))));
    assert!(pesaran_cd(&[s]).is_err());
}

fn ks_from_uniform(mut p: Vec<f64>) -> f64 {
    p.sort_by(f64::total_cmp);
    let n = p.len() as f64;
    p.iter()
        .enumerate()
        .map(|(i, &v)| (v - i as f64 / n).abs().max(((i + 1) as f64 / n - v).abs()))
        .fold(0.0, f64::max)
}

fn rate(hits: impl Iterator<Item = bool>, reps: u64) -> f64 {
    hits.filter(|h| *h).count() as f64 / reps as f64
}

#[test]
fn sargan_null_distribution() {
    let reps = 500u64;
    let spec = ModelSpec::new("y", 1);
    let plan = InstrumentPlan::from_roles(&spec, PlanOptions::default());
    let p: Vec<f64> = (0..reps)
        .into_par_iter()
        .map(|r| {
            let panel = gen_dynamic_panel(&DgpConfig::new(200, 6, 0.5, replication_seed(301, r))).unwrap();
            let est = estimate(&panel, &spec, &plan, Scheme::Difference, Step::One, &GmmOptions::default()).unwrap();
            sargan(&est).unwrap().p_value
        })
        .collect();
    let ks = ks_from_uniform(p);
    assert!(ks < 0.1, "KS distance {ks}");
}

#[test]
fn hansen_detects_invalid_instrument() {
    let reps = 200u64;
    let spec = ModelSpec::new("y", 1);
    let plan = InstrumentPlan {
        gmm_style: vec![GmmStyle {
            variable: "y".into(),
            min_lag: 2,
            max_lag: Some(3),
            collapse: true,
        }],
        iv_style: vec!["z".into()],
        level: vec![],
    };
    let hits: Vec<bool> = (0..reps)
        .into_par_iter()
        .map(|r| {
            let mut cfg = DgpConfig::new(500, 6, 0.5, replication_seed(302, r));
            cfg.invalid_instrument_corr = 0.5;
            let panel = gen_dynamic_panel(&cfg).unwrap();
            let est = two_step(&panel, &spec, &plan, Scheme::Difference);
            hansen_j(&est).unwrap().p_value < 0.05
        })
        .collect();
    let power = rate(hits.into_iter(), reps);
    assert!(power > 0.8, "power {power}");
}

#[test]
fn difference_in_hansen_size() {
    let reps = 500u64;
    let spec = ModelSpec::new("y", 1);
    let plan = InstrumentPlan {
        gmm_style: vec![GmmStyle {
            variable: "y".into(),
            min_lag: 2,
            max_lag: Some(4),
            collapse: true,
        }],
        iv_style: vec![],
        level: vec![LevelStyle {
            variable: "y".into(),
            lag: 1,
            collapse: true,
        }],
    };
    let hits: Vec<bool> = (0..reps)
        .into_par_iter()
        .map(|r| {
            let panel = gen_dynamic_panel(&DgpConfig::new(200, 8, 0.5, replication_seed(303, r))).unwrap();
            let est = two_step(&panel, &spec, &plan, Scheme::System);
            let lev = level_instrument_columns(&est);
            difference_in_hansen(&est, &lev).unwrap().p_value < 0.05
        })
        .collect();
    let size = rate(hits.into_iter(), reps);
    assert!((0.02..=0.09).contains(&size), "size {size}");
}

#[test]
fn ar_tests_under_serially_independent_errors() {
    let reps = 500u64;
    let spec = ModelSpec::new("y", 1).with_regressor("x1", Role::Exogenous);
    let plan = InstrumentPlan::from_roles(
        &spec,
        PlanOptions {
            collapse: true,
            lag_depth: Some(3),
            level_lag: 1,
        },
    );
    let res: Vec<(bool, bool)> = (0..reps)
        .into_par_iter()
        .map(|r| {
            let mut cfg = DgpConfig::new(200, 8, 0.5, replication_seed(304, r));
            cfg.beta = vec![1.0];
            let panel = gen_dynamic_panel(&cfg).unwrap();
            let est = two_step(&panel, &spec, &plan, Scheme::Difference);
            (ar_test(&est, 1).unwrap().p_value < 0.05, ar_test(&est, 2).unwrap().p_value < 0.05)
        })
        .collect();
    let ar1 = rate(res.iter().map(|r| r.0), reps);
    let ar2 = rate(res.iter().map(|r| r.1), reps);
    assert!(ar1 >= 0.8, "AR(1) rejection {ar1}");
    assert!((0.02..=0.09).contains(&ar2), "AR(2) rejection {ar2}");
}

#[test]
fn cd_null_and_common_factor() {
    let reps = 500u64;
    let draw = |seed: u64, loading: f64| -> Vec<Vec<Option<f64>>> {
        (0..30)
            .map(|i| {
                (0..30)
                    .map(|t| Some(cell_normal(seed, i, t, 0) + loading * cell_normal(seed, 1000, t, 1)))
                    .collect()
            })
            .collect()
    };
    let cds: Vec<f64> = (0..reps)
        .into_par_iter()
        .map(|r| pesaran_cd(&draw(replication_seed(305, r), 0.0)).unwrap().result.statistic)
        .collect();
    let mean = cds.iter().sum::<f64>() / reps as f64;
    let var = cds.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (reps - 1) as f64;
    assert!(mean.abs() < 0.15, "mean {mean}");
    assert!((0.7..=1.3).contains(&var), "variance {var}");
    let strong = pesaran_cd(&draw(306, 1.0)).unwrap().result.statistic;
    assert!(strong > 10.0, "{strong}");
}

#[test]
fn wald_size_with_zero_coefficients() {
    let reps = 500u64;
    let spec = ModelSpec::new("y", 1)
        .with_regressor("x1", Role::Exogenous)
        .with_regressor("x2", Role::Exogenous);
    let plan = InstrumentPlan::from_roles(
        &spec,
        PlanOptions {
            collapse: true,
            lag_depth: Some(3),
            level_lag: 1,
        },
    );
    let hits: Vec<bool> = (0..reps)
        .into_par_iter()
        .map(|r| {
            let mut cfg = DgpConfig::new(200, 8, 0.5, replication_seed(307, r));
            cfg.beta = vec![0.0, 0.0];
            let panel = gen_dynamic_panel(&cfg).unwrap();
            let est = two_step(&panel, &spec, &plan, Scheme::System);
            wald_joint(&est, &["x1", "x2"]).unwrap().p_value < 0.05
        })
        .collect();
    let size = rate(hits.into_iter(), reps);
    assert!((0.02..=0.09).contains(&size), "size {size}");
}
