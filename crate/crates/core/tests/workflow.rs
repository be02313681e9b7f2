//! Library-level run over the bundled replication fixture: ingest,
//! classify, transform, test and estimate without the CLI.

use dynpanel::causality::{dh_test, DhOptions};
use dynpanel::diagnostics::{ar_test, difference_in_hansen, hansen_j, level_instrument_columns};
use dynpanel::gmm::{estimate, GmmOptions, InstrumentPlan, ModelSpec, PlanOptions, Role, Scheme, Step};
use dynpanel::ingest::{build_model_variables, classify, replication_variables, ClassificationList, LOWER_LABEL, UPPER_LABEL};
use dynpanel::panel::{describe, subset_by_group};
use dynpanel::simulate::replication_fixture;
use dynpanel::unit_root::{ips_test, llc_test, AdfSpec, UnitRootOptions};
use dynpanel::{LogPolicy, PanelDataset};

fn prepared() -> (PanelDataset, PanelDataset) {
    let raw = classify(&replication_fixture(42).unwrap(), &ClassificationList::replication()).unwrap();
    let panel = build_model_variables(&raw, &replication_variables(), LogPolicy::SignedLog).unwrap();
    (raw, panel)
}

#[test]
fn classification_partitions_the_fixture() {
    let (_, panel) = prepared();
    let upper = subset_by_group(&panel, UPPER_LABEL).unwrap();
    let lower = subset_by_group(&panel, LOWER_LABEL).unwrap();
    assert_eq!((upper.n_units(), lower.n_units()), (46, 48));
    assert!(upper.units().iter().all(|u| !lower.units().contains(u)));
    assert_eq!(upper.n_cells() + lower.n_cells(), 1034);
}

#[test]
fn model_variables_only_add_columns() {
    let (raw, panel) = prepared();
    for name in raw.variable_names() {
        assert_eq!(raw.column(name), panel.column(name), "{name}");
    }
    assert!(panel.variable_names().len() > raw.variable_names().len());
    for v in ["lnGNI", "lnEXPG", "lnIMPG", "lnFDI", "lnGFCF"] {
        assert!(panel.has_variable(v), "{v}");
    }
}

#[test]
fn descriptive_and_unit_root_stages() {
    let (_, panel) = prepared();
    let rows = describe(&panel, &["lnEXPG", "LPI"], true).unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.obs <= 1034));

    let opts = UnitRootOptions::default();
    let llc = llc_test(&panel, "lnEXPG", &AdfSpec::default(), &opts).unwrap();
    let ips = ips_test(&panel, "lnEXPG", &AdfSpec::default(), &opts).unwrap();
    for r in [&llc, &ips] {
        assert!((0.0..=1.0).contains(&r.p_value));
        assert_eq!(r.used.len() + r.dropped.len(), 94);
    }
    assert_eq!(ips.unit_t.len(), ips.used.len());
}

#[test]
fn causality_runs_both_directions_separately() {
    let (_, panel) = prepared();
    let opts = DhOptions::default();
    let ab = dh_test(&panel, "lnEXPG", "LPI", &opts).unwrap();
    let ba = dh_test(&panel, "LPI", "lnEXPG", &opts).unwrap();
    assert_eq!(ab.config.periods, 10);
    assert_eq!(ab.per_unit.len() + ab.excluded.len(), 94);
    assert_ne!(ab.w_bar, ba.w_bar);
}

#[test]
fn grouped_system_gmm_with_diagnostics() {
    let (_, panel) = prepared();
    let lower = subset_by_group(&panel, LOWER_LABEL).unwrap();
    let spec = ModelSpec::new("lnEXPG", 1)
        .with_regressor("LPI", Role::Predetermined)
        .with_regressor("lnFDI", Role::Exogenous)
        .with_regressor("lnGFCF", Role::Exogenous)
        .with_time_dummies(true);
    let plan = InstrumentPlan::from_roles(
        &spec,
        PlanOptions {
            collapse: true,
            lag_depth: Some(2),
            level_lag: 1,
        },
    );
    let est = estimate(&lower, &spec, &plan, Scheme::System, Step::Two, &GmmOptions::default()).unwrap();
    assert_eq!(est.group_count, 48);
    assert!(est.instrument_count < est.group_count);
    assert!(est.windmeijer_applied);
    assert!(est.warnings.is_empty(), "{:?}", est.warnings);
    assert!(est.coef.iter().all(|c| c.is_finite()));

    let j = hansen_j(&est).unwrap();
    let dih = difference_in_hansen(&est, &level_instrument_columns(&est)).unwrap();
    assert!(dih.statistic >= 0.0 && dih.df.unwrap() <= j.df.unwrap());
    assert!((0.0..=1.0).contains(&ar_test(&est, 2).unwrap().p_value));
}
