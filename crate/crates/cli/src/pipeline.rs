//! Staged run: load the panel, then any of describe, unit-root, causality
//! and estimation. Each stage writes a text and a CSV table; every run also
//! writes `results.json` and `run.log`. Nothing written depends on the clock
//! or on thread scheduling, so a fixed seed reproduces the output tree byte
//! for byte.

use std::fs;
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::Serialize;

use dynpanel::causality::{dh_test, DhOptions, DhResult};
use dynpanel::diagnostics::{
    ar_test, difference_in_hansen, hansen_j, level_instrument_columns, pesaran_cd_residuals, sargan, wald_joint,
    CdTest, TestResult,
};
use dynpanel::gmm::{estimate, GmmEstimate, GmmOptions, InstrumentPlan, ModelSpec, PlanOptions};
use dynpanel::ingest::fetch::default_cache_dir;
use dynpanel::ingest::{
    assemble_panel, build_model_variables, classify, fetch_indicators, load_csv, replication_variables, write_csv,
    ClassificationList, FetchRequest, HttpTransport, Transport,
};
use dynpanel::panel::{describe, subset_by_group, DescriptiveRow};
use dynpanel::report::{
    render_causality_table, render_descriptive_table, render_regression_table, render_unit_root_table,
    EstimateSummary, RenderedTable,
};
use dynpanel::simulate::replication_fixture;
use dynpanel::unit_root::{ips_test, llc_test, AdfSpec, UnitRootOptions, UnitRootResult};
use dynpanel::PanelDataset;

use crate::config::{DataSource, ModelConfig, ModelTest, RunConfig, UnitRootTest};
use crate::{CliError, EXIT_OK};

/// Fixture seed when neither the config nor the command line sets one.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    /// Write the assembled panel as `panel.csv`.
    Ingest,
    Describe,
    UnitRoot,
    Causality,
    Estimate,
}

impl Stage {
    pub const ALL: [Stage; 5] = [Stage::Ingest, Stage::Describe, Stage::UnitRoot, Stage::Causality, Stage::Estimate];
}

#[derive(Debug, Clone)]
pub struct RunOptions {
    pub out: PathBuf,
    /// Serve fetches from the cache only.
    pub offline: bool,
    /// Overrides the config seed.
    pub seed: Option<u64>,
    pub stages: Vec<Stage>,
    /// Directory that relative data paths are resolved against.
    pub base_dir: Option<PathBuf>,
}

/// Outcome of a run that got as far as loading data.
#[derive(Debug, Default)]
pub struct RunSummary {
    pub errors: Vec<CliError>,
    pub warnings: Vec<String>,
    /// Files written, relative to the output directory.
    pub files: Vec<String>,
}

impl RunSummary {
    /// Code of the first error, zero for a clean run.
    pub fn exit_code(&self) -> i32 {
        self.errors.first().map_or(EXIT_OK, CliError::exit_code)
    }
}

#[derive(Default)]
struct RunLog {
    lines: Vec<String>,
    summary: RunSummary,
}

impl RunLog {
    fn info(&mut self, msg: impl Into<String>) {
        self.lines.push(format!("INFO  {}", msg.into()));
    }

    fn warn(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        self.lines.push(format!("WARN  {msg}"));
        self.summary.warnings.push(msg);
    }

    fn error(&mut self, err: CliError) {
        self.lines.push(format!("ERROR {err}"));
        self.summary.errors.push(err);
    }
}

#[derive(Serialize)]
struct GroupCount {
    label: String,
    units: usize,
}

#[derive(Serialize)]
struct DataInfo {
    source: DataSource,
    seed: Option<u64>,
    units: usize,
    first_period: i32,
    last_period: i32,
    variables: Vec<String>,
    groups: Vec<GroupCount>,
}

#[derive(Serialize)]
struct ModelRecord {
    index: usize,
    table: String,
    group: Option<String>,
    summary: Option<EstimateSummary>,
    cd: Option<CdTest>,
    error: Option<String>,
}

#[derive(Serialize)]
struct Results {
    data: DataInfo,
    descriptive: Vec<DescriptiveRow>,
    unit_root: Vec<UnitRootResult>,
    causality: Vec<DhResult>,
    models: Vec<ModelRecord>,
    warnings: Vec<String>,
    errors: Vec<String>,
}

/// Builds the panel the config describes, with groups and model variables.
pub fn load_panel(cfg: &RunConfig, opts: &RunOptions) -> Result<PanelDataset, CliError> {
    let data = &cfg.data;
    let raw = match data.source {
        DataSource::Fixture => replication_fixture(opts.seed.or(cfg.seed).unwrap_or(DEFAULT_SEED))?,
        DataSource::Csv => {
            let path = data.path.as_ref().expect("checked by validate_shape");
            let path = match &opts.base_dir {
                Some(base) if path.is_relative() => base.join(path),
                _ => path.clone(),
            };
            load_csv(&path).map_err(|e| CliError::from(e).context(&path.display().to_string()))?
        }
        DataSource::Fetch => {
            let [first, last] = data.years.expect("checked by validate_shape");
            let countries = ClassificationList::replication().all_codes();
            let cache_dir = data.cache_dir.clone().unwrap_or_else(default_cache_dir);
            let http = HttpTransport;
            let transport: Option<&dyn Transport> = if opts.offline { None } else { Some(&http) };
            let records = replication_variables()
                .into_iter()
                .map(|v| {
                    let req = FetchRequest {
                        indicator: v.indicator.clone(),
                        countries: countries.clone(),
                        years: (first, last),
                        cache_dir: cache_dir.clone(),
                    };
                    Ok((v.source, fetch_indicators(&req, transport)?))
                })
                .collect::<dynpanel::Result<Vec<_>>>()?;
            assemble_panel(&records, &countries, (first, last))?
        }
    };
    let panel = if data.classify {
        classify(&raw, &ClassificationList::replication())?
    } else {
        raw
    };
    let specs: Vec<_> = replication_variables()
        .into_iter()
        .filter(|s| panel.has_variable(&s.source))
        .collect();
    Ok(build_model_variables(&panel, &specs, data.log_policy)?)
}

pub fn with_group(panel: &PanelDataset, group: &Option<String>) -> Result<PanelDataset, CliError> {
    match group {
        Some(g) => Ok(subset_by_group(panel, g)?),
        None => Ok(panel.clone()),
    }
}

fn file_stem(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '-' || c == '_' { c } else { '_' })
        .collect()
}

struct Writer<'a> {
    dir: &'a Path,
    files: Vec<String>,
}

impl Writer<'_> {
    fn write(&mut self, name: &str, contents: &[u8]) -> Result<(), CliError> {
        let path = self.dir.join(name);
        fs::write(&path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        self.files.push(name.to_string());
        Ok(())
    }

    fn table(&mut self, stem: &str, table: &RenderedTable) -> Result<(), CliError> {
        self.write(&format!("{stem}.txt"), table.to_text().as_bytes())?;
        self.write(&format!("{stem}.csv"), table.to_csv()?.as_bytes())
    }
}

/// Runs the selected stages. `Err` means nothing could be computed (bad
/// config, unreadable data, unwritable output); stage failures are collected
/// in the summary and the remaining stages still run.
pub fn run(cfg: &RunConfig, opts: &RunOptions) -> Result<RunSummary, CliError> {
    fs::create_dir_all(&opts.out).map_err(|e| CliError::Io(format!("{}: {e}", opts.out.display())))?;
    let mut log = RunLog::default();
    let mut out = Writer {
        dir: &opts.out,
        files: Vec::new(),
    };
    let outcome = run_stages(cfg, opts, &mut log, &mut out);
    if let Err(e) = &outcome {
        log.lines.push(format!("ERROR {e}"));
    }
    let s = &log.summary;
    let errors = s.errors.len() + usize::from(outcome.is_err());
    let tail = format!("finished: {errors} errors, {} warnings", s.warnings.len());
    log.info(tail);
    let mut text = log.lines.join("\n");
    text.push('\n');
    out.write("run.log", text.as_bytes())?;
    outcome?;
    let mut summary = log.summary;
    summary.files = out.files;
    Ok(summary)
}

fn run_stages(cfg: &RunConfig, opts: &RunOptions, log: &mut RunLog, out: &mut Writer) -> Result<(), CliError> {
    cfg.validate_shape()?;
    let wants = |s: Stage| opts.stages.contains(&s);
    for (stage, present, key) in [
        (Stage::Describe, cfg.describe.is_some(), "describe"),
        (Stage::UnitRoot, !cfg.unit_root.is_empty(), "unit_root"),
        (Stage::Causality, !cfg.causality.is_empty(), "causality"),
        (Stage::Estimate, !cfg.model.is_empty(), "model"),
    ] {
        if opts.stages == [stage] && !present {
            return Err(CliError::Validation(format!("config has no `{key}` block for this command")));
        }
    }

    let seed = match cfg.data.source {
        DataSource::Fixture => Some(opts.seed.or(cfg.seed).unwrap_or(DEFAULT_SEED)),
        _ => None,
    };
    let panel = load_panel(cfg, opts)?;
    cfg.validate_references(&panel)?;
    let groups = panel.groups().unwrap_or(&[]);
    let data = DataInfo {
        source: cfg.data.source,
        seed,
        units: panel.n_units(),
        first_period: panel.periods()[0],
        last_period: *panel.periods().last().expect("panel has periods"),
        variables: panel.variable_names().into_iter().map(String::from).collect(),
        groups: panel
            .group_labels()
            .into_iter()
            .map(|label| GroupCount {
                units: groups.iter().filter(|g| **g == label).count(),
                label,
            })
            .collect(),
    };
    log.info(format!(
        "data: {:?} source, {} units, periods {}-{}, {} variables",
        cfg.data.source,
        data.units,
        data.first_period,
        data.last_period,
        data.variables.len()
    ));
    if let Some(seed) = seed {
        log.info(format!("fixture seed {seed}"));
    }
    for g in &data.groups {
        log.info(format!("group {}: {} units", g.label, g.units));
    }

    if wants(Stage::Ingest) {
        let mut buf = Vec::new();
        write_csv(&panel, &mut buf)?;
        out.write("panel.csv", &buf)?;
        log.info("stage ingest: wrote panel.csv");
    }

    let mut results = Results {
        data,
        descriptive: Vec::new(),
        unit_root: Vec::new(),
        causality: Vec::new(),
        models: Vec::new(),
        warnings: Vec::new(),
        errors: Vec::new(),
    };

    if wants(Stage::Describe) {
        if let Some(d) = &cfg.describe {
            let vars: Vec<&str> = d.variables.iter().map(String::as_str).collect();
            match describe(&panel, &vars, d.by_group) {
                Ok(rows) => {
                    out.table("descriptive", &render_descriptive_table("Descriptive statistics", &rows)?)?;
                    log.info(format!("stage describe: {} rows", rows.len()));
                    results.descriptive = rows;
                }
                Err(e) => log.error(CliError::from(e).context("describe")),
            }
        }
    }

    if wants(Stage::UnitRoot) && !cfg.unit_root.is_empty() {
        results.unit_root = unit_root_stage(cfg, &panel, log)?;
        if !results.unit_root.is_empty() {
            out.table("unit_root", &render_unit_root_table("Panel unit root tests", &results.unit_root)?)?;
        }
        log.info(format!("stage unitroot: {} tests", results.unit_root.len()));
    }

    if wants(Stage::Causality) && !cfg.causality.is_empty() {
        results.causality = causality_stage(cfg, &panel, log)?;
        if !results.causality.is_empty() {
            let t = render_causality_table("Panel Granger non-causality tests", &results.causality)?;
            out.table("causality", &t)?;
        }
        log.info(format!("stage causality: {} tests", results.causality.len()));
    }

    if wants(Stage::Estimate) && !cfg.model.is_empty() {
        results.models = estimate_stage(cfg, &panel, log)?;
        let mut tables: Vec<String> = Vec::new();
        for r in &results.models {
            if !tables.contains(&r.table) {
                tables.push(r.table.clone());
            }
        }
        for name in &tables {
            let cols: Vec<EstimateSummary> = results
                .models
                .iter()
                .filter(|r| &r.table == name)
                .filter_map(|r| r.summary.clone())
                .collect();
            if cols.is_empty() {
                continue;
            }
            let title = format!("GMM estimates ({name}), dependent variable {}", cols[0].dependent);
            out.table(&format!("regression_{}", file_stem(name)), &render_regression_table(&title, &cols)?)?;
        }
        let ok = results.models.iter().filter(|r| r.summary.is_some()).count();
        log.info(format!("stage estimate: {ok} of {} models estimated", results.models.len()));
    }

    results.warnings = log.summary.warnings.clone();
    results.errors = log.summary.errors.iter().map(ToString::to_string).collect();
    let json = serde_json::to_string_pretty(&results).map_err(|e| CliError::Io(e.to_string()))?;
    out.write("results.json", json.as_bytes())?;
    Ok(())
}

fn unit_root_stage(cfg: &RunConfig, panel: &PanelDataset, log: &mut RunLog) -> Result<Vec<UnitRootResult>, CliError> {
    let mut jobs = Vec::new();
    for (i, block) in cfg.unit_root.iter().enumerate() {
        let data = with_group(panel, &block.group)?;
        let spec = AdfSpec {
            lags: block.lags,
            deterministic: block.deterministic,
            bic_lags: block.bic_lags,
        };
        for v in &block.variables {
            for &t in &block.tests {
                jobs.push((i, data.clone(), spec, v.clone(), t));
            }
        }
    }
    let opts = UnitRootOptions::default();
    let outcomes: Vec<_> = jobs
        .par_iter()
        .map(|(i, data, spec, v, t)| {
            let r = match t {
                UnitRootTest::Llc => llc_test(data, v, spec, &opts),
                UnitRootTest::Ips => ips_test(data, v, spec, &opts),
            };
            (format!("unit_root[{i}] {t:?} {v}"), r)
        })
        .collect();
    let mut results = Vec::new();
    for (what, r) in outcomes {
        match r {
            Ok(r) => {
                if !r.dropped.is_empty() {
                    log.warn(format!("{what}: dropped units {}", r.dropped.join(", ")));
                }
                results.push(r);
            }
            Err(e) => log.error(CliError::from(e).context(&what)),
        }
    }
    Ok(results)
}

fn causality_stage(cfg: &RunConfig, panel: &PanelDataset, log: &mut RunLog) -> Result<Vec<DhResult>, CliError> {
    let mut jobs = Vec::new();
    for (i, block) in cfg.causality.iter().enumerate() {
        let data = with_group(panel, &block.group)?;
        let opts = DhOptions {
            lags: block.lags,
            policy: block.policy,
            ..DhOptions::default()
        };
        for [a, b] in &block.pairs {
            jobs.push((i, data.clone(), opts.clone(), a.clone(), b.clone()));
            if block.both_directions {
                jobs.push((i, data.clone(), opts.clone(), b.clone(), a.clone()));
            }
        }
    }
    let outcomes: Vec<_> = jobs
        .par_iter()
        .map(|(i, data, opts, cause, effect)| (format!("causality[{i}] {cause} -> {effect}"), dh_test(data, cause, effect, opts)))
        .collect();
    let mut results = Vec::new();
    for (what, r) in outcomes {
        match r {
            Ok(r) => {
                for (unit, reason) in &r.excluded {
                    log.warn(format!("{what}: excluded {unit} ({reason})"));
                }
                for u in r.per_unit.iter().filter(|u| u.flagged) {
                    log.warn(format!("{what}: unit {} has a suspect Wald statistic {:.4e}", u.unit, u.wald));
                }
                results.push(r);
            }
            Err(e) => log.error(CliError::from(e).context(&what)),
        }
    }
    Ok(results)
}

struct ModelOutcome {
    record: ModelRecord,
    warnings: Vec<String>,
    error: Option<CliError>,
}

fn estimate_stage(cfg: &RunConfig, panel: &PanelDataset, log: &mut RunLog) -> Result<Vec<ModelRecord>, CliError> {
    let data: Vec<PanelDataset> = cfg.model.iter().map(|m| with_group(panel, &m.group)).collect::<Result<_, _>>()?;
    let outcomes: Vec<ModelOutcome> = cfg
        .model
        .par_iter()
        .zip(data.par_iter())
        .enumerate()
        .map(|(i, (m, d))| run_model(i, m, d))
        .collect();
    let mut records = Vec::new();
    for o in outcomes {
        for w in o.warnings {
            log.warn(w);
        }
        if let Some(e) = o.error {
            log.error(e);
        }
        records.push(o.record);
    }
    Ok(records)
}

/// Fits one configured model on `panel` (already restricted to its group).
pub fn estimate_model(m: &ModelConfig, panel: &PanelDataset) -> dynpanel::Result<GmmEstimate> {
    let mut spec = ModelSpec::new(&m.dependent, m.lags).with_time_dummies(m.time_dummies);
    for r in &m.regressors {
        spec = spec.with_regressor(&r.name, r.role);
    }
    let plan = InstrumentPlan::from_roles(
        &spec,
        PlanOptions {
            collapse: m.collapse,
            lag_depth: m.lag_depth,
            level_lag: m.level_lag,
        },
    );
    let gmm = GmmOptions {
        windmeijer: m.windmeijer,
        ..GmmOptions::default()
    };
    estimate(panel, &spec, &plan, m.scheme, m.step, &gmm)
}

fn run_model(index: usize, m: &ModelConfig, panel: &PanelDataset) -> ModelOutcome {
    let what = format!("model[{index}] {}", m.dependent);
    let mut record = ModelRecord {
        index,
        table: m.table_name(),
        group: m.group.clone(),
        summary: None,
        cd: None,
        error: None,
    };
    let est = match estimate_model(m, panel) {
        Ok(est) => est,
        Err(e) => {
            let err = CliError::from(e).context(&what);
            record.error = Some(err.to_string());
            return ModelOutcome {
                record,
                warnings: Vec::new(),
                error: Some(err),
            };
        }
    };
    let mut warnings: Vec<String> = est.warnings.iter().map(|w| format!("{what}: {w}")).collect();
    if est.instrument_count >= est.group_count {
        warnings.push(format!(
            "{what}: instrument count L = {} reaches group count N = {}; over-identification tests lose power",
            est.instrument_count, est.group_count
        ));
    }

    let mut tests: Vec<TestResult> = Vec::new();
    let mut push = |name: &str, r: dynpanel::Result<TestResult>, warnings: &mut Vec<String>| match r {
        Ok(t) => {
            if let Some(w) = &t.warning {
                warnings.push(format!("{what}: {}: {w}", t.name));
            }
            tests.push(t);
        }
        Err(e) => warnings.push(format!("{what}: {name} unavailable: {e}")),
    };
    for t in &m.tests {
        match t {
            ModelTest::Ar1 => push("AR(1)", ar_test(&est, 1), &mut warnings),
            ModelTest::Ar2 => push("AR(2)", ar_test(&est, 2), &mut warnings),
            ModelTest::Sargan => push("Sargan", sargan(&est), &mut warnings),
            ModelTest::Hansen => push("Hansen", hansen_j(&est), &mut warnings),
            ModelTest::DifferenceInHansen => {
                let cols = level_instrument_columns(&est);
                push("Difference-in-Hansen", difference_in_hansen(&est, &cols), &mut warnings)
            }
            ModelTest::Cd => match pesaran_cd_residuals(&est) {
                Ok(cd) => {
                    push("Pesaran CD", Ok(cd.result.clone()), &mut warnings);
                    record.cd = Some(cd);
                }
                Err(e) => warnings.push(format!("{what}: Pesaran CD unavailable: {e}")),
            },
        }
    }
    if !m.wald.is_empty() {
        let names: Vec<&str> = m.wald.iter().map(String::as_str).collect();
        push("Wald", wald_joint(&est, &names), &mut warnings);
    }
    record.summary = Some(EstimateSummary::new(m.label.clone().unwrap_or_default(), &est, tests));
    ModelOutcome {
        record,
        warnings,
        error: None,
    }
}
