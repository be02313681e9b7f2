//! Run configuration: a TOML document with one optional block per stage.
//!
//! Parsing rejects unknown keys. Validation happens in two passes: shape
//! rules right after parsing, variable and group references once the data
//! are loaded. Every error names the offending field path.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use dynpanel::causality::LengthPolicy;
use dynpanel::gmm::{Role, Scheme, Step};
use dynpanel::ingest::{LOWER_LABEL, REPLICATION_COLUMNS, UPPER_LABEL};
use dynpanel::unit_root::Deterministic;
use dynpanel::{LogPolicy, PanelDataset};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// Seed for the synthetic fixture; `--seed` overrides it.
    #[serde(default)]
    pub seed: Option<u64>,
    pub data: DataConfig,
    #[serde(default)]
    pub describe: Option<DescribeConfig>,
    #[serde(default)]
    pub unit_root: Vec<UnitRootConfig>,
    #[serde(default)]
    pub causality: Vec<CausalityConfig>,
    #[serde(default)]
    pub model: Vec<ModelConfig>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DataSource {
    /// Wide CSV at `path`.
    Csv,
    /// Synthetic 94-country fixture drawn from the run seed.
    Fixture,
    /// Remote indicators through the on-disk cache.
    Fetch,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataConfig {
    pub source: DataSource,
    #[serde(default)]
    pub path: Option<PathBuf>,
    /// Inclusive year range for `fetch`.
    #[serde(default)]
    pub years: Option<[i32; 2]>,
    #[serde(default)]
    pub cache_dir: Option<PathBuf>,
    #[serde(default)]
    pub log_policy: LogPolicy,
    /// Tag units with the bundled income classification.
    #[serde(default = "yes")]
    pub classify: bool,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DescribeConfig {
    pub variables: Vec<String>,
    #[serde(default = "yes")]
    pub by_group: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnitRootTest {
    Llc,
    Ips,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitRootConfig {
    pub variables: Vec<String>,
    #[serde(default = "both_unit_root_tests")]
    pub tests: Vec<UnitRootTest>,
    #[serde(default = "one")]
    pub lags: usize,
    #[serde(default = "intercept")]
    pub deterministic: Deterministic,
    #[serde(default)]
    pub bic_lags: bool,
    #[serde(default)]
    pub group: Option<String>,
}

fn both_unit_root_tests() -> Vec<UnitRootTest> {
    vec![UnitRootTest::Llc, UnitRootTest::Ips]
}

fn one() -> usize {
    1
}

fn intercept() -> Deterministic {
    Deterministic::Intercept
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CausalityConfig {
    /// (cause, effect) pairs.
    pub pairs: Vec<[String; 2]>,
    /// Also test every pair in the reverse direction.
    #[serde(default)]
    pub both_directions: bool,
    #[serde(default = "one")]
    pub lags: usize,
    #[serde(default)]
    pub policy: LengthPolicy,
    #[serde(default)]
    pub group: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegressorConfig {
    pub name: String,
    pub role: Role,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelTest {
    Ar1,
    Ar2,
    Sargan,
    Hansen,
    /// Level-equation instruments of a system estimate.
    DifferenceInHansen,
    Cd,
}

fn default_tests() -> Vec<ModelTest> {
    vec![ModelTest::Ar1, ModelTest::Ar2, ModelTest::Sargan, ModelTest::Hansen]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelConfig {
    /// Output table this column belongs to; defaults to the dependent.
    #[serde(default)]
    pub table: Option<String>,
    #[serde(default)]
    pub label: Option<String>,
    pub dependent: String,
    #[serde(default = "one")]
    pub lags: usize,
    #[serde(default)]
    pub regressors: Vec<RegressorConfig>,
    pub scheme: Scheme,
    pub step: Step,
    #[serde(default)]
    pub time_dummies: bool,
    #[serde(default)]
    pub collapse: bool,
    #[serde(default)]
    pub lag_depth: Option<usize>,
    #[serde(default = "one")]
    pub level_lag: usize,
    #[serde(default = "yes")]
    pub windmeijer: bool,
    #[serde(default)]
    pub group: Option<String>,
    #[serde(default = "default_tests")]
    pub tests: Vec<ModelTest>,
    /// Coefficients tested jointly with a Wald test.
    #[serde(default)]
    pub wald: Vec<String>,
}

impl ModelConfig {
    pub fn table_name(&self) -> String {
        self.table.clone().unwrap_or_else(|| self.dependent.clone())
    }
}

fn invalid(field: impl Into<String>, message: impl std::fmt::Display) -> CliError {
    CliError::Validation(format!("{}: {message}", field.into()))
}

impl RunConfig {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| CliError::Validation(format!("config: {e}")))?;
        cfg.validate_shape()?;
        Ok(cfg)
    }

    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("config serializes")
    }

    /// Rules that need no data.
    pub fn validate_shape(&self) -> Result<(), CliError> {
        if self.describe.is_none() && self.unit_root.is_empty() && self.causality.is_empty() && self.model.is_empty() {
            return Err(invalid("config", "no stage selected: add describe, unit_root, causality or model blocks"));
        }
        match self.data.source {
            DataSource::Csv if self.data.path.is_none() => return Err(invalid("data.path", "required when source = \"csv\"")),
            DataSource::Fetch if self.data.years.is_none() => return Err(invalid("data.years", "required when source = \"fetch\"")),
            _ => {}
        }
        if let Some([a, b]) = self.data.years {
            if a > b {
                return Err(invalid("data.years", format!("start {a} after end {b}")));
            }
        }
        if let Some(d) = &self.describe {
            if d.variables.is_empty() {
                return Err(invalid("describe.variables", "must not be empty"));
            }
        }
        for (i, u) in self.unit_root.iter().enumerate() {
            if u.variables.is_empty() {
                return Err(invalid(format!("unit_root[{i}].variables"), "must not be empty"));
            }
            if u.tests.is_empty() {
                return Err(invalid(format!("unit_root[{i}].tests"), "must not be empty"));
            }
        }
        for (i, c) in self.causality.iter().enumerate() {
            if c.pairs.is_empty() {
                return Err(invalid(format!("causality[{i}].pairs"), "must not be empty"));
            }
            if c.lags == 0 {
                return Err(invalid(format!("causality[{i}].lags"), "must be at least 1"));
            }
            for (j, [a, b]) in c.pairs.iter().enumerate() {
                if a == b {
                    return Err(invalid(format!("causality[{i}].pairs[{j}]"), "cause and effect are the same variable"));
                }
            }
        }
        for (i, m) in self.model.iter().enumerate() {
            if m.lags == 0 {
                return Err(invalid(format!("model[{i}].lags"), "dynamic models need at least one lag"));
            }
            if m.level_lag == 0 {
                return Err(invalid(format!("model[{i}].level_lag"), "must be at least 1"));
            }
            if m.lag_depth == Some(0) {
                return Err(invalid(format!("model[{i}].lag_depth"), "must be at least 1"));
            }
            for (j, r) in m.regressors.iter().enumerate() {
                if r.name == m.dependent {
                    return Err(invalid(format!("model[{i}].regressors[{j}].name"), "dependent variable listed as a regressor"));
                }
                if m.regressors[..j].iter().any(|p| p.name == r.name) {
                    return Err(invalid(format!("model[{i}].regressors[{j}].name"), format!("`{}` listed twice", r.name)));
                }
            }
            for (j, w) in m.wald.iter().enumerate() {
                if !m.regressors.iter().any(|r| &r.name == w) {
                    return Err(invalid(format!("model[{i}].wald[{j}]"), format!("`{w}` is not a regressor of this model")));
                }
            }
            if m.tests.contains(&ModelTest::DifferenceInHansen) && m.scheme != Scheme::System {
                return Err(invalid(format!("model[{i}].tests"), "difference-in-hansen needs scheme = \"system\""));
            }
            // one table has one dependent
            let table = m.table_name();
            if let Some(p) = self.model[..i].iter().find(|p| p.table_name() == table && p.dependent != m.dependent) {
                return Err(invalid(
                    format!("model[{i}].table"),
                    format!("table `{table}` already holds dependent `{}`", p.dependent),
                ));
            }
        }
        Ok(())
    }

    /// References to variables and groups, checked against the loaded panel.
    pub fn validate_references(&self, panel: &PanelDataset) -> Result<(), CliError> {
        let var = |field: String, name: &str| {
            if panel.has_variable(name) {
                Ok(())
            } else {
                Err(invalid(field, format!("unknown variable `{name}`")))
            }
        };
        let groups = panel.group_labels();
        let group = |field: String, g: &Option<String>| match g {
            Some(g) if !groups.contains(g) => Err(invalid(field, format!("unknown group `{g}`"))),
            _ => Ok(()),
        };
        if let Some(d) = &self.describe {
            for (j, v) in d.variables.iter().enumerate() {
                var(format!("describe.variables[{j}]"), v)?;
            }
        }
        for (i, u) in self.unit_root.iter().enumerate() {
            for (j, v) in u.variables.iter().enumerate() {
                var(format!("unit_root[{i}].variables[{j}]"), v)?;
            }
            group(format!("unit_root[{i}].group"), &u.group)?;
        }
        for (i, c) in self.causality.iter().enumerate() {
            for (j, [a, b]) in c.pairs.iter().enumerate() {
                var(format!("causality[{i}].pairs[{j}][0]"), a)?;
                var(format!("causality[{i}].pairs[{j}][1]"), b)?;
            }
            group(format!("causality[{i}].group"), &c.group)?;
        }
        for (i, m) in self.model.iter().enumerate() {
            var(format!("model[{i}].dependent"), &m.dependent)?;
            for (j, r) in m.regressors.iter().enumerate() {
                var(format!("model[{i}].regressors[{j}].name"), &r.name)?;
            }
            group(format!("model[{i}].group"), &m.group)?;
        }
        Ok(())
    }

    /// The built-in replication run on the synthetic fixture.
    pub fn replication(seed: u64) -> Self {
        let subs = ["LPIAC", "LPICQ", "LPIEA", "LPIEC", "LPIFS", "LPIQTT"];
        let facilitation_head = ["ATCE", "lnPCT", "AFT", "QPI"];
        let model_vars: Vec<String> = ["lnGNI", "lnEXPG", "lnIMPG"]
            .into_iter()
            .chain(facilitation_head)
            .chain(subs)
            .chain(["LPI", "TRF", "lnFDI", "lnGFCF"])
            .map(String::from)
            .collect();

        // each outcome against every later variable, tested both ways
        let ordered = &model_vars[..model_vars.len() - 2];
        let pairs: Vec<[String; 2]> = (0..3)
            .flat_map(|i| (i + 1..ordered.len()).map(move |j| [ordered[i].clone(), ordered[j].clone()]))
            .collect();

        let regressors = |dep: &str, overall: bool| {
            let mut r: Vec<RegressorConfig> = facilitation_head
                .iter()
                .map(|v| RegressorConfig {
                    name: v.to_string(),
                    role: Role::Predetermined,
                })
                .collect();
            let lpi: Vec<&str> = if overall { vec!["LPI"] } else { subs.to_vec() };
            r.extend(lpi.into_iter().chain(["TRF"]).map(|v| RegressorConfig {
                name: v.to_string(),
                role: Role::Predetermined,
            }));
            let exog: Vec<&str> = if dep == "lnGNI" {
                vec!["lnEXPG", "lnIMPG", "lnFDI", "lnGFCF"]
            } else {
                vec!["lnFDI", "lnGFCF"]
            };
            r.extend(exog.into_iter().map(|v| RegressorConfig {
                name: v.to_string(),
                role: Role::Exogenous,
            }));
            r
        };
        let model = |table: String, dep: &str, overall: bool, scheme: Scheme, step: Step, group: Option<&str>| {
            let regs = regressors(dep, overall);
            let wald = regs
                .iter()
                .filter(|r| r.role == Role::Predetermined)
                .map(|r| r.name.clone())
                .collect();
            let mut tests = vec![ModelTest::Ar1, ModelTest::Ar2, ModelTest::Sargan, ModelTest::Hansen];
            if scheme == Scheme::System {
                tests.push(ModelTest::DifferenceInHansen);
            }
            tests.push(ModelTest::Cd);
            let label = format!(
                "{} {}{}",
                match step {
                    Step::One => "One-step",
                    Step::Two => "Two-step",
                },
                match scheme {
                    Scheme::Difference => "Diff",
                    Scheme::System => "Sys",
                },
                if overall { "" } else { " LPI parts" }
            );
            ModelConfig {
                table: Some(table),
                label: Some(label),
                dependent: dep.to_string(),
                lags: 1,
                regressors: regs,
                scheme,
                step,
                time_dummies: true,
                collapse: true,
                // two lags per instrumented variable keep L below the 46-country groups
                lag_depth: Some(2),
                level_lag: 1,
                windmeijer: true,
                group: group.map(String::from),
                tests,
                wald,
            }
        };
        let estimators = [
            (Scheme::Difference, Step::One),
            (Scheme::Difference, Step::Two),
            (Scheme::System, Step::One),
            (Scheme::System, Step::Two),
        ];
        let mut models = Vec::new();
        for dep in ["lnEXPG", "lnIMPG", "lnGNI"] {
            for overall in [false, true] {
                for (scheme, step) in estimators {
                    models.push(model(format!("all_{dep}"), dep, overall, scheme, step, None));
                }
            }
        }
        for group in [LOWER_LABEL, UPPER_LABEL] {
            for dep in ["lnEXPG", "lnIMPG", "lnGNI"] {
                for scheme in [Scheme::Difference, Scheme::System] {
                    let table = format!("{}_{dep}", group.replace('-', "_"));
                    models.push(model(table, dep, true, scheme, Step::Two, Some(group)));
                }
            }
        }

        RunConfig {
            seed: Some(seed),
            data: DataConfig {
                source: DataSource::Fixture,
                path: None,
                years: None,
                cache_dir: None,
                log_policy: LogPolicy::SignedLog,
                classify: true,
            },
            describe: Some(DescribeConfig {
                variables: REPLICATION_COLUMNS.iter().map(|s| s.to_string()).collect(),
                by_group: true,
            }),
            unit_root: vec![UnitRootConfig {
                variables: model_vars,
                tests: both_unit_root_tests(),
                lags: 1,
                deterministic: Deterministic::Intercept,
                bic_lags: false,
                group: None,
            }],
            causality: vec![CausalityConfig {
                pairs,
                both_directions: true,
                lags: 1,
                policy: LengthPolicy::TruncateToShortest,
                group: None,
            }],
            model: models,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"
[data]
source = "fixture"

[describe]
variables = ["GNI", "EXPG"]
"#;

    fn with_model(extra: &str) -> String {
        format!(
            "{MINIMAL}\n[[model]]\ndependent = \"lnEXPG\"\nscheme = \"system\"\nstep = \"two\"\nregressors = [{{ name = \"ATCE\", role = \"predetermined\" }}]\n{extra}"
        )
    }

    fn message(r: Result<RunConfig, CliError>) -> String {
        match r {
            Err(CliError::Validation(m)) => m,
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn minimal_config_defaults() {
        let cfg = RunConfig::parse(MINIMAL).unwrap();
        assert_eq!(cfg.data.log_policy, LogPolicy::Strict);
        assert!(cfg.data.classify);
        assert!(cfg.describe.as_ref().unwrap().by_group);
        assert!(cfg.model.is_empty());
        let m = RunConfig::parse(&with_model("")).unwrap().model.remove(0);
        assert_eq!((m.lags, m.level_lag, m.windmeijer), (1, 1, true));
        assert_eq!(m.tests, default_tests());
        assert_eq!(m.table_name(), "lnEXPG");
    }

    #[test]
    fn replication_round_trips_through_toml() {
        let cfg = RunConfig::replication(7);
        let back = RunConfig::parse(&cfg.to_toml()).unwrap();
        assert_eq!(back, cfg);
        assert_eq!(cfg.model.len(), 36);
        assert!(cfg.model.iter().all(|m| m.collapse && m.time_dummies));
        // 39 pairs, each run in both directions
        assert_eq!(cfg.causality[0].pairs.len(), 39);
    }

    #[test]
    fn unknown_keys_report_the_line() {
        let m = message(RunConfig::parse("[data]\nsource = \"fixture\"\nsorce = 1\n"));
        assert!(m.contains("sorce") && m.contains("line 3"), "{m}");
        let m = message(RunConfig::parse("[data]\nsource = \"excel\"\n[describe]\nvariables = [\"GNI\"]\n"));
        assert!(m.contains("excel"), "{m}");
    }

    #[test]
    fn shape_errors_name_the_field() {
        let cases = [
            ("[data]\nsource = \"fixture\"\n", "config"),
            ("[data]\nsource = \"csv\"\n[describe]\nvariables = [\"a\"]\n", "data.path"),
            ("[data]\nsource = \"fetch\"\nyears = [2020, 2010]\n[describe]\nvariables = [\"a\"]\n", "data.years"),
            (
                "[data]\nsource = \"fixture\"\n[[causality]]\npairs = [[\"a\", \"a\"]]\n",
                "causality[0].pairs[0]",
            ),
            ("[data]\nsource = \"fixture\"\n[[causality]]\npairs = [[\"a\", \"b\"]]\nlags = 0\n", "causality[0].lags"),
        ];
        for (text, field) in cases {
            let m = message(RunConfig::parse(text));
            assert!(m.starts_with(field), "{field}: {m}");
        }
        let model_cases = [
            ("wald = [\"QPI\"]", "model[0].wald[0]"),
            ("lags = 0", "model[0].lags"),
            ("lag_depth = 0", "model[0].lag_depth"),
        ];
        for (extra, field) in model_cases {
            let m = message(RunConfig::parse(&with_model(extra)));
            assert!(m.starts_with(field), "{field}: {m}");
        }
        let diff = with_model("tests = [\"difference-in-hansen\"]").replace("\"system\"", "\"difference\"");
        assert!(message(RunConfig::parse(&diff)).starts_with("model[0].tests"));
        let twice = with_model("[[model]]\ntable = \"lnEXPG\"\ndependent = \"lnIMPG\"\nscheme = \"system\"\nstep = \"one\"\n");
        assert!(message(RunConfig::parse(&twice)).starts_with("model[1].table"));
    }

    #[test]
    fn references_checked_against_the_panel() {
        let panel = PanelDataset::new(vec!["A".into(), "B".into()], vec![2000, 2001])
            .unwrap()
            .with_column("lnEXPG", vec![Some(1.0); 4])
            .unwrap()
            .with_column("ATCE", vec![Some(1.0); 4])
            .unwrap()
            .with_column("GNI", vec![Some(1.0); 4])
            .unwrap()
            .with_column("EXPG", vec![Some(1.0); 4])
            .unwrap();
        RunConfig::parse(&with_model("")).unwrap().validate_references(&panel).unwrap();
        let bad = with_model("").replace("dependent = \"lnEXPG\"", "dependent = \"lnGDP\"");
        let err = RunConfig::parse(&bad).unwrap().validate_references(&panel).unwrap_err();
        assert_eq!(err.to_string(), "model[0].dependent: unknown variable `lnGDP`");
        let grouped = with_model("group = \"high\"");
        let err = RunConfig::parse(&grouped).unwrap().validate_references(&panel).unwrap_err();
        assert!(err.to_string().starts_with("model[0].group"), "{err}");
    }
}
