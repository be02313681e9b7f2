//! Plain-text and CSV tables for descriptive statistics, unit-root tests,
//! Granger non-causality tests and GMM regressions.
//!
//! Rendering is a pure function of the result values, so identical results
//! always produce byte-identical output.

use serde::{Deserialize, Serialize};

use crate::causality::DhResult;
use crate::diagnostics::TestResult;
use crate::error::{Error, Result};
use crate::gmm::{GmmEstimate, Scheme, Step};
use crate::linalg::normal_two_sided;
use crate::panel::DescriptiveRow;
use crate::unit_root::UnitRootResult;

/// Significance level used for the causality decision column.
pub const DECISION_ALPHA: f64 = 0.05;

/// Three-star convention on two-sided p-values.
pub fn stars(p: f64) -> &'static str {
    if p < 0.01 {
        "***"
    } else if p < 0.05 {
        "**"
    } else if p < 0.1 {
        "*"
    } else {
        ""
    }
}

/// Exponent with sign and at least two digits, as in `2.09e-05`.
fn scientific(x: f64) -> String {
    let s = format!("{x:.2e}");
    let (mant, exp) = s.split_once('e').expect("exponent present");
    let (sign, digits) = match exp.strip_prefix('-') {
        Some(d) => ('-', d),
        None => ('+', exp),
    };
    format!("{mant}e{sign}{digits:0>2}")
}

/// Three to four significant digits: decimals shrink as magnitude grows,
/// scientific notation below 1e-4 or at 1e7 and above.
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0.000".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let a = x.abs();
    if !(1e-4..1e7).contains(&a) {
        return scientific(x);
    }
    let mag = a.log10().floor() as i32;
    let decimals = if a >= 1.0 { (3 - mag).max(0) } else { 2 - mag };
    format!("{x:.*}", decimals as usize)
}

/// Four decimals, scientific from 1e5 up (Granger table convention).
pub fn format_fixed4(x: f64) -> String {
    if x.is_finite() && x.abs() >= 1e5 {
        scientific(x)
    } else {
        format!("{x:.4}")
    }
}

/// Titled grid of formatted cells. Every row has one cell per header.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RenderedTable {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub footnote: String,
}

impl RenderedTable {
    pub fn new(title: impl Into<String>, headers: Vec<String>, rows: Vec<Vec<String>>, footnote: impl Into<String>) -> Result<Self> {
        if let Some(r) = rows.iter().position(|r| r.len() != headers.len()) {
            return Err(Error::Config(format!(
                "table row {r} has {} cells for {} columns",
                rows[r].len(),
                headers.len()
            )));
        }
        Ok(Self {
            title: title.into(),
            headers,
            rows,
            footnote: footnote.into(),
        })
    }

    /// Aligned plain text: first column left-aligned, the rest right-aligned.
    pub fn to_text(&self) -> String {
        let ncols = self.headers.len();
        let mut width: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in width.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let total = width.iter().sum::<usize>() + 2 * ncols.saturating_sub(1);
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (j, (cell, w)) in cells.iter().zip(&width).enumerate() {
                if j == 0 {
                    s.push_str(&format!("{cell:<w$}"));
                } else {
                    s.push_str(&format!("  {cell:>w$}"));
                }
            }
            s.trim_end().to_string()
        };
        let mut out = String::new();
        out.push_str(&self.title);
        out.push('\n');
        out.push_str(&"=".repeat(total));
        out.push('\n');
        out.push_str(&line(&self.headers));
        out.push('\n');
        out.push_str(&"-".repeat(total));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out.push_str(&"-".repeat(total));
        out.push('\n');
        if !self.footnote.is_empty() {
            out.push_str(&self.footnote);
            out.push('\n');
        }
        out
    }

    /// Header row followed by the cell grid.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let to_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(&self.headers).map_err(to_err)?;
        for row in &self.rows {
            w.write_record(row).map_err(to_err)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
        Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
    }
}

/// Serializable record of one GMM estimate and its specification tests.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateSummary {
    pub label: String,
    pub scheme: Scheme,
    pub step: Step,
    pub dependent: String,
    /// Right-hand-side terms in display order, omitted ones included.
    pub terms: Vec<String>,
    pub names: Vec<String>,
    pub coef: Vec<f64>,
    pub std_err: Vec<f64>,
    pub cov: Vec<Vec<f64>>,
    pub omitted: Vec<String>,
    pub instrument_count: usize,
    pub group_count: usize,
    pub n_obs: usize,
    pub windmeijer: bool,
    pub warnings: Vec<String>,
    pub tests: Vec<TestResult>,
}

impl EstimateSummary {
    pub fn new(label: impl Into<String>, est: &GmmEstimate, tests: Vec<TestResult>) -> Self {
        let k = est.coef.len();
        Self {
            label: label.into(),
            scheme: est.scheme,
            step: est.step,
            dependent: est.dependent.clone(),
            terms: est.design().terms.clone(),
            names: est.names.clone(),
            coef: est.coef.iter().copied().collect(),
            std_err: est.std_errors(),
            cov: (0..k).map(|r| (0..k).map(|c| est.cov[(r, c)]).collect()).collect(),
            omitted: est.omitted.clone(),
            instrument_count: est.instrument_count,
            group_count: est.group_count,
            n_obs: est.n_obs,
            windmeijer: est.windmeijer_applied,
            warnings: est.warnings.clone(),
            tests,
        }
    }

    /// Column heading such as "Two-step System GMM lnEXPG".
    pub fn heading(&self) -> String {
        let step = match self.step {
            Step::One => "One-step",
            Step::Two => "Two-step",
        };
        let scheme = match self.scheme {
            Scheme::Difference => "Difference",
            Scheme::System => "System",
        };
        format!("{step} {scheme} GMM {}", self.dependent)
    }
}

fn is_period_dummy(t: &str) -> bool {
    t.strip_prefix("yr").is_some_and(|k| !k.is_empty() && k.bytes().all(|b| b.is_ascii_digit()))
}

fn display_term(t: &str) -> &str {
    if t == "_cons" {
        "Constant"
    } else {
        t
    }
}

/// Regression table: coefficient rows with starred estimates and
/// parenthesized standard errors beneath, then observation, group and
/// instrument counts and one row per specification test.
pub fn render_regression_table(title: &str, columns: &[EstimateSummary]) -> Result<RenderedTable> {
    let first = columns.first().ok_or_else(|| Error::Config("regression table needs at least one estimate".into()))?;
    if let Some(other) = columns.iter().find(|c| c.dependent != first.dependent) {
        return Err(Error::Config(format!(
            "regression table mixes dependents `{}` and `{}`",
            first.dependent, other.dependent
        )));
    }
    let mut terms: Vec<&str> = Vec::new();
    for c in columns {
        for t in &c.terms {
            if t != "_cons" && !terms.contains(&t.as_str()) {
                terms.push(t);
            }
        }
    }
    // regressors of every column before the period dummies
    terms.sort_by_key(|t| is_period_dummy(t));
    if columns.iter().any(|c| c.terms.iter().any(|t| t == "_cons")) {
        terms.push("_cons");
    }

    let mut headers = vec!["VARIABLE".to_string()];
    headers.extend(columns.iter().enumerate().map(|(j, c)| {
        let label = if c.label.is_empty() { c.heading() } else { c.label.clone() };
        format!("({}) {label}", j + 1)
    }));

    let mut rows = Vec::new();
    for t in &terms {
        let mut coef_row = vec![display_term(t).to_string()];
        let mut se_row = vec![String::new()];
        for c in columns {
            if let Some(j) = c.names.iter().position(|n| n == t) {
                let (b, se) = (c.coef[j], c.std_err[j]);
                let mark = if se > 0.0 { stars(normal_two_sided(b / se)) } else { "" };
                coef_row.push(format!("{}{mark}", format_number(b)));
                se_row.push(format!("({})", format_number(se)));
            } else if c.omitted.iter().any(|o| o == t) {
                coef_row.push("0".into());
                se_row.push("(0)".into());
            } else {
                coef_row.push(String::new());
                se_row.push(String::new());
            }
        }
        rows.push(coef_row);
        rows.push(se_row);
    }
    let footer = |name: &str, f: &dyn Fn(&EstimateSummary) -> String| {
        let mut r = vec![name.to_string()];
        r.extend(columns.iter().map(f));
        r
    };
    rows.push(footer("Observations", &|c| c.n_obs.to_string()));
    rows.push(footer("Number of country", &|c| c.group_count.to_string()));
    rows.push(footer("No of Instruments", &|c| c.instrument_count.to_string()));

    let mut test_names: Vec<&str> = Vec::new();
    for c in columns {
        for t in &c.tests {
            if !test_names.contains(&t.name.as_str()) {
                test_names.push(&t.name);
            }
        }
    }
    for name in test_names {
        rows.push(footer(name, &|c| {
            c.tests
                .iter()
                .find(|t| t.name == name)
                .map(|t| format!("{} [{:.4}]", format_number(t.statistic), t.p_value))
                .unwrap_or_default()
        }));
    }
    RenderedTable::new(
        title,
        headers,
        rows,
        "Standard errors in parentheses; tests show statistic [p-value]. *** p<0.01, ** p<0.05, * p<0.1",
    )
}

/// One row per "X does not Granger-cause Y" hypothesis; the decision uses
/// the Z-bar tilde p-value at 5%.
pub fn render_causality_table(title: &str, results: &[DhResult]) -> Result<RenderedTable> {
    let headers = ["Null Hypothesis", "W-bar", "Z-bar", "Prob", "Z-bar tilde", "Prob", "Decision"]
        .map(String::from)
        .to_vec();
    let rows = results
        .iter()
        .map(|r| {
            vec![
                format!("{} does not Granger-cause {}", r.cause, r.effect),
                format_fixed4(r.w_bar),
                format_fixed4(r.z_bar),
                format!("{:.4}", r.z_bar_p),
                format_fixed4(r.z_bar_tilde),
                format!("{:.4}", r.z_bar_tilde_p),
                if r.rejects(DECISION_ALPHA) { "Reject Ho" } else { "Fail to reject" }.to_string(),
            ]
        })
        .collect();
    RenderedTable::new(title, headers, rows, "Decision at the 5% level on the Z-bar tilde p-value.")
}

pub fn render_descriptive_table(title: &str, rows: &[DescriptiveRow]) -> Result<RenderedTable> {
    let headers = ["Variable", "Group", "Obs", "Mean", "Std", "Min", "Max"].map(String::from).to_vec();
    let grid = rows
        .iter()
        .map(|r| {
            vec![
                r.variable.clone(),
                r.group.clone(),
                r.obs.to_string(),
                format_number(r.mean),
                format_number(r.std),
                format_number(r.min),
                format_number(r.max),
            ]
        })
        .collect();
    RenderedTable::new(title, headers, grid, "Statistics over observed cells.")
}

pub fn render_unit_root_table(title: &str, results: &[UnitRootResult]) -> Result<RenderedTable> {
    let headers = ["Variable", "Test", "Statistic", "Prob", "Units", "Avg periods", "Dropped"]
        .map(String::from)
        .to_vec();
    let grid = results
        .iter()
        .map(|r| {
            vec![
                r.variable.clone(),
                r.test.clone(),
                format_fixed4(r.statistic),
                format!("{:.4}", r.p_value),
                r.n_units.to_string(),
                format!("{:.1}", r.n_periods),
                r.dropped.len().to_string(),
            ]
        })
        .collect();
    RenderedTable::new(title, headers, grid, "Null hypothesis: all panels contain a unit root. Lower-tail p-values.")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::causality::{standardize_dh, DhConfig, LengthPolicy};

    fn summary(dep: &str, coef: Vec<f64>, se: Vec<f64>) -> EstimateSummary {
        let names: Vec<String> = (0..coef.len()).map(|j| format!("v{j}")).collect();
        EstimateSummary {
            label: String::new(),
            scheme: Scheme::Difference,
            step: Step::One,
            dependent: dep.into(),
            terms: names.iter().cloned().chain(["yr1".to_string()]).collect(),
            cov: vec![vec![0.0; coef.len()]; coef.len()],
            names,
            coef,
            std_err: se,
            omitted: vec!["yr1".into()],
            instrument_count: 33,
            group_count: 94,
            n_obs: 846,
            windmeijer: false,
            warnings: vec![],
            tests: vec![],
        }
    }

    #[test]
    fn number_format() {
        let cases = [
            (1.229, "1.229"),
            (0.277, "0.277"),
            (-0.00436, "-0.00436"),
            (0.000139, "0.000139"),
            (2.09e-05, "2.09e-05"),
            (-1.29e-6, "-1.29e-06"),
            (4.466, "4.466"),
            (11.98, "11.98"),
            (1234.5, "1234"),
            (0.0, "0.000"),
            (6.32e10, "6.32e+10"),
        ];
        for (x, want) in cases {
            assert_eq!(format_number(x), want, "{x}");
        }
        assert_eq!(format_fixed4(1.54e6), "1.54e+06");
        assert_eq!(format_fixed4(11.98064), "11.9806");
    }

    #[test]
    fn star_thresholds() {
        assert_eq!(stars(0.0099), "***");
        assert_eq!(stars(0.01), "**");
        assert_eq!(stars(0.0499), "**");
        assert_eq!(stars(0.05), "*");
        assert_eq!(stars(0.0999), "*");
        assert_eq!(stars(0.1), "");
    }

    #[test]
    fn coefficient_cells() {
        let t = render_regression_table("T", &[summary("lnEXPG", vec![1.229, 0.0], vec![0.277, 1.0])]).unwrap();
        assert_eq!(t.rows[0], vec!["v0", "1.229***"]);
        assert_eq!(t.rows[1], vec!["", "(0.277)"]);
        assert_eq!(t.rows[2], vec!["v1", "0.000"]);
        assert_eq!(t.rows[3], vec!["", "(1.000)"]);
        assert_eq!(t.rows[4], vec!["yr1", "0"]);
        assert_eq!(t.rows[5], vec!["", "(0)"]);
        let instruments = t.rows.iter().find(|r| r[0] == "No of Instruments").unwrap();
        assert_eq!(instruments[1], "33");
        let groups = t.rows.iter().find(|r| r[0] == "Number of country").unwrap();
        assert_eq!(groups[1], "94");
        // stars only on coefficient rows
        for (i, r) in t.rows.iter().enumerate() {
            if i % 2 == 1 || i >= 6 {
                assert!(r.iter().all(|c| !c.contains('*')));
            }
        }
        let text = t.to_text();
        let lines: Vec<&str> = text.lines().collect();
        let at = lines.iter().position(|l| l.contains("1.229***")).unwrap();
        // right-aligned: the standard error sits beneath, inside the cell span
        let start = lines[at].find("1.229***").unwrap();
        let se = lines[at + 1].find("(0.277)").unwrap();
        assert!(se >= start && se + 7 == start + 8);
    }

    #[test]
    fn dummies_follow_all_regressors() {
        let mut a = summary("y", vec![1.0], vec![1.0]);
        let mut b = summary("y", vec![1.0], vec![1.0]);
        b.names = vec!["w".into()];
        b.terms = vec!["w".into(), "yr1".into()];
        a.terms.push("_cons".into());
        let t = render_regression_table("T", &[a, b]).unwrap();
        let labels: Vec<&str> = t.rows.iter().step_by(2).map(|r| r[0].as_str()).take(4).collect();
        assert_eq!(labels, ["v0", "w", "yr1", "Constant"]);
    }

    #[test]
    fn mixed_dependents_rejected() {
        let cols = [summary("a", vec![1.0], vec![1.0]), summary("b", vec![1.0], vec![1.0])];
        assert!(render_regression_table("T", &cols).is_err());
        assert!(render_regression_table("T", &[]).is_err());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RenderedTable::new("t", vec!["a".into(), "b".into()], vec![vec!["1".into()]], "").is_err());
    }

    fn dh(w_bar: f64) -> DhResult {
        let config = DhConfig::new(1, 10, 94).unwrap();
        let (z, zt) = standardize_dh(w_bar, &config).unwrap();
        DhResult {
            cause: "lnGNI".into(),
            effect: "LPIAC".into(),
            w_bar,
            z_bar: z,
            z_bar_p: normal_two_sided(z),
            z_bar_tilde: zt,
            z_bar_tilde_p: normal_two_sided(zt),
            per_unit: vec![],
            excluded: vec![],
            config,
            policy: LengthPolicy::TruncateToShortest,
        }
    }

    #[test]
    fn causality_rows() {
        let t = render_causality_table("DH", &[dh(2.7476), dh(1.0)]).unwrap();
        assert_eq!(t.rows[0][0], "lnGNI does not Granger-cause LPIAC");
        let z: f64 = t.rows[0][2].parse().unwrap();
        assert!((z - 11.9806).abs() < 5e-4);
        assert_eq!(t.rows[0][6], "Reject Ho");
        // W-bar equal to K: both standardizations are zero
        assert_eq!(t.rows[1][2], "0.0000");
        assert_eq!(t.rows[1][3], "1.0000");
        assert_eq!(t.rows[1][6], "Fail to reject");
        let mut r = dh(1.0);
        r.z_bar_tilde = 1.4679;
        r.z_bar_tilde_p = normal_two_sided(1.4679);
        assert!((r.z_bar_tilde_p - 0.1421).abs() < 5e-4);
        let t = render_causality_table("DH", &[r]).unwrap();
        assert_eq!(t.rows[0][5], "0.1421");
        assert_eq!(t.rows[0][6], "Fail to reject");
    }

    #[test]
    fn rendering_is_pure_and_csv_quotes() {
        let cols = [summary("lnEXPG", vec![1.229, -0.5], vec![0.277, 0.1])];
        let a = render_regression_table("T", &cols).unwrap();
        let b = render_regression_table("T", &cols).unwrap();
        assert_eq!(a.to_text(), b.to_text());
        let csv = RenderedTable::new("t", vec!["a,b".into()], vec![vec!["x".into()]], "").unwrap().to_csv().unwrap();
        assert_eq!(csv, "\"a,b\"\nx\n");
    }

    #[test]
    fn summary_json_round_trip() {
        let mut s = summary("lnEXPG", vec![1.0 / 3.0, std::f64::consts::PI], vec![1e-17, 2.5]);
        s.tests.push(TestResult {
            name: "Hansen".into(),
            statistic: 12.345678901234567,
            df: Some(9),
            p_value: 0.19283746501928374,
            subset: None,
            warning: None,
        });
        let json = serde_json::to_string(&s).unwrap();
        let back: EstimateSummary = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
    }
}
