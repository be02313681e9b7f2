//! Loading the wide indicator CSV, income classification, and construction
//! of the model variables.

pub mod countries;
pub mod fetch;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::panel::{apply_transform, LogPolicy, PanelDataset, SeriesTransform, TransformKind};

pub use countries::{LOWER_LABEL, UPPER_LABEL};
pub use fetch::{fetch_indicators, CacheStore, FetchRequest, HttpTransport, IndicatorRecord, Transport};

/// Column order of the replication CSV after `country,year`.
pub const REPLICATION_COLUMNS: [&str; 17] = [
    "GNI", "EXPG", "IMPG", "ATCE", "PCT", "AFT", "QPI", "LPIAC", "LPICQ", "LPIEA", "LPIEC", "LPIFS", "LPI",
    "LPIQTT", "TRF", "FDI", "GFCF",
];

/// The bundled 94-country × 2010–2020 skeleton (all value cells blank).
pub const REPLICATION_SKELETON: &str = include_str!("../../data/replication_skeleton.csv");

/// One raw indicator and how it enters the models.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSpec {
    pub label: String,
    /// Column name in the wide CSV.
    pub source: String,
    /// Remote indicator code used by [`fetch_indicators`].
    pub indicator: String,
    pub units: String,
    pub log_transformed: bool,
}

impl VariableSpec {
    /// Name of the model variable: `ln<label>` for logged indicators.
    pub fn model_name(&self) -> String {
        if self.log_transformed {
            format!("ln{}", self.label)
        } else {
            self.label.clone()
        }
    }
}

/// The seventeen indicators of the replication models.
pub fn replication_variables() -> Vec<VariableSpec> {
    let rows: [(&str, &str, &str, bool); 17] = [
        ("GNI", "NY.GNP.PCAP.PP.CD", "current international dollars", true),
        ("EXPG", "TX.VAL.MRCH.CD.WT", "current US dollars", true),
        ("IMPG", "TM.VAL.MRCH.CD.WT", "current US dollars", true),
        ("ATCE", "IC.CUS.DURS.EX", "days", false),
        ("PCT", "IS.SHP.GOOD.TU", "TEU", true),
        ("AFT", "IS.AIR.GOOD.MT.K1", "million ton-km", false),
        ("QPI", "IQ.WEF.PORT.XQ", "index 1-7", false),
        ("LPIAC", "LP.LPI.TRAC.XQ", "index 1-5", false),
        ("LPICQ", "LP.LPI.LOGS.XQ", "index 1-5", false),
        ("LPIEA", "LP.LPI.ITRN.XQ", "index 1-5", false),
        ("LPIEC", "LP.LPI.CUST.XQ", "index 1-5", false),
        ("LPIFS", "LP.LPI.TIME.XQ", "index 1-5", false),
        ("LPI", "LP.LPI.OVRL.XQ", "index 1-5", false),
        ("LPIQTT", "LP.LPI.INFR.XQ", "index 1-5", false),
        ("TRF", "TM.TAX.MRCH.WM.AR.ZS", "percent", false),
        ("FDI", "BN.KLT.DINV.CD", "current US dollars", true),
        ("GFCF", "NE.GDI.FTOT.CD", "current US dollars", true),
    ];
    rows.iter()
        .map(|&(label, indicator, units, log)| VariableSpec {
            label: label.to_string(),
            source: label.to_string(),
            indicator: indicator.to_string(),
            units: units.to_string(),
            log_transformed: log,
        })
        .collect()
}

/// Two disjoint ordered country lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationList {
    pub lower_middle: Vec<String>,
    pub upper_middle: Vec<String>,
}

impl ClassificationList {
    /// The 48 lower-middle and 46 upper-middle countries, as ISO codes.
    pub fn replication() -> Self {
        Self {
            lower_middle: countries::LOWER_MIDDLE.iter().map(|(_, c)| c.to_string()).collect(),
            upper_middle: countries::UPPER_MIDDLE.iter().map(|(_, c)| c.to_string()).collect(),
        }
    }

    pub fn all_codes(&self) -> Vec<String> {
        self.lower_middle.iter().chain(&self.upper_middle).cloned().collect()
    }
}

fn normalize_unit(u: &str) -> String {
    countries::to_code(u).map(str::to_string).unwrap_or_else(|| u.trim().to_string())
}

/// Tags every unit with its income group. Units may be names or codes.
pub fn classify(panel: &PanelDataset, list: &ClassificationList) -> Result<PanelDataset> {
    let lower: BTreeSet<String> = list.lower_middle.iter().map(|u| normalize_unit(u)).collect();
    let upper: BTreeSet<String> = list.upper_middle.iter().map(|u| normalize_unit(u)).collect();
    let mut tags = Vec::with_capacity(panel.n_units());
    for unit in panel.units() {
        let key = normalize_unit(unit);
        match (lower.contains(&key), upper.contains(&key)) {
            (true, false) => tags.push(LOWER_LABEL.to_string()),
            (false, true) => tags.push(UPPER_LABEL.to_string()),
            (true, true) => return Err(Error::AmbiguousClassification(unit.clone())),
            (false, false) => return Err(Error::Unclassified(unit.clone())),
        }
    }
    let lower_n = tags.iter().filter(|t| t.as_str() == LOWER_LABEL).count();
    log::info!("classified {} units: {} {LOWER_LABEL}, {} {UPPER_LABEL}", tags.len(), lower_n, tags.len() - lower_n);
    panel.clone().with_groups(tags)
}

/// Appends `ln<label>` for every log-transformed spec. Raw columns are left
/// untouched.
pub fn build_model_variables(panel: &PanelDataset, specs: &[VariableSpec], policy: LogPolicy) -> Result<PanelDataset> {
    for s in specs {
        if !panel.has_variable(&s.source) {
            return Err(Error::UnknownVariable(s.source.clone()));
        }
    }
    let mut out = panel.clone();
    for s in specs.iter().filter(|s| s.log_transformed) {
        let name = s.model_name();
        if out.has_variable(&name) {
            continue;
        }
        let t = SeriesTransform::new(TransformKind::NaturalLog, s.source.clone(), name);
        out = apply_transform(&out, &t, policy).map_err(|e| match e {
            Error::NonPositiveLog {
                unit, period, value, ..
            } => Error::NonPositiveLog {
                variable: s.label.clone(),
                unit,
                period,
                value,
            },
            other => other,
        })?;
    }
    Ok(out)
}

/// Reads a wide CSV: `country,year,<var>...`, blank cells missing.
pub fn load_csv(path: impl AsRef<Path>) -> Result<PanelDataset> {
    let f = std::fs::File::open(path.as_ref())?;
    read_csv(f)
}

pub fn read_csv<R: Read>(reader: R) -> Result<PanelDataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr
        .headers()
        .map_err(|e| Error::Csv {
            line: 1,
            message: e.to_string(),
        })?
        .clone();
    if header.len() < 3 || &header[0] != "country" || &header[1] != "year" {
        return Err(Error::Csv {
            line: 1,
            message: "header must start with `country,year` followed by at least one variable".into(),
        });
    }
    let vars: Vec<String> = header.iter().skip(2).map(str::to_string).collect();
    let mut seen = BTreeSet::new();
    for v in &vars {
        if v.is_empty() || !seen.insert(v.clone()) {
            return Err(Error::Csv {
                line: 1,
                message: format!("empty or duplicate column name `{v}`"),
            });
        }
    }

    let mut cells: BTreeMap<(String, i32), Vec<Option<f64>>> = BTreeMap::new();
    for (i, rec) in rdr.records().enumerate() {
        let line = i + 2;
        let rec = rec.map_err(|e| Error::Csv {
            line,
            message: e.to_string(),
        })?;
        if rec.len() != header.len() {
            return Err(Error::Csv {
                line,
                message: format!("expected {} fields, found {}", header.len(), rec.len()),
            });
        }
        let country = rec[0].to_string();
        if country.is_empty() {
            return Err(Error::Csv {
                line,
                message: "empty country".into(),
            });
        }
        let year: i32 = rec[1].parse().map_err(|_| Error::Csv {
            line,
            message: format!("invalid year `{}`", &rec[1]),
        })?;
        let mut row = Vec::with_capacity(vars.len());
        for (j, field) in rec.iter().skip(2).enumerate() {
            if field.is_empty() {
                row.push(None);
            } else {
                let v: f64 = field.parse().map_err(|_| Error::Csv {
                    line,
                    message: format!("non-numeric value `{field}` in column `{}`", vars[j]),
                })?;
                row.push(Some(v));
            }
        }
        if cells.insert((country.clone(), year), row).is_some() {
            return Err(Error::DuplicateRow { country, year, line });
        }
    }
    if cells.is_empty() {
        return Err(Error::Csv {
            line: 2,
            message: "no data rows".into(),
        });
    }

    let units: Vec<String> = cells.keys().map(|(c, _)| c.clone()).collect::<BTreeSet<_>>().into_iter().collect();
    let lo = cells.keys().map(|(_, y)| *y).min().unwrap();
    let hi = cells.keys().map(|(_, y)| *y).max().unwrap();
    let periods: Vec<i32> = (lo..=hi).collect();
    let mut panel = PanelDataset::new(units.clone(), periods.clone())?;
    for (j, v) in vars.iter().enumerate() {
        let values = units
            .iter()
            .flat_map(|u| periods.iter().map(move |&y| (u, y)))
            .map(|(u, y)| cells.get(&(u.clone(), y)).and_then(|row| row[j]))
            .collect();
        panel = panel.with_column(v, values)?;
    }
    Ok(panel)
}

/// Writes the panel as a wide CSV, one row per (unit, period), rows in axis
/// order. Values use the shortest representation that parses back exactly.
pub fn write_csv<W: Write>(panel: &PanelDataset, writer: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let vars = panel.variable_names();
    let mut header = vec!["country", "year"];
    header.extend(vars.iter().copied());
    w.write_record(&header).map_err(csv_io)?;
    for (i, unit) in panel.units().iter().enumerate() {
        for (t, year) in panel.periods().iter().enumerate() {
            let mut rec = vec![unit.clone(), year.to_string()];
            for v in &vars {
                rec.push(panel.get(v, i, t)?.map(|x| x.to_string()).unwrap_or_default());
            }
            w.write_record(&rec).map_err(csv_io)?;
        }
    }
    w.flush()?;
    Ok(())
}

fn csv_io(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e.to_string()))
}

/// The bundled replication skeleton as a panel.
pub fn replication_skeleton() -> Result<PanelDataset> {
    read_csv(REPLICATION_SKELETON.as_bytes())
}

/// Turns fetched records (keyed by variable label) into a wide panel over
/// the requested countries and year range.
pub fn assemble_panel(
    records: &[(String, Vec<IndicatorRecord>)],
    countries: &[String],
    years: (i32, i32),
) -> Result<PanelDataset> {
    let periods: Vec<i32> = (years.0..=years.1).collect();
    let mut units: Vec<String> = countries.to_vec();
    units.sort();
    units.dedup();
    let mut panel = PanelDataset::new(units.clone(), periods.clone())?;
    for (label, recs) in records {
        let index: HashMap<(&str, i32), Option<f64>> =
            recs.iter().map(|r| ((r.country.as_str(), r.year), r.value)).collect();
        let values = units
            .iter()
            .flat_map(|u| periods.iter().map(move |&y| (u, y)))
            .map(|(u, y)| index.get(&(u.as_str(), y)).copied().flatten())
            .collect();
        panel = panel.with_column(label, values)?;
    }
    Ok(panel)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "country,year,GNI,FDI\nNGA,2015,1,\nNGA,2016,2,3\nBRA,2015,4,5\nBRA,2016,6,7\nBRA,2017,8,9\n";

    #[test]
    fn reads_small_file() {
        let p = read_csv(SMALL.as_bytes()).unwrap();
        assert_eq!(p.units(), &["BRA".to_string(), "NGA".to_string()]);
        assert_eq!(p.periods(), &[2015, 2016, 2017]);
        // one blank cell plus the absent NGA 2017 row
        assert_eq!(p.column("FDI").unwrap().observed_count(), 4);
        assert_eq!(p.get("FDI", 1, 0).unwrap(), None);
        assert_eq!(p.get("GNI", 1, 1).unwrap(), Some(2.0));
    }

    #[test]
    fn two_by_three_with_one_blank() {
        let text = "country,year,a,b\nX,1,1,2\nX,2,1,2\nX,3,1,\nY,1,1,2\nY,2,1,2\nY,3,1,2\n";
        let p = read_csv(text.as_bytes()).unwrap();
        let masked: usize = ["a", "b"]
            .iter()
            .map(|v| p.n_cells() - p.column(v).unwrap().observed_count())
            .sum();
        assert_eq!(masked, 1);
    }

    #[test]
    fn duplicate_row_is_reported() {
        let text = "country,year,GNI\nNGA,2015,1\nNGA,2016,1\nNGA,2015,2\n";
        match read_csv(text.as_bytes()) {
            Err(Error::DuplicateRow { country, year, line }) => {
                assert_eq!((country.as_str(), year, line), ("NGA", 2015, 4));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(read_csv("nation,year,GNI\nA,1,2\n".as_bytes()), Err(Error::Csv { line: 1, .. })));
        assert!(matches!(read_csv("country,year,GNI\nA,1,x\n".as_bytes()), Err(Error::Csv { line: 2, .. })));
        assert!(matches!(read_csv("country,year,GNI\nA,1999.5,1\n".as_bytes()), Err(Error::Csv { line: 2, .. })));
    }

    #[test]
    fn csv_round_trip() {
        let p = read_csv(SMALL.as_bytes()).unwrap();
        let mut buf = Vec::new();
        write_csv(&p, &mut buf).unwrap();
        assert_eq!(read_csv(buf.as_slice()).unwrap(), p);
    }

    #[test]
    fn classification_of_skeleton() {
        let p = replication_skeleton().unwrap();
        assert_eq!(p.n_cells(), 1034);
        let list = ClassificationList::replication();
        assert_eq!(list.lower_middle.len(), 48);
        assert_eq!(list.upper_middle.len(), 46);
        let tagged = classify(&p, &list).unwrap();
        let tags = tagged.groups().unwrap();
        assert_eq!(tags.iter().filter(|t| t.as_str() == LOWER_LABEL).count(), 48);
        assert_eq!(tags[tagged.unit_index("NGA").unwrap()], LOWER_LABEL);
        assert_eq!(tags[tagged.unit_index("BRA").unwrap()], UPPER_LABEL);
    }

    #[test]
    fn classification_by_name_and_errors() {
        let list = ClassificationList::replication();
        let p = PanelDataset::new(vec!["Nigeria".into(), "Brazil".into()], vec![1]).unwrap();
        let tagged = classify(&p, &list).unwrap();
        assert_eq!(tagged.groups().unwrap(), &[LOWER_LABEL.to_string(), UPPER_LABEL.to_string()]);

        let p = PanelDataset::new(vec!["Germany".into()], vec![1]).unwrap();
        assert!(matches!(classify(&p, &list), Err(Error::Unclassified(u)) if u == "Germany"));

        let mut both = list.clone();
        both.upper_middle.push("NGA".into());
        let p = PanelDataset::new(vec!["NGA".into()], vec![1]).unwrap();
        assert!(matches!(classify(&p, &both), Err(Error::AmbiguousClassification(_))));
    }

    #[test]
    fn model_variables() {
        let specs: Vec<VariableSpec> = replication_variables()
            .into_iter()
            .filter(|s| s.label == "GNI" || s.label == "FDI" || s.label == "TRF")
            .collect();
        let p = PanelDataset::new(vec!["NGA".into()], vec![1, 2])
            .unwrap()
            .with_column("GNI", vec![Some(10f64.exp()), Some(1.0)])
            .unwrap()
            .with_column("FDI", vec![Some(-4.07e9), Some(0.0)])
            .unwrap()
            .with_column("TRF", vec![Some(6.0), Some(7.0)])
            .unwrap();
        match build_model_variables(&p, &specs, LogPolicy::Strict) {
            Err(Error::NonPositiveLog { variable, .. }) => assert_eq!(variable, "FDI"),
            other => panic!("unexpected {other:?}"),
        }
        let out = build_model_variables(&p, &specs, LogPolicy::SignedLog).unwrap();
        assert!((out.get("lnGNI", 0, 0).unwrap().unwrap() - 10.0).abs() < 1e-12);
        assert_eq!(out.get("lnFDI", 0, 1).unwrap(), Some(0.0));
        assert!(!out.has_variable("lnTRF"));
        assert_eq!(out.column("GNI"), p.column("GNI"));
    }
}
