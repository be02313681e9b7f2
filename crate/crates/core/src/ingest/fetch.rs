//! Indicator download with an on-disk cache.
//!
//! The cache holds one file per indicator (`<indicator>.csv`), one record per
//! line as `indicator,country,year,value` with an empty value for a null
//! observation. Files are rewritten sorted by (country, year) so the same
//! records always serialize to the same bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde_json::Value;

use crate::error::{Error, Result};

/// Environment variable overriding the default cache directory.
pub const CACHE_ENV: &str = "DYNPANEL_CACHE_DIR";
const DEFAULT_CACHE_DIR: &str = ".dynpanel-cache";
const DEFAULT_BASE_URL: &str = "https://api.worldbank.org/v2";
const COUNTRIES_PER_REQUEST: usize = 40;

pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(CACHE_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(DEFAULT_CACHE_DIR))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FetchRequest {
    pub indicator: String,
    pub countries: Vec<String>,
    /// Inclusive year range.
    pub years: (i32, i32),
    pub cache_dir: PathBuf,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndicatorRecord {
    pub indicator: String,
    pub country: String,
    pub year: i32,
    pub value: Option<f64>,
}

/// Blocking GET used by the fetcher; swapped out in tests.
pub trait Transport: Sync {
    fn get(&self, url: &str) -> std::result::Result<String, String>;
}

/// Plain HTTPS transport.
#[derive(Debug, Clone, Copy, Default)]
pub struct HttpTransport;

impl Transport for HttpTransport {
    fn get(&self, url: &str) -> std::result::Result<String, String> {
        let mut resp = ureq::get(url).call().map_err(|e| e.to_string())?;
        resp.body_mut().read_to_string().map_err(|e| e.to_string())
    }
}

type CacheMap = BTreeMap<(String, i32), Option<f64>>;

/// Single-writer view of the cache directory.
#[derive(Debug, Clone)]
pub struct CacheStore {
    dir: PathBuf,
}

impl CacheStore {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Self { dir: dir.into() }
    }

    pub fn path_for(&self, indicator: &str) -> PathBuf {
        self.dir.join(format!("{indicator}.csv"))
    }

    pub fn load(&self, indicator: &str) -> Result<CacheMap> {
        let path = self.path_for(indicator);
        if !path.exists() {
            return Ok(BTreeMap::new());
        }
        let text = fs::read_to_string(&path)?;
        parse_cache(&text, &path)
    }

    pub fn store(&self, indicator: &str, records: &CacheMap) -> Result<()> {
        fs::create_dir_all(&self.dir)?;
        let path = self.path_for(indicator);
        let tmp = path.with_extension("csv.tmp");
        fs::write(&tmp, serialize_cache(indicator, records))?;
        fs::rename(tmp, path)?;
        Ok(())
    }
}

fn serialize_cache(indicator: &str, records: &CacheMap) -> String {
    let mut out = String::new();
    for ((country, year), value) in records {
        let v = value.map(|x| x.to_string()).unwrap_or_default();
        out.push_str(&format!("{indicator},{country},{year},{v}\n"));
    }
    out
}

fn parse_cache(text: &str, path: &Path) -> Result<CacheMap> {
    let mut map = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        if line.is_empty() {
            continue;
        }
        let context = format!("{}:{}", path.display(), i + 1);
        let bad = |m: &str| Error::Parse {
            context: context.clone(),
            message: m.to_string(),
        };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 4 {
            return Err(bad("expected indicator,country,year,value"));
        }
        let year: i32 = fields[2].parse().map_err(|_| bad("invalid year"))?;
        let value = if fields[3].is_empty() {
            None
        } else {
            Some(fields[3].parse::<f64>().map_err(|_| bad(&format!("non-numeric value `{}`", fields[3])))?)
        };
        map.insert((fields[1].to_string(), year), value);
    }
    Ok(map)
}

fn parse_page(indicator: &str, body: &str) -> Result<(Vec<(String, i32, Option<f64>)>, u64)> {
    let bad = |m: String| Error::Parse {
        context: indicator.to_string(),
        message: m,
    };
    let v: Value = serde_json::from_str(body).map_err(|e| bad(e.to_string()))?;
    let arr = v.as_array().ok_or_else(|| bad("top level is not an array".into()))?;
    let meta = arr.first().ok_or_else(|| bad("empty payload".into()))?;
    if let Some(msg) = meta.get("message") {
        return Err(Error::Fetch {
            indicator: indicator.to_string(),
            message: msg.to_string(),
        });
    }
    let pages = meta.get("pages").and_then(Value::as_u64).unwrap_or(1);
    let mut out = Vec::new();
    let data = match arr.get(1) {
        None | Some(Value::Null) => return Ok((out, pages)),
        Some(d) => d.as_array().ok_or_else(|| bad("data is not an array".into()))?,
    };
    for entry in data {
        let country = entry
            .get("countryiso3code")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("entry without countryiso3code".into()))?;
        let year: i32 = entry
            .get("date")
            .and_then(Value::as_str)
            .and_then(|d| d.parse().ok())
            .ok_or_else(|| bad(format!("entry for {country} without a numeric date")))?;
        let value = match entry.get("value") {
            None | Some(Value::Null) => None,
            Some(Value::Number(n)) => n.as_f64(),
            Some(other) => return Err(bad(format!("non-numeric value {other} for {country} {year}"))),
        };
        out.push((country.to_string(), year, value));
    }
    Ok((out, pages))
}

fn request_url(base: &str, indicator: &str, countries: &[String], years: (i32, i32), page: u64) -> String {
    format!(
        "{base}/country/{}/indicator/{indicator}?format=json&date={}:{}&per_page=1000&page={page}",
        countries.join(";"),
        years.0,
        years.1
    )
}

/// Returns the records for every requested (country, year), served from the
/// cache when it already covers the request. Without a transport (offline
/// mode) an incomplete cache is an error.
pub fn fetch_indicators(req: &FetchRequest, transport: Option<&dyn Transport>) -> Result<Vec<IndicatorRecord>> {
    fetch_with_base(req, transport, DEFAULT_BASE_URL)
}

pub fn fetch_with_base(req: &FetchRequest, transport: Option<&dyn Transport>, base_url: &str) -> Result<Vec<IndicatorRecord>> {
    if req.years.0 > req.years.1 {
        return Err(Error::Config(format!("empty year range {}..={}", req.years.0, req.years.1)));
    }
    if req.countries.is_empty() {
        return Ok(Vec::new());
    }
    let store = CacheStore::new(&req.cache_dir);
    let mut cached = store.load(&req.indicator)?;
    let missing: Vec<String> = req
        .countries
        .iter()
        .filter(|c| (req.years.0..=req.years.1).any(|y| !cached.contains_key(&((*c).clone(), y))))
        .cloned()
        .collect();

    if !missing.is_empty() {
        let transport = transport.ok_or_else(|| Error::Fetch {
            indicator: req.indicator.clone(),
            message: format!("offline and {} countries are not cached", missing.len()),
        })?;
        for chunk in missing.chunks(COUNTRIES_PER_REQUEST) {
            let mut got: BTreeMap<(String, i32), Option<f64>> = BTreeMap::new();
            let mut page = 1;
            loop {
                let url = request_url(base_url, &req.indicator, chunk, req.years, page);
                let body = transport.get(&url).map_err(|message| Error::Fetch {
                    indicator: req.indicator.clone(),
                    message,
                })?;
                let (rows, pages) = parse_page(&req.indicator, &body)?;
                for (c, y, v) in rows {
                    got.insert((c, y), v);
                }
                if page >= pages {
                    break;
                }
                page += 1;
            }
            for c in chunk {
                for y in req.years.0..=req.years.1 {
                    let key = (c.clone(), y);
                    let v = got.get(&key).copied().flatten();
                    cached.insert(key, v);
                }
            }
        }
        store.store(&req.indicator, &cached)?;
    }

    let mut countries = req.countries.clone();
    countries.sort();
    countries.dedup();
    Ok(countries
        .iter()
        .flat_map(|c| (req.years.0..=req.years.1).map(move |y| (c, y)))
        .map(|(c, y)| IndicatorRecord {
            indicator: req.indicator.clone(),
            country: c.clone(),
            year: y,
            value: cached.get(&(c.clone(), y)).copied().flatten(),
        })
        .collect())
}
