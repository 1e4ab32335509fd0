//! Flat `key=value` job files with `[field]`, `[curve]` and `[job]` sections.
//!
//! ```text
//! # y^5 = x^9 + x over GF(81)
//! [field]
//! p=3 e=4 modulus=2,0,0,2,1
//! [curve]
//! m=5 lambda=1 f=0,1,0,0,0,0,0,0,0,1
//! [job]
//! divisor=51,0,0,0,0,0,0,0,0;1
//! ```
//!
//! Several `key=value` tokens may share a line; `#` starts a comment.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use kummer_core::{Divisor, FiniteField, KummerCurve, PlaceTuple};
use thiserror::Error;

/// A parse or validation failure tagged with where it happened.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{location}: {message}")]
pub struct ConfigError {
    pub location: String,
    pub message: String,
}

impl ConfigError {
    fn at(line: usize, key: &str, message: impl Into<String>) -> Self {
        ConfigError {
            location: format!("line {line}, key `{key}`"),
            message: message.into(),
        }
    }

    fn key(key: &str, message: impl Into<String>) -> Self {
        ConfigError {
            location: format!("key `{key}`"),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u32,
    pub e: u32,
    pub modulus: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RootSpec {
    Roots(Vec<u32>),
    Polynomial(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    pub m: i64,
    pub lambda: i64,
    pub roots: RootSpec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Entry {
    line: usize,
    value: String,
}

/// Parsed job file. The `[job]` section is kept as raw entries and
/// interpreted by the subcommand that needs it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub field: FieldSpec,
    pub curve: CurveSpec,
    job: BTreeMap<String, Entry>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Field,
    Curve,
    Job,
}

const FIELD_KEYS: &[&str] = &["p", "e", "modulus"];
const CURVE_KEYS: &[&str] = &["m", "lambda", "roots", "f"];

impl JobConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError {
            location: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut sections: [BTreeMap<String, Entry>; 3] = Default::default();
        let mut current: Option<Section> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                current = Some(match name.trim() {
                    "field" => Section::Field,
                    "curve" => Section::Curve,
                    "job" => Section::Job,
                    other => {
                        return Err(ConfigError::at(line_no, other, "unknown section"));
                    }
                });
                continue;
            }
            let section = current
                .ok_or_else(|| ConfigError::at(line_no, line, "entry before any section"))?;
            for token in line.split_whitespace() {
                let (key, value) = token
                    .split_once('=')
                    .ok_or_else(|| ConfigError::at(line_no, token, "expected key=value"))?;
                let allowed = match section {
                    Section::Field => Some(FIELD_KEYS),
                    Section::Curve => Some(CURVE_KEYS),
                    Section::Job => None,
                };
                if allowed.is_some_and(|keys| !keys.contains(&key)) {
                    return Err(ConfigError::at(line_no, key, "unknown key"));
                }
                let slot = &mut sections[section as usize];
                if slot.contains_key(key) {
                    return Err(ConfigError::at(line_no, key, "duplicate key"));
                }
                slot.insert(
                    key.to_string(),
                    Entry {
                        line: line_no,
                        value: value.to_string(),
                    },
                );
            }
        }
        let [field, curve, job] = sections;

        let p: u32 = required(&field, "p")?;
        let e: u32 = optional(&field, "e")?.unwrap_or(1);
        let modulus = match field.get("modulus") {
            Some(entry) => parse_list(entry, "modulus")?,
            None if e == 1 => vec![0, 1],
            None => return Err(ConfigError::key("modulus", "required when e > 1")),
        };

        let m: i64 = required(&curve, "m")?;
        let lambda: i64 = optional(&curve, "lambda")?.unwrap_or(1);
        let roots = match (curve.get("roots"), curve.get("f")) {
            (Some(entry), None) => RootSpec::Roots(parse_list(entry, "roots")?),
            (None, Some(entry)) => RootSpec::Polynomial(parse_list(entry, "f")?),
            (Some(entry), Some(_)) => {
                return Err(ConfigError::at(
                    entry.line,
                    "roots",
                    "give either roots or f, not both",
                ))
            }
            (None, None) => return Err(ConfigError::key("roots", "one of roots or f is required")),
        };

        Ok(JobConfig {
            field: FieldSpec { p, e, modulus },
            curve: CurveSpec { m, lambda, roots },
            job,
        })
    }

    /// Builds the field and curve; failures are tagged with the offending key.
    pub fn build_curve(&self) -> Result<KummerCurve, ConfigError> {
        let f = &self.field;
        let field = FiniteField::new(f.p, f.e, &f.modulus)
            .map_err(|e| ConfigError::key("modulus", e.to_string()))?;
        let field = Arc::new(field);
        let c = &self.curve;
        let built = match &c.roots {
            RootSpec::Roots(roots) => KummerCurve::new(field, c.m, c.lambda, roots.clone()),
            RootSpec::Polynomial(coeffs) => {
                KummerCurve::from_polynomial(field, c.m, c.lambda, coeffs)
            }
        };
        built.map_err(|e| {
            let key = match c.roots {
                RootSpec::Roots(_) => "roots",
                RootSpec::Polynomial(_) => "f",
            };
            ConfigError::key(key, e.to_string())
        })
    }

    pub fn has(&self, key: &str) -> bool {
        self.job.contains_key(key)
    }

    /// Raw `[job]` value.
    pub fn job_str(&self, key: &str) -> Option<&str> {
        self.job.get(key).map(|e| e.value.as_str())
    }

    pub fn job_value<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, ConfigError> {
        optional(&self.job, key)
    }

    pub fn job_list(&self, key: &str) -> Result<Option<Vec<i64>>, ConfigError> {
        self.job.get(key).map(|e| parse_list(e, key)).transpose()
    }

    /// `divisor=s1,...,sr;t`, checked against the curve's `r`.
    pub fn divisor(&self, r: usize) -> Result<Divisor, ConfigError> {
        let entry = self
            .job
            .get("divisor")
            .ok_or_else(|| ConfigError::key("divisor", "required by this command"))?;
        let (s, t) = entry
            .value
            .split_once(';')
            .ok_or_else(|| ConfigError::at(entry.line, "divisor", "expected s1,...,sr;t"))?;
        let s: Vec<i64> = parse_items(s, entry.line, "divisor")?;
        let t: i64 = t.trim().parse().map_err(|_| {
            ConfigError::at(entry.line, "divisor", format!("bad t coefficient `{t}`"))
        })?;
        if s.len() != r {
            return Err(ConfigError::at(
                entry.line,
                "divisor",
                format!("expected {r} ramified coefficients, got {}", s.len()),
            ));
        }
        Ok(Divisor::new(s, t))
    }

    /// `places=1,2,inf`: a tuple of distinguished places.
    pub fn place_tuple(&self, curve: &KummerCurve) -> Result<PlaceTuple, ConfigError> {
        let entry = self
            .job
            .get("places")
            .ok_or_else(|| ConfigError::key("places", "required by this command"))?;
        let mut ramified = Vec::new();
        let mut infinity = false;
        for item in entry.value.split(',') {
            let item = item.trim();
            if item.eq_ignore_ascii_case("inf") {
                if infinity {
                    return Err(ConfigError::at(entry.line, "places", "inf listed twice"));
                }
                infinity = true;
            } else {
                let mu: usize = item.parse().map_err(|_| {
                    ConfigError::at(entry.line, "places", format!("bad place `{item}`"))
                })?;
                ramified.push(mu);
            }
        }
        PlaceTuple::new(curve.shape(), ramified, infinity)
            .map_err(|e| ConfigError::at(entry.line, "places", e.to_string()))
    }
}

fn required<T: std::str::FromStr>(
    section: &BTreeMap<String, Entry>,
    key: &str,
) -> Result<T, ConfigError> {
    optional(section, key)?.ok_or_else(|| ConfigError::key(key, "missing"))
}

fn optional<T: std::str::FromStr>(
    section: &BTreeMap<String, Entry>,
    key: &str,
) -> Result<Option<T>, ConfigError> {
    section
        .get(key)
        .map(|e| {
            e.value
                .parse()
                .map_err(|_| ConfigError::at(e.line, key, format!("cannot parse `{}`", e.value)))
        })
        .transpose()
}

fn parse_list<T: std::str::FromStr>(entry: &Entry, key: &str) -> Result<Vec<T>, ConfigError> {
    parse_items(&entry.value, entry.line, key)
}

fn parse_items<T: std::str::FromStr>(
    text: &str,
    line: usize,
    key: &str,
) -> Result<Vec<T>, ConfigError> {
    text.split(',')
        .map(|item| {
            item.trim()
                .parse()
                .map_err(|_| ConfigError::at(line, key, format!("bad list item `{item}`")))
        })
        .collect()
}
