//! Coefficient tables and check results, rendered as aligned text, JSON or
//! CSV. Every renderer is deterministic: the same report always produces the
//! same bytes.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use num::BigRational;
use serde::{Deserialize, Serialize};

use crate::cohomology::Determinant;
use crate::error::{Error, Result};
use crate::series::TruncSeries;
use crate::strata::ModuliSpec;

/// How a reported series was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Route {
    /// Sum over the Morse strata.
    Stratified,
    /// Closed rational expression.
    ClosedForm,
    /// Equivariant series of the semistable locus.
    Equivariant,
    /// Ordinary Poincaré polynomial of the smooth moduli space.
    Moduli,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Route::Stratified => "stratified",
            Route::ClosedForm => "closed-form",
            Route::Equivariant => "equivariant",
            Route::Moduli => "moduli",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiReport {
    pub spec: ModuliSpec,
    pub series: TruncSeries,
    pub route: Route,
    pub checks: Vec<Check>,
}

#[derive(Serialize, Deserialize)]
struct JsonReport {
    genus: u32,
    degree: u8,
    determinant: Determinant,
    truncation: usize,
    route: Route,
    coefficients: Vec<String>,
    checks: Vec<Check>,
}

/// Output format shared by every subcommand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(Error::Usage(format!(
                "unknown format '{other}', expected table, json or csv"
            ))),
        }
    }
}

fn spec_line(spec: &ModuliSpec) -> String {
    format!(
        "# genus={} degree={} determinant={} truncation={}",
        spec.genus(),
        spec.degree(),
        spec.determinant(),
        spec.truncation()
    )
}

impl BettiReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = spec_line(&self.spec);
        writeln!(out, " route={}", self.route).unwrap();
        let values: Vec<String> = self.series.coeffs().iter().map(ToString::to_string).collect();
        let kw = self.series.order().to_string().len().max(1);
        let vw = values.iter().map(String::len).max().unwrap_or(0).max(3);
        writeln!(out, "{:>kw$}  {:>vw$}", "k", "b_k").unwrap();
        for (k, v) in values.iter().enumerate() {
            writeln!(out, "{k:>kw$}  {v:>vw$}").unwrap();
        }
        if !self.checks.is_empty() {
            out.push('\n');
            for c in &self.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status}  {}: {}", c.name, c.detail).unwrap();
            }
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,b_k\n");
        for (k, c) in self.series.coeffs().iter().enumerate() {
            writeln!(out, "{k},{c}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let report = JsonReport {
            genus: self.spec.genus(),
            degree: self.spec.degree(),
            determinant: self.spec.determinant(),
            truncation: self.spec.truncation(),
            route: self.route,
            coefficients: self.series.coeffs().iter().map(ToString::to_string).collect(),
            checks: self.checks.clone(),
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report is always serialisable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: JsonReport =
            serde_json::from_str(text).map_err(|e| Error::Usage(format!("malformed report: {e}")))?;
        let coeffs = raw
            .coefficients
            .iter()
            .map(|c| {
                BigRational::from_str(c)
                    .map_err(|_| Error::Usage(format!("malformed coefficient '{c}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        if coeffs.len() != raw.truncation + 1 {
            return Err(Error::Usage(format!(
                "expected {} coefficients, found {}",
                raw.truncation + 1,
                coeffs.len()
            )));
        }
        Ok(BettiReport {
            spec: ModuliSpec::new(raw.genus, raw.degree, raw.determinant, raw.truncation)?,
            series: TruncSeries::from_coeffs(coeffs, raw.truncation),
            route: raw.route,
            checks: raw.checks,
        })
    }
}

/// Equivariant series of every space `X_d` in the stratification, followed
/// by the classifying space they converge to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrataReport {
    pub spec: ModuliSpec,
    pub rows: Vec<StrataRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrataRow {
    pub label: String,
    /// Stratum index, `None` for the classifying-space row.
    pub d: Option<u32>,
    pub coefficients: Vec<String>,
}

#[derive(Serialize)]
struct JsonStrata<'a> {
    genus: u32,
    degree: u8,
    determinant: Determinant,
    truncation: usize,
    strata: &'a [StrataRow],
}

impl StrataReport {
    pub fn new(spec: ModuliSpec, chain: &[TruncSeries], bg: &TruncSeries) -> Self {
        let coeffs = |s: &TruncSeries| s.coeffs().iter().map(ToString::to_string).collect();
        let mut rows: Vec<StrataRow> = chain
            .iter()
            .enumerate()
            .map(|(d, s)| StrataRow {
                label: format!("X_{d}"),
                d: Some(d as u32),
                coefficients: coeffs(s),
            })
            .collect();
        rows.push(StrataRow {
            label: "BG".into(),
            d: None,
            coefficients: coeffs(bg),
        });
        StrataReport { spec, rows }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Table => self.to_table(),
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }

    fn to_table(&self) -> String {
        let mut out = spec_line(&self.spec);
        out.push('\n');
        let n = self.spec.truncation();
        let headers: Vec<String> = (0..=n).map(|k| format!("b_{k}")).collect();
        let lw = self.rows.iter().map(|r| r.label.len()).max().unwrap_or(0).max(7);
        let widths: Vec<usize> = (0..=n)
            .map(|k| {
                self.rows
                    .iter()
                    .map(|r| r.coefficients[k].len())
                    .chain([headers[k].len()])
                    .max()
                    .unwrap_or(1)
            })
            .collect();
        write!(out, "{:>lw$}", "stratum").unwrap();
        for (h, w) in headers.iter().zip(&widths) {
            write!(out, "  {h:>w$}").unwrap();
        }
        out.push('\n');
        for row in &self.rows {
            write!(out, "{:>lw$}", row.label).unwrap();
            for (c, w) in row.coefficients.iter().zip(&widths) {
                write!(out, "  {c:>w$}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    fn to_csv(&self) -> String {
        let mut out = String::from("stratum");
        for k in 0..=self.spec.truncation() {
            write!(out, ",b_{k}").unwrap();
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.label);
            for c in &row.coefficients {
                write!(out, ",{c}").unwrap();
            }
            out.push('\n');
        }
        out
    }

    fn to_json(&self) -> String {
        let report = JsonStrata {
            genus: self.spec.genus(),
            degree: self.spec.degree(),
            determinant: self.spec.determinant(),
            truncation: self.spec.truncation(),
            strata: &self.rows,
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report is always serialisable");
        s.push('\n');
        s
    }
}
