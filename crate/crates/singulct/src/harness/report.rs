//! Deterministic report structures and their JSON/CSV renderings.
//!
//! Rationals are serialized as `num/den` strings, never floats; floats are
//! rendered with 17 significant digits; iteration orders are fixed by
//! construction. Two runs with the same configuration produce byte-identical
//! output.

use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::rational::ExtRat;

/// 17 significant digits, fixed scientific form.
pub fn fmt_f64(x: f64) -> String {
    if x.is_infinite() {
        return if x > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    format!("{:.16e}", x)
}

pub fn fmt_opt_exponent(x: Option<f64>) -> String {
    match x {
        Some(v) => fmt_f64(v),
        None => "inf".to_string(),
    }
}

pub fn fmt_ext(v: &ExtRat) -> String {
    v.to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Pass => 0,
            Verdict::Fail => 1,
            Verdict::Inconclusive => 2,
        }
    }

    pub fn combine(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub budget: u64,
    pub primes: Vec<u64>,
    pub m_max: u32,
    pub sigma_tolerance: String,
    pub epsilon: String,
    pub base_field: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct FamilyRow {
    pub family: String,
    pub n: u32,
    /// Degree for diagonal members; absent for determinantal.
    pub d: Option<u32>,
    pub lct_pair: String,
    pub lct_pair_pathway: String,
    pub lct_f: String,
    pub min_exp: String,
    pub min_exp_pathway: String,
    pub milnor: String,
    pub milnor_pathway: String,
    pub rs: bool,
    pub thm_a_verdict: Verdict,
    pub thm_b_verdict: Verdict,
    /// Strict inequality α̃ > lct(f, J_f²)?
    pub thm_b_strict: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecayRow {
    pub p: u64,
    pub m: u32,
    pub max_abs: String,
    pub exponent: String,
    pub twists: u64,
    pub exact_zero: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DecaySection {
    pub poly: String,
    pub z: String,
    pub rows: Vec<DecayRow>,
    pub sigma_hat_per_prime: Vec<(u64, String)>,
    pub sigma_hat: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationRow {
    pub poly: String,
    pub p: u64,
    pub m: u32,
    pub full_abs: String,
    pub restricted_f_abs: String,
    pub restricted_pair_abs: String,
    pub max_discrepancy: String,
    pub complement_f_exact_zero: bool,
    pub complement_pair_exact_zero: bool,
    pub p_above_threshold: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct PointCountRow {
    pub poly: String,
    pub p: u64,
    pub level: u32,
    pub count: u64,
    pub slope: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRow {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    /// Minimal reproduction data for failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: String,
    pub version: String,
    pub config: ConfigEcho,
    pub families: Vec<FamilyRow>,
    pub decay: Vec<DecaySection>,
    pub localization: Vec<LocalizationRow>,
    pub point_counts: Vec<PointCountRow>,
    pub checks: Vec<CheckRow>,
    pub verdict: Verdict,
}

impl Report {
    pub fn new(config: ConfigEcho) -> Self {
        Report {
            tool: "singulct".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
            families: Vec::new(),
            decay: Vec::new(),
            localization: Vec::new(),
            point_counts: Vec::new(),
            checks: Vec::new(),
            verdict: Verdict::Pass,
        }
    }

    pub fn push_check(&mut self, check: CheckRow) {
        self.verdict = self.verdict.combine(check.verdict);
        self.checks.push(check);
    }

    pub fn recompute_verdict(&mut self) {
        let mut v = Verdict::Pass;
        for c in &self.checks {
            v = v.combine(c.verdict);
        }
        for f in &self.families {
            v = v.combine(f.thm_a_verdict).combine(f.thm_b_verdict);
        }
        self.verdict = v;
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// Flat table of the family grid.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,n,d,lct_pair,lct_f,min_exp,milnor,rs\n");
        for row in &self.families {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                row.family,
                row.n,
                row.d.map(|d| d.to_string()).unwrap_or_default(),
                row.lct_pair,
                row.lct_f,
                row.min_exp,
                row.milnor,
                row.rs
            ));
        }
        out
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => self.to_json(),
            ReportFormat::Csv => self.to_csv(),
        }
    }

    pub fn write_to(&self, format: ReportFormat, path: &str) -> Result<()> {
        let body = self.render(format);
        let mut file = std::fs::File::create(path).map_err(|e| Error::Io {
            path: path.to_string(),
            source: e,
        })?;
        file.write_all(body.as_bytes()).map_err(|e| Error::Io {
            path: path.to_string(),
            source: e,
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(Error::InvalidConfig(format!("unknown format `{}`", other))),
        }
    }
}
