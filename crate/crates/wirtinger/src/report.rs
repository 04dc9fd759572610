//! Verification reports and their text and JSON renderings.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::{Deserialize, Serialize};
use wirtinger_core::internal::representation_assignment;
use wirtinger_core::lorentz::corrections;
use wirtinger_core::report::{CommutationEntry, CommutationReport};
use wirtinger_core::symcore::to_text;

use crate::config::SuiteConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_pass(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    /// `<module>.<claim>.<indices>`.
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub residual: String,
    /// Serialized residual or offending input, present on failure.
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: &str, pass: bool, residual: impl Into<String>) -> Self {
        Check { id: id.into(), anchor: anchor.into(), status: Status::from_pass(pass), residual: residual.into(), counterexample: None }
    }

    pub fn skipped(id: impl Into<String>, anchor: &str, reason: impl Into<String>) -> Self {
        Check { id: id.into(), anchor: anchor.into(), status: Status::Skipped, residual: reason.into(), counterexample: None }
    }

    /// Pass when `value < bound`; the residual records both.
    pub fn bounded(id: impl Into<String>, anchor: &str, value: f64, bound: f64) -> Self {
        Self::new(id, anchor, value < bound, format!("{} < {}", fmt_float(value), fmt_float(bound)))
    }

    pub fn with_counterexample(mut self, text: impl Into<String>) -> Self {
        if self.status == Status::Fail {
            self.counterexample = Some(text.into());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Shortest round-trip float text, stable across runs.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        return "0e0".into();
    }
    format!("{x:e}")
}

/// Dotted identifier segment from a free-form label such as `[J1,J2]`.
pub fn sanitize(label: &str) -> String {
    let mut out = String::new();
    for c in label.chars() {
        if c.is_ascii_alphanumeric() || c == '_' || c == '-' {
            out.push(c);
        } else if !out.ends_with('.') && !out.is_empty() {
            out.push('.');
        }
    }
    out.trim_end_matches('.').to_string()
}

fn entry_check(prefix: &str, e: &CommutationEntry) -> Check {
    let id = format!("{prefix}.{}", sanitize(&e.label));
    let residual = match &e.residual {
        Some(r) => format!("{} residual terms", r.term_count()),
        None if e.pass => "exact".to_string(),
        None => "vanished".to_string(),
    };
    let check = Check::new(id, e.anchor, e.pass, residual);
    match &e.residual {
        Some(r) => check.with_counterexample(to_text(r)),
        None => check.with_counterexample(to_text(&e.computed)),
    }
}

/// One check per entry, ids `<prefix>.<sanitized label>`.
pub fn from_commutation(prefix: &str, report: &CommutationReport) -> Vec<Check> {
    report.entries.iter().map(|e| entry_check(prefix, e)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunHeader {
    pub tool: String,
    pub version: String,
    pub core_version: String,
    pub config: SuiteConfig,
    /// Realization choices the checks depend on.
    pub conventions: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub header: RunHeader,
    pub summary: Summary,
    pub checks: Vec<Check>,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("duplicate check id `{0}`")]
    DuplicateId(String),
    #[error("malformed report: {0}")]
    Parse(#[from] serde_json::Error),
}

fn conventions() -> Vec<String> {
    let mut out = vec![format!("su(n) {}", representation_assignment())];
    match corrections() {
        Ok(fixes) => out.extend(fixes.iter().map(|f| format!("corrected {}", f.describe()))),
        Err(e) => out.push(format!("generator corrections unavailable: {e:?}")),
    }
    out
}

impl VerificationReport {
    /// Sorts checks by id and rejects duplicates.
    pub fn new(config: SuiteConfig, mut checks: Vec<Check>) -> Result<Self, ReportError> {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        let mut seen = BTreeSet::new();
        for c in &checks {
            if !seen.insert(c.id.as_str()) {
                return Err(ReportError::DuplicateId(c.id.clone()));
            }
        }
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let summary = Summary { total: checks.len(), passed: count(Status::Pass), failed: count(Status::Fail), skipped: count(Status::Skipped) };
        let header = RunHeader {
            tool: "wirtinger".into(),
            version: env!("CARGO_PKG_VERSION").into(),
            core_version: wirtinger_core::VERSION.into(),
            config,
            conventions: conventions(),
        };
        Ok(VerificationReport { header, summary, checks })
    }

    pub fn all_pass(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.binary_search_by(|c| c.id.as_str().cmp(id)).ok().map(|i| &self.checks[i])
    }

    pub fn failing_ids(&self) -> Vec<&str> {
        self.checks.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.as_str()).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_text(&self) -> String {
        let h = &self.header;
        let c = &h.config;
        let suites: Vec<&str> = c.suites.iter().map(|s| s.as_str()).collect();
        let mut out = String::new();
        let _ = writeln!(out, "{} {} (core {})", h.tool, h.version, h.core_version);
        let _ = writeln!(
            out,
            "config: n={} sets={} lattice={} variant={} seed={} tolerance={} suites={}",
            c.n,
            c.sets,
            c.lattice,
            c.variant,
            c.seed,
            fmt_float(c.tolerance),
            suites.join(",")
        );
        for c in &h.conventions {
            let _ = writeln!(out, "convention: {c}");
        }
        for check in &self.checks {
            let _ = writeln!(out, "{:<7} {} [{}] {}", check.status.as_str().to_uppercase(), check.id, check.anchor, check.residual);
            if let Some(cx) = &check.counterexample {
                for line in cx.lines() {
                    let _ = writeln!(out, "        | {line}");
                }
            }
        }
        let s = &self.summary;
        let _ = writeln!(out, "total={} passed={} failed={} skipped={}", s.total, s.passed, s.failed, s.skipped);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use wirtinger_core::lorentz::{verify_commutation_table, GeneratorSet, Variant};

    #[test]
    fn sanitized_ids() {
        assert_eq!(sanitize("[J1,J2]"), "J1.J2");
        assert_eq!(sanitize("Lz|1>"), "Lz.1");
        assert_eq!(sanitize("transfer.I.1.2.1.1"), "transfer.I.1.2.1.1");
    }

    #[test]
    fn failing_entries_carry_residuals() {
        let g = GeneratorSet::build(1, Variant::AsPrinted).unwrap();
        let checks = from_commutation("lorentz.commutator", &verify_commutation_table(&g));
        let report = VerificationReport::new(SuiteConfig::default(), checks).unwrap();
        assert_eq!(report.summary.failed, 10);
        let bad = report.checks.iter().find(|c| c.status == Status::Fail).unwrap();
        let text = bad.counterexample.as_ref().unwrap();
        assert!(text.parse::<wirtinger_core::WeylOperator>().is_ok());
        assert!(report.to_text().contains("[A-3"));
        assert_eq!(VerificationReport::from_json(&report.to_json()).unwrap(), report);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let c = Check::new("a.b.1", "x", true, "exact");
        assert!(matches!(VerificationReport::new(SuiteConfig::default(), vec![c.clone(), c]), Err(ReportError::DuplicateId(_))));
    }
}
