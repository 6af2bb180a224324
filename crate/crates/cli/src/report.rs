//! Check records, suites and the JSON report.

use eiskern::ComplexValue;
use serde::{Deserialize, Serialize};

/// JSON has no NaN or infinity; serde_json writes them as null, and this
/// reads null back as NaN.
fn null_as_nan<'de, D: serde::Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cx {
    #[serde(deserialize_with = "null_as_nan")]
    pub re: f64,
    #[serde(deserialize_with = "null_as_nan")]
    pub im: f64,
}

impl From<ComplexValue> for Cx {
    fn from(z: ComplexValue) -> Self {
        Cx { re: z.re, im: z.im }
    }
}

impl From<f64> for Cx {
    fn from(x: f64) -> Self {
        Cx { re: x, im: 0.0 }
    }
}

/// How a record's discrepancy is compared with its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Policy {
    /// |lhs − rhs| ≤ tol
    Abs,
    /// |lhs − rhs| ≤ tol·|rhs|
    Rel,
    /// either of the above
    Either,
    /// |lhs − rhs| > tol·|rhs|; witnesses that an identity does NOT hold
    RelExceeds,
    /// Re lhs ≥ −tol; rhs is ignored
    Positive,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub inputs: String,
    pub lhs: Cx,
    pub rhs: Cx,
    #[serde(deserialize_with = "null_as_nan")]
    pub abs_disc: f64,
    #[serde(deserialize_with = "null_as_nan")]
    pub rel_disc: f64,
    pub tol: f64,
    pub policy: Policy,
    pub pass: bool,
    pub report_only: bool,
    /// the identity this record instantiates
    pub paper_anchor: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    pub fn new(
        inputs: String,
        anchor: &str,
        lhs: ComplexValue,
        rhs: ComplexValue,
        policy: Policy,
        tol: f64,
        report_only: bool,
    ) -> Self {
        let abs_disc = (lhs - rhs).norm();
        let scale = rhs.norm();
        let rel_disc = if scale > 0.0 {
            abs_disc / scale
        } else if abs_disc == 0.0 {
            0.0
        } else {
            f64::INFINITY
        };
        let pass = match policy {
            Policy::Abs => abs_disc <= tol,
            Policy::Rel => rel_disc <= tol,
            Policy::Either => abs_disc <= tol || rel_disc <= tol,
            Policy::RelExceeds => rel_disc > tol,
            Policy::Positive => lhs.re >= -tol,
        };
        CheckRecord {
            inputs,
            lhs: lhs.into(),
            rhs: rhs.into(),
            abs_disc,
            rel_disc,
            tol,
            policy,
            pass,
            report_only,
            paper_anchor: anchor.to_string(),
            note: None,
        }
    }

    /// A record for a point where evaluation failed unexpectedly.
    pub fn failed(
        inputs: String,
        anchor: &str,
        policy: Policy,
        tol: f64,
        report_only: bool,
        why: String,
    ) -> Self {
        CheckRecord {
            inputs,
            lhs: Cx {
                re: f64::NAN,
                im: f64::NAN,
            },
            rhs: Cx {
                re: f64::NAN,
                im: f64::NAN,
            },
            abs_disc: f64::NAN,
            rel_disc: f64::NAN,
            tol,
            policy,
            pass: false,
            report_only,
            paper_anchor: anchor.to_string(),
            note: Some(why),
        }
    }

    /// Failed and counted towards the exit status.
    pub fn gating_failure(&self) -> bool {
        !self.pass && !self.report_only
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSuite {
    pub suite: String,
    pub report_only: bool,
    pub pass_count: usize,
    pub fail_count: usize,
    /// 0 unless timing was requested, so that reports are reproducible
    pub wall_time_ms: u64,
    pub records: Vec<CheckRecord>,
}

impl CheckSuite {
    pub fn new(
        suite: &str,
        report_only: bool,
        mut records: Vec<CheckRecord>,
        wall_time_ms: u64,
    ) -> Self {
        records.sort_by(|a, b| a.inputs.cmp(&b.inputs));
        let pass_count = records.iter().filter(|r| r.pass).count();
        CheckSuite {
            suite: suite.to_string(),
            report_only,
            pass_count,
            fail_count: records.len() - pass_count,
            wall_time_ms,
            records,
        }
    }

    pub fn gating_failures(&self) -> usize {
        self.records.iter().filter(|r| r.gating_failure()).count()
    }
}

/// Failing records listed per suite in the terminal summary.
const MAX_LISTED: usize = 10;

/// Top-level JSON document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub suites: Vec<CheckSuite>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.suites.iter().all(|s| s.gating_failures() == 0)
    }

    /// Pretty JSON with a trailing newline. Non-finite numbers become null.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per suite for the terminal.
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            let status = if s.report_only {
                "report-only"
            } else if s.gating_failures() == 0 {
                "ok"
            } else {
                "FAIL"
            };
            out.push_str(&format!(
                "{:<22} {:>5}/{:<5} {}\n",
                s.suite,
                s.pass_count,
                s.records.len(),
                status
            ));
            let fails = s.gating_failures();
            for r in s
                .records
                .iter()
                .filter(|r| r.gating_failure())
                .take(MAX_LISTED)
            {
                out.push_str(&format!(
                    "    fail: {} [{}] abs {:.3e} rel {:.3e} tol {:.1e}{}\n",
                    r.inputs,
                    r.paper_anchor,
                    r.abs_disc,
                    r.rel_disc,
                    r.tol,
                    r.note
                        .as_deref()
                        .map(|n| format!(" ({n})"))
                        .unwrap_or_default()
                ));
            }
            if fails > MAX_LISTED {
                out.push_str(&format!("    … and {} more\n", fails - MAX_LISTED));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use eiskern::c;

    #[test]
    fn policies() {
        let r =
            |p, tol| CheckRecord::new("x".into(), "a", c(1.0, 0.0), c(1.001, 0.0), p, tol, false);
        assert!(r(Policy::Abs, 2e-3).pass);
        assert!(!r(Policy::Abs, 5e-4).pass);
        assert!(r(Policy::Rel, 1e-3).pass);
        assert!(r(Policy::RelExceeds, 1e-4).pass);
        assert!(!r(Policy::RelExceeds, 1e-2).pass);
        let p = CheckRecord::new(
            "x".into(),
            "a",
            c(-1e-20, 0.0),
            c(0.0, 0.0),
            Policy::Positive,
            0.0,
            false,
        );
        assert!(!p.pass);
    }

    #[test]
    fn nan_serializes_as_null() {
        let rec = CheckRecord::failed("x".into(), "a", Policy::Abs, 1.0, false, "boom".into());
        let rep = Report {
            suites: vec![CheckSuite::new("s", false, vec![rec], 0)],
        };
        let json = rep.to_json();
        assert!(json.contains("null"));
        let back: Report = serde_json::from_str(&json).unwrap();
        assert!(back.suites[0].records[0].abs_disc.is_nan());
        assert!(!rep.all_pass());
    }
}
