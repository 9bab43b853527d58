//! Claim suites per family and the report they feed.

mod scenarios;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::error::Error;
use crate::par;

pub use scenarios::{cross_validate, scenario_dn, scenario_e6, scenario_e7, CrossValidation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ClaimFamily {
    Dn,
    E6,
    E7,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Reported,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Provenance {
    Paper,
    Derived,
    Trivial,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ClaimRecord {
    pub id: String,
    pub family: ClaimFamily,
    pub params: Value,
    pub status: Status,
    pub expected: Value,
    pub actual: Value,
    pub provenance: Provenance,
    pub notes: String,
}

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub seed: u64,
    pub samples: usize,
    pub check_prescriptions: bool,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            seed: 0,
            samples: 100,
            check_prescriptions: false,
        }
    }
}

/// Accumulates the claims of one scenario.
pub(crate) struct Claims {
    family: ClaimFamily,
    params: Value,
    records: Vec<ClaimRecord>,
}

impl Claims {
    pub(crate) fn new(family: ClaimFamily, params: Value) -> Self {
        Self {
            family,
            params,
            records: Vec::new(),
        }
    }

    fn push(&mut self, id: &str, status: Status, expected: Value, actual: Value, p: Provenance, notes: String) {
        self.records.push(ClaimRecord {
            id: id.to_string(),
            family: self.family,
            params: self.params.clone(),
            status,
            expected,
            actual,
            provenance: p,
            notes,
        });
    }

    /// Gating claim: passes iff `expected == actual`.
    pub(crate) fn check<E: Serialize, A: Serialize>(
        &mut self,
        id: &str,
        expected: E,
        actual: A,
        p: Provenance,
        notes: impl Into<String>,
    ) -> bool {
        let (e, a) = (to_value(expected), to_value(actual));
        let ok = e == a;
        let status = if ok { Status::Pass } else { Status::Fail };
        self.push(id, status, e, a, p, notes.into());
        ok
    }

    /// Informational claim; never affects the exit code.
    pub(crate) fn report<E: Serialize, A: Serialize>(
        &mut self,
        id: &str,
        expected: E,
        actual: A,
        p: Provenance,
        notes: impl Into<String>,
    ) {
        self.push(id, Status::Reported, to_value(expected), to_value(actual), p, notes.into());
    }

    pub(crate) fn fail(&mut self, id: &str, err: &Error) {
        self.push(id, Status::Fail, Value::Null, Value::Null, Provenance::Derived, err.to_string());
    }

    pub(crate) fn into_records(self) -> Vec<ClaimRecord> {
        self.records
    }
}

fn to_value<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("claim values serialize")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scenario {
    Dn(usize),
    E6,
    E7,
}

impl Scenario {
    pub fn name(&self) -> String {
        match self {
            Scenario::Dn(n) => format!("D{n}"),
            Scenario::E6 => "E6".into(),
            Scenario::E7 => "E7".into(),
        }
    }

    pub fn run(&self, cfg: &Config) -> Vec<ClaimRecord> {
        match *self {
            Scenario::Dn(n) => scenario_dn(n, cfg),
            Scenario::E6 => scenario_e6(cfg),
            Scenario::E7 => scenario_e7(cfg),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub reported: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub seed: u64,
    pub claims: Vec<ClaimRecord>,
    pub summary: Summary,
    /// Wall-clock seconds per scenario.
    pub timings: BTreeMap<String, f64>,
}

impl VerificationReport {
    pub fn exit_code(&self) -> i32 {
        if self.summary.fail == 0 {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Reported => "INFO",
            };
            let params = if c.params.is_null() {
                String::new()
            } else {
                format!(" {}", c.params)
            };
            let _ = writeln!(
                out,
                "{status} {}{params}: expected {} actual {}",
                c.id, c.expected, c.actual
            );
            if !c.notes.is_empty() {
                let _ = writeln!(out, "     {}", c.notes);
            }
        }
        let _ = writeln!(
            out,
            "pass {} fail {} reported {}",
            self.summary.pass, self.summary.fail, self.summary.reported
        );
        for (name, secs) in &self.timings {
            let _ = writeln!(out, "{name}: {secs:.2}s");
        }
        out
    }
}

/// Runs the scenarios (in parallel when enabled) and merges their claims in
/// the order given.
pub fn run_scenarios(scenarios: &[Scenario], cfg: &Config) -> VerificationReport {
    let results = par::map_slice(scenarios, |s| {
        let t = Instant::now();
        let claims = s.run(cfg);
        (s.name(), claims, t.elapsed().as_secs_f64())
    });
    let mut claims = Vec::new();
    let mut timings = BTreeMap::new();
    for (name, cs, secs) in results {
        claims.extend(cs);
        timings.insert(name, secs);
    }
    let mut summary = Summary::default();
    for c in &claims {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Reported => summary.reported += 1,
        }
    }
    VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: cfg.seed,
        claims,
        summary,
        timings,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Writes the report to `path` (stdout when `None`) and returns the exit code.
pub fn emit_report(
    report: &VerificationReport,
    format: Format,
    path: Option<&std::path::Path>,
) -> std::io::Result<i32> {
    let body = match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    match path {
        Some(p) => std::fs::write(p, body)?,
        None => {
            use std::io::Write;
            std::io::stdout().write_all(body.as_bytes())?;
        }
    }
    Ok(report.exit_code())
}

/// Deterministic per-sample seed, so samples can be drawn in any order.
pub fn sample_seed(seed: u64, stream: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(index.wrapping_mul(0xd1b5_4a32_d192_ed03));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record(status: Status) -> ClaimRecord {
        ClaimRecord {
            id: "x".into(),
            family: ClaimFamily::E7,
            params: Value::Null,
            status,
            expected: Value::Null,
            actual: Value::Null,
            provenance: Provenance::Trivial,
            notes: String::new(),
        }
    }

    fn report(statuses: &[Status]) -> VerificationReport {
        let claims: Vec<_> = statuses.iter().map(|&s| record(s)).collect();
        let mut summary = Summary::default();
        for s in statuses {
            match s {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Reported => summary.reported += 1,
            }
        }
        VerificationReport {
            version: "0".into(),
            seed: 0,
            claims,
            summary,
            timings: BTreeMap::new(),
        }
    }

    #[test]
    fn exit_codes() {
        assert_eq!(report(&[Status::Pass, Status::Pass]).exit_code(), 0);
        assert_eq!(report(&[Status::Pass, Status::Fail]).exit_code(), 1);
        assert_eq!(report(&[Status::Pass, Status::Reported]).exit_code(), 0);
    }

    #[test]
    fn claims_compare_serialized_values() {
        let mut c = Claims::new(ClaimFamily::Dn, serde_json::json!({"n": 4}));
        assert!(c.check("a", 5usize, 5u64, Provenance::Paper, ""));
        assert!(!c.check("b", vec![1, 2], vec![2, 1], Provenance::Derived, ""));
        c.report("c", 1, 2, Provenance::Derived, "");
        let r = c.into_records();
        assert_eq!(
            r.iter().map(|c| c.status).collect::<Vec<_>>(),
            vec![Status::Pass, Status::Fail, Status::Reported]
        );
        let j = serde_json::to_value(&r[0]).unwrap();
        assert_eq!(j["provenance"], "PAPER");
        assert_eq!(j["status"], "pass");
        assert_eq!(j["family"], "Dn");
    }

    #[test]
    fn sample_seeds_differ() {
        assert_ne!(sample_seed(0, 1, 0), sample_seed(0, 1, 1));
        assert_ne!(sample_seed(0, 1, 0), sample_seed(0, 2, 0));
        assert_eq!(sample_seed(5, 1, 9), sample_seed(5, 1, 9));
    }
}
