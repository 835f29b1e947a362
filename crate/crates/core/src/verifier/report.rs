use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::mutation::Mutation;
use super::suite::Mode;
use super::{InstanceResult, Status};
use crate::error::Error;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Echo of the options a suite ran with.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    pub n_max: i64,
    pub ell_max: i64,
    pub trials: u32,
    pub bitsize: u32,
    pub max_resample: u32,
    pub precision: usize,
    pub decay_window: (f64, f64),
    pub ids: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation: Option<Mutation>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Summary {
    pub fn of(results: &[InstanceResult]) -> Summary {
        results.iter().fold(Summary::default(), |mut s, r| {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
            s
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub version: String,
    pub seed: u64,
    pub mode: Mode,
    pub config: SuiteConfig,
    pub results: Vec<InstanceResult>,
    pub summary: Summary,
    pub duration_ms: u64,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn failures(&self) -> impl Iterator<Item = &InstanceResult> {
        self.results.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0 && self.summary.skipped == 0
    }

    /// Results whose id is exactly `id`.
    pub fn results_for<'a>(&'a self, id: &'a str) -> impl Iterator<Item = &'a InstanceResult> + 'a {
        self.results.iter().filter(move |r| r.id == id)
    }

    /// Fixed-width table, one line per result, then counterexamples.
    pub fn to_text(&self) -> String {
        let opt = |v: Option<i64>| v.map_or("-".to_string(), |v| v.to_string());
        let mut out = String::new();
        let _ = writeln!(out, "qgv {}  seed {}  mode {:?}", self.version, self.seed, self.mode);
        let _ = writeln!(out, "{:<22} {:<9} {:>3} {:>3} {:>3} {:<7} {:>6}  detail", "id", "check", "n", "ell", "k", "status", "trials");
        for r in &self.results {
            let status = match r.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Skipped => "skipped",
            };
            let check = serde_json::to_value(r.check).ok().and_then(|v| v.as_str().map(str::to_owned)).unwrap_or_default();
            let _ = writeln!(
                out,
                "{:<22} {:<9} {:>3} {:>3} {:>3} {:<7} {:>6}  {}",
                r.id,
                check,
                r.n,
                opt(r.ell),
                opt(r.k),
                status,
                r.trials,
                r.detail.as_deref().unwrap_or("")
            );
        }
        for r in self.failures() {
            if let Some(c) = &r.counterexample {
                let s = c.s.as_ref().map_or("-".to_string(), |s| s.to_string());
                let _ = writeln!(out, "counterexample {} n={} ell={}: s={} x={}", r.id, r.n, opt(r.ell), s, c.x);
                if let (Some(b), Some(cc)) = (&c.b, &c.c) {
                    let _ = writeln!(out, "  b={b} c={cc}");
                }
                let _ = writeln!(out, "  lhs={}\n  rhs={}", c.lhs, c.rhs);
            }
        }
        let _ = writeln!(
            out,
            "pass {}  fail {}  skipped {}  ({} ms)",
            self.summary.pass, self.summary.fail, self.summary.skipped, self.duration_ms
        );
        out
    }
}
