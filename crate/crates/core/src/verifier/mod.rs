//! Sampling, exact verification, grid certification, reduction and limit
//! checks, and suite orchestration.

mod certify;
mod limits;
mod mutation;
mod reductions;
mod report;
mod sampling;
mod suite;
mod verify;

use serde::{Deserialize, Serialize};

use crate::identities::{IdentityId, Instance, Point};
use crate::numerics::ExactRational;

pub use certify::{certify_instance, certify_instance_with};
pub use limits::{limit_check, limit_chains, pi_check, LimitChain, LimitResiduals, PiOutcome};
pub use mutation::Mutation;
pub use reductions::{check_link, check_reduction, links, EllSpec, Link, SMap};
pub use report::{Summary, SuiteConfig, VerificationReport, VERSION};
pub use sampling::{sample_point, sample_point_from, SampleConfig, StreamKey};
pub use suite::{run_suite, run_suite_with, Mode, SuiteOptions, DECAY_WINDOW};
pub use verify::{verify_instance, verify_instance_with};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// What produced a result line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Sample,
    Certify,
    Reduction,
    Limit,
    Numeric,
}

/// A point where the two compared values differ. For the `6phi5` entry `x`
/// holds `sqrt(a)` and `b`, `c` are present.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub s: Option<ExactRational>,
    pub x: ExactRational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<ExactRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<ExactRational>,
    pub lhs: ExactRational,
    pub rhs: ExactRational,
}

impl Counterexample {
    pub fn at(point: &Point, lhs: ExactRational, rhs: ExactRational) -> Self {
        let (b, c) = match point {
            Point::Phi65 { b, c, .. } => (Some(b.clone()), Some(c.clone())),
            _ => (None, None),
        };
        Counterexample { s: point.s().cloned(), x: point.x().clone(), b, c, lhs, rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceResult {
    pub id: String,
    pub check: Check,
    pub n: i64,
    pub ell: Option<i64>,
    pub k: Option<i64>,
    pub status: Status,
    pub trials: u32,
    pub counterexample: Option<Counterexample>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl InstanceResult {
    fn new(id: impl Into<String>, check: Check, inst: &Instance) -> Self {
        InstanceResult {
            id: id.into(),
            check,
            n: inst.n,
            ell: inst.ell,
            k: inst.k,
            status: Status::Pass,
            trials: 0,
            counterexample: None,
            detail: None,
        }
    }

    fn for_identity(id: IdentityId, check: Check, inst: &Instance) -> Self {
        Self::new(id.name(), check, inst)
    }

    fn fail(mut self, point: &Point, lhs: ExactRational, rhs: ExactRational) -> Self {
        self.status = Status::Fail;
        self.counterexample = Some(Counterexample::at(point, lhs, rhs));
        self
    }

    fn skip(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Skipped;
        self.detail = Some(why.into());
        self
    }

    fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
