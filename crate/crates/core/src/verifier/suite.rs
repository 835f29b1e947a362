use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::certify::certify_instance_with;
use super::limits::{limit_2f1_gap, limit_check, limit_chains, pi_check, LimitChain};
use super::mutation::Mutation;
use super::reductions::{check_link, links, Link};
use super::report::{Summary, SuiteConfig, VerificationReport, VERSION};
use super::sampling::SampleConfig;
use super::verify::verify_instance_with;
use super::{Check, InstanceResult, Status};
use crate::error::Error;
use crate::identities::{IdentityId, Instance, Kind};
use crate::numerics::{ExactRational, HighPrecisionFloat};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Sample,
    Certify,
}

/// The `(n, l, x)` at which limit chains are checked, and the two `eps`.
const LIMIT_N: i64 = 2;
const LIMIT_ELL: i64 = 1;

fn limit_x() -> ExactRational {
    ExactRational::new(1, 5)
}

fn limit_eps() -> [ExactRational; 2] {
    [ExactRational::new(1, 10_000), ExactRational::new(1, 100_000)]
}

/// Default open interval the residual ratio must fall in when `eps` shrinks
/// tenfold; it expects first-order decay.
pub const DECAY_WINDOW: (f64, f64) = (5.0, 20.0);

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOptions {
    pub sample: SampleConfig,
    pub n_max: i64,
    pub ell_max: i64,
    pub trials: u32,
    pub mode: Mode,
    pub precision: usize,
    /// Restricts the run to these entries and the checks touching them.
    pub ids: Option<Vec<IdentityId>>,
    pub mutation: Option<Mutation>,
    /// Accepted range of the limit-chain decay ratio.
    pub decay_window: (f64, f64),
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            sample: SampleConfig::default(),
            n_max: 6,
            ell_max: 4,
            trials: 20,
            mode: Mode::Sample,
            precision: 256,
            ids: None,
            mutation: None,
            decay_window: DECAY_WINDOW,
        }
    }
}

enum Job {
    Identity(IdentityId, Instance),
    Link(Link),
    Limit(LimitChain),
    TwoF1,
    Pi,
}

fn instances(id: IdentityId, n_max: i64, ell_max: i64) -> Vec<Instance> {
    let ns = if id.takes_n() { 0..=n_max } else { 0..=0 };
    let ells: Vec<Option<i64>> = if id.takes_ell() { (0..=ell_max).map(Some).collect() } else { vec![None] };
    let ks: Vec<Option<i64>> = if id.takes_k() { (0..=n_max).map(Some).collect() } else { vec![None] };
    let mut out = Vec::new();
    for n in ns {
        for &ell in &ells {
            for &k in &ks {
                out.push(Instance { n, ell, k });
            }
        }
    }
    out
}

fn jobs(opts: &SuiteOptions, ids: &[IdentityId]) -> Vec<Job> {
    let wanted = |id: IdentityId| ids.contains(&id);
    let mut out = Vec::new();
    for &id in ids {
        match id {
            IdentityId::Limit2F1 | IdentityId::PiSeries => {}
            _ => out.extend(instances(id, opts.n_max, opts.ell_max).into_iter().map(|i| Job::Identity(id, i))),
        }
    }
    out.extend(links().into_iter().filter(|l| wanted(l.parent) || wanted(l.child)).map(Job::Link));
    out.extend(limit_chains().into_iter().filter(|c| wanted(c.q_id) || wanted(c.classical_id)).map(Job::Limit));
    if wanted(IdentityId::Limit2F1) {
        out.push(Job::TwoF1);
    }
    if wanted(IdentityId::PiSeries) {
        out.push(Job::Pi);
    }
    out
}

/// Errors that are not counterexamples become skipped lines.
fn recorded(id: String, check: Check, inst: &Instance, r: Result<InstanceResult, Error>) -> InstanceResult {
    r.unwrap_or_else(|e| InstanceResult::new(id, check, inst).skip(e.to_string()))
}

fn run_identity(opts: &SuiteOptions, id: IdentityId, inst: &Instance) -> InstanceResult {
    let certifiable = id.kind() == Kind::Q && id != IdentityId::Phi65;
    if opts.mode == Mode::Certify && certifiable {
        return recorded(id.name().into(), Check::Certify, inst, certify_instance_with(id, inst, opts.mutation));
    }
    let r = verify_instance_with(id, inst, opts.trials, &opts.sample, opts.mutation);
    let r = if opts.mode == Mode::Certify {
        r.map(|r| r.with_detail("sampled; no grid certificate for this kind"))
    } else {
        r
    };
    recorded(id.name().into(), Check::Sample, inst, r)
}

fn fmt_f(v: &HighPrecisionFloat) -> String {
    format!("{:.3e}", v.to_f64())
}

/// Ratio of residuals at the larger and smaller `eps`; zero over zero counts
/// as exact agreement.
pub(crate) fn decay_ratio(a: &HighPrecisionFloat, b: &HighPrecisionFloat) -> Option<f64> {
    if a.is_zero() && b.is_zero() {
        return None;
    }
    Some(a.to_f64() / b.to_f64())
}

pub(crate) fn ratio_ok(r: Option<f64>, window: (f64, f64)) -> bool {
    r.map_or(true, |r| r > window.0 && r < window.1)
}

fn run_limit(opts: &SuiteOptions, chain: LimitChain) -> InstanceResult {
    let inst = Instance::new(LIMIT_N).with_ell(LIMIT_ELL);
    let res = match limit_check(chain, LIMIT_N, LIMIT_ELL, &limit_x(), &limit_eps(), opts.precision) {
        Ok(r) => r,
        Err(e) => return recorded(chain.name(), Check::Limit, &inst, Err(e)),
    };
    let mut out = InstanceResult::new(chain.name(), Check::Limit, &inst);
    out.trials = res.len() as u32;
    let lr = decay_ratio(&res[0].lhs, &res[1].lhs);
    let rr = decay_ratio(&res[0].rhs, &res[1].rhs);
    if !(ratio_ok(lr, opts.decay_window) && ratio_ok(rr, opts.decay_window)) {
        out.status = Status::Fail;
    }
    let show = |r: Option<f64>| r.map_or("exact".to_string(), |r| format!("{r:.3}"));
    out.with_detail(format!(
        "x=1/5 lhs {} -> {} (ratio {}), rhs {} -> {} (ratio {})",
        fmt_f(&res[0].lhs),
        fmt_f(&res[1].lhs),
        show(lr),
        fmt_f(&res[0].rhs),
        fmt_f(&res[1].rhs),
        show(rr)
    ))
}

/// Tolerance for the numeric checks: a few bits short of the working
/// precision.
fn numeric_bits(prec: usize) -> usize {
    prec.saturating_sub(28)
}

fn run_two_f1(opts: &SuiteOptions) -> InstanceResult {
    let inst = Instance::new(0);
    let mut out = InstanceResult::new(IdentityId::Limit2F1.name(), Check::Numeric, &inst);
    let xs = [ExactRational::new(1, 5), ExactRational::new(-1, 7), ExactRational::new(1, 2), ExactRational::new(-2, 3)];
    let mut worst = HighPrecisionFloat::zero(opts.precision);
    for x in &xs {
        match limit_2f1_gap(x, opts.precision) {
            Ok(g) => {
                out.trials += 1;
                if g > worst {
                    worst = g.clone();
                }
                if !g.below_pow2(numeric_bits(opts.precision)) {
                    out.status = Status::Fail;
                }
            }
            Err(e) => return recorded(out.id, Check::Numeric, &inst, Err(e)),
        }
    }
    out.with_detail(format!("largest gap {} over x in {{1/5, -1/7, 1/2, -2/3}}", fmt_f(&worst)))
}

/// Term budget for the series check at `prec` bits.
pub(crate) fn pi_terms(prec: usize) -> usize {
    200.max(prec)
}

fn run_pi(opts: &SuiteOptions) -> InstanceResult {
    let inst = Instance::new(0);
    let out = InstanceResult::new(IdentityId::PiSeries.name(), Check::Numeric, &inst);
    match pi_check(opts.precision, pi_terms(opts.precision)) {
        Ok(p) => {
            let mut out = out;
            out.trials = p.terms as u32;
            if !p.residual.below_pow2(numeric_bits(opts.precision)) {
                out.status = Status::Fail;
            }
            out.with_detail(format!("residual {} after {} terms", fmt_f(&p.residual), p.terms))
        }
        Err(e) => recorded(out.id, Check::Numeric, &inst, Err(e)),
    }
}

/// Runs every check in canonical order over the exact entries, links, limit
/// chains and numeric checks.
pub fn run_suite(cfg: &SampleConfig, n_max: i64, ell_max: i64, trials: u32, mode: Mode) -> VerificationReport {
    run_suite_with(&SuiteOptions { sample: *cfg, n_max, ell_max, trials, mode, ..SuiteOptions::default() })
}

/// [`run_suite`] with every option exposed.
pub fn run_suite_with(opts: &SuiteOptions) -> VerificationReport {
    let start = Instant::now();
    let ids: Vec<IdentityId> = opts.ids.clone().unwrap_or_else(|| IdentityId::ALL.to_vec());
    let results: Vec<InstanceResult> = jobs(opts, &ids)
        .par_iter()
        .map(|job| match job {
            Job::Identity(id, inst) => run_identity(opts, *id, inst),
            Job::Link(link) => recorded(
                link.name(),
                Check::Reduction,
                &Instance::new(opts.n_max),
                check_link(link, opts.n_max, opts.ell_max, opts.trials, &opts.sample),
            ),
            Job::Limit(chain) => run_limit(opts, *chain),
            Job::TwoF1 => run_two_f1(opts),
            Job::Pi => run_pi(opts),
        })
        .collect();
    VerificationReport {
        version: VERSION.to_string(),
        seed: opts.sample.seed,
        mode: opts.mode,
        config: SuiteConfig {
            n_max: opts.n_max,
            ell_max: opts.ell_max,
            trials: opts.trials,
            bitsize: opts.sample.bitsize,
            max_resample: opts.sample.max_resample,
            precision: opts.precision,
            decay_window: opts.decay_window,
            ids: ids.iter().map(|i| i.name().to_string()).collect(),
            mutation: opts.mutation,
        },
        summary: Summary::of(&results),
        results,
        duration_ms: start.elapsed().as_millis() as u64,
    }
}
