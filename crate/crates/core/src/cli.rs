//! The `qgv` command line.
//!
//! Exit codes: 0 success, 2 a mathematical failure (pole, counterexample,
//! missed tolerance), 3 numerical ill-conditioning, 64 usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::identities::{
    eval_side, limit_2f1_side, list_identities, pi_series_side, IdentityId, Instance, Kind, Point, Side,
};
use crate::numerics::{ExactRational, HighPrecisionFloat, QPoint};
use crate::verifier::{
    limit_chains, limit_check, pi_check, run_suite_with, LimitChain, Mode, Mutation, SampleConfig, SuiteOptions,
    DECAY_WINDOW,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 2;
pub const EXIT_ILL_CONDITIONED: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable that overrides `--seed`.
pub const SEED_ENV: &str = "QGV_SEED";

#[derive(Parser, Debug)]
#[command(name = "qgv", version, about = "Exact verification of q-Gosper type summation identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Sample,
    Certify,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every catalog entry with its arity.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Evaluate one side of one entry at an exact point.
    Eval(EvalArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Check q -> 1 limits against the classical identities.
    Limits(LimitArgs),
    /// Sum the series for 2 pi / (3 sqrt 3).
    Pi(PiArgs),
}

#[derive(Args, Debug)]
struct EvalArgs {
    id: String,
    side: String,
    #[arg(long, default_value_t = 0)]
    n: i64,
    #[arg(long)]
    ell: Option<i64>,
    #[arg(long)]
    k: Option<i64>,
    /// q^(1/2) as p/q.
    #[arg(long)]
    s: Option<String>,
    /// x as p/q; for PHI65 this is sqrt(a).
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long)]
    c: Option<String>,
    /// Bits for the float-only entries.
    #[arg(long, default_value_t = 256)]
    precision: usize,
    #[arg(long, default_value_t = 200)]
    max_terms: usize,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    ids: Vec<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, default_value_t = 6)]
    n_max: i64,
    #[arg(long, default_value_t = 4)]
    ell_max: i64,
    #[arg(long, default_value_t = 20)]
    trials: u32,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 16)]
    bitsize: u32,
    #[arg(long, default_value_t = 100)]
    max_resample: u32,
    #[arg(long, default_value_t = 256)]
    precision: usize,
    #[arg(long, value_enum, default_value = "sample")]
    mode: ModeArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Apply a deliberate formula mutation.
    #[arg(long)]
    mutation: Option<String>,
    /// Accepted decay ratio range for limit chains, as LO,HI.
    #[arg(long)]
    decay_window: Option<String>,
}

#[derive(Args, Debug)]
struct LimitArgs {
    /// Q_ID:CLASSICAL_ID; repeatable. Defaults to every chain.
    #[arg(long)]
    chain: Vec<String>,
    #[arg(long, default_value_t = 2)]
    n: i64,
    #[arg(long, default_value_t = 1)]
    ell: i64,
    #[arg(long, default_value = "1/5")]
    x: String,
    /// Values of eps as p/q; repeatable. Defaults to 1/10000 and 1/100000.
    #[arg(long)]
    eps: Vec<String>,
    #[arg(long, default_value_t = 256)]
    precision: usize,
    /// Accepted decay ratio range, as LO,HI.
    #[arg(long)]
    window: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct PiArgs {
    #[arg(long, default_value_t = 256)]
    precision: usize,
    #[arg(long, default_value_t = 200)]
    max_terms: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Pole(_) | Error::PoleOfGamma(_) | Error::ZeroToNegativePower(_) => EXIT_FAIL,
            Error::IllConditioned(_) => EXIT_ILL_CONDITIONED,
            Error::SamplingExhausted(_) | Error::GridConstructionFailed(_) | Error::NonTerminating(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

type CmdResult = Result<i32, Failure>;

fn rational(flag: &str, v: &str) -> Result<ExactRational, Failure> {
    v.parse().map_err(|_| usage(format!("--{flag} expects p/q, got {v:?}")))
}

fn required(flag: &str, v: &Option<String>) -> Result<ExactRational, Failure> {
    match v {
        Some(v) => rational(flag, v),
        None => Err(usage(format!("--{flag} is required here"))),
    }
}

fn window(v: &Option<String>) -> Result<(f64, f64), Failure> {
    let Some(v) = v else { return Ok(DECAY_WINDOW) };
    let bad = || usage(format!("window expects LO,HI, got {v:?}"));
    let (lo, hi) = v.split_once(',').ok_or_else(bad)?;
    let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
    if !(lo < hi) {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn float_text(v: &HighPrecisionFloat) -> String {
    v.to_string()
}

fn cmd_list(format: Format, out: &mut dyn Write) -> CmdResult {
    let all = list_identities();
    match format {
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&all).expect("catalog serializes"));
        }
        Format::Text => {
            let _ = writeln!(out, "{:<12} {:<10} {:<10} summary", "id", "kind", "params");
            for d in all {
                let kind = match d.kind {
                    Kind::Classical => "classical",
                    Kind::Q => "q",
                    Kind::FloatOnly => "float",
                };
                let params: Vec<&str> = [(d.takes_n, "n"), (d.takes_ell, "ell"), (d.takes_k, "k")]
                    .into_iter()
                    .filter_map(|(on, name)| on.then_some(name))
                    .collect();
                let params = if params.is_empty() { "-".to_string() } else { params.join(",") };
                let _ = writeln!(out, "{:<12} {:<10} {:<10} {}", d.id.name(), kind, params, d.summary);
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_eval(a: &EvalArgs, out: &mut dyn Write) -> CmdResult {
    let id: IdentityId = a.id.parse()?;
    let side: Side = a.side.parse()?;
    if id.kind() == Kind::FloatOnly {
        let v = match id {
            IdentityId::PiSeries => pi_series_side(side, a.precision, a.max_terms),
            _ => limit_2f1_side(side, &required("x", &a.x)?, a.precision)?,
        };
        let _ = writeln!(out, "{}", float_text(&v));
        return Ok(EXIT_OK);
    }
    let inst = Instance { n: a.n, ell: a.ell, k: a.k };
    let point = match (id, id.kind()) {
        (IdentityId::Phi65, _) => Point::Phi65 {
            point: QPoint::new(required("s", &a.s)?, required("x", &a.x)?)?,
            b: required("b", &a.b)?,
            c: required("c", &a.c)?,
        },
        (_, Kind::Classical) => Point::Classical(required("x", &a.x)?),
        _ => Point::Q(QPoint::new(required("s", &a.s)?, required("x", &a.x)?)?),
    };
    let v = eval_side(id, side, &inst, &point)?;
    let _ = writeln!(out, "{v}");
    Ok(EXIT_OK)
}

fn cmd_verify(a: &VerifyArgs, seed_env: Option<String>, out: &mut dyn Write) -> CmdResult {
    let ids = match (a.all, a.ids.is_empty()) {
        (true, true) => None,
        (false, false) => {
            Some(a.ids.iter().map(|s| s.parse::<IdentityId>()).collect::<Result<Vec<_>, _>>()?)
        }
        (true, false) => return Err(usage("give either identity ids or --all, not both")),
        (false, true) => return Err(usage("give identity ids or --all")),
    };
    let seed = match seed_env {
        Some(v) => v.trim().parse().map_err(|_| usage(format!("{SEED_ENV} must be an unsigned integer, got {v:?}")))?,
        None => a.seed,
    };
    if a.n_max < 0 || a.ell_max < 0 || a.trials == 0 {
        return Err(usage("n-max and ell-max must be nonnegative and trials positive"));
    }
    if a.precision < 64 {
        return Err(usage("precision must be at least 64 bits"));
    }
    let sample = SampleConfig { seed, bitsize: a.bitsize, max_resample: a.max_resample };
    sample.validate()?;
    let mutation = a.mutation.as_deref().map(str::parse::<Mutation>).transpose()?;
    let opts = SuiteOptions {
        sample,
        n_max: a.n_max,
        ell_max: a.ell_max,
        trials: a.trials,
        mode: match a.mode {
            ModeArg::Sample => Mode::Sample,
            ModeArg::Certify => Mode::Certify,
        },
        precision: a.precision,
        ids,
        mutation,
        decay_window: window(&a.decay_window)?,
    };
    let report = run_suite_with(&opts);
    let text = match a.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    match &a.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| Failure {
            code: EXIT_USAGE,
            message: format!("cannot write {}: {e}", path.display()),
        })?,
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(if report.summary.fail == 0 && report.summary.skipped == 0 { EXIT_OK } else { EXIT_FAIL })
}

fn parse_chain(s: &str) -> Result<LimitChain, Failure> {
    let bad = || usage(format!("unknown chain {s:?}; expected one of {}", known_chains()));
    let (q, c) = s.split_once(':').ok_or_else(bad)?;
    let q: IdentityId = q.parse().map_err(|_| bad())?;
    let c: IdentityId = c.parse().map_err(|_| bad())?;
    limit_chains().into_iter().find(|ch| ch.q_id == q && ch.classical_id == c).ok_or_else(bad)
}

fn known_chains() -> String {
    limit_chains().iter().map(|c| c.name()).collect::<Vec<_>>().join(", ")
}

fn cmd_limits(a: &LimitArgs, out: &mut dyn Write) -> CmdResult {
    let chains = if a.chain.is_empty() {
        limit_chains()
    } else {
        a.chain.iter().map(|c| parse_chain(c)).collect::<Result<_, _>>()?
    };
    let xt = rational("x", &a.x)?;
    let eps: Vec<ExactRational> = if a.eps.is_empty() {
        vec![ExactRational::new(1, 10_000), ExactRational::new(1, 100_000)]
    } else {
        a.eps.iter().map(|e| rational("eps", e)).collect::<Result<_, _>>()?
    };
    if eps.len() < 2 {
        return Err(usage("give at least two --eps values"));
    }
    if a.precision < 64 {
        return Err(usage("precision must be at least 64 bits"));
    }
    let win = window(&a.window)?;
    let mut ok = true;
    let mut rows = Vec::new();
    for chain in chains {
        let res = limit_check(chain, a.n, a.ell, &xt, &eps, a.precision)?;
        let ratios = |pick: fn(&crate::verifier::LimitResiduals) -> &HighPrecisionFloat| -> Vec<f64> {
            res.windows(2).map(|w| pick(&w[0]).to_f64() / pick(&w[1]).to_f64()).collect()
        };
        let lr = ratios(|r| &r.lhs);
        let rr = ratios(|r| &r.rhs);
        let pass = lr.iter().chain(&rr).all(|r| *r > win.0 && *r < win.1);
        ok &= pass;
        rows.push((chain, res, lr, rr, pass));
    }
    match a.format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(chain, res, lr, rr, pass)| {
                    json!({
                        "chain": chain.name(),
                        "n": a.n,
                        "ell": a.ell,
                        "x": xt.to_string(),
                        "eps": res.iter().map(|r| r.eps.to_string()).collect::<Vec<_>>(),
                        "lhs_residuals": res.iter().map(|r| r.lhs.to_f64()).collect::<Vec<_>>(),
                        "rhs_residuals": res.iter().map(|r| r.rhs.to_f64()).collect::<Vec<_>>(),
                        "lhs_ratios": lr,
                        "rhs_ratios": rr,
                        "window": [win.0, win.1],
                        "pass": pass,
                    })
                })
                .collect();
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Text => {
            let _ = writeln!(out, "{:<16} {:<14} {:>12} {:>12}", "chain", "eps", "|lhs resid|", "|rhs resid|");
            for (chain, res, lr, rr, pass) in &rows {
                for r in res {
                    let _ = writeln!(
                        out,
                        "{:<16} {:<14} {:>12.4e} {:>12.4e}",
                        chain.name(),
                        r.eps.to_string(),
                        r.lhs.to_f64(),
                        r.rhs.to_f64()
                    );
                }
                let fmt = |v: &[f64]| v.iter().map(|r| format!("{r:.3}")).collect::<Vec<_>>().join(" ");
                let verdict = if *pass { "pass" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "{:<16} decay ratio lhs {} rhs {}  window ({}, {})  {verdict}",
                    chain.name(),
                    fmt(lr),
                    fmt(rr),
                    win.0,
                    win.1
                );
            }
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAIL })
}

fn cmd_pi(a: &PiArgs, out: &mut dyn Write) -> CmdResult {
    if a.precision < 64 {
        return Err(usage("precision must be at least 64 bits"));
    }
    let p = pi_check(a.precision, a.max_terms)?;
    let threshold_bits = a.precision - 28;
    let pass = p.residual.below_pow2(threshold_bits);
    match a.format {
        Format::Json => {
            let v = json!({
                "precision": a.precision,
                "terms": p.terms,
                "partial_sum": float_text(&p.partial_sum),
                "target": float_text(&p.target),
                "residual": p.residual.to_f64(),
                "threshold": format!("2^-{threshold_bits}"),
                "pass": pass,
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Text => {
            let _ = writeln!(out, "terms        {}", p.terms);
            let _ = writeln!(out, "partial sum  {}", float_text(&p.partial_sum));
            let _ = writeln!(out, "2pi/(3sqrt3) {}", float_text(&p.target));
            let _ = writeln!(out, "residual     {:.6e}  (threshold 2^-{threshold_bits})", p.residual.to_f64());
        }
    }
    Ok(if pass { EXIT_OK } else { EXIT_FAIL })
}

/// Runs the command line with explicit arguments, seed override and output
/// streams; returns the exit code.
pub fn run<I, T>(args: I, seed_env: Option<String>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    let result = match &cli.command {
        Command::List { format } => cmd_list(*format, out),
        Command::Eval(a) => cmd_eval(a, out),
        Command::Verify(a) => cmd_verify(a, seed_env, out),
        Command::Limits(a) => cmd_limits(a, out),
        Command::Pi(a) => cmd_pi(a, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "qgv: {}", f.message);
            f.code
        }
    }
}

/// Entry point for the binary: process arguments, `QGV_SEED`, stdio.
pub fn main() -> i32 {
    let seed_env = std::env::var(SEED_ENV).ok().filter(|v| !v.is_empty());
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(std::env::args_os(), seed_env, &mut stdout.lock(), &mut stderr.lock())
}
