//! Acceptance run: prints one `pass`/`FAIL` line per criterion.
//!
//! Criterion 5 asks for first-order decay of the q -> 1 residuals and is not
//! met: the residuals decay like eps^2 (see the README). That line prints
//! FAIL with the measured ratios. The process exits nonzero if any other
//! criterion fails, or if criterion 5 stops showing clean second-order decay.

use std::process::ExitCode;
use std::time::Instant;

use qgv_core::factorials::{q_pochhammer, rising_factorial, QBase, QFactorArg};
use qgv_core::identities::IdentityId;
use qgv_core::numerics::{ExactRational, QPoint};
use qgv_core::verifier::{
    limit_chains, limit_check, pi_check, run_suite_with, Check, Mode, Mutation, SampleConfig, Status, SuiteOptions,
    VerificationReport,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EXACT_IDS: [IdentityId; 10] = {
    use IdentityId::*;
    [Gosper1, Gosper2, QGosper1, QGosper2, Phi65, Rel6, Rel5, Rel11, Thm1, Thm5]
};

struct Line {
    number: u8,
    pass: bool,
    text: String,
}

fn defaults() -> SuiteOptions {
    SuiteOptions { sample: SampleConfig::new(0), n_max: 6, ell_max: 4, trials: 20, ..SuiteOptions::default() }
}

fn identity_lines<'a>(report: &'a VerificationReport, ids: &'a [IdentityId]) -> impl Iterator<Item = &'a qgv_core::verifier::InstanceResult> {
    report.results.iter().filter(move |r| ids.iter().any(|id| id.name() == r.id))
}

fn criterion_one(full: &VerificationReport) -> Line {
    let lines: Vec<_> = identity_lines(full, &EXACT_IDS).filter(|r| r.check == Check::Sample).collect();
    let bad: Vec<_> = lines.iter().filter(|r| !r.passed()).map(|r| format!("{} n={} ell={:?}", r.id, r.n, r.ell)).collect();
    let ids_seen = EXACT_IDS.iter().all(|id| lines.iter().any(|r| r.id == id.name()));
    Line {
        number: 1,
        pass: bad.is_empty() && ids_seen,
        text: format!("exact sampling, {} instances of 10 identities, n<=6 ell<=4, 20 trials, seed 0; failing: {:?}", lines.len(), bad),
    }
}

fn criterion_two() -> Line {
    use IdentityId::*;
    let ids = [QGosper1, QGosper2, Thm1, Thm5];
    let report = run_suite_with(&SuiteOptions {
        n_max: 3,
        ell_max: 2,
        mode: Mode::Certify,
        ids: Some(ids.to_vec()),
        ..defaults()
    });
    let lines: Vec<_> = identity_lines(&report, &ids).filter(|r| r.check == Check::Certify).collect();
    let expected = 4 + 4 + 4 * 3 + 4 * 3;
    let bad = lines.iter().filter(|r| !r.passed()).count();
    Line {
        number: 2,
        pass: bad == 0 && lines.len() == expected,
        text: format!("grid certification, {} of {expected} instances certified, {bad} not", lines.len() - bad),
    }
}

fn criterion_three(full: &VerificationReport) -> Line {
    let lines: Vec<_> = full.results.iter().filter(|r| r.check == Check::Reduction).collect();
    let skipped = lines.iter().filter(|r| r.status == Status::Skipped).count();
    let bare_fail = lines.iter().filter(|r| r.status == Status::Fail && r.counterexample.is_none()).count();
    let flagged: Vec<_> = lines.iter().filter(|r| r.status == Status::Fail).map(|r| format!("{} at n={}", r.id, r.n)).collect();
    Line {
        number: 3,
        pass: !lines.is_empty() && skipped == 0 && bare_fail == 0,
        text: format!(
            "reductions, {} checks, {skipped} skipped, {bare_fail} failures without a counterexample; flagged with counterexample: {:?}",
            lines.len(),
            flagged
        ),
    }
}

fn criterion_four() -> Line {
    let out = pi_check(128, 200).expect("precision is valid");
    let r = out.residual.to_f64();
    Line {
        number: 4,
        pass: r < 1e-30 && out.terms <= 200,
        text: format!("pi series at 128 bits, {} terms, residual {r:.3e}", out.terms),
    }
}

/// Returns the line and whether every ratio sits in the second-order band.
fn criterion_five() -> (Line, bool) {
    let eps = [ExactRational::new(1, 10_000), ExactRational::new(1, 100_000)];
    let xt = ExactRational::new(1, 5);
    let mut in_window = true;
    let mut second_order = true;
    let mut parts = Vec::new();
    for chain in limit_chains().into_iter().take(2) {
        let res = limit_check(chain, 2, 1, &xt, &eps, 256).expect("limit evaluation");
        for (side, a, b) in [("lhs", &res[0].lhs, &res[1].lhs), ("rhs", &res[0].rhs, &res[1].rhs)] {
            let ratio = a.to_f64() / b.to_f64();
            in_window &= ratio > 5.0 && ratio < 20.0;
            second_order &= ratio > 95.0 && ratio < 105.0;
            parts.push(format!("{} {side} {ratio:.3}", chain.name()));
        }
    }
    let line = Line {
        number: 5,
        pass: in_window,
        text: format!("limit decay ratios, required in (5, 20): {}", parts.join(", ")),
    };
    (line, second_order)
}

fn criterion_six() -> Line {
    let mut parts = Vec::new();
    let mut all = true;
    for m in Mutation::ALL {
        let report = run_suite_with(&SuiteOptions { ids: Some(EXACT_IDS.to_vec()), mutation: Some(m), ..defaults() });
        let caught = identity_lines(&report, &EXACT_IDS)
            .filter(|r| r.status == Status::Fail && r.counterexample.is_some())
            .count();
        all &= caught > 0;
        parts.push(format!("{m} {caught}"));
    }
    Line { number: 6, pass: all, text: format!("mutations, failing instances per mutation: {}", parts.join(", ")) }
}

fn small(rng: &mut ChaCha8Rng, nonzero: bool) -> ExactRational {
    loop {
        let v = ExactRational::new(rng.gen_range(-40..=40), rng.gen_range(1..=40));
        if !(nonzero && v.is_zero()) {
            return v;
        }
    }
}

fn criterion_seven() -> Line {
    const TRIALS: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let one = ExactRational::one();
    let (mut inverse, mut split, mut rising, mut broken) = (0, 0, 0, 0);
    let point = |rng: &mut ChaCha8Rng| loop {
        if let Ok(p) = QPoint::new(small(rng, true), small(rng, true)) {
            return p;
        }
    };
    let base = |rng: &mut ChaCha8Rng| {
        let h = [-4, -3, -2, -1, 1, 2, 3, 4, 6][rng.gen_range(0..9)];
        QBase::new(h, rng.gen_bool(0.5)).unwrap()
    };
    let arg = |rng: &mut ChaCha8Rng| QFactorArg::new(small(rng, true), rng.gen_range(-6..=6), rng.gen_range(-2..=2));

    while inverse < TRIALS {
        let (a, b, n, p) = (arg(&mut rng), base(&mut rng), rng.gen_range(-6..=6), point(&mut rng));
        let (Ok(f), Ok(g)) = (q_pochhammer(&a, b, n, &p), q_pochhammer(&a.shifted(b, n), b, -n, &p)) else {
            continue;
        };
        broken += usize::from(f * g != one);
        inverse += 1;
    }
    while split < TRIALS {
        let (a, b, p) = (arg(&mut rng), base(&mut rng), point(&mut rng));
        let (m, n) = (rng.gen_range(-6..=6), rng.gen_range(-6..=6));
        let (Ok(w), Ok(f), Ok(g)) =
            (q_pochhammer(&a, b, m + n, &p), q_pochhammer(&a, b, m, &p), q_pochhammer(&a.shifted(b, m), b, n, &p))
        else {
            continue;
        };
        broken += usize::from(w != f * g);
        split += 1;
    }
    while rising < TRIALS {
        let (x, n) = (small(&mut rng, false), rng.gen_range(-6..=6));
        let shifted = &x + ExactRational::from_integer(n);
        let (Ok(f), Ok(g)) = (rising_factorial(&x, n), rising_factorial(&shifted, -n)) else {
            continue;
        };
        broken += usize::from(f * g != one);
        rising += 1;
    }
    Line {
        number: 7,
        pass: broken == 0,
        text: format!("index laws, {TRIALS} pole-free trials each of q inverse-index, q splitting, rising inverse-index; {broken} broken"),
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let full = run_suite_with(&defaults());
    let (five, second_order) = criterion_five();
    let lines = [
        criterion_one(&full),
        criterion_two(),
        criterion_three(&full),
        criterion_four(),
        five,
        criterion_six(),
        criterion_seven(),
    ];
    for l in &lines {
        println!("criterion {}: {}  {}", l.number, if l.pass { "pass" } else { "FAIL" }, l.text);
    }
    let passed = lines.iter().filter(|l| l.pass).count();
    println!("{passed}/7 criteria pass ({:.0} s)", start.elapsed().as_secs_f64());

    let unexpected: Vec<u8> = lines.iter().filter(|l| !l.pass && l.number != 5).map(|l| l.number).collect();
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        return ExitCode::FAILURE;
    }
    if !second_order {
        eprintln!("criterion 5 no longer shows second-order decay; re-examine the limit checks");
        return ExitCode::FAILURE;
    }
    ExitCode::SUCCESS
}
