//! The basic (q) identities. Half-integer powers of q are written as half
//! exponents, so `q^{3/2 - l}` is `a(1, 3 - 2l, 0)`.

use super::{Phi65Params, Side};
use crate::algebra::Algebra;
use crate::error::Error;
use crate::factorials::{fraction_form_in, QBase, QFactorArg};
use crate::numerics::ExactRational;
use crate::series::{eval_qhyper_in, sum_in, QHyperSpec};

const Q1: QBase = QBase::q_pow(1);
const Q2: QBase = QBase::q_pow(2);
const Q3: QBase = QBase::q_pow(3);
const Q6: QBase = QBase::q_pow(6);

/// `c q^{h/2} x^e`.
fn a(c: i64, h: i64, e: i64) -> QFactorArg {
    QFactorArg::new(ExactRational::from_integer(c), h, e)
}

fn sign(i: i64) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

fn mono<A: Algebra>(alg: &A, c: i64, h: i64, e: i64) -> A::Value {
    alg.monomial(&ExactRational::from_integer(c), h, e)
}

/// `1 - c q^{h/2} x^e`.
fn bin<A: Algebra>(alg: &A, c: i64, h: i64, e: i64) -> A::Value {
    alg.binomial(&ExactRational::from_integer(c), h, e)
}

fn half<A: Algebra>(alg: &A) -> A::Value {
    alg.constant(&ExactRational::new(1, 2))
}

fn br<A: Algebra>(alg: &A, num: &[QFactorArg], den: &[QFactorArg], base: QBase, n: i64) -> Result<A::Value, Error> {
    fraction_form_in(alg, num, den, base, n)
}

fn ratio<A: Algebra>(alg: &A, num: &A::Value, den: &A::Value, what: &str) -> Result<A::Value, Error> {
    alg.div(num, den, || what.to_string())
}

/// `sum_{k=0}^{n} (lead; lead_base)_k [num; den | base]_k q^{zh k / 2}`.
#[allow(clippy::too_many_arguments)]
fn lead_sum<A: Algebra>(
    alg: &A,
    n: i64,
    lead: &QFactorArg,
    lead_base: QBase,
    num: &[QFactorArg],
    den: &[QFactorArg],
    base: QBase,
    zh: i64,
) -> Result<A::Value, Error> {
    sum_in(alg, n, |k| {
        let l = alg.q_pochhammer(lead, lead_base, k)?;
        let b = br(alg, num, den, base, k)?;
        Ok(alg.mul(&alg.mul(&l, &b), &mono(alg, 1, zh * k, 0)))
    })
}

/// The common left side `sum_k (q^{-3n}; q^3)_k [num; q, den.. | q]_k q^k`,
/// where `den` already lists the `q` slot.
fn cubic_lhs<A: Algebra>(alg: &A, n: i64, num: &[QFactorArg], den: &[QFactorArg]) -> Result<A::Value, Error> {
    lead_sum(alg, n, &a(1, -6 * n, 0), Q3, num, den, Q1, 2)
}

/// `[num; den | q^3]_n`.
fn cube<A: Algebra>(alg: &A, n: i64, num: [QFactorArg; 2], den: [QFactorArg; 2]) -> Result<A::Value, Error> {
    br(alg, &num, &den, Q3, n)
}

pub(crate) fn qgosper_1<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 2, -1)],
            &[a(1, 2, 0), a(-1, 2, 0), a(1, 1, 0), a(-1, 1, 0), a(1, -6 * n, 0)],
        ),
        Side::Rhs => cube(alg, n, [a(1, 2, 1), a(1, 4, -1)], [a(1, 2, 0), a(1, 4, 0)]),
    }
}

pub(crate) fn qgosper_2<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 4, -1)],
            &[a(1, 2, 0), a(-1, 2, 0), a(1, 3, 0), a(-1, 3, 0), a(1, -2 - 6 * n, 0)],
        ),
        Side::Rhs => cube(alg, n, [a(1, 4, 1), a(1, 8, -1)], [a(1, 4, 0), a(1, 8, 0)]),
    }
}

pub(crate) fn phi65<A: Algebra>(alg: &A, side: Side, ell: i64, p: &Phi65Params) -> Result<A::Value, Error> {
    let ra = &p.root_a;
    let aa = ra * ra;
    let arg = |c: ExactRational, h: i64| QFactorArg::new(c, h, 0);
    match side {
        Side::Lhs => {
            let spec = QHyperSpec {
                upper: vec![
                    arg(aa.clone(), 0),
                    arg(ra.clone(), 2),
                    arg(-ra, 2),
                    arg(p.b.clone(), 0),
                    arg(p.c.clone(), 0),
                    arg(ExactRational::one(), -2 * ell),
                ],
                lower: vec![
                    arg(ra.clone(), 0),
                    arg(-ra, 0),
                    arg(&aa / &p.b, 2),
                    arg(&aa / &p.c, 2),
                    arg(aa.clone(), 2 + 2 * ell),
                ],
                z: arg(&aa / (&p.b * &p.c), 2 + 2 * ell),
                base: Q1,
                terminating: 5,
            };
            eval_qhyper_in(alg, &spec)
        }
        Side::Rhs => br(
            alg,
            &[arg(aa.clone(), 2), arg(&aa / (&p.b * &p.c), 2)],
            &[arg(&aa / &p.b, 2), arg(&aa / &p.c, 2)],
            Q1,
            ell,
        ),
    }
}

/// Shared shape of the three `= 1` relations:
/// `pre_l * sum_i sgn^i q^{wh i/2} (1 - x^2 q^{(4i+t)/2}) / (1 - x^2 q^{t/2})
/// [inner]_i [tail_num; tail_den]_{l-i}`.
struct Relation {
    pre_num: [QFactorArg; 2],
    pre_den: [QFactorArg; 2],
    alternating: bool,
    wh: i64,
    t: i64,
    inner_num: [QFactorArg; 3],
    inner_den: [QFactorArg; 3],
    tail_num: QFactorArg,
    tail_den: QFactorArg,
}

fn relation<A: Algebra>(alg: &A, ell: i64, r: &Relation) -> Result<A::Value, Error> {
    let pre = br(alg, &r.pre_num, &r.pre_den, Q1, ell)?;
    let denom = bin(alg, 1, r.t, 2);
    let sum = sum_in(alg, ell, |i| {
        let sg = if r.alternating { sign(i) } else { 1 };
        let w = ratio(alg, &bin(alg, 1, 4 * i + r.t, 2), &denom, "1 - x^2 q^(t/2) vanishes")?;
        let mut term = alg.mul(&mono(alg, sg, r.wh * i, 0), &w);
        term = alg.mul(&term, &br(alg, &r.inner_num, &r.inner_den, Q1, i)?);
        let tail = br(alg, std::slice::from_ref(&r.tail_num), std::slice::from_ref(&r.tail_den), Q1, ell - i)?;
        Ok(alg.mul(&term, &tail))
    })?;
    Ok(alg.mul(&pre, &sum))
}

pub(crate) fn rel6<A: Algebra>(alg: &A, side: Side, ell: i64, k: i64) -> Result<A::Value, Error> {
    if side == Side::Rhs {
        return Ok(alg.one());
    }
    relation(
        alg,
        ell,
        &Relation {
            pre_num: [a(1, 2 - 2 * ell, -1), a(-1, 2 - 2 * ell, -1)],
            pre_den: [a(1, 2 - 2 * ell, -2), a(-1, 2 - 2 * ell + 2 * k, 0)],
            alternating: true,
            wh: 2 * ell,
            t: -2,
            inner_num: [a(1, -2 * ell, 0), a(1, 2 * k, 1), a(1, -2, 2)],
            inner_den: [a(1, 2, 0), a(1, 0, 1), a(1, 2 * ell, 2)],
            tail_num: a(1, 2 - 2 * ell + 2 * k, -1),
            tail_den: a(1, 2 - 2 * ell, -1),
        },
    )
}

pub(crate) fn rel5<A: Algebra>(alg: &A, side: Side, ell: i64, k: i64) -> Result<A::Value, Error> {
    if side == Side::Rhs {
        return Ok(alg.one());
    }
    relation(
        alg,
        ell,
        &Relation {
            pre_num: [a(1, 4 - 2 * ell, -1), a(-1, 3 - 2 * ell, -1)],
            pre_den: [a(1, 4 - 2 * ell, -2), a(-1, 3 - 2 * ell + 2 * k, 0)],
            alternating: true,
            wh: 2 * ell - 1,
            t: -4,
            inner_num: [a(1, -2 * ell, 0), a(1, 2 * k, 1), a(1, -4, 2)],
            inner_den: [a(1, 2, 0), a(1, -2, 1), a(1, 2 * ell - 2, 2)],
            tail_num: a(1, 4 - 2 * ell + 2 * k, -1),
            tail_den: a(1, 4 - 2 * ell, -1),
        },
    )
}

pub(crate) fn rel11<A: Algebra>(alg: &A, side: Side, ell: i64, k: i64) -> Result<A::Value, Error> {
    if side == Side::Rhs {
        return Ok(alg.one());
    }
    relation(
        alg,
        ell,
        &Relation {
            pre_num: [a(1, -2 * ell, -1), a(1, 1 - 2 * ell, -1)],
            pre_den: [a(1, -2 * ell, -2), a(1, 1 - 2 * ell + 2 * k, 0)],
            alternating: false,
            wh: 2 * ell + 1,
            t: 0,
            inner_num: [a(1, -2 * ell, 0), a(1, 2 * k, 1), a(1, 0, 2)],
            inner_den: [a(1, 2, 0), a(1, 2, 1), a(1, 2 * ell + 2, 2)],
            tail_num: a(1, 2 * k - 2 * ell, -1),
            tail_den: a(1, -2 * ell, -1),
        },
    )
}

/// `[x, -x; x^2, -1 | q]_l`, shared by the first and the last family.
fn first_family_pre<A: Algebra>(alg: &A, ell: i64) -> Result<A::Value, Error> {
    br(alg, &[a(1, 0, 1), a(-1, 0, 1)], &[a(1, 0, 2), a(-1, 0, 0)], Q1, ell)
}

pub(crate) fn thm1<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 2 - 2 * ell, -1)],
            &[a(1, 2, 0), a(-1, 2 - 2 * ell, 0), a(1, 1, 0), a(-1, 1, 0), a(1, -6 * n, 0)],
        ),
        Side::Rhs => {
            let pre = first_family_pre(alg, ell)?;
            let denom = bin(alg, 1, -2, 2);
            let sum = sum_in(alg, ell, |i| {
                let w = ratio(alg, &bin(alg, 1, 4 * i - 2, 2), &denom, "1 - x^2/q vanishes")?;
                let mut t = alg.mul(&mono(alg, sign(i), 2 * ell * i, 0), &w);
                t = alg.mul(&t, &br(alg, &[a(1, -2 * ell, 0), a(1, -2, 2)], &[a(1, 2, 0), a(1, 2 * ell, 2)], Q1, i)?);
                let c = cube(alg, n, [a(1, 2 + 2 * i, 1), a(1, 4 - 2 * i, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
                Ok(alg.mul(&t, &c))
            })?;
            Ok(alg.mul(&pre, &sum))
        }
    }
}

pub(crate) fn cor2<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 0, -1)],
            &[a(1, 2, 0), a(-1, 0, 0), a(1, 1, 0), a(-1, 1, 0), a(1, -6 * n, 0)],
        ),
        Side::Rhs => {
            let b1 = cube(alg, n, [a(1, 2, 1), a(1, 4, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
            let b2 = cube(alg, n, [a(1, 4, 1), a(1, 2, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
            Ok(alg.mul(&half(alg), &alg.add(&b1, &b2)))
        }
    }
}

/// `sum_i sgn^i q^{(l - 1/2) i} (1 - x^2 q^{2i-2})/(1 - x^2 q^{-2})
/// [q^{-l}, x, x^2/q^2; q, x/q, x^2 q^{l-1}]_i [q^{2+i}x, q^{4-i}/x; q^2, q^4 | q^3]_n`.
fn second_family_sum<A: Algebra>(alg: &A, n: i64, ell: i64, alternating: bool) -> Result<A::Value, Error> {
    let denom = bin(alg, 1, -4, 2);
    sum_in(alg, ell, |i| {
        let sg = if alternating { sign(i) } else { 1 };
        let w = ratio(alg, &bin(alg, 1, 4 * i - 4, 2), &denom, "1 - x^2/q^2 vanishes")?;
        let mut t = alg.mul(&mono(alg, sg, (2 * ell - 1) * i, 0), &w);
        t = alg.mul(
            &t,
            &br(
                alg,
                &[a(1, -2 * ell, 0), a(1, 0, 1), a(1, -4, 2)],
                &[a(1, 2, 0), a(1, -2, 1), a(1, 2 * ell - 2, 2)],
                Q1,
                i,
            )?,
        );
        let c = cube(alg, n, [a(1, 4 + 2 * i, 1), a(1, 8 - 2 * i, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
        Ok(alg.mul(&t, &c))
    })
}

pub(crate) fn thm5<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 4 - 2 * ell, -1)],
            &[a(1, 2, 0), a(-1, 2, 0), a(1, 3, 0), a(-1, 3 - 2 * ell, 0), a(1, -2 - 6 * n, 0)],
        ),
        Side::Rhs => {
            let pre = br(alg, &[a(1, -2, 1), a(-1, -1, 1)], &[a(1, -2, 2), a(-1, -1, 0)], Q1, ell)?;
            Ok(alg.mul(&pre, &second_family_sum(alg, n, ell, true)?))
        }
    }
}

/// The two-bracket right side shared by the `l = 1` corollary of the second
/// family and its sign-flipped twin; `t = 1` gives the former, `t = -1` the
/// latter (the twin is the former with `q^{1/2} -> -q^{1/2}`).
fn cor6_rhs<A: Algebra>(alg: &A, n: i64, t: i64) -> Result<A::Value, Error> {
    let b1 = cube(alg, n, [a(1, 6, 1), a(1, 6, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
    let b2 = cube(alg, n, [a(1, 4, 1), a(1, 8, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
    let common = bin(alg, t, -1, 1);
    let d1 = alg.mul(&bin(alg, -t, 1, 0), &common);
    let d2 = alg.mul(&bin(alg, -t, -1, 0), &common);
    let c1 = ratio(alg, &bin(alg, 1, 0, 1), &d1, "first coefficient denominator vanishes")?;
    let c2 = ratio(alg, &bin(alg, 1, -2, 1), &d2, "second coefficient denominator vanishes")?;
    Ok(alg.add(&alg.mul(&c1, &b1), &alg.mul(&c2, &b2)))
}

pub(crate) fn cor6<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 2, -1)],
            &[a(1, 2, 0), a(-1, 2, 0), a(1, 3, 0), a(-1, 1, 0), a(1, -2 - 6 * n, 0)],
        ),
        Side::Rhs => cor6_rhs(alg, n, 1),
    }
}

pub(crate) fn cor6_equiv<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 2, -1)],
            &[a(1, 2, 0), a(-1, 2, 0), a(1, 1, 0), a(-1, 3, 0), a(1, -2 - 6 * n, 0)],
        ),
        Side::Rhs => cor6_rhs(alg, n, -1),
    }
}

pub(crate) fn prop9_q2<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lead_sum(
            alg,
            n,
            &a(1, -12 * n, 0),
            Q6,
            &[a(1, 0, 1), a(1, 8 - 4 * ell, -1)],
            &[a(1, 4, 0), a(-1, 4, 0), a(1, 6, 0), a(-1, 6 - 4 * ell, 0), a(1, -4 - 12 * n, 0)],
            Q2,
            4,
        ),
        Side::Rhs => {
            let pre = br(alg, &[a(1, -4, 1), a(-1, -2, 1)], &[a(1, -4, 2), a(-1, -2, 0)], Q2, ell)?;
            let denom = bin(alg, 1, -8, 2);
            let sum = sum_in(alg, ell, |i| {
                let w = ratio(alg, &bin(alg, 1, 8 * i - 8, 2), &denom, "1 - x^2/q^4 vanishes")?;
                let mut t = alg.mul(&mono(alg, sign(i), (4 * ell - 2) * i, 0), &w);
                t = alg.mul(
                    &t,
                    &br(
                        alg,
                        &[a(1, -4 * ell, 0), a(1, 0, 1), a(1, -8, 2)],
                        &[a(1, 4, 0), a(1, -4, 1), a(1, 4 * ell - 4, 2)],
                        Q2,
                        i,
                    )?,
                );
                let c = br(
                    alg,
                    &[a(1, 8 + 4 * i, 1), a(1, 16 - 4 * i, -1)],
                    &[a(1, 8, 0), a(1, 16, 0)],
                    Q6,
                    n,
                )?;
                Ok(alg.mul(&t, &c))
            })?;
            Ok(alg.mul(&pre, &sum))
        }
    }
}

pub(crate) fn prop9_qh<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 4 - 2 * ell, -1)],
            &[a(1, 2, 0), a(-1, 2, 0), a(1, 3 - 2 * ell, 0), a(-1, 3, 0), a(1, -2 - 6 * n, 0)],
        ),
        Side::Rhs => {
            let pre = br(alg, &[a(1, -2, 1), a(1, -1, 1)], &[a(1, -2, 2), a(1, -1, 0)], Q1, ell)?;
            Ok(alg.mul(&pre, &second_family_sum(alg, n, ell, false)?))
        }
    }
}

pub(crate) fn thm11<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, -2 * ell, -1)],
            &[a(1, 2, 0), a(-1, 0, 0), a(1, 1 - 2 * ell, 0), a(-1, 1, 0), a(1, -6 * n, 0)],
        ),
        Side::Rhs => {
            let pre = br(alg, &[a(1, 2, 1), a(1, 1, 1)], &[a(1, 2, 2), a(1, 1, 0)], Q1, ell)?;
            let denom = alg.mul(&alg.int(2), &bin(alg, -1, 0, 1));
            let sum = sum_in(alg, ell, |i| {
                let w = ratio(alg, &bin(alg, -1, 2 * i, 1), &denom, "1 + x vanishes")?;
                let mut t = alg.mul(&mono(alg, 1, (2 * ell + 1) * i, 0), &w);
                t = alg.mul(&t, &br(alg, &[a(1, -2 * ell, 0), a(1, 0, 2)], &[a(1, 2, 0), a(1, 2 * ell + 2, 2)], Q1, i)?);
                let c1 = cube(alg, n, [a(1, 2 + 2 * i, 1), a(1, 4 - 2 * i, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
                let c2 = cube(alg, n, [a(1, 4 + 2 * i, 1), a(1, 2 - 2 * i, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
                Ok(alg.mul(&t, &alg.add(&c1, &c2)))
            })?;
            Ok(alg.mul(&pre, &sum))
        }
    }
}

pub(crate) fn cor12<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, -2, -1)],
            &[a(1, 2, 0), a(-1, 0, 0), a(1, -1, 0), a(-1, 1, 0), a(1, -6 * n, 0)],
        ),
        Side::Rhs => {
            let b1 = cube(alg, n, [a(1, 2, 1), a(1, 4, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
            let b2 = cube(alg, n, [a(1, 4, 1), a(1, 2, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
            let b3 = cube(alg, n, [a(1, 6, 1), a(1, 0, -1)], [a(1, 2, 0), a(1, 4, 0)])?;
            // 2 (1 - q^{1/2}) (1 + x q^{1/2})
            let d = alg.mul(&alg.int(2), &alg.mul(&bin(alg, 1, 1, 0), &bin(alg, -1, 1, 1)));
            let c1 = ratio(alg, &bin(alg, 1, 2, 1), &d, "2(1 - q^1/2)(1 + x q^1/2) vanishes")?;
            let c3 = ratio(alg, &alg.mul(&mono(alg, 1, 1, 0), &bin(alg, 1, 0, 1)), &d, "2(1 - q^1/2)(1 + x q^1/2) vanishes")?;
            let sum = alg.add(&alg.mul(&c1, &b1), &alg.mul(&half(alg), &b2));
            Ok(alg.sub(&sum, &alg.mul(&c3, &b3)))
        }
    }
}

pub(crate) fn thm15<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 2 - 2 * ell, -1)],
            &[a(1, 2, 0), a(-1, 2 - 2 * ell, 0), a(1, 1, 0), a(-1, 3, 0), a(1, -2 - 6 * n, 0)],
        ),
        Side::Rhs => {
            let pre = first_family_pre(alg, ell)?;
            let denom = alg.mul(&bin(alg, 1, -2, 2), &bin(alg, 1, 1, 0));
            let sum = sum_in(alg, ell, |i| {
                let w = ratio(alg, &bin(alg, 1, 4 * i - 2, 2), &denom, "(1 - x^2/q)(1 - q^1/2) vanishes")?;
                let mut t = alg.mul(&mono(alg, sign(i), 2 * ell * i, 0), &w);
                t = alg.mul(&t, &br(alg, &[a(1, -2 * ell, 0), a(1, -2, 2)], &[a(1, 2, 0), a(1, 2 * ell, 2)], Q1, i)?);
                let inner_den = bin(alg, -1, 2 * i - 1, 1);
                let c1 = ratio(alg, &bin(alg, 1, 2 * i, 1), &inner_den, "1 + x q^(i-1/2) vanishes")?;
                let c2 = ratio(
                    alg,
                    &alg.mul(&mono(alg, 1, 1, 0), &bin(alg, 1, 2 * i - 2, 1)),
                    &inner_den,
                    "1 + x q^(i-1/2) vanishes",
                )?;
                let b1 = cube(alg, n, [a(1, 6 + 2 * i, 1), a(1, 6 - 2 * i, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
                let b2 = cube(alg, n, [a(1, 4 + 2 * i, 1), a(1, 8 - 2 * i, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
                let brace = alg.sub(&alg.mul(&c1, &b1), &alg.mul(&c2, &b2));
                Ok(alg.mul(&t, &brace))
            })?;
            Ok(alg.mul(&pre, &sum))
        }
    }
}

pub(crate) fn cor16<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => cubic_lhs(
            alg,
            n,
            &[a(1, 0, 1), a(1, 0, -1)],
            &[a(1, 2, 0), a(-1, 0, 0), a(1, 1, 0), a(-1, 3, 0), a(1, -2 - 6 * n, 0)],
        ),
        Side::Rhs => {
            let b1 = cube(alg, n, [a(1, 8, 1), a(1, 4, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
            let b2 = cube(alg, n, [a(1, 6, 1), a(1, 6, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
            let b3 = cube(alg, n, [a(1, 4, 1), a(1, 8, -1)], [a(1, 4, 0), a(1, 8, 0)])?;
            let two = alg.int(2);
            let d1 = alg.mul(&two, &alg.mul(&bin(alg, 1, 1, 0), &bin(alg, -1, 1, 1)));
            let d2 = alg.mul(&two, &alg.mul(&bin(alg, -1, -1, 1), &bin(alg, -1, 1, 1)));
            let d3 = alg.mul(&two, &alg.mul(&bin(alg, 1, 1, 0), &bin(alg, -1, -1, 1)));
            let one_minus_x = bin(alg, 1, 0, 1);
            let c1 = ratio(alg, &bin(alg, 1, 2, 1), &d1, "2(1 - q^1/2)(1 + x q^1/2) vanishes")?;
            let c2 = ratio(alg, &alg.mul(&one_minus_x, &one_minus_x), &d2, "2(1 + x q^-1/2)(1 + x q^1/2) vanishes")?;
            let c3 = ratio(
                alg,
                &alg.mul(&mono(alg, 1, 1, 0), &bin(alg, 1, -2, 1)),
                &d3,
                "2(1 - q^1/2)(1 + x q^-1/2) vanishes",
            )?;
            let sum = alg.add(&alg.mul(&c1, &b1), &alg.mul(&c2, &b2));
            Ok(alg.sub(&sum, &alg.mul(&c3, &b3)))
        }
    }
}
