//! The classical identities, all terminating `3F2` sums at `z = 3/4`.

use super::Side;
use crate::algebra::Algebra;
use crate::error::Error;
use crate::factorials::{classical_fraction_form_in, ClassicalArg};
use crate::numerics::{pow_int, ExactRational};
use crate::series::sum_in;

fn r(p: i64, q: i64) -> ExactRational {
    ExactRational::new(p, q)
}

/// `c0 + c1 x`.
fn c(c0: ExactRational, c1: i64) -> ClassicalArg {
    ClassicalArg::new(c0, ExactRational::from_integer(c1))
}

fn k(v: i64) -> ClassicalArg {
    ClassicalArg::constant(ExactRational::from_integer(v))
}

fn sign(i: i64) -> i64 {
    if i % 2 == 0 {
        1
    } else {
        -1
    }
}

fn br<A: Algebra>(alg: &A, num: &[ClassicalArg], den: &[ClassicalArg], n: i64) -> Result<A::Value, Error> {
    classical_fraction_form_in(alg, num, den, n)
}

fn aff<A: Algebra>(alg: &A, c0: ExactRational, c1: i64) -> A::Value {
    alg.affine(&c0, &ExactRational::from_integer(c1))
}

/// `3F2[3x, b0 + b1 x, -n; d1, d2 | 3/4]`.
fn lhs<A: Algebra>(alg: &A, n: i64, second: ClassicalArg, d1: ExactRational, d2: i64) -> Result<A::Value, Error> {
    let upper = [c(r(0, 1), 3), second, k(-n)];
    let lower = [k(1), ClassicalArg::constant(d1), k(d2)];
    sum_in(alg, n, |j| {
        let b = br(alg, &upper, &lower, j)?;
        Ok(alg.mul(&b, &alg.constant(&pow_int(&r(3, 4), j)?)))
    })
}

/// `[p0/3 + x, p1/3 - x; d0/3, d1/3]_n`.
fn thirds<A: Algebra>(alg: &A, n: i64, p0: i64, p1: i64, d0: i64, d1: i64) -> Result<A::Value, Error> {
    let den = [ClassicalArg::constant(r(d0, 3)), ClassicalArg::constant(r(d1, 3))];
    br(alg, &[c(r(p0, 3), 1), c(r(p1, 3), -1)], &den, n)
}

pub(crate) fn gosper_1<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(1, 1), -3), r(1, 2), -3 * n),
        Side::Rhs => thirds(alg, n, 1, 2, 1, 2),
    }
}

pub(crate) fn gosper_2<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(2, 1), -3), r(3, 2), -1 - 3 * n),
        Side::Rhs => thirds(alg, n, 2, 4, 2, 4),
    }
}

/// `[3x; 6x]_l sum_i (-1)^i (6x+2i-1)/(6x-1) [-l, 6x-1; 1, 6x+l]_i * tail(i)`.
fn first_family_rhs<A: Algebra>(
    alg: &A,
    ell: i64,
    mut tail: impl FnMut(i64) -> Result<A::Value, Error>,
) -> Result<A::Value, Error> {
    let pre = br(alg, &[c(r(0, 1), 3)], &[c(r(0, 1), 6)], ell)?;
    let den = aff(alg, r(-1, 1), 6);
    let sum = sum_in(alg, ell, |i| {
        let w = alg.div(&aff(alg, r(2 * i - 1, 1), 6), &den, || "6x - 1 vanishes".into())?;
        let mut t = alg.mul(&alg.int(sign(i)), &w);
        t = alg.mul(&t, &br(alg, &[k(-ell), c(r(-1, 1), 6)], &[k(1), c(r(ell, 1), 6)], i)?);
        Ok(alg.mul(&t, &tail(i)?))
    })?;
    Ok(alg.mul(&pre, &sum))
}

pub(crate) fn prop3<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(1 - ell, 1), -3), r(1, 2), -3 * n),
        Side::Rhs => first_family_rhs(alg, ell, |i| thirds(alg, n, 1 + i, 2 - i, 1, 2)),
    }
}

pub(crate) fn cor4<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(0, 1), -3), r(1, 2), -3 * n),
        Side::Rhs => {
            let s = alg.add(&thirds(alg, n, 1, 2, 1, 2)?, &thirds(alg, n, 2, 1, 1, 2)?);
            Ok(alg.mul(&alg.constant(&r(1, 2)), &s))
        }
    }
}

/// `sum_i sgn^i ((3x+i-1)/(3x-1))^2 [-l, 6x-2; 1, 6x+l-1]_i
/// [(2+i)/3+x, (4-i)/3-x; 2/3, 4/3]_n`.
fn second_family_sum<A: Algebra>(alg: &A, n: i64, ell: i64, alternating: bool) -> Result<A::Value, Error> {
    let den = aff(alg, r(-1, 1), 3);
    sum_in(alg, ell, |i| {
        let w = alg.div(&aff(alg, r(i - 1, 1), 3), &den, || "3x - 1 vanishes".into())?;
        let sg = if alternating { sign(i) } else { 1 };
        let mut t = alg.mul(&alg.int(sg), &alg.mul(&w, &w));
        t = alg.mul(&t, &br(alg, &[k(-ell), c(r(-2, 1), 6)], &[k(1), c(r(ell - 1, 1), 6)], i)?);
        Ok(alg.mul(&t, &thirds(alg, n, 2 + i, 4 - i, 2, 4)?))
    })
}

pub(crate) fn prop7<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(2 - ell, 1), -3), r(3, 2), -1 - 3 * n),
        Side::Rhs => {
            let pre = br(alg, &[c(r(-1, 1), 3)], &[c(r(-1, 1), 6)], ell)?;
            Ok(alg.mul(&pre, &second_family_sum(alg, n, ell, true)?))
        }
    }
}

/// `c1 [1+x, 1-x; 2/3, 4/3]_n + c2 [2/3+x, 4/3-x; 2/3, 4/3]_n`.
fn shifted_pair<A: Algebra>(alg: &A, n: i64, c1: &A::Value, c2: &A::Value) -> Result<A::Value, Error> {
    let b1 = thirds(alg, n, 3, 3, 2, 4)?;
    let b2 = thirds(alg, n, 2, 4, 2, 4)?;
    Ok(alg.add(&alg.mul(c1, &b1), &alg.mul(c2, &b2)))
}

pub(crate) fn cor8<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(1, 1), -3), r(3, 2), -1 - 3 * n),
        Side::Rhs => {
            let den = aff(alg, r(-1, 1), 6);
            let c1 = alg.div(&aff(alg, r(0, 1), 3), &den, || "6x - 1 vanishes".into())?;
            let c2 = alg.div(&aff(alg, r(-1, 1), 3), &den, || "6x - 1 vanishes".into())?;
            shifted_pair(alg, n, &c1, &c2)
        }
    }
}

pub(crate) fn prop9<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(2 - ell, 1), -3), r(3, 2) - r(ell, 1), -1 - 3 * n),
        Side::Rhs => {
            let pre = br(
                alg,
                &[c(r(-1, 1), 3), c(r(-1, 2), 3)],
                &[c(r(-1, 1), 6), ClassicalArg::constant(r(-1, 2))],
                ell,
            )?;
            Ok(alg.mul(&pre, &second_family_sum(alg, n, ell, false)?))
        }
    }
}

pub(crate) fn cor10<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(1, 1), -3), r(1, 2), -1 - 3 * n),
        Side::Rhs => shifted_pair(alg, n, &aff(alg, r(0, 1), 3), &aff(alg, r(1, 1), -3)),
    }
}

pub(crate) fn prop13<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(-ell, 1), -3), r(1, 2) - r(ell, 1), -3 * n),
        Side::Rhs => {
            let pre = br(
                alg,
                &[c(r(1, 1), 3), c(r(1, 2), 3)],
                &[c(r(1, 1), 6), ClassicalArg::constant(r(1, 2))],
                ell,
            )?;
            let sum = sum_in(alg, ell, |i| {
                let t = br(alg, &[k(-ell), c(r(0, 1), 6)], &[k(1), c(r(1 + ell, 1), 6)], i)?;
                let b = alg.add(&thirds(alg, n, 1 + i, 2 - i, 1, 2)?, &thirds(alg, n, 2 + i, 1 - i, 1, 2)?);
                Ok(alg.mul(&t, &b))
            })?;
            Ok(alg.mul(&alg.constant(&r(1, 2)), &alg.mul(&pre, &sum)))
        }
    }
}

pub(crate) fn cor14<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(-1, 1), -3), r(-1, 2), -3 * n),
        Side::Rhs => {
            let c1 = alg.affine(&r(1, 2), &r(3, 2));
            let b1 = thirds(alg, n, 1, 2, 1, 2)?;
            let b2 = thirds(alg, n, 2, 1, 1, 2)?;
            let b3 = thirds(alg, n, 3, 0, 1, 2)?;
            let c3 = alg.affine(&r(0, 1), &r(3, 2));
            let s = alg.add(&alg.mul(&c1, &b1), &alg.mul(&alg.constant(&r(1, 2)), &b2));
            Ok(alg.sub(&s, &alg.mul(&c3, &b3)))
        }
    }
}

pub(crate) fn prop17<A: Algebra>(alg: &A, side: Side, n: i64, ell: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(1 - ell, 1), -3), r(1, 2), -1 - 3 * n),
        Side::Rhs => first_family_rhs(alg, ell, |i| {
            let b1 = thirds(alg, n, 3 + i, 3 - i, 2, 4)?;
            let b2 = thirds(alg, n, 2 + i, 4 - i, 2, 4)?;
            let t1 = alg.mul(&aff(alg, r(i, 1), 3), &b1);
            let t2 = alg.mul(&aff(alg, r(i - 1, 1), 3), &b2);
            Ok(alg.sub(&t1, &t2))
        }),
    }
}

pub(crate) fn cor18<A: Algebra>(alg: &A, side: Side, n: i64) -> Result<A::Value, Error> {
    match side {
        Side::Lhs => lhs(alg, n, c(r(0, 1), -3), r(1, 2), -1 - 3 * n),
        Side::Rhs => {
            let c1 = alg.affine(&r(1, 2), &r(3, 2));
            let c2 = alg.affine(&r(1, 2), &r(-3, 2));
            let b1 = thirds(alg, n, 4, 2, 2, 4)?;
            let b2 = thirds(alg, n, 2, 4, 2, 4)?;
            Ok(alg.add(&alg.mul(&c1, &b1), &alg.mul(&c2, &b2)))
        }
    }
}
