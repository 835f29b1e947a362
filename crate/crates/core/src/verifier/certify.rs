//! Per-instance proofs by evaluation on a grid.
//!
//! For fixed `(n, l)` the residual `lhs - rhs` is `N(s, x) / D(s, x)` with
//! `deg N` bounded by [`instance_degree_bound`]. The exact backend inverts the
//! same quantities the degree tracker does, so a point it evaluates without a
//! pole has `D != 0`, and a zero residual there is a zero of `N`. A polynomial
//! of degree at most `(a, b)` vanishing on an `(a + 1) x (b + 1)` grid is zero.

use num_integer::Integer;
use rayon::prelude::*;

use super::mutation::Mutation;
use super::verify::eval_pair;
use super::{Check, InstanceResult};
use crate::error::Error;
use crate::identities::{check_arity, instance_degree_bound, IdentityId, Instance, Kind, Point};
use crate::numerics::{ExactRational, QPoint};

/// Rationals in `(-1, 1)` other than zero, by increasing denominator.
fn s_candidates() -> impl Iterator<Item = ExactRational> {
    (2i64..).flat_map(|q| {
        (1..q).filter(move |p| p.gcd(&q) == 1).flat_map(move |p| [ExactRational::new(p, q), ExactRational::new(-p, q)])
    })
}

/// Nonzero rationals by increasing height `max(|p|, q)`.
fn x_candidates() -> impl Iterator<Item = ExactRational> {
    (1i64..).flat_map(|h| {
        (1..=h)
            .flat_map(move |o| if o == h { vec![(h, h)] } else { vec![(h, o), (o, h)] })
            .filter(|(p, q)| p.gcd(q) == 1)
            .flat_map(|(p, q)| [ExactRational::new(p, q), ExactRational::new(-p, q)])
    })
}

/// Grid lines of either kind allowed to fail before giving up.
fn budget(needed: u64) -> usize {
    4 * needed as usize + 64
}

enum Row {
    Zero,
    Pole(usize),
    Mismatch(Point, ExactRational, ExactRational),
}

fn eval_row(id: IdentityId, inst: &Instance, s: &ExactRational, xs: &[ExactRational], mutation: Option<Mutation>) -> Result<Row, Error> {
    let outcomes: Vec<Result<Option<(Point, ExactRational, ExactRational)>, Error>> = xs
        .par_iter()
        .map(|x| {
            let p = Point::Q(QPoint::new(s.clone(), x.clone())?);
            let (l, r) = eval_pair(id, inst, &p, mutation)?;
            Ok((l != r).then_some((p, l, r)))
        })
        .collect();
    for (j, o) in outcomes.into_iter().enumerate() {
        match o {
            Ok(None) => {}
            Ok(Some((p, l, r))) => return Ok(Row::Mismatch(p, l, r)),
            Err(e) if e.is_pole() => return Ok(Row::Pole(j)),
            Err(e) => return Err(e),
        }
    }
    Ok(Row::Zero)
}

/// Proves `lhs = rhs` for one `(n, l[, k])` instance of a q identity as an
/// identity of rational functions in `(s, x)`.
pub fn certify_instance(id: IdentityId, inst: &Instance) -> Result<InstanceResult, Error> {
    certify_instance_with(id, inst, None)
}

/// [`certify_instance`] with an optional formula mutation.
pub fn certify_instance_with(id: IdentityId, inst: &Instance, mutation: Option<Mutation>) -> Result<InstanceResult, Error> {
    check_arity(id, inst)?;
    if id.kind() != Kind::Q || id == IdentityId::Phi65 {
        return Err(Error::Arity(format!("{id} cannot be certified on an (s, x) grid")));
    }
    let bound = instance_degree_bound(id, inst)?;
    let (rows, cols) = bound.grid_size();
    let mut out = InstanceResult::for_identity(id, Check::Certify, inst);
    let mut banned_x: Vec<ExactRational> = Vec::new();

    // An x value can kill every row (a factor depending on x alone). Such a
    // column is banned after repeated blame and the grid is rebuilt.
    'rebuild: for _ in 0..budget(cols) {
        let xs: Vec<ExactRational> = x_candidates().filter(|x| !banned_x.contains(x)).take(cols as usize).collect();
        let mut blame = vec![0usize; xs.len()];
        let mut accepted = 0u64;
        let mut rejected = 0usize;
        for s in s_candidates() {
            if accepted == rows {
                out.detail = Some(format!(
                    "grid {rows}x{cols} for degree bound (s: {}, x: {})",
                    bound.deg_s, bound.deg_x
                ));
                return Ok(out);
            }
            match eval_row(id, inst, &s, &xs, mutation)? {
                Row::Zero => {
                    accepted += 1;
                    out.trials += cols as u32;
                }
                Row::Mismatch(p, l, r) => {
                    out.trials += 1;
                    return Ok(out.fail(&p, l, r).with_detail(format!(
                        "nonzero residual on the {rows}x{cols} certification grid"
                    )));
                }
                Row::Pole(j) => {
                    rejected += 1;
                    blame[j] += 1;
                    if blame[j] > 8 && blame[j] * 2 > rejected {
                        banned_x.push(xs[j].clone());
                        continue 'rebuild;
                    }
                    if rejected > budget(rows) {
                        break 'rebuild;
                    }
                }
            }
        }
    }
    Err(Error::GridConstructionFailed(format!("{id} {inst:?}: poles exclude too many grid lines")))
}
