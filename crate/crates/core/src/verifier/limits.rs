//! Numerical checks: `q -> 1` limits from q identities to classical ones, the
//! closing `2F1` evaluation, and the series for `2 pi / (3 sqrt 3)`.

use serde::{Deserialize, Serialize};

use crate::algebra::FloatAlgebra;
use crate::error::Error;
use crate::identities::{
    check_arity, eval_side, eval_side_in, limit_2f1_side, pi_series_partial, pi_series_target, IdentityId, Instance,
    Kind, Point, Side,
};
use crate::numerics::{ExactRational, HighPrecisionFloat};

/// A q identity and the classical identity it tends to under `x -> q^(3x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LimitChain {
    pub q_id: IdentityId,
    pub classical_id: IdentityId,
}

impl LimitChain {
    pub fn name(&self) -> String {
        format!("{}:{}", self.q_id, self.classical_id)
    }
}

/// The chains checked by the suite.
pub fn limit_chains() -> Vec<LimitChain> {
    use IdentityId::*;
    [(Thm1, Prop3), (Thm5, Prop7), (Prop9Qh, Prop9), (Thm11, Prop13), (Thm15, Prop17)]
        .into_iter()
        .map(|(q_id, classical_id)| LimitChain { q_id, classical_id })
        .collect()
}

/// `|q side - classical side|` for each side at one `eps`.
#[derive(Clone, Debug)]
pub struct LimitResiduals {
    pub eps: ExactRational,
    pub lhs: HighPrecisionFloat,
    pub rhs: HighPrecisionFloat,
}

/// Evaluates `q_id` in floating point at `q = 1 - eps`, `x = q^(3 xt)` and
/// compares each side with `classical_id` at `xt`, for every `eps`.
pub fn limit_check(
    chain: LimitChain,
    n: i64,
    ell: i64,
    xt: &ExactRational,
    eps_list: &[ExactRational],
    prec: usize,
) -> Result<Vec<LimitResiduals>, Error> {
    if prec < 64 {
        return Err(Error::Parse(format!("precision must be at least 64 bits, got {prec}")));
    }
    if chain.q_id.kind() != Kind::Q || chain.classical_id.kind() != Kind::Classical {
        return Err(Error::Arity(format!("{} is not a q-to-classical chain", chain.name())));
    }
    let qi = Instance::for_id(chain.q_id, n, ell, 0);
    let ci = Instance::for_id(chain.classical_id, n, ell, 0);
    check_arity(chain.q_id, &qi)?;
    let point = Point::Classical(xt.clone());
    let classical = |side| eval_side(chain.classical_id, side, &ci, &point).map(|v| HighPrecisionFloat::from_rational(&v, prec));
    let (cl, cr) = (classical(Side::Lhs)?, classical(Side::Rhs)?);
    let three_xt = HighPrecisionFloat::from_rational(&(ExactRational::from_integer(3) * xt), prec);
    eps_list
        .iter()
        .map(|eps| {
            if eps <= &ExactRational::zero() || eps >= &ExactRational::one() {
                return Err(Error::InvalidPoint(format!("eps must lie in (0, 1), got {eps}")));
            }
            let q = HighPrecisionFloat::from_rational(&(ExactRational::one() - eps), prec);
            let x = three_xt.mul(&q.ln()).exp();
            let alg = FloatAlgebra::new(q.sqrt(), x, prec);
            let ql = eval_side_in(&alg, chain.q_id, Side::Lhs, &qi, None)?;
            let qr = eval_side_in(&alg, chain.q_id, Side::Rhs, &qi, None)?;
            Ok(LimitResiduals { eps: eps.clone(), lhs: ql.sub(&cl).abs(), rhs: qr.sub(&cr).abs() })
        })
        .collect()
}

/// `|lhs - rhs|` of the `2F1` evaluation at `x`.
pub(crate) fn limit_2f1_gap(x: &ExactRational, prec: usize) -> Result<HighPrecisionFloat, Error> {
    let l = limit_2f1_side(Side::Lhs, x, prec)?;
    let r = limit_2f1_side(Side::Rhs, x, prec)?;
    Ok(l.sub(&r).abs())
}

#[derive(Clone, Debug)]
pub struct PiOutcome {
    pub partial_sum: HighPrecisionFloat,
    pub target: HighPrecisionFloat,
    pub residual: HighPrecisionFloat,
    pub terms: usize,
}

/// Sums the series for `2 pi / (3 sqrt 3)` at `prec` bits with at most
/// `max_terms` terms.
pub fn pi_check(prec: usize, max_terms: usize) -> Result<PiOutcome, Error> {
    if prec < 64 {
        return Err(Error::Parse(format!("precision must be at least 64 bits, got {prec}")));
    }
    let (partial_sum, terms) = pi_series_partial(prec, max_terms.max(1));
    let target = pi_series_target(prec);
    let residual = partial_sum.sub(&target).abs();
    Ok(PiOutcome { partial_sum, target, residual, terms })
}
