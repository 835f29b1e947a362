//! The identity catalog: every formula is a pair of evaluators over any
//! [`Algebra`], which gives exact values, float values and degree bounds from
//! one transcription.

mod basic;
mod classical;
mod degree;
mod float_only;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use degree::{DegreeAlgebra, DegreeBound, Tracked};
pub use float_only::{
    limit_2f1_max_terms, limit_2f1_side, pi_series_partial, pi_series_side, pi_series_target,
};

use crate::algebra::{Algebra, ExactAlgebra};
use crate::error::Error;
use crate::numerics::{ExactRational, QPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum IdentityId {
    Gosper1,
    Gosper2,
    QGosper1,
    QGosper2,
    Phi65,
    Rel6,
    Thm1,
    Cor2,
    Prop3,
    Cor4,
    Rel5,
    Thm5,
    Cor6,
    Cor6Equiv,
    Prop7,
    Cor8,
    Prop9Q2,
    Prop9Qh,
    Prop9,
    Cor10,
    Rel11,
    Thm11,
    Cor12,
    Prop13,
    Cor14,
    Thm15,
    Cor16,
    Prop17,
    Cor18,
    Limit2F1,
    PiSeries,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Classical,
    Q,
    FloatOnly,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lhs,
    Rhs,
}

impl FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "lhs" => Ok(Side::Lhs),
            "rhs" => Ok(Side::Rhs),
            _ => Err(Error::Parse(format!("side must be lhs or rhs, got {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityDescriptor {
    pub id: IdentityId,
    pub kind: Kind,
    pub takes_n: bool,
    pub takes_ell: bool,
    pub takes_k: bool,
    pub summary: &'static str,
}

use IdentityId::*;

impl IdentityId {
    pub const ALL: [IdentityId; 31] = [
        Gosper1, Gosper2, QGosper1, QGosper2, Phi65, Rel6, Thm1, Cor2, Prop3, Cor4, Rel5, Thm5, Cor6, Cor6Equiv,
        Prop7, Cor8, Prop9Q2, Prop9Qh, Prop9, Cor10, Rel11, Thm11, Cor12, Prop13, Cor14, Thm15, Cor16, Prop17,
        Cor18, Limit2F1, PiSeries,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Gosper1 => "GOSPER_1",
            Gosper2 => "GOSPER_2",
            QGosper1 => "QGOSPER_1",
            QGosper2 => "QGOSPER_2",
            Phi65 => "PHI65",
            Rel6 => "REL6",
            Thm1 => "THM1",
            Cor2 => "COR2",
            Prop3 => "PROP3",
            Cor4 => "COR4",
            Rel5 => "REL5",
            Thm5 => "THM5",
            Cor6 => "COR6",
            Cor6Equiv => "COR6_EQUIV",
            Prop7 => "PROP7",
            Cor8 => "COR8",
            Prop9Q2 => "PROP9_Q2",
            Prop9Qh => "PROP9_QH",
            Prop9 => "PROP9",
            Cor10 => "COR10",
            Rel11 => "REL11",
            Thm11 => "THM11",
            Cor12 => "COR12",
            Prop13 => "PROP13",
            Cor14 => "COR14",
            Thm15 => "THM15",
            Cor16 => "COR16",
            Prop17 => "PROP17",
            Cor18 => "COR18",
            Limit2F1 => "LIMIT_2F1",
            PiSeries => "PI_SERIES",
        }
    }

    pub fn kind(self) -> Kind {
        match self {
            Gosper1 | Gosper2 | Prop3 | Cor4 | Prop7 | Cor8 | Prop9 | Cor10 | Prop13 | Cor14 | Prop17 | Cor18 => {
                Kind::Classical
            }
            Limit2F1 | PiSeries => Kind::FloatOnly,
            _ => Kind::Q,
        }
    }

    pub fn takes_ell(self) -> bool {
        matches!(
            self,
            Phi65 | Rel6 | Thm1 | Prop3 | Rel5 | Thm5 | Prop7 | Prop9Q2 | Prop9Qh | Prop9 | Rel11 | Thm11 | Prop13 | Thm15 | Prop17
        )
    }

    pub fn takes_k(self) -> bool {
        matches!(self, Rel6 | Rel5 | Rel11)
    }

    pub fn takes_n(self) -> bool {
        !matches!(self, Phi65 | Rel6 | Rel5 | Rel11 | Limit2F1 | PiSeries)
    }

    pub fn is_exact(self) -> bool {
        self.kind() != Kind::FloatOnly
    }

    fn summary(self) -> &'static str {
        match self {
            Gosper1 => "3F2[3x, 1-3x, -n; 1/2, -3n | 3/4] = [1/3+x, 2/3-x; 1/3, 2/3]_n",
            Gosper2 => "3F2[3x, 2-3x, -n; 3/2, -1-3n | 3/4] = [2/3+x, 4/3-x; 2/3, 4/3]_n",
            QGosper1 => "sum_k (q^-3n; q^3)_k [x, q/x; q, -q, q^1/2, -q^1/2, q^-3n | q]_k q^k = [qx, q^2/x; q, q^2 | q^3]_n",
            QGosper2 => {
                "sum_k (q^-3n; q^3)_k [x, q^2/x; q, -q, q^3/2, -q^3/2, q^-1-3n | q]_k q^k = [q^2x, q^4/x; q^2, q^4 | q^3]_n"
            }
            Phi65 => "terminating very-well-poised 6phi5 summation in a, b, c",
            Rel6 => "finite relation in (l, k) equal to 1, feeding the first l-extension",
            Thm1 => "l-extension of QGOSPER_1 with -q^(1-l) in the denominator",
            Cor2 => "THM1 at l = 1 written as two q^3-brackets",
            Prop3 => "classical limit of THM1 under x -> q^(3x)",
            Cor4 => "PROP3 at l = 1",
            Rel5 => "finite relation in (l, k) equal to 1, feeding the second l-extension",
            Thm5 => "l-extension of QGOSPER_2 with -q^(3/2-l) in the denominator",
            Cor6 => "THM5 at l = 1",
            Cor6Equiv => "COR6 with q^(1/2) replaced by -q^(1/2)",
            Prop7 => "classical limit of THM5",
            Cor8 => "PROP7 at l = 1",
            Prop9Q2 => "THM5 with q replaced by q^2",
            Prop9Qh => "PROP9_Q2 with q replaced by -q^(1/2)",
            Prop9 => "classical limit of PROP9_QH",
            Cor10 => "PROP9 at l = 1",
            Rel11 => "finite relation in (l, k) equal to 1, feeding the third l-extension",
            Thm11 => "l-extension of COR2 with q^(1/2-l) in the denominator",
            Cor12 => "THM11 at l = 1",
            Prop13 => "classical limit of THM11",
            Cor14 => "PROP13 at l = 1",
            Thm15 => "l-extension with -q^(3/2) and q^(-1-3n) in the denominator",
            Cor16 => "THM15 at l = 1",
            Prop17 => "classical limit of THM15",
            Cor18 => "3F2[3x, -3x, -n; 1/2, -1-3n | 3/4] as two brackets",
            Limit2F1 => "2F1[3x, 2-3x; 3/2 | 1/4] = G(2/3)G(4/3) / (G(2/3+x)G(4/3-x))",
            PiSeries => "sum_k k! / ((3/2)_k 4^k) = 2 pi / (3 sqrt 3)",
        }
    }

    pub fn descriptor(self) -> IdentityDescriptor {
        IdentityDescriptor {
            id: self,
            kind: self.kind(),
            takes_n: self.takes_n(),
            takes_ell: self.takes_ell(),
            takes_k: self.takes_k(),
            summary: self.summary(),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

impl From<IdentityId> for String {
    fn from(id: IdentityId) -> String {
        id.name().to_string()
    }
}

impl TryFrom<String> for IdentityId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

/// Every catalog entry, in catalog order.
pub fn list_identities() -> Vec<IdentityDescriptor> {
    IdentityId::ALL.iter().map(|id| id.descriptor()).collect()
}

/// The integer parameters of one instance. Entries without `n` use `n = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Instance {
    pub n: i64,
    pub ell: Option<i64>,
    pub k: Option<i64>,
}

impl Instance {
    pub fn new(n: i64) -> Self {
        Instance { n, ell: None, k: None }
    }

    pub fn with_ell(self, ell: i64) -> Self {
        Instance { ell: Some(ell), ..self }
    }

    pub fn with_k(self, k: i64) -> Self {
        Instance { k: Some(k), ..self }
    }

    /// The canonical instance shape for `id`, filling in whichever of `n`,
    /// `ell`, `k` it uses.
    pub fn for_id(id: IdentityId, n: i64, ell: i64, k: i64) -> Self {
        Instance {
            n: if id.takes_n() { n } else { 0 },
            ell: id.takes_ell().then_some(ell),
            k: id.takes_k().then_some(k),
        }
    }
}

/// Free parameters of the `6phi5` entry; `a` enters only through its square
/// root.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Phi65Params {
    pub root_a: ExactRational,
    pub b: ExactRational,
    pub c: ExactRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Point {
    Classical(ExactRational),
    Q(QPoint),
    /// `s` and `sqrt(a)` travel in the embedded point's `s` and `x`.
    Phi65 { point: QPoint, b: ExactRational, c: ExactRational },
}

impl Point {
    pub fn s(&self) -> Option<&ExactRational> {
        match self {
            Point::Classical(_) => None,
            Point::Q(p) | Point::Phi65 { point: p, .. } => Some(p.s()),
        }
    }

    pub fn x(&self) -> &ExactRational {
        match self {
            Point::Classical(x) => x,
            Point::Q(p) | Point::Phi65 { point: p, .. } => p.x(),
        }
    }

    pub fn phi65_params(&self) -> Option<Phi65Params> {
        match self {
            Point::Phi65 { point, b, c } => {
                Some(Phi65Params { root_a: point.x().clone(), b: b.clone(), c: c.clone() })
            }
            _ => None,
        }
    }
}

/// Rejects instances whose parameters do not match the entry's arity.
pub fn check_arity(id: IdentityId, inst: &Instance) -> Result<(), Error> {
    if id.kind() == Kind::FloatOnly {
        return Err(Error::Arity(format!("{id} is float-only and has no exact evaluator")));
    }
    if inst.n < 0 {
        return Err(Error::Arity(format!("n must be nonnegative, got {}", inst.n)));
    }
    if !id.takes_n() && inst.n != 0 {
        return Err(Error::Arity(format!("{id} does not take n")));
    }
    match (id.takes_ell(), inst.ell) {
        (true, None) => return Err(Error::Arity(format!("{id} needs ell"))),
        (false, Some(_)) => return Err(Error::Arity(format!("{id} does not take ell"))),
        (true, Some(l)) if l < 0 => return Err(Error::Arity(format!("ell must be nonnegative, got {l}"))),
        _ => {}
    }
    match (id.takes_k(), inst.k) {
        (true, None) => Err(Error::Arity(format!("{id} needs k"))),
        (false, Some(_)) => Err(Error::Arity(format!("{id} does not take k"))),
        (true, Some(k)) if k < 0 => Err(Error::Arity(format!("k must be nonnegative, got {k}"))),
        _ => Ok(()),
    }
}

pub(crate) fn check_point(id: IdentityId, point: &Point) -> Result<(), Error> {
    let ok = match (id, point) {
        (Phi65, Point::Phi65 { b, c, .. }) => {
            if b.is_zero() || c.is_zero() {
                return Err(Error::InvalidPoint("b and c must be nonzero".into()));
            }
            true
        }
        (Phi65, _) => false,
        (_, Point::Classical(_)) => id.kind() == Kind::Classical,
        (_, Point::Q(_)) => id.kind() == Kind::Q,
        (_, Point::Phi65 { .. }) => false,
    };
    if ok {
        Ok(())
    } else {
        let want = match (id, id.kind()) {
            (Phi65, _) => "an (s, sqrt a, b, c) point",
            (_, Kind::Classical) => "an x-only point",
            _ => "an (s, x) point",
        };
        Err(Error::InvalidPoint(format!("{id} needs {want}")))
    }
}

/// Evaluates one side of `id` in any algebra. Arity must already be checked;
/// `phi` must be present for the `6phi5` entry.
pub(crate) fn eval_side_in<A: Algebra>(
    alg: &A,
    id: IdentityId,
    side: Side,
    inst: &Instance,
    phi: Option<&Phi65Params>,
) -> Result<A::Value, Error> {
    let n = inst.n;
    let ell = inst.ell.unwrap_or(0);
    let k = inst.k.unwrap_or(0);
    match id {
        Gosper1 => classical::gosper_1(alg, side, n),
        Gosper2 => classical::gosper_2(alg, side, n),
        QGosper1 => basic::qgosper_1(alg, side, n),
        QGosper2 => basic::qgosper_2(alg, side, n),
        Phi65 => {
            let p = phi.ok_or_else(|| Error::InvalidPoint("PHI65 needs a, b, c".into()))?;
            basic::phi65(alg, side, ell, p)
        }
        Rel6 => basic::rel6(alg, side, ell, k),
        Thm1 => basic::thm1(alg, side, n, ell),
        Cor2 => basic::cor2(alg, side, n),
        Prop3 => classical::prop3(alg, side, n, ell),
        Cor4 => classical::cor4(alg, side, n),
        Rel5 => basic::rel5(alg, side, ell, k),
        Thm5 => basic::thm5(alg, side, n, ell),
        Cor6 => basic::cor6(alg, side, n),
        Cor6Equiv => basic::cor6_equiv(alg, side, n),
        Prop7 => classical::prop7(alg, side, n, ell),
        Cor8 => classical::cor8(alg, side, n),
        Prop9Q2 => basic::prop9_q2(alg, side, n, ell),
        Prop9Qh => basic::prop9_qh(alg, side, n, ell),
        Prop9 => classical::prop9(alg, side, n, ell),
        Cor10 => classical::cor10(alg, side, n),
        Rel11 => basic::rel11(alg, side, ell, k),
        Thm11 => basic::thm11(alg, side, n, ell),
        Cor12 => basic::cor12(alg, side, n),
        Prop13 => classical::prop13(alg, side, n, ell),
        Cor14 => classical::cor14(alg, side, n),
        Thm15 => basic::thm15(alg, side, n, ell),
        Cor16 => basic::cor16(alg, side, n),
        Prop17 => classical::prop17(alg, side, n, ell),
        Cor18 => classical::cor18(alg, side, n),
        Limit2F1 | PiSeries => Err(Error::Arity(format!("{id} is float-only and has no exact evaluator"))),
    }
}

pub(crate) fn point_algebra(point: &Point) -> ExactAlgebra {
    ExactAlgebra::new(point.s().cloned(), point.x().clone())
}

/// Exact value of one side of `id` at `point`.
pub fn eval_side(id: IdentityId, side: Side, inst: &Instance, point: &Point) -> Result<ExactRational, Error> {
    check_arity(id, inst)?;
    check_point(id, point)?;
    eval_side_in(&point_algebra(point), id, side, inst, point.phi65_params().as_ref())
}

/// Both sides at once.
pub fn eval_sides(id: IdentityId, inst: &Instance, point: &Point) -> Result<(ExactRational, ExactRational), Error> {
    Ok((eval_side(id, Side::Lhs, inst, point)?, eval_side(id, Side::Rhs, inst, point)?))
}

/// `lhs - rhs`.
pub fn residual(id: IdentityId, inst: &Instance, point: &Point) -> Result<ExactRational, Error> {
    let (l, r) = eval_sides(id, inst, point)?;
    Ok(l - r)
}

/// True when some denominator on either side vanishes at `point`.
pub fn is_pole(id: IdentityId, inst: &Instance, point: &Point) -> bool {
    matches!(residual(id, inst, point), Err(Error::Pole(_)))
}

/// Degree bound of `lhs - rhs` as a rational function of `(s, x)`.
pub fn instance_degree_bound(id: IdentityId, inst: &Instance) -> Result<DegreeBound, Error> {
    check_arity(id, inst)?;
    if id.kind() != Kind::Q || id == Phi65 {
        return Err(Error::Arity(format!("{id} has no degree bound in (s, x)")));
    }
    let alg = DegreeAlgebra::new();
    let l = eval_side_in(&alg, id, Side::Lhs, inst, None)?;
    let r = eval_side_in(&alg, id, Side::Rhs, inst, None)?;
    Ok(alg.sub(&l, &r).bound())
}

#[cfg(test)]
mod tests;
