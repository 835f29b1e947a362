//! Cross-checks between catalog entries: `l = 0` collapses, `l = 1`
//! corollaries and the substitutions linking the intermediate identities.

use super::sampling::{candidates, first_valid, SampleConfig, StreamKey};
use super::{Check, InstanceResult};
use crate::error::Error;
use crate::identities::{check_arity, eval_sides, IdentityId, Instance, Point, Side};
use crate::numerics::{ExactRational, QPoint};

use IdentityId::*;

/// How an entry's `l` is chosen in a link.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EllSpec {
    /// The entry takes no `l`.
    Absent,
    Fixed(i64),
    /// Runs over `0..=ell_max`, shared by both entries.
    Free,
}

/// The parent's `s` as a function of the child's `s`; `x` is shared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SMap {
    Same,
    /// `s -> s^2`, i.e. `q -> q^2`.
    Square,
    /// `s -> -s^2`.
    NegSquare,
    /// `s -> -s`, i.e. `q^(1/2) -> -q^(1/2)`.
    Negate,
}

impl SMap {
    fn apply(self, s: &ExactRational) -> ExactRational {
        match self {
            SMap::Same => s.clone(),
            SMap::Square => s * s,
            SMap::NegSquare => -(s * s),
            SMap::Negate => -s,
        }
    }
}

/// A claim that `parent` (at `parent_ell`, evaluated at the mapped point)
/// has the same left and right sides as `child`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Link {
    pub parent: IdentityId,
    pub parent_ell: EllSpec,
    pub child: IdentityId,
    pub child_ell: EllSpec,
    pub map: SMap,
}

impl Link {
    const fn fixed(parent: IdentityId, ell: i64, child: IdentityId) -> Link {
        Link { parent, parent_ell: EllSpec::Fixed(ell), child, child_ell: EllSpec::Absent, map: SMap::Same }
    }

    pub fn name(&self) -> String {
        format!("{}->{}", self.parent, self.child)
    }

    fn tag(&self) -> u64 {
        (1 << 32) | ((self.parent as u64) << 16) | self.child as u64
    }

    fn instances(&self, n: i64, ell_max: i64) -> Vec<(Instance, Instance, Option<i64>)> {
        let base = |spec: EllSpec, id: IdentityId, ell: i64| {
            let n = if id.takes_n() { n } else { 0 };
            match spec {
                EllSpec::Absent => Instance::new(n),
                EllSpec::Fixed(v) => Instance::new(n).with_ell(v),
                EllSpec::Free => Instance::new(n).with_ell(ell),
            }
        };
        let ells: Vec<i64> = match (self.parent_ell, self.child_ell) {
            (EllSpec::Free, _) | (_, EllSpec::Free) => (0..=ell_max).collect(),
            _ => vec![0],
        };
        ells.into_iter()
            .map(|l| {
                let shown = match self.parent_ell {
                    EllSpec::Fixed(v) => Some(v),
                    EllSpec::Free => Some(l),
                    EllSpec::Absent => None,
                };
                (base(self.parent_ell, self.parent, l), base(self.child_ell, self.child, l), shown)
            })
            .collect()
    }
}

/// Every link the suite checks, in report order.
pub fn links() -> Vec<Link> {
    let free = |parent, child, map| Link { parent, parent_ell: EllSpec::Free, child, child_ell: EllSpec::Free, map };
    vec![
        Link::fixed(Thm1, 0, QGosper1),
        Link::fixed(Thm5, 0, QGosper2),
        Link::fixed(Prop9Qh, 0, QGosper2),
        Link::fixed(Thm11, 0, Cor2),
        Link::fixed(Thm15, 0, Cor6Equiv),
        Link::fixed(Prop3, 0, Gosper1),
        Link::fixed(Prop7, 0, Gosper2),
        Link::fixed(Prop9, 0, Gosper2),
        Link::fixed(Prop13, 0, Cor4),
        Link::fixed(Prop17, 0, Cor10),
        Link::fixed(Thm1, 1, Cor2),
        Link::fixed(Thm5, 1, Cor6),
        Link::fixed(Thm11, 1, Cor12),
        Link::fixed(Thm15, 1, Cor16),
        Link::fixed(Prop3, 1, Cor4),
        Link::fixed(Prop7, 1, Cor8),
        Link::fixed(Prop9, 1, Cor10),
        Link::fixed(Prop13, 1, Cor14),
        Link::fixed(Prop17, 1, Cor18),
        Link::fixed(Prop13, 1, Cor18),
        free(Thm5, Prop9Q2, SMap::Square),
        free(Prop9Qh, Prop9Q2, SMap::NegSquare),
        Link { parent: Cor6, parent_ell: EllSpec::Absent, child: Cor6Equiv, child_ell: EllSpec::Absent, map: SMap::Negate },
    ]
}

fn parent_point(map: SMap, child: &Point) -> Result<Point, Error> {
    match child {
        Point::Q(p) => Ok(Point::Q(QPoint::new(map.apply(p.s()), p.x().clone())?)),
        other => Ok(other.clone()),
    }
}

type Pair = (ExactRational, ExactRational);

/// Checks `link` for every `n <= n_max` (and `l <= ell_max` when `l` is
/// free) at `trials` points each.
pub fn check_link(link: &Link, n_max: i64, ell_max: i64, trials: u32, cfg: &SampleConfig) -> Result<InstanceResult, Error> {
    cfg.validate()?;
    let mut out = InstanceResult::new(link.name(), Check::Reduction, &Instance::new(n_max));
    out.ell = match link.parent_ell {
        EllSpec::Fixed(v) => Some(v),
        _ => None,
    };
    for n in 0..=n_max {
        for (pi, ci, shown) in link.instances(n, ell_max) {
            check_arity(link.parent, &pi)?;
            check_arity(link.child, &ci)?;
            let key = StreamKey { tag: link.tag(), inst: Instance { n, ell: shown, k: None } };
            for trial in 0..trials {
                let stream = candidates(cfg, &key, link.child, trial);
                let found = first_valid(stream, cfg.max_resample, |p| -> Result<(Pair, Pair), Error> {
                    let pp = parent_point(link.map, p)?;
                    Ok((eval_sides(link.parent, &pi, &pp)?, eval_sides(link.child, &ci, p)?))
                });
                let (p, ((pl, pr), (cl, cr))) = match found {
                    Ok(v) => v,
                    Err(Error::SamplingExhausted(m)) => {
                        out.n = n;
                        out.ell = shown;
                        return Ok(out.skip(format!("every candidate hit a pole after {m} resamples")));
                    }
                    Err(e) => return Err(e),
                };
                out.trials += 1;
                let differing = if pl != cl {
                    Some((Side::Lhs, pl, cl))
                } else if pr != cr {
                    Some((Side::Rhs, pr, cr))
                } else {
                    None
                };
                if let Some((side, a, b)) = differing {
                    out.n = n;
                    out.ell = shown;
                    let which = if side == Side::Lhs { "left" } else { "right" };
                    let detail = format!(
                        "{which} sides differ; counterexample lhs is {} and rhs is {} at the child's point",
                        link.parent, link.child
                    );
                    return Ok(out.fail(&p, a, b).with_detail(detail));
                }
            }
        }
    }
    Ok(out)
}

/// Checks that `parent` at `l = ell` has the same sides as `child` for every
/// `n <= n_max`.
pub fn check_reduction(
    parent: IdentityId,
    child: IdentityId,
    ell: i64,
    n_max: i64,
    trials: u32,
    cfg: &SampleConfig,
) -> Result<InstanceResult, Error> {
    let child_ell = if child.takes_ell() { EllSpec::Fixed(ell) } else { EllSpec::Absent };
    let link = Link { parent, parent_ell: EllSpec::Fixed(ell), child, child_ell, map: SMap::Same };
    check_link(&link, n_max, 0, trials, cfg)
}
