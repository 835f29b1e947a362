use super::mutation::{MutatedAlgebra, Mutation};
use super::sampling::{candidates, first_valid, SampleConfig, StreamKey};
use super::{Check, InstanceResult};
use crate::error::Error;
use crate::identities::{check_arity, check_point, eval_side_in, point_algebra, IdentityId, Instance, Point, Side};
use crate::numerics::ExactRational;

/// Both sides of `id` at `point`, with `mutation` applied to its side.
pub(crate) fn eval_pair(
    id: IdentityId,
    inst: &Instance,
    point: &Point,
    mutation: Option<Mutation>,
) -> Result<(ExactRational, ExactRational), Error> {
    check_point(id, point)?;
    let alg = point_algebra(point);
    let phi = point.phi65_params();
    let side = |s: Side| match mutation {
        Some(m) if m.side() == s => {
            let mutated = MutatedAlgebra { inner: alg.clone(), mutation: m };
            eval_side_in(&mutated, id, s, inst, phi.as_ref())
        }
        _ => eval_side_in(&alg, id, s, inst, phi.as_ref()),
    };
    Ok((side(Side::Lhs)?, side(Side::Rhs)?))
}

/// Checks `lhs == rhs` exactly at `trials` sampled pole-free points.
pub fn verify_instance(id: IdentityId, inst: &Instance, trials: u32, cfg: &SampleConfig) -> Result<InstanceResult, Error> {
    verify_instance_with(id, inst, trials, cfg, None)
}

/// [`verify_instance`] with an optional formula mutation.
pub fn verify_instance_with(
    id: IdentityId,
    inst: &Instance,
    trials: u32,
    cfg: &SampleConfig,
    mutation: Option<Mutation>,
) -> Result<InstanceResult, Error> {
    check_arity(id, inst)?;
    cfg.validate()?;
    if trials == 0 {
        return Err(Error::Parse("trials must be positive".into()));
    }
    let key = StreamKey::identity(id, inst);
    let mut out = InstanceResult::for_identity(id, Check::Sample, inst);
    for trial in 0..trials {
        let stream = candidates(cfg, &key, id, trial);
        match first_valid(stream, cfg.max_resample, |p| eval_pair(id, inst, p, mutation)) {
            Ok((p, (l, r))) => {
                out.trials += 1;
                if l != r {
                    return Ok(out.fail(&p, l, r));
                }
            }
            Err(Error::SamplingExhausted(m)) => {
                return Ok(out.skip(format!("trial {trial}: every candidate hit a pole after {m} resamples")));
            }
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::Status;

    #[test]
    fn documented_instances_pass() {
        let cfg = SampleConfig::default();
        let r = verify_instance(IdentityId::QGosper1, &Instance::new(3), 10, &cfg).unwrap();
        assert_eq!((r.status, r.trials), (Status::Pass, 10));
        let r = verify_instance(IdentityId::Thm1, &Instance::new(4).with_ell(2), 10, &cfg).unwrap();
        assert_eq!(r.status, Status::Pass);
    }

    #[test]
    fn mutated_exponent_fails_with_counterexample() {
        let cfg = SampleConfig::default();
        let r = verify_instance_with(IdentityId::QGosper1, &Instance::new(2), 10, &cfg, Some(Mutation::ExponentUp))
            .unwrap();
        assert_eq!(r.status, Status::Fail);
        let c = r.counterexample.unwrap();
        assert_ne!(c.lhs, c.rhs);
        assert!(c.s.is_some());
    }

    #[test]
    fn arity_is_checked_first() {
        let cfg = SampleConfig::default();
        assert!(matches!(verify_instance(IdentityId::Thm1, &Instance::new(1), 1, &cfg), Err(Error::Arity(_))));
        assert!(verify_instance(IdentityId::Gosper1, &Instance::new(1), 0, &cfg).is_err());
    }
}
