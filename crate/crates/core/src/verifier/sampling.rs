//! Deterministic random points.
//!
//! Every trial owns its own ChaCha stream, seeded from the suite seed and the
//! trial's coordinates, so the points do not depend on which worker runs the
//! trial or in what order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::identities::{check_arity, check_point, IdentityId, Instance, Kind, Point};
use crate::numerics::{ExactRational, QPoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleConfig {
    pub seed: u64,
    /// Largest bit length of sampled numerators and denominators.
    pub bitsize: u32,
    /// Pole rejections allowed per trial.
    pub max_resample: u32,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { seed: 0, bitsize: 16, max_resample: 100 }
    }
}

impl SampleConfig {
    pub fn new(seed: u64) -> Self {
        SampleConfig { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<(), Error> {
        if !(2..=62).contains(&self.bitsize) {
            return Err(Error::Parse(format!("bitsize must be in 2..=62, got {}", self.bitsize)));
        }
        Ok(())
    }
}

/// Coordinates of one point stream: a tag naming the check plus the instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct StreamKey {
    pub tag: u64,
    pub inst: Instance,
}

impl StreamKey {
    pub fn identity(id: IdentityId, inst: &Instance) -> Self {
        StreamKey { tag: id as u64, inst: *inst }
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn opt(v: Option<i64>) -> u64 {
    v.map_or(0, |v| v as u64 + 1)
}

pub(crate) fn trial_rng(cfg: &SampleConfig, key: &StreamKey, trial: u32) -> ChaCha8Rng {
    let parts = [key.tag, key.inst.n as u64, opt(key.inst.ell), opt(key.inst.k), trial as u64];
    let h = parts.iter().fold(splitmix64(cfg.seed), |h, p| splitmix64(h ^ p));
    ChaCha8Rng::seed_from_u64(h)
}

fn unit_interval(rng: &mut ChaCha8Rng, bits: u32) -> ExactRational {
    let top = 1i64 << bits;
    let q = rng.gen_range(2..top);
    let p = rng.gen_range(1..q);
    ExactRational::new(p, q)
}

fn nonzero(rng: &mut ChaCha8Rng, bits: u32) -> ExactRational {
    let top = 1i64 << bits;
    let p = rng.gen_range(1..top);
    let q = rng.gen_range(1..top);
    let sign = if rng.gen::<bool>() { 1 } else { -1 };
    ExactRational::new(sign * p, q)
}

/// One raw candidate of the right shape for `kind`, pole or not.
pub(crate) fn draw(rng: &mut ChaCha8Rng, id: IdentityId, bits: u32) -> Point {
    match (id, id.kind()) {
        (IdentityId::Phi65, _) => {
            let s = unit_interval(rng, bits);
            let root = nonzero(rng, bits);
            let b = nonzero(rng, bits);
            let c = nonzero(rng, bits);
            Point::Phi65 { point: QPoint::new(s, root).expect("s in (0, 1), root nonzero"), b, c }
        }
        (_, Kind::Classical) => Point::Classical(nonzero(rng, bits)),
        _ => {
            let s = unit_interval(rng, bits);
            Point::Q(QPoint::new(s, nonzero(rng, bits)).expect("s in (0, 1), x nonzero"))
        }
    }
}

/// The candidate stream for one trial.
pub(crate) fn candidates(cfg: &SampleConfig, key: &StreamKey, id: IdentityId, trial: u32) -> impl Iterator<Item = Point> {
    let mut rng = trial_rng(cfg, key, trial);
    let bits = cfg.bitsize;
    std::iter::repeat_with(move || draw(&mut rng, id, bits))
}

/// Takes candidates until `accept` stops reporting a pole, at most
/// `1 + max_resample` of them. Returns the point with whatever `accept`
/// produced, or `SamplingExhausted`.
pub(crate) fn first_valid<T>(
    mut stream: impl Iterator<Item = Point>,
    max_resample: u32,
    mut accept: impl FnMut(&Point) -> Result<T, Error>,
) -> Result<(Point, T), Error> {
    for _ in 0..=max_resample {
        let Some(p) = stream.next() else { break };
        match accept(&p) {
            Ok(v) => return Ok((p, v)),
            Err(e) if e.is_pole() => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::SamplingExhausted(max_resample))
}

/// First pole-free point of `stream` for `(id, inst)`.
pub fn sample_point_from(
    id: IdentityId,
    inst: &Instance,
    cfg: &SampleConfig,
    stream: impl Iterator<Item = Point>,
) -> Result<Point, Error> {
    check_arity(id, inst)?;
    let (p, ()) = first_valid(stream, cfg.max_resample, |p| {
        check_point(id, p)?;
        crate::identities::eval_sides(id, inst, p).map(|_| ())
    })?;
    Ok(p)
}

/// The pole-free point used by trial `trial` of `(id, inst)`.
pub fn sample_point(id: IdentityId, inst: &Instance, cfg: &SampleConfig, trial: u32) -> Result<Point, Error> {
    cfg.validate()?;
    let key = StreamKey::identity(id, inst);
    sample_point_from(id, inst, cfg, candidates(cfg, &key, id, trial))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::is_pole;

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p, q)
    }

    #[test]
    fn deterministic_and_pole_free() {
        let cfg = SampleConfig::new(7);
        let inst = Instance::new(2).with_ell(1);
        for trial in 0..5 {
            let a = sample_point(IdentityId::Thm1, &inst, &cfg, trial).unwrap();
            let b = sample_point(IdentityId::Thm1, &inst, &cfg, trial).unwrap();
            assert_eq!(a, b);
            assert!(!is_pole(IdentityId::Thm1, &inst, &a));
            let s = a.s().unwrap();
            assert!(s > &r(0, 1) && s < &r(1, 1));
            assert!(s.height_bits() <= 32);
        }
        let other = sample_point(IdentityId::Thm1, &inst, &SampleConfig::new(8), 0).unwrap();
        assert_ne!(other, sample_point(IdentityId::Thm1, &inst, &cfg, 0).unwrap());
    }

    #[test]
    fn pole_candidate_is_skipped() {
        // x = s makes 1 - x^2/q vanish on the right side.
        let inst = Instance::new(1).with_ell(1);
        let pole = Point::Q(QPoint::new(r(1, 2), r(1, 2)).unwrap());
        let good = Point::Q(QPoint::new(r(1, 3), r(5, 7)).unwrap());
        assert!(is_pole(IdentityId::Thm1, &inst, &pole));
        let got = sample_point_from(IdentityId::Thm1, &inst, &SampleConfig::default(), [pole, good.clone()].into_iter());
        assert_eq!(got.unwrap(), good);
    }

    #[test]
    fn exhaustion_is_reported() {
        let inst = Instance::new(1).with_ell(1);
        let pole = Point::Q(QPoint::new(r(1, 2), r(1, 2)).unwrap());
        let cfg = SampleConfig { max_resample: 3, ..SampleConfig::default() };
        let got = sample_point_from(IdentityId::Thm1, &inst, &cfg, std::iter::repeat(pole));
        assert_eq!(got, Err(Error::SamplingExhausted(3)));
    }

    #[test]
    fn classical_points_carry_only_x() {
        let p = sample_point(IdentityId::Gosper1, &Instance::new(3), &SampleConfig::default(), 0).unwrap();
        assert!(matches!(p, Point::Classical(_)));
    }

    #[test]
    fn bitsize_is_validated() {
        let cfg = SampleConfig { bitsize: 1, ..SampleConfig::default() };
        assert!(sample_point(IdentityId::Gosper1, &Instance::new(0), &cfg, 0).is_err());
    }
}
