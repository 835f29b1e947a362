use serde::{Deserialize, Serialize};

use super::rational::{pow_int, ExactRational};
use crate::error::Error;

/// An exact evaluation point for the basic identities.
///
/// `s` stands for `q^{1/2}`; `q` itself is always derived as `s*s`, so every
/// power `q^{h/2}` is the integer power `s^h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QPoint {
    s: ExactRational,
    x: ExactRational,
}

impl QPoint {
    pub fn new(s: ExactRational, x: ExactRational) -> Result<Self, Error> {
        if s.is_zero() || s.abs().is_one() {
            return Err(Error::InvalidPoint(format!("s must avoid 0 and ±1, got {s}")));
        }
        if x.is_zero() {
            return Err(Error::InvalidPoint("x must be nonzero".into()));
        }
        Ok(QPoint { s, x })
    }

    pub fn s(&self) -> &ExactRational {
        &self.s
    }

    pub fn x(&self) -> &ExactRational {
        &self.x
    }

    pub fn q(&self) -> ExactRational {
        &self.s * &self.s
    }

    /// `q^{h/2}`, i.e. `s^h`.
    pub fn half_power(&self, h: i64) -> ExactRational {
        pow_int(&self.s, h).expect("s is nonzero by construction")
    }
}

pub fn half_power(p: &QPoint, h: i64) -> ExactRational {
    p.half_power(h)
}
