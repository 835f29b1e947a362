//! Exact rationals, evaluation points, and high-precision floats.

mod float;
mod point;
mod rational;

pub use float::{gamma_hp, HighPrecisionFloat, DEFAULT_PRECISION, GAMMA_GUARD_BITS};
pub use point::{half_power, QPoint};
pub use rational::{pow_int, ExactRational};
