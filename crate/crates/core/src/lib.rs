//! Exact verification of terminating basic and classical hypergeometric
//! summation identities.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod factorials;
pub mod identities;
pub mod numerics;
pub mod series;
pub mod verifier;

pub use error::{Error, Result};
