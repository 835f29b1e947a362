//! Deliberately wrong formulas, used to show the harness notices a bad
//! transcription.
//!
//! A mutation rewrites q-shifted factorials as they are built on one side of
//! every q identity, by wrapping the exact backend and overriding its
//! `q_pochhammer` hook.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, ExactAlgebra};
use crate::error::Error;
use crate::factorials::{q_pochhammer_in, QBase, QFactorArg};
use crate::identities::Side;
use crate::numerics::ExactRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// Right side: `x`-bearing arguments pick up an extra factor `q`.
    ExponentUp,
    /// Right side: `x`-bearing arguments lose a factor `q`.
    ExponentDown,
    /// Right side: `x`-bearing arguments change sign.
    SignFlip,
    /// Right side: base `q^3` becomes `q`.
    BaseCubeToLinear,
    /// Left side: base `q` becomes `q^3`.
    BaseLinearToCube,
}

impl Mutation {
    pub const ALL: [Mutation; 5] = [
        Mutation::ExponentUp,
        Mutation::ExponentDown,
        Mutation::SignFlip,
        Mutation::BaseCubeToLinear,
        Mutation::BaseLinearToCube,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::ExponentUp => "exponent-up",
            Mutation::ExponentDown => "exponent-down",
            Mutation::SignFlip => "sign-flip",
            Mutation::BaseCubeToLinear => "base-cube-to-linear",
            Mutation::BaseLinearToCube => "base-linear-to-cube",
        }
    }

    pub fn side(self) -> Side {
        match self {
            Mutation::BaseLinearToCube => Side::Lhs,
            _ => Side::Rhs,
        }
    }

    fn rewrite(self, arg: &QFactorArg, base: QBase) -> (QFactorArg, QBase) {
        let mut arg = arg.clone();
        let mut base = base;
        match self {
            Mutation::ExponentUp if arg.x_exp != 0 => arg.half_exp += 2,
            Mutation::ExponentDown if arg.x_exp != 0 => arg.half_exp -= 2,
            Mutation::SignFlip if arg.x_exp != 0 => arg.coeff = -&arg.coeff,
            Mutation::BaseCubeToLinear if base == QBase::q_pow(3) => base = QBase::q_pow(1),
            Mutation::BaseLinearToCube if base == QBase::q_pow(1) => base = QBase::q_pow(3),
            _ => {}
        }
        (arg, base)
    }
}

impl fmt::Display for Mutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Mutation::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mutation {s:?}")))
    }
}

/// The exact backend with one mutation applied to every q-shifted factorial.
pub(crate) struct MutatedAlgebra {
    pub inner: ExactAlgebra,
    pub mutation: Mutation,
}

impl Algebra for MutatedAlgebra {
    type Value = ExactRational;

    fn constant(&self, c: &ExactRational) -> ExactRational {
        self.inner.constant(c)
    }

    fn monomial(&self, c: &ExactRational, h: i64, e: i64) -> ExactRational {
        self.inner.monomial(c, h, e)
    }

    fn binomial(&self, c: &ExactRational, h: i64, e: i64) -> ExactRational {
        self.inner.binomial(c, h, e)
    }

    fn affine(&self, c0: &ExactRational, c1: &ExactRational) -> ExactRational {
        self.inner.affine(c0, c1)
    }

    fn add(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        a + b
    }

    fn mul(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        a * b
    }

    fn neg(&self, a: &ExactRational) -> ExactRational {
        -a
    }

    fn recip(&self, a: &ExactRational, what: impl FnOnce() -> String) -> Result<ExactRational, Error> {
        self.inner.recip(a, what)
    }

    fn q_pochhammer(&self, arg: &QFactorArg, base: QBase, n: i64) -> Result<ExactRational, Error> {
        let (arg, base) = self.mutation.rewrite(arg, base);
        q_pochhammer_in(self, &arg, base, n)
    }
}
