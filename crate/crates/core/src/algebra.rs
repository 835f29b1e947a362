//! The scalar backends every identity is evaluated over.
//!
//! Identity formulas are written once against [`Algebra`]. The same code then
//! runs on exact rationals (verification), on high-precision floats (the
//! `q -> 1` limit checks) and on a degree tracker (grid certification).
//! Values are built only from constants, monomials `c s^h x^e`, binomials
//! `1 - c s^h x^e` and affine forms `c0 + c1 x`, closed under the ring
//! operations and reciprocals.

use crate::error::Error;
use crate::factorials::{self, ClassicalArg, QBase, QFactorArg};
use crate::numerics::{pow_int, ExactRational, HighPrecisionFloat};

pub trait Algebra {
    type Value: Clone;

    fn constant(&self, c: &ExactRational) -> Self::Value;

    /// `c * s^h * x^e`.
    fn monomial(&self, c: &ExactRational, h: i64, e: i64) -> Self::Value;

    /// `1 - c * s^h * x^e`.
    fn binomial(&self, c: &ExactRational, h: i64, e: i64) -> Self::Value;

    /// `c0 + c1 * x`.
    fn affine(&self, c0: &ExactRational, c1: &ExactRational) -> Self::Value;

    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Self::Value;

    /// Fails with a pole (or ill-conditioning) error naming `what` when `a`
    /// vanishes.
    fn recip(&self, a: &Self::Value, what: impl FnOnce() -> String) -> Result<Self::Value, Error>;

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.neg(b))
    }

    fn div(
        &self,
        a: &Self::Value,
        b: &Self::Value,
        what: impl FnOnce() -> String,
    ) -> Result<Self::Value, Error> {
        Ok(self.mul(a, &self.recip(b, what)?))
    }

    fn one(&self) -> Self::Value {
        self.constant(&ExactRational::one())
    }

    fn int(&self, v: i64) -> Self::Value {
        self.constant(&ExactRational::from_integer(v))
    }

    /// `(arg; base)_n`. Overridable so a backend can intercept individual
    /// brackets.
    fn q_pochhammer(&self, arg: &QFactorArg, base: QBase, n: i64) -> Result<Self::Value, Error>
    where
        Self: Sized,
    {
        factorials::q_pochhammer_in(self, arg, base, n)
    }

    /// `(arg)_n`.
    fn rising(&self, arg: &ClassicalArg, n: i64) -> Result<Self::Value, Error>
    where
        Self: Sized,
    {
        factorials::rising_factorial_in(self, arg, n)
    }
}

/// Exact evaluation at a rational point.
#[derive(Clone, Debug)]
pub struct ExactAlgebra {
    s: Option<ExactRational>,
    x: ExactRational,
}

impl ExactAlgebra {
    pub fn new(s: Option<ExactRational>, x: ExactRational) -> Self {
        ExactAlgebra { s, x }
    }

    fn s(&self) -> &ExactRational {
        self.s.as_ref().expect("s-dependent factor evaluated at a point without s")
    }

    fn mono(&self, c: &ExactRational, h: i64, e: i64) -> ExactRational {
        let mut v = c.clone();
        if h != 0 {
            v = v * pow_int(self.s(), h).expect("s is nonzero");
        }
        if e != 0 {
            v = v * pow_int(&self.x, e).expect("x is nonzero");
        }
        v
    }
}

impl Algebra for ExactAlgebra {
    type Value = ExactRational;

    fn constant(&self, c: &ExactRational) -> ExactRational {
        c.clone()
    }

    fn monomial(&self, c: &ExactRational, h: i64, e: i64) -> ExactRational {
        if c.is_zero() {
            return ExactRational::zero();
        }
        self.mono(c, h, e)
    }

    fn binomial(&self, c: &ExactRational, h: i64, e: i64) -> ExactRational {
        if c.is_zero() {
            return ExactRational::one();
        }
        ExactRational::one() - self.mono(c, h, e)
    }

    fn affine(&self, c0: &ExactRational, c1: &ExactRational) -> ExactRational {
        c0 + c1 * &self.x
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

    fn sub(&self, a: &ExactRational, b: &ExactRational) -> ExactRational {
        a - b
    }

    fn recip(&self, a: &ExactRational, what: impl FnOnce() -> String) -> Result<ExactRational, Error> {
        if a.is_zero() {
            return Err(Error::Pole(what()));
        }
        a.recip()
    }
}

/// Floating evaluation at `(s, x)` with a near-zero guard on every divisor.
#[derive(Clone, Debug)]
pub struct FloatAlgebra {
    s: HighPrecisionFloat,
    x: HighPrecisionFloat,
    prec: usize,
}

impl FloatAlgebra {
    pub fn new(s: HighPrecisionFloat, x: HighPrecisionFloat, prec: usize) -> Self {
        FloatAlgebra { s, x, prec }
    }

    fn c(&self, c: &ExactRational) -> HighPrecisionFloat {
        HighPrecisionFloat::from_rational(c, self.prec)
    }

    fn mono(&self, c: &ExactRational, h: i64, e: i64) -> HighPrecisionFloat {
        let mut v = self.c(c);
        if h != 0 {
            v = v.mul(&self.s.powi(h));
        }
        if e != 0 {
            v = v.mul(&self.x.powi(e));
        }
        v
    }
}

impl Algebra for FloatAlgebra {
    type Value = HighPrecisionFloat;

    fn constant(&self, c: &ExactRational) -> HighPrecisionFloat {
        self.c(c)
    }

    fn monomial(&self, c: &ExactRational, h: i64, e: i64) -> HighPrecisionFloat {
        self.mono(c, h, e)
    }

    fn binomial(&self, c: &ExactRational, h: i64, e: i64) -> HighPrecisionFloat {
        HighPrecisionFloat::from_i64(1, self.prec).sub(&self.mono(c, h, e))
    }

    fn affine(&self, c0: &ExactRational, c1: &ExactRational) -> HighPrecisionFloat {
        self.c(c0).add(&self.c(c1).mul(&self.x))
    }

    fn add(&self, a: &HighPrecisionFloat, b: &HighPrecisionFloat) -> HighPrecisionFloat {
        a.add(b)
    }

    fn mul(&self, a: &HighPrecisionFloat, b: &HighPrecisionFloat) -> HighPrecisionFloat {
        a.mul(b)
    }

    fn neg(&self, a: &HighPrecisionFloat) -> HighPrecisionFloat {
        a.neg()
    }

    fn sub(&self, a: &HighPrecisionFloat, b: &HighPrecisionFloat) -> HighPrecisionFloat {
        a.sub(b)
    }

    fn recip(
        &self,
        a: &HighPrecisionFloat,
        what: impl FnOnce() -> String,
    ) -> Result<HighPrecisionFloat, Error> {
        if a.below_pow2(self.prec / 2) {
            return Err(Error::IllConditioned(format!("divisor {} near zero: {}", a, what())));
        }
        Ok(a.recip())
    }
}
