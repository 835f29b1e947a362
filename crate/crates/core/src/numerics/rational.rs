use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactRational(BigRational);

impl ExactRational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        ExactRational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn from_integer(v: i64) -> Self {
        ExactRational(BigRational::from_integer(v.into()))
    }

    pub fn from_bigints(numer: BigInt, denom: BigInt) -> Result<Self, Error> {
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(ExactRational(BigRational::new(numer, denom)))
    }

    pub fn zero() -> Self {
        ExactRational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactRational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn abs(&self) -> Self {
        ExactRational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::Pole("reciprocal of zero".into()));
        }
        Ok(ExactRational(self.0.recip()))
    }

    /// Exact integer power; negative exponents invert.
    pub fn pow(&self, m: i64) -> Result<Self, Error> {
        pow_int(self, m)
    }

    /// Exact square root when both numerator and denominator are perfect
    /// squares.
    pub fn sqrt_exact(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = self.numer().sqrt();
        let d = self.denom().sqrt();
        if &(&n * &n) == self.numer() && &(&d * &d) == self.denom() {
            Some(ExactRational(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Bit length of max(|numerator|, denominator).
    pub fn height_bits(&self) -> u64 {
        self.numer().bits().max(self.denom().bits())
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }
}

/// Exact `b^m` for integer `m`.
pub fn pow_int(b: &ExactRational, m: i64) -> Result<ExactRational, Error> {
    if m == 0 {
        return Ok(ExactRational::one());
    }
    if b.is_zero() {
        return if m < 0 {
            Err(Error::ZeroToNegativePower(m))
        } else {
            Ok(ExactRational::zero())
        };
    }
    let e = m.unsigned_abs();
    let e = u32::try_from(e).map_err(|_| Error::Overflow(format!("exponent {m}")))?;
    let numer = num_traits::pow(b.numer().clone(), e as usize);
    let denom = num_traits::pow(b.denom().clone(), e as usize);
    // Already coprime: powers of coprime integers stay coprime.
    let r = if m > 0 {
        BigRational::new_raw(numer, denom)
    } else if numer.is_negative() {
        BigRational::new_raw(-denom, -numer)
    } else {
        BigRational::new_raw(denom, numer)
    };
    Ok(ExactRational(r))
}

impl From<BigRational> for ExactRational {
    fn from(r: BigRational) -> Self {
        ExactRational(r)
    }
}

impl From<i64> for ExactRational {
    fn from(v: i64) -> Self {
        ExactRational::from_integer(v)
    }
}

impl From<BigInt> for ExactRational {
    fn from(v: BigInt) -> Self {
        ExactRational(BigRational::from_integer(v))
    }
}

/// Always `p/q`, integers included, so output is uniform for tooling.
impl fmt::Display for ExactRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for ExactRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((p, q)) => ExactRational::from_bigints(parse_int(p)?, parse_int(q)?),
            None => Ok(ExactRational::from(parse_int(s)?)),
        }
    }
}

impl serde::Serialize for ExactRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for ExactRational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Neg for ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-self.0)
    }
}

impl Neg for &ExactRational {
    type Output = ExactRational;
    fn neg(self) -> ExactRational {
        ExactRational(-&self.0)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&ExactRational> for ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: &ExactRational) -> ExactRational {
                ExactRational(self.0.$method(&rhs.0))
            }
        }
        impl $trait<ExactRational> for &ExactRational {
            type Output = ExactRational;
            fn $method(self, rhs: ExactRational) -> ExactRational {
                ExactRational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Panics on a zero divisor like the underlying type; callers that can see a
// zero go through `recip`.
forward_binop!(Div, div);
