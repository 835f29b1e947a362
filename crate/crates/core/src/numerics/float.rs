//! Binary floating point at a caller-chosen precision, plus the constants and
//! the Gamma function the limit checks need.
//!
//! Arithmetic is delegated to `astro-float`, which rounds every operation
//! correctly to the requested precision. Values carry their precision; binary
//! operations work at the larger of the two.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Mutex;

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word, WORD_BIT_SIZE};
use num_bigint::{BigInt, Sign as BigSign};
use num_traits::{One, Zero};

use super::rational::ExactRational;
use crate::error::Error;

pub const DEFAULT_PRECISION: usize = 256;

const RM: RoundingMode = RoundingMode::ToEven;

/// Extra working bits used inside [`gamma_hp`].
pub const GAMMA_GUARD_BITS: usize = 64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

#[derive(Clone, Debug)]
pub struct HighPrecisionFloat {
    value: BigFloat,
    prec: usize,
}

impl HighPrecisionFloat {
    fn wrap(value: BigFloat, prec: usize) -> Self {
        HighPrecisionFloat { value, prec }
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    pub fn zero(prec: usize) -> Self {
        Self::wrap(BigFloat::new(prec), prec)
    }

    pub fn from_i64(v: i64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_i64(v, prec), prec)
    }

    pub fn from_f64(v: f64, prec: usize) -> Self {
        Self::wrap(BigFloat::from_f64(v, prec), prec)
    }

    /// Converts with a single rounding: numerator and denominator are built
    /// exactly, then divided at `prec` bits.
    pub fn from_rational(r: &ExactRational, prec: usize) -> Self {
        let n = bigint_to_bigfloat(r.numer());
        let d = bigint_to_bigfloat(r.denom());
        Self::wrap(n.div(&d, prec, RM), prec)
    }

    /// The exact dyadic rational this float represents.
    pub fn to_rational(&self) -> Option<ExactRational> {
        if self.value.is_zero() {
            return Some(ExactRational::zero());
        }
        let (words, _, sign, exp, _) = self.value.as_raw_parts()?;
        let mut m = BigInt::zero();
        for w in words.iter().rev() {
            m = (m << WORD_BIT_SIZE) + BigInt::from(*w);
        }
        if sign == Sign::Neg {
            m = -m;
        }
        let shift = exp as i64 - (words.len() * WORD_BIT_SIZE) as i64;
        let r = if shift >= 0 {
            ExactRational::from(m << shift as usize)
        } else {
            ExactRational::from_bigints(m, BigInt::one() << (-shift) as usize).ok()?
        };
        Some(r)
    }

    pub fn to_f64(&self) -> f64 {
        if self.value.is_nan() {
            return f64::NAN;
        }
        if self.value.is_inf_pos() {
            return f64::INFINITY;
        }
        if self.value.is_inf_neg() {
            return f64::NEG_INFINITY;
        }
        self.to_rational().map(|r| r.to_f64()).unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        !(self.value.is_nan() || self.value.is_inf())
    }

    pub fn is_negative(&self) -> bool {
        self.value.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.value.is_int()
    }

    /// Binary exponent `e` with `2^{e-1} <= |v| < 2^e`; `None` for zero.
    pub fn exponent(&self) -> Option<i64> {
        if self.value.is_zero() {
            None
        } else {
            self.value.exponent().map(i64::from)
        }
    }

    /// True when `|self| < 2^{-bits}`.
    pub fn below_pow2(&self, bits: usize) -> bool {
        match self.exponent() {
            None => true,
            Some(e) => e <= -(bits as i64),
        }
    }

    pub fn neg(&self) -> Self {
        Self::wrap(self.value.neg(), self.prec)
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.prec)
    }

    pub fn add(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self::wrap(self.value.add(&o.value, p, RM), p)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self::wrap(self.value.sub(&o.value, p, RM), p)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self::wrap(self.value.mul(&o.value, p, RM), p)
    }

    pub fn div(&self, o: &Self) -> Self {
        let p = self.prec.max(o.prec);
        Self::wrap(self.value.div(&o.value, p, RM), p)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.prec, RM), self.prec)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.prec, RM), self.prec)
    }

    pub fn ln(&self) -> Self {
        with_consts(|cc| Self::wrap(self.value.ln(self.prec, RM, cc), self.prec))
    }

    pub fn exp(&self) -> Self {
        with_consts(|cc| Self::wrap(self.value.exp(self.prec, RM, cc), self.prec))
    }

    pub fn sin(&self) -> Self {
        with_consts(|cc| Self::wrap(self.value.sin(self.prec, RM, cc), self.prec))
    }

    pub fn powi(&self, m: i64) -> Self {
        let p = Self::wrap(self.value.powi(m.unsigned_abs() as usize, self.prec, RM), self.prec);
        if m < 0 {
            p.recip()
        } else {
            p
        }
    }

    /// `self^e` for a positive base.
    pub fn powf(&self, e: &Self) -> Self {
        let p = self.prec.max(e.prec);
        with_consts(|cc| Self::wrap(self.value.pow(&e.value, p, RM, cc), p))
    }

    /// Rounds (or widens) to `prec` bits.
    pub fn with_precision(&self, prec: usize) -> Self {
        let mut v = self.value.clone();
        // Widening never fails; narrowing rounds.
        let _ = v.set_precision(prec, RM);
        Self::wrap(v, prec)
    }

    pub fn pi(prec: usize) -> Self {
        with_consts(|cc| Self::wrap(cc.pi(prec, RM), prec))
    }

    /// Unit in the last place of `self` at its own precision.
    pub fn ulp(&self) -> Self {
        let e = self.exponent().unwrap_or(0);
        let two = Self::from_i64(2, self.prec);
        two.powi(e - self.prec as i64)
    }
}

impl PartialEq for HighPrecisionFloat {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for HighPrecisionFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for HighPrecisionFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

fn bigint_to_bigfloat(v: &BigInt) -> BigFloat {
    let (sign, digits) = v.to_u64_digits();
    let bits = (digits.len().max(1) * 64) + 64;
    let base = BigFloat::from_u128(1u128 << 64, 128);
    let mut acc = BigFloat::new(bits);
    for d in digits.iter().rev() {
        acc = acc.mul(&base, bits, RM).add(&BigFloat::from_u64(*d as Word, 64), bits, RM);
    }
    if sign == BigSign::Minus {
        acc = acc.neg();
    }
    acc
}

/// Even-index Bernoulli numbers `B_0, B_2, B_4, ...`, computed exactly and
/// memoized.
fn bernoulli_even(count: usize) -> Vec<ExactRational> {
    static CACHE: Mutex<Vec<ExactRational>> = Mutex::new(Vec::new());
    let mut cache = CACHE.lock().unwrap_or_else(|e| e.into_inner());
    if cache.len() < count {
        // Akiyama-Tanigawa yields B_0..B_{2count-1}.
        let total = 2 * count;
        let mut a: Vec<ExactRational> = Vec::with_capacity(total);
        let mut all = Vec::with_capacity(total);
        for m in 0..total {
            a.push(ExactRational::new(1, m as i64 + 1));
            for j in (1..=m).rev() {
                let diff = &a[j - 1] - &a[j];
                a[j - 1] = diff * ExactRational::from_integer(j as i64);
            }
            all.push(a[0].clone());
        }
        *cache = all.into_iter().step_by(2).collect();
    }
    cache[..count].to_vec()
}

/// Gamma function at `prec` bits.
///
/// For `z >= 1/2` the argument is shifted to `y = z + N >= prec/4` and
/// `ln Gamma(y)` is taken from the Stirling series, truncated at the first term
/// below `2^-(prec+64)`; for real `y > 0` the remainder is bounded by that
/// term. Everything runs with [`GAMMA_GUARD_BITS`] extra bits, so after the
/// final rounding the relative error is below `2^(1-prec)`. Arguments below
/// `1/2` go through the reflection formula, which at most doubles the bound.
pub fn gamma_hp(z: &HighPrecisionFloat, prec: usize) -> Result<HighPrecisionFloat, Error> {
    if !z.is_finite() {
        return Err(Error::PoleOfGamma(z.to_string()));
    }
    let w = prec + GAMMA_GUARD_BITS;
    let zw = z.with_precision(w);
    let half = HighPrecisionFloat::from_rational(&ExactRational::new(1, 2), w);
    if zw < half {
        if zw.is_integer() {
            return Err(Error::PoleOfGamma(z.to_string()));
        }
        let pi = HighPrecisionFloat::pi(w);
        let sin = pi.mul(&zw).sin();
        if sin.below_pow2(w / 2) {
            return Err(Error::PoleOfGamma(z.to_string()));
        }
        let one = HighPrecisionFloat::from_i64(1, w);
        let g = gamma_right(&one.sub(&zw), w);
        return Ok(pi.div(&sin.mul(&g)).with_precision(prec));
    }
    Ok(gamma_right(&zw, w).with_precision(prec))
}

fn gamma_right(z: &HighPrecisionFloat, w: usize) -> HighPrecisionFloat {
    let target = (w / 4).max(16) as f64;
    let zf = z.to_f64();
    let shift = if zf < target { (target - zf).ceil() as i64 } else { 0 };
    let one = HighPrecisionFloat::from_i64(1, w);
    let mut denom = one.clone();
    for j in 0..shift {
        denom = denom.mul(&z.add(&HighPrecisionFloat::from_i64(j, w)));
    }
    let y = z.add(&HighPrecisionFloat::from_i64(shift, w));
    let half = HighPrecisionFloat::from_rational(&ExactRational::new(1, 2), w);
    let two_pi = HighPrecisionFloat::pi(w).mul(&HighPrecisionFloat::from_i64(2, w));
    let mut lg = y.sub(&half).mul(&y.ln()).sub(&y).add(&half.mul(&two_pi.ln()));

    let y2 = y.mul(&y);
    let mut count = 32;
    'outer: loop {
        let b = bernoulli_even(count + 1);
        let mut m = 1;
        let mut ypow = y.clone();
        let mut acc = HighPrecisionFloat::zero(w);
        while m <= count {
            let coeff = &b[m] / ExactRational::from_integer((2 * m * (2 * m - 1)) as i64);
            let term = HighPrecisionFloat::from_rational(&coeff, w).div(&ypow);
            if term.below_pow2(w) {
                lg = lg.add(&acc);
                break 'outer;
            }
            acc = acc.add(&term);
            ypow = ypow.mul(&y2);
            m += 1;
        }
        count *= 2;
    }
    lg.exp().div(&denom)
}
