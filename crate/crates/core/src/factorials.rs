//! Shifted factorials, q-shifted factorials and their fraction forms.
//!
//! Negative indices use the conventions
//! `(x)_{-m} = (-1)^m / prod_{k=1}^{m} (k - x)` and
//! `(a; Q)_{-m} = 1 / prod_{j=1}^{m} (1 - a Q^{-j})`, the unique extensions
//! that satisfy `(a; Q)_n (a Q^n; Q)_{-n} = 1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, ExactAlgebra};
use crate::error::Error;
use crate::numerics::{ExactRational, QPoint};

/// Symbolic argument `coeff * q^{half_exp/2} * x^{x_exp}` of a q-shifted
/// factorial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QFactorArg {
    pub coeff: ExactRational,
    pub half_exp: i64,
    pub x_exp: i64,
}

impl QFactorArg {
    pub fn new(coeff: ExactRational, half_exp: i64, x_exp: i64) -> Self {
        QFactorArg { coeff, half_exp, x_exp }
    }

    /// `q^{h/2}`.
    pub fn q_half(half_exp: i64) -> Self {
        QFactorArg::new(ExactRational::one(), half_exp, 0)
    }

    pub fn constant(c: ExactRational) -> Self {
        QFactorArg::new(c, 0, 0)
    }

    /// The argument multiplied by `base^m`.
    pub fn shifted(&self, base: QBase, m: i64) -> Self {
        let mut coeff = self.coeff.clone();
        if base.negated && m.rem_euclid(2) == 1 {
            coeff = -coeff;
        }
        QFactorArg::new(coeff, self.half_exp + base.half_exp * m, self.x_exp)
    }
}

impl fmt::Display for QFactorArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.half_exp != 0 {
            parts.push(match (self.half_exp % 2 == 0, self.half_exp / 2) {
                (true, 1) => "q".to_string(),
                (true, m) => format!("q^{m}"),
                (false, _) => format!("q^({}/2)", self.half_exp),
            });
        }
        match self.x_exp {
            0 => {}
            1 => parts.push("x".into()),
            e => parts.push(format!("x^{e}")),
        }
        let c = &self.coeff;
        let body = parts.join("*");
        if body.is_empty() {
            return match c.to_i64() {
                Some(v) => write!(f, "{v}"),
                None => write!(f, "{c}"),
            };
        }
        if c.is_one() {
            write!(f, "{body}")
        } else if (-c).is_one() {
            write!(f, "-{body}")
        } else {
            match c.to_i64() {
                Some(v) => write!(f, "{v}*{body}"),
                None => write!(f, "({c})*{body}"),
            }
        }
    }
}

/// Base `±q^{half_exp/2}` of a q-shifted factorial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QBase {
    half_exp: i64,
    negated: bool,
}

impl QBase {
    pub fn new(half_exp: i64, negated: bool) -> Result<Self, Error> {
        if half_exp == 0 {
            return Err(Error::InvalidPoint("q-shifted factorial base must not be ±1".into()));
        }
        Ok(QBase { half_exp, negated })
    }

    /// The base `q^m`.
    pub const fn q_pow(m: i64) -> Self {
        assert!(m != 0);
        QBase { half_exp: 2 * m, negated: false }
    }

    pub fn half_exp(&self) -> i64 {
        self.half_exp
    }

    pub fn negated(&self) -> bool {
        self.negated
    }

    pub fn with_half_exp(self, half_exp: i64) -> Self {
        QBase { half_exp, ..self }
    }
}

impl fmt::Display for QBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arg = QFactorArg::q_half(self.half_exp);
        if self.negated {
            write!(f, "-{arg}")
        } else {
            write!(f, "{arg}")
        }
    }
}

/// Affine argument `c0 + c1 * x` of a classical shifted factorial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassicalArg {
    pub c0: ExactRational,
    pub c1: ExactRational,
}

impl ClassicalArg {
    pub fn new(c0: ExactRational, c1: ExactRational) -> Self {
        ClassicalArg { c0, c1 }
    }

    pub fn constant(c0: ExactRational) -> Self {
        ClassicalArg::new(c0, ExactRational::zero())
    }

    pub fn shifted(&self, by: i64) -> Self {
        ClassicalArg::new(&self.c0 + ExactRational::from_integer(by), self.c1.clone())
    }
}

impl fmt::Display for ClassicalArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c1.is_zero() {
            write!(f, "{}", self.c0)
        } else {
            write!(f, "{} + ({})x", self.c0, self.c1)
        }
    }
}

pub(crate) fn rising_factorial_in<A: Algebra>(alg: &A, arg: &ClassicalArg, n: i64) -> Result<A::Value, Error> {
    let mut acc = alg.one();
    if n >= 0 {
        for k in 0..n {
            let f = arg.shifted(k);
            acc = alg.mul(&acc, &alg.affine(&f.c0, &f.c1));
        }
        return Ok(acc);
    }
    let m = -n;
    for k in 1..=m {
        // k - arg
        let f = alg.affine(&(ExactRational::from_integer(k) - &arg.c0), &(-&arg.c1));
        acc = alg.mul(&acc, &f);
    }
    if m % 2 == 1 {
        acc = alg.neg(&acc);
    }
    alg.recip(&acc, || format!("({arg})_{n} has a vanishing factor"))
}

pub(crate) fn q_pochhammer_in<A: Algebra>(alg: &A, arg: &QFactorArg, base: QBase, n: i64) -> Result<A::Value, Error> {
    let mut acc = alg.one();
    if n >= 0 {
        for i in 0..n {
            let a = arg.shifted(base, i);
            acc = alg.mul(&acc, &alg.binomial(&a.coeff, a.half_exp, a.x_exp));
        }
        return Ok(acc);
    }
    for j in 1..=-n {
        let a = arg.shifted(base, -j);
        acc = alg.mul(&acc, &alg.binomial(&a.coeff, a.half_exp, a.x_exp));
    }
    alg.recip(&acc, || format!("({arg}; {base})_{n} has a vanishing factor"))
}

pub(crate) fn fraction_form_in<A: Algebra>(
    alg: &A,
    numer: &[QFactorArg],
    denom: &[QFactorArg],
    base: QBase,
    n: i64,
) -> Result<A::Value, Error> {
    let mut acc = alg.one();
    for a in numer {
        acc = alg.mul(&acc, &alg.q_pochhammer(a, base, n)?);
    }
    for a in denom {
        let d = alg.q_pochhammer(a, base, n)?;
        acc = alg.div(&acc, &d, || format!("({a}; {base})_{n} vanishes"))?;
    }
    Ok(acc)
}

pub(crate) fn classical_fraction_form_in<A: Algebra>(
    alg: &A,
    numer: &[ClassicalArg],
    denom: &[ClassicalArg],
    n: i64,
) -> Result<A::Value, Error> {
    let mut acc = alg.one();
    for a in numer {
        acc = alg.mul(&acc, &alg.rising(a, n)?);
    }
    for a in denom {
        let d = alg.rising(a, n)?;
        acc = alg.div(&acc, &d, || format!("({a})_{n} vanishes"))?;
    }
    Ok(acc)
}

fn constant_algebra() -> ExactAlgebra {
    ExactAlgebra::new(None, ExactRational::one())
}

fn point_algebra(p: &QPoint) -> ExactAlgebra {
    ExactAlgebra::new(Some(p.s().clone()), p.x().clone())
}

/// Shifted factorial `(x)_n` for any integer `n`.
pub fn rising_factorial(x: &ExactRational, n: i64) -> Result<ExactRational, Error> {
    rising_factorial_in(&constant_algebra(), &ClassicalArg::constant(x.clone()), n)
}

/// q-shifted factorial `(arg; base)_n` evaluated at `p`.
pub fn q_pochhammer(arg: &QFactorArg, base: QBase, n: i64, p: &QPoint) -> Result<ExactRational, Error> {
    q_pochhammer_in(&point_algebra(p), arg, base, n)
}

/// `prod (numer; base)_n / prod (denom; base)_n` at `p`.
pub fn fraction_form(
    numer: &[QFactorArg],
    denom: &[QFactorArg],
    base: QBase,
    n: i64,
    p: &QPoint,
) -> Result<ExactRational, Error> {
    fraction_form_in(&point_algebra(p), numer, denom, base, n)
}

/// `prod (numer)_n / prod (denom)_n`.
pub fn classical_fraction_form(
    numer: &[ExactRational],
    denom: &[ExactRational],
    n: i64,
) -> Result<ExactRational, Error> {
    let wrap = |v: &[ExactRational]| v.iter().cloned().map(ClassicalArg::constant).collect::<Vec<_>>();
    classical_fraction_form_in(&constant_algebra(), &wrap(numer), &wrap(denom), n)
}
