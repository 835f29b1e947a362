//! Terminating hypergeometric and basic hypergeometric series.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, ExactAlgebra};
use crate::error::Error;
use crate::factorials::{QBase, QFactorArg};
use crate::numerics::{ExactRational, QPoint};

/// `_{1+r}F_s[a_0..a_r; b_1..b_s | z]` terminated by the upper parameter at
/// index `terminating`, which must be a nonpositive integer `-n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HyperSpec {
    pub upper: Vec<ExactRational>,
    pub lower: Vec<ExactRational>,
    pub z: ExactRational,
    pub terminating: usize,
}

impl HyperSpec {
    /// Number of terms minus one.
    pub fn termination_n(&self) -> Result<i64, Error> {
        let a = self
            .upper
            .get(self.terminating)
            .ok_or_else(|| Error::NonTerminating(format!("no upper parameter at index {}", self.terminating)))?;
        match a.to_i64() {
            Some(v) if v <= 0 => Ok(-v),
            _ => Err(Error::NonTerminating(format!("upper parameter {a} is not a nonpositive integer"))),
        }
    }
}

/// `_{1+r}phi_s` over `base`, terminated by the upper argument at index
/// `terminating`, which must equal `base^{-n}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QHyperSpec {
    pub upper: Vec<QFactorArg>,
    pub lower: Vec<QFactorArg>,
    pub z: QFactorArg,
    pub base: QBase,
    pub terminating: usize,
}

impl QHyperSpec {
    pub fn termination_n(&self) -> Result<i64, Error> {
        let a = self
            .upper
            .get(self.terminating)
            .ok_or_else(|| Error::NonTerminating(format!("no upper argument at index {}", self.terminating)))?;
        let bh = self.base.half_exp();
        let not_term = || Error::NonTerminating(format!("{a} is not a nonpositive power of {}", self.base));
        if a.x_exp != 0 || a.half_exp % bh != 0 {
            return Err(not_term());
        }
        let n = -a.half_exp / bh;
        if n < 0 {
            return Err(not_term());
        }
        let sign = if self.base.negated() && n % 2 == 1 { -1 } else { 1 };
        if a.coeff != ExactRational::from_integer(sign) {
            return Err(not_term());
        }
        Ok(n)
    }

    /// `s - r` in `{(-1)^k q^{k choose 2}}^{s-r}`.
    pub fn balance(&self) -> i64 {
        self.lower.len() as i64 - (self.upper.len() as i64 - 1)
    }
}

/// `sum_{k=0}^{n} term(k)` in any algebra.
pub fn sum_in<A: Algebra>(
    alg: &A,
    n: i64,
    mut term: impl FnMut(i64) -> Result<A::Value, Error>,
) -> Result<A::Value, Error> {
    let mut acc = alg.int(0);
    for k in 0..=n {
        acc = alg.add(&acc, &term(k)?);
    }
    Ok(acc)
}

/// Direct summation of caller-supplied terms.
pub fn eval_custom_sum(
    n: u32,
    mut term: impl FnMut(u32) -> Result<ExactRational, Error>,
) -> Result<ExactRational, Error> {
    let mut acc = ExactRational::zero();
    for k in 0..=n {
        acc = acc + term(k)?;
    }
    Ok(acc)
}

/// Exact value of a terminating `F` series, accumulated with the term ratio
/// `z prod(a_i + k) / ((1 + k) prod(b_j + k))`.
pub fn eval_hyper(spec: &HyperSpec) -> Result<ExactRational, Error> {
    let n = spec.termination_n()?;
    let mut term = ExactRational::one();
    let mut acc = ExactRational::one();
    for k in 0..n {
        let kk = ExactRational::from_integer(k);
        let mut num = spec.z.clone();
        for a in &spec.upper {
            num = num * (a + &kk);
        }
        let mut den = ExactRational::from_integer(k + 1);
        for b in &spec.lower {
            let f = b + &kk;
            if f.is_zero() {
                return Err(Error::Pole(format!("lower parameter {b} gives a zero factor at k = {k}")));
            }
            den = den * f;
        }
        term = term * num / den;
        acc = acc + &term;
    }
    Ok(acc)
}

pub(crate) fn eval_qhyper_in<A: Algebra>(alg: &A, spec: &QHyperSpec) -> Result<A::Value, Error> {
    let n = spec.termination_n()?;
    let balance = spec.balance();
    let base = spec.base;
    let unit = QFactorArg::q_half(0);
    let z = alg.monomial(&spec.z.coeff, spec.z.half_exp, spec.z.x_exp);
    let mut term = alg.one();
    let mut acc = alg.one();
    for k in 0..n {
        let mut num = z.clone();
        for a in &spec.upper {
            let ak = a.shifted(base, k);
            num = alg.mul(&num, &alg.binomial(&ak.coeff, ak.half_exp, ak.x_exp));
        }
        let qk1 = unit.shifted(base, k + 1);
        let mut den = alg.binomial(&qk1.coeff, qk1.half_exp, 0);
        for b in &spec.lower {
            let bk = b.shifted(base, k);
            den = alg.mul(&den, &alg.binomial(&bk.coeff, bk.half_exp, bk.x_exp));
        }
        if balance != 0 {
            // ((-1) Q^k)^balance; the coefficient is ±1 so its power is its
            // own sign pattern.
            let qk = unit.shifted(base, k);
            let c = -qk.coeff;
            let sign = if balance.rem_euclid(2) == 1 { c } else { ExactRational::one() };
            num = alg.mul(&num, &alg.monomial(&sign, qk.half_exp * balance, 0));
        }
        let ratio = alg.div(&num, &den, || format!("denominator factor vanishes at k = {k}"))?;
        term = alg.mul(&term, &ratio);
        acc = alg.add(&acc, &term);
    }
    Ok(acc)
}

/// Exact value of a terminating `phi` series at `p`, including the balancing
/// factor `{(-1)^k q^{k(k-1)/2}}^{s-r}`.
pub fn eval_qhyper(spec: &QHyperSpec, p: &QPoint) -> Result<ExactRational, Error> {
    let alg = ExactAlgebra::new(Some(p.s().clone()), p.x().clone());
    eval_qhyper_in(&alg, spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorials::{classical_fraction_form, fraction_form, q_pochhammer, rising_factorial};
    use crate::numerics::pow_int;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p, q)
    }

    fn pt(s: ExactRational, x: ExactRational) -> QPoint {
        QPoint::new(s, x).unwrap()
    }

    /// Direct-product oracle for `eval_hyper`.
    fn hyper_direct(spec: &HyperSpec) -> Result<ExactRational, Error> {
        let n = spec.termination_n()?;
        let mut lower = spec.lower.clone();
        lower.insert(0, ExactRational::one());
        eval_custom_sum(n as u32, |k| {
            let k = k as i64;
            Ok(classical_fraction_form(&spec.upper, &lower, k)? * pow_int(&spec.z, k)?)
        })
    }

    /// Direct-product oracle for `eval_qhyper`.
    fn qhyper_direct(spec: &QHyperSpec, p: &QPoint) -> Result<ExactRational, Error> {
        let n = spec.termination_n()?;
        let mut lower = spec.lower.clone();
        lower.insert(0, QFactorArg::q_half(spec.base.half_exp()).shifted(spec.base, 0));
        let base_val = {
            let sgn = if spec.base.negated() { r(-1, 1) } else { r(1, 1) };
            sgn * p.half_power(spec.base.half_exp())
        };
        let z = &spec.z.coeff * p.half_power(spec.z.half_exp) * pow_int(p.x(), spec.z.x_exp)?;
        eval_custom_sum(n as u32, |k| {
            let k = k as i64;
            let bracket = fraction_form(&spec.upper, &lower, spec.base, k, p)?;
            let corr = pow_int(&r(-1, 1), k)? * pow_int(&base_val, k * (k - 1) / 2)?;
            Ok(bracket * pow_int(&corr, spec.balance())? * pow_int(&z, k)?)
        })
    }

    #[test]
    fn hyper_examples() {
        let zero_n = HyperSpec { upper: vec![r(0, 1), r(3, 7)], lower: vec![r(1, 2)], z: r(5, 1), terminating: 0 };
        assert_eq!(eval_hyper(&zero_n).unwrap(), r(1, 1));

        // 1F0[-2;;1/2] = (1 - 1/2)^2
        let binom = HyperSpec { upper: vec![r(-2, 1)], lower: vec![], z: r(1, 2), terminating: 0 };
        assert_eq!(eval_hyper(&binom).unwrap(), r(1, 4));

        // 3F2[3x, 1-3x, -1; 1/2, -3; 3/4] at x = 1/3: 1 + (1*0*(-1))/(1*(1/2)*(-3)) * 3/4
        let x = r(1, 3);
        let spec = HyperSpec {
            upper: vec![r(3, 1) * &x, r(1, 1) - r(3, 1) * &x, r(-1, 1)],
            lower: vec![r(1, 2), r(-3, 1)],
            z: r(3, 4),
            terminating: 2,
        };
        assert_eq!(eval_hyper(&spec).unwrap(), r(1, 1));
        assert_eq!(hyper_direct(&spec).unwrap(), r(1, 1));
    }

    #[test]
    fn hyper_errors() {
        let bad = HyperSpec { upper: vec![r(1, 2)], lower: vec![], z: r(1, 2), terminating: 0 };
        assert!(matches!(eval_hyper(&bad), Err(Error::NonTerminating(_))));
        let missing = HyperSpec { upper: vec![], lower: vec![], z: r(1, 2), terminating: 0 };
        assert!(matches!(eval_hyper(&missing), Err(Error::NonTerminating(_))));
        let pole = HyperSpec { upper: vec![r(-3, 1)], lower: vec![r(-1, 1)], z: r(1, 2), terminating: 0 };
        assert!(matches!(eval_hyper(&pole), Err(Error::Pole(_))));
    }

    #[test]
    fn qhyper_examples() {
        let p = pt(r(1, 3), r(2, 1));
        let trivial = QHyperSpec {
            upper: vec![QFactorArg::q_half(0)],
            lower: vec![],
            z: QFactorArg::constant(r(7, 1)),
            base: QBase::q_pow(1),
            terminating: 0,
        };
        assert_eq!(eval_qhyper(&trivial, &p).unwrap(), r(1, 1));

        // 1phi0[q^-1;;q, z] at q = 1/9 with z = q; two terms by hand:
        // 1 + (1 - q^-1)/(1 - q) * z, and by the q-binomial theorem
        // (z q^-1; q)_1 = 1 - z/q = 0.
        let spec = QHyperSpec {
            upper: vec![QFactorArg::q_half(-2)],
            lower: vec![],
            z: QFactorArg::q_half(2),
            base: QBase::q_pow(1),
            terminating: 0,
        };
        let q = p.q();
        let by_hand = r(1, 1) + (r(1, 1) - q.recip().unwrap()) / (r(1, 1) - &q) * &q;
        assert_eq!(eval_qhyper(&spec, &p).unwrap(), by_hand);
        assert_eq!(by_hand, r(0, 1));
    }

    #[test]
    fn six_phi_five_summation_example() {
        // a = 4 (sqrt a = 2), b = 2, c = 3, l = 1 at q = 1/2 would need s = 1/sqrt 2;
        // use q = 1/4 (s = 1/2) instead.
        let p = pt(r(1, 2), r(1, 1));
        let (ra, b, c, l) = (r(2, 1), r(2, 1), r(3, 1), 1i64);
        let a = &ra * &ra;
        let spec = QHyperSpec {
            upper: vec![
                QFactorArg::constant(a.clone()),
                QFactorArg::new(ra.clone(), 2, 0),
                QFactorArg::new(-&ra, 2, 0),
                QFactorArg::constant(b.clone()),
                QFactorArg::constant(c.clone()),
                QFactorArg::q_half(-2 * l),
            ],
            lower: vec![
                QFactorArg::constant(ra.clone()),
                QFactorArg::constant(-&ra),
                QFactorArg::new(&a / &b, 2, 0),
                QFactorArg::new(&a / &c, 2, 0),
                QFactorArg::new(a.clone(), 2 + 2 * l, 0),
            ],
            z: QFactorArg::new(&a / (&b * &c), 2 + 2 * l, 0),
            base: QBase::q_pow(1),
            terminating: 5,
        };
        let lhs = eval_qhyper(&spec, &p).unwrap();
        let rhs = fraction_form(
            &[QFactorArg::new(a.clone(), 2, 0), QFactorArg::new(&a / (&b * &c), 2, 0)],
            &[QFactorArg::new(&a / &b, 2, 0), QFactorArg::new(&a / &c, 2, 0)],
            QBase::q_pow(1),
            l,
            &p,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, qhyper_direct(&spec, &p).unwrap());
    }

    #[test]
    fn qhyper_rejects_bad_termination() {
        let p = pt(r(1, 3), r(2, 1));
        let mut spec = QHyperSpec {
            upper: vec![QFactorArg::new(r(2, 1), -4, 0)],
            lower: vec![],
            z: QFactorArg::q_half(2),
            base: QBase::q_pow(1),
            terminating: 0,
        };
        assert!(matches!(eval_qhyper(&spec, &p), Err(Error::NonTerminating(_))));
        spec.upper[0] = QFactorArg::q_half(3);
        assert!(matches!(eval_qhyper(&spec, &p), Err(Error::NonTerminating(_))));
    }

    #[test]
    fn custom_sum_examples() {
        assert_eq!(eval_custom_sum(0, |_| Ok(r(5, 3))).unwrap(), r(5, 3));
        assert_eq!(eval_custom_sum(3, |k| Ok(r(k as i64, 1))).unwrap(), r(6, 1));
        let err = eval_custom_sum(2, |k| if k == 1 { Err(Error::Pole("t".into())) } else { Ok(r(1, 1)) });
        assert_eq!(err, Err(Error::Pole("t".into())));
    }

    #[test]
    fn custom_sum_of_first_basic_gosper_lhs() {
        // n = 2 at (s, x) = (1/2, 3/5): sum_k (q^-6; q^3)_k [x, q/x; q, -q, s, -s, q^-6 | q]_k q^k
        let p = pt(r(1, 2), r(3, 5));
        let n = 2i64;
        let q1 = QBase::q_pow(1);
        let lhs = eval_custom_sum(n as u32, |k| {
            let k = k as i64;
            let lead = q_pochhammer(&QFactorArg::q_half(-6 * n), QBase::q_pow(3), k, &p)?;
            let br = fraction_form(
                &[QFactorArg::new(r(1, 1), 0, 1), QFactorArg::new(r(1, 1), 2, -1)],
                &[
                    QFactorArg::q_half(2),
                    QFactorArg::new(r(-1, 1), 2, 0),
                    QFactorArg::q_half(1),
                    QFactorArg::new(r(-1, 1), 1, 0),
                    QFactorArg::q_half(-6 * n),
                ],
                q1,
                k,
                &p,
            )?;
            Ok(lead * br * p.half_power(2 * k))
        })
        .unwrap();
        let rhs = fraction_form(
            &[QFactorArg::new(r(1, 1), 2, 1), QFactorArg::new(r(1, 1), 4, -1)],
            &[QFactorArg::q_half(2), QFactorArg::q_half(4)],
            QBase::q_pow(3),
            n,
            &p,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn balance_factor_is_one_when_balanced() {
        let spec = QHyperSpec {
            upper: vec![QFactorArg::q_half(-4), QFactorArg::q_half(1)],
            lower: vec![QFactorArg::q_half(3)],
            z: QFactorArg::q_half(2),
            base: QBase::q_pow(1),
            terminating: 0,
        };
        assert_eq!(spec.balance(), 0);
    }

    fn small_rat() -> impl Strategy<Value = ExactRational> {
        (-30i64..=30, 1i64..=30).prop_map(|(p, q)| ExactRational::new(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn hyper_agrees_with_direct_sum(
            upper in prop::collection::vec(small_rat(), 0..3),
            lower in prop::collection::vec(small_rat(), 0..3),
            z in small_rat(),
            n in 0i64..6,
        ) {
            let mut upper = upper;
            upper.push(ExactRational::from_integer(-n));
            let spec = HyperSpec { terminating: upper.len() - 1, upper, lower, z };
            match (eval_hyper(&spec), hyper_direct(&spec)) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(Error::Pole(_)), Err(Error::Pole(_))) => {}
                (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a, b),
            }
        }

        #[test]
        fn qhyper_agrees_with_direct_sum(
            upper in prop::collection::vec((small_rat(), -3i64..=3), 0..3),
            lower in prop::collection::vec((small_rat(), -3i64..=3), 0..4),
            zc in small_rat(),
            zh in -2i64..=2,
            n in 0i64..5,
            s in small_rat(),
        ) {
            let Ok(p) = QPoint::new(s, r(1, 1)) else { return Ok(()) };
            let mut upper: Vec<QFactorArg> = upper.into_iter().map(|(c, h)| QFactorArg::new(c, h, 0)).collect();
            upper.push(QFactorArg::q_half(-2 * n));
            let lower = lower.into_iter().map(|(c, h)| QFactorArg::new(c, h, 0)).collect();
            let spec = QHyperSpec {
                terminating: upper.len() - 1,
                upper,
                lower,
                z: QFactorArg::new(zc, zh, 0),
                base: QBase::q_pow(1),
            };
            match (eval_qhyper(&spec, &p), qhyper_direct(&spec, &p)) {
                (Ok(a), Ok(b)) => prop_assert_eq!(a, b),
                (Err(Error::Pole(_)), Err(Error::Pole(_))) => {}
                (a, b) => prop_assert!(false, "disagree: {:?} vs {:?}", a, b),
            }
        }

        #[test]
        fn hyper_term_ratio(
            a in prop::collection::vec(small_rat(), 1..3),
            b in prop::collection::vec(small_rat(), 0..3),
            z in small_rat(),
            k in 0i64..8,
        ) {
            let term = |k: i64| -> Result<ExactRational, Error> {
                let mut v = pow_int(&z, k)?;
                for ai in &a { v = v * rising_factorial(ai, k)?; }
                v = v / rising_factorial(&r(1, 1), k)?;
                for bj in &b {
                    let d = rising_factorial(bj, k)?;
                    if d.is_zero() { return Err(Error::Pole("b".into())); }
                    v = v / d;
                }
                Ok(v)
            };
            let (Ok(t0), Ok(t1)) = (term(k), term(k + 1)) else { return Ok(()) };
            let kk = ExactRational::from_integer(k);
            let mut ratio = z.clone();
            for ai in &a { ratio = ratio * (ai + &kk); }
            let mut den = ExactRational::from_integer(k + 1);
            for bj in &b { den = den * (bj + &kk); }
            prop_assume!(!den.is_zero());
            prop_assert_eq!(t1, t0 * ratio / den);
        }
    }
}
