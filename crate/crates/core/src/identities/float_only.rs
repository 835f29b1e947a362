//! The two entries that only make sense numerically: a nonterminating `2F1`
//! with a Gamma-ratio value and the series for `2 pi / (3 sqrt 3)`.

use super::Side;
use crate::error::Error;
use crate::numerics::{gamma_hp, ExactRational, HighPrecisionFloat};

/// Bits carried beyond the requested precision while summing.
const GUARD: usize = 32;

/// Sums a series with positive-ratio tail from its term ratio until the term
/// drops below `2^-prec` relative to the partial sum or `max_terms` is hit.
/// Returns the sum and the number of terms used.
fn sum_by_ratio(
    prec: usize,
    max_terms: usize,
    mut ratio: impl FnMut(i64) -> HighPrecisionFloat,
) -> (HighPrecisionFloat, usize) {
    let w = prec + GUARD;
    let mut term = HighPrecisionFloat::from_i64(1, w);
    let mut sum = term.clone();
    let mut used = 1;
    while used < max_terms {
        term = term.mul(&ratio(used as i64 - 1));
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        used += 1;
        let scale = sum.abs().exponent().unwrap_or(0);
        if term.abs().exponent().map_or(true, |e| e < scale - prec as i64 - 8) {
            break;
        }
    }
    (sum, used)
}

fn f(r: &ExactRational, w: usize) -> HighPrecisionFloat {
    HighPrecisionFloat::from_rational(r, w)
}

/// Upper bound on the number of terms summed for the `2F1`.
pub fn limit_2f1_max_terms(prec: usize) -> usize {
    4 * prec + 64
}

/// One side of `2F1[3x, 2-3x; 3/2 | 1/4] = G(2/3) G(4/3) / (G(2/3+x) G(4/3-x))`.
pub fn limit_2f1_side(side: Side, x: &ExactRational, prec: usize) -> Result<HighPrecisionFloat, Error> {
    let w = prec + GUARD;
    match side {
        Side::Lhs => {
            let three = ExactRational::from_integer(3);
            let a = &three * x;
            let b = ExactRational::from_integer(2) - &a;
            let (sum, _) = sum_by_ratio(prec, limit_2f1_max_terms(prec), |k| {
                let kk = ExactRational::from_integer(k);
                let num = (&a + &kk) * (&b + &kk);
                let den = (ExactRational::new(3, 2) + &kk) * (&kk + ExactRational::one()) * ExactRational::from_integer(4);
                f(&(num / den), w)
            });
            Ok(sum.with_precision(prec))
        }
        Side::Rhs => {
            let g = |r: ExactRational| gamma_hp(&f(&r, w), w);
            let top = g(ExactRational::new(2, 3))?.mul(&g(ExactRational::new(4, 3))?);
            let d1 = g(ExactRational::new(2, 3) + x);
            let d2 = g(ExactRational::new(4, 3) - x);
            match (d1, d2) {
                (Ok(d1), Ok(d2)) => Ok(top.div(&d1.mul(&d2)).with_precision(prec)),
                // 1/Gamma vanishes at its poles.
                (Err(Error::PoleOfGamma(_)), _) | (_, Err(Error::PoleOfGamma(_))) => Ok(HighPrecisionFloat::zero(prec)),
                (Err(e), _) | (_, Err(e)) => Err(e),
            }
        }
    }
}

/// Partial sum of `sum_k k! / ((3/2)_k 4^k)` with at most `max_terms` terms,
/// stopping early once a term falls below `2^-prec`. Returns the sum and the
/// number of terms used.
pub fn pi_series_partial(prec: usize, max_terms: usize) -> (HighPrecisionFloat, usize) {
    let w = prec + GUARD;
    let (sum, used) = sum_by_ratio(prec, max_terms, |k| {
        let kk = ExactRational::from_integer(k);
        let r = (&kk + ExactRational::one()) / ((ExactRational::new(3, 2) + &kk) * ExactRational::from_integer(4));
        f(&r, w)
    });
    (sum.with_precision(prec), used)
}

/// `2 pi / (3 sqrt 3)`.
pub fn pi_series_target(prec: usize) -> HighPrecisionFloat {
    let w = prec + GUARD;
    let two_pi = HighPrecisionFloat::pi(w).mul(&HighPrecisionFloat::from_i64(2, w));
    let three = HighPrecisionFloat::from_i64(3, w);
    two_pi.div(&three.mul(&three.sqrt())).with_precision(prec)
}

/// One side of the series for `2 pi / (3 sqrt 3)`, summed with up to
/// `max_terms` terms.
pub fn pi_series_side(side: Side, prec: usize, max_terms: usize) -> HighPrecisionFloat {
    match side {
        Side::Lhs => pi_series_partial(prec, max_terms).0,
        Side::Rhs => pi_series_target(prec),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> ExactRational {
        ExactRational::new(p, q)
    }

    #[test]
    fn first_pi_term_is_one() {
        let (s, used) = pi_series_partial(128, 1);
        assert_eq!(used, 1);
        assert_eq!(s.to_rational(), Some(r(1, 1)));
        let gap = pi_series_target(128).sub(&s).to_f64();
        assert!((gap - 0.209_199_576_156_145_2).abs() < 1e-12);
    }

    #[test]
    fn pi_partial_sums_increase() {
        let mut prev = pi_series_partial(128, 1).0;
        for m in 2..40 {
            let cur = pi_series_partial(128, m).0;
            assert!(cur > prev, "partial sum {m} did not increase");
            prev = cur;
        }
    }

    #[test]
    fn terminating_2f1_hits_gamma_zero() {
        // x = -2/3 makes 3x = -2, so the sum stops after three terms and
        // 1/G(0) = 0 on the other side.
        let lhs = limit_2f1_side(Side::Lhs, &r(-2, 3), 128).unwrap();
        let rhs = limit_2f1_side(Side::Rhs, &r(-2, 3), 128).unwrap();
        assert!(lhs.abs().below_pow2(100), "lhs = {lhs}");
        assert!(rhs.is_zero());
    }

    #[test]
    fn two_f_one_at_zero_is_one() {
        let lhs = limit_2f1_side(Side::Lhs, &r(0, 1), 128).unwrap();
        let rhs = limit_2f1_side(Side::Rhs, &r(0, 1), 128).unwrap();
        assert_eq!(lhs.to_rational(), Some(r(1, 1)));
        assert!(rhs.sub(&HighPrecisionFloat::from_i64(1, 128)).abs().below_pow2(110));
    }
}
