//! Conservative degree tracking in `(s, x)`.
//!
//! A tracked value stands for `P * prod key^exp` where `P` is an unknown
//! polynomial of bounded degree and each key is a known polynomial: `s`, `x`,
//! a binomial `s^a x^b - c s^a' x^b'`, or an opaque polynomial produced by
//! inverting a sum. Common keys are pulled out before adding, so a sum of
//! fractions with shared denominators keeps the shared part exact instead of
//! multiplying denominators together.

use std::cell::Cell;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::Error;
use crate::numerics::ExactRational;

/// Degree bound of a rational function in `(s, x)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeBound {
    pub deg_s: u64,
    pub deg_x: u64,
}

impl DegreeBound {
    fn add(self, o: DegreeBound) -> DegreeBound {
        DegreeBound { deg_s: self.deg_s + o.deg_s, deg_x: self.deg_x + o.deg_x }
    }

    fn scale(self, m: u64) -> DegreeBound {
        DegreeBound { deg_s: self.deg_s * m, deg_x: self.deg_x * m }
    }

    fn max(self, o: DegreeBound) -> DegreeBound {
        DegreeBound { deg_s: self.deg_s.max(o.deg_s), deg_x: self.deg_x.max(o.deg_x) }
    }

    pub fn grid_size(&self) -> (u64, u64) {
        (self.deg_s + 1, self.deg_x + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    S,
    X,
    /// `1 - c s^h x^e` up to a monomial, with `(h, e)` lexicographically
    /// positive.
    Binomial { c: ExactRational, h: i64, e: i64 },
    Opaque { id: u64, deg: (u64, u64) },
}

impl Key {
    fn degree(&self) -> DegreeBound {
        let (deg_s, deg_x) = match self {
            Key::S => (1, 0),
            Key::X => (0, 1),
            Key::Binomial { h, e, .. } => (h.unsigned_abs(), e.unsigned_abs()),
            Key::Opaque { deg, .. } => *deg,
        };
        DegreeBound { deg_s, deg_x }
    }
}

#[derive(Clone, Debug)]
pub struct Tracked {
    zero: bool,
    exps: BTreeMap<Key, i64>,
    inner: DegreeBound,
}

impl Tracked {
    fn unit() -> Self {
        Tracked { zero: false, exps: BTreeMap::new(), inner: DegreeBound::default() }
    }

    fn zero() -> Self {
        Tracked { zero: true, ..Tracked::unit() }
    }

    fn bump(&mut self, key: Key, by: i64) {
        let e = self.exps.entry(key.clone()).or_insert(0);
        *e += by;
        if *e == 0 {
            self.exps.remove(&key);
        }
    }

    /// Numerator degree of `self / prod key^m`, where every `m` is at most
    /// the matching exponent of `self`.
    fn numerator_with(&self, m: &BTreeMap<Key, i64>) -> DegreeBound {
        let mut acc = self.inner;
        for (k, e) in &self.exps {
            let rest = e - m.get(k).copied().unwrap_or(0);
            acc = acc.add(k.degree().scale(rest as u64));
        }
        for (k, mk) in m {
            if !self.exps.contains_key(k) {
                acc = acc.add(k.degree().scale(mk.unsigned_abs()));
            }
        }
        acc
    }

    /// Degree of the numerator once written as a fraction of polynomials.
    pub fn numerator_degree(&self) -> DegreeBound {
        if self.zero {
            return DegreeBound::default();
        }
        self.exps
            .iter()
            .filter(|(_, e)| **e > 0)
            .fold(self.inner, |acc, (k, e)| acc.add(k.degree().scale(*e as u64)))
    }

    pub fn denominator_degree(&self) -> DegreeBound {
        self.exps
            .iter()
            .filter(|(_, e)| **e < 0)
            .fold(DegreeBound::default(), |acc, (k, e)| acc.add(k.degree().scale(e.unsigned_abs())))
    }

    /// Componentwise max of numerator and denominator degrees.
    pub fn bound(&self) -> DegreeBound {
        self.numerator_degree().max(self.denominator_degree())
    }
}

/// The degree-tracking backend. Not `Sync`: opaque keys are numbered from a
/// per-instance counter.
#[derive(Debug, Default)]
pub struct DegreeAlgebra {
    next_id: Cell<u64>,
}

impl DegreeAlgebra {
    pub fn new() -> Self {
        Self::default()
    }
}

impl Algebra for DegreeAlgebra {
    type Value = Tracked;

    fn constant(&self, c: &ExactRational) -> Tracked {
        if c.is_zero() {
            Tracked::zero()
        } else {
            Tracked::unit()
        }
    }

    fn monomial(&self, c: &ExactRational, h: i64, e: i64) -> Tracked {
        if c.is_zero() {
            return Tracked::zero();
        }
        let mut t = Tracked::unit();
        t.bump(Key::S, h);
        t.bump(Key::X, e);
        t
    }

    fn binomial(&self, c: &ExactRational, h: i64, e: i64) -> Tracked {
        if c.is_zero() {
            return Tracked::unit();
        }
        if h == 0 && e == 0 {
            return self.constant(&(ExactRational::one() - c));
        }
        let mut t = Tracked::unit();
        let (c, h, e) = if h < 0 || (h == 0 && e < 0) {
            // 1 - c m = -c m (1 - m^-1 / c)
            t.bump(Key::S, h);
            t.bump(Key::X, e);
            (c.recip().expect("nonzero"), -h, -e)
        } else {
            (c.clone(), h, e)
        };
        // With h >= 0, only a negative x power needs clearing.
        t.bump(Key::X, e.min(0));
        t.bump(Key::Binomial { c, h, e }, 1);
        t
    }

    fn affine(&self, c0: &ExactRational, c1: &ExactRational) -> Tracked {
        if c1.is_zero() {
            return self.constant(c0);
        }
        if c0.is_zero() {
            return self.monomial(c1, 0, 1);
        }
        self.binomial(&(-(c1 / c0)), 0, 1)
    }

    fn add(&self, a: &Tracked, b: &Tracked) -> Tracked {
        if a.zero {
            return b.clone();
        }
        if b.zero {
            return a.clone();
        }
        let mut common = BTreeMap::new();
        for k in a.exps.keys().chain(b.exps.keys()) {
            let ea = a.exps.get(k).copied().unwrap_or(0);
            let eb = b.exps.get(k).copied().unwrap_or(0);
            let m = ea.min(eb);
            if m != 0 {
                common.insert(k.clone(), m);
            }
        }
        let inner = a.numerator_with(&common).max(b.numerator_with(&common));
        Tracked { zero: false, exps: common, inner }
    }

    fn mul(&self, a: &Tracked, b: &Tracked) -> Tracked {
        if a.zero || b.zero {
            return Tracked::zero();
        }
        let mut out = a.clone();
        for (k, e) in &b.exps {
            out.bump(k.clone(), *e);
        }
        out.inner = a.inner.add(b.inner);
        out
    }

    fn neg(&self, a: &Tracked) -> Tracked {
        a.clone()
    }

    fn recip(&self, a: &Tracked, what: impl FnOnce() -> String) -> Result<Tracked, Error> {
        if a.zero {
            return Err(Error::Pole(what()));
        }
        let mut out = Tracked::unit();
        for (k, e) in &a.exps {
            out.bump(k.clone(), -e);
        }
        if a.inner != DegreeBound::default() {
            let id = self.next_id.get();
            self.next_id.set(id + 1);
            out.bump(Key::Opaque { id, deg: (a.inner.deg_s, a.inner.deg_x) }, -1);
        }
        Ok(out)
    }
}
