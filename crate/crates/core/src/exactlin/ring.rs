//! Coefficient rings.
//!
//! Every element is stored as a [`BigRational`]. Over the integers the
//! denominator is always one, over `Z/p` the value is the canonical
//! representative in `[0, p)`, and over the rationals it is an arbitrary
//! reduced fraction. All arithmetic goes through [`RingSpec`] so the
//! representation invariant is maintained in a single place.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Elem = BigRational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingSpec {
    Integers,
    Rationals,
    IntMod { modulus: u64 },
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => write!(f, "Z"),
            RingSpec::Rationals => write!(f, "Q"),
            RingSpec::IntMod { modulus } => write!(f, "Z/{modulus}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl RingSpec {
    pub fn int_mod(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidInput(format!(
                "modulus must be at least 2, got {modulus}"
            )));
        }
        Ok(RingSpec::IntMod { modulus })
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            RingSpec::IntMod { modulus } if *modulus < 2 => Err(Error::InvalidInput(format!(
                "modulus must be at least 2, got {modulus}"
            ))),
            _ => Ok(()),
        }
    }

    /// True for `Q` and `Z/p` with `p` prime.
    pub fn is_field(&self) -> bool {
        match self {
            RingSpec::Integers => false,
            RingSpec::Rationals => true,
            RingSpec::IntMod { modulus } => is_prime(*modulus),
        }
    }

    /// Elimination (echelon forms, kernels, Smith normal form) is only
    /// available over principal ideal domains we can compute in natively.
    pub fn ensure_supported(&self) -> Result<()> {
        match self {
            RingSpec::IntMod { modulus } if !is_prime(*modulus) => {
                Err(Error::UnsupportedRing(*self))
            }
            _ => Ok(()),
        }
    }

    /// Characteristic of the ring (0 for `Z` and `Q`).
    pub fn characteristic(&self) -> u64 {
        match self {
            RingSpec::IntMod { modulus } => *modulus,
            _ => 0,
        }
    }

    fn reduce(&self, x: Elem) -> Elem {
        match self {
            RingSpec::IntMod { modulus } => {
                let m = BigInt::from(*modulus);
                let numer = x.numer().mod_floor(&m);
                if x.is_integer() {
                    return BigRational::from_integer(numer);
                }
                // p/q with q invertible mod m
                let inv = modinv(x.denom(), &m).expect("denominator not invertible modulo m");
                BigRational::from_integer((numer * inv).mod_floor(&m))
            }
            _ => x,
        }
    }

    pub fn zero(&self) -> Elem {
        Elem::zero()
    }

    pub fn one(&self) -> Elem {
        self.reduce(Elem::one())
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.reduce(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_bigint(&self, v: BigInt) -> Elem {
        self.reduce(BigRational::from_integer(v))
    }

    /// Converts an arbitrary rational into the ring. Fails when the value
    /// is not representable (a fraction over `Z`, or a denominator that is
    /// not invertible modulo `m`).
    pub fn coerce(&self, v: &Elem) -> Result<Elem> {
        match self {
            RingSpec::Rationals => Ok(v.clone()),
            RingSpec::Integers => {
                if v.is_integer() {
                    Ok(v.clone())
                } else {
                    Err(Error::InvalidInput(format!("{v} is not an integer")))
                }
            }
            RingSpec::IntMod { modulus } => {
                let m = BigInt::from(*modulus);
                if !v.is_integer() && modinv(v.denom(), &m).is_none() {
                    return Err(Error::InvalidInput(format!(
                        "denominator of {v} is not invertible modulo {modulus}"
                    )));
                }
                Ok(self.reduce(v.clone()))
            }
        }
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::zero();
        }
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        self.reduce(-a)
    }

    pub fn is_unit(&self, a: &Elem) -> bool {
        match self {
            RingSpec::Integers => a.abs().is_one(),
            _ => !a.is_zero(),
        }
    }

    /// Inverse of a unit.
    pub fn inv(&self, a: &Elem) -> Option<Elem> {
        if !self.is_unit(a) {
            return None;
        }
        match self {
            RingSpec::Integers => Some(a.clone()),
            RingSpec::Rationals => Some(a.recip()),
            RingSpec::IntMod { modulus } => {
                let m = BigInt::from(*modulus);
                modinv(a.numer(), &m).map(BigRational::from_integer)
            }
        }
    }

    /// Exact division `a / b`, if `b` divides `a` in the ring.
    pub fn divide(&self, a: &Elem, b: &Elem) -> Option<Elem> {
        if b.is_zero() {
            return if a.is_zero() { Some(Elem::zero()) } else { None };
        }
        match self {
            RingSpec::Integers => {
                let (q, r) = a.numer().div_rem(b.numer());
                r.is_zero().then(|| BigRational::from_integer(q))
            }
            _ => {
                let inv = self.inv(b)?;
                Some(self.mul(a, &inv))
            }
        }
    }

    /// Euclidean quotient: `a - q*b` is the canonical remainder. Over the
    /// integers the remainder lies in `[0, |b|)`; over fields it is zero.
    pub fn quotient(&self, a: &Elem, b: &Elem) -> Elem {
        match self {
            RingSpec::Integers => {
                let b = b.numer();
                let q = if b.is_positive() {
                    a.numer().div_floor(b)
                } else {
                    -(a.numer().div_floor(&-b))
                };
                BigRational::from_integer(q)
            }
            _ => self.divide(a, b).expect("division by zero in a field"),
        }
    }

    /// Canonical associate: positive over the integers, one over fields.
    /// Returns `(unit, unit * a)`.
    pub fn normalize(&self, a: &Elem) -> (Elem, Elem) {
        match self {
            RingSpec::Integers => {
                if a.is_negative() {
                    (-Elem::one(), -a)
                } else {
                    (Elem::one(), a.clone())
                }
            }
            _ => {
                if a.is_zero() {
                    (self.one(), Elem::zero())
                } else {
                    (self.inv(a).unwrap(), self.one())
                }
            }
        }
    }

    /// Bezout data `(g, s, t)` with `s*a + t*b = g`, `g` a generator of the
    /// ideal `(a, b)`. Only meaningful over the integers (over fields the
    /// callers never need it).
    pub fn gcdext(&self, a: &Elem, b: &Elem) -> (Elem, Elem, Elem) {
        match self {
            RingSpec::Integers => {
                let e = a.numer().extended_gcd(b.numer());
                let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
                if g.is_negative() {
                    g = -g;
                    s = -s;
                    t = -t;
                }
                (
                    BigRational::from_integer(g),
                    BigRational::from_integer(s),
                    BigRational::from_integer(t),
                )
            }
            _ => {
                if !a.is_zero() {
                    (self.one(), self.inv(a).unwrap(), Elem::zero())
                } else if !b.is_zero() {
                    (self.one(), Elem::zero(), self.inv(b).unwrap())
                } else {
                    (Elem::zero(), self.one(), Elem::zero())
                }
            }
        }
    }

    /// Size used to pick small pivots.
    pub fn height(&self, a: &Elem) -> u64 {
        match self {
            RingSpec::Integers => a.numer().abs().to_u64().unwrap_or(u64::MAX),
            RingSpec::Rationals => {
                let n = a.numer().bits();
                let d = a.denom().bits();
                n + d
            }
            RingSpec::IntMod { .. } => u64::from(!a.is_zero()),
        }
    }

    /// Parses a decimal integer or a `p/q` fraction into the ring.
    pub fn parse(&self, s: &str) -> Result<Elem> {
        let s = s.trim();
        let v = parse_rational(s)
            .ok_or_else(|| Error::Parse(format!("invalid coefficient {s:?}")))?;
        self.coerce(&v)
    }

    pub fn format(&self, a: &Elem) -> String {
        format_elem(a)
    }
}

pub fn format_elem(a: &Elem) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

fn parse_rational(s: &str) -> Option<Elem> {
    let parse_int = |t: &str| -> Option<BigInt> {
        let t = t.trim();
        if t.is_empty() {
            return None;
        }
        t.parse::<BigInt>().ok()
    };
    match s.split_once('/') {
        None => parse_int(s).map(BigRational::from_integer),
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
    }
}

fn modinv(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    if e.gcd.abs().is_one() {
        Some((e.x * e.gcd).mod_floor(m))
    } else {
        None
    }
}
