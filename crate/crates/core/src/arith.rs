//! Exact integer and rational primitives.
//!
//! Everything is arbitrary precision: the invariants square `p` and multiply
//! `p` by `q`, so fixed-width integers would overflow well inside the
//! parameter ranges the sweeps cover.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Greatest common divisor of `|a|` and `|b|`, with `gcd(0, 0) = 0`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b)
}

pub fn coprime(a: &BigInt, b: &BigInt) -> bool {
    gcd(a, b).is_one()
}

/// Returns `(g, s, t)` with `s*a + t*b = g = gcd(a, b)` for non-negative `a`, `b`.
fn extended_euclid(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (BigInt::one(), BigInt::zero());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let (quot, rem) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, rem);
        let s2 = &s0 - &quot * &s1;
        s0 = std::mem::replace(&mut s1, s2);
        let t2 = &t0 - &quot * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    (r0, s0, t0)
}

/// The unique `x` with `0 < x < p` and `x*q ≡ -1 (mod p)`.
///
/// `p` must be odd and at least 3, `q` positive and coprime to `p`.
pub fn solve_neg_inverse(q: &BigInt, p: &BigInt) -> Result<BigInt> {
    if !q.is_positive() {
        return Err(Error::NotPositive(q.clone()));
    }
    if *p < BigInt::from(3) || p.is_even() {
        return Err(Error::InvalidModulus(p.clone()));
    }
    let (g, s, _) = extended_euclid(&q.mod_floor(p), p);
    if !g.is_one() {
        return Err(Error::NotCoprime(q.clone(), p.clone()));
    }
    // s*q ≡ 1, so -s is the negative inverse; p > 1 keeps it off zero.
    Ok((-s).mod_floor(p))
}

/// An exact fraction in lowest terms with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = gcd(&num, &den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Rational { num, den })
    }

    pub fn from_integer(value: BigInt) -> Self {
        Rational {
            num: value,
            den: BigInt::one(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn floor(&self) -> BigInt {
        self.num.div_floor(&self.den)
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }
}

/// `num/den` reduced, with a positive denominator.
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(num.into(), den.into())
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.num * &other.den).cmp(&(&other.num * &self.den))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}
