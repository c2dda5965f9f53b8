//! Torus knots: normalization, type classification, and invariants.
//!
//! `T(p, q)`, `T(-p, q)`, `T(p, -q)`, `T(-p, -q)` and `T(q, p)` are the same
//! knot, so parameters are normalized to positive values with `p` even for
//! even knots (`pq` even) and `p > q` for odd knots. `T(1, q)` is the unknot
//! and is kept as a separate value, since the genus and slope formulas below
//! do not apply to it.
//!
//! Crosscap numbers:
//!
//! * even knot: `N(p, q)`, realized with boundary slope `pq`;
//! * odd knot of type A: `N(pq - 1, p²)`, slope `pq - 1`;
//! * odd knot of type B: `N(pq + 1, p²)`, slope `pq + 1`;
//!
//! where the type is the parity of the unique `x` in `(0, p)` with
//! `xq ≡ -1 (mod p)` (even: A, odd: B).

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{coprime, solve_neg_inverse, Rational};
use crate::bredon_wood::n_genus;
use crate::cf::{convergents, expand, ContinuedFraction, Convergent};
use crate::error::{Error, Result};

/// A nontrivial torus knot with normalized parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusKnot {
    p: BigInt,
    q: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Knot {
    Unknot,
    Torus(TorusKnot),
}

/// Normalizes a raw parameter pair. Signs and order are irrelevant.
pub fn normalize(p_raw: &BigInt, q_raw: &BigInt) -> Result<Knot> {
    if p_raw.is_zero() || q_raw.is_zero() {
        return Err(Error::ZeroParameter);
    }
    if !coprime(p_raw, q_raw) {
        return Err(Error::NotCoprime(p_raw.clone(), q_raw.clone()));
    }
    let (a, b) = (p_raw.abs(), q_raw.abs());
    if a.is_one() || b.is_one() {
        return Ok(Knot::Unknot);
    }
    let (p, q) = if a.is_even() || b.is_even() {
        if a.is_even() {
            (a, b)
        } else {
            (b, a)
        }
    } else if a > b {
        (a, b)
    } else {
        (b, a)
    };
    Ok(Knot::Torus(TorusKnot { p, q }))
}

pub fn normalize_i64(p_raw: i64, q_raw: i64) -> Result<Knot> {
    normalize(&BigInt::from(p_raw), &BigInt::from(q_raw))
}

impl TorusKnot {
    /// Accepts only already-normalized nontrivial parameters.
    pub fn new(p: BigInt, q: BigInt) -> Result<Self> {
        match normalize(&p, &q)? {
            Knot::Torus(k) if k.p == p && k.q == q => Ok(k),
            Knot::Torus(k) => Err(Error::NonCanonical(format!(
                "T({p},{q}) is written T({},{}) in normal form",
                k.p, k.q
            ))),
            Knot::Unknot => Err(Error::NonCanonical(format!("T({p},{q}) is the unknot"))),
        }
    }

    pub fn from_i64(p: i64, q: i64) -> Result<Self> {
        Self::new(BigInt::from(p), BigInt::from(q))
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn is_even(&self) -> bool {
        self.p.is_even()
    }

    /// Continued fraction of `q/p`.
    pub fn expansion(&self) -> ContinuedFraction {
        expand(&self.q, &self.p).expect("normalized parameters are coprime")
    }

    pub fn classify(&self) -> Classification {
        if self.is_even() {
            return Classification::Even;
        }
        let witness = solve_neg_inverse(&self.q, &self.p).expect("odd p >= 3, coprime to q");
        if witness.is_even() {
            Classification::OddTypeA { witness }
        } else {
            Classification::OddTypeB { witness }
        }
    }

    pub fn crosscap(&self) -> BigInt {
        let (x, y) = self.lens_parameters();
        n_genus(&x, &y).expect("lens space parameters have an even, coprime first argument")
    }

    /// The lens space `L(x, y)` whose genus `N(x, y)` is the crosscap number.
    pub fn lens_parameters(&self) -> (BigInt, BigInt) {
        match self.classify() {
            Classification::Even => (self.p.clone(), self.q.clone()),
            Classification::OddTypeA { .. } | Classification::OddTypeB { .. } => {
                (self.boundary_slope(), &self.p * &self.p)
            }
        }
    }

    /// Boundary slope of a minimal-genus non-orientable spanning surface.
    pub fn boundary_slope(&self) -> BigInt {
        let pq = &self.p * &self.q;
        match self.classify() {
            Classification::Even => pq,
            Classification::OddTypeA { .. } => pq - 1,
            Classification::OddTypeB { .. } => pq + 1,
        }
    }

    /// Seifert genus `(p-1)(q-1)/2`.
    pub fn genus(&self) -> BigInt {
        (&self.p - 1) * (&self.q - 1) / 2
    }

    /// `min{(p-1)q/2, (q-1)p/2}`, half the crossing number of a standard
    /// diagram. At most one candidate can be a half-integer; the bound is
    /// rounded down and the rounding is reported.
    pub fn crosscap_upper_bound(&self) -> UpperBound {
        let two = BigInt::from(2);
        let first = Rational::new((&self.p - 1) * &self.q, two.clone()).expect("nonzero");
        let second = Rational::new((&self.q - 1) * &self.p, two).expect("nonzero");
        let exact = first.min(second);
        UpperBound {
            value: exact.floor(),
            floored: !exact.is_integer(),
            exact,
        }
    }

    pub fn gamma(&self) -> BigInt {
        (self.genus() * 2u32).min(self.crosscap())
    }

    /// Splits an odd knot along the arc on the torus into `K_A = T(r_1, s_1)`
    /// and `K_B = T(r_2, s_2)`, read off the penultimate convergent of `q/p`.
    pub fn split(&self) -> Result<SplitPair> {
        let penultimate = self.penultimate_convergent()?;
        let n = self.expansion().depth();
        let near = KnotPair {
            r: penultimate.denominator.clone(),
            s: penultimate.numerator.clone(),
        };
        let far = KnotPair {
            r: &self.p - &near.r,
            s: &self.q - &near.s,
        };
        Ok(if n.is_multiple_of(2) {
            SplitPair {
                knot_a: near,
                knot_b: far,
            }
        } else {
            SplitPair {
                knot_a: far,
                knot_b: near,
            }
        })
    }

    /// `(N(r_1, s_1), N(s_2, r_2))` for type A, `(N(s_1, r_1), N(r_2, s_2))`
    /// for type B. The parts sum to the crosscap number.
    pub fn genus_sum_decomposition(&self) -> Result<(BigInt, BigInt)> {
        let split = self.split()?;
        let (a, b) = (&split.knot_a, &split.knot_b);
        let parts = match self.classify() {
            Classification::OddTypeA { .. } => (n_genus(&a.r, &a.s)?, n_genus(&b.s, &b.r)?),
            Classification::OddTypeB { .. } => (n_genus(&a.s, &a.r)?, n_genus(&b.r, &b.s)?),
            Classification::Even => unreachable!("split rejects even knots"),
        };
        Ok(parts)
    }

    /// `q_{n-1}/p_{n-1}` for `q/p = [a_0, ..., a_n]`, odd knots only.
    pub fn penultimate_convergent(&self) -> Result<Convergent> {
        if self.is_even() {
            return Err(Error::EvenKnot(self.to_string()));
        }
        let cf = self.expansion();
        let n = cf.depth();
        Ok(convergents(&cf).get(n - 1).clone())
    }

    pub fn report(&self) -> InvariantReport {
        InvariantReport {
            knot: self.clone(),
            classification: self.classify(),
            crosscap: self.crosscap(),
            boundary_slope: self.boundary_slope(),
            genus: self.genus(),
            gamma: self.gamma(),
            upper_bound: self.crosscap_upper_bound(),
        }
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.p, self.q)
    }
}

impl Knot {
    pub fn crosscap(&self) -> BigInt {
        match self {
            Knot::Unknot => BigInt::zero(),
            Knot::Torus(k) => k.crosscap(),
        }
    }

    pub fn genus(&self) -> BigInt {
        match self {
            Knot::Unknot => BigInt::zero(),
            Knot::Torus(k) => k.genus(),
        }
    }

    pub fn gamma(&self) -> BigInt {
        match self {
            Knot::Unknot => BigInt::zero(),
            Knot::Torus(k) => k.gamma(),
        }
    }

    pub fn as_torus(&self) -> Option<&TorusKnot> {
        match self {
            Knot::Unknot => None,
            Knot::Torus(k) => Some(k),
        }
    }
}

impl fmt::Display for Knot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Knot::Unknot => f.write_str("unknot"),
            Knot::Torus(k) => k.fmt(f),
        }
    }
}

/// Crosscap number of a connected sum of torus knots: the sum of the parts.
pub fn connected_sum_crosscap(knots: &[Knot]) -> Result<BigInt> {
    if knots.is_empty() {
        return Err(Error::EmptySum);
    }
    Ok(knots.iter().map(Knot::crosscap).sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Classification {
    Even,
    OddTypeA { witness: BigInt },
    OddTypeB { witness: BigInt },
}

impl Classification {
    pub fn witness(&self) -> Option<&BigInt> {
        match self {
            Classification::Even => None,
            Classification::OddTypeA { witness } | Classification::OddTypeB { witness } => {
                Some(witness)
            }
        }
    }

    pub fn is_type_a(&self) -> bool {
        matches!(self, Classification::OddTypeA { .. })
    }

    pub fn type_label(&self) -> &'static str {
        match self {
            Classification::Even => "-",
            Classification::OddTypeA { .. } => "A",
            Classification::OddTypeB { .. } => "B",
        }
    }

    pub fn parity_label(&self) -> &'static str {
        match self {
            Classification::Even => "even",
            _ => "odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub value: BigInt,
    /// The smaller candidate was a half-integer and has been rounded down.
    pub floored: bool,
    pub exact: Rational,
}

/// Torus-knot parameters `(r, s)` as they sit on the torus; not normalized,
/// and `T(2, 1)` style trivial pairs are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KnotPair {
    pub r: BigInt,
    pub s: BigInt,
}

impl fmt::Display for KnotPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.r, self.s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    pub knot_a: KnotPair,
    pub knot_b: KnotPair,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub knot: TorusKnot,
    pub classification: Classification,
    pub crosscap: BigInt,
    pub boundary_slope: BigInt,
    pub genus: BigInt,
    pub gamma: BigInt,
    pub upper_bound: UpperBound,
}
