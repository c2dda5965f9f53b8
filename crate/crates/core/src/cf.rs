//! Finite continued fractions and generalized brackets.
//!
//! A bracket `[t_0, t_1, ..., t_n]` is evaluated through the product of the
//! term matrices `(t 1; 1 0)`. The first column of the product is the
//! unreduced numerator/denominator pair. Working with matrices means zero
//! and negative terms need no special handling: `[..., a, 0, b]` collapses
//! to `[..., a + b]`, `[..., a, -1]` equals `[..., a - 1]`, and a trailing
//! `1` merges into its predecessor, all as plain consequences of the
//! product.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{coprime, Rational};
use crate::error::{Error, Result};

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[BigInt]) -> fmt::Result {
    f.write_str("[")?;
    for (i, t) in terms.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{t}")?;
    }
    f.write_str("]")
}

/// 2x2 integer matrix `(a b; c d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TermMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl TermMatrix {
    pub fn identity() -> Self {
        TermMatrix {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// Right-multiplies by the term matrix `(t 1; 1 0)`.
    fn push_term(&mut self, t: &BigInt) {
        let a = &self.a * t + &self.b;
        let c = &self.c * t + &self.d;
        self.b = std::mem::replace(&mut self.a, a);
        self.d = std::mem::replace(&mut self.c, c);
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }
}

/// A bracket with arbitrary integer terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BracketExpr {
    terms: Vec<BigInt>,
}

impl BracketExpr {
    pub fn new(terms: Vec<BigInt>) -> Self {
        BracketExpr { terms }
    }

    pub fn from_ints(terms: &[i64]) -> Self {
        BracketExpr::new(terms.iter().copied().map(BigInt::from).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn matrix(&self) -> TermMatrix {
        let mut m = TermMatrix::identity();
        for t in &self.terms {
            m.push_term(t);
        }
        m
    }

    /// Unreduced `(numerator, denominator)`: the first column of the term
    /// matrix product. Signs are left as produced, so callers comparing
    /// against expressions whose parts are both negative can cross-multiply.
    /// The empty bracket gives `(0, 1)`, the value of `[0]`.
    pub fn raw_fraction(&self) -> (BigInt, BigInt) {
        if self.terms.is_empty() {
            return (BigInt::zero(), BigInt::one());
        }
        let m = self.matrix();
        (m.a, m.c)
    }

    pub fn evaluate(&self) -> Result<Rational> {
        let (num, den) = self.raw_fraction();
        if den.is_zero() {
            return Err(Error::IndeterminateBracket);
        }
        Rational::new(num, den)
    }

    /// True when `num/den` names the same point of the projective line as
    /// this bracket, i.e. `num * d == n * den` for the raw pair `(n, d)`.
    pub fn equals_ratio(&self, num: &BigInt, den: &BigInt) -> bool {
        if num.is_zero() && den.is_zero() {
            return false;
        }
        let (n, d) = self.raw_fraction();
        &n * den == &d * num
    }
}

impl From<&ContinuedFraction> for BracketExpr {
    fn from(cf: &ContinuedFraction) -> Self {
        BracketExpr::new(cf.terms.clone())
    }
}

impl fmt::Display for BracketExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms)
    }
}

/// Canonical continued fraction `[a_0, ..., a_n]` of a non-negative
/// rational: `a_0 >= 0`, `a_i >= 1` for `i >= 1`, and `a_n >= 2` when `n > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    terms: Vec<BigInt>,
}

impl ContinuedFraction {
    pub fn from_terms(terms: Vec<BigInt>) -> Result<Self> {
        let invalid = || Error::NonCanonical(BracketExpr::new(terms.clone()).to_string());
        let (first, rest) = terms.split_first().ok_or_else(invalid)?;
        if first.is_negative() || rest.iter().any(|t| !t.is_positive()) {
            return Err(invalid());
        }
        if let Some(last) = rest.last() {
            if last.is_one() {
                return Err(invalid());
            }
        }
        Ok(ContinuedFraction { terms })
    }

    pub fn from_ints(terms: &[i64]) -> Result<Self> {
        Self::from_terms(terms.iter().copied().map(BigInt::from).collect())
    }

    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<BigInt> {
        self.terms
    }

    /// Index `n` of the last term.
    pub fn depth(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn value(&self) -> Rational {
        BracketExpr::from(self)
            .evaluate()
            .expect("canonical continued fractions have positive denominators")
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.terms)
    }
}

/// Canonical continued fraction of `x/y` for coprime `x >= 0`, `y >= 1`.
pub fn expand(x: &BigInt, y: &BigInt) -> Result<ContinuedFraction> {
    if !y.is_positive() {
        return Err(Error::NotPositive(y.clone()));
    }
    if x.is_negative() {
        return Err(Error::Negative(x.to_string()));
    }
    if !coprime(x, y) {
        return Err(Error::NotCoprime(x.clone(), y.clone()));
    }
    Ok(expand_nonneg(x.clone(), y.clone()))
}

/// Euclid on a non-negative fraction with positive denominator. Coprimality
/// is not needed here: the quotients only depend on the value.
fn expand_nonneg(mut x: BigInt, mut y: BigInt) -> ContinuedFraction {
    let mut terms = Vec::new();
    while !y.is_zero() {
        let (quot, rem) = x.div_rem(&y);
        terms.push(quot);
        x = std::mem::replace(&mut y, rem);
    }
    ContinuedFraction { terms }
}

pub fn evaluate(b: &BracketExpr) -> Result<Rational> {
    b.evaluate()
}

/// The unique canonical continued fraction with the same value as `b`.
pub fn canonicalize(b: &BracketExpr) -> Result<ContinuedFraction> {
    let value = b.evaluate()?;
    if value.is_negative() {
        return Err(Error::Negative(value.to_string()));
    }
    Ok(expand_nonneg(value.numer().clone(), value.denom().clone()))
}

/// The terms `a_n, ..., a_1` (dropping `a_0`). Its value is `d_n / d_{n-1}`,
/// the ratio of the last two convergent denominators.
pub fn reversed(cf: &ContinuedFraction) -> BracketExpr {
    BracketExpr::new(cf.terms[1..].iter().rev().cloned().collect())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Convergent {
    pub numerator: BigInt,
    pub denominator: BigInt,
}

impl fmt::Display for Convergent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

/// Convergents `h_i/k_i = [a_0, ..., a_i]` with
/// `h_i = a_i h_{i-1} + h_{i-2}`, `k_i = a_i k_{i-1} + k_{i-2}`
/// seeded by `h_{-1} = 1, h_{-2} = 0, k_{-1} = 0, k_{-2} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    source: ContinuedFraction,
    entries: Vec<Convergent>,
}

impl ConvergentTable {
    pub fn source(&self) -> &ContinuedFraction {
        &self.source
    }

    pub fn entries(&self) -> &[Convergent] {
        &self.entries
    }

    pub fn get(&self, i: usize) -> &Convergent {
        &self.entries[i]
    }

    pub fn last(&self) -> &Convergent {
        self.entries.last().expect("non-empty by construction")
    }

    /// `h_i k_{i-1} - h_{i-1} k_i`, which is `(-1)^(i-1)`.
    pub fn determinant(&self, i: usize) -> BigInt {
        assert!(i >= 1, "determinant is defined for i >= 1");
        let (cur, prev) = (&self.entries[i], &self.entries[i - 1]);
        &cur.numerator * &prev.denominator - &prev.numerator * &cur.denominator
    }
}

pub fn convergents(cf: &ContinuedFraction) -> ConvergentTable {
    let (mut h2, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k2, mut k1) = (BigInt::one(), BigInt::zero());
    let mut entries = Vec::with_capacity(cf.terms.len());
    for a in &cf.terms {
        let h = a * &h1 + &h2;
        let k = a * &k1 + &k2;
        h2 = std::mem::replace(&mut h1, h.clone());
        k2 = std::mem::replace(&mut k1, k.clone());
        entries.push(Convergent {
            numerator: h,
            denominator: k,
        });
    }
    ConvergentTable {
        source: cf.clone(),
        entries,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::make_rational;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn cf(terms: &[i64]) -> ContinuedFraction {
        ContinuedFraction::from_ints(terms).unwrap()
    }

    fn rat(n: i64, d: i64) -> Rational {
        make_rational(n, d).unwrap()
    }

    #[test]
    fn expand_examples() {
        assert_eq!(expand(&big(8), &big(3)).unwrap(), cf(&[2, 1, 2]));
        assert_eq!(expand(&big(34), &big(49)).unwrap(), cf(&[0, 1, 2, 3, 1, 3]));
        assert_eq!(
            expand(&big(226), &big(625)).unwrap(),
            cf(&[0, 2, 1, 3, 3, 1, 3, 1, 2])
        );
        assert_eq!(expand(&big(5), &big(1)).unwrap(), cf(&[5]));
        assert_eq!(expand(&big(0), &big(1)).unwrap(), cf(&[0]));
    }

    #[test]
    fn expand_rejects_bad_input() {
        assert_eq!(
            expand(&big(4), &big(6)),
            Err(Error::NotCoprime(big(4), big(6)))
        );
        assert!(expand(&big(4), &big(0)).is_err());
        assert!(expand(&big(-4), &big(3)).is_err());
    }

    #[test]
    fn canonical_form_is_enforced() {
        assert!(ContinuedFraction::from_ints(&[0, 1, 1]).is_err());
        assert!(ContinuedFraction::from_ints(&[0, 0, 2]).is_err());
        assert!(ContinuedFraction::from_ints(&[-1, 2]).is_err());
        assert!(ContinuedFraction::from_ints(&[]).is_err());
        assert!(ContinuedFraction::from_ints(&[1]).is_ok());
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(
            BracketExpr::from_ints(&[2, 1, 2]).evaluate().unwrap(),
            rat(8, 3)
        );
        assert_eq!(
            BracketExpr::from_ints(&[0, 1, 2, 3, 1, 2, 1])
                .evaluate()
                .unwrap(),
            rat(34, 49)
        );
        assert_eq!(
            BracketExpr::from_ints(&[3, 0, 4]).evaluate().unwrap(),
            rat(7, 1)
        );
        assert_eq!(
            BracketExpr::from_ints(&[5, -1]).evaluate().unwrap(),
            rat(4, 1)
        );
        assert_eq!(BracketExpr::from_ints(&[]).evaluate().unwrap(), rat(0, 1));
    }

    #[test]
    fn evaluate_indeterminate() {
        // [a, 0] = [a, 0, ∞]: the product has lower-left entry zero.
        assert_eq!(
            BracketExpr::from_ints(&[3, 0]).evaluate(),
            Err(Error::IndeterminateBracket)
        );
        assert!(canonicalize(&BracketExpr::from_ints(&[3, 0])).is_err());
    }

    #[test]
    fn rewriting_conventions_follow_from_the_product() {
        // [..., a_{n-1}, -1] = [..., a_{n-1} - 1]
        assert_eq!(
            BracketExpr::from_ints(&[1, 2, -1]).evaluate().unwrap(),
            BracketExpr::from_ints(&[1, 1]).evaluate().unwrap()
        );
        // [..., a_{n-2}, a_{n-1}, 0] = [..., a_{n-2}]
        assert_eq!(
            BracketExpr::from_ints(&[2, 5, 3, 0]).evaluate().unwrap(),
            BracketExpr::from_ints(&[2, 5]).evaluate().unwrap()
        );
        // [..., a_{n-1}, 0, 2] = [..., a_{n-1} + 2]
        assert_eq!(
            BracketExpr::from_ints(&[0, 4, 3, 0, 2]).evaluate().unwrap(),
            BracketExpr::from_ints(&[0, 4, 5]).evaluate().unwrap()
        );
    }

    #[test]
    fn raw_fraction_keeps_signs() {
        // [0,-3] = 0 + 1/(-3): the product column is (1, -3)
        let (n, d) = BracketExpr::from_ints(&[0, -3]).raw_fraction();
        assert_eq!((n, d), (big(1), big(-3)));
        assert!(BracketExpr::from_ints(&[0, -3]).equals_ratio(&big(-1), &big(3)));
        assert!(!BracketExpr::from_ints(&[0, -3]).equals_ratio(&big(0), &big(0)));
    }

    #[test]
    fn determinant_of_term_product_is_a_sign() {
        let m = BracketExpr::from_ints(&[4, -2, 0, 7, 1]).matrix();
        assert_eq!(m.determinant(), big(-1));
    }

    #[test]
    fn convergent_examples() {
        let pairs = |t: &ConvergentTable| -> Vec<(BigInt, BigInt)> {
            t.entries()
                .iter()
                .map(|c| (c.numerator.clone(), c.denominator.clone()))
                .collect()
        };
        let want = |v: &[(i64, i64)]| -> Vec<(BigInt, BigInt)> {
            v.iter().map(|&(a, b)| (big(a), big(b))).collect()
        };
        assert_eq!(
            pairs(&convergents(&cf(&[0, 1, 1, 2]))),
            want(&[(0, 1), (1, 1), (1, 2), (3, 5)])
        );
        assert_eq!(
            pairs(&convergents(&cf(&[0, 1, 2, 2]))),
            want(&[(0, 1), (1, 1), (2, 3), (5, 7)])
        );
        assert_eq!(pairs(&convergents(&cf(&[5]))), want(&[(5, 1)]));
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            canonicalize(&BracketExpr::from_ints(&[0, 1, 2, 3, 1, 2, 1])).unwrap(),
            cf(&[0, 1, 2, 3, 1, 3])
        );
        assert_eq!(
            canonicalize(&BracketExpr::from_ints(&[3, 0, 4])).unwrap(),
            cf(&[7])
        );
        assert_eq!(
            canonicalize(&BracketExpr::from_ints(&[0, 1, 1, 1, 3, 1, 1])).unwrap(),
            cf(&[0, 1, 1, 1, 3, 2])
        );
        assert_eq!(canonicalize(&BracketExpr::default()).unwrap(), cf(&[0]));
        assert!(matches!(
            canonicalize(&BracketExpr::from_ints(&[-2, 3])),
            Err(Error::Negative(_))
        ));
    }

    #[test]
    fn reversed_examples() {
        // Convergent denominators of 5/7 = [0,1,2,2] are 1,1,3,7.
        let r = reversed(&cf(&[0, 1, 2, 2]));
        assert_eq!(r, BracketExpr::from_ints(&[2, 2, 1]));
        assert_eq!(r.evaluate().unwrap(), rat(7, 3));
        assert_eq!(reversed(&cf(&[0, 6])), BracketExpr::from_ints(&[6]));
        // Convergent denominators of 3/5 = [0,1,1,2] are 1,1,2,5.
        let r = reversed(&cf(&[0, 1, 1, 2]));
        assert_eq!(r, BracketExpr::from_ints(&[2, 1, 1]));
        assert_eq!(r.evaluate().unwrap(), rat(5, 2));
    }

    #[test]
    fn display() {
        assert_eq!(cf(&[0, 1, 2]).to_string(), "[0,1,2]");
        assert_eq!(BracketExpr::from_ints(&[5, -1]).to_string(), "[5,-1]");
    }
}
