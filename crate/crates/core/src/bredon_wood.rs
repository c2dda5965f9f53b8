//! The skip-sum `Σ(x/y)` and the Bredon–Wood genus `N(x, y) = Σ(x/y) / 2`.
//!
//! `Σ` adds the continued-fraction terms of `x/y` left to right, except that
//! a term is skipped (contributes 0) when the previous term was taken and
//! the running sum is even. For even `x`, `N(x, y)` is the minimal genus of
//! a closed non-orientable surface in the lens space `L(x, y)`.
//!
//! [`step_reduce_count`] computes the same quantity from the other end of
//! the expansion and serves as an independent oracle for [`sigma`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::coprime;
use crate::cf::{expand, BracketExpr, ContinuedFraction};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkipTrace {
    source: ContinuedFraction,
    b: Vec<BigInt>,
    sigma: BigInt,
}

impl SkipTrace {
    pub fn source(&self) -> &ContinuedFraction {
        &self.source
    }

    /// The sequence `b_0, ..., b_n`; `b_i` is either `a_i` or `0`.
    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn sigma(&self) -> &BigInt {
        &self.sigma
    }

    /// Whether `a_i` was taken, i.e. `b_i = a_i`.
    pub fn taken(&self, i: usize) -> bool {
        self.b[i] == self.source.terms()[i]
    }

    /// `b_0 + ... + b_i`.
    pub fn partial_sum(&self, i: usize) -> BigInt {
        self.b[..=i].iter().sum()
    }
}

pub fn skip_trace(cf: &ContinuedFraction) -> SkipTrace {
    let terms = cf.terms();
    let mut b = Vec::with_capacity(terms.len());
    let mut sum = BigInt::zero();
    for (i, a) in terms.iter().enumerate() {
        let skip = i > 0 && b[i - 1] == terms[i - 1] && sum.is_even();
        let bi = if skip { BigInt::zero() } else { a.clone() };
        sum += &bi;
        b.push(bi);
    }
    SkipTrace {
        source: cf.clone(),
        b,
        sigma: sum,
    }
}

/// `Σ(x/y)` for coprime `x >= 0`, `y >= 1`. Defined for odd `x` too.
pub fn sigma(x: &BigInt, y: &BigInt) -> Result<BigInt> {
    Ok(skip_trace(&expand(x, y)?).sigma)
}

/// `N(x, y)` for coprime `x`, `y` with `x` even and at least 2.
pub fn n_genus(x: &BigInt, y: &BigInt) -> Result<BigInt> {
    Ok(n_genus_trace(x, y)?.1)
}

/// `N(x, y)` together with the trace it was computed from.
pub fn n_genus_trace(x: &BigInt, y: &BigInt) -> Result<(SkipTrace, BigInt)> {
    if !x.is_positive() {
        return Err(Error::NotPositive(x.clone()));
    }
    if !y.is_positive() {
        return Err(Error::NotPositive(y.clone()));
    }
    if x.is_odd() {
        return Err(Error::OddGenusArgument(x.clone()));
    }
    if !coprime(x, y) {
        return Err(Error::NotCoprime(x.clone(), y.clone()));
    }
    let trace = skip_trace(&expand(x, y)?);
    let (half, rem) = trace.sigma.div_rem(&BigInt::from(2));
    assert!(
        rem.is_zero(),
        "skip-sum of {x}/{y} = {} is odd for an even numerator",
        trace.sigma
    );
    Ok((trace, half))
}

/// Number of reduction steps taking the expansion to `[0]`, where one step
/// rewrites the last term `a` as follows:
///
/// * `a >= 4`: `[..., a]` to `[..., a - 2]`
/// * `a == 3`: `[..., c, 3]` to `[..., c + 1]`
/// * `a == 2`: `[..., c, 2]` to `[...]` (and `[2]` to `[0]`)
///
/// A trailing `1` produced along the way is merged into its predecessor.
/// Twice the count equals `Σ` of the fraction.
pub fn step_reduce_count(cf: &ContinuedFraction) -> Result<BigInt> {
    let value = cf.value();
    if value.numer().is_odd() {
        return Err(Error::OddNumerator(value.numer().clone()));
    }
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    let mut terms = cf.terms().to_vec();
    let mut steps = BigInt::zero();
    loop {
        while terms.len() >= 2 && terms.last().is_some_and(One::is_one) {
            terms.pop();
            *terms.last_mut().expect("len >= 1") += 1;
        }
        let last = match terms.last() {
            None => break,
            Some(t) if t.is_zero() && terms.len() == 1 => break,
            Some(t) => t.clone(),
        };
        if last >= BigInt::from(4) {
            // Repeated `a - 2` steps down to 2 or 3, applied in one go.
            let k = (&last - &two) / &two;
            *terms.last_mut().expect("non-empty") -= &k * &two;
            steps += k;
        } else if last == three && terms.len() >= 2 {
            terms.pop();
            *terms.last_mut().expect("len >= 1") += 1;
            steps += 1;
        } else if last == two {
            terms.pop();
            terms.pop();
            steps += 1;
        } else {
            return Err(Error::ReductionStuck(BracketExpr::new(terms).to_string()));
        }
    }
    Ok(steps)
}

/// Convenience for sweeps over small parameters.
pub fn n_genus_u64(x: u64, y: u64) -> Result<u64> {
    n_genus(&BigInt::from(x), &BigInt::from(y))
        .map(|n| n.to_u64().expect("genus of a u64 lens space fits in u64"))
}
