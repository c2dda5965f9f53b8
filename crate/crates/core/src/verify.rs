//! Exhaustive checks of the continued-fraction identities behind the
//! crosscap formulas.
//!
//! Every check compares exact integers or rationals. A failure carries the
//! expansion of `q/p` and its penultimate convergent so it can be redone by
//! hand.
//!
//! Notation: `q/p = [a_0, a_1, ..., a_n]` with `a_0 = 0` (odd knots have
//! `p > q`), and `q_i/p_i` its `i`-th convergent, so `p_i` is a denominator.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::bredon_wood::{n_genus, sigma, skip_trace, step_reduce_count};
use crate::cf::{canonicalize, expand, BracketExpr, ContinuedFraction};
use crate::error::{Error, Result};
use crate::exec::{map_ordered, Execution};
use crate::knot::{Classification, TorusKnot};

pub const DEFAULT_K_MIN: i64 = -6;
pub const DEFAULT_K_MAX: i64 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Recipro,
    Criterion,
    Final,
    Sum,
    Claim,
    Delta3,
    Oracle,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 7] = [
        Suite::Recipro,
        Suite::Criterion,
        Suite::Final,
        Suite::Sum,
        Suite::Claim,
        Suite::Delta3,
        Suite::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recipro => "recipro",
            Suite::Criterion => "criterion",
            Suite::Final => "final",
            Suite::Sum => "sum",
            Suite::Claim => "claim",
            Suite::Delta3 => "delta3",
            Suite::Oracle => "oracle",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_owned()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub suite: &'static str,
    pub check: &'static str,
    pub params: String,
    pub expected: String,
    pub actual: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}/{}] {}: expected {}, got {} ({})",
            self.suite, self.check, self.params, self.expected, self.actual, self.detail
        )
    }
}

/// Result of running one `verify_*` check on one parameter set.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckOutcome {
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn absorb(&mut self, other: CheckOutcome) {
        self.checked += other.checked;
        self.skipped += other.skipped;
        self.failures.extend(other.failures);
    }
}

/// Per-knot context shared by the odd-knot checks.
struct OddCase<'a> {
    suite: &'static str,
    knot: &'a TorusKnot,
    p: &'a BigInt,
    q: &'a BigInt,
    /// `a_0, ..., a_n`
    a: Vec<BigInt>,
    n: usize,
    /// `p_{n-1}`, `q_{n-1}`
    pn1: BigInt,
    qn1: BigInt,
    class: Classification,
    extra_params: String,
    outcome: CheckOutcome,
}

impl<'a> OddCase<'a> {
    fn new(suite: &'static str, knot: &'a TorusKnot) -> Result<Self> {
        let penultimate = knot.penultimate_convergent()?;
        let cf = knot.expansion();
        Ok(OddCase {
            suite,
            knot,
            p: knot.p(),
            q: knot.q(),
            n: cf.depth(),
            a: cf.into_terms(),
            pn1: penultimate.denominator,
            qn1: penultimate.numerator,
            class: knot.classify(),
            extra_params: String::new(),
            outcome: CheckOutcome::default(),
        })
    }

    fn n_odd(&self) -> bool {
        self.n % 2 == 1
    }

    fn detail(&self) -> String {
        format!(
            "q/p={}, n={}, p_(n-1)={}, q_(n-1)={}, type {}",
            BracketExpr::new(self.a.clone()),
            self.n,
            self.pn1,
            self.qn1,
            self.class.type_label()
        )
    }

    fn check(
        &mut self,
        check: &'static str,
        expected: impl fmt::Display,
        actual: impl fmt::Display,
        ok: bool,
    ) {
        self.outcome.checked += 1;
        if !ok {
            self.fail(check, expected.to_string(), actual.to_string());
        }
    }

    fn check_eq<T: PartialEq + fmt::Display>(
        &mut self,
        check: &'static str,
        expected: T,
        actual: T,
    ) {
        let ok = expected == actual;
        self.check(check, expected, actual, ok);
    }

    fn fail(&mut self, check: &'static str, expected: String, actual: String) {
        let failure = Failure {
            suite: self.suite,
            check,
            params: format!("p={} q={}{}", self.p, self.q, self.extra_params),
            expected,
            actual,
            detail: self.detail(),
        };
        self.outcome.failures.push(failure);
    }

    /// `N(x, y)`, recording a failure (and returning `None`) if it is undefined.
    fn genus(&mut self, check: &'static str, x: &BigInt, y: &BigInt) -> Option<BigInt> {
        match n_genus(x, y) {
            Ok(v) => Some(v),
            Err(e) => {
                self.outcome.checked += 1;
                self.fail(check, format!("N({x},{y}) defined"), e.to_string());
                None
            }
        }
    }

    /// `a_i..=a_j` as owned terms.
    fn terms(&self, from: usize, to_inclusive: usize) -> Vec<BigInt> {
        if from > to_inclusive {
            return Vec::new();
        }
        self.a[from..=to_inclusive].to_vec()
    }

    fn a_n(&self) -> &BigInt {
        &self.a[self.n]
    }

    fn finish(self) -> CheckOutcome {
        self.outcome
    }
}

fn bracket(parts: impl IntoIterator<Item = Vec<BigInt>>) -> BracketExpr {
    BracketExpr::new(parts.into_iter().flatten().collect())
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Expansions of `(pq - 1)/p²` and `(pq + 1)/p²` obtained by mirroring the
/// expansion of `q/p` around `a_n ± 1`, including the merge of a trailing
/// `a_1 = 1` into its neighbour.
pub fn verify_recipro(knot: &TorusKnot) -> Result<CheckOutcome> {
    let mut c = OddCase::new("recipro", knot)?;
    let n = c.n;
    let prefix = c.terms(0, n - 1);
    let mut mirror = c.terms(1, n - 1);
    mirror.reverse();
    let up = c.a_n() + 1u32;
    let down = c.a_n() - 1u32;
    let up_down = bracket([
        prefix.clone(),
        vec![up.clone(), down.clone()],
        mirror.clone(),
    ]);
    let down_up = bracket([prefix, vec![down, up], mirror]);
    let (minus_bracket, plus_bracket) = if c.n_odd() {
        (up_down, down_up)
    } else {
        (down_up, up_down)
    };
    let pq = c.p * c.q;
    let p2 = c.p * c.p;
    for (label, bracket, numer) in [
        ("(pq-1)/p^2", minus_bracket, &pq - 1u32),
        ("(pq+1)/p^2", plus_bracket, &pq + 1u32),
    ] {
        let target = Rational::new(numer.clone(), p2.clone()).expect("p != 0");
        match bracket.evaluate() {
            Ok(v) => c.check_eq(label, target.clone(), v),
            Err(e) => c.check(label, &target, e, false),
        }

        let canonical = expand(&numer, &p2).expect("pq±1 is coprime to p^2");
        let mut merged_form = bracket.terms().to_vec();
        if c.a[1].is_one() {
            merged_form.pop();
            *merged_form.last_mut().expect("n >= 2") += 1;
        }
        c.check_eq(
            "trailing a_1 = 1 merge gives the canonical form",
            canonical.to_string(),
            BracketExpr::new(merged_form).to_string(),
        );
        match canonicalize(&bracket) {
            Ok(cf) => c.check_eq("canonicalize", canonical, cf),
            Err(e) => c.check("canonicalize", canonical, e, false),
        }
    }
    Ok(c.finish())
}

/// Type A iff `p_{n-1}` is even (n even) or odd (n odd); the witness is
/// `p_{n-1}` or `p - p_{n-1}` respectively.
pub fn verify_criterion(knot: &TorusKnot) -> Result<CheckOutcome> {
    let mut c = OddCase::new("criterion", knot)?;
    let type_a = c.class.is_type_a();
    let pn1_even = c.pn1.is_even();
    let predicted_a = if c.n_odd() { !pn1_even } else { pn1_even };
    c.check_eq(
        "type from parity of p_(n-1)",
        if predicted_a { "A" } else { "B" },
        c.class.type_label(),
    );

    let witness = c.class.witness().expect("odd knot").clone();
    let predicted_witness = if c.n_odd() {
        c.p - &c.pn1
    } else {
        c.pn1.clone()
    };
    c.check_eq("witness from p_(n-1)", predicted_witness, witness);

    let sign = if (c.n - 1) % 2 == 0 { int(1) } else { int(-1) };
    let det = c.q * &c.pn1 - &c.qn1 * c.p;
    c.check_eq("q_n p_(n-1) - q_(n-1) p_n = (-1)^(n-1)", sign, det);

    c.check(
        "p_(n-1), q_(n-1) of distinct parity",
        "distinct",
        format!("{}, {}", c.pn1, c.qn1),
        c.pn1.is_even() != c.qn1.is_even(),
    );
    if c.n_odd() {
        c.check_eq("n odd: type A iff q_(n-1) even", c.qn1.is_even(), type_a);
    }
    Ok(c.finish())
}

/// `N(pq-1, p²)` and `N(pq+1, p²)` differ by one, with the smaller one
/// selected by the type; plus the intermediate parity facts.
pub fn verify_final(knot: &TorusKnot) -> Result<CheckOutcome> {
    let mut c = OddCase::new("final", knot)?;
    let pq = c.p * c.q;
    let p2 = c.p * c.p;
    let (Some(minus), Some(plus)) = (
        c.genus("N(pq-1,p^2)", &(&pq - 1u32), &p2),
        c.genus("N(pq+1,p^2)", &(&pq + 1u32), &p2),
    ) else {
        return Ok(c.finish());
    };

    if c.class.is_type_a() {
        c.check_eq("type A: N(pq-1)+1 = N(pq+1)", &minus + 1u32, plus.clone());
    } else {
        c.check_eq("type B: N(pq+1)+1 = N(pq-1)", &plus + 1u32, minus.clone());
    }

    let sign = if c.n_odd() { int(-1) } else { int(1) };
    if c.pn1.is_odd() {
        c.check_eq(
            "p_(n-1) odd: N(pq-1) = N(pq+1) + (-1)^n",
            &plus + &sign,
            minus.clone(),
        );

        let trace = skip_trace(&ContinuedFraction::from_terms(c.a.clone()).expect("canonical"));
        let i = c.n - 1;
        c.check_eq(
            "p_(n-1) odd: b_(n-1) = a_(n-1)",
            c.a[i].clone(),
            trace.b()[i].clone(),
        );
        match sigma(&c.qn1, &c.pn1) {
            Ok(s) => {
                c.check(
                    "p_(n-1) odd: Σ(q_(n-1)/p_(n-1)) even",
                    "even",
                    &s,
                    s.is_even(),
                );
                c.check_eq(
                    "p_(n-1) odd: b_0+...+b_(n-1) = Σ(q_(n-1)/p_(n-1))",
                    s,
                    trace.partial_sum(i),
                );
            }
            Err(e) => c.check("Σ(q_(n-1)/p_(n-1))", "defined", e, false),
        }
    } else {
        c.check_eq(
            "p_(n-1) even: N(pq-1) + (-1)^n = N(pq+1)",
            plus.clone(),
            &minus + &sign,
        );
        match sigma(&c.pn1, &c.qn1) {
            Ok(s) => c.check(
                "p_(n-1) even: Σ(p_(n-1)/q_(n-1)) even",
                "even",
                &s,
                s.is_even(),
            ),
            Err(e) => c.check("Σ(p_(n-1)/q_(n-1))", "defined", e, false),
        }
    }

    c.check_eq(
        "crosscap is the smaller value",
        (&minus).min(&plus).clone(),
        c.knot.crosscap(),
    );
    Ok(c.finish())
}

/// The `K_A`/`K_B` split and the genus-sum decomposition.
pub fn verify_sum(knot: &TorusKnot) -> Result<CheckOutcome> {
    let mut c = OddCase::new("sum", knot)?;
    let split = c.knot.split()?;
    let (a, b) = (&split.knot_a, &split.knot_b);
    c.check_eq("r_1 + r_2 = p", c.p.clone(), &a.r + &b.r);
    c.check_eq("s_1 + s_2 = q", c.q.clone(), &a.s + &b.s);

    let parity = format!(
        "r1 {} s1 {} r2 {} s2 {}",
        a.r.is_even(),
        a.s.is_even(),
        b.r.is_even(),
        b.s.is_even()
    );
    let expected_parity = if c.class.is_type_a() {
        "r1 true s1 false r2 false s2 true"
    } else {
        "r1 false s1 true r2 true s2 false"
    };
    c.check_eq(
        "parity pattern of (r_1,s_1,r_2,s_2)",
        expected_parity.to_owned(),
        parity,
    );

    c.check_eq(
        "1 + r_1 q = 0 (mod p)",
        BigInt::zero(),
        (&a.r * c.q + 1u32).mod_floor(c.p),
    );
    let witness = c.class.witness().expect("odd").clone();
    c.check_eq("r_1 is the witness x", witness, a.r.clone());
    c.check_eq(
        "|s_1 p - r_1 q| = 1",
        BigInt::one(),
        (&a.s * c.p - &a.r * c.q).abs(),
    );

    let pq = c.p * c.q;
    let p2 = c.p * c.p;
    let target_numer = if c.class.is_type_a() {
        &pq - 1u32
    } else {
        &pq + 1u32
    };
    match (
        c.knot.genus_sum_decomposition(),
        n_genus(&target_numer, &p2),
    ) {
        (Ok((left, right)), Ok(target)) => {
            c.check_eq("decomposition sums to N(pq∓1,p^2)", target, left + right)
        }
        (Err(e), _) | (_, Err(e)) => c.check("decomposition", "defined", e, false),
    }
    Ok(c.finish())
}

/// `[a_1, ..., a_{n-1}, a_n - 1] = (p - p_{n-1})/(q - q_{n-1})`, exactly on
/// the unreduced pair, including the `a_n = 2` branch.
pub fn verify_claim(knot: &TorusKnot) -> Result<CheckOutcome> {
    let mut c = OddCase::new("claim", knot)?;
    let n = c.n;
    let bracket_expr = bracket([c.terms(1, n - 1), vec![c.a_n() - 1u32]]);
    let expected = (c.p - &c.pn1, c.q - &c.qn1);
    let (num, den) = bracket_expr.raw_fraction();
    c.check_eq("[a_1..a_(n-1),a_n-1] numerator", expected.0.clone(), num);
    c.check_eq("[a_1..a_(n-1),a_n-1] denominator", expected.1.clone(), den);

    let canonical_terms = if c.a_n() == &int(2) {
        let mut t = c.terms(1, n - 1);
        *t.last_mut().expect("n >= 2") += 1u32;
        t
    } else {
        bracket_expr.terms().to_vec()
    };
    let check = if c.a_n() == &int(2) {
        "a_n = 2: equals [a_1..a_(n-1)+1]"
    } else {
        "a_n > 2: bracket is canonical"
    };
    match canonicalize(&bracket_expr) {
        Ok(cf) => c.check_eq(
            check,
            BracketExpr::new(canonical_terms).to_string(),
            cf.to_string(),
        ),
        Err(e) => c.check(check, "defined", e, false),
    }
    Ok(c.finish())
}

/// Continued-fraction expansions of the curve types arising for a surface
/// with boundary slope `pq ± 3`, for each admissible `k` in the window, and
/// the genus equalities derived from them (n odd).
pub fn verify_delta3(knot: &TorusKnot, k_min: i64, k_max: i64) -> Result<CheckOutcome> {
    let mut total = CheckOutcome::default();
    let base = OddCase::new("delta3", knot)?;
    let n_odd = base.n_odd();
    for k in k_min..=k_max {
        // n odd: k even; n even: k odd.
        if (k.rem_euclid(2) == 0) != n_odd {
            continue;
        }
        let mut c = OddCase::new("delta3", knot)?;
        c.extra_params = format!(" k={k}");
        delta3_case(&mut c, k);
        total.absorb(c.finish());
    }
    Ok(total)
}

fn delta3_case(c: &mut OddCase<'_>, k: i64) {
    let n = c.n;
    let (p, q) = (c.p.clone(), c.q.clone());
    let (pn1, qn1) = (c.pn1.clone(), c.qn1.clone());
    let head = c.terms(1, n - 1);
    let a_n = c.a_n().clone();
    let kk = int(k);
    let abs_k = int(k.abs());
    let three_k_minus_1 = int(3 * k - 1);
    let two_minus_3k = int(2 - 3 * k);
    let zero = vec![int(0)];
    let t = |v: &[i64]| -> Vec<BigInt> { v.iter().copied().map(int).collect() };

    let (first, second, first_bracket, second_bracket);
    if c.n_odd() {
        first = (
            &pn1 * 3u32 + &p * &three_k_minus_1,
            &qn1 * 3u32 + &q * &three_k_minus_1,
        );
        second = (
            -(&qn1 * 3u32) + &q * &two_minus_3k,
            -(&pn1 * 3u32) + &p * &two_minus_3k,
        );
        if k <= -2 {
            first_bracket = bracket([
                head.clone(),
                vec![&a_n - 1u32, int(1), &abs_k - 1u32, int(3)],
            ]);
            second_bracket = bracket([
                zero.clone(),
                head.clone(),
                vec![&a_n - 1u32, int(1), &abs_k - 1u32],
                t(&[1, 2]),
            ]);
        } else if k == 0 {
            first_bracket = bracket([head.clone(), vec![&a_n - 3u32]]);
            second_bracket = bracket([zero.clone(), head.clone(), vec![&a_n - 2u32, int(2)]]);
        } else {
            first_bracket = bracket([head.clone(), vec![a_n.clone(), &kk - 1u32], t(&[1, 2])]);
            second_bracket = bracket([
                zero.clone(),
                head.clone(),
                vec![a_n.clone(), &kk - 1u32, int(3)],
            ]);
        }
    } else {
        first = (
            -(&pn1 * 3u32) + &p * &three_k_minus_1,
            -(&qn1 * 3u32) + &q * &three_k_minus_1,
        );
        second = (
            &qn1 * 3u32 + &q * &two_minus_3k,
            &pn1 * 3u32 + &p * &two_minus_3k,
        );
        if k <= -1 {
            first_bracket = bracket([head.clone(), vec![a_n.clone(), abs_k.clone(), int(3)]]);
            second_bracket = bracket([
                zero.clone(),
                head.clone(),
                vec![a_n.clone(), abs_k.clone()],
                t(&[1, 2]),
            ]);
        } else if k == 1 {
            first_bracket = bracket([head.clone(), vec![&a_n - 2u32, int(2)]]);
            second_bracket = bracket([zero.clone(), head.clone(), vec![&a_n - 3u32]]);
        } else {
            first_bracket = bracket([
                head.clone(),
                vec![&a_n - 1u32, int(1), &kk - 2u32],
                t(&[1, 2]),
            ]);
            second_bracket = bracket([
                zero.clone(),
                head.clone(),
                vec![&a_n - 1u32, int(1), &kk - 2u32, int(3)],
            ]);
        }
    }

    for (label, bracket_expr, (num, den)) in [
        ("K_1 type as a bracket", &first_bracket, &first),
        ("K_2 type as a bracket", &second_bracket, &second),
    ] {
        let ok = bracket_expr.equals_ratio(num, den);
        let (bn, bd) = bracket_expr.raw_fraction();
        c.check(
            label,
            format!("{num}/{den}"),
            format!("{bracket_expr} = {bn}/{bd}"),
            ok,
        );
    }

    if !c.n_odd() {
        // Only the n odd equalities are stated explicitly.
        c.outcome.skipped += 2;
        return;
    }
    let bump = if k == 0 {
        None
    } else {
        Some(int(k.abs() / 2 + 1))
    };

    // N(first) = N(p - p_{n-1}, q - q_{n-1}) - 1 (k = 0) or + |k|/2 + 1
    let rhs_args = (&p - &pn1, &q - &qn1);
    let rhs_offset = bump.clone().unwrap_or_else(|| int(-1));
    genus_equality(
        c,
        "N(K_1) from N(p-p_(n-1),q-q_(n-1))",
        &first,
        &rhs_args,
        &rhs_offset,
    );

    // N(second) = N(q_{n-1}, p_{n-1}) + 1 (k = 0) or + |k|/2 + 1
    let rhs_args = (qn1, pn1);
    let rhs_offset = bump.unwrap_or_else(|| int(1));
    genus_equality(
        c,
        "N(K_2) from N(q_(n-1),p_(n-1))",
        &second,
        &rhs_args,
        &rhs_offset,
    );
}

/// Checks `N(lhs) = N(rhs) + offset` when both first arguments are even.
/// A pair whose entries are both negative names the same lens space as its
/// negation; anything else non-positive is skipped.
fn genus_equality(
    c: &mut OddCase<'_>,
    check: &'static str,
    lhs: &(BigInt, BigInt),
    rhs: &(BigInt, BigInt),
    offset: &BigInt,
) {
    let orient = |(x, y): &(BigInt, BigInt)| -> Option<(BigInt, BigInt)> {
        match (
            x.is_positive(),
            y.is_positive(),
            x.is_negative() && y.is_negative(),
        ) {
            (true, true, _) => Some((x.clone(), y.clone())),
            (_, _, true) => Some((-x, -y)),
            _ => None,
        }
    };
    let (Some(l), Some(r)) = (orient(lhs), orient(rhs)) else {
        c.outcome.skipped += 1;
        return;
    };
    if l.0.is_odd() || r.0.is_odd() {
        c.outcome.skipped += 1;
        return;
    }
    let (Some(nl), Some(nr)) = (c.genus(check, &l.0, &l.1), c.genus(check, &r.0, &r.1)) else {
        return;
    };
    c.check(
        check,
        format!(
            "N({},{}) = {} = N({},{}) {:+}",
            l.0,
            l.1,
            &nr + offset,
            r.0,
            r.1,
            offset
        ),
        format!("N({},{}) = {}", l.0, l.1, nl),
        nl == nr + offset,
    );
}

/// `2 · step_reduce_count = Σ(x/y)` and `Σ(x/y)` even, for even `x`.
pub fn verify_oracle(x: &BigInt, y: &BigInt) -> Result<CheckOutcome> {
    let cf = expand(x, y)?;
    let mut outcome = CheckOutcome::default();
    let mut record = |check: &'static str, expected: String, actual: String| {
        outcome.checked += 1;
        if expected != actual {
            outcome.failures.push(Failure {
                suite: "oracle",
                check,
                params: format!("x={x} y={y}"),
                expected,
                actual,
                detail: format!("x/y={cf}"),
            });
        }
    };
    let s = skip_trace(&cf).sigma().clone();
    match step_reduce_count(&cf) {
        Ok(steps) => record("2 * steps = Σ", s.to_string(), (steps * 2u32).to_string()),
        Err(e) => record("2 * steps = Σ", s.to_string(), e.to_string()),
    }
    record(
        "Σ even",
        "even".into(),
        if s.is_even() { "even" } else { "odd" }.into(),
    );
    Ok(outcome)
}

/// Odd coprime pairs `3 <= q < p <= max_p`, as normalized knots.
pub fn odd_knots(max_p: u64) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    for p in (5..=max_p).step_by(2) {
        for q in (3..p).step_by(2) {
            if p.gcd(&q) == 1 {
                out.push(TorusKnot::new(int(p as i64), int(q as i64)).expect("normalized"));
            }
        }
    }
    out
}

/// Coprime `(x, y)` with `x` even in `2..=max_x` and `1 <= y <= max_y`.
pub fn even_numerator_pairs(max_x: u64, max_y: u64) -> Vec<(BigInt, BigInt)> {
    let mut out = Vec::new();
    for x in (2..=max_x).step_by(2) {
        for y in 1..=max_y {
            if x.gcd(&y) == 1 {
                out.push((BigInt::from(x), BigInt::from(y)));
            }
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteOptions {
    pub k_min: i64,
    pub k_max: i64,
    pub execution: Execution,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            k_min: DEFAULT_K_MIN,
            k_max: DEFAULT_K_MAX,
            execution: Execution::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionSummary {
    pub suite: Suite,
    pub checked: u64,
    pub skipped: u64,
    pub failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub suite: Suite,
    pub max_p: u64,
    pub k_window: (i64, i64),
    pub checked: u64,
    pub skipped: u64,
    pub failures: Vec<Failure>,
    pub sections: Vec<SectionSummary>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run_suite(name: &str, max_p: u64) -> Result<VerificationReport> {
    Ok(run_suite_with(
        name.parse()?,
        max_p,
        &SuiteOptions::default(),
    ))
}

pub fn run_suite_with(suite: Suite, max_p: u64, options: &SuiteOptions) -> VerificationReport {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::INDIVIDUAL.to_vec(),
        s => vec![s],
    };
    let mut report = VerificationReport {
        suite,
        max_p,
        k_window: (options.k_min, options.k_max),
        checked: 0,
        skipped: 0,
        failures: Vec::new(),
        sections: Vec::new(),
    };
    let knots = odd_knots(max_p);
    for s in suites {
        let outcome = run_single(s, max_p, &knots, options);
        report.sections.push(SectionSummary {
            suite: s,
            checked: outcome.checked,
            skipped: outcome.skipped,
            failures: outcome.failures.len(),
        });
        report.checked += outcome.checked;
        report.skipped += outcome.skipped;
        report.failures.extend(outcome.failures);
    }
    report
}

fn run_single(
    suite: Suite,
    max_p: u64,
    knots: &[TorusKnot],
    options: &SuiteOptions,
) -> CheckOutcome {
    let exec = options.execution;
    let per_knot = |f: &(dyn Fn(&TorusKnot) -> Result<CheckOutcome> + Sync)| -> CheckOutcome {
        merge(map_ordered(exec, knots, |k| {
            f(k).expect("odd_knots yields only odd knots")
        }))
    };
    match suite {
        Suite::Recipro => per_knot(&verify_recipro),
        Suite::Criterion => per_knot(&verify_criterion),
        Suite::Final => per_knot(&verify_final),
        Suite::Sum => per_knot(&verify_sum),
        Suite::Claim => per_knot(&verify_claim),
        Suite::Delta3 => per_knot(&|k| verify_delta3(k, options.k_min, options.k_max)),
        Suite::Oracle => {
            let pairs = even_numerator_pairs(max_p, max_p);
            merge(map_ordered(exec, &pairs, |(x, y)| {
                verify_oracle(x, y).expect("pairs are coprime")
            }))
        }
        Suite::All => unreachable!("expanded by run_suite_with"),
    }
}

fn merge(outcomes: Vec<CheckOutcome>) -> CheckOutcome {
    let mut total = CheckOutcome::default();
    for o in outcomes {
        total.absorb(o);
    }
    total
}
