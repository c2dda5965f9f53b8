use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use tkc_core::exec::{map_ordered, Execution};
use tkc_core::knot::{normalize_i64, Classification, Knot, TorusKnot};
use tkc_core::verify::odd_knots;

fn nontrivial_knots(max: i64) -> Vec<TorusKnot> {
    let mut out = Vec::new();
    for p in 2..=max {
        for q in 2..=max {
            if let Ok(Knot::Torus(k)) = normalize_i64(p, q) {
                if k.p() == &BigInt::from(p) && k.q() == &BigInt::from(q) {
                    out.push(k);
                }
            }
        }
    }
    out
}

#[test]
fn normalization_ignores_sign_and_order() {
    for p in -60i64..=60 {
        for q in -60i64..=60 {
            if p == 0 || q == 0 || p.gcd(&q) != 1 {
                continue;
            }
            let k = normalize_i64(p, q).unwrap();
            assert_eq!(normalize_i64(q, p).unwrap(), k);
            assert_eq!(normalize_i64(-p, q).unwrap(), k);
            assert_eq!(normalize_i64(p, -q).unwrap(), k);
        }
    }
}

#[test]
fn knot_invariants_up_to_99() {
    let knots = nontrivial_knots(99);
    assert!(knots.len() > 2_000);
    let bad: Vec<String> = map_ordered(Execution::Parallel, &knots, |k| {
        let r = k.report();
        let mut errs = Vec::new();
        if !r.boundary_slope.is_even() {
            errs.push("slope parity");
        }
        if r.crosscap > r.upper_bound.value {
            errs.push("crossing bound");
        }
        if r.crosscap >= &r.genus * 2u32 {
            errs.push("crosscap < 2g");
        }
        if r.gamma != r.crosscap {
            errs.push("gamma");
        }
        if r.crosscap.is_zero() {
            errs.push("crosscap positive");
        }
        errs.into_iter()
            .map(|e| format!("{k}: {e}"))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn split_invariants_up_to_199() {
    let knots = odd_knots(199);
    let bad: Vec<String> = map_ordered(Execution::Parallel, &knots, |k| {
        let s = k.split().unwrap();
        let (a, b) = (&s.knot_a, &s.knot_b);
        let mut errs = Vec::new();
        if &(&a.r + &b.r) != k.p() || &(&a.s + &b.s) != k.q() {
            errs.push("sums");
        }
        let pattern = (a.r.is_even(), a.s.is_even(), b.r.is_even(), b.s.is_even());
        let expected = match k.classify() {
            Classification::OddTypeA { .. } => (true, false, false, true),
            Classification::OddTypeB { .. } => (false, true, true, false),
            Classification::Even => unreachable!(),
        };
        if pattern != expected {
            errs.push("parity");
        }
        if !(&a.r * k.q() + 1u32).mod_floor(k.p()).is_zero() {
            errs.push("1 + r_1 q = 0 mod p");
        }
        let (left, right) = k.genus_sum_decomposition().unwrap();
        if left + right != k.crosscap() {
            errs.push("decomposition");
        }
        errs.into_iter()
            .map(|e| format!("{k}: {e}"))
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn trefoil_family() {
    for q in (3..200i64).step_by(2) {
        let k = TorusKnot::from_i64(2, q).unwrap();
        assert_eq!(k.crosscap(), BigInt::from(1));
        assert_eq!(k.boundary_slope(), BigInt::from(2 * q));
    }
}
