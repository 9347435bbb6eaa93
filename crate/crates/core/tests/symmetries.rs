use skeintorus::discrepancy::Engine;
use skeintorus::mapping::{opp, rev, tw, tw_pow};
use skeintorus::oracle::{oracle_multiply_skein, OracleConfig};
use skeintorus::skein::SkeinElement;

/// `D(p,q;r,s)` from a state sum, independent of the recursion.
fn oracle_discrepancy(p: i64, q: i64, r: i64, s: i64) -> SkeinElement {
    let xy = oracle_multiply_skein(&SkeinElement::t(p, q), &SkeinElement::t(r, s), &OracleConfig::default()).unwrap();
    let det = p * s - r * q;
    let mut rest = xy;
    rest.sub_assign(&SkeinElement::t(p + r, q + s).shift(det));
    rest.sub_assign(&SkeinElement::t(p - r, q - s).shift(-det));
    rest.divide_by_eta().expect("remainder divisible by eta")
}

#[test]
fn twist_shifts_q_by_p() {
    let mut e = Engine::new();
    for p in 1..=10 {
        for q in 0..p {
            assert_eq!(tw(&e.discrepancy(p, q, 0, 1)), e.discrepancy(p, p + q, 0, 1), "p={p} q={q}");
        }
    }
}

#[test]
fn opposition_reflects_q() {
    let mut e = Engine::new();
    for p in 1..=10 {
        for q in 0..p {
            assert_eq!(opp(&e.discrepancy(p, q, 0, 1)), e.discrepancy(p, p - q, 0, 1), "p={p} q={q}");
        }
    }
}

#[test]
fn reverse_swaps_slopes() {
    let mut e = Engine::new();
    for p in 1..=8 {
        for q in 0..=8 {
            assert_eq!(rev(&e.discrepancy(1, 0, q, p)), e.discrepancy(p, q, 0, 1), "p={p} q={q}");
        }
    }
}

#[test]
fn d10_from_twisted_reverse() {
    let mut e = Engine::new();
    for q in 1..=6 {
        for p in 0..=12 {
            let (a, c) = (p / q, p % q);
            let expected = rev(&tw_pow(&e.discrepancy(q, c, 0, 1), a));
            assert_eq!(e.discrepancy(1, 0, p, q), expected, "p={p} q={q}");
        }
    }
}

#[test]
fn symmetries_hold_for_state_sums() {
    for p in 1..=5 {
        for q in 0..p {
            let d = oracle_discrepancy(p, q, 0, 1);
            assert_eq!(tw(&d), oracle_discrepancy(p, p + q, 0, 1), "twist p={p} q={q}");
            assert_eq!(opp(&d), oracle_discrepancy(p, p - q, 0, 1), "opp p={p} q={q}");
            assert_eq!(rev(&oracle_discrepancy(1, 0, q, p)), d, "rev p={p} q={q}");
        }
    }
}

#[test]
fn recursion_matches_state_sums() {
    let mut e = Engine::new();
    for (p, q, r, s) in [(4, 1, 0, 1), (5, 2, 0, 1), (7, 3, 0, 1), (3, 0, 0, 2), (3, 1, 1, 3), (2, -1, 3, 2)] {
        assert_eq!(e.discrepancy(p, q, r, s), oracle_discrepancy(p, q, r, s), "D({p},{q};{r},{s})");
    }
}

#[test]
fn mirror_conjugates_products() {
    let cfg = OracleConfig::default();
    for (p, q, r, s) in [(2, 1, 0, 1), (3, 1, 1, 2), (4, -1, 1, 1), (3, 2, 2, -1)] {
        let (x, y) = (SkeinElement::t(p, q), SkeinElement::t(r, s));
        let xy = oracle_multiply_skein(&x, &y, &cfg).unwrap();
        let yx = oracle_multiply_skein(&y, &x, &cfg).unwrap();
        assert_eq!(xy.conjugate_coeffs(), yx, "({p},{q}) ({r},{s})");
    }
}
