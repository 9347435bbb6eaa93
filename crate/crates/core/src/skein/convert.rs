//! Change of basis between `eta^k T(p,q)` and `d^k (p,q)`.

use std::collections::HashMap;
use std::fmt;

use dashu_int::IBig;

use super::chebyshev::{chebyshev_t, power_in_t_prime};
use super::{binomial, BasisKey, MulticurveElement, MulticurveKey, SkeinElement, PQ};
use crate::laurent::LaurentPoly;

fn q2() -> LaurentPoly {
    LaurentPoly::from_terms([(2, 1), (-2, 1)])
}

/// `(x + c)^k` as coefficients of `x^j`.
fn binomial_shift(k: u32, c: &LaurentPoly) -> Vec<LaurentPoly> {
    (0..=k)
        .map(|j| c.pow(k - j) * LaurentPoly::from(binomial(k, j)))
        .collect()
}

/// Expands `T_d` in cables of the primitive curve and `eta^k` binomially
/// in `d`.
pub fn to_multicurve(x: &SkeinElement) -> MulticurveElement {
    let mut cheb: HashMap<i64, Vec<IBig>> = HashMap::new();
    let mut eta_exp: HashMap<u32, Vec<LaurentPoly>> = HashMap::new();
    let mut out = MulticurveElement::zero();
    for (key, coeff) in x {
        let (prim, g) = key.curve.primitive();
        let cables: Vec<(PQ, IBig)> = if g == 0 {
            vec![(PQ::EMPTY, IBig::ONE)]
        } else {
            cheb.entry(g)
                .or_insert_with(|| chebyshev_t(g as usize))
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (prim.times(i as i64), c.clone()))
                .collect()
        };
        let boundary = eta_exp.entry(key.eta).or_insert_with(|| binomial_shift(key.eta, &q2()));
        for (j, bc) in boundary.iter().enumerate() {
            let scaled = coeff * bc;
            for (curve, c) in &cables {
                out.add_term(MulticurveKey { curve: *curve, boundary: j as u32 }, scaled.scale(c));
            }
        }
    }
    out
}

/// Inverse of [`to_multicurve`]: powers `x^n` go to the `T'` basis
/// (`T'_0 = 1`, `T'_k = T_k` otherwise) and `d^k = (eta - [2])^k`.
pub fn from_multicurve(x: &MulticurveElement) -> SkeinElement {
    let mut powers: HashMap<i64, Vec<IBig>> = HashMap::new();
    let mut bd_exp: HashMap<u32, Vec<LaurentPoly>> = HashMap::new();
    let minus_q2 = -q2();
    let mut out = SkeinElement::zero();
    for (key, coeff) in x {
        let (prim, g) = key.curve.primitive();
        let parts: Vec<(PQ, IBig)> = if g == 0 {
            vec![(PQ::EMPTY, IBig::ONE)]
        } else {
            powers
                .entry(g)
                .or_insert_with(|| power_in_t_prime(g as usize))
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (prim.times(k as i64), c.clone()))
                .collect()
        };
        let eta = bd_exp.entry(key.boundary).or_insert_with(|| binomial_shift(key.boundary, &minus_q2));
        for (l, ec) in eta.iter().enumerate() {
            let scaled = coeff * ec;
            for (curve, c) in &parts {
                out.add_term(BasisKey { curve: *curve, eta: l as u32 }, scaled.scale(c));
            }
        }
    }
    out
}

/// A skein element read in the second-kind threading: the curve part of each
/// key denotes `S_g(primitive)` instead of `T_g(primitive)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SThreaded(pub SkeinElement);

/// Rewrites `x` using `T'_n = S_n - S_{n-2}` (`n >= 2`), `T'_1 = S_1`,
/// `T'_0 = S_0`.
pub fn to_s_basis(x: &SkeinElement) -> SThreaded {
    let mut out = SkeinElement::zero();
    for (key, coeff) in x {
        out.add_term(*key, coeff.clone());
        let (prim, g) = key.curve.primitive();
        if g >= 2 {
            out.add_term(BasisKey { curve: prim.times(g - 2), eta: key.eta }, -coeff);
        }
    }
    SThreaded(out)
}

impl fmt::Display for SThreaded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::render::render_text(&self.0, "S"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mc(terms: &[(u32, i64, i64, LaurentPoly)]) -> MulticurveElement {
        terms.iter().map(|(b, p, q, c)| (MulticurveKey::new(*b, *p, *q), c.clone())).collect()
    }

    fn c(v: i64) -> LaurentPoly {
        LaurentPoly::constant(v)
    }

    #[test]
    fn t22_expands() {
        let got = to_multicurve(&SkeinElement::t(2, 2));
        assert_eq!(got, mc(&[(0, 2, 2, c(1)), (0, 0, 0, c(-2))]));
    }

    #[test]
    fn eta_expands() {
        let got = to_multicurve(&SkeinElement::eta_pow(1));
        assert_eq!(got, mc(&[(1, 0, 0, c(1)), (0, 0, 0, q2())]));
    }

    #[test]
    fn t30_expands() {
        // T_3 = x^3 - 3x
        let got = to_multicurve(&SkeinElement::t(3, 0));
        assert_eq!(got, mc(&[(0, 3, 0, c(1)), (0, 1, 0, c(-3))]));
    }

    #[test]
    fn multicurves_to_chebyshev() {
        let t = |p, q| SkeinElement::t(p, q);
        assert_eq!(
            from_multicurve(&MulticurveElement::curve(2, 2)),
            &t(2, 2) + &SkeinElement::scalar(c(2))
        );
        assert_eq!(
            from_multicurve(&MulticurveElement::boundary()),
            &SkeinElement::eta_pow(1) - &SkeinElement::scalar(q2())
        );
        // x^4 = T'_4 + 4 T'_2 + 6 T'_0
        let mut expected = t(4, 0);
        expected.add_assign(&t(2, 0).scale(&c(4)));
        expected.add_assign(&SkeinElement::scalar(c(6)));
        assert_eq!(from_multicurve(&MulticurveElement::curve(4, 0)), expected);
    }

    #[test]
    fn s_threading_of_low_degrees() {
        // T(2,0) = S_2 - S_0 ; T(1,0) = S_1
        let SThreaded(s) = to_s_basis(&SkeinElement::t(2, 0));
        assert_eq!(s, &SkeinElement::t(2, 0) - &SkeinElement::one());
        let SThreaded(s) = to_s_basis(&SkeinElement::t(1, 0));
        assert_eq!(s, SkeinElement::t(1, 0));
    }

    fn arb_skein() -> impl Strategy<Value = SkeinElement> {
        prop::collection::vec((0u32..=3, -8i64..=8, -8i64..=8, -3i64..=3, -4i64..=4), 0..5).prop_map(|v| {
            v.into_iter()
                .map(|(k, p, q, coef, e)| (BasisKey::new(k, p, q), LaurentPoly::monomial(e, coef.into())))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn round_trip(x in arb_skein()) {
            prop_assert_eq!(from_multicurve(&to_multicurve(&x)), x.clone());
        }

        #[test]
        fn round_trip_multicurve(x in arb_skein()) {
            let m = to_multicurve(&x);
            prop_assert_eq!(to_multicurve(&from_multicurve(&m)), m);
        }
    }
}
