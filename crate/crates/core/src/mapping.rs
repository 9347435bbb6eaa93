//! `SL(2,Z)` acting on slopes and skein elements, and the twist /
//! opposition / reverse symmetries of discrepancies.

use num_integer::Integer;
use thiserror::Error;

use crate::skein::{BasisKey, SkeinElement, PQ};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MappingError {
    #[error("matrix ({a} {c}; {b} {d}) does not have determinant 1")]
    NotUnimodular { a: i64, b: i64, c: i64, d: i64 },
    #[error("second slope is the empty link")]
    EmptySecond,
    #[error("slopes ({p},{q}) and ({r},{s}) are parallel")]
    Parallel { p: i64, q: i64, r: i64, s: i64 },
}

/// The matrix `(a c; b d)`, acting on column vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct MappingClass {
    a: i64,
    b: i64,
    c: i64,
    d: i64,
}

impl MappingClass {
    pub const IDENTITY: MappingClass = MappingClass { a: 1, b: 0, c: 0, d: 1 };

    /// Columns `(a, b)` and `(c, d)`.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self, MappingError> {
        if a * d - b * c != 1 {
            return Err(MappingError::NotUnimodular { a, b, c, d });
        }
        Ok(Self { a, b, c, d })
    }

    /// `(1 0; 1 1)`: `(p, q) -> (p, p + q)`.
    pub fn twist() -> Self {
        Self { a: 1, b: 1, c: 0, d: 1 }
    }

    /// `twist^n`, any integer `n`.
    pub fn twist_pow(n: i64) -> Self {
        Self { a: 1, b: n, c: 0, d: 1 }
    }

    pub fn entries(&self) -> (i64, i64, i64, i64) {
        (self.a, self.b, self.c, self.d)
    }

    /// Adjugate, which is the inverse since the determinant is 1.
    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    /// Matrix product `self * other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a * other.a + self.c * other.b,
            b: self.b * other.a + self.d * other.b,
            c: self.a * other.c + self.c * other.d,
            d: self.b * other.c + self.d * other.d,
        }
    }

    /// The raw matrix-vector product, not canonicalized.
    pub fn apply(&self, p: i64, q: i64) -> (i64, i64) {
        (self.a * p + self.c * q, self.b * p + self.d * q)
    }

    pub fn act_on_pq(&self, v: PQ) -> PQ {
        let (p, q) = self.apply(v.p(), v.q());
        PQ::new(p, q)
    }

    /// Acts on curve parts only; powers of `eta` and coefficients are kept.
    pub fn act_on_skein(&self, x: &SkeinElement) -> SkeinElement {
        if *self == Self::IDENTITY {
            return x.clone();
        }
        x.map_keys(|k| BasisKey { curve: self.act_on_pq(k.curve), eta: k.eta }, false)
    }
}

/// Result of [`reduce_pair`]: `phi` moves `(r, s)` to `(0, s1)` and `(p, q)`
/// to `+-(p1, q1)` with `0 <= q1 < p1`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Reduced {
    pub phi: MappingClass,
    pub p1: i64,
    pub q1: i64,
    pub s1: i64,
}

/// Extended Euclid: `(g, x, y)` with `x a + y b = g = gcd(a, b) >= 0`.
fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Finds `phi` in `SL(2,Z)` bringing `D(p,q;r,s)` to `D(p1,q1;0,s1)`.
///
/// `D(-v; w) = D(v; w)`, so when `phi (p,q)` has negative first coordinate
/// the reduced pair records its negation.
pub fn reduce_pair(p: i64, q: i64, r: i64, s: i64) -> Result<Reduced, MappingError> {
    if r == 0 && s == 0 {
        return Err(MappingError::EmptySecond);
    }
    let det = p * s - r * q;
    if det == 0 {
        return Err(MappingError::Parallel { p, q, r, s });
    }
    let (g, x, y) = ext_gcd(r, s);
    // columns (s/g, x) and (-r/g, y); determinant (s y + r x)/g = 1
    let phi = MappingClass { a: s / g, b: x, c: -r / g, d: y };
    debug_assert_eq!(phi.apply(r, s), (0, g));
    let (mut p1, mut q1) = phi.apply(p, q);
    debug_assert_eq!(p1 * g, det);
    if p1 < 0 {
        p1 = -p1;
        q1 = -q1;
    }
    let t = -q1.div_euclid(p1);
    let phi = MappingClass::twist_pow(t).compose(&phi);
    q1 += t * p1;
    Ok(Reduced { phi, p1, q1, s1: g })
}

/// `(k, i, j) -> (k, i, j + i)`
pub fn tw(x: &SkeinElement) -> SkeinElement {
    tw_pow(x, 1)
}

/// `(k, i, j) -> (k, i, j - i)`
pub fn tw_inv(x: &SkeinElement) -> SkeinElement {
    tw_pow(x, -1)
}

/// `n`-fold twist, `n` of either sign.
pub fn tw_pow(x: &SkeinElement, n: i64) -> SkeinElement {
    if n == 0 {
        return x.clone();
    }
    x.map_keys(|k| BasisKey::new(k.eta, k.curve.p(), k.curve.q() + n * k.curve.p()), false)
}

/// `(k, i, j) -> (k, i, i - j)` with `A <-> A^-1` on coefficients.
pub fn opp(x: &SkeinElement) -> SkeinElement {
    x.map_keys(|k| BasisKey::new(k.eta, k.curve.p(), k.curve.p() - k.curve.q()), true)
}

/// `(k, i, j) -> (k, j, i)`
pub fn rev(x: &SkeinElement) -> SkeinElement {
    x.map_keys(|k| BasisKey::new(k.eta, k.curve.q(), k.curve.p()), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::LaurentPoly;
    use proptest::prelude::*;

    fn det(p: i64, q: i64, r: i64, s: i64) -> i64 {
        p * s - r * q
    }

    #[test]
    fn action_on_slopes() {
        assert_eq!(MappingClass::IDENTITY.act_on_pq(PQ::new(3, 2)), PQ::new(3, 2));
        assert_eq!(MappingClass::twist().act_on_pq(PQ::new(3, 2)), PQ::new(3, 5));
        let rot = MappingClass::new(0, 1, -1, 0).unwrap();
        assert_eq!(rot.act_on_pq(PQ::new(0, 1)), PQ::new(1, 0));
        assert!(MappingClass::new(2, 0, 0, 1).is_err());
    }

    #[test]
    fn action_on_skein() {
        let x = SkeinElement::t(1, 1).scale(&LaurentPoly::a_pow(1));
        assert_eq!(MappingClass::twist().act_on_skein(&x), SkeinElement::t(1, 2).scale(&LaurentPoly::a_pow(1)));
        assert_eq!(MappingClass::twist().act_on_skein(&SkeinElement::eta_pow(1)), SkeinElement::eta_pow(1));
        assert_eq!(MappingClass::IDENTITY.act_on_skein(&x), x);
    }

    #[test]
    fn inverse_and_compose() {
        let m = MappingClass::new(2, 3, 1, 2).unwrap();
        assert_eq!(m.compose(&m.inverse()), MappingClass::IDENTITY);
        assert_eq!(MappingClass::twist_pow(3), MappingClass::twist().compose(&MappingClass::twist_pow(2)));
    }

    #[test]
    fn reduce_already_reduced() {
        let r = reduce_pair(10, 4, 0, 1).unwrap();
        assert_eq!((r.p1, r.q1, r.s1), (10, 4, 1));
        assert_eq!(r.phi, MappingClass::IDENTITY);
    }

    #[test]
    fn reduce_examples() {
        let r = reduce_pair(2, 1, 2, 3).unwrap();
        assert_eq!(r.phi.apply(2, 3), (0, 1));
        assert_eq!(r.p1 * r.s1, 4);
        assert_eq!(reduce_pair(5, 2, 0, -3).unwrap().s1, 3);
        let a = reduce_pair(5, 2, 0, -3).unwrap();
        let b = reduce_pair(5, 2, 0, 3).unwrap();
        assert_eq!((a.p1, a.q1, a.s1), (b.p1, b.q1, b.s1));
        assert_eq!(reduce_pair(1, 1, 0, 0), Err(MappingError::EmptySecond));
        assert!(reduce_pair(2, 2, 1, 1).is_err());
    }

    #[test]
    fn symmetry_key_maps() {
        let x = SkeinElement::t(1, 0).scale(&LaurentPoly::a_pow(-1));
        assert_eq!(tw(&x), SkeinElement::t(1, 1).scale(&LaurentPoly::a_pow(-1)));
        assert_eq!(tw_inv(&tw(&x)), x);
        let q2 = LaurentPoly::quantum_int(2).unwrap();
        let d41 = &SkeinElement::t(2, 0).scale(&LaurentPoly::a_pow(-2)) + &SkeinElement::scalar(q2.clone());
        let d43 = &SkeinElement::t(2, 2).scale(&LaurentPoly::a_pow(2)) + &SkeinElement::scalar(q2);
        assert_eq!(opp(&d41), d43);
        assert_eq!(rev(&SkeinElement::t(2, 1)), SkeinElement::t(1, 2));
    }

    fn arb_skein() -> impl Strategy<Value = SkeinElement> {
        prop::collection::vec((0u32..=2, -6i64..=6, -6i64..=6, -3i64..=3, -4i64..=4), 0..6).prop_map(|v| {
            v.into_iter()
                .map(|(k, p, q, c, e)| (BasisKey::new(k, p, q), LaurentPoly::monomial(e, c.into())))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn reduce_preserves_determinant(p in -30i64..=30, q in -30i64..=30, r in -30i64..=30, s in -30i64..=30) {
            prop_assume!(det(p, q, r, s) != 0);
            let red = reduce_pair(p, q, r, s).unwrap();
            prop_assert_eq!(red.p1 * red.s1, det(p, q, r, s).abs());
            prop_assert!(0 <= red.q1 && red.q1 < red.p1);
            prop_assert_eq!(red.phi.apply(r, s), (0, red.s1));
            let (a, b) = red.phi.apply(p, q);
            prop_assert!((a, b) == (red.p1, red.q1) || (a, b) == (-red.p1, -red.q1));
        }

        #[test]
        fn involutions(x in arb_skein()) {
            prop_assert_eq!(opp(&opp(&x)), x.clone());
            prop_assert_eq!(rev(&rev(&x)), x.clone());
            prop_assert_eq!(tw_inv(&tw(&x)), x.clone());
            prop_assert_eq!(tw_pow(&x, 3), tw(&tw(&tw(&x))));
        }
    }
}
