//! Sparse Laurent polynomials in one variable `A` with arbitrary-precision
//! integer coefficients.
//!
//! Terms are kept sorted by exponent with no zero coefficients, so two
//! polynomials are equal exactly when their term lists are equal.
//!
//! Exponents are `i64`. Inputs of interest keep them within `O(p * s)` of the
//! discrepancy being computed, far from the machine range; arithmetic on
//! exponents uses plain `+`, which panics on overflow in debug builds.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use dashu_int::IBig;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(i64, IBig)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, IBig::from(c))
    }

    /// `c * A^exp`
    pub fn monomial(exp: i64, c: IBig) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(exp, c)] }
        }
    }

    /// `A^exp`
    pub fn a_pow(exp: i64) -> Self {
        Self::monomial(exp, IBig::ONE)
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs;
    /// repeated exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<IBig>,
    {
        let mut v: Vec<(i64, IBig)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        v.sort_by_key(|(e, _)| *e);
        let mut out: Vec<(i64, IBig)> = Vec::with_capacity(v.len());
        for (e, c) in v {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    /// The quantum integer `[k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2})`,
    /// i.e. `A^{2(k-1)} + A^{2(k-3)} + ... + A^{-2(k-1)}`, with `[0] = 0`.
    pub fn quantum_int(k: i64) -> Result<Self, NegativeQuantumInt> {
        if k < 0 {
            return Err(NegativeQuantumInt(k));
        }
        Ok(Self {
            terms: (0..k).map(|i| (-2 * (k - 1) + 4 * i, IBig::ONE)).collect(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1 == IBig::ONE
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> &[(i64, IBig)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> IBig {
        match self.terms.binary_search_by_key(&exp, |(e, _)| *e) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => IBig::ZERO,
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.first().map(|(e, _)| *e)
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.last().map(|(e, _)| *e)
    }

    /// Bar involution `A <-> A^{-1}`.
    pub fn conjugate(&self) -> Self {
        Self {
            terms: self.terms.iter().rev().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn shift_in_place(&mut self, k: i64) {
        for (e, _) in &mut self.terms {
            *e += k;
        }
    }

    pub fn scale(&self, c: &IBig) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// True when every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.iter().all(|(_, c)| *c >= IBig::ZERO)
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (divisor.min_exp()?, divisor.max_exp()?);
        let lead = &divisor.terms.last()?.1;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(rhi) = rem.max_exp() {
            let rc = rem.terms.last().unwrap().1.clone();
            if rhi - dhi < rem.min_exp().unwrap() - dlo || (&rc % lead) != IBig::ZERO {
                return None;
            }
            let q = LaurentPoly::monomial(rhi - dhi, &rc / lead);
            rem -= &(&q * divisor);
            quot.push(q);
        }
        Some(quot.into_iter().fold(LaurentPoly::zero(), |a, b| a + b))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    fn product(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (e, c) = &self.terms[0];
            return Self {
                terms: other.terms.iter().map(|(f, d)| (e + f, c * d)).collect(),
            };
        }
        if other.terms.len() == 1 {
            return other.product(self);
        }
        let lo = self.min_exp().unwrap() + other.min_exp().unwrap();
        let hi = self.max_exp().unwrap() + other.max_exp().unwrap();
        let span = (hi - lo + 1) as usize;
        if span <= 8 * (self.terms.len() * other.terms.len()).max(64) {
            let mut dense = vec![IBig::ZERO; span];
            for (e, c) in &self.terms {
                for (f, d) in &other.terms {
                    dense[(e + f - lo) as usize] += c * d;
                }
            }
            let terms = dense
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (lo + i as i64, c))
                .collect();
            Self { terms }
        } else {
            Self::from_terms(
                self.terms
                    .iter()
                    .flat_map(|(e, c)| other.terms.iter().map(move |(f, d)| (e + f, c * d))),
            )
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("quantum integer [{0}] is only defined for k >= 0")]
pub struct NegativeQuantumInt(pub i64);

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<IBig> for LaurentPoly {
    fn from(c: IBig) -> Self {
        Self::monomial(0, c)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        *self = self.merge(rhs, true);
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.product(rhs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |a, b| a + b)
    }
}

fn a_power(e: i64) -> String {
    match e {
        0 => String::new(),
        1 => "A".to_string(),
        _ => format!("A^{e}"),
    }
}

impl LaurentPoly {
    /// LaTeX form, e.g. `A^{2} + 2 + A^{-2}`.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < IBig::ZERO;
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = match e {
                0 => String::new(),
                1 => "A".to_string(),
                _ => format!("A^{{{e}}}"),
            };
            if abs != IBig::ONE || mono.is_empty() {
                s.push_str(&abs.to_string());
            }
            s.push_str(&mono);
        }
        s
    }
}

/// Descending exponents in `A^k` notation: `A^2 + 2 + A^-2`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = *c < IBig::ZERO;
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mono = a_power(*e);
            match (abs == IBig::ONE, mono.is_empty()) {
                (_, true) => write!(f, "{abs}")?,
                (true, false) => f.write_str(&mono)?,
                (false, false) => write!(f, "{abs}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

/// JSON form: `[[exponent, "coefficient"], ...]` sorted by exponent.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(i64, String)> = self.terms.iter().map(|(e, c)| (*e, c.to_string())).collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v: Vec<(i64, String)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(v.len());
        for (e, c) in v {
            let c: IBig = c.parse().map_err(|_| D::Error::custom(format!("bad coefficient {c:?}")))?;
            if c.is_zero() {
                return Err(D::Error::custom("zero coefficient in canonical form"));
            }
            if let Some((le, _)) = terms.last() {
                if *le >= e {
                    return Err(D::Error::custom("exponents must be strictly increasing"));
                }
            }
            terms.push((e, c));
        }
        Ok(Self { terms })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn p(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn q(k: i64) -> LaurentPoly {
        LaurentPoly::quantum_int(k).unwrap()
    }

    // naive convolution through a map; independent of the dense/sparse paths
    fn naive_mul(x: &LaurentPoly, y: &LaurentPoly) -> BTreeMap<i64, IBig> {
        let mut m = BTreeMap::new();
        for (e, c) in x.terms() {
            for (f, d) in y.terms() {
                *m.entry(e + f).or_insert(IBig::ZERO) += c * d;
            }
        }
        m.retain(|_, c| !c.is_zero());
        m
    }

    #[test]
    fn add_examples() {
        let two = p(&[(2, 1), (-2, 1)]);
        assert!((&two + &p(&[(2, -1), (-2, -1)])).is_zero());
        assert_eq!(p(&[(3, 1)]) + p(&[(3, 1)]), p(&[(3, 2)]));
        assert_eq!(&q(2) + &q(2), p(&[(2, 2), (-2, 2)]));
    }

    #[test]
    fn mul_examples() {
        assert!((p(&[(1, 1)]) * p(&[(-1, 1)])).is_one());
        assert_eq!(p(&[(2, 1), (-2, 1)]) * p(&[(2, 1), (-2, -1)]), p(&[(4, 1), (-4, -1)]));
        let sq = &q(2) * &q(2);
        let expected: BTreeMap<i64, IBig> = naive_mul(&q(2), &q(2));
        assert_eq!(sq.terms().iter().cloned().collect::<BTreeMap<_, _>>(), expected);
        assert_eq!(sq, p(&[(4, 1), (0, 2), (-4, 1)]));
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[(3, 1)]).conjugate(), p(&[(-3, 1)]));
        for k in 0..8 {
            assert_eq!(q(k).conjugate(), q(k));
        }
        assert_eq!(p(&[(2, 2), (-6, 1)]).conjugate(), p(&[(-2, 2), (6, 1)]));
    }

    #[test]
    fn quantum_int_values() {
        assert_eq!(q(2), p(&[(2, 1), (-2, 1)]));
        assert!(q(1).is_one());
        assert!(q(0).is_zero());
        assert!(LaurentPoly::quantum_int(-1).is_err());
        // [4] from the defining quotient (A^8 - A^-8) / (A^2 - A^-2)
        let num = p(&[(8, 1), (-8, -1)]);
        let den = p(&[(2, 1), (-2, -1)]);
        let quotient = num.div_exact(&den).unwrap();
        assert_eq!(quotient, p(&[(6, 1), (2, 1), (-2, 1), (-6, 1)]));
        assert_eq!(q(4), quotient);
    }

    #[test]
    fn quantum_int_matches_quotient() {
        let den = p(&[(2, 1), (-2, -1)]);
        for k in 1..25 {
            let num = p(&[(2 * k, 1), (-2 * k, -1)]);
            assert_eq!(num.div_exact(&den).unwrap(), q(k), "k = {k}");
        }
    }

    #[test]
    fn quantum_int_chebyshev_recurrence() {
        for m in 1..=30 {
            assert_eq!(q(m + 1), &(&q(2) * &q(m)) - &q(m - 1), "m = {m}");
        }
    }

    #[test]
    fn div_exact_rejects_non_divisible() {
        assert!(p(&[(1, 1), (0, 1)]).div_exact(&p(&[(2, 1), (-2, -1)])).is_none());
    }

    #[test]
    fn rendering() {
        assert_eq!(q(2).to_string(), "A^2 + A^-2");
        assert_eq!(p(&[(2, 1), (0, 2), (-2, 1)]).to_string(), "A^2 + 2 + A^-2");
        assert_eq!(p(&[(4, 1), (-4, -1)]).to_string(), "A^4 - A^-4");
        assert_eq!(p(&[(3, -2), (1, 1)]).to_string(), "-2*A^3 + A");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(-2, 1), (0, 3)]).to_latex(), "3 + A^{-2}");
    }

    #[test]
    fn json_shape() {
        let x = p(&[(2, 1), (-2, -3)]);
        assert_eq!(serde_json::to_string(&x).unwrap(), r#"[[-2,"-3"],[2,"1"]]"#);
        let back: LaurentPoly = serde_json::from_str(r#"[[-2,"-3"],[2,"1"]]"#).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<LaurentPoly>(r#"[[0,"0"]]"#).is_err());
        assert!(serde_json::from_str::<LaurentPoly>(r#"[[2,"1"],[1,"1"]]"#).is_err());
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let x = p(&[(0, i64::MAX), (1, i64::MAX)]);
        let y = x.pow(4);
        let expected = naive_mul(&(&x * &x), &(&x * &x));
        assert_eq!(y.terms().iter().cloned().collect::<BTreeMap<_, _>>(), expected);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-12i64..12, -9i64..9), 0..7).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert!((&x - &x).is_zero());
        }

        #[test]
        fn conjugation_is_ring_involution(x in arb_poly(), y in arb_poly()) {
            prop_assert_eq!(x.conjugate().conjugate(), x.clone());
            prop_assert_eq!((&x * &y).conjugate(), &x.conjugate() * &y.conjugate());
        }

        #[test]
        fn product_matches_naive(x in arb_poly(), y in arb_poly()) {
            let got: BTreeMap<i64, IBig> = (&x * &y).terms().iter().cloned().collect();
            prop_assert_eq!(got, naive_mul(&x, &y));
        }

        #[test]
        fn json_round_trip(x in arb_poly()) {
            let s = serde_json::to_string(&x).unwrap();
            prop_assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), x);
        }
    }
}
