//! Skein elements of the one-holed torus in the two module bases:
//! the Chebyshev basis `eta^k T(p,q)` and the multicurve basis `d^k (p,q)`,
//! where `d` is the peripheral loop and `eta = d + A^2 + A^-2`.

mod chebyshev;
mod convert;
mod render;

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;

use dashu_int::IBig;
use num_integer::Integer;

use crate::laurent::LaurentPoly;

pub use chebyshev::{chebyshev_s, chebyshev_t, chebyshev_t_prime, power_in_t_prime};
pub use convert::{from_multicurve, to_multicurve, to_s_basis, SThreaded};

/// Slope vector of a torus link, stored canonically: `p > 0`, or `p == 0`
/// and `q >= 0`. `(0, 0)` is the empty link.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct PQ {
    p: i64,
    q: i64,
}

impl PQ {
    pub const EMPTY: PQ = PQ { p: 0, q: 0 };

    /// Canonical representative of `(p, q) ~ (-p, -q)`.
    pub fn new(p: i64, q: i64) -> Self {
        if p < 0 || (p == 0 && q < 0) {
            PQ { p: -p, q: -q }
        } else {
            PQ { p, q }
        }
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    pub fn is_empty(self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// Number of components, `gcd(p, q)`.
    pub fn gcd(self) -> i64 {
        self.p.gcd(&self.q)
    }

    /// `(primitive slope, gcd)`; the empty link gives `((0,0), 0)`.
    pub fn primitive(self) -> (PQ, i64) {
        let g = self.gcd();
        if g == 0 {
            (PQ::EMPTY, 0)
        } else {
            (PQ { p: self.p / g, q: self.q / g }, g)
        }
    }

    /// `g`-fold multiple of this slope, canonicalized.
    pub fn times(self, g: i64) -> Self {
        PQ::new(self.p * g, self.q * g)
    }
}

impl fmt::Display for PQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Index `eta^k T(p,q)` of the Chebyshev basis. A `(0,0)` curve means
/// `eta^k` times the empty link; the element `T(0,0) = 2` is never a key.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BasisKey {
    pub curve: PQ,
    pub eta: u32,
}

impl BasisKey {
    pub fn new(eta: u32, p: i64, q: i64) -> Self {
        Self { curve: PQ::new(p, q), eta }
    }

    pub fn empty() -> Self {
        Self { curve: PQ::EMPTY, eta: 0 }
    }
}

/// Index `d^k (p,q)` of the multicurve basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MulticurveKey {
    pub curve: PQ,
    pub boundary: u32,
}

impl MulticurveKey {
    pub fn new(boundary: u32, p: i64, q: i64) -> Self {
        Self { curve: PQ::new(p, q), boundary }
    }
}

/// Finite `Z[A, A^-1]`-linear combination of basis keys with no zero
/// coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearCombination<K: Ord> {
    terms: BTreeMap<K, LaurentPoly>,
}

pub type SkeinElement = LinearCombination<BasisKey>;
pub type MulticurveElement = LinearCombination<MulticurveKey>;

impl<K: Ord + Copy> Default for LinearCombination<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Ord + Copy> LinearCombination<K> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn term(key: K, coeff: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, LaurentPoly> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn coeff(&self, key: &K) -> LaurentPoly {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, key: K, coeff: LaurentPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &Self, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (k, v) in &other.terms {
            self.add_term(*k, if unit { v.clone() } else { v * c });
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(*k, v.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, v) in &other.terms {
            self.add_term(*k, -v);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Multiplies every coefficient by `A^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(key, v)| (*key, v.shift(k))).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }

    /// Coefficientwise bar involution.
    pub fn conjugate_coeffs(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v.conjugate())).collect(),
        }
    }

    /// Re-indexes keys through `f`, merging collisions, optionally
    /// conjugating coefficients.
    pub fn map_keys(&self, mut f: impl FnMut(K) -> K, conjugate: bool) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            out.add_term(f(*k), if conjugate { v.conjugate() } else { v.clone() });
        }
        out
    }

    /// Sum of the number of monomials across all coefficients.
    pub fn monomial_count(&self) -> usize {
        self.terms.values().map(LaurentPoly::len).sum()
    }
}

impl<K: Ord + Copy> FromIterator<(K, LaurentPoly)> for LinearCombination<K> {
    fn from_iter<I: IntoIterator<Item = (K, LaurentPoly)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (k, v) in iter {
            out.add_term(k, v);
        }
        out
    }
}

impl<'a, K: Ord> IntoIterator for &'a LinearCombination<K> {
    type Item = (&'a K, &'a LaurentPoly);
    type IntoIter = btree_map::Iter<'a, K, LaurentPoly>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: Ord + Copy> std::ops::Add for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn add(self, rhs: Self) -> LinearCombination<K> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<K: Ord + Copy> std::ops::Sub for &LinearCombination<K> {
    type Output = LinearCombination<K>;
    fn sub(self, rhs: Self) -> LinearCombination<K> {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl SkeinElement {
    /// The empty link, i.e. the unit.
    pub fn one() -> Self {
        Self::scalar(LaurentPoly::one())
    }

    pub fn scalar(c: LaurentPoly) -> Self {
        Self::term(BasisKey::empty(), c)
    }

    /// `T(p,q)`, with `T(0,0) = 2` applied.
    pub fn t(p: i64, q: i64) -> Self {
        let curve = PQ::new(p, q);
        if curve.is_empty() {
            Self::scalar(LaurentPoly::constant(2))
        } else {
            Self::term(BasisKey { curve, eta: 0 }, LaurentPoly::one())
        }
    }

    /// `eta^k T(p,q)` with `T(0,0) = 2` applied.
    pub fn eta_t(k: u32, p: i64, q: i64) -> Self {
        let mut x = Self::t(p, q);
        for _ in 0..k {
            x = x.eta_multiply();
        }
        x
    }

    /// `eta^k` (times the empty link).
    pub fn eta_pow(k: u32) -> Self {
        Self::term(BasisKey { curve: PQ::EMPTY, eta: k }, LaurentPoly::one())
    }

    /// Multiplication by the central element `eta`.
    pub fn eta_multiply(&self) -> Self {
        self.map_keys(|k| BasisKey { eta: k.eta + 1, ..k }, false)
    }

    /// Exact division by `eta`; `None` if some term has no factor of `eta`.
    pub fn divide_by_eta(&self) -> Option<Self> {
        if self.keys().any(|k| k.eta == 0) {
            return None;
        }
        Some(self.map_keys(|k| BasisKey { eta: k.eta - 1, ..k }, false))
    }

    /// Drops all terms with a positive power of `eta` (the image in the
    /// closed-torus skein algebra).
    pub fn eta_free_part(&self) -> Self {
        self.iter().filter(|(k, _)| k.eta == 0).map(|(k, v)| (*k, v.clone())).collect()
    }

    /// Largest `eta` exponent present.
    pub fn max_eta(&self) -> u32 {
        self.keys().map(|k| k.eta).max().unwrap_or(0)
    }
}

impl MulticurveElement {
    pub fn one() -> Self {
        Self::term(MulticurveKey::new(0, 0, 0), LaurentPoly::one())
    }

    /// The multicurve `(p,q)`.
    pub fn curve(p: i64, q: i64) -> Self {
        Self::term(MulticurveKey::new(0, p, q), LaurentPoly::one())
    }

    /// The peripheral loop `d`.
    pub fn boundary() -> Self {
        Self::term(MulticurveKey::new(1, 0, 0), LaurentPoly::one())
    }

    /// Substitutes `d = -A^2 - A^-2` (the image in the closed torus).
    pub fn close_boundary(&self) -> Self {
        let loop_value = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        let mut out = Self::zero();
        for (k, v) in self {
            out.add_term(
                MulticurveKey { boundary: 0, curve: k.curve },
                v * &loop_value.pow(k.boundary),
            );
        }
        out
    }
}

/// `|ps - rq|` between the curve parts; `d` and the empty link meet nothing.
pub fn intersection_number(m: &MulticurveKey, m2: &MulticurveKey) -> u64 {
    (m.curve.p() * m2.curve.q() - m2.curve.p() * m.curve.q()).unsigned_abs()
}

pub(crate) fn binomial(n: u32, k: u32) -> IBig {
    let mut acc = IBig::ONE;
    for i in 0..k {
        acc = acc * IBig::from(n - i) / IBig::from(i + 1);
    }
    acc
}
