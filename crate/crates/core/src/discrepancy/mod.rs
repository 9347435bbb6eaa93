//! The discrepancy engine.
//!
//! `D(p,q;r,s)` is defined by
//! `T(p,q) T(r,s) = A^(ps-rq) T(p+r,q+s) + A^-(ps-rq) T(p-r,q-s) + eta D(p,q;r,s)`.
//! Queries are moved by `SL(2,Z)` to `D(p1,q1;0,s1)`; the `s1 = 1` entries
//! are filled row by row with the five-term recursion in `p`, larger `s1`
//! with the recursion in `s`.

mod packed;
mod table;

use std::collections::HashMap;

use thiserror::Error;

pub use table::{CacheError, DiscrepancyKey, MemoTable, CACHE_HEADER};
pub use packed::PackedElement;
pub use table::{strict_term_bound_violation, term_bound_violation};

use crate::laurent::LaurentPoly;
use crate::mapping::reduce_pair;
use packed::{Acc, Frame, Unsupported, View};
use crate::skein::{BasisKey, SkeinElement, PQ};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("memo table has no entry {0} (fill order violated)")]
    MissingEntry(DiscrepancyKey),
}

enum StepError {
    Engine(EngineError),
    Unsupported,
}

impl From<EngineError> for StepError {
    fn from(e: EngineError) -> Self {
        StepError::Engine(e)
    }
}

impl From<Unsupported> for StepError {
    fn from(_: Unsupported) -> Self {
        StepError::Unsupported
    }
}

/// Owns a [`MemoTable`] and extends it on demand.
#[derive(Clone, Default, Debug)]
pub struct Engine {
    table: MemoTable,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts from a previously filled (e.g. loaded) table.
    pub fn with_table(table: MemoTable) -> Self {
        Self { table }
    }

    pub fn table(&self) -> &MemoTable {
        &self.table
    }

    pub fn into_table(self) -> MemoTable {
        self.table
    }

    fn entry(&self, p: i64, q: i64, s: i64) -> Result<&PackedElement, EngineError> {
        let key = DiscrepancyKey::new(p, q, s);
        self.table.get_packed(&key).ok_or(EngineError::MissingEntry(key))
    }

    fn normalized_d01(&self, m: i64, r: i64) -> Result<&PackedElement, EngineError> {
        if (m, r) == (2, 1) {
            return Ok(PackedElement::one());
        }
        self.entry(m, r, 1)
    }

    /// `D(m,n;0,1)` for any integers, read from the table through the twist
    /// and opposition symmetries.
    fn view_d01(&self, m: i64, n: i64) -> Result<View<'_>, EngineError> {
        let (m, n) = if m < 0 { (-m, -n) } else { (m, n) };
        if m <= 1 {
            return Ok(View::zero());
        }
        let (a, r) = (n.div_euclid(m), n.rem_euclid(m));
        if r == 0 {
            return Ok(View::zero());
        }
        let (elem, frame) = if 2 * r > m {
            (self.normalized_d01(m, m - r)?, Frame::opp())
        } else {
            (self.normalized_d01(m, r)?, Frame::ID)
        };
        Ok(View { elem: Some(elem), frame: frame.then(Frame::twist(a)) })
    }

    /// `D(1,0;m,n) = rev(D(n,m;0,1))`.
    fn view_d10(&self, m: i64, n: i64) -> Result<View<'_>, EngineError> {
        if n == 0 {
            return Ok(View::zero());
        }
        Ok(self.view_d01(n, m)?.map(Frame::rev()))
    }

    /// `D(p,q;0,s)` for `s >= 1`, any `p`, `q`.
    fn view_d0s(&self, p: i64, q: i64, s: i64) -> Result<View<'_>, EngineError> {
        if s == 1 {
            return self.view_d01(p, q);
        }
        let (p, q) = if p < 0 { (-p, -q) } else { (p, q) };
        if p == 0 {
            return Ok(View::zero());
        }
        let (a, r) = (q.div_euclid(p), q.rem_euclid(p));
        let (elem, frame) = if 2 * r > p {
            (self.entry(p, p - r, s)?, Frame::opp())
        } else {
            (self.entry(p, r, s)?, Frame::ID)
        };
        Ok(View { elem: Some(elem), frame: frame.then(Frame::twist(a)) })
    }

    pub fn lookup_d01(&self, m: i64, n: i64) -> Result<SkeinElement, EngineError> {
        Ok(self.view_d01(m, n)?.to_element())
    }

    pub fn lookup_d10(&self, m: i64, n: i64) -> Result<SkeinElement, EngineError> {
        Ok(self.view_d10(m, n)?.to_element())
    }

    fn lookup_d0s(&self, p: i64, q: i64, s: i64) -> Result<SkeinElement, EngineError> {
        Ok(self.view_d0s(p, q, s)?.to_element())
    }

    /// Left multiplication by `T(1,0)`, using
    /// `T(1,0) T(m,n) = A^n T(m+1,n) + A^-n T(m-1,n) + eta D(1,0;m,n)`.
    pub fn multiply_by_t10(&self, x: &SkeinElement) -> Result<SkeinElement, EngineError> {
        let mut out = SkeinElement::zero();
        for (key, c) in x {
            let (m, n) = (key.curve.p(), key.curve.q());
            if key.curve.is_empty() {
                out.add_term(BasisKey { curve: PQ::new(1, 0), eta: key.eta }, c.clone());
                continue;
            }
            add_eta_t(&mut out, key.eta, m + 1, n, &c.shift(n));
            add_eta_t(&mut out, key.eta, m - 1, n, &c.shift(-n));
            let d = self.lookup_d10(m, n)?;
            add_eta_shifted(&mut out, &d, key.eta + 1, c);
        }
        Ok(out)
    }

    /// Right multiplication by `T(0,1)`, using
    /// `T(m,n) T(0,1) = A^m T(m,n+1) + A^-m T(m,n-1) + eta D(m,n;0,1)`.
    pub fn multiply_by_t01(&self, x: &SkeinElement) -> Result<SkeinElement, EngineError> {
        let mut out = SkeinElement::zero();
        for (key, c) in x {
            let (m, n) = (key.curve.p(), key.curve.q());
            if key.curve.is_empty() {
                out.add_term(BasisKey { curve: PQ::new(0, 1), eta: key.eta }, c.clone());
                continue;
            }
            add_eta_t(&mut out, key.eta, m, n + 1, &c.shift(m));
            add_eta_t(&mut out, key.eta, m, n - 1, &c.shift(-m));
            let d = self.lookup_d01(m, n)?;
            add_eta_shifted(&mut out, &d, key.eta + 1, c);
        }
        Ok(out)
    }

    /// `D(p+1,q;0,1)` from the five-term recursion in `p`.
    pub fn recursion_step_p(&self, p: i64, q: i64) -> Result<SkeinElement, EngineError> {
        Ok(self.step_p(p, q)?.to_element())
    }

    /// `D(p,q;0,s+1)` from the recursion in `s`; `D(p,q;0,0) = 0`.
    pub fn recursion_step_s(&self, p: i64, q: i64, s: i64) -> Result<SkeinElement, EngineError> {
        Ok(self.step_s(p, q, s)?.to_element())
    }

    fn step_p(&self, p: i64, q: i64) -> Result<PackedElement, EngineError> {
        match self.fast_step_p(p, q) {
            Ok(v) => Ok(v),
            Err(StepError::Engine(e)) => Err(e),
            Err(StepError::Unsupported) => Ok(PackedElement::from_element(&self.slow_step_p(p, q)?)),
        }
    }

    fn step_s(&self, p: i64, q: i64, s: i64) -> Result<PackedElement, EngineError> {
        match self.fast_step_s(p, q, s) {
            Ok(v) => Ok(v),
            Err(StepError::Engine(e)) => Err(e),
            Err(StepError::Unsupported) => Ok(PackedElement::from_element(&self.slow_step_s(p, q, s)?)),
        }
    }

    fn fast_step_p(&self, p: i64, q: i64) -> Result<PackedElement, StepError> {
        let mut acc = Acc::default();
        self.acc_t10(&mut acc, self.view_d01(p, q)?, -q, 1)?;
        acc.add_view(self.view_d01(p - 1, q)?, 0, -2 * q, -1)?;
        acc.add_view(self.view_d10(p, q - 1)?, 0, -p - q, 1)?;
        self.acc_t01(&mut acc, self.view_d10(p, q)?, -q, -1)?;
        acc.add_view(self.view_d10(p, q + 1)?, 0, p - q, 1)?;
        Ok(acc.finish())
    }

    fn fast_step_s(&self, p: i64, q: i64, s: i64) -> Result<PackedElement, StepError> {
        let mut acc = Acc::default();
        self.acc_t01(&mut acc, self.view_d0s(p, q, s)?, 0, 1)?;
        if s >= 2 {
            acc.add_view(self.view_d0s(p, q, s - 1)?, 0, 0, -1)?;
        }
        acc.add_view(self.view_d01(p, q + s)?, 0, p * s, 1)?;
        acc.add_view(self.view_d01(p, q - s)?, 0, -p * s, 1)?;
        Ok(acc.finish())
    }

    /// `acc += sign A^shift T(1,0) x`.
    fn acc_t10(&self, acc: &mut Acc, x: View, shift: i64, sign: i128) -> Result<(), StepError> {
        for t in x.terms() {
            let (key, c) = t?;
            let (m, n) = (key.curve.p(), key.curve.q());
            if key.curve.is_empty() {
                acc.add(BasisKey { curve: PQ::new(1, 0), eta: key.eta }, c, shift, sign)?;
                continue;
            }
            acc_eta_t(acc, key.eta, m + 1, n, c, shift + n, sign)?;
            acc_eta_t(acc, key.eta, m - 1, n, c, shift - n, sign)?;
            for u in self.view_d10(m, n)?.terms() {
                let (k2, d) = u?;
                acc.add_product(BasisKey { eta: k2.eta + key.eta + 1, ..k2 }, c, d, shift, sign)?;
            }
        }
        Ok(())
    }

    /// `acc += sign A^shift x T(0,1)`.
    fn acc_t01(&self, acc: &mut Acc, x: View, shift: i64, sign: i128) -> Result<(), StepError> {
        for t in x.terms() {
            let (key, c) = t?;
            let (m, n) = (key.curve.p(), key.curve.q());
            if key.curve.is_empty() {
                acc.add(BasisKey { curve: PQ::new(0, 1), eta: key.eta }, c, shift, sign)?;
                continue;
            }
            acc_eta_t(acc, key.eta, m, n + 1, c, shift + m, sign)?;
            acc_eta_t(acc, key.eta, m, n - 1, c, shift - m, sign)?;
            for u in self.view_d01(m, n)?.terms() {
                let (k2, d) = u?;
                acc.add_product(BasisKey { eta: k2.eta + key.eta + 1, ..k2 }, c, d, shift, sign)?;
            }
        }
        Ok(())
    }

    fn slow_step_p(&self, p: i64, q: i64) -> Result<SkeinElement, EngineError> {
        let mut out = self.multiply_by_t10(&self.lookup_d01(p, q)?)?.shift(-q);
        out.add_scaled(&self.lookup_d01(p - 1, q)?, &LaurentPoly::monomial(-2 * q, (-1).into()));
        out.add_assign(&self.lookup_d10(p, q - 1)?.shift(-p - q));
        let mid = self.multiply_by_t01(&self.lookup_d10(p, q)?)?;
        out.add_scaled(&mid, &LaurentPoly::monomial(-q, (-1).into()));
        out.add_assign(&self.lookup_d10(p, q + 1)?.shift(p - q));
        Ok(out)
    }

    fn slow_step_s(&self, p: i64, q: i64, s: i64) -> Result<SkeinElement, EngineError> {
        let mut out = self.multiply_by_t01(&self.lookup_d0s(p, q, s)?)?;
        if s >= 2 {
            out.sub_assign(&self.lookup_d0s(p, q, s - 1)?);
        }
        out.add_assign(&self.lookup_d01(p, q + s)?.shift(p * s));
        out.add_assign(&self.lookup_d01(p, q - s)?.shift(-p * s));
        Ok(out)
    }

    /// Ensures `D(m,n;0,1)` for `1 <= n <= q_max` and all `m <= p_max`,
    /// filling row `n = 1, 2, ...` left to right.
    pub fn fill_table_s1(&mut self, p_max: i64, q_max: i64) -> Result<(), EngineError> {
        if p_max >= 2 {
            self.table.insert_packed(DiscrepancyKey::new(2, 1, 1), PackedElement::one().clone());
        }
        for n in 1..=q_max {
            for m in (2 * n).max(3)..=p_max {
                let key = DiscrepancyKey::new(m, n, 1);
                if !self.table.contains(&key) {
                    let value = self.step_p(m - 1, n)?;
                    self.table.insert_packed(key, value);
                }
            }
        }
        Ok(())
    }

    /// Adds `D(p,q;0,m)` for `2 <= m <= s_max`. Needs `D(p,i;0,1)` for
    /// `i <= p/2` (see [`Engine::fill_table_s1`]).
    pub fn fill_table_s(&mut self, p: i64, q: i64, s_max: i64) -> Result<(), EngineError> {
        for m in 2..=s_max {
            let key = DiscrepancyKey::new(p, q, m);
            if !self.table.contains(&key) {
                let value = self.step_s(p, q, m - 1)?;
                self.table.insert_packed(key, value);
            }
        }
        Ok(())
    }

    /// `D(p,q;r,s)` for any integers.
    pub fn discrepancy(&mut self, p: i64, q: i64, r: i64, s: i64) -> SkeinElement {
        self.try_discrepancy(p, q, r, s).expect("discrepancy fill order")
    }

    pub fn try_discrepancy(&mut self, p: i64, q: i64, r: i64, s: i64) -> Result<SkeinElement, EngineError> {
        if (p * s - r * q).abs() <= 1 || (p, q) == (0, 0) || (r, s) == (0, 0) {
            return Ok(SkeinElement::zero());
        }
        let red = reduce_pair(p, q, r, s).expect("non-parallel, non-empty pair");
        let (p1, q1, s1) = (red.p1, red.q1, red.s1);
        let q2 = q1.min(p1 - q1);
        let reduced = if s1 == 1 {
            if q1 == 0 {
                return Ok(SkeinElement::zero());
            }
            self.fill_table_s1(p1, q2)?;
            self.lookup_d01(p1, q1)?
        } else {
            self.fill_table_s1(p1, p1 / 2)?;
            self.fill_table_s(p1, q2, s1)?;
            self.lookup_d0s(p1, q1, s1)?
        };
        Ok(red.phi.inverse().act_on_skein(&reduced))
    }

    /// `x y` for basis elements.
    pub fn multiply_basis(&mut self, x: &BasisKey, y: &BasisKey) -> SkeinElement {
        let eta = x.eta + y.eta;
        if x.curve.is_empty() || y.curve.is_empty() {
            let curve = if x.curve.is_empty() { y.curve } else { x.curve };
            return SkeinElement::term(BasisKey { curve, eta }, LaurentPoly::one());
        }
        self.multiply_curves(x.curve, y.curve).map_keys(|k| BasisKey { eta: k.eta + eta, ..k }, false)
    }

    /// `T(p,q) T(r,s)`.
    fn multiply_curves(&mut self, a: PQ, b: PQ) -> SkeinElement {
        let (p, q, r, s) = (a.p(), a.q(), b.p(), b.q());
        let det = p * s - r * q;
        let mut out = SkeinElement::t(p + r, q + s).shift(det);
        out.add_assign(&SkeinElement::t(p - r, q - s).shift(-det));
        out.add_assign(&self.discrepancy(p, q, r, s).eta_multiply());
        out
    }

    /// Bilinear product; `eta` and the empty link are central.
    pub fn multiply(&mut self, x: &SkeinElement, y: &SkeinElement) -> SkeinElement {
        let mut curve_products: HashMap<(PQ, PQ), SkeinElement> = HashMap::new();
        let mut out = SkeinElement::zero();
        for (kx, cx) in x {
            for (ky, cy) in y {
                let c = cx * cy;
                let eta = kx.eta + ky.eta;
                if kx.curve.is_empty() || ky.curve.is_empty() {
                    let curve = if kx.curve.is_empty() { ky.curve } else { kx.curve };
                    out.add_term(BasisKey { curve, eta }, c);
                    continue;
                }
                let prod = match curve_products.get(&(kx.curve, ky.curve)) {
                    Some(v) => v,
                    None => {
                        let v = self.multiply_curves(kx.curve, ky.curve);
                        curve_products.entry((kx.curve, ky.curve)).or_insert(v)
                    }
                };
                add_eta_shifted(&mut out, prod, eta, &c);
            }
        }
        out
    }
}

/// `acc += sign A^shift c eta^k T(p,q)`, with `T(0,0) = 2`.
fn acc_eta_t(acc: &mut Acc, k: u32, p: i64, q: i64, c: packed::Window, shift: i64, sign: i128) -> Result<(), Unsupported> {
    if p == 0 && q == 0 {
        acc.add(BasisKey { curve: PQ::EMPTY, eta: k }, c, shift, 2 * sign)
    } else {
        acc.add(BasisKey::new(k, p, q), c, shift, sign)
    }
}

/// `out += c eta^k T(p,q)`, with `T(0,0) = 2`.
fn add_eta_t(out: &mut SkeinElement, k: u32, p: i64, q: i64, c: &LaurentPoly) {
    if p == 0 && q == 0 {
        out.add_term(BasisKey { curve: PQ::EMPTY, eta: k }, c.scale(&2.into()));
    } else {
        out.add_term(BasisKey { curve: PQ::new(p, q), eta: k }, c.clone());
    }
}

/// `out += c eta^k x`.
fn add_eta_shifted(out: &mut SkeinElement, x: &SkeinElement, k: u32, c: &LaurentPoly) {
    let unit = c.is_one();
    for (key, v) in x {
        out.add_term(BasisKey { eta: key.eta + k, ..*key }, if unit { v.clone() } else { v * c });
    }
}

/// `D(p,q;r,s)` with a fresh table.
pub fn discrepancy(p: i64, q: i64, r: i64, s: i64) -> SkeinElement {
    Engine::new().discrepancy(p, q, r, s)
}

/// `x y` with a fresh table.
pub fn multiply(x: &SkeinElement, y: &SkeinElement) -> SkeinElement {
    Engine::new().multiply(x, y)
}
