//! Compact storage for table entries, and the dense accumulator the
//! recursions write into.
//!
//! Almost every coefficient in a discrepancy table is a short Laurent
//! polynomial whose exponents share a parity and whose integer coefficients
//! are small. Those are stored as `i32` windows with exponent step 2 and
//! multiplied with `i128` accumulation. Anything else is kept as a
//! [`LaurentPoly`]; the engine then takes its generic path.

use std::collections::HashMap;
use std::sync::LazyLock;

use dashu_int::IBig;

use crate::laurent::LaurentPoly;
use crate::skein::{BasisKey, SkeinElement, PQ};

#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) enum Coeff {
    /// `sum c[i] A^(lo + 2i)`, with non-zero first and last entries.
    Small { lo: i64, c: Box<[i32]> },
    Big(LaurentPoly),
}

impl Coeff {
    fn from_poly(p: &LaurentPoly) -> Coeff {
        let terms = p.terms();
        let lo = terms[0].0;
        let hi = terms[terms.len() - 1].0;
        if terms.iter().any(|(e, _)| (e - lo) % 2 != 0) {
            return Coeff::Big(p.clone());
        }
        let mut c = vec![0i32; ((hi - lo) / 2 + 1) as usize];
        for (e, v) in terms {
            match i32::try_from(v) {
                Ok(x) if x != i32::MIN => c[((e - lo) / 2) as usize] = x,
                _ => return Coeff::Big(p.clone()),
            }
        }
        Coeff::Small { lo, c: c.into_boxed_slice() }
    }

    fn to_poly(&self) -> LaurentPoly {
        match self {
            Coeff::Small { lo, c } => {
                LaurentPoly::from_terms(c.iter().enumerate().map(|(i, &x)| (lo + 2 * i as i64, x)))
            }
            Coeff::Big(p) => p.clone(),
        }
    }

    fn monomials(&self) -> usize {
        match self {
            Coeff::Small { c, .. } => c.iter().filter(|&&x| x != 0).count(),
            Coeff::Big(p) => p.len(),
        }
    }
}

/// A skein element in the table's storage format.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PackedElement {
    terms: Box<[(BasisKey, Coeff)]>,
}

static ONE: LazyLock<PackedElement> = LazyLock::new(|| PackedElement::from_element(&SkeinElement::one()));

impl PackedElement {
    pub fn from_element(x: &SkeinElement) -> Self {
        Self { terms: x.iter().map(|(k, v)| (*k, Coeff::from_poly(v))).collect() }
    }

    pub fn to_element(&self) -> SkeinElement {
        self.terms.iter().map(|(k, c)| (*k, c.to_poly())).collect()
    }

    pub(crate) fn one() -> &'static PackedElement {
        &ONE
    }

    /// Number of basis terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial_count(&self) -> usize {
        self.terms.iter().map(|(_, c)| c.monomials()).sum()
    }
}

/// Linear change of slope `(p,q) -> (m0 p + m1 q, m2 p + m3 q)`, optionally
/// followed by the bar involution on coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Frame {
    m: [i64; 4],
    conj: bool,
}

impl Frame {
    pub const ID: Frame = Frame { m: [1, 0, 0, 1], conj: false };

    pub fn twist(a: i64) -> Frame {
        Frame { m: [1, 0, a, 1], conj: false }
    }

    pub fn opp() -> Frame {
        Frame { m: [1, 0, 1, -1], conj: true }
    }

    pub fn rev() -> Frame {
        Frame { m: [0, 1, 1, 0], conj: false }
    }

    /// `self` followed by `g`.
    pub fn then(self, g: Frame) -> Frame {
        let (f, g2) = (self.m, g.m);
        Frame {
            m: [
                g2[0] * f[0] + g2[1] * f[2],
                g2[0] * f[1] + g2[1] * f[3],
                g2[2] * f[0] + g2[3] * f[2],
                g2[2] * f[1] + g2[3] * f[3],
            ],
            conj: self.conj != g.conj,
        }
    }

    fn key(&self, k: BasisKey) -> BasisKey {
        let (p, q) = (k.curve.p(), k.curve.q());
        BasisKey { curve: PQ::new(self.m[0] * p + self.m[1] * q, self.m[2] * p + self.m[3] * q), eta: k.eta }
    }
}

/// A table entry seen through a [`Frame`]; `None` is zero.
#[derive(Clone, Copy)]
pub(crate) struct View<'a> {
    pub elem: Option<&'a PackedElement>,
    pub frame: Frame,
}

/// Borrowed small coefficient, possibly conjugated.
#[derive(Clone, Copy)]
pub(crate) struct Window<'a> {
    lo: i64,
    c: &'a [i32],
    conj: bool,
}

impl Window<'_> {
    /// Lowest exponent after conjugation.
    fn low(&self) -> i64 {
        if self.conj {
            -(self.lo + 2 * (self.c.len() as i64 - 1))
        } else {
            self.lo
        }
    }
}

/// Raised when the fast path cannot represent a step.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Unsupported;

impl<'a> View<'a> {
    pub fn zero() -> Self {
        View { elem: None, frame: Frame::ID }
    }

    pub fn map(self, f: Frame) -> Self {
        View { elem: self.elem, frame: self.frame.then(f) }
    }

    pub fn to_element(self) -> SkeinElement {
        let Some(e) = self.elem else { return SkeinElement::zero() };
        e.terms
            .iter()
            .map(|(k, c)| {
                let p = c.to_poly();
                (self.frame.key(*k), if self.frame.conj { p.conjugate() } else { p })
            })
            .collect()
    }

    /// Terms with mapped keys and small coefficients.
    pub fn terms(self) -> impl Iterator<Item = Result<(BasisKey, Window<'a>), Unsupported>> {
        let frame = self.frame;
        self.elem.into_iter().flat_map(|e| e.terms.iter()).map(move |(k, c)| match c {
            Coeff::Small { lo, c } => Ok((frame.key(*k), Window { lo: *lo, c, conj: frame.conj })),
            Coeff::Big(_) => Err(Unsupported),
        })
    }
}

struct Dense {
    lo: i64,
    c: Vec<i128>,
}

impl Dense {
    /// Slice covering exponents `lo .. lo + 2 (n - 1)`.
    fn window(&mut self, lo: i64, n: usize) -> Result<&mut [i128], Unsupported> {
        if self.c.is_empty() {
            self.lo = lo;
            self.c.resize(n, 0);
            return Ok(&mut self.c[..]);
        }
        if (lo - self.lo) % 2 != 0 {
            return Err(Unsupported);
        }
        if lo < self.lo {
            let pad = ((self.lo - lo) / 2) as usize;
            self.c.splice(0..0, std::iter::repeat_n(0, pad));
            self.lo = lo;
        }
        let start = ((lo - self.lo) / 2) as usize;
        if start + n > self.c.len() {
            self.c.resize(start + n, 0);
        }
        Ok(&mut self.c[start..start + n])
    }
}

/// Sparse-by-key, dense-by-exponent accumulator.
#[derive(Default)]
pub(crate) struct Acc {
    map: HashMap<BasisKey, Dense>,
}

impl Acc {
    fn slot(&mut self, key: BasisKey, lo: i64, n: usize) -> Result<&mut [i128], Unsupported> {
        self.map.entry(key).or_insert(Dense { lo, c: Vec::new() }).window(lo, n)
    }

    /// `+= sign A^shift x` at `key`.
    pub fn add(&mut self, key: BasisKey, x: Window, shift: i64, sign: i128) -> Result<(), Unsupported> {
        let out = self.slot(key, x.low() + shift, x.c.len())?;
        if x.conj {
            for (o, &a) in out.iter_mut().zip(x.c.iter().rev()) {
                *o += sign * a as i128;
            }
        } else {
            for (o, &a) in out.iter_mut().zip(x.c) {
                *o += sign * a as i128;
            }
        }
        Ok(())
    }

    /// `+= sign A^shift x y` at `key`.
    pub fn add_product(&mut self, key: BasisKey, x: Window, y: Window, shift: i64, sign: i128) -> Result<(), Unsupported> {
        let (nx, ny) = (x.c.len(), y.c.len());
        let out = self.slot(key, x.low() + y.low() + shift, nx + ny - 1)?;
        match (x.conj, y.conj) {
            (false, false) => mac(out, x.c.iter(), y.c.iter(), sign),
            (false, true) => mac(out, x.c.iter(), y.c.iter().rev(), sign),
            (true, false) => mac(out, x.c.iter().rev(), y.c.iter(), sign),
            (true, true) => mac(out, x.c.iter().rev(), y.c.iter().rev(), sign),
        }
        Ok(())
    }

    /// `+= sign A^shift v` for a whole view.
    pub fn add_view(&mut self, v: View, eta: u32, shift: i64, sign: i128) -> Result<(), Unsupported> {
        for t in v.terms() {
            let (k, w) = t?;
            self.add(BasisKey { eta: k.eta + eta, ..k }, w, shift, sign)?;
        }
        Ok(())
    }

    pub fn finish(self) -> PackedElement {
        let mut terms: Vec<(BasisKey, Coeff)> = Vec::with_capacity(self.map.len());
        for (k, d) in self.map {
            let Some(first) = d.c.iter().position(|&x| x != 0) else { continue };
            let last = d.c.iter().rposition(|&x| x != 0).unwrap();
            let body = &d.c[first..=last];
            let lo = d.lo + 2 * first as i64;
            let small: Option<Box<[i32]>> =
                body.iter().map(|&x| i32::try_from(x).ok().filter(|&v| v != i32::MIN)).collect();
            let coeff = match small {
                Some(c) => Coeff::Small { lo, c },
                None => Coeff::Big(LaurentPoly::from_terms(
                    body.iter().enumerate().map(|(i, &x)| (lo + 2 * i as i64, IBig::from(x))),
                )),
            };
            terms.push((k, coeff));
        }
        terms.sort_by_key(|(k, _)| *k);
        PackedElement { terms: terms.into_boxed_slice() }
    }
}

#[inline]
fn mac<'x, 'y>(
    out: &mut [i128],
    xs: impl Iterator<Item = &'x i32>,
    ys: impl Iterator<Item = &'y i32> + Clone,
    sign: i128,
) {
    for (i, &a) in xs.enumerate() {
        if a == 0 {
            continue;
        }
        let a = sign * a as i128;
        for (o, &b) in out[i..].iter_mut().zip(ys.clone()) {
            *o += a * b as i128;
        }
    }
}
