//! Text, LaTeX and JSON renderings of skein elements.

use serde::{Deserialize, Serialize};

use super::{BasisKey, LinearCombination, MulticurveElement, MulticurveKey, SkeinElement, PQ};
use crate::laurent::LaurentPoly;

/// How a key prints: the power of the central generator and the curve.
pub(crate) trait RenderKey: Ord + Copy {
    fn central(&self) -> u32;
    fn curve(&self) -> PQ;
}

impl RenderKey for BasisKey {
    fn central(&self) -> u32 {
        self.eta
    }
    fn curve(&self) -> PQ {
        self.curve
    }
}

impl RenderKey for MulticurveKey {
    fn central(&self) -> u32 {
        self.boundary
    }
    fn curve(&self) -> PQ {
        self.curve
    }
}

fn sorted_for_display<K: RenderKey>(x: &LinearCombination<K>) -> Vec<(&K, &LaurentPoly)> {
    let mut v: Vec<_> = x.iter().collect();
    v.sort_by(|(a, _), (b, _)| b.curve().cmp(&a.curve()).then(a.central().cmp(&b.central())));
    v
}

/// `style` selects the curve notation: `"T"`, `"S"` or `""` for multicurves.
pub(crate) fn render_text<K: RenderKey>(x: &LinearCombination<K>, style: &str) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let central = if style.is_empty() { "d" } else { "eta" };
    let terms = sorted_for_display(x);
    let single = terms.len() == 1;
    let mut out = String::new();
    for (i, (key, coeff)) in terms.into_iter().enumerate() {
        let mut basis = Vec::new();
        match key.central() {
            0 => {}
            1 => basis.push(central.to_string()),
            k => basis.push(format!("{central}^{k}")),
        }
        if !key.curve().is_empty() {
            basis.push(format!("{style}({},{})", key.curve().p(), key.curve().q()));
        }
        let basis = basis.join("*");
        let c = coeff.to_string();
        let term = if basis.is_empty() {
            if coeff.len() > 1 && !single {
                format!("({c})")
            } else {
                c
            }
        } else if coeff.is_one() {
            basis
        } else if (-coeff).is_one() {
            format!("-{basis}")
        } else if coeff.len() == 1 {
            format!("{c}*{basis}")
        } else {
            format!("({c})*{basis}")
        };
        if i == 0 {
            out.push_str(&term);
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    out
}

pub(crate) fn render_latex<K: RenderKey>(x: &LinearCombination<K>, style: &str) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let central = if style.is_empty() { r"\partial" } else { r"\eta" };
    let mut parts = Vec::new();
    for (key, coeff) in sorted_for_display(x) {
        let mut basis = String::new();
        match key.central() {
            0 => {}
            1 => basis.push_str(central),
            k => basis.push_str(&format!("{central}^{{{k}}}")),
        }
        if !key.curve().is_empty() {
            if !basis.is_empty() {
                basis.push(' ');
            }
            let sub = if style.is_empty() { String::new() } else { format!("_{style}") };
            basis.push_str(&format!(r"\binom{{{}}}{{{}}}{sub}", key.curve().p(), key.curve().q()));
        }
        let c = coeff.to_latex();
        parts.push(if basis.is_empty() {
            c
        } else if coeff.is_one() {
            basis
        } else if coeff.len() == 1 {
            format!("{c} {basis}")
        } else {
            format!(r"\left({c}\right) {basis}")
        });
    }
    parts.join(" + ").replace("+ -", "- ")
}

#[derive(Serialize, Deserialize)]
struct SkeinTermJson {
    eta: u32,
    p: i64,
    q: i64,
    coeff: LaurentPoly,
}

#[derive(Serialize, Deserialize)]
struct MulticurveTermJson {
    boundary: u32,
    p: i64,
    q: i64,
    coeff: LaurentPoly,
}

impl Serialize for SkeinElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<SkeinTermJson> = self
            .iter()
            .map(|(k, c)| SkeinTermJson { eta: k.eta, p: k.curve.p(), q: k.curve.q(), coeff: c.clone() })
            .collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SkeinElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v: Vec<SkeinTermJson> = Vec::deserialize(deserializer)?;
        Ok(v.into_iter().map(|t| (BasisKey::new(t.eta, t.p, t.q), t.coeff)).collect())
    }
}

impl Serialize for MulticurveElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<MulticurveTermJson> = self
            .iter()
            .map(|(k, c)| MulticurveTermJson {
                boundary: k.boundary,
                p: k.curve.p(),
                q: k.curve.q(),
                coeff: c.clone(),
            })
            .collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MulticurveElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v: Vec<MulticurveTermJson> = Vec::deserialize(deserializer)?;
        Ok(v.into_iter().map(|t| (MulticurveKey::new(t.boundary, t.p, t.q), t.coeff)).collect())
    }
}

impl SkeinElement {
    /// LaTeX with binomial-style basis elements, e.g. `A^{2} \binom{2}{2}_T + \eta`.
    pub fn to_latex(&self) -> String {
        render_latex(self, "T")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("skein elements always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl MulticurveElement {
    pub fn to_latex(&self) -> String {
        render_latex(self, "")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("multicurve elements always serialize")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

impl std::fmt::Display for SkeinElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_text(self, "T"))
    }
}

impl std::fmt::Debug for SkeinElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SkeinElement({self})")
    }
}

impl std::fmt::Display for MulticurveElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&render_text(self, ""))
    }
}

impl std::fmt::Debug for MulticurveElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "MulticurveElement({self})")
    }
}
