//! Engine-versus-oracle differential suite over a box of slope pairs.

use serde::Serialize;

use crate::discrepancy::Engine;
use crate::laurent::LaurentPoly;
use crate::oracle::{oracle_multiply, OracleConfig, OracleError};
use crate::skein::{to_multicurve, LinearCombination, MulticurveElement, SkeinElement};

/// Pairs `T(p,q) T(r,s)` with `p_min <= p <= p_max`, `|q| <= q_max`,
/// `0 <= r <= r_max`, `|s| <= s_max`, `(r,s) != (0,0)` and at most
/// `max_crossings` crossings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Corpus {
    pub p_min: i64,
    pub p_max: i64,
    pub q_max: i64,
    pub r_max: i64,
    pub s_max: i64,
    pub max_crossings: i64,
}

impl Default for Corpus {
    fn default() -> Self {
        Self { p_min: 1, p_max: 5, q_max: 5, r_max: 3, s_max: 3, max_crossings: 16 }
    }
}

impl Corpus {
    pub fn pairs(&self) -> Vec<(i64, i64, i64, i64)> {
        let mut out = Vec::new();
        for p in self.p_min..=self.p_max {
            for q in -self.q_max..=self.q_max {
                for r in 0..=self.r_max {
                    for s in -self.s_max..=self.s_max {
                        if (r, s) != (0, 0) && (p * s - r * q).abs() <= self.max_crossings {
                            out.push((p, q, r, s));
                        }
                    }
                }
            }
        }
        out
    }
}

/// One disagreement, with the first differing multicurve term.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairFailure {
    pub pair: (i64, i64, i64, i64),
    pub check: &'static str,
    pub term: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DiffReport {
    pub pairs: usize,
    pub failures: Vec<PairFailure>,
}

impl DiffReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// First key where `a` and `b` differ, with both coefficients.
pub fn first_difference<K: Ord + Copy>(
    a: &LinearCombination<K>,
    b: &LinearCombination<K>,
) -> Option<(K, LaurentPoly, LaurentPoly)> {
    let mut keys: Vec<K> = a.keys().chain(b.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter().map(|k| (k, a.coeff(&k), b.coeff(&k))).find(|(_, x, y)| x != y)
}

fn failure(pair: (i64, i64, i64, i64), check: &'static str, expected: &MulticurveElement, got: &MulticurveElement) -> Option<PairFailure> {
    let (k, x, y) = first_difference(expected, got)?;
    Some(PairFailure {
        pair,
        check,
        term: MulticurveElement::term(k, LaurentPoly::one()).to_string(),
        expected: x.to_string(),
        got: y.to_string(),
    })
}

/// For every pair, compares the engine product with the oracle product in
/// the multicurve basis, and checks that closing the boundary in the oracle
/// output leaves the two-term closed-torus product. With `inject_fault`, one
/// coefficient of the first non-trivial engine product is negated.
pub fn differential(
    engine: &mut Engine,
    corpus: &Corpus,
    oracle: &OracleConfig,
    inject_fault: bool,
) -> Result<DiffReport, OracleError> {
    if corpus.max_crossings > oracle.budget as i64 {
        return Err(OracleError::OverBudget { crossings: corpus.max_crossings as usize, budget: oracle.budget });
    }
    let mut report = DiffReport::default();
    let mut fault_pending = inject_fault;
    for pair @ (p, q, r, s) in corpus.pairs() {
        let (x, y) = (SkeinElement::t(p, q), SkeinElement::t(r, s));
        let mut product = engine.multiply(&x, &y);
        if fault_pending && (p * s - r * q).abs() >= 2 {
            product = negate_first_monomial(&product);
            fault_pending = false;
        }
        let got = to_multicurve(&product);
        let expected = oracle_multiply(&to_multicurve(&x), &to_multicurve(&y), oracle)?;
        report.failures.extend(failure(pair, "oracle", &expected, &got));
        let det = p * s - r * q;
        let closed = to_multicurve(&(&SkeinElement::t(p + r, q + s).shift(det) + &SkeinElement::t(p - r, q - s).shift(-det)));
        report.failures.extend(failure(pair, "closed torus", &closed.close_boundary(), &expected.close_boundary()));
        report.pairs += 1;
    }
    Ok(report)
}

fn negate_first_monomial(x: &SkeinElement) -> SkeinElement {
    let mut out = x.clone();
    if let Some((k, c)) = x.iter().next() {
        let (e, v) = &c.terms()[0];
        out.add_term(*k, LaurentPoly::monomial(*e, -v.clone() * 2));
    }
    out
}

/// Laurent coefficients of structure constants with a negative integer
/// coefficient, as `(term, coefficient)` strings.
pub fn negative_coefficients(x: &SkeinElement) -> Vec<(String, String)> {
    x.iter()
        .filter(|(_, c)| !c.is_nonnegative())
        .map(|(k, c)| (SkeinElement::term(*k, LaurentPoly::one()).to_string(), c.to_string()))
        .collect()
}
