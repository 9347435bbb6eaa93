//! Brute-force products by summing over all Kauffman states of an explicit
//! diagram. Exponential in the crossing number; used to check the engine.

mod classify;
mod diagram;

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

pub use classify::{LoopClass, TracedLoop};
pub use diagram::{Crossing, Diagram, State};

use crate::laurent::LaurentPoly;
use crate::skein::{from_multicurve, to_multicurve, MulticurveElement, MulticurveKey, SkeinElement, PQ};

pub const DEFAULT_BUDGET: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{crossings} crossings exceed the oracle budget of {budget}")]
    OverBudget { crossings: usize, budget: usize },
    #[error("diagram needs two non-empty, non-parallel slopes")]
    Degenerate,
    #[error("diagram tracing failed: {0}")]
    Tracing(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest crossing number attempted.
    pub budget: usize,
    /// Selects the strand offsets; the result must not depend on it.
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self { budget: DEFAULT_BUDGET, seed: 0 }
    }
}

/// Loops of one resolved state.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct StateOutcome {
    pub weight: i64,
    pub trivial: u32,
    pub peripheral: u32,
    /// Union of the essential loops, e.g. `(4,2)` for two parallel `(2,1)`.
    pub curve: PQ,
}

/// Resolves `state` and classifies every loop.
pub fn evaluate_state(d: &Diagram, state: State) -> Result<StateOutcome, OracleError> {
    let mut out = StateOutcome { weight: state.weight(d.crossing_count()), trivial: 0, peripheral: 0, curve: PQ::EMPTY };
    let mut slope: Option<PQ> = None;
    let mut essential = 0;
    for l in d.trace(state) {
        match l.classify()? {
            LoopClass::Trivial => out.trivial += 1,
            LoopClass::Peripheral => out.peripheral += 1,
            LoopClass::Essential(v) => {
                if slope.is_some_and(|s| s != v) {
                    return Err(OracleError::Tracing(format!("state has loops of slopes {} and {v}", slope.unwrap())));
                }
                slope = Some(v);
                essential += 1;
            }
        }
    }
    if let Some(v) = slope {
        out.curve = v.times(essential);
    }
    Ok(out)
}

/// Weighted multicurve of one state outcome.
pub fn outcome_value(o: &StateOutcome) -> MulticurveElement {
    let loop_value = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    MulticurveElement::term(
        MulticurveKey { curve: o.curve, boundary: o.peripheral },
        LaurentPoly::a_pow(o.weight) * loop_value.pow(o.trivial),
    )
}

/// `m m2` with `m` on top, by summing over all `2^c` states.
pub fn oracle_product(m: &MulticurveKey, m2: &MulticurveKey, cfg: &OracleConfig) -> Result<MulticurveElement, OracleError> {
    let boundary = m.boundary + m2.boundary;
    let (a, b) = (m.curve, m2.curve);
    let det = a.p() * b.q() - b.p() * a.q();
    if a.is_empty() || b.is_empty() || det == 0 {
        // disjoint: parallel curves just add up
        let (pa, ga) = a.primitive();
        let (pb, gb) = b.primitive();
        let prim = if a.is_empty() { pb } else { pa };
        return Ok(MulticurveElement::term(
            MulticurveKey { curve: prim.times(ga + gb), boundary },
            LaurentPoly::one(),
        ));
    }
    let crossings = det.unsigned_abs() as usize;
    if crossings > cfg.budget {
        return Err(OracleError::OverBudget { crossings, budget: cfg.budget });
    }
    let d = Diagram::build(a.p(), a.q(), b.p(), b.q(), cfg.seed)?;
    let counts = state_counts(&d)?;
    let mut out = MulticurveElement::zero();
    for (o, n) in counts {
        out.add_scaled(&outcome_value(&o), &LaurentPoly::constant(n as i64));
    }
    Ok(out.map_keys(|k| MulticurveKey { boundary: k.boundary + boundary, ..k }, false))
}

/// Number of states with each outcome, enumerated in parallel.
pub fn state_counts(d: &Diagram) -> Result<Vec<(StateOutcome, u64)>, OracleError> {
    let n = d.crossing_count();
    let merged = (0..1u64 << n)
        .into_par_iter()
        .try_fold(HashMap::new, |mut acc: HashMap<StateOutcome, u64>, s| {
            *acc.entry(evaluate_state(d, State(s))?).or_default() += 1;
            Ok::<_, OracleError>(acc)
        })
        .try_reduce(HashMap::new, |mut x, y| {
            for (k, v) in y {
                *x.entry(k).or_default() += v;
            }
            Ok(x)
        })?;
    let mut v: Vec<_> = merged.into_iter().collect();
    v.sort_by_key(|(o, _)| (o.weight, o.trivial, o.peripheral, o.curve));
    Ok(v)
}

/// Bilinear extension of [`oracle_product`].
pub fn oracle_multiply(
    x: &MulticurveElement,
    y: &MulticurveElement,
    cfg: &OracleConfig,
) -> Result<MulticurveElement, OracleError> {
    let mut out = MulticurveElement::zero();
    for (kx, cx) in x {
        for (ky, cy) in y {
            out.add_scaled(&oracle_product(kx, ky, cfg)?, &(cx * cy));
        }
    }
    Ok(out)
}

/// Product of skein elements computed entirely by the oracle.
pub fn oracle_multiply_skein(x: &SkeinElement, y: &SkeinElement, cfg: &OracleConfig) -> Result<SkeinElement, OracleError> {
    Ok(from_multicurve(&oracle_multiply(&to_multicurve(x), &to_multicurve(y), cfg)?))
}
