//! Timing harness comparing the recursion engine with the state-sum oracle
//! on the worst-case family `D(p, p/2; 0, 1)`.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::discrepancy::Engine;
use crate::oracle::{oracle_product, OracleConfig};
use crate::skein::MulticurveKey;

/// Largest determinant for which the oracle is timed.
pub const ORACLE_MAX_DET: i64 = 20;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchRecord {
    pub det: i64,
    /// Median over repetitions, each starting from an empty table.
    pub engine_ms: f64,
    /// Median over repetitions on the table left by the cold runs.
    pub warm_engine_ms: f64,
    pub oracle_ms: Option<f64>,
    pub table_entries: usize,
    pub peak_terms: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    /// Least-squares slope of `log(engine_ms)` against `log(det)`; needs two
    /// distinct determinants.
    pub slope: Option<f64>,
}

#[derive(Clone, Copy, Debug)]
pub struct BenchConfig {
    pub reps: usize,
    /// Oracle is timed for `det <= oracle_max_det`.
    pub oracle_max_det: i64,
    pub oracle_reps: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self { reps: 5, oracle_max_det: ORACLE_MAX_DET, oracle_reps: 1 }
    }
}

fn ms(d: Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn median(v: &mut [f64]) -> f64 {
    assert!(!v.is_empty(), "median of nothing");
    v.sort_by(f64::total_cmp);
    let n = v.len();
    if n % 2 == 1 {
        v[n / 2]
    } else {
        (v[n / 2 - 1] + v[n / 2]) / 2.0
    }
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points.iter().filter(|(x, y)| *x > 0.0 && *y > 0.0).map(|(x, y)| (x.ln(), y.ln())).collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if pts.len() < 2 || sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

/// Worst-case pair for determinant `det`: `T(det, det/2)` against `T(0,1)`.
pub fn worst_case(det: i64) -> (i64, i64, i64, i64) {
    (det, det / 2, 0, 1)
}

/// Times one determinant.
pub fn bench_det(det: i64, cfg: &BenchConfig) -> BenchRecord {
    assert!(det >= 2, "determinant must be at least 2");
    let (p, q, r, s) = worst_case(det);
    let mut cold = Vec::with_capacity(cfg.reps);
    let mut engine = Engine::new();
    for _ in 0..cfg.reps.max(1) {
        engine = Engine::new();
        let t = Instant::now();
        std::hint::black_box(engine.discrepancy(p, q, r, s));
        cold.push(ms(t.elapsed()));
    }
    let mut warm = Vec::with_capacity(cfg.reps);
    for _ in 0..cfg.reps.max(1) {
        let t = Instant::now();
        std::hint::black_box(engine.discrepancy(p, q, r, s));
        warm.push(ms(t.elapsed()));
    }
    let oracle_ms = (det <= cfg.oracle_max_det && cfg.oracle_reps > 0).then(|| {
        let mut v: Vec<f64> = (0..cfg.oracle_reps).map(|_| time_oracle(det)).collect();
        median(&mut v)
    });
    BenchRecord {
        det,
        engine_ms: median(&mut cold),
        warm_engine_ms: median(&mut warm),
        oracle_ms,
        table_entries: engine.table().len(),
        peak_terms: engine.table().peak_terms(),
    }
}

/// Oracle time in milliseconds for the worst-case pair of `det`.
pub fn time_oracle(det: i64) -> f64 {
    let (p, q, r, s) = worst_case(det);
    let cfg = OracleConfig { budget: det as usize, seed: 0 };
    let t = Instant::now();
    std::hint::black_box(
        oracle_product(&MulticurveKey::new(0, p, q), &MulticurveKey::new(0, r, s), &cfg).expect("oracle run"),
    );
    ms(t.elapsed())
}

/// Benchmarks each determinant in ascending order.
pub fn run_suite(dets: &[i64], cfg: &BenchConfig) -> BenchReport {
    assert!(dets.windows(2).all(|w| w[0] <= w[1]), "determinants must be sorted");
    let records: Vec<BenchRecord> = dets.iter().map(|&d| bench_det(d, cfg)).collect();
    let slope = log_log_slope(&records.iter().map(|r| (r.det as f64, r.engine_ms)).collect::<Vec<_>>());
    BenchReport { records, slope }
}

/// Fitted `ms = c * b^det` through the oracle timings, as `(c, b)`.
pub fn exponential_fit(points: &[(i64, f64)]) -> Option<(f64, f64)> {
    let pts: Vec<(f64, f64)> = points.iter().filter(|(_, y)| *y > 0.0).map(|&(x, y)| (x as f64, y.ln())).collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let slope = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>() / sxx;
    Some(((my - slope * mx).exp(), slope.exp()))
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("det,engine_ms,oracle_ms_or_NA,table_entries,warm_engine_ms,peak_terms\n");
        for r in &self.records {
            let oracle = r.oracle_ms.map_or("NA".to_string(), |v| format!("{v:.3}"));
            out += &format!(
                "{},{:.3},{},{},{:.3},{}\n",
                r.det, r.engine_ms, oracle, r.table_entries, r.warm_engine_ms, r.peak_terms
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_power_law() {
        let pts: Vec<(f64, f64)> = [2.0, 4.0, 8.0, 16.0].iter().map(|&x: &f64| (x, 3.0 * x.powi(5))).collect();
        assert!((log_log_slope(&pts).unwrap() - 5.0).abs() < 1e-9);
        assert_eq!(log_log_slope(&[(2.0, 1.0)]), None);
        assert_eq!(log_log_slope(&[]), None);
    }

    #[test]
    fn exponential_fit_recovers_base() {
        let pts: Vec<(i64, f64)> = (4..10).map(|d| (d, 0.5 * 2f64.powi(d as i32))).collect();
        let (c, b) = exponential_fit(&pts).unwrap();
        assert!((b - 2.0).abs() < 1e-9 && (c - 0.5).abs() < 1e-9);
    }

    #[test]
    fn medians() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }

    #[test]
    fn small_suite() {
        let cfg = BenchConfig { reps: 1, oracle_max_det: 6, oracle_reps: 1 };
        let r = run_suite(&[2, 6, 10], &cfg);
        assert_eq!(r.records.len(), 3);
        assert!(r.records[0].oracle_ms.is_some() && r.records[2].oracle_ms.is_none());
        assert!(r.records[2].table_entries > 0);
        let csv = r.to_csv();
        assert!(csv.starts_with("det,engine_ms,oracle_ms_or_NA,table_entries"));
        assert!(csv.lines().nth(3).unwrap().contains(",NA,"));
        assert!(run_suite(&[], &cfg).records.is_empty());
    }
}
