//! Engine and oracle times on the worst-case family `D(p, p/2; 0, 1)`.
//!
//! ```text
//! cargo run --release --example scaling_benchmark -- 20 40 60 80
//! ```

use skeintorus::bench::{run_suite, BenchConfig};

fn main() {
    let mut dets: Vec<i64> = std::env::args().skip(1).map(|a| a.parse().expect("determinant")).collect();
    if dets.is_empty() {
        dets = vec![8, 12, 16, 20, 30, 40, 60];
    }
    dets.sort();
    let report = run_suite(&dets, &BenchConfig { reps: 3, oracle_max_det: 16, oracle_reps: 1 });
    print!("{}", report.to_csv());
    if let Some(slope) = report.slope {
        println!("log-log slope: {slope:.2}");
    }
}
