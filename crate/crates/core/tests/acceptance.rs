//! One PASS/FAIL line per acceptance criterion.
//!
//! Exits 0 so that `cargo test` reports the run rather than aborting on a
//! known failure; set `ACCEPTANCE_STRICT=1` to exit 1 when any line fails.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use skeintorus::bench::{exponential_fit, run_suite, time_oracle, BenchConfig};
use skeintorus::check::{differential, first_difference, negative_coefficients, Corpus, DiffReport};
use skeintorus::closedforms::{check_all, CheckLimits, Verdict};
use skeintorus::discrepancy::Engine;
use skeintorus::laurent::LaurentPoly;
use skeintorus::mapping::{opp, rev, tw, tw_pow};
use skeintorus::oracle::OracleConfig;
use skeintorus::skein::{to_multicurve, MulticurveElement, SkeinElement};

struct Line {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn a(k: i64) -> LaurentPoly {
    LaurentPoly::a_pow(k)
}

fn qi(n: i64) -> LaurentPoly {
    LaurentPoly::quantum_int(n).unwrap()
}

fn t(p: i64, q: i64) -> SkeinElement {
    SkeinElement::t(p, q)
}

fn sum(parts: &[SkeinElement]) -> SkeinElement {
    let mut out = SkeinElement::zero();
    for x in parts {
        out.add_assign(x);
    }
    out
}

fn timed(id: u32, name: &'static str, f: impl FnOnce() -> (bool, String)) -> Line {
    let start = Instant::now();
    let (pass, detail) = f();
    Line { id, name, pass, detail, elapsed: start.elapsed() }
}

fn golden_d10_4() -> (bool, String) {
    let expected = sum(&[
        t(8, 3).scale(&a(-2)),
        t(6, 3).scale(&(&a(-6) * &qi(2))),
        t(4, 1).scale(&(&a(-4) * &qi(2))),
        SkeinElement::eta_t(1, 2, 1).scale(&a(2)),
        t(2, 1).scale(&(&a(2) * &qi(4))),
    ]);
    let start = Instant::now();
    let got = Engine::new().discrepancy(10, 4, 0, 1);
    let elapsed = start.elapsed();
    match first_difference(&expected, &got) {
        None if elapsed < Duration::from_secs(1) => (true, format!("exact match in {elapsed:?}")),
        None => (false, format!("exact match but took {elapsed:?}")),
        Some((k, want, have)) => (
            false,
            format!(
                "term {} expected {want} got {have}; engine value {got}",
                SkeinElement::term(k, LaurentPoly::one())
            ),
        ),
    }
}

fn golden_product() -> (bool, String) {
    let xy = Engine::new().multiply(&t(2, 1), &t(0, 1));
    let expected = sum(&[t(2, 2).scale(&a(2)), t(2, 0).scale(&a(-2)), SkeinElement::eta_pow(1)]);
    let mut curves = MulticurveElement::curve(2, 2).scale(&a(2));
    curves.add_assign(&MulticurveElement::boundary());
    curves.add_assign(&MulticurveElement::one().scale(&LaurentPoly::from_terms([(2, -1), (-2, -1)])));
    curves.add_assign(&MulticurveElement::curve(2, 0).scale(&a(-2)));
    let m = to_multicurve(&xy);
    (xy == expected && m == curves, format!("{xy}  =  {m}"))
}

fn base_cases() -> (bool, String) {
    let mut e = Engine::new();
    let mut checked = 0;
    for p in -8..=8 {
        for q in -8..=8 {
            for r in -8..=8 {
                for s in -8i64..=8 {
                    if (p * s - r * q).abs() > 1 {
                        continue;
                    }
                    let d = e.discrepancy(p, q, r, s);
                    if !d.is_zero() {
                        return (false, format!("D({p},{q};{r},{s}) = {d}"));
                    }
                    checked += 1;
                }
            }
        }
    }
    for p in 1..=40 {
        let d = e.discrepancy(p, 0, 0, 1);
        if !d.is_zero() {
            return (false, format!("D({p},0;0,1) = {d}"));
        }
    }
    let d = e.discrepancy(2, 1, 0, 1);
    (d == SkeinElement::one(), format!("{checked} unimodular pairs zero, D(p,0;0,1) = 0 for p <= 40, D(2,1;0,1) = {d}"))
}

fn oracle_lines(report: &DiffReport, elapsed: Duration) -> (Line, Line) {
    let of = |check: &str| report.failures.iter().filter(|f| f.check == check).collect::<Vec<_>>();
    let describe = |fs: Vec<&skeintorus::check::PairFailure>| match fs.first() {
        None => format!("{} pairs agree", report.pairs),
        Some(f) => format!("{} failures, first {:?} term {} expected {} got {}", fs.len(), f.pair, f.term, f.expected, f.got),
    };
    let oracle = of("oracle");
    let closed = of("closed torus");
    (
        Line { id: 4, name: "oracle differential", pass: oracle.is_empty(), detail: describe(oracle), elapsed },
        Line { id: 8, name: "closed-torus reduction", pass: closed.is_empty(), detail: describe(closed), elapsed },
    )
}

fn closed_forms(engine: &mut Engine) -> (bool, String) {
    let lim = CheckLimits { q1: 60, q2: 60, two_q: 30, s2: 40, parity: 30 };
    let reports = check_all(engine, &lim);
    let fails: Vec<_> = reports.iter().filter(|r| r.verdict == Verdict::Fail).collect();
    let flags: Vec<_> = reports.iter().filter(|r| r.verdict == Verdict::Flag).map(|r| r.name).collect();
    let detail = match fails.first() {
        Some(r) => format!("{} failed: {:?}", r.name, r.mismatch),
        None => format!("{} families match, flagged: {flags:?}", reports.len() - flags.len()),
    };
    (fails.is_empty(), detail)
}

fn symmetries() -> (bool, String) {
    let mut e = Engine::new();
    let mut n = 0;
    for p in 1..=10 {
        for q in 0..p {
            let d = e.discrepancy(p, q, 0, 1);
            if tw(&d) != e.discrepancy(p, p + q, 0, 1) {
                return (false, format!("twist fails at ({p},{q})"));
            }
            if opp(&d) != e.discrepancy(p, p - q, 0, 1) {
                return (false, format!("opposition fails at ({p},{q})"));
            }
            if rev(&e.discrepancy(1, 0, q, p)) != d {
                return (false, format!("reverse fails at ({p},{q})"));
            }
            n += 3;
        }
    }
    for q in 1..=6 {
        for p in 0..=12 {
            if e.discrepancy(1, 0, p, q) != rev(&tw_pow(&e.discrepancy(q, p % q, 0, 1), p / q)) {
                return (false, format!("D(1,0;{p},{q}) differs from its twisted reverse"));
            }
            n += 1;
        }
    }
    (true, format!("{n} identities"))
}

fn associativity() -> (bool, String) {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut e = Engine::new();
    let random = |rng: &mut StdRng| SkeinElement::eta_t(rng.gen_range(0..=4), rng.gen_range(-4..=4), rng.gen_range(-4..=4));
    for i in 0..200 {
        let (x, y, z) = (random(&mut rng), random(&mut rng), random(&mut rng));
        let (xy, yz) = (e.multiply(&x, &y), e.multiply(&y, &z));
        if e.multiply(&xy, &z) != e.multiply(&x, &yz) {
            return (false, format!("triple {i}: {x} | {y} | {z}"));
        }
    }
    (true, "200 triples".into())
}

fn positivity(engine: &mut Engine, corpus: &Corpus) -> (bool, String) {
    let mut checked = 0;
    for (p, q, r, s) in corpus.pairs() {
        let xy = engine.multiply(&t(p, q), &t(r, s));
        if let Some((term, c)) = negative_coefficients(&xy).into_iter().next() {
            return (false, format!("T({p},{q})T({r},{s}): {term} has {c}"));
        }
        checked += 1;
    }
    for (k, v) in engine.table().sorted() {
        if let Some((term, c)) = negative_coefficients(&v).into_iter().next() {
            return (false, format!("{k}: {term} has {c}"));
        }
        checked += 1;
    }
    (true, format!("{checked} products and table entries"))
}

fn complexity() -> (bool, String) {
    let dets: Vec<i64> = (1..=10).map(|i| 20 * i).collect();
    let report = run_suite(&dets, &BenchConfig { reps: 1, oracle_max_det: 0, oracle_reps: 0 });
    let last = report.records.last().unwrap();
    let slope = report.slope.unwrap_or(f64::INFINITY);

    let oracle: Vec<(i64, f64)> = (6..=10).map(|i| 2 * i).map(|d| (d, time_oracle(d))).collect();
    let (c, b) = exponential_fit(&oracle).unwrap();
    let hour = 3.6e6;
    let crossover = ((hour / c).ln() / b.ln()).ceil() as i64;
    let at32 = c * b.powi(32);
    let engine_at32 = {
        let start = Instant::now();
        Engine::new().discrepancy(32, 16, 0, 1);
        start.elapsed().as_secs_f64() * 1e3
    };

    let pass = last.engine_ms < 120e3 && slope <= 6.5 && at32 > hour && engine_at32 < at32;
    let engine: Vec<String> = report.records.iter().map(|r| format!("{}:{:.0}ms", r.det, r.engine_ms)).collect();
    (
        pass,
        format!(
            "engine {}; slope {slope:.2}; oracle {:.2}x per crossing, 1 h at det {crossover}, det 32 extrapolates to {:.1} h (engine {engine_at32:.1} ms)",
            engine.join(" "),
            b,
            at32 / hour
        ),
    )
}

fn main() {
    let mut lines = vec![
        timed(1, "golden D(10,4;0,1)", golden_d10_4),
        timed(2, "golden T(2,1)T(0,1)", golden_product),
        timed(3, "base cases", base_cases),
    ];

    let corpus = Corpus::default();
    let mut engine = Engine::new();
    let start = Instant::now();
    let report = differential(&mut engine, &corpus, &OracleConfig::default(), false).expect("corpus within budget");
    let (oracle, closed) = oracle_lines(&report, start.elapsed());
    lines.push(oracle);
    lines.push(timed(5, "closed forms", || closed_forms(&mut engine)));
    lines.push(timed(6, "symmetries", symmetries));
    lines.push(timed(7, "associativity", associativity));
    lines.push(closed);
    lines.push(timed(9, "positivity", || positivity(&mut engine, &corpus)));
    lines.push(timed(10, "complexity", complexity));
    lines.sort_by_key(|l| l.id);

    for l in &lines {
        println!(
            "{} {:>2} {:<24} [{:.2?}] {}",
            if l.pass { "PASS" } else { "FAIL" },
            l.id,
            l.name,
            l.elapsed,
            l.detail
        );
    }
    let failed = lines.iter().filter(|l| !l.pass).count();
    println!("{} of {} criteria pass", lines.len() - failed, lines.len());
    if failed > 0 && std::env::var_os("ACCEPTANCE_STRICT").is_some_and(|v| v == "1") {
        std::process::exit(1);
    }
}
