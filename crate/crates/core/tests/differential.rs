use skeintorus::check::{differential, Corpus};
use skeintorus::discrepancy::Engine;
use skeintorus::oracle::OracleConfig;

fn corpus() -> Corpus {
    Corpus { p_min: 1, p_max: 4, q_max: 4, r_max: 2, s_max: 3, max_crossings: 12 }
}

#[test]
fn engine_matches_state_sums() {
    let r = differential(&mut Engine::new(), &corpus(), &OracleConfig::default(), false).unwrap();
    assert!(r.pairs > 200);
    assert!(r.passed(), "{:#?}", r.failures);
}

#[test]
fn other_strand_offsets_agree() {
    let cfg = OracleConfig { seed: 7, ..OracleConfig::default() };
    let c = Corpus { p_max: 3, max_crossings: 9, ..corpus() };
    assert!(differential(&mut Engine::new(), &c, &cfg, false).unwrap().passed());
}

#[test]
fn injected_fault_is_reported() {
    let r = differential(&mut Engine::new(), &corpus(), &OracleConfig::default(), true).unwrap();
    assert_eq!(r.failures.len(), 1);
    let f = &r.failures[0];
    assert!(!f.term.is_empty() && f.expected != f.got);
}
