use skeintorus::discrepancy::{strict_term_bound_violation, term_bound_violation, Engine};

#[test]
fn every_entry_within_loose_bound() {
    let mut e = Engine::new();
    e.fill_table_s1(40, 20).unwrap();
    for (k, v) in e.table().sorted() {
        assert_eq!(term_bound_violation(&k, &v), None);
    }
}

#[test]
fn tight_bound_fails_from_the_start() {
    let mut e = Engine::new();
    e.fill_table_s1(20, 10).unwrap();
    let violations: Vec<_> = e.table().sorted().into_iter().filter_map(|(k, v)| strict_term_bound_violation(&k, &v)).collect();
    assert!(!violations.is_empty());
    let d = e.discrepancy(10, 4, 0, 1);
    assert!(d.keys().any(|k| (k.curve.p(), k.curve.q()) == (8, 3)));
}
