//! Brute-force products by summing over Kauffman states.

use skeintorus::discrepancy::multiply;
use skeintorus::oracle::{evaluate_state, oracle_product, Diagram, OracleConfig, State};
use skeintorus::skein::{from_multicurve, MulticurveKey, SkeinElement};

fn main() {
    let d = Diagram::build(3, 1, 0, 1, 0).unwrap();
    println!("(3,1) over (0,1): {} crossings", d.crossing_count());
    for s in 0..1u64 << d.crossing_count() {
        let o = evaluate_state(&d, State(s)).unwrap();
        println!(
            "  state {s:03b}: A^{:<3} trivial {} peripheral {} curve {}",
            o.weight, o.trivial, o.peripheral, o.curve
        );
    }

    let cfg = OracleConfig::default();
    let by_states = oracle_product(&MulticurveKey::new(0, 3, 1), &MulticurveKey::new(0, 0, 1), &cfg).unwrap();
    println!("state sum:  {by_states}");
    let by_engine = multiply(&SkeinElement::t(3, 1), &SkeinElement::t(0, 1));
    println!("recursion:  {by_engine}");
    assert_eq!(from_multicurve(&by_states), by_engine);
}
