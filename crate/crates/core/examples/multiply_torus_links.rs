//! Products of torus links, given on the command line or a default pair.
//!
//! ```text
//! cargo run --example multiply_torus_links -- "T(3,1)" "(1,2) + d"
//! ```

use skeintorus::discrepancy::Engine;
use skeintorus::expr::parse;
use skeintorus::skein::{to_multicurve, SkeinElement};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (x, y) = match args.as_slice() {
        [x, y] => (x.clone(), y.clone()),
        _ => ("T(2,1)".to_string(), "T(0,1)".to_string()),
    };
    let mut engine = Engine::new();
    let mut mul = |a: &SkeinElement, b: &SkeinElement| Ok::<_, ()>(engine.multiply(a, b));
    let a = parse(&x).expect("first factor").eval(&mut mul).unwrap();
    let b = parse(&y).expect("second factor").eval(&mut mul).unwrap();
    let product = mul(&a, &b).unwrap();
    println!("{x} * {y}");
    println!("  = {product}");
    println!("  = {}", to_multicurve(&product));

    // the algebra is not commutative
    let ba = mul(&b, &a).unwrap();
    println!("{y} * {x}");
    println!("  = {ba}");
}
