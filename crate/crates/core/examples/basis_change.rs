//! Moving between the Chebyshev basis `eta^k T(p,q)`, multicurves
//! `d^k (p,q)` and the second-kind threading.

use skeintorus::skein::{from_multicurve, to_multicurve, to_s_basis, MulticurveElement, SkeinElement};

fn main() {
    let x = &SkeinElement::t(3, 0) + &SkeinElement::eta_t(2, 2, 1);
    let m = to_multicurve(&x);
    println!("T(3,0) + eta^2 T(2,1)");
    println!("  multicurves: {m}");
    println!("  S-threaded:  {}", to_s_basis(&x));
    assert_eq!(from_multicurve(&m), x);

    // three parallel copies of the (1,1) curve
    let cable = MulticurveElement::curve(3, 3);
    println!("(3,3) = {}", from_multicurve(&cable));

    println!("JSON:  {}", x.to_json());
    println!("LaTeX: {}", x.to_latex());
}
