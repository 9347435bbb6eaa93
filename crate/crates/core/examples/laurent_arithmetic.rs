//! Exact Laurent polynomial arithmetic in `Z[A, A^-1]`.

use skeintorus::laurent::LaurentPoly;

fn main() {
    let q2 = LaurentPoly::quantum_int(2).unwrap();
    let q3 = LaurentPoly::quantum_int(3).unwrap();
    println!("[2] = {q2}");
    println!("[3] = {q3}");
    // [2][2] = [3] + [1]
    let lhs = &q2 * &q2;
    println!("[2]^2 = {lhs}");
    assert_eq!(lhs, &q3 + &LaurentPoly::one());

    let loop_value = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    println!("(-A^2 - A^-2)^5 = {}", loop_value.pow(5));
    println!("bar of {} is {}", q3.shift(3), q3.shift(3).conjugate());
    println!("as LaTeX: {}", (&q3 * &LaurentPoly::a_pow(-2)).to_latex());

    let big = LaurentPoly::constant(1 << 40).pow(4);
    println!("coefficients are unbounded: {big}");
}
