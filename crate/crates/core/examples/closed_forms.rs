//! Closed-form families checked against the recursion.

use skeintorus::closedforms::{check_all, d_2q_q, d_q1, d_q2, CheckLimits};
use skeintorus::discrepancy::Engine;

fn main() {
    println!("D(6,1;0,1) = {}", d_q1(6).unwrap());
    println!("D(7,2;0,1) = {}", d_q2(7).unwrap());
    println!("D(8,4;0,1) = {}", d_2q_q(4).unwrap());

    let lim = CheckLimits { q1: 20, q2: 20, two_q: 10, s2: 15, parity: 12 };
    for r in check_all(&mut Engine::new(), &lim) {
        println!("{:?} {} over {}..={}", r.verdict, r.name, r.range.0, r.range.1);
    }
}
