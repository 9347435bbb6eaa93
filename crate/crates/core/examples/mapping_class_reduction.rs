//! Moving a pair of slopes to the form `(p,q), (0,s)` with `0 <= q < p`.

use skeintorus::mapping::{reduce_pair, tw, MappingClass};
use skeintorus::skein::SkeinElement;

fn main() {
    for (p, q, r, s) in [(5, 2, 3, 7), (-4, 9, 2, -6), (1, 0, 7, 3)] {
        let red = reduce_pair(p, q, r, s).unwrap();
        let (a, b, c, d) = red.phi.entries();
        println!(
            "({p},{q}),({r},{s}) -> ({},{}),(0,{}) via [{a} {c}; {b} {d}]",
            red.p1, red.q1, red.s1
        );
        assert_eq!(red.phi.apply(r, s), (0, red.s1));
    }

    let x = SkeinElement::t(3, 1);
    println!("twist of T(3,1): {}", tw(&x));
    let rot = MappingClass::new(0, 1, -1, 0).unwrap();
    println!("rotation of T(3,1): {}", rot.act_on_skein(&x));
}
