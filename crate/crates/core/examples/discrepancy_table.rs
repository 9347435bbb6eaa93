//! A few discrepancies and the memo table the engine builds for them.

use skeintorus::discrepancy::Engine;

fn main() {
    let mut engine = Engine::new();
    for (p, q, r, s) in [(2, 1, 0, 1), (4, 1, 0, 1), (10, 4, 0, 1), (3, 0, 0, 2), (5, 2, 3, 7)] {
        println!("D({p},{q};{r},{s}) = {}", engine.discrepancy(p, q, r, s));
    }
    let table = engine.table();
    println!("table: {} entries, at most {} terms each", table.len(), table.peak_terms());
    for (key, value) in table.sorted().iter().take(8) {
        println!("  {key} = {value}");
    }
}
