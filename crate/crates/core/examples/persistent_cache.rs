//! Saving a filled table and answering later queries from it.

use skeintorus::discrepancy::{Engine, MemoTable};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join("skeintorus-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("table.cache");

    let mut engine = Engine::new();
    engine.fill_table_s1(30, 15)?;
    engine.table().save(&path)?;
    println!("wrote {} entries to {}", engine.table().len(), path.display());

    let t = std::time::Instant::now();
    let mut warm = Engine::with_table(MemoTable::load(&path)?);
    println!("loaded in {:?}", t.elapsed());
    let t = std::time::Instant::now();
    let d = warm.discrepancy(29, 11, 0, 1);
    println!("D(29,11;0,1) has {} terms, answered in {:?}", d.len(), t.elapsed());
    assert_eq!(warm.table().len(), engine.table().len());
    Ok(())
}
