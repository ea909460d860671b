//! Classifies the simple factors by the C-conditions, then enumerates
//! products of them (with and without a circle) under the composite rules.
//!
//!     cargo run --release --example composite_candidates -- 8

use lieosc::classify::{candidates, composite_pipeline, simple_pipeline, CompositeContext, Status};
use lieosc::golden::DataDir;
use lieosc::osc::classify_c_tables;
use std::collections::BTreeMap;

fn main() -> lieosc::Result<()> {
    let rank_cap: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let dir = DataDir::resolve(None);
    let symmetric = dir.symmetric_spaces()?.index();

    let tables = classify_c_tables(rank_cap, 256)?;
    let show = |v: &[lieosc::RepDescriptor]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    println!("C½: {}\nC1: {}\nC1½: {}\n", show(&tables.c_half), show(&tables.c1), show(&tables.c1_half));

    let simple = simple_pipeline(rank_cap, &symmetric, 4000)?;
    let ctx = CompositeContext::new(rank_cap, 4000, &symmetric, &tables);
    let records = composite_pipeline(&ctx, &simple)?;
    let mut by_status: BTreeMap<Status, usize> = BTreeMap::new();
    for r in &records {
        *by_status.entry(r.status).or_default() += 1;
    }
    println!("{} records: {by_status:?}", records.len());
    for c in candidates(&records) {
        println!("  {c}");
    }
    Ok(())
}
