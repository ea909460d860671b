//! Runs the elimination filters over the k = 4 real representations of
//! simple groups and prints the verdict of each.
//!
//!     cargo run --release --example simple_pipeline -- 8

use lieosc::classify::simple_pipeline;
use lieosc::golden::DataDir;

fn main() -> lieosc::Result<()> {
    let rank_cap: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    let dir = DataDir::resolve(None);
    let report = simple_pipeline(rank_cap, &dir.symmetric_spaces()?.index(), 4000)?;
    for rec in &report.records {
        let why = match rec.primary_failure() {
            Some(v) => {
                let note = v.witness.as_ref().map(|w| w.note.as_str()).unwrap_or("");
                format!("{}: {note}", v.filter_name)
            }
            None => String::new(),
        };
        println!("{:<30} {:<10} {:?} {why}", rec.descriptor.to_string(), rec.dim, rec.status);
    }
    let names: Vec<String> = report.survivors.iter().map(ToString::to_string).collect();
    println!("\nsurvivors: {}", names.join(", "));
    Ok(())
}
