//! Which irreducible representations of simple groups, possibly times a
//! circle, act transitively on the unit sphere.
//!
//!     cargo run --release --example sphere_transitivity -- 8

use lieosc::classify::sphere_scan;
use lieosc::dadok::ReprType;
use lieosc::osc::{describe, descriptor_transitive};
use lieosc::RepDescriptor;

fn main() -> lieosc::Result<()> {
    let rank_cap: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let scan = sphere_scan(rank_cap, 4000)?;
    println!("{} representations tested up to rank {rank_cap}", scan.tested);
    for (label, set) in [("real", &scan.real), ("complex", &scan.complex)] {
        println!("\n{label}:");
        for rep in set {
            // The circle alone acts on ℂ = ℝ².
            let real_dim = match describe(rep) {
                Ok(info) if info.repr_type == ReprType::Real => info.dim,
                Ok(info) => 2 * info.dim,
                Err(_) => 2,
            };
            println!("  {:<24} on S^{}", rep.to_string(), real_dim - 1);
        }
    }

    let probe: RepDescriptor = "G2:[1,0]*S1".parse()?;
    println!("\n{probe} transitive: {}", descriptor_transitive(&probe, 4000)?);
    Ok(())
}
