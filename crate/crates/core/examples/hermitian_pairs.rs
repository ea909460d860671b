//! For a Hermitian symmetric pair (ambient type, node), builds the compact
//! positive roots and a strongly orthogonal set Γ of noncompact roots, then
//! decides whether the circle factor is redundant.
//!
//!     cargo run --example hermitian_pairs

use lieosc::classify::{hermitian_pair, hermitian_redundancy, HermitianPairData};
use lieosc::golden::DataDir;
use lieosc::rootsys::fmt_theta;
use lieosc::LieType;

fn main() -> lieosc::Result<()> {
    for (ambient, node) in [(LieType::a(5), 1), (LieType::d(6), 5), (LieType::c(4), 3), (LieType::e(6), 0), (LieType::e(7), 6)] {
        let data = hermitian_pair(ambient, node)?;
        let v = hermitian_redundancy(&data)?;
        let gamma: Vec<String> = data.noncompact_orthogonal_set.iter().map(|g| fmt_theta(g)).collect();
        println!(
            "{ambient} node {node}: {} compact roots, Γ = {{{}}}; circle redundant {}, Γ-orthogonal {}",
            data.compact_positive_roots.len(),
            gamma.join(", "),
            v.circle_redundant,
            v.gamma_orthogonal
        );
    }

    println!("\nshipped cases:");
    for case in DataDir::resolve(None).hermitian_pairs()?.cases {
        for inst in &case.instances {
            let v = hermitian_redundancy(&HermitianPairData::from_instance(inst)?)?;
            println!("  {} ({}) {}: {v:?}", case.case, case.part, inst.rep);
        }
    }
    Ok(())
}
