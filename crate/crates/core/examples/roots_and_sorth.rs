//! Root system data and the maximal strongly orthogonal set of a simple type.
//!
//!     cargo run --example roots_and_sorth -- E7

use lieosc::sorth::{build_sorth, verify_sorth};
use lieosc::rootsys::fmt_theta;
use lieosc::{LieType, RootDatum};

fn main() -> lieosc::Result<()> {
    let ty: LieType = std::env::args().nth(1).as_deref().unwrap_or("E7").parse()?;
    let d = RootDatum::new(ty);
    println!("{ty}: rank {}, {} positive roots", d.rank(), d.num_positive());
    println!("Cartan matrix:");
    for row in d.cartan() {
        println!("  {row:?}");
    }
    println!("highest root {}", fmt_theta(&d.root_to_theta(&d.highest_root())));
    println!("ρ = {}", d.weyl_vector());

    let b = build_sorth(&d)?;
    println!("\nstrongly orthogonal set ({} roots):", b.len());
    for (beta, step) in b.betas.iter().zip(&b.provenance) {
        println!("  {:<28} {:?} at depth {}", fmt_theta(&d.root_to_theta(beta)), step.tag, step.depth);
    }
    let report = verify_sorth(&d, &b);
    println!("pairwise strongly orthogonal and s_B ρ = −ρ: {}", report.valid());
    let in_span = report.fundamental_in_span.iter().filter(|&&x| x).count();
    println!("fundamental weights in the span of B: {in_span} of {}", d.rank());
    Ok(())
}
