//! Weight multiplicities by Freudenthal's formula, Weyl dimensions and the
//! count of ways a weight is a root or a sum of two roots.
//!
//!     cargo run --example weight_multiplicities -- "F4:[0,0,0,1]"

use lieosc::rootsys::fmt_theta;
use lieosc::weights::{decomposition_count, orbit_size, weight_system, weyl_dim};
use lieosc::{LieType, RepDescriptor, RootDatum};

fn main() -> lieosc::Result<()> {
    let rep: RepDescriptor = std::env::args().nth(1).as_deref().unwrap_or("F4:[0,0,0,1]").parse()?;
    let (d, lambda) = rep.datum_and_weight()?;
    let ws = weight_system(&d, &lambda, 10_000_000)?;
    println!("{rep}: Weyl dimension {}, {} dominant weights", weyl_dim(&d, &lambda), ws.dominant_mults.len());
    for (w, m) in &ws.dominant_mults {
        println!("  {w:<18} {:<28} mult {m:<4} orbit {}", fmt_theta(&d.weight_to_theta(w)), orbit_size(&d, w));
    }

    // The E8 module with highest weight 2θ8 and the two sums λ ± μ that each
    // decompose in one way only.
    let e8 = RootDatum::new(LieType::e(8));
    let lambda = e8.parse_weight_theta("2θ8")?;
    let ws = weight_system(&e8, &lambda, 10_000_000)?;
    let nu = e8.parse_weight_theta("θ8+θ7")?;
    let mu = e8.parse_weight_theta("θ6+θ5")?;
    println!("\nE8 {lambda}: dim {}, mult(θ8+θ7) = {}, mult(θ6+θ5) = {}", ws.total_dim, ws.mult(&e8, &nu), ws.mult(&e8, &mu));
    for (label, v) in [("λ+μ", lambda.add(&mu)), ("λ−μ", lambda.sub(&mu))] {
        let count = decomposition_count(&e8, &v);
        println!("  {label} = {}: N = {} {:?}", fmt_theta(&e8.weight_to_theta(&v)), count.n, count.describe(&e8));
    }
    Ok(())
}
