//! Dadok's k(λ) and the real / quaternionic / complex type of a representation.
//!
//!     cargo run --example dadok_invariant -- "C3:[0,0,1]" "A1:[1]*D4:[1,0,0,0]"

use lieosc::dadok::{fundamental_k_values, k_invariant};
use lieosc::osc::describe;
use lieosc::sorth::build_sorth;
use lieosc::{LieType, RepDescriptor, RootDatum};

fn main() -> lieosc::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = ["C2:[1,0]", "B3:[0,0,1]", "C3:[0,0,1]", "E7:[0,0,0,0,0,0,1]", "A3:[1,0,0]", "A1:[1]*C3:[1,0,0]", "B4:[0,0,0,1]*S1"]
            .map(String::from)
            .to_vec();
    }
    for a in &args {
        let rep: RepDescriptor = a.parse()?;
        let info = describe(&rep)?;
        let (d, lambda) = rep.datum_and_weight()?;
        let kv = k_invariant(&d, &build_sorth(&d)?, &lambda);
        let parts: Vec<String> = kv.n_parts.iter().map(ToString::to_string).collect();
        println!("{:<24} dim {:<5} k = {:<4} n = [{}]  {}", rep.to_string(), info.dim, kv.k.to_string(), parts.join(","), info.repr_type);
    }

    println!("\nk of the fundamental weights:");
    for ty in LieType::all_up_to(8).into_iter().filter(|t| t.rank == 8 || t.family.fixed_rank().is_some()) {
        let d = RootDatum::new(ty);
        let ks: Vec<String> = fundamental_k_values(&d, &build_sorth(&d)?).iter().map(ToString::to_string).collect();
        println!("  {ty:<3} {}", ks.join(" "));
    }
    Ok(())
}
