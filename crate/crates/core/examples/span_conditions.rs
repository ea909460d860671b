//! Builds a highest-weight module and tests the span conditions on it.
//!
//!     cargo run --example span_conditions -- "B3:[1,0,1]"

use lieosc::chevmod::{build_chevalley, build_module, special_vectors, verify_prop_d, Condition};
use lieosc::dadok::k_invariant;
use lieosc::osc::{c2_mu_search, module_transitive, describe};
use lieosc::sorth::build_sorth;
use lieosc::RepDescriptor;

fn main() -> lieosc::Result<()> {
    let rep: RepDescriptor = std::env::args().nth(1).as_deref().unwrap_or("C3:[0,0,1]").parse()?;
    let info = describe(&rep)?;
    let (d, lambda) = rep.datum_and_weight()?;
    let m = build_module(&build_chevalley(&d), &lambda, 5000)?;
    println!("{rep}: dim {}, {} weights, {}", m.dim, m.weights().len(), info.repr_type);
    println!("Serre relations: {}", m.serre_defect().unwrap_or_else(|| "hold".into()));
    if !m.is_self_dual() {
        println!("not self-dual; the extremal conditions need ε(v_λ)");
        return Ok(());
    }

    for c in [Condition::CHalf, Condition::C1, Condition::C1Half, Condition::C2] {
        let r = m.check_condition(&c)?;
        match r.witness {
            None => println!("  {c:?}: holds"),
            Some(w) => println!("  {c:?}: fails at {} ({} of {} covered)", w.weight, w.covered, w.mult),
        }
    }
    println!("transitive on the sphere: {}", module_transitive(&m, info.semisimple_type)?);

    let b = build_sorth(&d)?;
    let kv = k_invariant(&d, &b, &lambda);
    let report = verify_prop_d(&m, &b, &kv)?;
    println!("lowering monomial with exponents {:?} reaches the lowest vector: {}", report.exponents, report.confirmed());

    let top = m.weights().iter().position(|w| w.is_dominant() && *w != lambda);
    if let Some(w) = top {
        println!("V_{} has {} special vectors", m.weights()[w], special_vectors(&m, w).len());
    }
    let verdict = c2_mu_search(&m)?;
    println!("level-2 test from intermediate weights: {}", if verdict.passed { "passes".to_string() } else { format!("fails, {:?}", verdict.witness) });
    Ok(())
}
