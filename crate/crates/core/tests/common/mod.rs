//! Invariants shared by the property tests and the acceptance harness.
#![allow(dead_code)]

use lieosc::chevmod::{build_chevalley, build_module, Condition, IrrepModule};
use lieosc::dadok::k_invariant;
use lieosc::sorth::build_sorth;
use lieosc::weights::{weight_system, weyl_dim_u64};
use lieosc::{LieType, RootDatum, RootVec, Weight};

/// Types small enough that modules over them build in milliseconds.
pub fn small_types() -> Vec<LieType> {
    LieType::all_up_to(4)
}

/// Σ_{α>0} α = 2ρ.
pub fn two_rho_identity(d: &RootDatum) -> bool {
    let zero = RootVec(vec![0; d.rank()]);
    let sum = d.positive_roots().iter().fold(zero, |acc, r| acc.add(r));
    d.root_to_weight(&sum) == d.weyl_vector().scale(2)
}

/// Labels in `0..=max_label`, kept when the module has dimension ≤ `dim_cap`.
pub fn bounded_weight(d: &RootDatum, labels: &[i64], dim_cap: u64) -> Option<Weight> {
    let w = Weight(labels.iter().take(d.rank()).copied().collect());
    (w.rank() == d.rank() && weyl_dim_u64(d, &w).is_some_and(|n| n <= dim_cap)).then_some(w)
}

pub fn module(d: &RootDatum, lambda: &Weight) -> IrrepModule {
    build_module(&build_chevalley(d), lambda, 10_000).expect("module within cap")
}

pub fn serre_holds(m: &IrrepModule) -> Result<(), String> {
    m.serre_defect().map_or(Ok(()), Err)
}

pub fn form_positive_definite(m: &IrrepModule) -> bool {
    (0..m.weights().len()).all(|w| m.gram(w).is_positive_definite())
}

/// Each weight space has the dimension the multiplicity formula predicts.
pub fn module_matches_multiplicities(m: &IrrepModule) -> Result<(), String> {
    let d = m.datum();
    let ws = weight_system(d, &m.highest, 1_000_000).map_err(|e| e.to_string())?;
    for (i, w) in m.weights().iter().enumerate() {
        let expected = ws.mult(d, w) as usize;
        if m.dim_of(i) != expected {
            return Err(format!("{}: weight {w} has dimension {} but multiplicity {expected}", m.highest, m.dim_of(i)));
        }
    }
    if m.dim as u64 != ws.total_dim {
        return Err(format!("{}: total {} vs {}", m.highest, m.dim, ws.total_dim));
    }
    Ok(())
}

/// C½ ⇒ C₁ ⇒ C₁½ ⇒ C₂ on a self-dual module.
pub fn condition_chain_monotone(m: &IrrepModule) -> Result<(), String> {
    let chain = [Condition::CHalf, Condition::C1, Condition::C1Half, Condition::C2];
    let holds: Vec<bool> =
        chain.iter().map(|c| m.check_condition(c).map(|r| r.holds)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    match holds.windows(2).position(|p| p[0] && !p[1]) {
        Some(i) => Err(format!("{}: {:?} holds but {:?} fails", m.highest, chain[i], chain[i + 1])),
        None => Ok(()),
    }
}

/// k(λ+μ) = k(λ) + k(μ).
pub fn k_additive(d: &RootDatum, lambda: &Weight, mu: &Weight) -> bool {
    let b = build_sorth(d).expect("sorth");
    k_invariant(d, &b, &lambda.add(mu)).k == k_invariant(d, &b, lambda).k + k_invariant(d, &b, mu).k
}

/// Multiplicities are constant on simple-reflection orbits.
pub fn multiplicities_weyl_invariant(d: &RootDatum, lambda: &Weight) -> Result<(), String> {
    let ws = weight_system(d, lambda, 1_000_000).map_err(|e| e.to_string())?;
    for (w, m) in ws.all_weights(d, 200_000).map_err(|e| e.to_string())? {
        for i in 0..d.rank() {
            let image = d.reflect_simple(&w, i);
            if ws.mult(d, &image) != m {
                return Err(format!("{lambda}: mult({w}) = {m} but mult(s{i} {w}) = {}", ws.mult(d, &image)));
            }
        }
    }
    Ok(())
}
