//! Necessary conditions for class 𝒪²: the k-bounds, the weight obstructions
//! to (C₂), exact span checks in built modules, transitivity on spheres, and
//! the scan for the (C½), (C₁), (C₁½) conditions over simple groups.

use crate::chevmod::{build_chevalley, build_module, special_vectors, Condition, IrrepModule};
use crate::dadok::{k_invariant, repr_type, weights_with_k, ReprType};
use crate::descriptor::{Factor, RepDescriptor};
use crate::error::{Error, Result};
use crate::linalg::{q, Mat, Q};
use crate::rootsys::{fmt_theta, LieType, RootDatum, Weight};
use crate::sorth::{build_sorth, StronglyOrthogonalSet};
use crate::weights::{decomposition_count, weight_system, weyl_dim_u64, WeightSystem, DEFAULT_WEIGHT_CAP};
use num_traits::ToPrimitive;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

pub const K_BOUND: &str = "k_bound";
pub const C2_WEIGHT: &str = "c2_weight_obstruction";
pub const SPECIAL_B_WEIGHT: &str = "special_b_weight";
pub const SKEW_B_WEIGHT: &str = "skew_b_weight";
pub const ORTHOGONAL_WEIGHT: &str = "orthogonal_weight";
pub const ZERO_WEIGHT_COUNT: &str = "zero_weight_count";
pub const C2_MU: &str = "c2_mu";
pub const E8_FREUDENTHAL: &str = "e8_freudenthal";

/// Dimension cap for weight systems used by the filters; Freudenthal only
/// touches dominant weights so this is generous.
pub const FILTER_DIM_CAP: u64 = 50_000_000;

/// Evidence attached to a verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu_theta: Option<String>,
    /// Decompositions of λ+μ as a root or a sum of two roots.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_plus: Option<u64>,
    /// Decompositions of λ−μ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_minus: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplicity: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub uncovered: Option<Weight>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub covered: Option<u64>,
    pub note: String,
}

impl Witness {
    pub fn note(s: impl Into<String>) -> Self {
        Witness { note: s.into(), ..Witness::default() }
    }

    fn at(d: &RootDatum, mu: &Weight, note: impl Into<String>) -> Self {
        Witness {
            mu: Some(mu.clone()),
            mu_theta: Some(fmt_theta(&d.weight_to_theta(mu))),
            note: note.into(),
            ..Witness::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterVerdict {
    pub passed: bool,
    pub filter_name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl FilterVerdict {
    pub fn pass(name: &str, note: impl Into<String>) -> Self {
        FilterVerdict { passed: true, filter_name: name.into(), witness: Some(Witness::note(note)) }
    }

    pub fn fail(name: &str, witness: Witness) -> Self {
        FilterVerdict { passed: false, filter_name: name.into(), witness: Some(witness) }
    }

    fn renamed(mut self, name: &str) -> Self {
        self.filter_name = name.into();
        self
    }
}

/// k values compatible with class 𝒪² for each type.
pub fn allowed_k(t: ReprType) -> &'static [i64] {
    match t {
        ReprType::Real => &[2, 4],
        ReprType::Quaternionic => &[1],
        ReprType::Complex => &[1, 2],
    }
}

pub fn k_bound_filter(t: ReprType, k: &Q) -> FilterVerdict {
    let allowed = allowed_k(t);
    let ok = k.is_integer() && k.to_integer().to_i64().is_some_and(|k| allowed.contains(&k));
    if ok {
        FilterVerdict::pass(K_BOUND, format!("k = {k} for {t} type"))
    } else {
        FilterVerdict::fail(K_BOUND, Witness::note(format!("k = {k} outside {allowed:?} for {t} type")))
    }
}

pub fn filter_weight_system(d: &RootDatum, lambda: &Weight) -> Result<WeightSystem> {
    weight_system(d, lambda, FILTER_DIM_CAP)
}

/// Fails when neither λ+μ nor λ−μ is a root or a sum of two roots, so a
/// μ-weight vector lies outside 𝒰²v_λ + 𝒰²ε(v_λ).
pub fn c2_weight_obstruction(d: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<FilterVerdict> {
    c2_weight_obstruction_in(d, &filter_weight_system(d, lambda)?, mu)
}

pub fn c2_weight_obstruction_in(d: &RootDatum, ws: &WeightSystem, mu: &Weight) -> Result<FilterVerdict> {
    let lambda = &ws.highest;
    if mu == lambda || *mu == lambda.neg() {
        return Ok(FilterVerdict::pass(C2_WEIGHT, "μ = ±λ is an extremal weight"));
    }
    if !ws.contains(d, mu) {
        return Err(Error::NotAWeight(mu.to_string()));
    }
    let n_plus = decomposition_count(d, &lambda.add(mu)).n;
    let n_minus = decomposition_count(d, &lambda.sub(mu)).n;
    let mut w = Witness::at(d, mu, "");
    w.n_plus = Some(n_plus);
    w.n_minus = Some(n_minus);
    w.multiplicity = Some(ws.mult(d, mu));
    if n_plus == 0 && n_minus == 0 {
        w.note = "λ±μ is neither a root nor a sum of two roots".into();
        Ok(FilterVerdict::fail(C2_WEIGHT, w))
    } else {
        w.note = "λ+μ or λ−μ decomposes".into();
        Ok(FilterVerdict { passed: true, filter_name: C2_WEIGHT.into(), witness: Some(w) })
    }
}

fn halve(w: &Weight) -> Option<Weight> {
    w.0.iter().all(|x| x % 2 == 0).then(|| Weight(w.0.iter().map(|x| x / 2).collect()))
}

/// The doubled-highest-root case (a second long root of B is a weight
/// orthogonal to λ) and the λ = ½(3β_i+β_j) case with μ = ½(β_i−3β_j).
pub fn special_b_weight_filter(d: &RootDatum, b: &StronglyOrthogonalSet, lambda: &Weight) -> Result<FilterVerdict> {
    special_b_weight_filter_in(d, b, &filter_weight_system(d, lambda)?)
}

pub fn special_b_weight_filter_in(d: &RootDatum, b: &StronglyOrthogonalSet, ws: &WeightSystem) -> Result<FilterVerdict> {
    let lambda = &ws.highest;
    let betas: Vec<Weight> = b.betas.iter().map(|r| d.root_to_weight(r)).collect();
    if *lambda == betas[0].scale(2) {
        return match b.betas[1..].iter().position(|r| d.is_long(r)) {
            Some(j) => Ok(c2_weight_obstruction_in(d, ws, &betas[j + 1])?.renamed(SPECIAL_B_WEIGHT)),
            None => Ok(FilterVerdict::pass(SPECIAL_B_WEIGHT, "λ = 2β₁ but β₁ is the only long root of B")),
        };
    }
    let long: Vec<usize> = (0..betas.len()).filter(|&i| d.is_long(&b.betas[i])).collect();
    for &i in &long {
        for &j in &long {
            if i == j || lambda.scale(2) != betas[i].scale(3).add(&betas[j]) {
                continue;
            }
            let Some(mu) = halve(&betas[i].sub(&betas[j].scale(3))) else { continue };
            if !ws.contains(d, &mu) {
                continue;
            }
            let v = c2_weight_obstruction_in(d, ws, &mu)?;
            if !v.passed {
                return Ok(v.renamed(SKEW_B_WEIGHT));
            }
        }
    }
    Ok(FilterVerdict::pass(SPECIAL_B_WEIGHT, "λ is neither 2β₁ nor ½(3β_i+β_j) with ½(β_i−3β_j) a weight"))
}

/// For λ = 2β₁, a nonzero weight orthogonal to λ violates (C₂).
pub fn orthogonal_weight_filter(d: &RootDatum, b: &StronglyOrthogonalSet, ws: &WeightSystem) -> Result<FilterVerdict> {
    let lambda = &ws.highest;
    if *lambda != d.root_to_weight(&b.betas[0]).scale(2) {
        return Ok(FilterVerdict::pass(ORTHOGONAL_WEIGHT, "λ is not twice the highest root"));
    }
    let mut candidates: Vec<Weight> = ws
        .all_weights(d, DEFAULT_WEIGHT_CAP)?
        .into_iter()
        .map(|(w, _)| w)
        .filter(|w| !w.is_zero() && d.pair_weights(lambda, w) == q(0))
        .collect();
    candidates.sort_by_key(|w| (w.0.iter().map(|x| x.abs()).sum::<i64>(), w.0.iter().map(|x| -x).collect::<Vec<_>>()));
    for mu in &candidates {
        let v = c2_weight_obstruction_in(d, ws, mu)?;
        if !v.passed {
            return Ok(v.renamed(ORTHOGONAL_WEIGHT));
        }
    }
    Ok(FilterVerdict::pass(ORTHOGONAL_WEIGHT, "no nonzero weight orthogonal to λ"))
}

/// Fails when mult(0) exceeds the number of ways to write λ as a root or a
/// sum of two roots.
pub fn zero_weight_count_filter(d: &RootDatum, ws: &WeightSystem) -> FilterVerdict {
    let zero = Weight::zero(d.rank());
    if !ws.contains(d, &zero) {
        return FilterVerdict::pass(ZERO_WEIGHT_COUNT, "0 is not a weight");
    }
    let m0 = ws.mult(d, &zero);
    let n = decomposition_count(d, &ws.highest).n;
    let mut w = Witness::at(d, &zero, format!("mult(0) = {m0}, N(λ) = {n}"));
    w.multiplicity = Some(m0);
    w.n_minus = Some(n);
    if m0 > n {
        FilterVerdict::fail(ZERO_WEIGHT_COUNT, w)
    } else {
        FilterVerdict { passed: true, filter_name: ZERO_WEIGHT_COUNT.into(), witness: Some(w) }
    }
}

/// Runs the weight obstruction over every weight.
pub fn c2_weight_search(d: &RootDatum, ws: &WeightSystem) -> Result<FilterVerdict> {
    let mut all: Vec<Weight> = ws.all_weights(d, DEFAULT_WEIGHT_CAP)?.into_iter().map(|(w, _)| w).collect();
    all.sort();
    for mu in all.iter().rev() {
        let v = c2_weight_obstruction_in(d, ws, mu)?;
        if !v.passed {
            return Ok(v);
        }
    }
    Ok(FilterVerdict::pass(C2_WEIGHT, "every weight has λ+μ or λ−μ decomposable"))
}

/// Multiplicity bound for 𝒰^a v_λ + 𝒰^b ε(v_λ) at a weight τ: lowering
/// monomials of length ≤ a reaching τ from λ, and of length ≤ b reaching τ
/// from −λ, counted over all roots.
pub fn span_bound(d: &RootDatum, lambda: &Weight, tau: &Weight, levels: (usize, usize)) -> u64 {
    let count = |x: &Weight, level: usize| -> u64 {
        if x.is_zero() {
            return 1;
        }
        match level {
            0 => 0,
            1 => u64::from(d.root_of_weight(x).is_some()),
            _ => decomposition_count(d, x).n,
        }
    };
    count(&lambda.sub(tau), levels.0) + count(&tau.add(lambda), levels.1)
}

/// First weight whose multiplicity beats `span_bound`.
pub fn weight_bound_violation(d: &RootDatum, ws: &WeightSystem, levels: (usize, usize)) -> Result<Option<Witness>> {
    for (tau, m) in ws.all_weights(d, DEFAULT_WEIGHT_CAP)? {
        let bound = span_bound(d, &ws.highest, &tau, levels);
        if m > bound {
            let mut w = Witness::at(d, &tau, format!("multiplicity {m} exceeds the monomial count {bound}"));
            w.multiplicity = Some(m);
            w.covered = Some(bound);
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// For each special vector v of V_μ: 𝒰²v + 𝒰²ε(v) = V.
pub fn c2_mu_filter(m: &IrrepModule, mu: &Weight) -> Result<FilterVerdict> {
    c2_mu_filter_with(m, &m.twist_matrices()?, mu)
}

pub fn c2_mu_filter_with(m: &IrrepModule, omega: &[Mat], mu: &Weight) -> Result<FilterVerdict> {
    let d = m.datum();
    let w = m.weight_index(mu).ok_or_else(|| Error::NotAWeight(mu.to_string()))?;
    let vectors = special_vectors(m, w);
    for (i, v) in vectors.iter().enumerate() {
        let span = m.span_u(&[v.clone(), m.twist(omega, v)], 2);
        if let Some(def) = m.deficiency(&span) {
            let mut wit = Witness::at(
                d,
                mu,
                format!("special vector {i} of {} in V_μ: 𝒰²v + 𝒰²ε(v) misses part of a weight space", vectors.len()),
            );
            wit.uncovered = Some(def.weight);
            wit.covered = Some(def.covered as u64);
            wit.multiplicity = Some(def.mult as u64);
            return Ok(FilterVerdict::fail(C2_MU, wit));
        }
    }
    Ok(FilterVerdict::pass(C2_MU, format!("all {} special vectors of V_μ span V at level 2", vectors.len())))
}

/// `c2_mu_filter` over the dominant weights, from the top down.
pub fn c2_mu_search(m: &IrrepModule) -> Result<FilterVerdict> {
    let omega = m.twist_matrices()?;
    let mut dominant: Vec<usize> = (0..m.weights().len()).filter(|&w| m.weights()[w].is_dominant()).collect();
    dominant.sort_by_key(|&w| m.depth(w));
    for w in dominant {
        let v = c2_mu_filter_with(m, &omega, &m.weights()[w].clone())?;
        if !v.passed {
            return Ok(v);
        }
    }
    Ok(FilterVerdict::pass(C2_MU, "every dominant weight passes"))
}

/// Multiplicities and decomposition counts behind the E8 elimination.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct E8Check {
    pub lambda: Weight,
    pub m_nu: u64,
    pub m_mu: u64,
    pub n_plus: u64,
    pub n_minus: u64,
    pub plus_witnesses: Vec<String>,
    pub minus_witnesses: Vec<String>,
}

pub fn e8_check(d: &RootDatum) -> Result<E8Check> {
    if d.components() != [LieType::e(8)] {
        return Err(Error::Data("the E8 check needs the E8 root datum".into()));
    }
    let lambda = d.parse_weight_theta("2θ8")?;
    let nu = d.parse_weight_theta("θ8+θ7")?;
    let mu = d.parse_weight_theta("θ6+θ5")?;
    let ws = filter_weight_system(d, &lambda)?;
    let plus = decomposition_count(d, &lambda.add(&mu));
    let minus = decomposition_count(d, &lambda.sub(&mu));
    Ok(E8Check {
        m_nu: ws.mult(d, &nu),
        m_mu: ws.mult(d, &mu),
        n_plus: plus.n,
        n_minus: minus.n,
        plus_witnesses: plus.describe(d),
        minus_witnesses: minus.describe(d),
        lambda,
    })
}

/// λ = 2θ₈: the θ₆+θ₅ space has multiplicity m_ν (ν = θ₈+θ₇, same Weyl
/// orbit) but only N(λ+μ) + N(λ−μ) = 2 monomials reach it.
pub fn e8_freudenthal_filter(d: &RootDatum) -> Result<FilterVerdict> {
    let c = e8_check(d)?;
    let mu = d.parse_weight_theta("θ6+θ5")?;
    let mut w = Witness::at(d, &mu, format!("m_ν = m_μ = {} with ν = θ8+θ7", c.m_nu));
    w.n_plus = Some(c.n_plus);
    w.n_minus = Some(c.n_minus);
    w.multiplicity = Some(c.m_mu);
    w.covered = Some(c.n_plus + c.n_minus);
    if c.m_mu > c.n_plus + c.n_minus {
        Ok(FilterVerdict::fail(E8_FREUDENTHAL, w))
    } else {
        Ok(FilterVerdict { passed: true, filter_name: E8_FREUDENTHAL.into(), witness: Some(w) })
    }
}

/// Level-one transitivity test on a built module: (C₁) for real type,
/// 𝒰¹v_λ = V otherwise.
pub fn module_transitive(m: &IrrepModule, t: ReprType) -> Result<bool> {
    match t {
        ReprType::Real => Ok(m.check_condition(&Condition::C1)?.holds),
        _ => Ok(m.span_u(&[m.highest_vector()], 1).dim() == m.dim),
    }
}

/// Largest dimension the level-one spans can reach: 1 + |Δ⁺| from v_λ, twice
/// that when ε(v_λ) joins in.
pub fn transitivity_dim_bound(d: &RootDatum, t: ReprType) -> u64 {
    let reach = d.num_positive() as u64 + 1;
    match t {
        ReprType::Real => 2 * reach,
        _ => reach,
    }
}

pub fn sphere_transitive(d: &RootDatum, lambda: &Weight, t: ReprType, dim_cap: u64) -> Result<bool> {
    if weyl_dim_u64(d, lambda).is_none_or(|dim| dim > transitivity_dim_bound(d, t)) {
        return Ok(false);
    }
    let m = build_module(&build_chevalley(d), lambda, dim_cap)?;
    module_transitive(&m, t)
}

/// The weight-combinatorial version of the transitivity test, valid when
/// every multiplicity is one; `None` otherwise.
pub fn combinatorial_transitive(d: &RootDatum, ws: &WeightSystem, t: ReprType) -> Result<Option<bool>> {
    if ws.dominant_mults.values().any(|&m| m > 1) {
        return Ok(None);
    }
    let lambda = &ws.highest;
    let is_root = |w: &Weight| d.root_of_weight(w).is_some();
    for (mu, _) in ws.all_weights(d, DEFAULT_WEIGHT_CAP)? {
        let reached = match t {
            ReprType::Real => mu == *lambda || mu == lambda.neg() || is_root(&lambda.sub(&mu)) || is_root(&lambda.add(&mu)),
            _ => mu == *lambda || is_root(&lambda.sub(&mu)),
        };
        if !reached {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}

/// Type and k of the semisimple part of a descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DescriptorInfo {
    pub rep: RepDescriptor,
    /// Type of the whole representation (a circle makes it complex).
    pub repr_type: ReprType,
    /// Type of the semisimple part alone.
    pub semisimple_type: ReprType,
    #[serde(serialize_with = "ser_q")]
    pub k: Q,
    pub dim: u64,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

pub fn describe(rep: &RepDescriptor) -> Result<DescriptorInfo> {
    let (d, lambda) = rep.datum_and_weight()?;
    let b = build_sorth(&d)?;
    let semisimple_type = repr_type(&d, &b, &lambda)?;
    let k = k_invariant(&d, &b, &lambda).k;
    let dim = weyl_dim_u64(&d, &lambda).ok_or_else(|| Error::DimCapExceeded { dim: "> 2^64".into(), cap: u64::MAX })?;
    let repr_type = if rep.has_circle() { ReprType::Complex } else { semisimple_type };
    Ok(DescriptorInfo { rep: rep.clone(), repr_type, semisimple_type, k, dim })
}

/// Transitivity on the unit sphere of the real representation space. A
/// circle factor makes the action complex-linear, so the test becomes
/// 𝒰¹v_λ = V whatever the type of the semisimple part.
pub fn descriptor_transitive(rep: &RepDescriptor, dim_cap: u64) -> Result<bool> {
    if rep.simple_factors().is_empty() {
        return Ok(rep.has_circle());
    }
    let info = describe(rep)?;
    let (d, lambda) = rep.datum_and_weight()?;
    let t = if rep.has_circle() { ReprType::Complex } else { info.semisimple_type };
    if info.dim > transitivity_dim_bound(&d, t) {
        return Ok(false);
    }
    if info.dim > dim_cap {
        let ws = filter_weight_system(&d, &lambda)?;
        return combinatorial_transitive(&d, &ws, t)?
            .ok_or_else(|| Error::DimCapExceeded { dim: info.dim.to_string(), cap: dim_cap });
    }
    sphere_transitive(&d, &lambda, t, dim_cap)
}

/// Outcome of one C-condition on one representation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "reason", rename_all = "snake_case")]
pub enum Flag {
    Holds,
    Fails(String),
    Undecided(String),
}

impl Flag {
    pub fn holds(&self) -> bool {
        matches!(self, Flag::Holds)
    }
}

/// C-condition flags of a self-dual representation of a simple group.
#[derive(Clone, Debug, Serialize)]
pub struct CFlags {
    pub rep: RepDescriptor,
    pub repr_type: ReprType,
    pub k: i64,
    pub dim: u64,
    pub c_half: Flag,
    pub c1: Flag,
    /// Only evaluated for quaternionic k = 3 representations failing (C₁).
    pub c1_half: Option<Flag>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CTables {
    pub rank_cap: usize,
    pub dim_cap: u64,
    pub c_half: Vec<RepDescriptor>,
    pub c1: Vec<RepDescriptor>,
    pub c1_half: Vec<RepDescriptor>,
    pub undecided: Vec<String>,
    pub entries: Vec<CFlags>,
}

impl CTables {
    pub fn flags(&self) -> BTreeMap<RepDescriptor, &CFlags> {
        self.entries.iter().map(|e| (e.rep.clone(), e)).collect()
    }
}

/// Self-dual nonzero λ of a simple type with k(λ) ≤ `k_max`, as canonical descriptors.
pub fn self_dual_reps_up_to_k(ty: LieType, k_max: i64) -> Result<Vec<(RepDescriptor, ReprType, i64)>> {
    let d = RootDatum::new(ty);
    let b = build_sorth(&d)?;
    let mut out = Vec::new();
    for k in 1..=k_max {
        for lambda in weights_with_k(&d, &b, &q(k)) {
            if d.dual(&lambda) != lambda {
                continue;
            }
            let t = repr_type(&d, &b, &lambda)?;
            out.push((RepDescriptor::new(vec![Factor::Simple { ty, labels: lambda }]).canonical(), t, k));
        }
    }
    Ok(out)
}

struct LazyModule<'a> {
    d: &'a RootDatum,
    lambda: &'a Weight,
    cap: u64,
    built: Option<IrrepModule>,
}

impl LazyModule<'_> {
    fn get(&mut self) -> Result<&IrrepModule> {
        if self.built.is_none() {
            self.built = Some(build_module(&build_chevalley(self.d), self.lambda, self.cap)?);
        }
        Ok(self.built.as_ref().expect("just built"))
    }
}

fn decide(
    lazy: &mut LazyModule,
    ws: &WeightSystem,
    dim: u64,
    dim_bound: Option<u64>,
    cond: Condition,
) -> Result<Flag> {
    let d = lazy.d;
    let levels = cond.levels().expect("extremal condition");
    if let Some(bound) = dim_bound {
        if dim > bound {
            return Ok(Flag::Fails(format!("dim {dim} exceeds the spanning bound {bound}")));
        }
    }
    if let Some(w) = weight_bound_violation(d, ws, levels)? {
        return Ok(Flag::Fails(format!("weight {}: {}", w.mu_theta.unwrap_or_default(), w.note)));
    }
    if dim > lazy.cap {
        return Ok(Flag::Undecided(format!("dim {dim} over the module cap {}", lazy.cap)));
    }
    let report = lazy.get()?.check_condition(&cond)?;
    Ok(match report.witness {
        None => Flag::Holds,
        Some(def) => Flag::Fails(format!(
            "weight {} covered {} of {}",
            fmt_theta(&d.weight_to_theta(&def.weight)),
            def.covered,
            def.mult
        )),
    })
}

/// C-flags of one self-dual representation of a simple group.
pub fn c_flags(rep: &RepDescriptor, t: ReprType, k: i64, dim_cap: u64) -> Result<CFlags> {
    let (d, lambda) = rep.datum_and_weight()?;
    let ws = filter_weight_system(&d, &lambda)?;
    let dim = ws.total_dim;
    let n_pos = d.num_positive() as u64;
    let mut lazy = LazyModule { d: &d, lambda: &lambda, cap: dim_cap, built: None };
    let c1 = if k > 3 {
        Flag::Fails("k > 3".into())
    } else {
        decide(&mut lazy, &ws, dim, Some(2 * n_pos + 2), Condition::C1)?
    };
    let c_half = match (&c1, k) {
        (Flag::Fails(_), _) => Flag::Fails("(C₁) fails".into()),
        (_, k) if k > 2 => Flag::Fails("k > 2".into()),
        _ => decide(&mut lazy, &ws, dim, Some(n_pos + 2), Condition::CHalf)?,
    };
    let c1_half = (t == ReprType::Quaternionic && k == 3 && !c1.holds())
        .then(|| decide(&mut lazy, &ws, dim, None, Condition::C1Half))
        .transpose()?;
    Ok(CFlags { rep: rep.clone(), repr_type: t, k, dim, c_half, c1, c1_half })
}

/// Scans every self-dual λ ≠ 0 with k ≤ 3 over the simple types of rank ≤ `rank_cap`.
pub fn classify_c_tables(rank_cap: usize, dim_cap: u64) -> Result<CTables> {
    let mut seen = BTreeSet::new();
    let mut entries = Vec::new();
    for ty in LieType::all_up_to(rank_cap) {
        for (rep, t, k) in self_dual_reps_up_to_k(ty, 3)? {
            if seen.insert(rep.clone()) {
                entries.push(c_flags(&rep, t, k, dim_cap)?);
            }
        }
    }
    entries.sort_by(|a, b| a.rep.cmp(&b.rep));
    let pick = |f: &dyn Fn(&CFlags) -> bool| entries.iter().filter(|e| f(e)).map(|e| e.rep.clone()).collect();
    let c_half = pick(&|e| e.c_half.holds());
    let c1 = pick(&|e| e.c1.holds() && !e.c_half.holds());
    let c1_half = pick(&|e| e.c1_half.as_ref().is_some_and(Flag::holds));
    let mut undecided = Vec::new();
    for e in &entries {
        for (name, f) in [("C1/2", Some(&e.c_half)), ("C1", Some(&e.c1)), ("C3/2", e.c1_half.as_ref())] {
            if let Some(Flag::Undecided(why)) = f {
                undecided.push(format!("{} {name}: {why}", e.rep));
            }
        }
    }
    Ok(CTables { rank_cap, dim_cap, c_half, c1, c1_half, undecided, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws_of(t: LieType, labels: &[i64]) -> (RootDatum, WeightSystem) {
        let d = RootDatum::new(t);
        let ws = filter_weight_system(&d, &Weight(labels.to_vec())).unwrap();
        (d, ws)
    }

    #[test]
    fn k_bounds() {
        assert!(k_bound_filter(ReprType::Quaternionic, &q(1)).passed);
        assert!(!k_bound_filter(ReprType::Real, &q(6)).passed);
        assert!(k_bound_filter(ReprType::Complex, &q(2)).passed);
        assert!(!k_bound_filter(ReprType::Quaternionic, &q(3)).passed);
    }

    #[test]
    fn weight_obstruction_b3() {
        let d = RootDatum::new(LieType::b(3));
        let lambda = d.parse_weight_theta("1/2(3θ1+3θ2+θ3)").unwrap();
        let mu = d.parse_weight_theta("1/2(3θ1-3θ2+θ3)").unwrap();
        let v = c2_weight_obstruction(&d, &lambda, &mu).unwrap();
        assert!(!v.passed);
        assert!(c2_weight_obstruction(&d, &lambda, &lambda).unwrap().passed);
        let not_a_weight = d.parse_weight_theta("3θ1").unwrap();
        assert!(matches!(c2_weight_obstruction(&d, &lambda, &not_a_weight), Err(Error::NotAWeight(_))));
    }

    #[test]
    fn weight_obstruction_c_n() {
        for n in 2..=5 {
            let d = RootDatum::new(LieType::c(n));
            let lambda = d.parse_weight_theta("3θ1").unwrap();
            let mu = d.parse_weight_theta("-3θ2").unwrap();
            assert!(!c2_weight_obstruction(&d, &lambda, &mu).unwrap().passed, "C{n}");
        }
    }

    #[test]
    fn doubled_highest_root() {
        let d = RootDatum::new(LieType::b(4));
        let b = build_sorth(&d).unwrap();
        let v = special_b_weight_filter(&d, &b, &Weight(vec![0, 2, 0, 0])).unwrap();
        assert!(!v.passed);
        assert_eq!(v.filter_name, SPECIAL_B_WEIGHT);
        // the adjoint of A1 has a one-element B
        let d = RootDatum::new(LieType::a(1));
        let b = build_sorth(&d).unwrap();
        assert!(special_b_weight_filter(&d, &b, &Weight(vec![2])).unwrap().passed);
    }

    #[test]
    fn skew_b_weight_cases() {
        for (t, l) in [(LieType::a(3), vec![1, 1, 1]), (LieType::b(4), vec![0, 1, 0, 1]), (LieType::f4(), vec![1, 0, 0, 1])] {
            let d = RootDatum::new(t);
            let b = build_sorth(&d).unwrap();
            let v = special_b_weight_filter(&d, &b, &Weight(l)).unwrap();
            assert!(!v.passed, "{t}");
            assert_eq!(v.filter_name, SKEW_B_WEIGHT);
        }
    }

    #[test]
    fn orthogonal_weight_on_a2_and_g2() {
        let (d, ws) = ws_of(LieType::a(2), &[2, 2]);
        let b = build_sorth(&d).unwrap();
        assert!(special_b_weight_filter_in(&d, &b, &ws).unwrap().passed);
        assert!(!orthogonal_weight_filter(&d, &b, &ws).unwrap().passed);
        let mu = d.parse_weight_theta("-θ1+2θ2-θ3").unwrap();
        assert!(!c2_weight_obstruction_in(&d, &ws, &mu).unwrap().passed);
        let (d, ws) = ws_of(LieType::g2(), &[0, 2]);
        let b = build_sorth(&d).unwrap();
        assert!(!orthogonal_weight_filter(&d, &b, &ws).unwrap().passed);
        let alpha1 = d.root_to_weight(&d.simple_root(0));
        assert!(!c2_weight_obstruction_in(&d, &ws, &alpha1).unwrap().passed);
    }

    #[test]
    fn zero_weight_count_examples() {
        for n in 4..=7 {
            let mut l = vec![0; n];
            l[1] = 1;
            l[n - 2] = 1;
            let (d, ws) = ws_of(LieType::a(n), &l);
            let v = zero_weight_count_filter(&d, &ws);
            assert!(!v.passed);
            let w = v.witness.unwrap();
            assert_eq!(w.multiplicity, Some(((n * n - n - 2) / 2) as u64));
            assert_eq!(w.n_minus, Some(2));
        }
        for n in 5..=7 {
            let (d, ws) = ws_of(LieType::c(n), &Weight::fundamental(n, 3).0);
            let w = zero_weight_count_filter(&d, &ws).witness.unwrap();
            assert_eq!(w.multiplicity, Some((n * (n - 3) / 2) as u64));
            assert_eq!(w.n_minus, Some(3));
        }
        let (d, ws) = ws_of(LieType::b(4), &[1, 0, 0, 0]);
        assert!(zero_weight_count_filter(&d, &ws).passed);
    }

    #[test]
    fn c2_from_intermediate_weights() {
        let d = RootDatum::new(LieType::g2());
        let m = build_module(&build_chevalley(&d), &Weight(vec![2, 0]), 4000).unwrap();
        let v = c2_mu_filter(&m, &Weight::zero(2)).unwrap();
        assert!(!v.passed);
        let w = v.witness.unwrap();
        assert_eq!((w.covered, w.multiplicity), (Some(1), Some(2)));
        let d = RootDatum::new(LieType::b(3));
        let m = build_module(&build_chevalley(&d), &Weight(vec![0, 0, 1]), 4000).unwrap();
        assert!(c2_mu_filter(&m, &Weight(vec![0, 0, 1])).unwrap().passed);
        for n in [4, 5] {
            let d = RootDatum::new(LieType::d(n));
            let mut l = vec![0; n];
            if n == 4 {
                l[2] = 1;
                l[3] = 1;
            } else {
                l[2] = 1;
            }
            let m = build_module(&build_chevalley(&d), &Weight(l), 4000).unwrap();
            let mu = d.parse_weight_theta("θ1").unwrap();
            assert!(!c2_mu_filter(&m, &mu).unwrap().passed, "D{n}");
        }
    }

    #[test]
    fn transitivity() {
        let d = RootDatum::new(LieType::b(3));
        assert!(sphere_transitive(&d, &Weight(vec![0, 0, 1]), ReprType::Real, 4000).unwrap());
        let d = RootDatum::new(LieType::b(4));
        assert!(sphere_transitive(&d, &Weight(vec![0, 0, 0, 1]), ReprType::Real, 4000).unwrap());
        for n in 3..=5 {
            let d = RootDatum::new(LieType::c(n));
            assert!(!sphere_transitive(&d, &Weight::fundamental(n, 1), ReprType::Real, 4000).unwrap());
        }
        let d = RootDatum::new(LieType::a(3));
        assert!(sphere_transitive(&d, &Weight(vec![1, 0, 0]), ReprType::Complex, 4000).unwrap());
        assert!(descriptor_transitive(&"S1".parse().unwrap(), 100).unwrap());
        assert!(descriptor_transitive(&"S1*C3:[1,0,0]".parse().unwrap(), 100).unwrap());
        assert!(!descriptor_transitive(&"S1*B3:[0,0,1]".parse().unwrap(), 100).unwrap());
        assert!(descriptor_transitive(&"A1:[1]*C3:[1,0,0]".parse().unwrap(), 100).unwrap());
    }

    #[test]
    fn descriptor_types() {
        let info = describe(&"A1:[1]*C3:[1,0,0]".parse().unwrap()).unwrap();
        assert_eq!((info.repr_type, info.k.clone()), (ReprType::Real, q(2)));
        let info = describe(&"S1*B4:[0,0,0,1]".parse().unwrap()).unwrap();
        assert_eq!((info.repr_type, info.semisimple_type), (ReprType::Complex, ReprType::Real));
        let info = describe(&"A2:[1,0]*C2:[1,0]".parse().unwrap()).unwrap();
        assert_eq!(info.repr_type, ReprType::Complex);
    }
}
