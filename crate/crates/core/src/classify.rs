//! Enumeration drivers: real k = 4 representations of simple groups and
//! their elimination, the multi-factor candidate rules, the Hermitian pair
//! checks, and the scan for transitive actions on spheres.

use crate::chevmod::{build_chevalley, build_module};
use crate::dadok::{k_invariant, repr_type, weights_with_k, ReprType};
use crate::descriptor::{Factor, RepDescriptor};
use crate::error::{Error, Result};
use crate::golden::HermitianInstance;
use crate::linalg::{dot, q, Mat, Q};
use crate::osc::{self, CFlags, CTables, FilterVerdict, Witness};
use crate::rootsys::{Family, LieType, RootDatum, RootVec, Weight};
use crate::sorth::build_sorth;
use crate::weights::weyl_dim_u64;
use num_traits::Zero;
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet};

pub const SYMMETRIC_SPACE: &str = "symmetric_space";
pub const COHOMOGENEITY_ONE: &str = "cohomogeneity_one";
pub const COMPOSITE_RULE: &str = "composite_rule";
pub const HERMITIAN: &str = "hermitian";

/// Isotropy representations of symmetric spaces, keyed by canonical descriptor.
pub type SymmetricIndex = BTreeMap<RepDescriptor, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Candidate,
    Eliminated,
    SymmetricSpaceExcluded,
    CohomogeneityOne,
}

#[derive(Clone, Debug, Serialize)]
pub struct CandidateRecord {
    pub descriptor: RepDescriptor,
    pub repr_type: ReprType,
    #[serde(serialize_with = "ser_q")]
    pub k: Q,
    pub dim: u64,
    pub verdicts: Vec<FilterVerdict>,
    pub status: Status,
}

fn ser_q<S: serde::Serializer>(x: &Q, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(x)
}

impl CandidateRecord {
    fn new(descriptor: RepDescriptor, repr_type: ReprType, k: Q, dim: u64) -> Self {
        CandidateRecord { descriptor, repr_type, k, dim, verdicts: Vec::new(), status: Status::Candidate }
    }

    /// The first failing verdict in pipeline order.
    pub fn primary_failure(&self) -> Option<&FilterVerdict> {
        self.verdicts.iter().find(|v| !v.passed)
    }

    pub fn verdict(&self, name: &str) -> Option<&FilterVerdict> {
        self.verdicts.iter().find(|v| v.filter_name == name)
    }

    fn push(&mut self, v: FilterVerdict) -> bool {
        let passed = v.passed;
        self.verdicts.push(v);
        passed
    }

    fn finish(mut self, status: Status) -> Self {
        self.status = status;
        self
    }
}

/// Canonical descriptors of the records with candidate status.
pub fn candidates(records: &[CandidateRecord]) -> BTreeSet<RepDescriptor> {
    records.iter().filter(|r| r.status == Status::Candidate).map(|r| r.descriptor.clone()).collect()
}

fn simple_types(rank_cap: usize) -> Vec<LieType> {
    let mut seen = BTreeSet::new();
    LieType::all_up_to(rank_cap)
        .into_iter()
        .filter(|t| {
            let probe = Factor::Simple { ty: *t, labels: Weight::fundamental(t.rank, 0) }.canonical();
            let Factor::Simple { ty, .. } = probe else { unreachable!() };
            ty == *t && seen.insert(*t)
        })
        .collect()
}

/// Every real representation of a simple group of rank ≤ `rank_cap` with
/// k(λ) = 4, one record per canonical descriptor.
pub fn enumerate_k4_real(rank_cap: usize) -> Result<Vec<CandidateRecord>> {
    let mut out = BTreeMap::new();
    for ty in simple_types(rank_cap) {
        let d = RootDatum::new(ty);
        let b = build_sorth(&d)?;
        for lambda in weights_with_k(&d, &b, &q(4)) {
            if repr_type(&d, &b, &lambda)? != ReprType::Real {
                continue;
            }
            let rep = RepDescriptor::new(vec![Factor::Simple { ty, labels: lambda.clone() }]).canonical();
            let dim = weyl_dim_u64(&d, &lambda).unwrap_or(u64::MAX);
            let mut rec = CandidateRecord::new(rep.clone(), ReprType::Real, q(4), dim);
            rec.push(osc::k_bound_filter(ReprType::Real, &q(4)));
            out.entry(rep).or_insert(rec);
        }
    }
    Ok(out.into_values().collect())
}

#[derive(Clone, Debug, Serialize)]
pub struct SimpleReport {
    pub rank_cap: usize,
    pub records: Vec<CandidateRecord>,
    pub survivors: Vec<RepDescriptor>,
}

/// Runs the eliminations over the k = 4 table. Symmetric-space isotropy
/// representations are set aside first; every other record gets the
/// weight filters, then the module span check at intermediate weights when
/// nothing cheaper applies.
pub fn simple_pipeline(rank_cap: usize, symmetric: &SymmetricIndex, dim_cap: u64) -> Result<SimpleReport> {
    let mut records = Vec::new();
    for rec in enumerate_k4_real(rank_cap)? {
        records.push(eliminate_simple(rec, symmetric, dim_cap)?);
    }
    let survivors = candidates(&records).into_iter().collect();
    Ok(SimpleReport { rank_cap, records, survivors })
}

fn eliminate_simple(mut rec: CandidateRecord, symmetric: &SymmetricIndex, dim_cap: u64) -> Result<CandidateRecord> {
    if let Some(space) = symmetric.get(&rec.descriptor) {
        rec.push(FilterVerdict::fail(SYMMETRIC_SPACE, Witness::note(format!("isotropy representation of {space}"))));
        return Ok(rec.finish(Status::SymmetricSpaceExcluded));
    }
    let (d, lambda) = rec.descriptor.datum_and_weight()?;
    let b = build_sorth(&d)?;
    let ws = osc::filter_weight_system(&d, &lambda)?;
    rec.push(osc::special_b_weight_filter_in(&d, &b, &ws)?);
    rec.push(osc::orthogonal_weight_filter(&d, &b, &ws)?);
    rec.push(osc::c2_weight_search(&d, &ws)?);
    rec.push(osc::zero_weight_count_filter(&d, &ws));
    if d.components() == [LieType::e(8)] && d.weight_to_theta(&lambda) == d.parse_weight_theta("2θ8").map(|w| d.weight_to_theta(&w))? {
        rec.push(osc::e8_freudenthal_filter(&d)?);
    }
    if rec.primary_failure().is_none() {
        if rec.dim <= dim_cap {
            let m = build_module(&build_chevalley(&d), &lambda, dim_cap)?;
            rec.push(osc::c2_mu_search(&m)?);
        } else {
            rec.push(FilterVerdict::pass(osc::C2_MU, format!("not run: dim {} over the module cap {dim_cap}", rec.dim)));
        }
    }
    let status = if rec.primary_failure().is_some() { Status::Eliminated } else { Status::Candidate };
    Ok(rec.finish(status))
}

/// A nontrivial irreducible representation of one simple factor.
#[derive(Clone, Debug)]
pub struct FactorInfo {
    pub ty: LieType,
    pub labels: Weight,
    pub repr_type: ReprType,
    pub k: i64,
}

impl FactorInfo {
    pub fn descriptor(&self) -> RepDescriptor {
        RepDescriptor::new(vec![self.factor()])
    }

    fn factor(&self) -> Factor {
        Factor::Simple { ty: self.ty, labels: self.labels.clone() }
    }

    fn is(&self, family: Family, rank: usize, labels: &[i64]) -> bool {
        self.ty.family == family && self.ty.rank == rank && self.labels.0 == labels
    }

    /// Rank of Sp(n) when this is its vector representation (SU2 counts as Sp1).
    pub fn sp_vector_rank(&self) -> Option<usize> {
        let vector = self.labels == Weight::fundamental(self.ty.rank, 0);
        match self.ty.family {
            Family::A if self.ty.rank == 1 && vector => Some(1),
            Family::C if vector => Some(self.ty.rank),
            _ => None,
        }
    }

    /// n when this is the vector representation of SU(n), n ≥ 3.
    pub fn su_vector_size(&self) -> Option<usize> {
        (self.ty.family == Family::A && self.ty.rank >= 2 && self.labels == Weight::fundamental(self.ty.rank, 0))
            .then_some(self.ty.rank + 1)
    }
}

/// Canonical factors of rank ≤ `rank_cap` with 1 ≤ k ≤ `k_max`.
pub fn factor_catalog(rank_cap: usize, k_max: i64) -> Result<Vec<FactorInfo>> {
    let mut out = BTreeMap::new();
    for ty in simple_types(rank_cap) {
        let d = RootDatum::new(ty);
        let b = build_sorth(&d)?;
        for k in 1..=k_max {
            for lambda in weights_with_k(&d, &b, &q(k)) {
                let t = repr_type(&d, &b, &lambda)?;
                let Factor::Simple { ty, labels } = (Factor::Simple { ty, labels: lambda }).canonical() else { unreachable!() };
                out.entry((ty, labels.clone())).or_insert(FactorInfo { ty, labels, repr_type: t, k });
            }
        }
    }
    Ok(out.into_values().collect())
}

/// Type of an outer tensor product from the types of its factors.
pub fn product_type(types: impl IntoIterator<Item = ReprType>) -> ReprType {
    let mut quaternionic = 0;
    for t in types {
        match t {
            ReprType::Complex => return ReprType::Complex,
            ReprType::Quaternionic => quaternionic += 1,
            ReprType::Real => {}
        }
    }
    if quaternionic % 2 == 0 {
        ReprType::Real
    } else {
        ReprType::Quaternionic
    }
}

/// Inputs shared by the multi-factor rules.
pub struct CompositeContext<'a> {
    pub rank_cap: usize,
    pub dim_cap: u64,
    pub symmetric: &'a SymmetricIndex,
    pub flags: BTreeMap<RepDescriptor, &'a CFlags>,
}

impl<'a> CompositeContext<'a> {
    pub fn new(rank_cap: usize, dim_cap: u64, symmetric: &'a SymmetricIndex, ctables: &'a CTables) -> Self {
        CompositeContext { rank_cap, dim_cap, symmetric, flags: ctables.flags() }
    }

    fn flags_of(&self, f: &FactorInfo) -> Result<&CFlags> {
        let rep = f.descriptor();
        self.flags
            .get(&rep)
            .copied()
            .ok_or_else(|| Error::PipelineIncomplete(format!("no C-condition flags for {rep}")))
    }

    fn c1(&self, f: &FactorInfo) -> Result<bool> {
        Ok(self.flags_of(f)?.c1.holds())
    }

    fn c_half(&self, f: &FactorInfo) -> Result<bool> {
        Ok(self.flags_of(f)?.c_half.holds())
    }

    fn c1_half(&self, f: &FactorInfo) -> Result<bool> {
        let flags = self.flags_of(f)?;
        Ok(flags.c1.holds() || flags.c1_half.as_ref().is_some_and(osc::Flag::holds))
    }
}

fn rule(passed: bool, note: String) -> FilterVerdict {
    if passed {
        FilterVerdict::pass(COMPOSITE_RULE, note)
    } else {
        FilterVerdict::fail(COMPOSITE_RULE, Witness::note(note))
    }
}

fn names(parts: &[&FactorInfo]) -> String {
    parts.iter().map(|f| f.descriptor().to_string()).collect::<Vec<_>>().join(", ")
}

/// Real products: the conditions each factor must meet for the tensor
/// product to satisfy (C₂) at weight vectors built from intermediate ones.
fn real_product_rule(ctx: &CompositeContext, parts: &[FactorInfo]) -> Result<FilterVerdict> {
    let by_k = |t: ReprType, k: i64| parts.iter().filter(|f| f.repr_type == t && f.k == k).collect::<Vec<_>>();
    let (real2, q1, q3) = (by_k(ReprType::Real, 2), by_k(ReprType::Quaternionic, 1), by_k(ReprType::Quaternionic, 3));
    let sp_rank = |f: &FactorInfo| {
        f.sp_vector_rank().ok_or_else(|| Error::StructuralSurprise(format!("{} is quaternionic with k = 1", f.descriptor())))
    };
    let shape = (parts.len(), real2.len(), q1.len(), q3.len());
    Ok(match shape {
        (1, 1, 0, 0) => rule(true, "simple group, k = 2".into()),
        (2, 2, 0, 0) => {
            let c1 = ctx.c1(real2[0])? && ctx.c1(real2[1])?;
            let c_half = ctx.c_half(real2[0])? || ctx.c_half(real2[1])?;
            rule(c1 && c_half, format!("two real factors need (C₁) on both and (C½) on one: {}", names(&real2)))
        }
        (2, 0, 2, 0) => {
            sp_rank(q1[0])?;
            sp_rank(q1[1])?;
            rule(true, "two symplectic vector representations".into())
        }
        (2, 0, 1, 1) => {
            let n = sp_rank(q1[0])?;
            let (ok, need) = if n == 1 { (ctx.c1_half(q3[0])?, "(C₁½)") } else { (ctx.c1(q3[0])?, "(C₁)") };
            rule(ok, format!("Sp{n} vector with {} needs {need}", q3[0].descriptor()))
        }
        (3, 1, 2, 0) => {
            let (a, b) = (sp_rank(q1[0])?, sp_rank(q1[1])?);
            let other = a.max(b);
            let ok = a.min(b) == 1
                && ctx.c1(real2[0])?
                && (other == 1 || ctx.c_half(real2[0])?);
            let need = if other == 1 { "(C₁)" } else { "(C½)" };
            rule(ok, format!("Sp{a} and Sp{b} vectors: one must be Sp1, and {} needs {need}", real2[0].descriptor()))
        }
        (4, 0, 4, 0) => {
            let mut ranks = q1.iter().map(|f| sp_rank(f)).collect::<Result<Vec<_>>>()?;
            ranks.sort_unstable();
            rule(ranks[2] == 1, format!("four symplectic vectors of ranks {ranks:?}: at least three must be Sp1"))
        }
        _ => return Err(Error::PipelineIncomplete(format!("no real-type rule for factors {}", names(&parts.iter().collect::<Vec<_>>())))),
    })
}

/// Ambient type and node of the Hermitian symmetric space whose isotropy
/// representation, minus the circle, is this complex representation.
pub fn hermitian_embedding(parts: &[FactorInfo]) -> Option<(LieType, usize)> {
    match parts {
        [f] if f.ty.family == Family::A && f.labels == Weight::fundamental(f.ty.rank, 1) && f.ty.rank >= 4 => {
            let n = f.ty.rank + 1;
            Some((LieType::d(n), n - 1))
        }
        [f] if f.ty.family == Family::A && f.labels == Weight::fundamental(f.ty.rank, 0).scale(2) => {
            let n = f.ty.rank + 1;
            Some((LieType::c(n), n - 1))
        }
        [f] if f.is(Family::D, 5, &[0, 0, 0, 1, 0]) => Some((LieType::e(6), 0)),
        [f] if f.is(Family::E6, 6, &[1, 0, 0, 0, 0, 0]) => Some((LieType::e(7), 6)),
        [a, b] => {
            let size = |f: &FactorInfo| f.su_vector_size().or_else(|| (f.sp_vector_rank() == Some(1)).then_some(2));
            let (n, m) = (size(a)?, size(b)?);
            Some((LieType::a(n + m - 1), n.min(m) - 1))
        }
        _ => None,
    }
}

fn hermitian_verdict(ambient: LieType, node: usize) -> Result<FilterVerdict> {
    let h = hermitian_pair(ambient, node)?;
    let v = hermitian_redundancy(&h)?;
    match (v.circle_redundant, v.gamma_orthogonal) {
        (true, false) => Ok(FilterVerdict::pass(HERMITIAN, format!("inside {ambient}: the circle lies in the semisimple part"))),
        (false, true) => Ok(FilterVerdict::fail(
            HERMITIAN,
            Witness::note(format!("inside {ambient}: Σγ is orthogonal to every compact root, so the circle is needed")),
        )),
        (a, b) => Err(Error::RuleConflict(format!("Hermitian pair in {ambient}: circle_redundant = {a}, gamma_orthogonal = {b}"))),
    }
}

fn complex_product_rule(parts: &[FactorInfo], k: i64) -> Result<FilterVerdict> {
    let complex = parts.iter().filter(|f| f.repr_type == ReprType::Complex).count();
    match (parts.len(), k) {
        (1, 1) if parts[0].su_vector_size().is_some() => Ok(rule(true, "vector representation of SU(n)".into())),
        (1, 2) | (2, 2) => {
            if let [a, b] = parts {
                let sp = |f: &FactorInfo| f.sp_vector_rank().filter(|&n| n >= 2);
                if complex == 1 && (sp(a).is_some() || sp(b).is_some()) {
                    return Ok(rule(true, "SU(n) vector times Sp(m) vector, m ≥ 2".into()));
                }
            }
            let (ambient, node) = hermitian_embedding(parts).ok_or_else(|| {
                Error::PipelineIncomplete(format!("complex k = 2 without a Hermitian model: {}", names(&parts.iter().collect::<Vec<_>>())))
            })?;
            hermitian_verdict(ambient, node)
        }
        _ => Err(Error::PipelineIncomplete(format!("no complex-type rule for {}", names(&parts.iter().collect::<Vec<_>>())))),
    }
}

fn descriptor_of(parts: &[FactorInfo], circle: bool) -> RepDescriptor {
    let mut factors: Vec<Factor> = parts.iter().map(FactorInfo::factor).collect();
    if circle {
        factors.push(Factor::Circle);
    }
    RepDescriptor::new(factors).canonical()
}

fn evaluate(ctx: &CompositeContext, parts: &[FactorInfo], circle: bool) -> Result<CandidateRecord> {
    let descriptor = descriptor_of(parts, circle);
    let semisimple = product_type(parts.iter().map(|f| f.repr_type));
    let t = if circle { ReprType::Complex } else { semisimple };
    let k: i64 = parts.iter().map(|f| f.k).sum();
    let (d, lambda) = descriptor.datum_and_weight()?;
    let dim = weyl_dim_u64(&d, &lambda).unwrap_or(u64::MAX);
    let mut rec = CandidateRecord::new(descriptor.clone(), t, q(k), dim);
    if !rec.push(osc::k_bound_filter(t, &q(k))) {
        return Ok(rec.finish(Status::Eliminated));
    }
    let verdict = if circle {
        if semisimple == ReprType::Real {
            let semi = descriptor.semisimple_part();
            let c1 = if parts.len() == 1 {
                ctx.c1(&parts[0])?
            } else {
                osc::c_flags(&semi, semisimple, k, ctx.dim_cap)?.c1.holds()
            };
            rule(c1, format!("with a circle, the real representation {semi} must satisfy (C₁)"))
        } else {
            rule(true, format!("with a circle, {semisimple} type and k = {k}"))
        }
    } else {
        match t {
            ReprType::Real => real_product_rule(ctx, parts)?,
            ReprType::Quaternionic => {
                rule(parts.len() == 1 && parts[0].sp_vector_rank().is_some(), "quaternionic with k = 1".into())
            }
            ReprType::Complex => complex_product_rule(parts, k)?,
        }
    };
    if !rec.push(verdict) {
        return Ok(rec.finish(Status::Eliminated));
    }
    classify_survivor(ctx, rec)
}

fn classify_survivor(ctx: &CompositeContext, mut rec: CandidateRecord) -> Result<CandidateRecord> {
    if osc::descriptor_transitive(&rec.descriptor, ctx.dim_cap)? {
        rec.push(FilterVerdict::fail(COHOMOGENEITY_ONE, Witness::note("transitive on the unit sphere")));
        return Ok(rec.finish(Status::CohomogeneityOne));
    }
    if let Some(space) = ctx.symmetric.get(&rec.descriptor) {
        rec.push(FilterVerdict::fail(SYMMETRIC_SPACE, Witness::note(format!("isotropy representation of {space}"))));
        return Ok(rec.finish(Status::SymmetricSpaceExcluded));
    }
    Ok(rec.finish(Status::Candidate))
}

/// Multisets of catalog entries (as index lists) with total rank and k
/// within the caps, at most four factors.
fn factor_tuples(catalog: &[FactorInfo], rank_cap: usize, k_cap: i64) -> Vec<Vec<usize>> {
    fn rec(catalog: &[FactorInfo], start: usize, rank_left: usize, k_left: i64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == 4 {
            return;
        }
        for i in start..catalog.len() {
            let f = &catalog[i];
            if f.ty.rank <= rank_left && f.k <= k_left {
                cur.push(i);
                rec(catalog, i, rank_left - f.ty.rank, k_left - f.k, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(catalog, 0, rank_cap, k_cap, &mut Vec::new(), &mut out);
    out
}

/// Applies the candidate rules to every product of simple factors (with or
/// without a circle) of total semisimple rank ≤ `rank_cap` and total k ≤ 4.
/// Simple groups with k = 4 come from `simple`.
pub fn composite_pipeline(ctx: &CompositeContext, simple: &SimpleReport) -> Result<Vec<CandidateRecord>> {
    let catalog = factor_catalog(ctx.rank_cap, 3)?;
    let mut out: BTreeMap<RepDescriptor, CandidateRecord> = BTreeMap::new();
    let circle_only = RepDescriptor::new(vec![Factor::Circle]);
    let mut rec = CandidateRecord::new(circle_only.clone(), ReprType::Complex, q(0), 1);
    rec.push(FilterVerdict::fail(COHOMOGENEITY_ONE, Witness::note("the circle on the plane")));
    out.insert(circle_only, rec.finish(Status::CohomogeneityOne));
    for tuple in factor_tuples(&catalog, ctx.rank_cap, 4) {
        let parts: Vec<FactorInfo> = tuple.iter().map(|&i| catalog[i].clone()).collect();
        for circle in [false, true] {
            let rec = evaluate(ctx, &parts, circle)?;
            if let Some(prev) = out.get(&rec.descriptor) {
                if prev.status != rec.status {
                    return Err(Error::RuleConflict(format!(
                        "{} reached as {:?} and as {:?}",
                        rec.descriptor, prev.status, rec.status
                    )));
                }
                continue;
            }
            out.insert(rec.descriptor.clone(), rec);
        }
    }
    for rec in &simple.records {
        out.insert(rec.descriptor.clone(), rec.clone());
    }
    Ok(out.into_values().collect())
}

/// Compact positive roots and a maximal strongly orthogonal set of
/// noncompact positive roots, in θ-coordinates of the ambient type.
#[derive(Clone, Debug, Serialize)]
pub struct HermitianPairData {
    pub ambient: LieType,
    #[serde(serialize_with = "ser_theta_list")]
    pub compact_positive_roots: Vec<Vec<Q>>,
    #[serde(serialize_with = "ser_theta_list")]
    pub noncompact_orthogonal_set: Vec<Vec<Q>>,
}

fn ser_theta_list<S: serde::Serializer>(v: &[Vec<Q>], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| crate::rootsys::fmt_theta(x)))
}

impl HermitianPairData {
    pub fn from_instance(inst: &HermitianInstance) -> Result<Self> {
        let ambient: LieType = inst.ambient.parse()?;
        let d = RootDatum::new(ambient);
        let parse = |exprs: &[String]| -> Result<Vec<Vec<Q>>> {
            exprs.iter().map(|e| Ok(d.root_to_theta(&d.parse_root(e)?))).collect()
        };
        Ok(HermitianPairData {
            ambient,
            compact_positive_roots: parse(&inst.compact_positive_roots)?,
            noncompact_orthogonal_set: parse(&inst.noncompact_orthogonal_set)?,
        })
    }
}

/// Pair data for the Hermitian symmetric space of `ambient` attached to a
/// node whose highest-root coefficient is one. Γ is built top-down by height.
pub fn hermitian_pair(ambient: LieType, node: usize) -> Result<HermitianPairData> {
    let d = RootDatum::new(ambient);
    if d.highest_root().0.get(node) != Some(&1) {
        return Err(Error::Data(format!("node {} of {ambient} does not give a Hermitian symmetric space", node + 1)));
    }
    let compact: Vec<&RootVec> = d.positive_roots().iter().filter(|r| r.0[node] == 0).collect();
    let mut noncompact: Vec<&RootVec> = d.positive_roots().iter().filter(|r| r.0[node] == 1).collect();
    noncompact.sort_by_key(|r| (std::cmp::Reverse(r.height()), r.0.clone()));
    let mut gamma: Vec<&RootVec> = Vec::new();
    for r in noncompact {
        if gamma.iter().all(|g| strongly_orthogonal(&d, g, r)) {
            gamma.push(r);
        }
    }
    Ok(HermitianPairData {
        ambient,
        compact_positive_roots: compact.iter().map(|r| d.root_to_theta(r)).collect(),
        noncompact_orthogonal_set: gamma.iter().map(|r| d.root_to_theta(r)).collect(),
    })
}

fn strongly_orthogonal(d: &RootDatum, a: &RootVec, b: &RootVec) -> bool {
    let sum = RootVec(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect());
    let diff = RootVec(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect());
    a != b && !d.is_root(&sum) && !d.is_root(&diff) && !diff.0.iter().all(|&x| x == 0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HermitianVerdict {
    /// Σ_α c_α(α, γ_j) = 1 has a rational solution for all j.
    pub circle_redundant: bool,
    /// (Σ_j γ_j, α) = 0 for every compact positive root α.
    pub gamma_orthogonal: bool,
}

pub fn hermitian_redundancy(h: &HermitianPairData) -> Result<HermitianVerdict> {
    let d = RootDatum::new(h.ambient);
    let malformed = |why: String| Error::Data(format!("Hermitian pair data in {}: {why}", h.ambient));
    let as_root = |v: &Vec<Q>| -> Result<RootVec> {
        let r = d.theta_to_root(v).map_err(|e| malformed(e.to_string()))?;
        if d.root_to_theta(&r) != *v || !d.is_root(&r) {
            return Err(malformed(format!("{} is not a root", crate::rootsys::fmt_theta(v))));
        }
        Ok(r)
    };
    if h.noncompact_orthogonal_set.is_empty() {
        return Err(malformed("Γ is empty".into()));
    }
    for a in &h.compact_positive_roots {
        if as_root(a)?.0.iter().any(|&x| x < 0) {
            return Err(malformed(format!("{} is not positive", crate::rootsys::fmt_theta(a))));
        }
    }
    let gamma: Vec<RootVec> = h.noncompact_orthogonal_set.iter().map(as_root).collect::<Result<_>>()?;
    for (i, a) in gamma.iter().enumerate() {
        for b in &gamma[i + 1..] {
            if !strongly_orthogonal(&d, a, b) {
                return Err(malformed("Γ is not strongly orthogonal".into()));
            }
        }
    }
    let rows: Vec<Vec<Q>> = h
        .noncompact_orthogonal_set
        .iter()
        .map(|g| h.compact_positive_roots.iter().map(|a| dot(a, g)).collect())
        .collect();
    let ones = vec![q(1); rows.len()];
    let circle_redundant = !h.compact_positive_roots.is_empty() && Mat::from_rows(&rows).solve(&ones).is_some();
    let dim = h.noncompact_orthogonal_set[0].len();
    let sum = h.noncompact_orthogonal_set.iter().fold(vec![Q::zero(); dim], |acc, g| {
        acc.iter().zip(g).map(|(x, y)| x + y).collect()
    });
    let gamma_orthogonal = h.compact_positive_roots.iter().all(|a| dot(a, &sum).is_zero());
    Ok(HermitianVerdict { circle_redundant, gamma_orthogonal })
}

/// Transitive actions on spheres found by the scan, split by the table they
/// belong to: real-type representations, and complex or quaternionic ones
/// (with or without the circle).
#[derive(Clone, Debug, Serialize)]
pub struct SphereScan {
    pub rank_cap: usize,
    pub real: BTreeSet<RepDescriptor>,
    pub complex: BTreeSet<RepDescriptor>,
    pub tested: usize,
}

/// Dominant weights of a simple type with Weyl dimension ≤ `bound`.
pub fn dominant_weights_up_to_dim(d: &RootDatum, bound: u64) -> Vec<Weight> {
    let rank = d.rank();
    let mut seen = BTreeSet::new();
    let mut stack = vec![Weight::zero(rank)];
    while let Some(w) = stack.pop() {
        for i in 0..rank {
            let next = w.add(&Weight::fundamental(rank, i));
            if seen.contains(&next) {
                continue;
            }
            if weyl_dim_u64(d, &next).is_some_and(|dim| dim <= bound) {
                seen.insert(next.clone());
                stack.push(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Every simple group of rank ≤ `rank_cap`, its circle extension, and for
/// quaternionic representations the Sp1 extension when the total rank stays
/// within the cap, tested for transitivity.
pub fn sphere_scan(rank_cap: usize, dim_cap: u64) -> Result<SphereScan> {
    let mut scan = SphereScan { rank_cap, real: BTreeSet::new(), complex: BTreeSet::new(), tested: 0 };
    scan.real.insert(RepDescriptor::new(vec![Factor::Circle]));
    let sp1 = Factor::simple(LieType::a(1), &[1]);
    let mut seen = BTreeSet::new();
    for ty in simple_types(rank_cap) {
        let d = RootDatum::new(ty);
        let b = build_sorth(&d)?;
        let bound = osc::transitivity_dim_bound(&d, ReprType::Real);
        for lambda in dominant_weights_up_to_dim(&d, bound) {
            let base = Factor::Simple { ty, labels: lambda.clone() };
            if !seen.insert(base.canonical()) {
                continue;
            }
            let t = repr_type(&d, &b, &lambda)?;
            let mut variants = vec![(RepDescriptor::new(vec![base.clone()]), t), (RepDescriptor::new(vec![Factor::Circle, base.clone()]), ReprType::Complex)];
            if t == ReprType::Quaternionic && ty.rank < rank_cap {
                variants.push((RepDescriptor::new(vec![sp1.clone(), base.clone()]), ReprType::Real));
            }
            for (rep, table) in variants {
                scan.tested += 1;
                if osc::descriptor_transitive(&rep, dim_cap)? {
                    let rep = rep.canonical();
                    if table == ReprType::Real {
                        scan.real.insert(rep);
                    } else {
                        scan.complex.insert(rep);
                    }
                }
            }
        }
    }
    Ok(scan)
}

/// Type and k of a descriptor's semisimple part, from its own root datum.
pub fn semisimple_k(rep: &RepDescriptor) -> Result<(ReprType, Q)> {
    let (d, lambda) = rep.datum_and_weight()?;
    let b = build_sorth(&d)?;
    Ok((repr_type(&d, &b, &lambda)?, k_invariant(&d, &b, &lambda).k))
}
