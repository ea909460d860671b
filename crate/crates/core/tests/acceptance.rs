//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Three known deviations print FAIL with their explanation but do not fail
//! the run: the E7 decomposition count (5, not 17) and the B4:[1,0,0,1]
//! elimination, which shows up in both the simple survivor set and the
//! composite candidate set. Any other failure exits nonzero.

mod common;

use common::*;
use lieosc::chevmod::verify_prop_d;
use lieosc::dadok::{k_invariant, ReprType};
use lieosc::golden::DataDir;
use lieosc::linalg::Q;
use lieosc::osc::{self, describe};
use lieosc::sorth::build_sorth;
use lieosc::verify::{self, TableCheck};
use lieosc::weights::{decomposition_count, weight_system, weyl_dim_u64};
use lieosc::{LieType, RepDescriptor, RootDatum, Weight};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

const RANK_CAP: usize = 8;
const DIM_CAP: u64 = 4000;

/// Exact multiplicity of θ8+θ7 in the E8 module of highest weight 2θ8.
const E8_M_NU: u64 = 7;

const B4_SPIN_VECTOR: &str = "B4:[1,0,0,1]";

struct Outcome {
    pass: bool,
    detail: String,
    /// Set when the failure is exactly a documented deviation.
    documented: Option<&'static str>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into(), documented: None }
    }
}

type Check = fn(&DataDir) -> Result<Outcome, String>;

fn from_table(check: TableCheck) -> Outcome {
    if check.passed() {
        Outcome::new(true, format!("{} entries match", check.checked))
    } else {
        Outcome::new(false, check.mismatches.join("; "))
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rep(s: &str) -> RepDescriptor {
    s.parse().expect("descriptor literal")
}

fn table_b1(dir: &DataDir) -> Result<Outcome, String> {
    let listed: BTreeSet<String> = dir.k_table().map_err(err)?.k.into_keys().collect();
    let missing: Vec<String> = LieType::all_up_to(RANK_CAP)
        .into_iter()
        .filter(|t| !t.is_flagged())
        .map(|t| t.to_string())
        .filter(|t| !listed.contains(t))
        .collect();
    if !missing.is_empty() {
        return Ok(Outcome::new(false, format!("types without reference data: {missing:?}")));
    }
    Ok(from_table(verify::check_k_table(dir).map_err(err)?))
}

fn sorth_sets(dir: &DataDir) -> Result<Outcome, String> {
    Ok(from_table(verify::check_sorth_table(dir).map_err(err)?))
}

fn dimensions(_: &DataDir) -> Result<Outcome, String> {
    let cases = [
        ("G2:[1,0]", 7),
        ("F4:[0,0,0,1]", 26),
        ("E6:[1,0,0,0,0,0]", 27),
        ("E7:[0,0,0,0,0,0,1]", 56),
        ("B3:[0,0,1]", 8),
        ("B4:[0,0,0,1]", 16),
    ];
    let mut bad = Vec::new();
    for (s, want) in cases {
        let (d, w) = rep(s).datum_and_weight().map_err(err)?;
        let got = weyl_dim_u64(&d, &w);
        if got != Some(want) {
            bad.push(format!("{s}: {got:?} ≠ {want}"));
        }
    }
    Ok(Outcome::new(bad.is_empty(), if bad.is_empty() { "6 dimensions exact".into() } else { bad.join("; ") }))
}

fn multiplicity_oracle(dir: &DataDir) -> Result<Outcome, String> {
    let mut reps = BTreeSet::new();
    for list in [dir.c_half(), dir.c1(), dir.c1_half()] {
        reps.extend(list.map_err(err)?.canonical().into_iter().map(|r| r.semisimple_part()));
    }
    let mut checked = 0;
    let mut bad = Vec::new();
    for r in reps.iter().filter(|r| !r.factors.is_empty()) {
        let info = describe(r).map_err(err)?;
        if info.semisimple_type == ReprType::Complex {
            continue;
        }
        if info.dim > 256 {
            bad.push(format!("{r}: dimension {} over 256", info.dim));
            continue;
        }
        let (d, w) = r.datum_and_weight().map_err(err)?;
        if let Err(e) = module_matches_multiplicities(&module(&d, &w)) {
            bad.push(e);
        }
        checked += 1;
    }
    Ok(Outcome::new(bad.is_empty(), if bad.is_empty() { format!("{checked} self-dual modules agree") } else { bad.join("; ") }))
}

fn zero_mult(s: &str) -> Result<u64, String> {
    let (d, w) = rep(s).datum_and_weight().map_err(err)?;
    let ws = weight_system(&d, &w, osc::FILTER_DIM_CAP).map_err(err)?;
    Ok(ws.mult(&d, &Weight::zero(d.rank())))
}

fn labels_rep(ty: LieType, node: usize, value: i64) -> String {
    let mut w = vec![0; ty.rank];
    w[node] = value;
    format!("{ty}:{}", Weight(w))
}

fn zero_weight_multiplicities(_: &DataDir) -> Result<Outcome, String> {
    let binom2 = |n: u64| n * (n - 1) / 2;
    let mut cases: Vec<(String, u64)> = Vec::new();
    for n in 2..=8 {
        cases.push((labels_rep(LieType::c(n), 1, 1), n as u64 - 1));
    }
    for n in 4..=8 {
        cases.push((labels_rep(LieType::b(n), 2, 1), n as u64));
    }
    cases.push(("B4:[0,0,0,2]".into(), 6));
    for n in 5..=8 {
        cases.push((labels_rep(LieType::b(n), 3, 1), binom2(n as u64)));
    }
    let mut bad = Vec::new();
    for (s, want) in &cases {
        let got = zero_mult(s)?;
        if got != *want {
            bad.push(format!("{s}: mult(0) = {got}, expected {want}"));
        }
    }
    Ok(Outcome::new(bad.is_empty(), if bad.is_empty() { format!("{} zero-weight multiplicities exact", cases.len()) } else { bad.join("; ") }))
}

fn lowest_vector_reach(_: &DataDir) -> Result<Outcome, String> {
    let cases = [("A1:[2]", 2), ("B3:[0,0,1]", 2), ("C3:[0,0,1]", 3), ("B5:[0,0,0,0,1]", 3), ("B6:[0,0,0,0,0,1]", 3)];
    let mut bad = Vec::new();
    for (s, k) in cases {
        let (d, w) = rep(s).datum_and_weight().map_err(err)?;
        let m = module(&d, &w);
        let b = build_sorth(&d).map_err(err)?;
        let kv = k_invariant(&d, &b, &w);
        let report = verify_prop_d(&m, &b, &kv).map_err(err)?;
        if report.k != k || !report.confirmed() {
            bad.push(format!("{s}: {report:?}"));
        }
    }
    Ok(Outcome::new(bad.is_empty(), if bad.is_empty() { "5 modules: monomial reaches the lowest vector at level k, not below".into() } else { bad.join("; ") }))
}

fn c_tables(dir: &DataDir) -> Result<Outcome, String> {
    let t = osc::classify_c_tables(RANK_CAP, verify::osc_scan_cap(DIM_CAP)).map_err(err)?;
    Ok(from_table(verify::check_c_tables(dir, &t).map_err(err)?))
}

/// Decompositions of `v` (θ-coordinates) as a root or a sum of two roots,
/// counted by brute force over θ-vectors.
fn brute_force_count(d: &RootDatum, theta: &[Q]) -> u64 {
    let roots: Vec<Vec<Q>> = d.all_roots().iter().map(|r| d.root_to_theta(r)).collect();
    let as_root = roots.iter().filter(|r| r.as_slice() == theta).count();
    let mut pairs = 0;
    for i in 0..roots.len() {
        for j in i..roots.len() {
            if roots[i].iter().zip(&roots[j]).map(|(a, b)| a + b).eq(theta.iter().cloned()) {
                pairs += 1;
            }
        }
    }
    (as_root + pairs) as u64
}

fn n_counts(_: &DataDir) -> Result<Outcome, String> {
    let mut cases: Vec<(LieType, &str, u64)> = Vec::new();
    for n in 3..=8 {
        cases.push((LieType::c(n), "2θ1+2θ2", 2));
    }
    cases.push((LieType::f4(), "2θ1", 4));
    for n in 4..=8 {
        cases.push((LieType::c(n), "θ1+θ2+θ3+θ4", 3));
        if n >= 5 {
            cases.push((LieType::d(n), "θ1+θ2+θ3+θ4", 3));
        }
    }
    let e7 = (LieType::e(7), "θ8-θ7+θ6+θ5", 17);
    cases.push(e7);
    let mut bad = Vec::new();
    let mut e7_only = true;
    for (ty, expr, want) in &cases {
        let d = RootDatum::new(*ty);
        let v = d.parse_weight_theta(expr).map_err(err)?;
        let got = decomposition_count(&d, &v).n;
        let oracle = brute_force_count(&d, &d.weight_to_theta(&v));
        if got != oracle {
            return Ok(Outcome::new(false, format!("{ty} {expr}: count {got} but brute force {oracle}")));
        }
        if got != *want {
            bad.push(format!("{ty} {expr}: N = {got}, listed {want}"));
            e7_only &= *ty == LieType::e(7);
        }
    }
    let e8 = osc::e8_check(&RootDatum::new(LieType::e(8))).map_err(err)?;
    if (e8.n_plus, e8.n_minus) != (1, 1) {
        bad.push(format!("E8 λ±μ: N = ({}, {})", e8.n_plus, e8.n_minus));
        e7_only = false;
    }
    let mut out = Outcome::new(bad.is_empty(), if bad.is_empty() { format!("{} counts exact", cases.len() + 2) } else { bad.join("; ") });
    if !out.pass && e7_only && bad.len() == 1 {
        out.documented = Some("the E7 weight has 5 decompositions, confirmed by brute force; the listed 17 is a miscount and the elimination stands since mult(0) = 27");
    }
    Ok(out)
}

fn k4_table(dir: &DataDir) -> Result<Outcome, String> {
    Ok(from_table(verify::check_k4(dir, RANK_CAP).map_err(err)?))
}

fn simple_survivors(dir: &DataDir) -> Result<Outcome, String> {
    let report = lieosc::classify::simple_pipeline(RANK_CAP, &dir.symmetric_spaces().map_err(err)?.index(), DIM_CAP)
        .map_err(err)?;
    let check = verify::check_simple(dir, &report).map_err(err)?;
    let e8 = osc::e8_check(&RootDatum::new(LieType::e(8))).map_err(err)?;
    let e8_rep = RepDescriptor::single(LieType::e(8), &e8.lambda.0);
    let e8_rec = report.records.iter().find(|r| r.descriptor == e8_rep);
    let e8_failed = e8_rec.and_then(|r| r.verdict(osc::E8_FREUDENTHAL)).is_some_and(|v| !v.passed);
    let mut problems = check.mismatches.clone();
    let oracle = e8_multiplicity_from_trace().map_err(err)?;
    if e8.m_nu < 4 || e8.m_nu != E8_M_NU || e8.m_nu != oracle || !e8_failed {
        problems.push(format!("E8: m_ν = {} (recorded {E8_M_NU}, trace oracle {oracle}), freudenthal filter failed: {e8_failed}", e8.m_nu));
    }
    let mut out = Outcome::new(
        problems.is_empty(),
        if problems.is_empty() {
            format!("{} survivors, E8 m_ν = {}", report.survivors.len(), e8.m_nu)
        } else {
            format!("{}; E8 m_ν = {}", problems.join("; "), e8.m_nu)
        },
    );
    let b4_by_c2mu = report
        .records
        .iter()
        .find(|r| r.descriptor.to_string() == B4_SPIN_VECTOR)
        .and_then(|r| r.primary_failure())
        .is_some_and(|v| v.filter_name == osc::C2_MU);
    if problems == [format!("survivors: listed but not computed: {B4_SPIN_VECTOR}")] && b4_by_c2mu {
        out.documented = Some("B4:[1,0,0,1] is eliminated by the level-2 test on a special vector at μ = λ4, confirmed by the tensor route");
    }
    Ok(out)
}

/// m_ν from two linear identities: Σ m_μ = dim V and
/// Σ m_μ (μ,μ) = dim V·(λ,λ+2ρ)·rank / dim 𝔤 (trace of the Casimir
/// restricted to the Cartan subalgebra). The dominant weights of 2θ8 are λ,
/// the highest root ν and 0, so the two equations fix m_ν and m_0.
fn e8_multiplicity_from_trace() -> lieosc::Result<u64> {
    use lieosc::weights::{dominant_weights, orbit_size};
    use num_traits::ToPrimitive;
    let d = RootDatum::new(LieType::e(8));
    let lambda = d.parse_weight_theta("2θ8")?;
    let nu = d.parse_weight_theta("θ8+θ7")?;
    let dominant: BTreeSet<Weight> = dominant_weights(&d, &lambda).into_iter().collect();
    let expected: BTreeSet<Weight> = [lambda.clone(), nu.clone(), Weight::zero(8)].into_iter().collect();
    if dominant != expected {
        return Err(lieosc::Error::Data(format!("unexpected dominant weights {dominant:?}")));
    }
    let dim = Q::from_integer(weyl_dim_u64(&d, &lambda).expect("small").into());
    let casimir = d.pair_weights(&lambda, &lambda.add(&d.weyl_vector().scale(2)));
    let dim_g = Q::from_integer((d.all_roots().len() + 8).into());
    let trace = &dim * casimir * Q::from_integer(8.into()) / dim_g;
    let top = Q::from_integer(orbit_size(&d, &lambda).into()) * d.pair_weights(&lambda, &lambda);
    let per_nu = Q::from_integer(orbit_size(&d, &nu).into()) * d.pair_weights(&nu, &nu);
    let m = (trace - top) / per_nu;
    Ok(m.to_integer().to_u64().filter(|_| m.is_integer()).expect("integral multiplicity"))
}

fn spheres(dir: &DataDir) -> Result<Outcome, String> {
    Ok(from_table(verify::check_spheres(dir, RANK_CAP, DIM_CAP).map_err(err)?))
}

fn composite(dir: &DataDir) -> Result<Outcome, String> {
    let run = verify::full_run(dir, RANK_CAP, DIM_CAP).map_err(err)?;
    let check = verify::check_composite(dir, &run.records).map_err(err)?;
    let mut out = from_table(check.clone());
    if check.mismatches == [format!("candidates: listed but not computed: {B4_SPIN_VECTOR}")] {
        out.documented = Some("the same B4:[1,0,0,1] elimination as in the simple survivor set");
    }
    Ok(out)
}

fn hermitian(dir: &DataDir) -> Result<Outcome, String> {
    let cases = dir.hermitian_pairs().map_err(err)?.cases;
    let count = |p: &str| cases.iter().filter(|c| c.part == p).count();
    let mut out = from_table(verify::check_hermitian(dir).map_err(err)?);
    if (count("a"), count("b")) != (3, 4) {
        out = Outcome::new(false, format!("expected 3 + 4 cases, found {} + {}", count("a"), count("b")));
    }
    Ok(out)
}

fn property_suites(_: &DataDir) -> Result<Outcome, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05c1);
    let types = small_types();
    let mut bad = Vec::new();
    let mut tally: BTreeMap<&str, usize> = BTreeMap::new();
    for ty in LieType::all_up_to(RANK_CAP) {
        if !two_rho_identity(&RootDatum::new(ty)) {
            bad.push(format!("Σα ≠ 2ρ for {ty}"));
        }
        *tally.entry("2rho").or_default() += 1;
    }
    let mut drawn = 0;
    while drawn < 30 {
        let ty = types[rng.random_range(0..types.len())];
        let d = RootDatum::new(ty);
        let labels: Vec<i64> = (0..d.rank()).map(|_| rng.random_range(0..=2)).collect();
        let Some(w) = bounded_weight(&d, &labels, 150) else { continue };
        drawn += 1;
        let m = module(&d, &w);
        if let Err(e) = serre_holds(&m) {
            bad.push(format!("Serre {ty}:{w}: {e}"));
        }
        if !form_positive_definite(&m) {
            bad.push(format!("form not positive definite on {ty}:{w}"));
        }
        if let Err(e) = multiplicities_weyl_invariant(&d, &w) {
            bad.push(e);
        }
        if d.dual(&w) == w {
            if let Err(e) = condition_chain_monotone(&m) {
                bad.push(e);
            }
            *tally.entry("chain").or_default() += 1;
        }
        let other: Vec<i64> = (0..d.rank()).map(|_| rng.random_range(0..=3)).collect();
        if !k_additive(&d, &w, &Weight(other)) {
            bad.push(format!("k not additive at {ty}:{w}"));
        }
        *tally.entry("modules").or_default() += 1;
    }
    let summary = tally.iter().map(|(k, v)| format!("{k} {v}")).collect::<Vec<_>>().join(", ");
    Ok(Outcome::new(bad.is_empty(), if bad.is_empty() { format!("all invariants hold ({summary})") } else { bad.join("; ") }))
}

fn main() {
    let dir = DataDir::resolve(None);
    let criteria: [(u32, &str, Check); 14] = [
        (1, "k of fundamental weights", table_b1),
        (2, "strongly orthogonal sets", sorth_sets),
        (3, "dimension spot-checks", dimensions),
        (4, "module weight spaces vs multiplicities", multiplicity_oracle),
        (5, "zero-weight multiplicities", zero_weight_multiplicities),
        (6, "lowest weight vector reached at level k", lowest_vector_reach),
        (7, "C-condition tables", c_tables),
        (8, "decomposition counts", n_counts),
        (9, "k = 4 real representations", k4_table),
        (10, "simple survivors", simple_survivors),
        (11, "transitive sphere actions", spheres),
        (12, "composite candidates", composite),
        (13, "Hermitian redundancy", hermitian),
        (14, "property suites", property_suites),
    ];
    let mut undocumented = 0;
    for (id, name, check) in criteria {
        let start = Instant::now();
        let outcome = check(&dir).unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let secs = start.elapsed().as_secs_f64();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        println!("{verdict} {id:>2} {name} [{secs:.1}s]: {}", outcome.detail);
        if !outcome.pass {
            match outcome.documented {
                Some(why) => println!("        known deviation: {why}"),
                None => undocumented += 1,
            }
        }
    }
    if undocumented > 0 {
        println!("{undocumented} undocumented failure(s)");
        std::process::exit(1);
    }
}
