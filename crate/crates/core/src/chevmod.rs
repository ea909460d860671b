//! Explicit irreducible modules over the rationals.
//!
//! V_λ is realized as the quotient of the Verma module by the radical of its
//! contravariant form. Weight spaces are filled in order of depth below λ:
//! the candidates for V_μ are the vectors f_i·b with b a basis vector of
//! V_{μ+α_i}, their Gram matrix is computed from the form one level up, and a
//! maximal independent set of candidates becomes the basis. Every other
//! candidate is expressed in that basis through the Gram matrix, which gives
//! the lowering operators; raising operators come from the commutation rule
//! e_j f_i = f_i e_j + δ_ij h_i.

use crate::error::{Error, Result};
use crate::linalg::{dot, is_zero_vec, normalize_leading, q, Echelon, Mat, Q};
use crate::rootsys::{RootDatum, Weight};
use crate::sorth::StronglyOrthogonalSet;
use crate::dadok::KValue;
use crate::weights::{weight_system, DEFAULT_WEIGHT_CAP};
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap};

pub const DEFAULT_DIM_CAP: u64 = 4000;

/// How a non-simple positive root is reached: γ = α_node + β with β at
/// `beta` in the positive-root list and `down` the length of the
/// α_node-string below β.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Step {
    node: usize,
    beta: usize,
    down: i64,
}

#[derive(Clone, Debug)]
pub struct ChevalleyBasis {
    datum: RootDatum,
    steps: Vec<Option<Step>>,
    /// N_{α,β} keyed by indices into `all_roots`, for α+β a root.
    structure_constants: BTreeMap<(usize, usize), i64>,
}

impl ChevalleyBasis {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn structure_constant(&self, a: usize, b: usize) -> Option<i64> {
        self.structure_constants.get(&(a, b)).copied()
    }

    pub fn structure_constants(&self) -> &BTreeMap<(usize, usize), i64> {
        &self.structure_constants
    }

    /// ⟨μ, α∨⟩: the scalar by which H_α acts on the μ-weight space.
    pub fn coroot_action(&self, mu: &Weight, root: usize) -> i64 {
        self.datum.coroot_pairing(mu, &self.datum.all_roots()[root])
    }
}

fn root_steps(d: &RootDatum) -> Vec<Option<Step>> {
    let pos = d.positive_roots();
    pos.iter()
        .map(|gamma| {
            if gamma.height() == 1 {
                return None;
            }
            (0..d.rank()).find_map(|node| {
                let alpha = d.simple_root(node);
                let beta = gamma.sub(&alpha);
                let idx = d.root_index(&beta).filter(|&i| i < d.num_positive())?;
                let (_, down) = d.root_string(&beta, &alpha);
                Some(Step { node, beta: idx, down })
            })
        })
        .collect()
}

/// Root vectors with [X_α, X_{−α}] = H_α and X_{−α} the transpose of X_α
/// under the contravariant form; structure constants are read off the
/// adjoint module of each simple component.
pub fn build_chevalley(d: &RootDatum) -> ChevalleyBasis {
    let mut cb = ChevalleyBasis { datum: d.clone(), steps: root_steps(d), structure_constants: BTreeMap::new() };
    let roots = d.all_roots();
    let mut table = BTreeMap::new();
    for c in 0..d.components().len() {
        let top = d.root_to_weight(&d.highest_root_of(c));
        let adj = build_module(&cb, &top, u64::MAX).expect("adjoint module builds");
        for a in 0..roots.len() {
            if d.root_component(a) != c {
                continue;
            }
            for b in 0..roots.len() {
                let Some(s) = d.root_index(&roots[a].add(&roots[b])) else { continue };
                if d.root_component(b) != c {
                    continue;
                }
                table.insert((a, b), adj.commutator_ratio(a, b, s));
            }
        }
    }
    cb.structure_constants = table;
    cb
}

/// A vector living in a single weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub weight: usize,
    pub coords: Vec<Q>,
}

impl WeightVector {
    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coords)
    }
}

#[derive(Clone, Debug)]
pub struct IrrepModule {
    datum: RootDatum,
    pub highest: Weight,
    weights: Vec<Weight>,
    index: HashMap<Weight, usize>,
    depths: Vec<i64>,
    /// Basis of each weight space as (node i, basis index b one level up): the vector f_i·b.
    words: Vec<Vec<(usize, usize)>>,
    gram: Vec<Mat>,
    /// `ops[root][w]`: matrix of X_root from V_w to V_{w+root}, absent when either side is zero.
    ops: Vec<Vec<Option<Mat>>>,
    pub dim: usize,
}

/// Which span condition to test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Condition {
    /// 𝒰²v_λ + 𝒰²ε(v_λ) = V
    C2,
    /// 𝒰²v_λ + 𝒰¹ε(v_λ) = V
    C1Half,
    /// 𝒰¹v_λ + 𝒰¹ε(v_λ) = V
    C1,
    /// 𝒰¹v_λ + ℂε(v_λ) = V
    CHalf,
    /// 𝒰^level applied to each basis vector of V_μ, and to all of V_μ, gives V.
    UkFrom { mu: Weight, level: usize },
}

impl Condition {
    pub fn levels(&self) -> Option<(usize, usize)> {
        match self {
            Condition::C2 => Some((2, 2)),
            Condition::C1Half => Some((2, 1)),
            Condition::C1 => Some((1, 1)),
            Condition::CHalf => Some((1, 0)),
            Condition::UkFrom { .. } => None,
        }
    }
}

impl std::str::FromStr for Condition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "c2" => Ok(Condition::C2),
            "c1half" | "c1.5" | "c3/2" => Ok(Condition::C1Half),
            "c1" => Ok(Condition::C1),
            "chalf" | "c0.5" | "c1/2" => Ok(Condition::CHalf),
            other => Err(Error::Parse(format!("unknown condition {other}"))),
        }
    }
}

/// A weight space not covered by a span.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Deficiency {
    pub weight: Weight,
    pub dominant: Weight,
    pub covered: usize,
    pub mult: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub holds: bool,
    pub witness: Option<Deficiency>,
}

/// A subspace of the module, stored weight space by weight space.
#[derive(Clone, Debug)]
pub struct Subspace {
    spaces: Vec<Echelon>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.spaces.iter().map(Echelon::len).sum()
    }

    pub fn dim_at(&self, w: usize) -> usize {
        self.spaces[w].len()
    }

    pub fn contains(&self, v: &WeightVector) -> bool {
        self.spaces[v.weight].contains(&v.coords)
    }

    pub fn insert(&mut self, v: &WeightVector) -> bool {
        self.spaces[v.weight].insert(&v.coords)
    }

    pub fn vectors(&self) -> impl Iterator<Item = WeightVector> + '_ {
        self.spaces
            .iter()
            .enumerate()
            .flat_map(|(w, e)| e.basis().iter().map(move |c| WeightVector { weight: w, coords: c.clone() }))
    }
}

fn depth_of(d: &RootDatum, lambda: &Weight, mu: &Weight) -> i64 {
    let c = d.weight_to_root_coords(&lambda.sub(mu));
    c.iter().fold(Q::zero(), |a, x| a + x).to_integer().to_i64().expect("small depth")
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); n];
    v[i] = q(1);
    v
}

fn add_into(acc: &mut [Q], v: &[Q]) {
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += x;
        }
    }
}

pub fn build_module(cb: &ChevalleyBasis, lambda: &Weight, dim_cap: u64) -> Result<IrrepModule> {
    let d = &cb.datum;
    let ws = weight_system(d, lambda, dim_cap)?;
    let mut all = ws.all_weights(d, DEFAULT_WEIGHT_CAP.max(ws.total_dim as usize))?;
    all.sort_by(|(a, _), (b, _)| depth_of(d, lambda, a).cmp(&depth_of(d, lambda, b)).then_with(|| b.cmp(a)));
    let weights: Vec<Weight> = all.iter().map(|(w, _)| w.clone()).collect();
    let mults: Vec<usize> = all.iter().map(|(_, m)| *m as usize).collect();
    let index: HashMap<Weight, usize> = weights.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
    let depths = weights.iter().map(|w| depth_of(d, lambda, w)).collect();
    let n = weights.len();
    let rank = d.rank();
    let simple_w: Vec<Weight> = (0..rank).map(|i| d.root_to_weight(&d.simple_root(i))).collect();

    let mut words: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    let mut gram: Vec<Mat> = vec![Mat::zeros(0, 0); n];
    // raise[i][w]: V_w → V_{w+α_i}; lower[i][w]: V_w → V_{w−α_i}.
    let mut raise: Vec<Vec<Option<Mat>>> = vec![vec![None; n]; rank];
    let mut lower: Vec<Vec<Option<Mat>>> = vec![vec![None; n]; rank];
    let dims = |w: usize| mults[w];

    gram[0] = Mat::identity(1);
    words[0] = Vec::new();
    for mu_idx in 1..n {
        let mu = &weights[mu_idx];
        let up: Vec<Option<usize>> = simple_w.iter().map(|a| index.get(&mu.add(a)).copied()).collect();
        // Candidates f_i·b and their images under every e_j.
        let mut cands: Vec<(usize, usize)> = Vec::new();
        let mut raised: Vec<Vec<Option<Vec<Q>>>> = Vec::new();
        for i in 0..rank {
            let Some(src) = up[i] else { continue };
            for b in 0..dims(src) {
                let mut images = Vec::with_capacity(rank);
                for j in 0..rank {
                    let Some(tgt) = up[j] else {
                        images.push(None);
                        continue;
                    };
                    let mut v = vec![Q::zero(); dims(tgt)];
                    // f_i(e_j b): e_j b lives at μ+α_i+α_j, then f_i brings it to μ+α_j.
                    if let (Some(e), Some(f)) = (&raise[j][src], index.get(&mu.add(&simple_w[i]).add(&simple_w[j]))) {
                        let eb = e.col(b);
                        if let Some(fm) = &lower[i][*f] {
                            add_into(&mut v, &fm.mul_vec(&eb));
                        }
                    }
                    if i == j {
                        let h = d.coroot_pairing(&weights[src], &d.simple_root(i));
                        v[b] += q(h);
                    }
                    images.push(Some(v));
                }
                cands.push((i, b));
                raised.push(images);
            }
        }
        let nc = cands.len();
        let mut g = Mat::zeros(nc, nc);
        for (x, &(i, b)) in cands.iter().enumerate() {
            let src = up[i].expect("candidate source");
            let gb = gram[src].row(b).to_vec();
            for y in 0..nc {
                let img = raised[y][i].as_ref().expect("e_i image at a weight");
                g[(x, y)] = dot(&gb, img);
            }
        }
        let (_, pivots) = g.rref();
        if pivots.len() != dims(mu_idx) {
            return Err(Error::Data(format!(
                "weight {mu}: contravariant form has rank {} but multiplicity is {}",
                pivots.len(),
                dims(mu_idx)
            )));
        }
        let sel_gram = Mat::from_rows(&pivots.iter().map(|&x| pivots.iter().map(|&y| g[(x, y)].clone()).collect()).collect::<Vec<_>>());
        let inv = sel_gram.inverse().ok_or_else(|| Error::Data(format!("singular form at {mu}")))?;
        for i in 0..rank {
            let Some(src) = up[i] else { continue };
            let mut m = Mat::zeros(dims(mu_idx), dims(src));
            for (y, &(ci, b)) in cands.iter().enumerate() {
                if ci != i {
                    continue;
                }
                let pairings: Vec<Q> = pivots.iter().map(|&x| g[(x, y)].clone()).collect();
                let coords = inv.mul_vec(&pairings);
                for (r, c) in coords.into_iter().enumerate() {
                    m[(r, b)] = c;
                }
            }
            lower[i][src] = Some(m);
        }
        for j in 0..rank {
            let Some(tgt) = up[j] else { continue };
            let mut m = Mat::zeros(dims(tgt), dims(mu_idx));
            for (col, &x) in pivots.iter().enumerate() {
                let v = raised[x][j].as_ref().expect("raise image");
                for (r, c) in v.iter().enumerate() {
                    m[(r, col)] = c.clone();
                }
            }
            raise[j][mu_idx] = Some(m);
        }
        words[mu_idx] = pivots.iter().map(|&x| cands[x]).collect();
        gram[mu_idx] = sel_gram;
    }

    let mut module = IrrepModule {
        datum: d.clone(),
        highest: lambda.clone(),
        weights,
        index,
        depths,
        words,
        gram,
        ops: Vec::new(),
        dim: mults.iter().sum(),
    };
    module.ops = root_operators(cb, &module, raise, lower);
    Ok(module)
}

fn root_operators(
    cb: &ChevalleyBasis,
    m: &IrrepModule,
    raise: Vec<Vec<Option<Mat>>>,
    lower: Vec<Vec<Option<Mat>>>,
) -> Vec<Vec<Option<Mat>>> {
    let d = &cb.datum;
    let np = d.num_positive();
    let n = m.weights.len();
    let mut ops: Vec<Vec<Option<Mat>>> = vec![Vec::new(); 2 * np];
    let shifted = |w: usize, root: usize| m.index.get(&m.weights[w].add(d.root_weight(root))).copied();
    for g in 0..np {
        let (pos, neg) = match cb.steps[g] {
            None => {
                let node = (0..d.rank()).find(|&i| d.positive_roots()[g] == d.simple_root(i)).expect("simple root");
                (raise[node].clone(), lower[node].clone())
            }
            Some(Step { node, beta, down }) => {
                let alpha = d.root_index(&d.simple_root(node)).expect("simple root index");
                let scale = q(1) / q(down + 1);
                let mut pos = vec![None; n];
                let mut neg = vec![None; n];
                for w in 0..n {
                    // X_γ = [e_i, X_β]/(r+1), X_{−γ} = [X_{−β}, f_i]/(r+1).
                    if let Some(t) = shifted(w, g) {
                        let m1 = compose(&raise[node], &ops[beta], w, shifted(w, beta));
                        let m2 = compose(&ops[beta], &raise[node], w, shifted(w, alpha));
                        pos[w] = combine(m1, m2, m.dim_of(t), m.dim_of(w), &scale);
                    }
                    let (nb, na) = (d.negative_index(beta), d.negative_index(alpha));
                    if let Some(t) = shifted(w, d.negative_index(g)) {
                        let m1 = compose(&ops[nb], &lower[node], w, shifted(w, na));
                        let m2 = compose(&lower[node], &ops[nb], w, shifted(w, nb));
                        neg[w] = combine(m1, m2, m.dim_of(t), m.dim_of(w), &scale);
                    }
                }
                (pos, neg)
            }
        };
        ops[g] = pos;
        ops[g + np] = neg;
    }
    ops
}

/// `second ∘ first` on V_w, where `first` lands in `mid`.
fn compose(second: &[Option<Mat>], first: &[Option<Mat>], w: usize, mid: Option<usize>) -> Option<Mat> {
    let mid = mid?;
    let a = first[w].as_ref()?;
    let b = second.get(mid)?.as_ref()?;
    Some(b.mul(a))
}

fn combine(m1: Option<Mat>, m2: Option<Mat>, rows: usize, cols: usize, scale: &Q) -> Option<Mat> {
    let out = match (m1, m2) {
        (None, None) => return None,
        (Some(a), None) => a,
        (None, Some(b)) => Mat::zeros(rows, cols).sub(&b),
        (Some(a), Some(b)) => a.sub(&b),
    };
    let out = out.scale(scale);
    (!out.is_zero()).then_some(out)
}

impl IrrepModule {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn weight_index(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn dim_of(&self, w: usize) -> usize {
        self.gram[w].rows
    }

    pub fn depth(&self, w: usize) -> i64 {
        self.depths[w]
    }

    /// The contravariant form on V_w in the chosen basis.
    pub fn gram(&self, w: usize) -> &Mat {
        &self.gram[w]
    }

    pub fn basis_words(&self, w: usize) -> &[(usize, usize)] {
        &self.words[w]
    }

    /// Matrix of X_root from V_w, if nonzero.
    pub fn operator(&self, root: usize, w: usize) -> Option<&Mat> {
        self.ops[root][w].as_ref()
    }

    pub fn target(&self, root: usize, w: usize) -> Option<usize> {
        self.weight_index(&self.weights[w].add(self.datum.root_weight(root)))
    }

    pub fn apply(&self, root: usize, v: &WeightVector) -> Option<WeightVector> {
        let m = self.operator(root, v.weight)?;
        let t = self.target(root, v.weight)?;
        let coords = m.mul_vec(&v.coords);
        (!is_zero_vec(&coords)).then_some(WeightVector { weight: t, coords })
    }

    pub fn basis_vector(&self, w: usize, i: usize) -> WeightVector {
        WeightVector { weight: w, coords: unit(self.dim_of(w), i) }
    }

    pub fn highest_vector(&self) -> WeightVector {
        self.basis_vector(0, 0)
    }

    pub fn is_self_dual(&self) -> bool {
        self.datum.dual(&self.highest) == self.highest
    }

    pub fn lowest_weight(&self) -> Weight {
        self.datum.dual(&self.highest).neg()
    }

    /// The weight −λ* vector, normalized to leading coordinate 1.
    pub fn lowest_weight_vector(&self) -> WeightVector {
        let w = self.weight_index(&self.lowest_weight()).expect("lowest weight present");
        assert_eq!(self.dim_of(w), 1, "lowest weight has multiplicity one");
        WeightVector { weight: w, coords: vec![q(1)] }
    }

    /// [X_a, X_b] = N X_{a+b}: N read off the first weight space where X_{a+b} is nonzero.
    fn commutator_ratio(&self, a: usize, b: usize, s: usize) -> i64 {
        for w in 0..self.weights.len() {
            let Some(xs) = self.operator(s, w) else { continue };
            let bv = self.target(b, w).and_then(|m| Some((self.operator(b, w)?, self.operator(a, m))));
            let av = self.target(a, w).and_then(|m| Some((self.operator(a, w)?, self.operator(b, m))));
            let mut comm = Mat::zeros(xs.rows, xs.cols);
            if let Some((xb, Some(xa))) = bv {
                comm = comm.add(&xa.mul(xb));
            }
            if let Some((xa, Some(xb))) = av {
                comm = comm.sub(&xb.mul(xa));
            }
            let (r, c) = (0..xs.rows)
                .flat_map(|r| (0..xs.cols).map(move |c| (r, c)))
                .find(|&(r, c)| !xs[(r, c)].is_zero())
                .expect("nonzero operator has a nonzero entry");
            let ratio = &comm[(r, c)] / &xs[(r, c)];
            assert!(ratio.is_integer(), "structure constants are integers");
            return ratio.to_integer().to_i64().expect("small");
        }
        panic!("root vector acts by zero on the adjoint module")
    }

    /// ε up to a scalar on each basis vector: ε(v_λ) = lowest, ε(f_i b) = −e_i ε(b).
    pub fn twist_matrices(&self) -> Result<Vec<Mat>> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDual(self.highest.to_string()));
        }
        let d = &self.datum;
        let n = self.weights.len();
        let mut out: Vec<Option<Mat>> = vec![None; n];
        out[0] = Some(Mat::identity(1));
        for w in 1..n {
            let neg_w = self.weight_index(&self.weights[w].neg()).expect("self-dual weights are symmetric");
            let mut m = Mat::zeros(self.dim_of(neg_w), self.dim_of(w));
            for (col, &(node, b)) in self.words[w].iter().enumerate() {
                let alpha = d.root_index(&d.simple_root(node)).expect("simple");
                let src = self.weight_index(&self.weights[w].add(d.root_weight(alpha))).expect("word source");
                let omega_b = out[src].as_ref().expect("earlier level").col(b);
                let from = self.weight_index(&self.weights[src].neg()).expect("symmetric");
                let v = WeightVector { weight: from, coords: omega_b };
                if let Some(img) = self.apply(alpha, &v) {
                    debug_assert_eq!(img.weight, neg_w);
                    for (r, x) in img.coords.into_iter().enumerate() {
                        m[(r, col)] = -x;
                    }
                }
            }
            out[w] = Some(m);
        }
        Ok(out.into_iter().map(|m| m.expect("filled")).collect())
    }

    pub fn twist(&self, omega: &[Mat], v: &WeightVector) -> WeightVector {
        let w = self.weight_index(&self.weights[v.weight].neg()).expect("self-dual");
        WeightVector { weight: w, coords: omega[v.weight].mul_vec(&v.coords) }
    }

    pub fn empty_subspace(&self) -> Subspace {
        Subspace { spaces: (0..self.weights.len()).map(|w| Echelon::new(self.dim_of(w))).collect() }
    }

    /// Grows `s` by `level` rounds of applying every root vector.
    pub fn extend_span(&self, s: &mut Subspace, seeds: &[WeightVector], level: usize) {
        let mut frontier: Vec<WeightVector> = seeds.iter().filter(|v| s.insert(v)).cloned().collect();
        for _ in 0..level {
            let mut next = Vec::new();
            for v in &frontier {
                for root in 0..self.ops.len() {
                    if let Some(img) = self.apply(root, v) {
                        if s.insert(&img) {
                            next.push(img);
                        }
                    }
                }
            }
            frontier = next;
        }
    }

    /// 𝒰^level applied to the seeds.
    pub fn span_u(&self, seeds: &[WeightVector], level: usize) -> Subspace {
        let mut s = self.empty_subspace();
        self.extend_span(&mut s, seeds, level);
        s
    }

    /// First weight space (in depth order) not filled by `s`.
    pub fn deficiency(&self, s: &Subspace) -> Option<Deficiency> {
        (0..self.weights.len()).find(|&w| s.dim_at(w) < self.dim_of(w)).map(|w| Deficiency {
            weight: self.weights[w].clone(),
            dominant: self.datum.dominant(&self.weights[w]),
            covered: s.dim_at(w),
            mult: self.dim_of(w),
        })
    }

    /// 𝒰^a v_λ + 𝒰^b ε(v_λ), with level 0 meaning the line through the vector.
    pub fn extremal_span(&self, hi_level: usize, lo_level: usize) -> Subspace {
        let mut s = self.span_u(&[self.highest_vector()], hi_level);
        self.extend_span(&mut s, &[self.lowest_weight_vector()], lo_level);
        s
    }

    pub fn check_condition(&self, cond: &Condition) -> Result<ConditionReport> {
        let witness = match cond {
            Condition::UkFrom { mu, level } => {
                let w = self.weight_index(mu).ok_or_else(|| Error::NotAWeight(mu.to_string()))?;
                let basis: Vec<WeightVector> = (0..self.dim_of(w)).map(|i| self.basis_vector(w, i)).collect();
                let mut found = self.deficiency(&self.span_u(&basis, *level));
                for v in &basis {
                    if found.is_some() {
                        break;
                    }
                    found = self.deficiency(&self.span_u(std::slice::from_ref(v), *level));
                }
                found
            }
            other => {
                if !self.is_self_dual() {
                    return Err(Error::NotSelfDual(self.highest.to_string()));
                }
                let (a, b) = other.levels().expect("extremal condition");
                self.deficiency(&self.extremal_span(a, b))
            }
        };
        Ok(ConditionReport { holds: witness.is_none(), witness })
    }

    /// Every X_α keeps weights graded and Serre relations hold among e_i, f_i.
    pub fn serre_defect(&self) -> Option<String> {
        let d = &self.datum;
        let cartan = d.cartan();
        let node_root = |i: usize| d.root_index(&d.simple_root(i)).expect("simple");
        for i in 0..d.rank() {
            for j in 0..d.rank() {
                if i == j {
                    continue;
                }
                // a_ij = ⟨α_j, α_i∨⟩ is stored at cartan[j][i].
                let n = (1 - cartan[j][i]) as usize;
                for raise in [true, false] {
                    let (ri, rj) = if raise {
                        (node_root(i), node_root(j))
                    } else {
                        (d.negative_index(node_root(i)), d.negative_index(node_root(j)))
                    };
                    for w in 0..self.weights.len() {
                        for b in 0..self.dim_of(w) {
                            let v = self.basis_vector(w, b);
                            let mut total: Option<WeightVector> = None;
                            for k in 0..=n {
                                // (ad x_i)^n x_j = Σ (−1)^k C(n,k) x_i^{n−k} x_j x_i^k
                                let mut cur = Some(v.clone());
                                for _ in 0..k {
                                    cur = cur.and_then(|u| self.apply(ri, &u));
                                }
                                cur = cur.and_then(|u| self.apply(rj, &u));
                                for _ in 0..n - k {
                                    cur = cur.and_then(|u| self.apply(ri, &u));
                                }
                                let Some(u) = cur else { continue };
                                let coef = q(binomial(n, k) * if k % 2 == 0 { 1 } else { -1 });
                                let scaled: Vec<Q> = u.coords.iter().map(|x| x * &coef).collect();
                                match &mut total {
                                    None => total = Some(WeightVector { weight: u.weight, coords: scaled }),
                                    Some(t) => add_into(&mut t.coords, &scaled),
                                }
                            }
                            if total.is_some_and(|t| !t.is_zero()) {
                                return Some(format!("Serre relation ({i},{j}) fails at weight {}", self.weights[w]));
                            }
                        }
                    }
                }
            }
        }
        None
    }

    /// JSON dump: weights with their multiplicities, optionally full operator data.
    pub fn to_json(&self, full: bool) -> serde_json::Value {
        let spaces: Vec<serde_json::Value> = self
            .weights
            .iter()
            .enumerate()
            .map(|(w, wt)| {
                let mut o = serde_json::json!({"w": wt.0, "dim": self.dim_of(w)});
                if full {
                    o["gram"] = serde_json::json!(mat_strings(&self.gram[w]));
                }
                o
            })
            .collect();
        let mut out = serde_json::json!({"lambda": self.highest.0, "dim": self.dim, "spaces": spaces});
        if full {
            let roots = self.datum.all_roots();
            let ops: Vec<serde_json::Value> = (0..self.ops.len())
                .flat_map(|r| {
                    (0..self.weights.len()).filter_map(move |w| {
                        let m = self.operator(r, w)?;
                        Some(serde_json::json!({"root": roots[r].0, "from": self.weights[w].0, "matrix": mat_strings(m)}))
                    })
                })
                .collect();
            out["operators"] = serde_json::json!(ops);
        }
        out
    }
}

fn mat_strings(m: &Mat) -> Vec<Vec<String>> {
    (0..m.rows).map(|r| m.row(r).iter().map(ToString::to_string).collect()).collect()
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Outcome of checking that s₀v_λ is reached from v_λ at level k(λ).
#[derive(Clone, Debug, Serialize)]
pub struct PropDReport {
    pub k: i64,
    pub exponents: Vec<i64>,
    pub monomial_nonzero: bool,
    pub proportional_to_lowest: bool,
    /// Level-k membership, checked only when k ≤ 2.
    pub in_level_k: Option<bool>,
    /// Non-membership at level min(k−1, 2).
    pub excluded_below: bool,
}

impl PropDReport {
    pub fn confirmed(&self) -> bool {
        self.monomial_nonzero && self.proportional_to_lowest && self.in_level_k.unwrap_or(true) && self.excluded_below
    }
}

/// Applies X_{−β_1}^{n_1}⋯X_{−β_s}^{n_s} to v_λ (rightmost factor first).
pub fn prop_d_monomial(m: &IrrepModule, b: &StronglyOrthogonalSet, exponents: &[i64]) -> Result<WeightVector> {
    let d = m.datum();
    let mut v = m.highest_vector();
    for (beta, &e) in b.betas.iter().zip(exponents).rev() {
        let idx = d.root_index(&beta.neg()).expect("negated B-root");
        for _ in 0..e {
            v = m.apply(idx, &v).ok_or_else(|| Error::VanishingMonomial(format!("X_-{beta} kills the vector")))?;
        }
    }
    Ok(v)
}

pub fn verify_prop_d(m: &IrrepModule, b: &StronglyOrthogonalSet, kv: &KValue) -> Result<PropDReport> {
    if !m.is_self_dual() {
        return Err(Error::NotSelfDual(m.highest.to_string()));
    }
    let k = kv.integer().ok_or_else(|| Error::Data(format!("k = {} is not an integer", kv.k)))?;
    let exponents: Vec<i64> = kv
        .n_parts
        .iter()
        .map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten())
        .collect::<Option<_>>()
        .ok_or_else(|| Error::Data("fractional exponent".into()))?;
    let v = prop_d_monomial(m, b, &exponents)?;
    let low = m.lowest_weight_vector();
    let proportional = v.weight == low.weight;
    let hi = m.highest_vector();
    let in_level_k = (k <= 2).then(|| m.span_u(std::slice::from_ref(&hi), k as usize).contains(&low));
    let below = (k - 1).clamp(0, 2) as usize;
    let excluded_below = k == 0 || !m.span_u(std::slice::from_ref(&hi), below).contains(&low);
    Ok(PropDReport {
        k,
        exponents,
        monomial_nonzero: !v.is_zero(),
        proportional_to_lowest: proportional,
        in_level_k,
        excluded_below,
    })
}

/// Vectors of V_μ worth testing individually: the basis, and every line cut
/// out by the kernels of root vectors restricted to V_μ.
pub fn special_vectors(m: &IrrepModule, w: usize) -> Vec<WeightVector> {
    let dim = m.dim_of(w);
    let mut out: Vec<Vec<Q>> = (0..dim).map(|i| unit(dim, i)).collect();
    if dim > 1 {
        let mut kernels: Vec<Vec<Vec<Q>>> = Vec::new();
        for root in 0..m.ops.len() {
            let k = match m.operator(root, w) {
                Some(op) => op.nullspace(),
                None => continue,
            };
            if !k.is_empty() && k.len() < dim && !kernels.iter().any(|s| same_span(s, &k)) {
                kernels.push(k);
            }
        }
        let mut frontier = kernels.clone();
        let mut seen = kernels.clone();
        while !frontier.is_empty() && seen.len() < 512 {
            let mut next = Vec::new();
            for a in &frontier {
                for b in &kernels {
                    let c = intersect(a, b, dim);
                    if !c.is_empty() && !seen.iter().any(|s| same_span(s, &c)) {
                        seen.push(c.clone());
                        next.push(c);
                    }
                }
            }
            frontier = next;
        }
        for s in seen {
            if s.len() == 1 {
                let v = normalize_leading(&s[0]);
                if !out.contains(&v) {
                    out.push(v);
                }
            }
        }
    }
    out.into_iter().map(|coords| WeightVector { weight: w, coords }).collect()
}

fn same_span(a: &[Vec<Q>], b: &[Vec<Q>]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut e = Echelon::new(a[0].len());
    for v in a {
        e.insert(v);
    }
    b.iter().all(|v| e.contains(v))
}

fn intersect(a: &[Vec<Q>], b: &[Vec<Q>], dim: usize) -> Vec<Vec<Q>> {
    // Solve Σ x_i a_i = Σ y_j b_j.
    let mut cols: Vec<Vec<Q>> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x).collect::<Vec<_>>()));
    let null = Mat::from_cols(&cols, dim).nullspace();
    let mut e = Echelon::new(dim);
    for sol in null {
        let mut v = vec![Q::zero(); dim];
        for (x, av) in sol.iter().zip(a) {
            for (t, y) in v.iter_mut().zip(av) {
                *t += x * y;
            }
        }
        e.insert(&v);
    }
    e.basis().to_vec()
}
