//! Root systems of the compact simple types and their products.
//!
//! Conventions: Bourbaki numbering, long roots of squared length 2, and
//! `cartan[i][j] = 2(α_i, α_j)/(α_j, α_j)`, so row `i` of the Cartan matrix is
//! `α_i` written in fundamental-weight coordinates.

use crate::error::{Error, Result};
use crate::linalg::{dot, q, qr, Mat, Q};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn fixed_rank(self) -> Option<usize> {
        match self {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        }
    }

    fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::B | Family::C => 2,
            Family::D => 3,
            f => f.fixed_rank().unwrap_or(1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LieType {
    pub family: Family,
    pub rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family.fixed_rank() {
            Some(r) => r == rank,
            None => rank >= family.min_rank(),
        };
        if !ok {
            return Err(Error::InvalidRank { family: format!("{family:?}"), rank });
        }
        Ok(LieType { family, rank })
    }

    pub fn a(n: usize) -> Self {
        LieType::new(Family::A, n).expect("A_n needs n >= 1")
    }
    pub fn b(n: usize) -> Self {
        LieType::new(Family::B, n).expect("B_n needs n >= 2")
    }
    pub fn c(n: usize) -> Self {
        LieType::new(Family::C, n).expect("C_n needs n >= 2")
    }
    pub fn d(n: usize) -> Self {
        LieType::new(Family::D, n).expect("D_n needs n >= 3")
    }
    pub fn g2() -> Self {
        LieType { family: Family::G2, rank: 2 }
    }
    pub fn f4() -> Self {
        LieType { family: Family::F4, rank: 4 }
    }
    pub fn e(n: usize) -> Self {
        let family = match n {
            6 => Family::E6,
            7 => Family::E7,
            8 => Family::E8,
            _ => panic!("E_n exists for n = 6, 7, 8 only"),
        };
        LieType { family, rank: n }
    }

    /// D3 is accepted but duplicates A3.
    pub fn is_flagged(&self) -> bool {
        self.family == Family::D && self.rank == 3
    }

    /// Every simple type of rank at most `cap`, with B from 2, C from 2, D from 4.
    pub fn all_up_to(cap: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for n in 1..=cap {
            out.push(LieType::a(n));
        }
        for n in 2..=cap {
            out.push(LieType::b(n));
        }
        for n in 2..=cap {
            out.push(LieType::c(n));
        }
        for n in 4..=cap {
            out.push(LieType::d(n));
        }
        if cap >= 2 {
            out.push(LieType::g2());
        }
        if cap >= 4 {
            out.push(LieType::f4());
        }
        for n in 6..=cap.min(8) {
            out.push(LieType::e(n));
        }
        out
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        simple_type_geometry(*self).cartan()
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::B => write!(f, "B{}", self.rank),
            Family::C => write!(f, "C{}", self.rank),
            Family::D => write!(f, "D{}", self.rank),
            fam => write!(f, "{fam:?}"),
        }
    }
}

impl FromStr for LieType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad Lie type `{s}`"));
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(bad)?;
        let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
        let family = match (head.to_ascii_uppercase(), rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('C', _) => Family::C,
            ('D', _) => Family::D,
            ('G', 2) => Family::G2,
            ('F', 4) => Family::F4,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            _ => return Err(bad()),
        };
        LieType::new(family, rank)
    }
}

/// Dynkin labels.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = vec![0; rank];
        w[i] = 1;
        Weight(w)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("weight `{s}` must look like [m1,...,mr]")))?;
        if inner.trim().is_empty() {
            return Ok(Weight(Vec::new()));
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad label `{t}` in `{s}`"))))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

/// Integer coordinates in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RootVec(pub Vec<i64>);

impl RootVec {
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> RootVec {
        RootVec(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &RootVec) -> RootVec {
        RootVec(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: i64) -> RootVec {
        RootVec(self.0.iter().map(|a| a * s).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn to_q(&self) -> Vec<Q> {
        self.0.iter().map(|&c| q(c)).collect()
    }
}

impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Simple roots of one simple type inside its θ-space.
struct SimpleGeometry {
    theta_dim: usize,
    simple_theta: Vec<Vec<Q>>,
    theta_gram: Mat,
    /// Multiplier turning the θ-space product into the internal form.
    scale: Q,
}

impl SimpleGeometry {
    fn form(&self) -> Mat {
        let r = self.simple_theta.len();
        let mut b = Mat::zeros(r, r);
        for i in 0..r {
            let gi = self.theta_gram.mul_vec(&self.simple_theta[i]);
            for j in 0..r {
                b[(i, j)] = dot(&gi, &self.simple_theta[j]) * &self.scale;
            }
        }
        b
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        let b = self.form();
        let r = b.rows;
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let v = q(2) * &b[(i, j)] / &b[(j, j)];
                        v.to_integer().to_i64().expect("Cartan entries are small integers")
                    })
                    .collect()
            })
            .collect()
    }
}

fn unit(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

fn combo(dim: usize, terms: &[(usize, Q)]) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    for (i, c) in terms {
        v[*i] += c;
    }
    v
}

fn simple_type_geometry(t: LieType) -> SimpleGeometry {
    let n = t.rank;
    let diff = |dim: usize, i: usize, j: usize| combo(dim, &[(i, q(1)), (j, q(-1))]);
    let euclid = |dim: usize| (dim, Mat::identity(dim), q(1));
    let (theta_dim, simple_theta, theta_gram, scale) = match t.family {
        Family::A => {
            let (d, g, s) = euclid(n + 1);
            ((d), (0..n).map(|i| diff(d, i, i + 1)).collect(), g, s)
        }
        Family::B => {
            let (d, g, s) = euclid(n);
            let mut roots: Vec<Vec<Q>> = (0..n - 1).map(|i| diff(d, i, i + 1)).collect();
            roots.push(unit(d, n - 1));
            (d, roots, g, s)
        }
        Family::C => {
            let d = n;
            let mut roots: Vec<Vec<Q>> = (0..n - 1).map(|i| diff(d, i, i + 1)).collect();
            roots.push(combo(d, &[(n - 1, q(2))]));
            (d, roots, Mat::identity(d), qr(1, 2))
        }
        Family::D => {
            let (d, g, s) = euclid(n);
            let mut roots: Vec<Vec<Q>> = (0..n - 1).map(|i| diff(d, i, i + 1)).collect();
            roots.push(combo(d, &[(n - 2, q(1)), (n - 1, q(1))]));
            (d, roots, g, s)
        }
        Family::G2 => {
            let gram = Mat::from_rows(&[vec![qr(2, 3), q(-1)], vec![q(-1), q(2)]]);
            (2, vec![unit(2, 0), unit(2, 1)], gram, q(1))
        }
        Family::F4 => {
            let h = qr(1, 2);
            let roots = vec![
                diff(4, 1, 2),
                diff(4, 2, 3),
                unit(4, 3),
                combo(4, &[(0, h.clone()), (1, -h.clone()), (2, -h.clone()), (3, -h)]),
            ];
            (4, roots, Mat::identity(4), q(1))
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let h = qr(1, 2);
            let mut first = vec![-h.clone(); 8];
            first[0] = h.clone();
            first[7] = h;
            let mut roots = vec![first, combo(8, &[(0, q(1)), (1, q(1))])];
            for k in 3..=n {
                // α_k = θ_{k-1} − θ_{k-2}
                roots.push(diff(8, k - 2, k - 3));
            }
            (8, roots, Mat::identity(8), q(1))
        }
    };
    SimpleGeometry { theta_dim, simple_theta, theta_gram, scale }
}

/// Result of reducing a weight to the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantDual {
    pub dominant: Weight,
    pub dual: Weight,
    pub self_dual: bool,
}

/// A (possibly semisimple) root datum built from a list of simple components.
#[derive(Clone, Debug)]
pub struct RootDatum {
    components: Vec<LieType>,
    offsets: Vec<usize>,
    theta_offsets: Vec<usize>,
    rank: usize,
    theta_dim: usize,
    cartan: Vec<Vec<i64>>,
    form: Mat,
    half_len: Vec<Q>,
    roots: Vec<RootVec>,
    root_index: HashMap<RootVec, usize>,
    root_weights: Vec<Weight>,
    root_component: Vec<usize>,
    num_positive: usize,
    fund_in_roots: Mat,
    weight_form: Mat,
    simple_theta: Vec<Vec<Q>>,
    theta_gram: Mat,
    theta_proj: Mat,
}

impl RootDatum {
    pub fn new(t: LieType) -> Self {
        Self::product(&[t])
    }

    /// Root datum of a product of simple types, simple roots concatenated.
    pub fn product(types: &[LieType]) -> Self {
        let geoms: Vec<SimpleGeometry> = types.iter().map(|&t| simple_type_geometry(t)).collect();
        let rank: usize = types.iter().map(|t| t.rank).sum();
        let theta_dim: usize = geoms.iter().map(|g| g.theta_dim).sum();
        let mut offsets = Vec::new();
        let mut theta_offsets = Vec::new();
        let mut form = Mat::zeros(rank, rank);
        let mut theta_gram = Mat::zeros(theta_dim, theta_dim);
        let mut simple_theta = Vec::new();
        let (mut off, mut toff) = (0, 0);
        for g in &geoms {
            offsets.push(off);
            theta_offsets.push(toff);
            let b = g.form();
            let r = g.simple_theta.len();
            for i in 0..r {
                for j in 0..r {
                    form[(off + i, off + j)] = b[(i, j)].clone();
                }
                let mut v = vec![Q::zero(); theta_dim];
                for (k, x) in g.simple_theta[i].iter().enumerate() {
                    v[toff + k] = x.clone();
                }
                simple_theta.push(v);
            }
            for i in 0..g.theta_dim {
                for j in 0..g.theta_dim {
                    theta_gram[(toff + i, toff + j)] = &g.theta_gram[(i, j)] * &g.scale;
                }
            }
            off += r;
            toff += g.theta_dim;
        }
        let cartan: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        let v = q(2) * &form[(i, j)] / &form[(j, j)];
                        v.to_integer().to_i64().expect("small Cartan entry")
                    })
                    .collect()
            })
            .collect();
        let half_len: Vec<Q> = (0..rank).map(|i| &form[(i, i)] / q(2)).collect();

        let positives = positive_root_closure(&cartan);
        let num_positive = positives.len();
        let mut roots = positives.clone();
        roots.extend(positives.iter().map(RootVec::neg));
        let root_index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let root_weights = roots.iter().map(|r| root_to_weight_with(&cartan, r)).collect();
        let component_of = |node: usize| offsets.iter().rposition(|&o| o <= node).unwrap_or(0);
        let root_component = roots
            .iter()
            .map(|r| component_of(r.0.iter().position(|&c| c != 0).expect("roots are nonzero")))
            .collect();

        // λ_i = Σ_k M_ik α_k with M B = diag(d).
        let d = Mat::from_rows(
            &(0..rank).map(|i| (0..rank).map(|j| if i == j { half_len[i].clone() } else { Q::zero() }).collect()).collect::<Vec<_>>(),
        );
        let b_inv = form.inverse().expect("form on simple roots is nondegenerate");
        let fund_in_roots = d.mul(&b_inv);
        let weight_form = fund_in_roots.mul(&d);

        // Projection θ-space → simple-root coordinates: q = (ΘGΘᵀ)⁻¹ Θ G v.
        let theta_mat = Mat::from_rows(&simple_theta);
        let tg = theta_mat.mul(&theta_gram);
        let theta_proj = form.inverse().expect("nondegenerate").mul(&tg);

        RootDatum {
            components: types.to_vec(),
            offsets,
            theta_offsets,
            rank,
            theta_dim,
            cartan,
            form,
            half_len,
            roots,
            root_index,
            root_weights,
            root_component,
            num_positive,
            fund_in_roots,
            weight_form,
            simple_theta,
            theta_gram,
            theta_proj,
        }
    }

    pub fn components(&self) -> &[LieType] {
        &self.components
    }

    pub fn component_offset(&self, c: usize) -> usize {
        self.offsets[c]
    }

    pub fn is_simple(&self) -> bool {
        self.components.len() == 1
    }

    pub fn lie_type(&self) -> LieType {
        self.components[0]
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn theta_dim(&self) -> usize {
        self.theta_dim
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Gram matrix of the simple roots.
    pub fn form(&self) -> &Mat {
        &self.form
    }

    pub fn fundamental_weights(&self) -> Vec<Vec<Q>> {
        (0..self.rank).map(|i| self.fund_in_roots.row(i).to_vec()).collect()
    }

    pub fn weyl_vector(&self) -> Weight {
        Weight(vec![1; self.rank])
    }

    pub fn num_positive(&self) -> usize {
        self.num_positive
    }

    pub fn positive_roots(&self) -> &[RootVec] {
        &self.roots[..self.num_positive]
    }

    /// Positive roots followed by their negatives in the same order.
    pub fn all_roots(&self) -> &[RootVec] {
        &self.roots
    }

    pub fn simple_root(&self, i: usize) -> RootVec {
        let mut c = vec![0; self.rank];
        c[i] = 1;
        RootVec(c)
    }

    pub fn root_index(&self, r: &RootVec) -> Option<usize> {
        self.root_index.get(r).copied()
    }

    /// Index of `-roots[i]`.
    pub fn negative_index(&self, i: usize) -> usize {
        if i < self.num_positive {
            i + self.num_positive
        } else {
            i - self.num_positive
        }
    }

    pub fn root_weight(&self, i: usize) -> &Weight {
        &self.root_weights[i]
    }

    pub fn root_component(&self, i: usize) -> usize {
        self.root_component[i]
    }

    pub fn is_root(&self, v: &RootVec) -> bool {
        self.root_index.contains_key(v)
    }

    /// Index of the root whose weight labels equal `w`, if any.
    pub fn root_of_weight(&self, w: &Weight) -> Option<usize> {
        let coords = self.weight_to_root_coords(w);
        let ints: Option<Vec<i64>> = coords.iter().map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten()).collect();
        ints.and_then(|c| self.root_index(&RootVec(c)))
    }

    pub fn root_to_weight(&self, r: &RootVec) -> Weight {
        root_to_weight_with(&self.cartan, r)
    }

    /// Rational coordinates of a weight in the simple-root basis.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Q> {
        check_len(self.rank, w.0.len()).expect("weight length matches rank");
        (0..self.rank)
            .map(|k| {
                w.0.iter()
                    .enumerate()
                    .filter(|(_, &m)| m != 0)
                    .fold(Q::zero(), |acc, (i, &m)| acc + q(m) * &self.fund_in_roots[(i, k)])
            })
            .collect()
    }

    /// Dynkin labels of a vector given in root coordinates; `None` if not integral.
    pub fn root_coords_to_weight(&self, c: &[Q]) -> Option<Weight> {
        let labels: Option<Vec<i64>> = (0..self.rank)
            .map(|j| {
                let pair = (0..self.rank).fold(Q::zero(), |acc, k| acc + &c[k] * &self.form[(k, j)]);
                let v = pair / &self.half_len[j];
                v.is_integer().then(|| v.to_integer().to_i64()).flatten()
            })
            .collect();
        labels.map(Weight)
    }

    pub fn pair_weights(&self, x: &Weight, y: &Weight) -> Q {
        let mut acc = Q::zero();
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                if b != 0 {
                    acc += q(a * b) * &self.weight_form[(i, j)];
                }
            }
        }
        acc
    }

    pub fn pair_root_weight(&self, r: &RootVec, w: &Weight) -> Q {
        r.0.iter()
            .zip(&w.0)
            .zip(&self.half_len)
            .filter(|((&c, &m), _)| c != 0 && m != 0)
            .fold(Q::zero(), |acc, ((&c, &m), d)| acc + q(c * m) * d)
    }

    pub fn pair_roots(&self, x: &RootVec, y: &RootVec) -> Q {
        let mut acc = Q::zero();
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                if b != 0 {
                    acc += q(a * b) * &self.form[(i, j)];
                }
            }
        }
        acc
    }

    /// Form on vectors in rational root coordinates.
    pub fn pair_root_coords(&self, x: &[Q], y: &[Q]) -> Q {
        let bx = self.form.mul_vec(y);
        dot(x, &bx)
    }

    pub fn root_length2(&self, r: &RootVec) -> Q {
        self.pair_roots(r, r)
    }

    /// ⟨w, α∨⟩ = 2(w, α)/(α, α).
    pub fn coroot_pairing(&self, w: &Weight, r: &RootVec) -> i64 {
        let v = q(2) * self.pair_root_weight(r, w) / self.root_length2(r);
        assert!(v.is_integer(), "integral weight pairs integrally with coroots");
        v.to_integer().to_i64().expect("small")
    }

    pub fn is_long(&self, r: &RootVec) -> bool {
        let idx = self.root_index(r).expect("is_long needs a root");
        let comp = self.root_component[idx];
        let len = self.root_length2(r);
        self.roots
            .iter()
            .enumerate()
            .filter(|(i, _)| self.root_component[*i] == comp)
            .all(|(_, s)| self.root_length2(s) <= len)
    }

    /// Highest root of component `c` (the root of maximal height there).
    pub fn highest_root_of(&self, c: usize) -> RootVec {
        self.positive_roots()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.root_component[*i] == c)
            .max_by_key(|(_, r)| r.height())
            .map(|(_, r)| r.clone())
            .expect("every component has roots")
    }

    pub fn highest_root(&self) -> RootVec {
        self.highest_root_of(0)
    }

    pub fn reflect_simple(&self, w: &Weight, i: usize) -> Weight {
        let m = w.0[i];
        Weight(w.0.iter().zip(&self.cartan[i]).map(|(x, a)| x - m * a).collect())
    }

    pub fn reflect(&self, w: &Weight, r: &RootVec) -> Weight {
        let c = self.coroot_pairing(w, r);
        w.sub(&self.root_to_weight(r).scale(c))
    }

    pub fn reflect_root(&self, x: &RootVec, r: &RootVec) -> RootVec {
        let c = q(2) * self.pair_roots(x, r) / self.root_length2(r);
        x.sub(&r.scale(c.to_integer().to_i64().expect("integral")))
    }

    pub fn dominant(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = cur.0.iter().position(|&m| m < 0) {
            cur = self.reflect_simple(&cur, i);
        }
        cur
    }

    /// λ* = −w₀λ, the highest weight of the dual representation.
    pub fn dual(&self, w: &Weight) -> Weight {
        self.dominant(&w.neg())
    }

    pub fn dominant_and_dual(&self, w: &Weight) -> DominantDual {
        let dominant = self.dominant(w);
        let dual = self.dual(&dominant);
        let self_dual = dual == dominant;
        DominantDual { dominant, dual, self_dual }
    }

    /// The α-string through `beta` inside the roots: (p, q) with β+pα, …, β−qα.
    pub fn root_string(&self, beta: &RootVec, alpha: &RootVec) -> (i64, i64) {
        string_in(beta, alpha, |v| self.is_root(v))
    }

    /// Image of a root-coordinate vector in the θ-space.
    pub fn to_theta(&self, coords: &[Q]) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.theta_dim];
        for (c, img) in coords.iter().zip(&self.simple_theta) {
            if c.is_zero() {
                continue;
            }
            for (x, y) in v.iter_mut().zip(img) {
                *x += c * y;
            }
        }
        v
    }

    pub fn root_to_theta(&self, r: &RootVec) -> Vec<Q> {
        self.to_theta(&r.to_q())
    }

    pub fn weight_to_theta(&self, w: &Weight) -> Vec<Q> {
        self.to_theta(&self.weight_to_root_coords(w))
    }

    /// Orthogonal projection of a θ-vector onto the root span, in root coordinates.
    pub fn from_theta(&self, v: &[Q]) -> Result<Vec<Q>> {
        check_len(self.theta_dim, v.len())?;
        Ok(self.theta_proj.mul_vec(v))
    }

    pub fn theta_to_weight(&self, v: &[Q]) -> Result<Weight> {
        let c = self.from_theta(v)?;
        self.root_coords_to_weight(&c)
            .ok_or_else(|| Error::Parse(format!("θ-vector {} is not an integral weight", fmt_theta(v))))
    }

    pub fn theta_to_root(&self, v: &[Q]) -> Result<RootVec> {
        let c = self.from_theta(v)?;
        let ints: Option<Vec<i64>> = c.iter().map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten()).collect();
        ints.map(RootVec).ok_or_else(|| Error::Parse(format!("θ-vector {} is not in the root lattice", fmt_theta(v))))
    }

    /// θ-coordinates reordered by significance for lexicographic comparison.
    pub fn theta_lex_key(&self, r: &RootVec) -> Vec<Q> {
        let t = self.root_to_theta(r);
        let mut key = Vec::with_capacity(t.len());
        for (c, ty) in self.components.iter().enumerate() {
            let start = self.theta_offsets[c];
            let len = if c + 1 < self.components.len() { self.theta_offsets[c + 1] - start } else { self.theta_dim - start };
            let slice = &t[start..start + len];
            if matches!(ty.family, Family::E6 | Family::E7 | Family::E8) {
                key.extend(slice.iter().rev().cloned());
            } else {
                key.extend(slice.iter().cloned());
            }
        }
        key
    }

    /// Node indices mapping to this datum's components.
    pub fn component_nodes(&self, c: usize) -> std::ops::Range<usize> {
        let start = self.offsets[c];
        start..start + self.components[c].rank
    }

    pub fn theta_gram(&self) -> &Mat {
        &self.theta_gram
    }
}

fn check_len(expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got })
    }
}

fn root_to_weight_with(cartan: &[Vec<i64>], r: &RootVec) -> Weight {
    let n = cartan.len();
    Weight((0..n).map(|j| (0..n).map(|i| r.0[i] * cartan[i][j]).sum()).collect())
}

/// (p, q) for the longest string `x+pα, …, x−qα` with every member in the set.
pub fn string_in<F: Fn(&RootVec) -> bool>(x: &RootVec, alpha: &RootVec, member: F) -> (i64, i64) {
    let mut p = 0;
    while member(&x.add(&alpha.scale(p + 1))) {
        p += 1;
    }
    let mut qd = 0;
    while member(&x.sub(&alpha.scale(qd + 1))) {
        qd += 1;
    }
    (p, qd)
}

/// Positive roots by α-string closure, sorted by (height, coordinates).
fn positive_root_closure(cartan: &[Vec<i64>]) -> Vec<RootVec> {
    let n = cartan.len();
    let mut all: HashMap<RootVec, ()> = HashMap::new();
    let mut layer: Vec<RootVec> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            RootVec(c)
        })
        .collect();
    for r in &layer {
        all.insert(r.clone(), ());
    }
    let mut out = layer.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                let mut ai = vec![0; n];
                ai[i] = 1;
                let alpha = RootVec(ai);
                // p: how far down the α_i-string goes from β.
                let mut p = 0;
                loop {
                    let down = beta.sub(&alpha.scale(p + 1));
                    if all.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let up = beta.add(&alpha);
                    if !all.contains_key(&up) {
                        all.insert(up.clone(), ());
                        next.push(up);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Human-readable θ-expression, e.g. `θ1-θ3` or `1/2(θ1+θ2)`-style rationals.
pub fn fmt_theta(v: &[Q]) -> String {
    let mut s = String::new();
    for (i, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else if s.is_empty() { "" } else { "+" };
        let a = c.abs();
        let coef = if a.is_one() { String::new() } else { a.to_string() };
        s.push_str(&format!("{sign}{coef}θ{}", i + 1));
    }
    if s.is_empty() {
        "0".to_string()
    } else {
        s
    }
}


/// Symbol in a linear expression: `θi` (θ-space) or `αi` (simple root).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symbol {
    Theta(usize),
    Alpha(usize),
}

/// Parses expressions such as `θ8-θ7+θ6+θ5`, `1/2(θ1+θ2-θ3)`, `3α1+2α2`.
/// ASCII `t1` and `a1` are accepted too. Indices are returned 0-based.
pub fn parse_linear(expr: &str) -> Result<Vec<(Symbol, Q)>> {
    let toks: Vec<char> = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let out = parse_sum(&toks, &mut pos, expr)?;
    if pos != toks.len() {
        return Err(Error::Parse(format!("trailing input in `{expr}`")));
    }
    Ok(out)
}

fn parse_sum(t: &[char], pos: &mut usize, src: &str) -> Result<Vec<(Symbol, Q)>> {
    let mut out = Vec::new();
    let mut first = true;
    while *pos < t.len() && t[*pos] != ')' {
        let mut sign = Q::one();
        match t[*pos] {
            '+' => *pos += 1,
            '-' | '−' => {
                sign = -sign;
                *pos += 1;
            }
            _ if !first => return Err(Error::Parse(format!("expected + or - in `{src}`"))),
            _ => {}
        }
        first = false;
        let coef = parse_coef(t, pos, src)?.unwrap_or_else(Q::one) * sign;
        if *pos < t.len() && t[*pos] == '(' {
            *pos += 1;
            let inner = parse_sum(t, pos, src)?;
            if *pos >= t.len() || t[*pos] != ')' {
                return Err(Error::Parse(format!("unbalanced parenthesis in `{src}`")));
            }
            *pos += 1;
            out.extend(inner.into_iter().map(|(s, c)| (s, c * &coef)));
            continue;
        }
        let kind = t.get(*pos).copied().ok_or_else(|| Error::Parse(format!("dangling coefficient in `{src}`")))?;
        let ctor: fn(usize) -> Symbol = match kind {
            'θ' | 't' => Symbol::Theta,
            'α' | 'a' => Symbol::Alpha,
            _ => return Err(Error::Parse(format!("unexpected `{kind}` in `{src}`"))),
        };
        *pos += 1;
        let start = *pos;
        while *pos < t.len() && t[*pos].is_ascii_digit() {
            *pos += 1;
        }
        let idx: usize = t[start..*pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse(format!("missing index in `{src}`")))?;
        if idx == 0 {
            return Err(Error::Parse(format!("indices start at 1 in `{src}`")));
        }
        out.push((ctor(idx - 1), coef));
    }
    Ok(out)
}

fn parse_coef(t: &[char], pos: &mut usize, src: &str) -> Result<Option<Q>> {
    if *pos < t.len() && t[*pos] == '½' {
        *pos += 1;
        return Ok(Some(qr(1, 2)));
    }
    let read_int = |pos: &mut usize| -> Option<i64> {
        let start = *pos;
        while *pos < t.len() && t[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start != *pos).then(|| t[start..*pos].iter().collect::<String>().parse().ok()).flatten()
    };
    let Some(num) = read_int(pos) else { return Ok(None) };
    if *pos < t.len() && t[*pos] == '/' {
        *pos += 1;
        let den = read_int(pos).ok_or_else(|| Error::Parse(format!("bad fraction in `{src}`")))?;
        if den == 0 {
            return Err(Error::Parse(format!("zero denominator in `{src}`")));
        }
        return Ok(Some(qr(num, den)));
    }
    Ok(Some(q(num)))
}

impl RootDatum {
    /// Root coordinates of a parsed θ/α expression.
    pub fn parse_vector(&self, expr: &str) -> Result<Vec<Q>> {
        let terms = parse_linear(expr)?;
        let mut theta = vec![Q::zero(); self.theta_dim];
        let mut alpha = vec![Q::zero(); self.rank];
        for (s, c) in terms {
            match s {
                Symbol::Theta(i) if i < self.theta_dim => theta[i] += c,
                Symbol::Alpha(i) if i < self.rank => alpha[i] += c,
                _ => return Err(Error::Parse(format!("index out of range in `{expr}`"))),
            }
        }
        let mut coords = self.from_theta(&theta)?;
        for (x, a) in coords.iter_mut().zip(alpha) {
            *x += a;
        }
        Ok(coords)
    }

    pub fn parse_root(&self, expr: &str) -> Result<RootVec> {
        let c = self.parse_vector(expr)?;
        let ints: Option<Vec<i64>> = c.iter().map(|x| x.is_integer().then(|| x.to_integer().to_i64()).flatten()).collect();
        ints.map(RootVec).ok_or_else(|| Error::Parse(format!("`{expr}` is not in the root lattice")))
    }

    pub fn parse_weight_theta(&self, expr: &str) -> Result<Weight> {
        let c = self.parse_vector(expr)?;
        self.root_coords_to_weight(&c).ok_or_else(|| Error::Parse(format!("`{expr}` is not an integral weight")))
    }
}
