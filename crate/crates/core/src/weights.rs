//! Weight systems: Freudenthal multiplicities, Weyl dimensions, Weyl-orbit
//! sizes and the count of ways to write a vector as a root or a sum of two roots.

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::rootsys::{fmt_theta, RootDatum, Weight};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;
use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

pub const DEFAULT_WEIGHT_CAP: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub highest: Weight,
    pub dominant_mults: BTreeMap<Weight, u64>,
    pub total_dim: u64,
}

impl WeightSystem {
    pub fn mult(&self, d: &RootDatum, w: &Weight) -> u64 {
        self.dominant_mults.get(&d.dominant(w)).copied().unwrap_or(0)
    }

    pub fn contains(&self, d: &RootDatum, w: &Weight) -> bool {
        self.dominant_mults.contains_key(&d.dominant(w))
    }

    /// Every weight with its multiplicity, expanded from the dominant ones.
    pub fn all_weights(&self, d: &RootDatum, cap: usize) -> Result<Vec<(Weight, u64)>> {
        let mut out = Vec::new();
        for (dom, &m) in &self.dominant_mults {
            for w in weyl_orbit(d, dom, cap.saturating_sub(out.len()))? {
                out.push((w, m));
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, d: &RootDatum) -> serde_json::Value {
        let mut dom: Vec<(&Weight, &u64)> = self.dominant_mults.iter().collect();
        dom.sort_by_key(|(w, _)| depth(d, &self.highest, w));
        serde_json::json!({
            "type": d.components().iter().map(ToString::to_string).collect::<Vec<_>>().join("*"),
            "lambda": self.highest.0,
            "dim": self.total_dim,
            "dominant": dom.iter().map(|(w, m)| serde_json::json!({"w": w.0, "m": m})).collect::<Vec<_>>(),
        })
    }
}

/// Height of λ − μ.
fn depth(d: &RootDatum, lambda: &Weight, mu: &Weight) -> i64 {
    let c = d.weight_to_root_coords(&lambda.sub(mu));
    let h = c.iter().fold(Q::zero(), |a, x| a + x);
    h.to_integer().to_i64().expect("root lattice difference")
}

pub fn weyl_dim(d: &RootDatum, lambda: &Weight) -> BigUint {
    let rho = d.weyl_vector();
    let shifted = lambda.add(&rho);
    let prod = d.positive_roots().iter().fold(BigRational::one(), |acc, a| {
        acc * d.pair_root_weight(a, &shifted) / d.pair_root_weight(a, &rho)
    });
    assert!(prod.is_integer(), "Weyl dimension is an integer");
    prod.to_integer().to_biguint().expect("positive")
}

pub fn weyl_dim_u64(d: &RootDatum, lambda: &Weight) -> Option<u64> {
    weyl_dim(d, lambda).to_u64()
}

/// |W| = Π_{α>0} (ht α + 1)/ht α over the roots supported on `nodes`.
fn weyl_order_on(d: &RootDatum, nodes: &[usize]) -> BigUint {
    let prod = d
        .positive_roots()
        .iter()
        .filter(|r| r.0.iter().enumerate().all(|(i, &c)| c == 0 || nodes.contains(&i)))
        .fold(BigRational::one(), |acc, r| acc * q(r.height() + 1) / q(r.height()));
    prod.to_integer().to_biguint().expect("positive")
}

pub fn weyl_group_order(d: &RootDatum) -> BigUint {
    weyl_order_on(d, &(0..d.rank()).collect::<Vec<_>>())
}

/// Size of the Weyl orbit of a dominant weight: |W| / |W_J| with J its zero labels.
pub fn orbit_size(d: &RootDatum, dominant: &Weight) -> u64 {
    let zeros: Vec<usize> = (0..d.rank()).filter(|&i| dominant.0[i] == 0).collect();
    (weyl_group_order(d) / weyl_order_on(d, &zeros)).to_u64().expect("orbit fits in u64")
}

/// Explicit Weyl orbit by simple reflections, refusing to exceed `cap` elements.
pub fn weyl_orbit(d: &RootDatum, w: &Weight, cap: usize) -> Result<Vec<Weight>> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut order = Vec::new();
    let mut queue = VecDeque::from([w.clone()]);
    seen.insert(w.clone());
    while let Some(x) = queue.pop_front() {
        order.push(x.clone());
        if order.len() > cap {
            return Err(Error::WeightCapExceeded { count: order.len(), cap });
        }
        for i in 0..d.rank() {
            if x.0[i] != 0 {
                let y = d.reflect_simple(&x, i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
    }
    Ok(order)
}

/// Dominant weights of V_λ: walk down from λ by positive roots, staying dominant.
pub fn dominant_weights(d: &RootDatum, lambda: &Weight) -> Vec<Weight> {
    let mut seen: HashSet<Weight> = HashSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    let mut out = Vec::new();
    while let Some(mu) = queue.pop_front() {
        out.push(mu.clone());
        for i in 0..d.num_positive() {
            let nu = mu.sub(d.root_weight(i));
            if nu.is_dominant() && seen.insert(nu.clone()) {
                queue.push_back(nu);
            }
        }
    }
    out.sort_by_key(|w| depth(d, lambda, w));
    out
}

pub fn weight_system(d: &RootDatum, lambda: &Weight, dim_cap: u64) -> Result<WeightSystem> {
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let dim = weyl_dim(d, lambda);
    if dim > BigUint::from(dim_cap) {
        return Err(Error::DimCapExceeded { dim: dim.to_string(), cap: dim_cap });
    }
    let dominant = dominant_weights(d, lambda);
    let rho = d.weyl_vector();
    let top = lambda.add(&rho);
    let top_norm = d.pair_weights(&top, &top);
    let mut mults: HashMap<Weight, u64> = HashMap::new();
    mults.insert(lambda.clone(), 1);
    for nu in dominant.iter().skip(1) {
        let mut sum = Q::zero();
        for a in 0..d.num_positive() {
            let alpha = &d.positive_roots()[a];
            let aw = d.root_weight(a);
            let mut shifted = nu.add(aw);
            while let Some(&m) = mults.get(&d.dominant(&shifted)) {
                sum += d.pair_root_weight(alpha, &shifted) * q(m as i64);
                shifted = shifted.add(aw);
            }
        }
        let nr = nu.add(&rho);
        let c = &top_norm - d.pair_weights(&nr, &nr);
        assert!(!c.is_zero(), "c(ν) vanishes only at ν = λ");
        let m = q(2) * sum / c;
        assert!(m.is_integer(), "Freudenthal multiplicity must be integral");
        let m = m.to_integer().to_u64().expect("nonnegative multiplicity");
        if m > 0 {
            mults.insert(nu.clone(), m);
        }
    }
    let dominant_mults: BTreeMap<Weight, u64> = mults.into_iter().collect();
    let total_dim = dominant_mults.iter().map(|(w, m)| orbit_size(d, w) * m).sum();
    Ok(WeightSystem { highest: lambda.clone(), dominant_mults, total_dim })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Decomposition {
    Root(usize),
    Pair(usize, usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionCount {
    pub n: u64,
    pub witnesses: Vec<Decomposition>,
}

impl DecompositionCount {
    pub fn describe(&self, d: &RootDatum) -> Vec<String> {
        let th = |i: usize| fmt_theta(&d.root_to_theta(&d.all_roots()[i]));
        self.witnesses
            .iter()
            .map(|w| match w {
                Decomposition::Root(i) => th(*i),
                Decomposition::Pair(i, j) => format!("({})+({})", th(*i), th(*j)),
            })
            .collect()
    }
}

/// Ways to write `v` as a root or an unordered sum of two roots (α = β allowed).
pub fn decomposition_count(d: &RootDatum, v: &Weight) -> DecompositionCount {
    let mut witnesses = Vec::new();
    if let Some(i) = d.root_of_weight(v) {
        witnesses.push(Decomposition::Root(i));
    }
    let lookup: HashMap<&Weight, usize> = (0..d.all_roots().len()).map(|i| (d.root_weight(i), i)).collect();
    for i in 0..d.all_roots().len() {
        let rest = v.sub(d.root_weight(i));
        if let Some(&j) = lookup.get(&rest) {
            if i <= j {
                witnesses.push(Decomposition::Pair(i, j));
            }
        }
    }
    DecompositionCount { n: witnesses.len() as u64, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::LieType;

    #[test]
    fn dims() {
        let g2 = RootDatum::new(LieType::g2());
        assert_eq!(weyl_dim_u64(&g2, &Weight(vec![1, 0])), Some(7));
        let e7 = RootDatum::new(LieType::e(7));
        assert_eq!(weyl_dim_u64(&e7, &Weight(vec![0, 0, 0, 0, 0, 0, 1])), Some(56));
        let b4 = RootDatum::new(LieType::b(4));
        assert_eq!(weyl_dim_u64(&b4, &Weight(vec![0, 0, 0, 1])), Some(16));
    }

    #[test]
    fn f4_26_has_zero_weight_twice() {
        let f4 = RootDatum::new(LieType::f4());
        let ws = weight_system(&f4, &Weight(vec![0, 0, 0, 1]), 4000).unwrap();
        assert_eq!(ws.total_dim, 26);
        assert_eq!(ws.mult(&f4, &Weight::zero(4)), 2);
    }

    #[test]
    fn c_n_second_fundamental() {
        for n in 2..=6 {
            let d = RootDatum::new(LieType::c(n));
            let ws = weight_system(&d, &Weight::fundamental(n, 1), 100_000).unwrap();
            assert_eq!(ws.mult(&d, &Weight::zero(n)), n as u64 - 1);
        }
    }

    #[test]
    fn weyl_orders() {
        assert_eq!(weyl_group_order(&RootDatum::new(LieType::g2())), BigUint::from(12u32));
        assert_eq!(weyl_group_order(&RootDatum::new(LieType::e(8))), BigUint::from(696_729_600u64));
    }

    /// Independent count over E7's positive roots written out in θ-coordinates:
    /// ±θi+θj (i<j≤6), θ8−θ7, ½(θ8−θ7+Σεiθi) with Πεi = −1. Vectors are doubled.
    fn e7_count_from_theta_listing(target: [i64; 8]) -> u64 {
        let mut pos: Vec<[i64; 8]> = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                for s in [-1, 1] {
                    let mut v = [0; 8];
                    v[i] = 2 * s;
                    v[j] = 2;
                    pos.push(v);
                }
            }
        }
        pos.push([0, 0, 0, 0, 0, 0, -2, 2]);
        for mask in 0..64u32 {
            if mask.count_ones() % 2 == 1 {
                let mut v = [0, 0, 0, 0, 0, 0, -1, 1];
                for (i, x) in v.iter_mut().enumerate().take(6) {
                    *x = if mask & (1 << i) != 0 { -1 } else { 1 };
                }
                pos.push(v);
            }
        }
        let mut all = pos.clone();
        all.extend(pos.iter().map(|v| v.map(|x| -x)));
        let t2 = target.map(|x| 2 * x);
        let mut n = u64::from(all.contains(&t2));
        for a in 0..all.len() {
            for b in a..all.len() {
                let s: Vec<i64> = (0..8).map(|k| all[a][k] + all[b][k]).collect();
                if s == t2 {
                    n += 1;
                }
            }
        }
        n
    }

    #[test]
    fn n_counts() {
        let c4 = RootDatum::new(LieType::c(4));
        let v = c4.parse_weight_theta("2θ1+2θ2").unwrap();
        assert_eq!(decomposition_count(&c4, &v).n, 2);
        let e7 = RootDatum::new(LieType::e(7));
        let v = e7.parse_weight_theta("θ8-θ7+θ6+θ5").unwrap();
        assert_eq!(decomposition_count(&e7, &v).n, e7_count_from_theta_listing([0, 0, 0, 0, 1, 1, -1, 1]));
        let f4 = RootDatum::new(LieType::f4());
        let v = f4.parse_weight_theta("2θ1").unwrap();
        let dc = decomposition_count(&f4, &v);
        assert_eq!(dc.n, 4);
        assert!(!dc.witnesses.iter().any(|w| matches!(w, Decomposition::Root(_))));
    }
}
