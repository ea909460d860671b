//! Maximal sets of strongly orthogonal positive roots.
//!
//! Start from the highest root, pass to the roots orthogonal to it and
//! repeat. When the orthogonal roots split, a lone `{±ζ}` piece is taken
//! before the irreducible remainder. If every piece has rank one (D2 = A1×A1
//! at the bottom of even D-chains, or the two A1's of odd B), the pieces are
//! taken in decreasing θ-lexicographic order.

use crate::error::{Error, Result};
use crate::linalg::{Mat, Q};
use crate::rootsys::{RootDatum, RootVec, Weight};
use num_traits::Zero;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StepTag {
    HighestRoot,
    ZetaBranch,
    RankOneSplit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SorthStep {
    pub tag: StepTag,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StronglyOrthogonalSet {
    pub betas: Vec<RootVec>,
    pub provenance: Vec<SorthStep>,
}

impl StronglyOrthogonalSet {
    pub fn len(&self) -> usize {
        self.betas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.betas.is_empty()
    }
}

pub fn build_sorth(d: &RootDatum) -> Result<StronglyOrthogonalSet> {
    let mut out = StronglyOrthogonalSet { betas: Vec::new(), provenance: Vec::new() };
    for c in 0..d.components().len() {
        let sub: Vec<usize> = (0..d.num_positive()).filter(|&i| d.root_component(i) == c).collect();
        descend(d, sub, 0, &mut out)?;
    }
    Ok(out)
}

fn push(out: &mut StronglyOrthogonalSet, beta: RootVec, tag: StepTag, depth: usize) {
    out.betas.push(beta);
    out.provenance.push(SorthStep { tag, depth });
}

/// `sub` holds positive-root indices of an irreducible closed subsystem.
fn descend(d: &RootDatum, sub: Vec<usize>, depth: usize, out: &mut StronglyOrthogonalSet) -> Result<()> {
    let top = highest_of(d, &sub)?;
    let beta = d.positive_roots()[top].clone();
    push(out, beta.clone(), StepTag::HighestRoot, depth);

    let orth: Vec<usize> = sub.into_iter().filter(|&i| d.pair_roots(&d.positive_roots()[i], &beta).is_zero()).collect();
    let mut comps = components(d, &orth);
    match comps.len() {
        0 => Ok(()),
        1 => descend(d, comps.pop().expect("one component"), depth + 1, out),
        _ => {
            let (lone, big): (Vec<Vec<usize>>, Vec<Vec<usize>>) = comps.into_iter().partition(|c| c.len() == 1);
            match (lone.len(), big.len()) {
                (1, 1) => {
                    push(out, d.positive_roots()[lone[0][0]].clone(), StepTag::ZetaBranch, depth + 1);
                    descend(d, big.into_iter().next().expect("one big component"), depth + 1, out)
                }
                (_, 0) => {
                    let mut roots: Vec<RootVec> = lone.iter().map(|c| d.positive_roots()[c[0]].clone()).collect();
                    roots.sort_by_key(|r| std::cmp::Reverse(d.theta_lex_key(r)));
                    for (k, r) in roots.into_iter().enumerate() {
                        let tag = if k == 0 { StepTag::ZetaBranch } else { StepTag::RankOneSplit };
                        push(out, r, tag, depth + 1);
                    }
                    Ok(())
                }
                (l, b) => Err(Error::StructuralSurprise(format!(
                    "orthogonal complement of {beta} has {l} rank-one and {b} larger components"
                ))),
            }
        }
    }
}

/// Connected components under "non-orthogonal".
fn components(d: &RootDatum, roots: &[usize]) -> Vec<Vec<usize>> {
    let n = roots.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let pos = d.positive_roots();
    for a in 0..n {
        for b in a + 1..n {
            if !d.pair_roots(&pos[roots[a]], &pos[roots[b]]).is_zero() {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
    for a in 0..n {
        let r = find(&mut parent, a);
        match groups.iter_mut().find(|(k, _)| *k == r) {
            Some((_, g)) => g.push(roots[a]),
            None => groups.push((r, vec![roots[a]])),
        }
    }
    groups.into_iter().map(|(_, g)| g).collect()
}

/// The unique long root of `sub` that is dominant for the simple system
/// that `sub` inherits from the ambient positive roots.
fn highest_of(d: &RootDatum, sub: &[usize]) -> Result<usize> {
    let pos = d.positive_roots();
    let members: std::collections::HashSet<&RootVec> = sub.iter().map(|&i| &pos[i]).collect();
    let simples: Vec<usize> = sub
        .iter()
        .copied()
        .filter(|&i| !sub.iter().any(|&j| j != i && members.contains(&pos[i].sub(&pos[j]))))
        .collect();
    let max_len = sub.iter().map(|&i| d.root_length2(&pos[i])).max().expect("nonempty subsystem");
    let dominant: Vec<usize> = sub
        .iter()
        .copied()
        .filter(|&i| d.root_length2(&pos[i]) == max_len)
        .filter(|&i| simples.iter().all(|&s| d.pair_roots(&pos[i], &pos[s]) >= Q::zero()))
        .collect();
    match dominant.as_slice() {
        [one] => Ok(*one),
        _ => Err(Error::StructuralSurprise(format!("{} dominant long roots in a subsystem", dominant.len()))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SorthReport {
    /// `strongly_orthogonal[i][j]`: neither β_i+β_j nor β_i−β_j is a root (true on the diagonal).
    pub strongly_orthogonal: Vec<Vec<bool>>,
    pub sends_rho_to_minus_rho: bool,
    pub fundamental_in_span: Vec<bool>,
}

impl SorthReport {
    pub fn valid(&self) -> bool {
        self.sends_rho_to_minus_rho && self.strongly_orthogonal.iter().flatten().all(|&x| x)
    }
}

pub fn verify_sorth(d: &RootDatum, b: &StronglyOrthogonalSet) -> SorthReport {
    let s = b.betas.len();
    let strongly_orthogonal = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| {
                    i == j || {
                        let (x, y) = (&b.betas[i], &b.betas[j]);
                        !d.is_root(&x.add(y)) && !d.is_root(&x.sub(y)) && !x.sub(y).is_zero()
                    }
                })
                .collect()
        })
        .collect();
    let rho = d.weyl_vector();
    let image = b.betas.iter().rev().fold(rho.clone(), |w, beta| d.reflect(&w, beta));
    let fundamental_in_span = (0..d.rank()).map(|i| in_span(d, b, &Weight::fundamental(d.rank(), i))).collect();
    SorthReport { strongly_orthogonal, sends_rho_to_minus_rho: image == rho.neg(), fundamental_in_span }
}

/// Whether the weight lies in the rational span of B.
pub fn in_span(d: &RootDatum, b: &StronglyOrthogonalSet, w: &Weight) -> bool {
    span_coefficients(d, b, w).is_some()
}

pub fn span_coefficients(d: &RootDatum, b: &StronglyOrthogonalSet, w: &Weight) -> Option<Vec<Q>> {
    if b.betas.is_empty() {
        return w.is_zero().then(Vec::new);
    }
    let cols: Vec<Vec<Q>> = b.betas.iter().map(RootVec::to_q).collect();
    let m = Mat::from_cols(&cols, d.rank());
    m.solve(&d.weight_to_root_coords(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{fmt_theta, LieType};

    fn theta_strings(t: LieType) -> Vec<String> {
        let d = RootDatum::new(t);
        let b = build_sorth(&d).unwrap();
        b.betas.iter().map(|r| fmt_theta(&d.root_to_theta(r))).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(theta_strings(LieType::c(3)), ["2θ1", "2θ2", "2θ3"]);
        assert_eq!(theta_strings(LieType::f4()), ["θ1+θ2", "θ1-θ2", "θ3+θ4", "θ3-θ4"]);
        assert_eq!(theta_strings(LieType::b(3)), ["θ1+θ2", "θ1-θ2", "θ3"]);
        assert_eq!(theta_strings(LieType::a(4)), ["θ1-θ5", "θ2-θ4"]);
        let g2 = RootDatum::new(LieType::g2());
        let b = build_sorth(&g2).unwrap();
        assert_eq!(b.betas, vec![RootVec(vec![3, 2]), RootVec(vec![1, 0])]);
    }

    #[test]
    fn every_type_validates() {
        for t in LieType::all_up_to(8) {
            let d = RootDatum::new(t);
            let b = build_sorth(&d).unwrap_or_else(|e| panic!("{t}: {e}"));
            let rep = verify_sorth(&d, &b);
            assert!(rep.valid(), "{t}");
        }
    }

    #[test]
    fn a2_first_fundamental_not_in_span() {
        let d = RootDatum::new(LieType::a(2));
        let b = build_sorth(&d).unwrap();
        assert!(!in_span(&d, &b, &Weight(vec![1, 0])));
        assert!(in_span(&d, &b, &Weight(vec![1, 1])));
    }
}
