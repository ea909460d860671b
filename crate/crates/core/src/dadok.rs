//! Dadok's invariant `k(λ)` and the real / quaternionic / complex trichotomy.

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rootsys::{RootDatum, Weight};
use crate::sorth::{in_span, StronglyOrthogonalSet};
use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ReprType {
    Real,
    Quaternionic,
    Complex,
}

impl fmt::Display for ReprType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KValue {
    pub k: Q,
    pub n_parts: Vec<Q>,
    pub in_span_b: bool,
}

impl KValue {
    /// `k` as an integer when it is one.
    pub fn integer(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        self.k.is_integer().then(|| self.k.to_integer().to_i64()).flatten()
    }
}

impl Serialize for KValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("KValue", 3)?;
        st.serialize_field("k", &self.k.to_string())?;
        st.serialize_field("n_parts", &self.n_parts.iter().map(ToString::to_string).collect::<Vec<_>>())?;
        st.serialize_field("in_span_b", &self.in_span_b)?;
        st.end()
    }
}

/// n_i = ((λ, β_i) − (s₀λ, β_i)) / (β_i, β_i) with s₀λ = −λ*.
pub fn k_invariant(d: &RootDatum, b: &StronglyOrthogonalSet, lambda: &Weight) -> KValue {
    let sum = lambda.add(&d.dual(lambda));
    let n_parts: Vec<Q> = b.betas.iter().map(|beta| d.pair_root_weight(beta, &sum) / d.root_length2(beta)).collect();
    let k = n_parts.iter().fold(Q::zero(), |a, x| a + x);
    KValue { k, n_parts, in_span_b: in_span(d, b, lambda) }
}

pub fn repr_type(d: &RootDatum, b: &StronglyOrthogonalSet, lambda: &Weight) -> Result<ReprType> {
    let kv = k_invariant(d, b, lambda);
    let self_dual = d.dual(lambda) == *lambda;
    if kv.in_span_b != self_dual {
        return Err(Error::InconsistentReality(lambda.to_string()));
    }
    if !kv.in_span_b {
        return Ok(ReprType::Complex);
    }
    let k = kv.k.to_integer();
    if !kv.k.is_integer() {
        return Err(Error::InconsistentReality(format!("{lambda} has non-integral k = {}", kv.k)));
    }
    Ok(if k.is_even() { ReprType::Real } else { ReprType::Quaternionic })
}

/// k of each fundamental weight, in node order.
pub fn fundamental_k_values(d: &RootDatum, b: &StronglyOrthogonalSet) -> Vec<Q> {
    (0..d.rank()).map(|i| k_invariant(d, b, &Weight::fundamental(d.rank(), i)).k).collect()
}

/// Dominant weights with k equal to `target`, by k-linearity over the fundamental values.
pub fn weights_with_k(d: &RootDatum, b: &StronglyOrthogonalSet, target: &Q) -> Vec<Weight> {
    let ks = fundamental_k_values(d, b);
    assert!(ks.iter().all(|k| k > &Q::zero()), "fundamental k-values are positive");
    let mut out = Vec::new();
    let mut labels = vec![0i64; ks.len()];
    fn rec(i: usize, left: Q, ks: &[Q], labels: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if i == ks.len() {
            if left.is_zero() {
                out.push(Weight(labels.clone()));
            }
            return;
        }
        let mut m = 0;
        let mut rem = left.clone();
        while rem >= Q::zero() {
            labels[i] = m;
            rec(i + 1, rem.clone(), ks, labels, out);
            m += 1;
            rem -= &ks[i];
        }
        labels[i] = 0;
    }
    rec(0, target.clone(), &ks, &mut labels, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::rootsys::LieType;
    use crate::sorth::build_sorth;

    fn ks(t: LieType) -> Vec<Q> {
        let d = RootDatum::new(t);
        let b = build_sorth(&d).unwrap();
        fundamental_k_values(&d, &b)
    }

    #[test]
    fn e8_row() {
        let want: Vec<Q> = [4, 8, 10, 14, 12, 8, 6, 2].iter().map(|&x| q(x)).collect();
        assert_eq!(ks(LieType::e(8)), want);
    }

    #[test]
    fn types() {
        let c3 = RootDatum::new(LieType::c(3));
        let b = build_sorth(&c3).unwrap();
        assert_eq!(repr_type(&c3, &b, &Weight(vec![1, 0, 0])).unwrap(), ReprType::Quaternionic);
        let a2 = RootDatum::new(LieType::a(2));
        let b = build_sorth(&a2).unwrap();
        assert_eq!(repr_type(&a2, &b, &Weight(vec![1, 0])).unwrap(), ReprType::Complex);
        let b4 = RootDatum::new(LieType::b(4));
        let b = build_sorth(&b4).unwrap();
        assert_eq!(repr_type(&b4, &b, &Weight(vec![1, 0, 0, 0])).unwrap(), ReprType::Real);
        assert_eq!(k_invariant(&b4, &b, &Weight::zero(4)).k, q(0));
    }

    #[test]
    fn reality_criteria_agree_up_to_rank_8() {
        for t in LieType::all_up_to(8) {
            let d = RootDatum::new(t);
            let b = build_sorth(&d).unwrap();
            for i in 0..d.rank() {
                repr_type(&d, &b, &Weight::fundamental(d.rank(), i)).unwrap();
            }
        }
    }
}
