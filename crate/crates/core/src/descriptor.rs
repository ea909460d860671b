//! Text descriptors for irreducible representations of products of simple
//! groups, optionally with a circle factor: `S1*A1:[1]*C3:[1,0,0]`.

use crate::error::{Error, Result};
use crate::rootsys::{Family, LieType, RootDatum, Weight};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// The circle acting by scalars.
    Circle,
    Simple { ty: LieType, labels: Weight },
}

impl Factor {
    pub fn simple(ty: LieType, labels: &[i64]) -> Factor {
        Factor::Simple { ty, labels: Weight(labels.to_vec()) }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, Factor::Simple { labels, .. } if labels.is_zero())
    }

    /// The same representation written in its canonical form: B2 as C2, D3 as
    /// A3, and the lexicographically largest labels under diagram symmetries.
    pub fn canonical(&self) -> Factor {
        let Factor::Simple { ty, labels } = self else { return Factor::Circle };
        let l = &labels.0;
        let (ty, l) = match (ty.family, ty.rank) {
            (Family::B, 2) => (LieType::c(2), vec![l[1], l[0]]),
            (Family::D, 3) => (LieType::a(3), vec![l[1], l[0], l[2]]),
            _ => (*ty, l.clone()),
        };
        let best = diagram_images(ty, &l).into_iter().max().expect("identity is an image");
        Factor::Simple { ty, labels: Weight(best) }
    }
}

/// Images of `labels` under the automorphisms of the Dynkin diagram.
fn diagram_images(ty: LieType, labels: &[i64]) -> Vec<Vec<i64>> {
    let n = ty.rank;
    let permuted = |perm: &[usize]| perm.iter().map(|&i| labels[i]).collect::<Vec<_>>();
    let mut out = vec![labels.to_vec()];
    match ty.family {
        Family::A if n > 1 => out.push(labels.iter().rev().copied().collect()),
        Family::D if n == 4 => {
            for p in [[0, 1, 3, 2], [2, 1, 0, 3], [2, 1, 3, 0], [3, 1, 0, 2], [3, 1, 2, 0]] {
                out.push(permuted(&p));
            }
        }
        Family::D if n >= 5 => {
            let mut p: Vec<usize> = (0..n).collect();
            p.swap(n - 2, n - 1);
            out.push(permuted(&p));
        }
        Family::E6 => out.push(permuted(&[5, 1, 4, 3, 2, 0])),
        _ => {}
    }
    out
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Circle => write!(f, "S1"),
            Factor::Simple { ty, labels } => write!(f, "{ty}:{labels}"),
        }
    }
}

impl FromStr for Factor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("s1") || s.eq_ignore_ascii_case("u1") {
            return Ok(Factor::Circle);
        }
        let (ty, rest) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected Type:[labels] in `{s}`")))?;
        let ty: LieType = ty.parse()?;
        let rest = rest.trim();
        let labels = if rest.starts_with('[') {
            rest.parse::<Weight>()?
        } else {
            RootDatum::new(ty).parse_weight_theta(rest)?
        };
        if labels.rank() != ty.rank {
            return Err(Error::DimensionMismatch { expected: ty.rank, got: labels.rank() });
        }
        if !labels.is_dominant() {
            return Err(Error::NotDominant(labels.to_string()));
        }
        Ok(Factor::Simple { ty, labels })
    }
}

/// An outer tensor product of irreducible factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RepDescriptor {
    pub factors: Vec<Factor>,
}

impl RepDescriptor {
    pub fn new(factors: Vec<Factor>) -> Self {
        RepDescriptor { factors }
    }

    pub fn single(ty: LieType, labels: &[i64]) -> Self {
        RepDescriptor { factors: vec![Factor::simple(ty, labels)] }
    }

    /// Canonical factors, trivial factors dropped, circle first, then sorted.
    pub fn canonical(&self) -> RepDescriptor {
        let mut factors: Vec<Factor> =
            self.factors.iter().filter(|f| !f.is_trivial()).map(Factor::canonical).collect();
        factors.sort();
        RepDescriptor { factors }
    }

    pub fn has_circle(&self) -> bool {
        self.factors.contains(&Factor::Circle)
    }

    /// The simple factors as (type, labels).
    pub fn simple_factors(&self) -> Vec<(LieType, &Weight)> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                Factor::Simple { ty, labels } => Some((*ty, labels)),
                Factor::Circle => None,
            })
            .collect()
    }

    pub fn semisimple_rank(&self) -> usize {
        self.simple_factors().iter().map(|(t, _)| t.rank).sum()
    }

    /// The semisimple part without the circle.
    pub fn semisimple_part(&self) -> RepDescriptor {
        RepDescriptor { factors: self.factors.iter().filter(|f| **f != Factor::Circle).cloned().collect() }
    }

    /// Root datum of the semisimple part and the concatenated highest weight.
    pub fn datum_and_weight(&self) -> Result<(RootDatum, Weight)> {
        let parts = self.simple_factors();
        if parts.is_empty() {
            return Err(Error::Data(format!("`{self}` has no simple factor")));
        }
        let types: Vec<LieType> = parts.iter().map(|(t, _)| *t).collect();
        let labels: Vec<i64> = parts.iter().flat_map(|(_, w)| w.0.iter().copied()).collect();
        Ok((RootDatum::product(&types), Weight(labels)))
    }
}

impl fmt::Display for RepDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "trivial");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

impl FromStr for RepDescriptor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let factors = s.split(['*', '⊗']).map(str::parse).collect::<Result<Vec<Factor>>>()?;
        Ok(RepDescriptor { factors })
    }
}

impl Serialize for RepDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RepDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The vector representation of SO(m), m ≥ 2, as a descriptor.
pub fn so_vector(m: usize) -> RepDescriptor {
    let f = |ty, l: &[i64]| Factor::simple(ty, l);
    let factors = match m {
        2 => vec![Factor::Circle],
        3 => vec![f(LieType::a(1), &[2])],
        4 => vec![f(LieType::a(1), &[1]), f(LieType::a(1), &[1])],
        5 => vec![f(LieType::c(2), &[0, 1])],
        6 => vec![f(LieType::a(3), &[0, 1, 0])],
        _ => {
            let ty = if m % 2 == 1 { LieType::b(m / 2) } else { LieType::d(m / 2) };
            vec![Factor::Simple { ty, labels: Weight::fundamental(ty.rank, 0) }]
        }
    };
    RepDescriptor::new(factors)
}

/// The vector representation of Sp(n) on ℂ^{2n}.
pub fn sp_vector(n: usize) -> RepDescriptor {
    let ty = if n == 1 { LieType::a(1) } else { LieType::c(n) };
    RepDescriptor::new(vec![Factor::Simple { ty, labels: Weight::fundamental(n, 0) }])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(s: &str) -> String {
        s.parse::<RepDescriptor>().unwrap().canonical().to_string()
    }

    #[test]
    fn round_trip() {
        for s in ["S1*A1:[1]*C3:[1,0,0]", "E8:[1,0,0,0,0,0,0,0]", "G2:[0,1]"] {
            assert_eq!(s.parse::<RepDescriptor>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn low_rank_coincidences() {
        assert_eq!(canon("B2:[1,0]"), "C2:[0,1]");
        assert_eq!(canon("D3:[1,0,0]"), "A3:[0,1,0]");
        assert_eq!(canon("D3:[0,1,0]"), canon("A3:[0,0,1]"));
    }

    #[test]
    fn diagram_symmetries() {
        assert_eq!(canon("A4:[0,0,0,1]"), "A4:[1,0,0,0]");
        assert_eq!(canon("D4:[0,0,0,1]"), "D4:[1,0,0,0]");
        assert_eq!(canon("D5:[0,0,0,0,1]"), "D5:[0,0,0,1,0]");
        assert_eq!(canon("E6:[0,0,0,0,0,1]"), "E6:[1,0,0,0,0,0]");
        assert_eq!(canon("E7:[0,0,0,0,0,0,1]"), "E7:[0,0,0,0,0,0,1]");
    }

    #[test]
    fn ordering_and_trivial_factors() {
        assert_eq!(canon("C3:[1,0,0]*A1:[0]*S1*A1:[1]"), "S1*A1:[1]*C3:[1,0,0]");
    }

    #[test]
    fn theta_input() {
        let d: RepDescriptor = "B3:1/2(θ1+θ2+θ3)".parse().unwrap();
        assert_eq!(d.to_string(), "B3:[0,0,1]");
    }

    #[test]
    fn vector_representations() {
        assert_eq!(so_vector(9).to_string(), "B4:[1,0,0,0]");
        assert_eq!(so_vector(8).to_string(), "D4:[1,0,0,0]");
        assert_eq!(sp_vector(1).to_string(), "A1:[1]");
        assert_eq!(so_vector(4).semisimple_rank(), 2);
    }
}
