//! Loaders for the reference tables shipped in `data/`.

use crate::descriptor::RepDescriptor;
use crate::error::{Error, Result};
use serde::de::DeserializeOwned;
use serde::Deserialize;
use std::collections::{BTreeMap, BTreeSet};
use std::path::{Path, PathBuf};

pub const DATA_DIR_ENV: &str = "LIEOSC_DATA_DIR";

#[derive(Clone, Debug)]
pub struct DataDir(PathBuf);

impl DataDir {
    /// An explicit path wins, then `LIEOSC_DATA_DIR`, then the `data/` folder
    /// of the source checkout.
    pub fn resolve(explicit: Option<&Path>) -> DataDir {
        if let Some(p) = explicit {
            return DataDir(p.to_path_buf());
        }
        if let Some(p) = std::env::var_os(DATA_DIR_ENV) {
            return DataDir(PathBuf::from(p));
        }
        DataDir(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data"))
    }

    pub fn path(&self) -> &Path {
        &self.0
    }

    pub fn load<T: DeserializeOwned>(&self, name: &str) -> Result<T> {
        let path = self.0.join(name);
        let shown = path.display().to_string();
        let text = std::fs::read_to_string(&path).map_err(|source| Error::Io { path: shown.clone(), source })?;
        serde_json::from_str(&text).map_err(|source| Error::Json { path: shown, source })
    }

    pub fn sorth_sets(&self) -> Result<SorthTable> {
        self.load("sorth_appendix_a.json")
    }

    pub fn k_table(&self) -> Result<KTable> {
        self.load("k_table_appendix_b.json")
    }

    pub fn c_half(&self) -> Result<RepList> {
        self.load("c_half_classif.json")
    }

    pub fn c1(&self) -> Result<RepList> {
        self.load("c1_classif.json")
    }

    pub fn c1_half(&self) -> Result<RepList> {
        self.load("c1half_classif.json")
    }

    pub fn spheres(&self) -> Result<SphereTables> {
        self.load("bms_spheres.json")
    }

    pub fn k4_table(&self) -> Result<K4Table> {
        self.load("lemma_k4.json")
    }

    pub fn simple_survivors(&self) -> Result<SurvivorList> {
        self.load("prop_simple_survivors.json")
    }

    pub fn candidate_tables(&self) -> Result<CandidateTables> {
        self.load("appendix_c_tables.json")
    }

    pub fn orbit_equivalent_pairs(&self) -> Result<PairTable> {
        self.load("prop_pairs.json")
    }

    pub fn symmetric_spaces(&self) -> Result<SymmetricSpaces> {
        self.load("wolf_symmetric_exclusion.json")
    }

    pub fn hermitian_pairs(&self) -> Result<HermitianTable> {
        self.load("hermitian_pairs.json")
    }
}

fn canonical_set<'a>(reps: impl Iterator<Item = &'a RepDescriptor>) -> BTreeSet<RepDescriptor> {
    reps.map(RepDescriptor::canonical).collect()
}

#[derive(Clone, Debug, Deserialize)]
pub struct SorthTable {
    pub sets: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct KTable {
    pub k: BTreeMap<String, Vec<i64>>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct NamedRep {
    pub rep: RepDescriptor,
    #[serde(default)]
    pub group: Option<String>,
    #[serde(default)]
    pub row: Option<String>,
    #[serde(default)]
    pub k: Option<i64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RepList {
    pub reps: Vec<NamedRep>,
}

impl RepList {
    pub fn canonical(&self) -> BTreeSet<RepDescriptor> {
        canonical_set(self.reps.iter().map(|r| &r.rep))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct SphereRow {
    pub group: String,
    pub rep: RepDescriptor,
    pub sphere: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SphereTables {
    pub table_real: Vec<SphereRow>,
    pub table_complex: Vec<SphereRow>,
}

impl SphereTables {
    pub fn canonical(&self) -> BTreeSet<RepDescriptor> {
        canonical_set(self.table_real.iter().chain(&self.table_complex).map(|r| &r.rep))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct K4Entry {
    pub entry: u32,
    pub family: String,
    pub labels: String,
    pub min_rank: Option<usize>,
    #[serde(rename = "paper_filter")]
    pub listed_filter: String,
    #[serde(default)]
    pub note: String,
    pub instances: Vec<RepDescriptor>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct K4Table {
    pub entries: Vec<K4Entry>,
}

impl K4Table {
    pub fn canonical(&self) -> BTreeSet<RepDescriptor> {
        canonical_set(self.entries.iter().flat_map(|e| &e.instances))
    }

    /// The first numbered row listing `rep` (after canonicalization).
    pub fn entry_of(&self, rep: &RepDescriptor) -> Option<&K4Entry> {
        let rep = rep.canonical();
        self.entries.iter().find(|e| e.instances.iter().any(|i| i.canonical() == rep))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct Survivor {
    pub group: String,
    pub rep: RepDescriptor,
    pub entry: u32,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SurvivorList {
    pub survivors: Vec<Survivor>,
}

impl SurvivorList {
    pub fn canonical(&self) -> BTreeSet<RepDescriptor> {
        canonical_set(self.survivors.iter().map(|s| &s.rep))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct CandidateRow {
    pub table: String,
    pub group: String,
    pub rep: RepDescriptor,
    pub conditions: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct CandidateTables {
    pub rows: Vec<CandidateRow>,
}

impl CandidateTables {
    pub fn canonical(&self) -> BTreeSet<RepDescriptor> {
        canonical_set(self.rows.iter().map(|r| &r.rep))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct PairRow {
    pub group: String,
    pub rep: RepDescriptor,
    pub extends_to: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct PairTable {
    pub rows: Vec<PairRow>,
}

impl PairTable {
    pub fn canonical(&self) -> BTreeSet<RepDescriptor> {
        canonical_set(self.rows.iter().map(|r| &r.rep))
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct SymmetricSpaceRow {
    pub space: String,
    pub rep: RepDescriptor,
}

#[derive(Clone, Debug, Deserialize)]
pub struct SymmetricSpaces {
    pub entries: Vec<SymmetricSpaceRow>,
}

impl SymmetricSpaces {
    /// Canonical isotropy representation mapped to the space it comes from.
    pub fn index(&self) -> BTreeMap<RepDescriptor, String> {
        self.entries.iter().map(|e| (e.rep.canonical(), e.space.clone())).collect()
    }
}

/// Roots are θ-expressions in the coordinates of the ambient type.
#[derive(Clone, Debug, Deserialize)]
pub struct HermitianInstance {
    pub rep: RepDescriptor,
    pub ambient: String,
    pub compact_positive_roots: Vec<String>,
    pub noncompact_orthogonal_set: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct HermitianCase {
    pub case: String,
    /// "a": the circle is redundant; "b": not of class O².
    pub part: String,
    pub instances: Vec<HermitianInstance>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct HermitianTable {
    pub cases: Vec<HermitianCase>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_file_loads() {
        let dir = DataDir::resolve(None);
        assert_eq!(dir.k4_table().unwrap().entries.len(), 45);
        assert_eq!(dir.c1().unwrap().reps.len(), 7);
        assert_eq!(dir.c1_half().unwrap().reps.len(), 2);
        assert_eq!(dir.simple_survivors().unwrap().survivors.len(), 4);
        assert!(!dir.c_half().unwrap().reps.is_empty());
        assert!(!dir.spheres().unwrap().table_real.is_empty());
        assert!(!dir.candidate_tables().unwrap().rows.is_empty());
        assert!(!dir.orbit_equivalent_pairs().unwrap().rows.is_empty());
        assert!(!dir.symmetric_spaces().unwrap().entries.is_empty());
        assert_eq!(dir.hermitian_pairs().unwrap().cases.len(), 7);
        assert_eq!(dir.sorth_sets().unwrap().sets.len(), 32);
        assert_eq!(dir.k_table().unwrap().k.len(), 32);
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let dir = DataDir::resolve(Some(Path::new("/nonexistent")));
        assert!(matches!(dir.c1(), Err(Error::Io { .. })));
    }
}
