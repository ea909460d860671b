use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: String, rank: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("dimension {dim} exceeds cap {cap}")]
    DimCapExceeded { dim: String, cap: u64 },
    #[error("weight system has {count} weights, over the cap of {cap}")]
    WeightCapExceeded { count: usize, cap: usize },
    #[error("orthogonal subsystem splits into an unexpected shape: {0}")]
    StructuralSurprise(String),
    #[error("span criterion and self-duality disagree for {0}")]
    InconsistentReality(String),
    #[error("module is not self-dual: {0}")]
    NotSelfDual(String),
    #[error("{0} is not a weight of the representation")]
    NotAWeight(String),
    #[error("lowering monomial vanished: {0}")]
    VanishingMonomial(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed data: {0}")]
    Data(String),
    #[error("pipeline incomplete: {0}")]
    PipelineIncomplete(String),
    #[error("rule conflict: {0}")]
    RuleConflict(String),
    #[error("io error on {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("json error in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
}

pub type Result<T> = std::result::Result<T, Error>;
