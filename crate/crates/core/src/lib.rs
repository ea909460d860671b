//! Exact Lie-theoretic computations for classifying real irreducible
//! representations by their osculating spaces.

pub mod chevmod;
pub mod cli;
pub mod classify;
pub mod dadok;
pub mod descriptor;
pub mod error;
pub mod golden;
pub mod linalg;
pub mod osc;
pub mod rootsys;
pub mod sorth;
pub mod verify;
pub mod weights;

pub use descriptor::{Factor, RepDescriptor};
pub use error::{Error, Result};
pub use rootsys::{Family, LieType, RootDatum, RootVec, Weight};
