//! Exact tensor and fusion products for simple Lie algebras.
//!
//! The crate builds the Cartan data of any simple type ([`rootsys`]), acts
//! with the finite Weyl group ([`weyl`]), decomposes tensor products
//! ([`repcalc`]), truncates them to level `ℓ` through the signed alcove fold
//! ([`fusion`]), and checks that PRV components `V(λ+wμ)` of level at most `ℓ`
//! survive with multiplicity one in the fusion product when `λ ≫ μ` ([`prv`]).

pub mod cli;
pub mod error;
pub mod fusion;
mod linalg;
pub mod prv;
pub mod repcalc;
pub mod rootsys;
pub mod weight;
pub mod weyl;

pub use error::{Error, Result};
pub use fusion::{AlcoveReduction, FusionRing, LongRootLattice, VerlindeOracle, WLElement};
pub use prv::{GroupedTensor, PRVReport, SweepFilter, SweepSummary, Witness};
pub use repcalc::{VirtualModule, WeightSystem};
pub use rootsys::{build_algebra, AlgebraData, Limits, Root, Series, SimpleType};
pub use weight::{Rational, RationalWeight, Weight};
pub use weyl::{weyl_group_order, DominantReduction};
