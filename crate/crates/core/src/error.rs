use thiserror::Error;

use crate::weight::Weight;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported simple type {series}{rank}")]
    InvalidType { series: char, rank: usize },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("dimension mismatch: expected rank {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("simple reflection index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight ({0}) is not dominant")]
    NotDominant(Weight),

    #[error("weight ({weight}) is not in P_{level}")]
    NotInAlcove { weight: Weight, level: i64 },

    #[error("level must be at least 1, got {0}")]
    InvalidLevel(i64),

    #[error("lambda = ({lambda}) is not >> mu = ({mu})")]
    NotDominating { lambda: Weight, mu: Weight },

    #[error("root closure did not converge within {cap} iterations")]
    RootClosure { cap: usize },

    #[error("Weyl orbit exceeds the configured cap of {cap} elements")]
    OrbitCap { cap: usize },

    #[error("dim V({weight}) = {dim} exceeds the configured cap of {cap}")]
    DimensionCap { weight: Weight, dim: String, cap: u64 },

    #[error("{what} did not terminate within {cap} steps")]
    IterationCap { what: &'static str, cap: usize },

    #[error("translation {0:?} is not in the long-root lattice")]
    NotInLongRootLattice(Vec<i64>),

    #[error("rescaled weight is not integral: {0}")]
    NonIntegral(String),

    #[error("fusion coefficient of V({weight}) is negative ({value})")]
    NegativeFusion { weight: Weight, value: i64 },

    #[error("Verlinde sum {value} is not within {tolerance} of an integer")]
    VerlindeTolerance { value: f64, tolerance: f64 },

    #[error("Verlinde oracle refused: {0}")]
    VerlindeCap(String),

    #[error("proposition clause violated: {0}")]
    PropositionViolation(String),

    #[error("explicit fusion formula disagrees with pi(tensor): expected {expected}, got {found}")]
    ExplicitMismatch { expected: String, found: String },

    #[error("internal invariant broken: {0}")]
    Internal(String),
}
