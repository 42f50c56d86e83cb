//! Weights in the fundamental-weight basis.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::Num;
use serde::{Deserialize, Serialize};

use crate::error::Error;

pub type Rational = Ratio<i64>;

/// Coordinate ring for weights: integers for lattice weights, rationals for
/// the rescaled weights used by alcove folding.
pub trait Scalar: Clone + fmt::Debug + PartialOrd + Num + Neg<Output = Self> + From<i64> {}

impl<T> Scalar for T where T: Clone + fmt::Debug + PartialOrd + Num + Neg<Output = T> + From<i64> {}

/// Coordinates `λ(H_{α_i})` against the fundamental weights.
///
/// The derived ordering is lexicographic on coordinates and is the canonical
/// ordering used everywhere output has to be deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight<T = i64>(Vec<T>);

pub type RationalWeight = Weight<Rational>;

impl<T> Weight<T> {
    pub fn new(coords: Vec<T>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[T] {
        &self.0
    }

    pub fn coords_mut(&mut self) -> &mut [T] {
        &mut self.0
    }

    pub fn into_coords(self) -> Vec<T> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl<T: Scalar> Weight<T> {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![T::zero(); rank])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| *c >= T::zero())
    }

    /// Strictly dominant: every coordinate positive.
    pub fn is_regular_dominant(&self) -> bool {
        self.0.iter().all(|c| *c > T::zero())
    }

    pub fn scale(&self, k: &T) -> Self {
        Weight(self.0.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &Self, k: &T) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.clone() + b.clone() * k.clone())
                .collect(),
        )
    }
}

impl Weight<i64> {
    pub fn to_rational(&self) -> RationalWeight {
        Weight(self.0.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn ones(rank: usize) -> Self {
        Weight(vec![1; rank])
    }
}

impl RationalWeight {
    /// The integral weight with the same coordinates, if there is one.
    pub fn to_integral(&self) -> Option<Weight> {
        self.0
            .iter()
            .map(|c| c.is_integer().then(|| *c.numer()))
            .collect::<Option<Vec<_>>>()
            .map(Weight)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Comma-separated fundamental-weight coordinates, e.g. `"2,0,1"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let err = || Error::Parse {
            what: "weight",
            input: s.to_string(),
        };
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(err());
        }
        trimmed
            .split(',')
            .map(|part| part.trim().parse::<i64>().map_err(|_| err()))
            .collect::<Result<Vec<_>, _>>()
            .map(Weight)
    }
}

impl<T: fmt::Display> fmt::Display for Weight<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl<T: Scalar> Add for &Weight<T> {
    type Output = Weight<T>;
    fn add(self, rhs: &Weight<T>) -> Weight<T> {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Weight<T> {
    type Output = Weight<T>;
    fn sub(self, rhs: &Weight<T>) -> Weight<T> {
        debug_assert_eq!(self.rank(), rhs.rank());
        Weight(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Add for Weight<T> {
    type Output = Weight<T>;
    fn add(self, rhs: Weight<T>) -> Weight<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Weight<T> {
    type Output = Weight<T>;
    fn sub(self, rhs: Weight<T>) -> Weight<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Neg for &Weight<T> {
    type Output = Weight<T>;
    fn neg(self) -> Weight<T> {
        Weight(self.0.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Neg for Weight<T> {
    type Output = Weight<T>;
    fn neg(self) -> Weight<T> {
        -&self
    }
}

impl Mul<&Weight> for i64 {
    type Output = Weight;
    fn mul(self, rhs: &Weight) -> Weight {
        rhs.scale(&self)
    }
}
