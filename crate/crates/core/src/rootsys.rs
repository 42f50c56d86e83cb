//! Cartan data for the simple Lie algebras.
//!
//! Simple roots are numbered as in Bourbaki. The Cartan matrix is stored with
//! `cartan[i][j] = α_j(H_{α_i})`, so column `j` is the simple root `α_j`
//! written in fundamental-weight coordinates and `D·cartan` is symmetric for
//! `D = diag((α_i|α_i)/2)`. The invariant form is normalized so that
//! `(θ|θ) = 2` for the highest root `θ`.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg;
use crate::repcalc::WeightCache;
use crate::weight::{Rational, Scalar, Weight};

/// Environment variable overriding [`Limits::max_dim`].
pub const MAX_DIM_ENV: &str = "FUSIONKIT_MAX_DIM";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }

    /// Dimension of the simple Lie algebra of this type.
    pub fn algebra_dimension(self, rank: usize) -> usize {
        let r = rank;
        match self {
            Series::A => r * (r + 2),
            Series::B | Series::C => r * (2 * r + 1),
            Series::D => r * (2 * r - 1),
            Series::E => match r {
                6 => 78,
                7 => 133,
                _ => 248,
            },
            Series::F => 52,
            Series::G => 14,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simple type such as `A2` or `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if series.is_valid_rank(rank) {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidType {
                series: series.letter(),
                rank,
            })
        }
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_err = || Error::Parse {
            what: "simple type",
            input: s.to_string(),
        };
        let mut chars = s.chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(parse_err)?;
        let rank: usize = chars.as_str().parse().map_err(|_| parse_err())?;
        SimpleType::new(series, rank)
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

/// Resource caps for the combinatorial routines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest `dim V(μ)` for which a weight system is built.
    pub max_dim: u64,
    /// Largest Weyl orbit enumerated.
    pub max_orbit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_dim: 1_000_000,
            max_orbit: 1_000_000,
        }
    }
}

impl Limits {
    /// Defaults, with `max_dim` taken from `FUSIONKIT_MAX_DIM` when set.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(v) = std::env::var(MAX_DIM_ENV) {
            limits.max_dim = v.trim().parse().map_err(|_| Error::Parse {
                what: MAX_DIM_ENV,
                input: v.clone(),
            })?;
        }
        Ok(limits)
    }
}

/// A root, carried in simple-root and fundamental-weight coordinates together
/// with its coroot `H_α = Σ coroot[j] H_{α_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    simple: Vec<i64>,
    weight: Weight,
    coroot: Vec<i64>,
    norm: Rational,
}

impl Root {
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn coroot(&self) -> &[i64] {
        &self.coroot
    }

    /// `(α|α)` under the normalized form.
    pub fn norm(&self) -> Rational {
        self.norm
    }

    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    pub fn is_long(&self) -> bool {
        self.norm == Rational::from_integer(2)
    }

    /// `λ(H_α)` without a rank check.
    pub(crate) fn eval<T: Scalar>(&self, coords: &[T]) -> T {
        self.coroot
            .iter()
            .zip(coords)
            .fold(T::zero(), |acc, (&c, x)| acc + T::from(c) * x.clone())
    }
}

/// All static data of one simple Lie algebra.
#[derive(Clone, Debug)]
pub struct AlgebraData {
    kind: SimpleType,
    cartan: Vec<Vec<i64>>,
    cartan_inverse: Vec<Vec<Rational>>,
    symmetrizer: Vec<Rational>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    theta: Root,
    rho: Weight,
    dual_coxeter: i64,
    form_matrix: Vec<Vec<Rational>>,
    form_scaled: Vec<Vec<i64>>,
    form_denominator: i64,
    pub(crate) limits: Limits,
    pub(crate) weight_cache: WeightCache,
}

/// Builds the algebra of the given type with default [`Limits`].
pub fn build_algebra(series: Series, rank: usize) -> Result<AlgebraData> {
    AlgebraData::new(SimpleType::new(series, rank)?, Limits::default())
}

fn cartan_matrix(kind: SimpleType) -> Vec<Vec<i64>> {
    let r = kind.rank;
    let mut a = vec![vec![0i64; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    // link(i, j, a_ij, a_ji)
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match kind.series {
        Series::A => (0..r - 1).for_each(|i| link(i, i + 1, -1, -1)),
        Series::B => {
            (0..r - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 2, r - 1, -1, -2);
        }
        Series::C => {
            (0..r - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 2, r - 1, -2, -1);
        }
        Series::D => {
            (0..r - 2).for_each(|i| link(i, i + 1, -1, -1));
            link(r - 3, r - 1, -1, -1);
        }
        Series::E => {
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            (2..r - 1).for_each(|i| link(i, i + 1, -1, -1));
        }
        Series::F => {
            link(0, 1, -1, -1);
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        Series::G => link(0, 1, -3, -1),
    }
    a
}

/// Per-node `d_i` with `d_i a_ij = d_j a_ji`, `d_0 = 1` before normalization.
fn symmetrize(cartan: &[Vec<i64>]) -> Vec<Rational> {
    let r = cartan.len();
    let mut d = vec![Rational::zero(); r];
    d[0] = Rational::one();
    let mut seen = vec![false; r];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..r {
            if !seen[j] && cartan[i][j] != 0 {
                d[j] = d[i] * Rational::new(cartan[i][j], cartan[j][i]);
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    d
}

/// Positive roots in simple-root coordinates, by saturation along root
/// strings, ordered by height.
fn positive_roots_by_saturation(cartan: &[Vec<i64>], cap: usize) -> Result<Vec<Vec<i64>>> {
    let r = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..r)
        .map(|i| {
            let mut v = vec![0; r];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut start = 0;
    let mut visits = 0usize;
    while start < roots.len() {
        let end = roots.len();
        for idx in start..end {
            visits += 1;
            if visits > cap {
                return Err(Error::RootClosure { cap });
            }
            let beta = roots[idx].clone();
            for i in 0..r {
                let pairing: i64 = (0..r).map(|j| cartan[i][j] * beta[j]).sum();
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if known.insert(up.clone()) {
                        roots.push(up);
                    }
                }
            }
        }
        start = end;
    }
    Ok(roots)
}

impl AlgebraData {
    pub fn new(kind: SimpleType, limits: Limits) -> Result<Self> {
        let r = kind.rank;
        let cartan = cartan_matrix(kind);
        let cartan_q = linalg::to_rational_matrix(&cartan);
        let cartan_inverse =
            linalg::inverse(&cartan_q).ok_or_else(|| Error::Internal("singular Cartan matrix".into()))?;

        let cap = 4 * kind.series.algebra_dimension(r);
        let simple_coords = positive_roots_by_saturation(&cartan, cap)?;

        let raw_d = symmetrize(&cartan);
        let raw_norm = |s: &[i64]| -> Rational {
            let mut acc = Rational::zero();
            for i in 0..r {
                for j in 0..r {
                    acc += raw_d[i] * Rational::from_integer(cartan[i][j] * s[i] * s[j]);
                }
            }
            acc
        };
        let theta_simple = simple_coords
            .iter()
            .max_by_key(|s| s.iter().sum::<i64>())
            .cloned()
            .ok_or_else(|| Error::Internal("no roots".into()))?;
        let rescale = Rational::from_integer(2) / raw_norm(&theta_simple);
        let symmetrizer: Vec<Rational> = raw_d.iter().map(|d| *d * rescale).collect();

        // (ω_i|ω_j) = (D · cartan^{-1})_ij
        let form_matrix: Vec<Vec<Rational>> = (0..r)
            .map(|i| (0..r).map(|j| symmetrizer[i] * cartan_inverse[i][j]).collect())
            .collect();
        let form_denominator = form_matrix
            .iter()
            .flatten()
            .fold(1i64, |acc, q| num_integer_lcm(acc, *q.denom()));
        let form_scaled = form_matrix
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| (*q * Rational::from_integer(form_denominator)).to_integer())
                    .collect()
            })
            .collect();

        let simple_roots: Vec<Weight> = (0..r)
            .map(|j| Weight::new((0..r).map(|k| cartan[k][j]).collect()))
            .collect();

        let make_root = |s: &[i64]| -> Result<Root> {
            let mut norm = Rational::zero();
            for i in 0..r {
                for j in 0..r {
                    norm += symmetrizer[i] * Rational::from_integer(cartan[i][j] * s[i] * s[j]);
                }
            }
            let coroot = (0..r)
                .map(|j| {
                    let c = Rational::from_integer(2 * s[j]) * symmetrizer[j] / norm;
                    if c.is_integer() {
                        Ok(c.to_integer())
                    } else {
                        Err(Error::Internal(format!("non-integral coroot for {s:?}")))
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            let weight = Weight::new((0..r).map(|k| (0..r).map(|j| cartan[k][j] * s[j]).sum()).collect());
            Ok(Root {
                simple: s.to_vec(),
                weight,
                coroot,
                norm,
            })
        };

        let positive_roots = simple_coords
            .iter()
            .map(|s| make_root(s))
            .collect::<Result<Vec<_>>>()?;
        let theta = make_root(&theta_simple)?;
        let rho = Weight::ones(r);
        let dual_coxeter = 1 + theta.eval(rho.coords());

        let alg = AlgebraData {
            kind,
            cartan,
            cartan_inverse,
            symmetrizer,
            simple_roots,
            positive_roots,
            theta,
            rho,
            dual_coxeter,
            form_matrix,
            form_scaled,
            form_denominator,
            limits,
            weight_cache: WeightCache::default(),
        };
        alg.check_invariants()?;
        Ok(alg)
    }

    fn check_invariants(&self) -> Result<()> {
        let r = self.rank();
        let expected = (self.kind.series.algebra_dimension(r) - r) / 2;
        if self.positive_roots.len() != expected {
            return Err(Error::Internal(format!(
                "{}: found {} positive roots, expected {expected}",
                self.kind,
                self.positive_roots.len()
            )));
        }
        if !self.theta.weight.is_dominant() {
            return Err(Error::Internal("highest root is not dominant".into()));
        }
        for i in 0..r {
            let mut up = self.theta.simple.clone();
            up[i] += 1;
            if self.root_from_simple(&up).is_some() {
                return Err(Error::Internal("highest root is not maximal".into()));
            }
        }
        if self.theta.norm != Rational::from_integer(2) {
            return Err(Error::Internal("form is not normalized".into()));
        }
        Ok(())
    }

    pub fn from_name(name: &str) -> Result<Self> {
        AlgebraData::new(name.parse()?, Limits::default())
    }

    pub fn with_limits(kind: SimpleType, limits: Limits) -> Result<Self> {
        AlgebraData::new(kind, limits)
    }

    pub fn kind(&self) -> SimpleType {
        self.kind
    }

    pub fn series(&self) -> Series {
        self.kind.series
    }

    pub fn rank(&self) -> usize {
        self.kind.rank
    }

    pub fn name(&self) -> String {
        self.kind.to_string()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Rational] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// Simple root `α_i` in fundamental-weight coordinates.
    pub fn simple_root(&self, i: usize) -> &Weight {
        &self.simple_roots[i]
    }

    pub fn theta(&self) -> &Weight {
        &self.theta.weight
    }

    pub fn theta_root(&self) -> &Root {
        &self.theta
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn form_matrix(&self) -> &[Vec<Rational>] {
        &self.form_matrix
    }

    /// Looks up the root (positive or negative) with the given simple coordinates.
    pub fn root_from_simple(&self, simple: &[i64]) -> Option<Root> {
        if simple.len() != self.rank() {
            return None;
        }
        if let Some(root) = self.positive_roots.iter().find(|r| r.simple == simple) {
            return Some(root.clone());
        }
        let neg: Vec<i64> = simple.iter().map(|x| -x).collect();
        self.positive_roots.iter().find(|r| r.simple == neg).map(|r| Root {
            simple: simple.to_vec(),
            weight: -&r.weight,
            coroot: r.coroot.iter().map(|x| -x).collect(),
            norm: r.norm,
        })
    }

    /// All roots, positive ones first.
    pub fn roots(&self) -> Vec<Root> {
        let mut all = self.positive_roots.clone();
        all.extend(self.positive_roots.iter().map(|r| Root {
            simple: r.simple.iter().map(|x| -x).collect(),
            weight: -&r.weight,
            coroot: r.coroot.iter().map(|x| -x).collect(),
            norm: r.norm,
        }));
        all
    }

    fn check_rank(&self, found: usize) -> Result<()> {
        if found == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found,
            })
        }
    }

    /// `λ(H_α)`.
    pub fn pairing<T: Scalar>(&self, lambda: &Weight<T>, alpha: &Root) -> Result<T> {
        self.check_rank(lambda.rank())?;
        self.check_rank(alpha.coroot.len())?;
        Ok(alpha.eval(lambda.coords()))
    }

    /// `λ(H_θ)`; panics on a rank mismatch.
    pub fn level<T: Scalar>(&self, lambda: &Weight<T>) -> T {
        assert_eq!(lambda.rank(), self.rank(), "weight rank mismatch");
        self.theta.eval(lambda.coords())
    }

    /// Membership in `P_ℓ`: dominant with level at most `ℓ`.
    pub fn in_p_ell(&self, lambda: &Weight, level: i64) -> bool {
        lambda.rank() == self.rank() && lambda.is_dominant() && self.level(lambda) <= level
    }

    /// `(x|y)` under the normalized form.
    pub fn inner<T: Scalar>(&self, x: &Weight<T>, y: &Weight<T>) -> T {
        let r = self.rank();
        let mut acc = T::zero();
        for i in 0..r {
            for j in 0..r {
                let f = &self.form_matrix[i][j];
                if f.is_zero() {
                    continue;
                }
                let fq = T::from(*f.numer()) / T::from(*f.denom());
                acc = acc + fq * x.coords()[i].clone() * y.coords()[j].clone();
            }
        }
        acc
    }

    /// `N·(x|y)` for integral weights, with `N` the common denominator of the form.
    pub(crate) fn inner_scaled(&self, x: &[i64], y: &[i64]) -> i64 {
        let r = self.rank();
        let mut acc = 0;
        for i in 0..r {
            if x[i] == 0 {
                continue;
            }
            for j in 0..r {
                acc += x[i] * self.form_scaled[i][j] * y[j];
            }
        }
        acc
    }

    /// Common denominator `N` of the form matrix.
    pub(crate) fn form_denominator(&self) -> i64 {
        self.form_denominator
    }

    /// Coordinates of `λ` against the simple roots.
    pub fn to_simple_coords(&self, lambda: &Weight) -> Vec<Rational> {
        let r = self.rank();
        (0..r)
            .map(|i| {
                (0..r).fold(Rational::zero(), |acc, j| {
                    acc + self.cartan_inverse[i][j] * Rational::from_integer(lambda.coords()[j])
                })
            })
            .collect()
    }

    /// Weight with the given simple-root coordinates.
    pub fn from_simple_coords(&self, simple: &[i64]) -> Weight {
        let r = self.rank();
        Weight::new((0..r).map(|k| (0..r).map(|j| self.cartan[k][j] * simple[j]).sum()).collect())
    }

    /// JSON dump of the Cartan data for inspection and golden files.
    pub fn debug_dump(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Dump<'a> {
            algebra: String,
            series: char,
            rank: usize,
            cartan: &'a [Vec<i64>],
            symmetrizer: Vec<String>,
            positive_roots: Vec<&'a [i64]>,
            theta: &'a Weight,
            rho: &'a Weight,
            dual_coxeter: i64,
        }
        let dump = Dump {
            algebra: self.name(),
            series: self.kind.series.letter(),
            rank: self.rank(),
            cartan: &self.cartan,
            symmetrizer: self.symmetrizer.iter().map(|d| d.to_string()).collect(),
            positive_roots: self.positive_roots.iter().map(|r| r.simple.as_slice()).collect(),
            theta: &self.theta.weight,
            rho: &self.rho,
            dual_coxeter: self.dual_coxeter,
        };
        serde_json::to_value(dump).expect("algebra dump serializes")
    }
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            let t = a % b;
            a = b;
            b = t;
        }
        a.abs()
    }
    a / gcd(a, b) * b
}
