//! Level-`ℓ` structures: the shifted alcove fold, the π-map, fusion products,
//! the affine reflection `s_{θ,ℓ+ȟ}`, `W_ℓ` elements, and a Verlinde oracle.
//!
//! Index convention: [`AlgebraData::fusion_coefficient`]`(λ, μ, ν, ℓ)` is the
//! coefficient `n_{λ,μ}^ν` of `V(ν)` in `V(λ) ⊗^F V(μ)`, i.e. the dimension of
//! conformal blocks with weights `λ, μ, ν*` at three points. The Verlinde
//! oracle takes the three weights attached to the points, so
//! `verlinde_dimension(λ, μ, ν) = fusion_coefficient(λ, μ, ν*)`.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::IntLattice;
use crate::repcalc::VirtualModule;
use crate::rootsys::AlgebraData;
use crate::weight::{Rational, RationalWeight, Weight};

const FOLD_CAP: usize = 100_000;

/// Result of folding `λ + ρ` into the interior of the fundamental alcove.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlcoveReduction {
    OnWall,
    Reduced { weight: Weight, sign: i64 },
}

/// Sublattice of the root lattice spanned by the long roots, in simple-root
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LongRootLattice {
    lattice: IntLattice,
}

impl LongRootLattice {
    pub fn contains(&self, simple: &[i64]) -> bool {
        self.lattice.contains(simple)
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        self.lattice.basis()
    }

    /// Index of the long-root lattice in the root lattice.
    pub fn index(&self) -> i64 {
        self.lattice.index()
    }
}

/// An element of `W_ℓ = W ⋉ (ℓ+ȟ)Q^long`, acting by
/// `x ↦ w(x) + (ℓ+ȟ)·translation`. The word `[i_1, …, i_n]` denotes
/// `s_{i_1} ⋯ s_{i_n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WLElement {
    word: Vec<usize>,
    translation: Vec<i64>,
}

impl WLElement {
    /// Validates reflection indices and membership of `translation` (simple-root
    /// coordinates) in `Q^long`.
    pub fn new(alg: &AlgebraData, word: Vec<usize>, translation: Vec<i64>) -> Result<Self> {
        let rank = alg.rank();
        if let Some(&index) = word.iter().find(|&&i| i >= rank) {
            return Err(Error::IndexOutOfRange { index, rank });
        }
        if translation.len() != rank {
            return Err(Error::DimensionMismatch {
                expected: rank,
                found: translation.len(),
            });
        }
        if !alg.long_root_lattice().contains(&translation) {
            return Err(Error::NotInLongRootLattice(translation));
        }
        Ok(WLElement { word, translation })
    }

    pub fn identity(alg: &AlgebraData) -> Self {
        WLElement {
            word: Vec::new(),
            translation: vec![0; alg.rank()],
        }
    }

    /// A finite Weyl group element given as a word.
    pub fn finite(alg: &AlgebraData, word: Vec<usize>) -> Result<Self> {
        WLElement::new(alg, word, vec![0; alg.rank()])
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn translation(&self) -> &[i64] {
        &self.translation
    }

    /// Unshifted action at translation scale `k = ℓ + ȟ`.
    pub fn act(&self, alg: &AlgebraData, x: &RationalWeight, k: i64) -> RationalWeight {
        let moved = alg.apply_word(&self.word, x);
        let shift = alg.from_simple_coords(&self.translation).to_rational();
        moved.add_scaled(&shift, &Rational::from_integer(k))
    }
}

fn check_level(level: i64) -> Result<()> {
    if level < 1 {
        Err(Error::InvalidLevel(level))
    } else {
        Ok(())
    }
}

impl AlgebraData {
    pub(crate) fn require_p_ell(&self, lambda: &Weight, level: i64) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: lambda.rank(),
            });
        }
        if !self.in_p_ell(lambda, level) {
            return Err(Error::NotInAlcove {
                weight: lambda.clone(),
                level,
            });
        }
        Ok(())
    }

    /// `P_ℓ` in canonical order.
    pub fn p_ell(&self, level: i64) -> Vec<Weight> {
        fn go(marks: &[i64], budget: i64, prefix: &mut Vec<i64>, out: &mut Vec<Weight>) {
            let Some((&m, rest)) = marks.split_first() else {
                out.push(Weight::new(prefix.clone()));
                return;
            };
            let mut c = 0;
            while c * m <= budget {
                prefix.push(c);
                go(rest, budget - c * m, prefix, out);
                prefix.pop();
                c += 1;
            }
        }
        let mut out = Vec::new();
        if level >= 0 {
            go(self.theta_root().coroot(), level, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    /// `s_{θ,ℓ+ȟ}·ξ = s_θ(ξ) + (ℓ+1)θ`. An involution.
    pub fn affine_reflect_theta(&self, xi: &Weight, level: i64) -> Weight {
        let shift = level + 1 - self.level(xi);
        xi.add_scaled(self.theta(), &shift)
    }

    /// Folds `λ + ρ` into the fundamental alcove with the shifted `W_ℓ`
    /// action, tracking `ε(w)`.
    pub fn alcove_reduce_shifted(&self, lambda: &Weight, level: i64) -> Result<AlcoveReduction> {
        check_level(level)?;
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: lambda.rank(),
            });
        }
        let k = level + self.dual_coxeter();
        let mut xi = lambda + self.rho();
        let mut sign = 1;
        for _ in 0..FOLD_CAP {
            let r = self.to_dominant(&xi);
            if r.on_wall {
                return Ok(AlcoveReduction::OnWall);
            }
            sign *= r.sign;
            xi = r.dominant;
            let height = self.level(&xi);
            if height == k {
                return Ok(AlcoveReduction::OnWall);
            }
            if height < k {
                return Ok(AlcoveReduction::Reduced {
                    weight: &xi - self.rho(),
                    sign,
                });
            }
            xi = xi.add_scaled(self.theta(), &(k - height));
            sign = -sign;
        }
        Err(Error::IterationCap {
            what: "shifted alcove reduction",
            cap: FOLD_CAP,
        })
    }

    /// Whether `x` lies on some affine wall `(x|α) = n(ℓ+ȟ)`, checked directly
    /// against every root.
    pub fn on_affine_wall(&self, x: &Weight, level: i64) -> bool {
        let k = Rational::from_integer(level + self.dual_coxeter());
        let xq = x.to_rational();
        self.positive_roots().iter().any(|alpha| {
            let ip = self.inner(&xq, &alpha.weight().to_rational());
            (ip / k).is_integer()
        })
    }

    /// The linear map `π: ℛ(g) → ℛ_ℓ(g)`.
    pub fn pi_map(&self, x: &VirtualModule, level: i64) -> Result<VirtualModule> {
        let mut out = VirtualModule::new();
        for (lambda, c) in x.iter() {
            if let AlcoveReduction::Reduced { weight, sign } = self.alcove_reduce_shifted(lambda, level)? {
                out.add_term(weight, sign * c);
            }
        }
        Ok(out)
    }

    /// `V(λ) ⊗^F V(μ) = π(V(λ) ⊗ V(μ))`.
    pub fn fusion_product(&self, lambda: &Weight, mu: &Weight, level: i64) -> Result<VirtualModule> {
        check_level(level)?;
        self.require_p_ell(lambda, level)?;
        self.require_p_ell(mu, level)?;
        self.pi_map(&self.tensor_decompose(lambda, mu)?, level)
    }

    /// `n_{λ,μ}^ν`.
    pub fn fusion_coefficient(&self, lambda: &Weight, mu: &Weight, nu: &Weight, level: i64) -> Result<u64> {
        self.require_p_ell(nu, level)?;
        let product = self.fusion_product(lambda, mu, level)?;
        let value = product.coefficient(nu);
        u64::try_from(value).map_err(|_| Error::NegativeFusion {
            weight: nu.clone(),
            value,
        })
    }

    pub fn long_root_lattice(&self) -> LongRootLattice {
        let long: Vec<Vec<i64>> = self
            .positive_roots()
            .iter()
            .filter(|r| r.is_long())
            .map(|r| r.simple_coords().to_vec())
            .collect();
        LongRootLattice {
            lattice: IntLattice::span(self.rank(), &long),
        }
    }

    /// Folds a rational weight into the closed alcove
    /// `{x dominant, x(H_θ) ≤ k}` with the unshifted action of `W ⋉ kQ^long`.
    pub fn fold_to_alcove(&self, x: &RationalWeight, k: i64) -> Result<RationalWeight> {
        let kq = Rational::from_integer(k);
        let mut v = x.clone();
        for _ in 0..FOLD_CAP {
            v = self.to_dominant(&v).dominant;
            let height = self.level(&v);
            if height <= kq {
                return Ok(v);
            }
            v = v.add_scaled(&self.theta().to_rational(), &(kq - height));
        }
        Err(Error::IterationCap {
            what: "alcove fold",
            cap: FOLD_CAP,
        })
    }

    /// `\overline{λ₁ + wλ₂}^F`: rescale by `(ℓ+ȟ)/ℓ`, apply `w` to the second
    /// weight, fold into the closed alcove, rescale back.
    pub fn fusion_bar(&self, lambda1: &Weight, lambda2: &Weight, w: &WLElement, level: i64) -> Result<Weight> {
        check_level(level)?;
        self.require_p_ell(lambda1, level)?;
        self.require_p_ell(lambda2, level)?;
        let k = level + self.dual_coxeter();
        let up = Rational::new(k, level);
        let x = lambda1.to_rational().scale(&up);
        let y = w.act(self, &lambda2.to_rational().scale(&up), k);
        let folded = self.fold_to_alcove(&(&x + &y), k)?;
        let back = folded.scale(&Rational::new(level, k));
        let result = back
            .to_integral()
            .ok_or_else(|| Error::NonIntegral(back.to_string()))?;
        if !self.in_p_ell(&result, level) {
            return Err(Error::Internal(format!("fusion_bar produced ({result}) outside P_{level}")));
        }
        Ok(result)
    }

    /// Conformal-block dimension for weights `λ, μ, ν` at three points, from
    /// the Verlinde formula in floating point.
    pub fn verlinde_dimension(&self, lambda: &Weight, mu: &Weight, nu: &Weight, level: i64) -> Result<u64> {
        VerlindeOracle::new(self, level)?.dimension(lambda, mu, nu)
    }
}

/// Structure constants of `ℛ_ℓ(g)` tabulated over `P_ℓ × P_ℓ`.
pub struct FusionRing<'a> {
    alg: &'a AlgebraData,
    level: i64,
    basis: Vec<Weight>,
    index: HashMap<Weight, usize>,
    table: Vec<Vec<VirtualModule>>,
}

impl<'a> FusionRing<'a> {
    pub fn new(alg: &'a AlgebraData, level: i64) -> Result<Self> {
        check_level(level)?;
        let basis = alg.p_ell(level);
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        let table = basis
            .iter()
            .map(|x| basis.iter().map(|y| alg.fusion_product(x, y, level)).collect())
            .collect::<Result<Vec<Vec<_>>>>()?;
        Ok(FusionRing {
            alg,
            level,
            basis,
            index,
            table,
        })
    }

    pub fn algebra(&self) -> &AlgebraData {
        self.alg
    }

    pub fn level(&self) -> i64 {
        self.level
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    fn position(&self, w: &Weight) -> Result<usize> {
        self.index.get(w).copied().ok_or_else(|| Error::NotInAlcove {
            weight: w.clone(),
            level: self.level,
        })
    }

    pub fn product(&self, x: &Weight, y: &Weight) -> Result<&VirtualModule> {
        Ok(&self.table[self.position(x)?][self.position(y)?])
    }

    /// Bilinear extension of the fusion product.
    pub fn multiply(&self, x: &VirtualModule, y: &VirtualModule) -> Result<VirtualModule> {
        let mut out = VirtualModule::new();
        for (a, ca) in x.iter() {
            for (b, cb) in y.iter() {
                out += &(self.product(a, b)? * (ca * cb));
            }
        }
        Ok(out)
    }
}

/// Caps for the floating-point Verlinde oracle.
pub const VERLINDE_MAX_RANK: usize = 3;
pub const VERLINDE_MAX_LEVEL: i64 = 6;
pub const VERLINDE_MAX_WEIGHTS: usize = 200;
pub const VERLINDE_TOLERANCE: f64 = 1e-6;

/// Kac–Peterson S-matrix over `P_ℓ`, up to the overall constant, which is
/// recovered from unitarity.
pub struct VerlindeOracle {
    basis: Vec<Weight>,
    index: HashMap<Weight, usize>,
    s: Vec<Vec<Complex64>>,
    /// `c²` where `S = c·s`.
    scale: f64,
    vacuum: usize,
}

impl VerlindeOracle {
    pub fn new(alg: &AlgebraData, level: i64) -> Result<Self> {
        check_level(level)?;
        if alg.rank() > VERLINDE_MAX_RANK {
            return Err(Error::VerlindeCap(format!("rank {} > {VERLINDE_MAX_RANK}", alg.rank())));
        }
        if level > VERLINDE_MAX_LEVEL {
            return Err(Error::VerlindeCap(format!("level {level} > {VERLINDE_MAX_LEVEL}")));
        }
        let basis = alg.p_ell(level);
        if basis.len() > VERLINDE_MAX_WEIGHTS {
            return Err(Error::VerlindeCap(format!("|P_ℓ| = {} > {VERLINDE_MAX_WEIGHTS}", basis.len())));
        }
        let k = level + alg.dual_coxeter();
        let modulus = (k * alg.form_denominator()) as i128;
        let orbits = basis
            .iter()
            .map(|sigma| alg.signed_orbit(&(sigma + alg.rho())))
            .collect::<Result<Vec<_>>>()?;
        // s[λ][σ] = Σ_w ε(w) exp(−2πi (λ+ρ | w(σ+ρ)) / k)
        let s: Vec<Vec<Complex64>> = basis
            .par_iter()
            .map(|lambda| {
                let shifted = lambda + alg.rho();
                orbits
                    .iter()
                    .map(|orbit| {
                        orbit.iter().fold(Complex64::zero(), |acc, (y, eps)| {
                            let num = alg.inner_scaled(shifted.coords(), y.coords()) as i128;
                            let phase = num.rem_euclid(modulus) as f64 / modulus as f64;
                            acc + Complex64::from_polar(*eps as f64, -2.0 * PI * phase)
                        })
                    })
                    .collect()
            })
            .collect();
        let vacuum = basis
            .iter()
            .position(|w| w.is_zero())
            .ok_or_else(|| Error::Internal("P_ℓ without the trivial weight".into()))?;
        let norm: f64 = s[vacuum].iter().map(|z| z.norm_sqr()).sum();
        // The true S-matrix carries the phase i^{|Δ+|}, so c² = (−1)^{|Δ+|}/Σ|s_0σ|².
        let parity = if alg.positive_roots().len().is_multiple_of(2) { 1.0 } else { -1.0 };
        let index = basis.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
        Ok(VerlindeOracle {
            basis,
            index,
            s,
            scale: parity / norm,
            vacuum,
        })
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    fn position(&self, w: &Weight) -> Result<usize> {
        self.index.get(w).copied().ok_or_else(|| Error::Internal(format!("({w}) is not in P_ℓ")))
    }

    /// The raw Verlinde sum before rounding.
    pub fn raw(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<Complex64> {
        let (a, b, c) = (self.position(lambda)?, self.position(mu)?, self.position(nu)?);
        let total: Complex64 = (0..self.basis.len())
            .map(|j| self.s[a][j] * self.s[b][j] * self.s[c][j] / self.s[self.vacuum][j])
            .sum();
        Ok(total * self.scale)
    }

    pub fn dimension(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
        let z = self.raw(lambda, mu, nu)?;
        let rounded = z.re.round();
        let residue = (z.re - rounded).abs().max(z.im.abs());
        if residue >= VERLINDE_TOLERANCE || rounded < 0.0 {
            return Err(Error::VerlindeTolerance {
                value: z.re,
                tolerance: VERLINDE_TOLERANCE,
            });
        }
        Ok(rounded as u64)
    }

    /// Distance of the raw sum from the nearest integer.
    pub fn residue(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<f64> {
        let z = self.raw(lambda, mu, nu)?;
        Ok((z.re - z.re.round()).abs().max(z.im.abs()))
    }
}
