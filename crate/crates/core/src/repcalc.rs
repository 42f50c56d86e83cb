//! Weight systems, dimensions, and tensor product decomposition.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::AlgebraData;
use crate::weight::Weight;

/// Weights of `V(μ)` with their multiplicities `m_μ(ν)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    highest: Weight,
    dominant: BTreeMap<Weight, u64>,
    table: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    /// `m_μ(ν)`, zero off the support.
    pub fn multiplicity(&self, nu: &Weight) -> u64 {
        self.table.get(nu).copied().unwrap_or(0)
    }

    pub fn contains(&self, nu: &Weight) -> bool {
        self.table.contains_key(nu)
    }

    /// Multiplicities of the dominant weights only.
    pub fn dominant(&self) -> &BTreeMap<Weight, u64> {
        &self.dominant
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.table.iter().map(|(w, &m)| (w, m))
    }

    /// `Π(μ)`.
    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.table.keys()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn dimension(&self) -> u64 {
        self.table.values().sum()
    }
}

/// Memo table for weight systems. Entries are inserted fully built, so a
/// reader either misses or sees a complete table.
#[derive(Debug, Default)]
pub struct WeightCache {
    inner: RwLock<HashMap<Weight, Arc<WeightSystem>>>,
}

impl Clone for WeightCache {
    fn clone(&self) -> Self {
        WeightCache::default()
    }
}

impl WeightCache {
    fn get(&self, mu: &Weight) -> Option<Arc<WeightSystem>> {
        self.inner.read().expect("weight cache poisoned").get(mu).cloned()
    }

    fn insert(&self, ws: WeightSystem) -> Arc<WeightSystem> {
        let mut map = self.inner.write().expect("weight cache poisoned");
        map.entry(ws.highest.clone()).or_insert_with(|| Arc::new(ws)).clone()
    }

    pub fn len(&self) -> usize {
        self.inner.read().expect("weight cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Finitely supported signed combination of irreducibles `V(λ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VirtualModule {
    terms: BTreeMap<Weight, i64>,
}

impl VirtualModule {
    pub fn new() -> Self {
        VirtualModule::default()
    }

    pub fn irreducible(lambda: Weight) -> Self {
        let mut m = VirtualModule::new();
        m.add_term(lambda, 1);
        m
    }

    pub fn add_term(&mut self, lambda: Weight, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(lambda);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, lambda: &Weight) -> i64 {
        self.terms.get(lambda).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// All coefficients nonnegative.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    pub fn is_supported_on_dominant(&self) -> bool {
        self.terms.keys().all(Weight::is_dominant)
    }

    pub fn total_multiplicity(&self) -> i64 {
        self.terms.values().sum()
    }

    /// `Σ c_λ dim V(λ)`.
    pub fn dimension(&self, alg: &AlgebraData) -> Result<i128> {
        self.terms.iter().try_fold(0i128, |acc, (w, &c)| {
            Ok(acc + c as i128 * alg.dimension(w)? as i128)
        })
    }

    /// Terms listed from the canonically largest weight down.
    pub fn to_string_descending(&self) -> String {
        format_terms(self.terms.iter().rev())
    }
}

fn format_terms<'a>(terms: impl Iterator<Item = (&'a Weight, &'a i64)>) -> String {
    let mut out = String::new();
    for (w, &c) in terms {
        if c < 0 {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.abs() != 1 {
            out.push_str(&c.abs().to_string());
        }
        out.push_str(&format!("V({w})"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for VirtualModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(self.terms.iter()))
    }
}

impl Serialize for VirtualModule {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            weight: &'a Weight,
            multiplicity: i64,
        }
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (weight, &multiplicity) in &self.terms {
            seq.serialize_element(&Term { weight, multiplicity })?;
        }
        seq.end()
    }
}

impl FromIterator<(Weight, i64)> for VirtualModule {
    fn from_iter<I: IntoIterator<Item = (Weight, i64)>>(iter: I) -> Self {
        let mut m = VirtualModule::new();
        for (w, c) in iter {
            m.add_term(w, c);
        }
        m
    }
}

impl AddAssign<&VirtualModule> for VirtualModule {
    fn add_assign(&mut self, rhs: &VirtualModule) {
        for (w, &c) in &rhs.terms {
            self.add_term(w.clone(), c);
        }
    }
}

impl Add for &VirtualModule {
    type Output = VirtualModule;
    fn add(self, rhs: &VirtualModule) -> VirtualModule {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &VirtualModule {
    type Output = VirtualModule;
    fn neg(self) -> VirtualModule {
        self * -1
    }
}

impl Sub for &VirtualModule {
    type Output = VirtualModule;
    fn sub(self, rhs: &VirtualModule) -> VirtualModule {
        self + &(-rhs)
    }
}

impl Mul<i64> for &VirtualModule {
    type Output = VirtualModule;
    fn mul(self, k: i64) -> VirtualModule {
        self.terms.iter().map(|(w, &c)| (w.clone(), c * k)).collect()
    }
}

impl AlgebraData {
    /// Weyl dimension formula `Π_{α>0} (λ+ρ)(H_α) / ρ(H_α)`.
    pub fn dimension_exact(&self, lambda: &Weight) -> Result<BigUint> {
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        let shifted = lambda + self.rho();
        let mut num = BigUint::from(1u32);
        let mut den = BigUint::from(1u32);
        for alpha in self.positive_roots() {
            num *= BigUint::from(alpha.eval(shifted.coords()) as u64);
            den *= BigUint::from(alpha.eval(self.rho().coords()) as u64);
        }
        if !(&num % &den).is_zero() {
            return Err(Error::Internal(format!("Weyl dimension of ({lambda}) is not integral")));
        }
        Ok(num / den)
    }

    /// `dim V(λ)` as a machine integer.
    pub fn dimension(&self, lambda: &Weight) -> Result<u64> {
        let d = self.dimension_exact(lambda)?;
        d.to_u64().ok_or_else(|| Error::DimensionCap {
            weight: lambda.clone(),
            dim: d.to_string(),
            cap: u64::MAX,
        })
    }

    fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: lambda.rank(),
            });
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        Ok(())
    }

    /// `Π(μ)` with multiplicities, via Freudenthal's recursion on dominant
    /// weights extended by Weyl invariance. Results are memoized.
    pub fn weight_system(&self, mu: &Weight) -> Result<Arc<WeightSystem>> {
        self.check_dominant(mu)?;
        if let Some(ws) = self.weight_cache.get(mu) {
            return Ok(ws);
        }
        let dim = self.dimension_exact(mu)?;
        if dim > BigUint::from(self.limits.max_dim) {
            return Err(Error::DimensionCap {
                weight: mu.clone(),
                dim: dim.to_string(),
                cap: self.limits.max_dim,
            });
        }
        let dominant = self.freudenthal(mu)?;
        let mut table = BTreeMap::new();
        for (nu, &m) in &dominant {
            for w in self.orbit(nu)? {
                table.insert(w, m);
            }
        }
        Ok(self.weight_cache.insert(WeightSystem {
            highest: mu.clone(),
            dominant,
            table,
        }))
    }

    /// Dominant weights of `V(μ)`: closure of `{μ}` under root strings.
    fn dominant_weights(&self, mu: &Weight) -> BTreeSet<Weight> {
        let mut found = BTreeSet::from([mu.clone()]);
        let mut queue = vec![mu.clone()];
        while let Some(lambda) = queue.pop() {
            for alpha in self.positive_roots() {
                let p = alpha.eval(lambda.coords());
                for t in 1..=p {
                    let nu = lambda.add_scaled(alpha.weight(), &-t);
                    let d = self.to_dominant(&nu).dominant;
                    if found.insert(d.clone()) {
                        queue.push(d);
                    }
                }
            }
        }
        found
    }

    fn freudenthal(&self, mu: &Weight) -> Result<BTreeMap<Weight, u64>> {
        let mut order: Vec<(i64, Weight)> = self
            .dominant_weights(mu)
            .into_iter()
            .map(|nu| {
                let depth: i64 = self
                    .to_simple_coords(&(mu - &nu))
                    .iter()
                    .map(|q| q.to_integer())
                    .sum();
                (depth, nu)
            })
            .collect();
        order.sort();

        let shifted_mu = mu + self.rho();
        let top = self.inner_scaled(shifted_mu.coords(), shifted_mu.coords());
        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        for (depth, nu) in order {
            if depth == 0 {
                mult.insert(nu, 1);
                continue;
            }
            let mut acc: i64 = 0;
            for alpha in self.positive_roots() {
                let mut k = 1;
                loop {
                    let up = nu.add_scaled(alpha.weight(), &k);
                    let rep = self.to_dominant(&up).dominant;
                    let Some(&m) = mult.get(&rep) else {
                        break;
                    };
                    acc += m as i64 * self.inner_scaled(up.coords(), alpha.weight().coords());
                    k += 1;
                }
            }
            let shifted = &nu + self.rho();
            let den = top - self.inner_scaled(shifted.coords(), shifted.coords());
            if den <= 0 || (2 * acc) % den != 0 {
                return Err(Error::Internal(format!(
                    "Freudenthal step at ({nu}) for μ = ({mu}) is not integral: 2·{acc}/{den}"
                )));
            }
            let m = 2 * acc / den;
            if m > 0 {
                mult.insert(nu, m as u64);
            }
        }
        Ok(mult)
    }

    /// The set `S`: weights of `V(μ)` outside the orbit `Wμ`.
    pub fn non_extremal_weights(&self, mu: &Weight) -> Result<BTreeSet<Weight>> {
        let ws = self.weight_system(mu)?;
        Ok(ws
            .support()
            .filter(|nu| &self.to_dominant(*nu).dominant != mu)
            .cloned()
            .collect())
    }

    /// Per-coordinate `max_ν −ν_i` over `Π(μ)`; `λ ≫ μ` iff `λ_i ≥ drop_i`.
    pub fn max_drop(&self, mu: &Weight) -> Result<Vec<i64>> {
        let ws = self.weight_system(mu)?;
        let mut drop = vec![0; self.rank()];
        for nu in ws.support() {
            for (d, &c) in drop.iter_mut().zip(nu.coords()) {
                *d = (*d).max(-c);
            }
        }
        Ok(drop)
    }

    /// `λ ≫ μ`: `λ + ν` is dominant for every `ν ∈ Π(μ)`.
    pub fn is_lambda_gg_mu(&self, lambda: &Weight, mu: &Weight) -> Result<bool> {
        self.check_dominant(lambda)?;
        let ws = self.weight_system(mu)?;
        let gg = ws.support().all(|nu| (lambda + nu).is_dominant());
        Ok(gg)
    }

    /// `V(λ) ⊗ V(μ)` by Klimyk's formula: each `λ + ν` is shifted by `ρ`,
    /// folded into the dominant chamber with its sign, and dropped on walls.
    pub fn tensor_decompose(&self, lambda: &Weight, mu: &Weight) -> Result<VirtualModule> {
        self.check_dominant(lambda)?;
        self.check_dominant(mu)?;
        let ws = self.weight_system(mu)?;
        let shifted = lambda + self.rho();
        let mut out = VirtualModule::new();
        for (nu, m) in ws.iter() {
            let r = self.to_dominant(&(&shifted + nu));
            if r.on_wall {
                continue;
            }
            out.add_term(&r.dominant - self.rho(), r.sign * m as i64);
        }
        Ok(out)
    }

    /// `V(λ) ⊗ V(μ) = Σ_{ν ∈ Π(μ)} m_μ(ν) V(λ+ν)`, valid when `λ ≫ μ`.
    pub fn tensor_decompose_gg(&self, lambda: &Weight, mu: &Weight) -> Result<VirtualModule> {
        if !self.is_lambda_gg_mu(lambda, mu)? {
            return Err(Error::NotDominating {
                lambda: lambda.clone(),
                mu: mu.clone(),
            });
        }
        let ws = self.weight_system(mu)?;
        Ok(ws.iter().map(|(nu, m)| (lambda + nu, m as i64)).collect())
    }
}
