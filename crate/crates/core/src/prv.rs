//! PRV components of level `≤ ℓ` in fusion products when `λ ≫ μ`.
//!
//! With `λ ≫ μ` the tensor product is `Σ_{ν∈Π(μ)} m_μ(ν) V(λ+ν)`. The terms
//! split by whether `ν` is extremal (`ν = wμ`) or not (`ν ∈ S`), and by level:
//! inside `P_ℓ`, exactly `ℓ+1` (killed by π), or in `(ℓ+1, 2ℓ]` (sent to
//! `−V(s·ξ)` by the affine reflection `s = s_{θ,ℓ+ȟ}`). The reflected weights
//! land in `P_ℓ` and are never of the form `λ+wμ`, so every `V(λ+wμ)` inside
//! `P_ℓ` survives with multiplicity one.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::repcalc::VirtualModule;
use crate::rootsys::AlgebraData;
use crate::weight::Weight;

/// Whether a term `λ+ν` comes from an extremal weight `ν = wμ` or from `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TermKind {
    Extremal,
    NonExtremal,
}

/// Level band of `ξ = λ+ν` relative to `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LevelBand {
    /// `ξ ∈ P_ℓ`.
    Alcove,
    /// `ξ(H_θ) = ℓ+1`.
    Critical,
    /// `ℓ+1 < ξ(H_θ) ≤ 2ℓ`.
    Reflected,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub nu: Weight,
    pub xi: Weight,
    pub multiplicity: u64,
}

/// The `λ ≫ μ` tensor product split into six groups: `(kind, band)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GroupedTensor {
    pub s_alcove: Vec<Term>,
    pub s_critical: Vec<Term>,
    pub s_reflected: Vec<Term>,
    pub orbit_alcove: Vec<Term>,
    pub orbit_critical: Vec<Term>,
    pub orbit_reflected: Vec<Term>,
}

impl GroupedTensor {
    pub fn group(&self, kind: TermKind, band: LevelBand) -> &[Term] {
        match (kind, band) {
            (TermKind::NonExtremal, LevelBand::Alcove) => &self.s_alcove,
            (TermKind::NonExtremal, LevelBand::Critical) => &self.s_critical,
            (TermKind::NonExtremal, LevelBand::Reflected) => &self.s_reflected,
            (TermKind::Extremal, LevelBand::Alcove) => &self.orbit_alcove,
            (TermKind::Extremal, LevelBand::Critical) => &self.orbit_critical,
            (TermKind::Extremal, LevelBand::Reflected) => &self.orbit_reflected,
        }
    }

    fn group_mut(&mut self, kind: TermKind, band: LevelBand) -> &mut Vec<Term> {
        match (kind, band) {
            (TermKind::NonExtremal, LevelBand::Alcove) => &mut self.s_alcove,
            (TermKind::NonExtremal, LevelBand::Critical) => &mut self.s_critical,
            (TermKind::NonExtremal, LevelBand::Reflected) => &mut self.s_reflected,
            (TermKind::Extremal, LevelBand::Alcove) => &mut self.orbit_alcove,
            (TermKind::Extremal, LevelBand::Critical) => &mut self.orbit_critical,
            (TermKind::Extremal, LevelBand::Reflected) => &mut self.orbit_reflected,
        }
    }

    /// All terms with their group labels.
    pub fn iter(&self) -> impl Iterator<Item = (TermKind, LevelBand, &Term)> {
        [TermKind::NonExtremal, TermKind::Extremal]
            .into_iter()
            .flat_map(|k| [LevelBand::Alcove, LevelBand::Critical, LevelBand::Reflected].map(|b| (k, b)))
            .flat_map(move |(k, b)| self.group(k, b).iter().map(move |t| (k, b, t)))
    }

    /// Reassembles the tensor product.
    pub fn to_module(&self) -> VirtualModule {
        self.iter().map(|(_, _, t)| (t.xi.clone(), t.multiplicity as i64)).collect()
    }
}

/// Evidence for one `ξ` in a reflected group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: TermKind,
    pub nu: Weight,
    pub xi: Weight,
    pub reflected: Weight,
    pub reflected_level: i64,
    pub in_p_ell: bool,
    pub is_prv: bool,
    /// `s·ξ = ξ + position·θ`.
    pub position: i64,
    /// Open bounds the position must lie strictly between: `(−(wμ)(H_θ), 0)`
    /// for extremal terms, `(−r, q)` for the θ-string `ν−rθ, …, ν+qθ` in `Π(μ)`.
    pub lower: i64,
    pub upper: i64,
}

impl Witness {
    pub fn level_in_range(&self, level: i64) -> bool {
        (2..=level).contains(&self.reflected_level)
    }

    pub fn strict(&self) -> bool {
        self.lower < self.position && self.position < self.upper
    }

    pub fn holds(&self, level: i64) -> bool {
        self.in_p_ell && self.level_in_range(level) && !self.is_prv && self.strict()
    }
}

/// One non-extremal term of the collapsed fusion product, with
/// `m̃_μ(ν) = m_μ(ν) − m_μ(β)` and `λ+β = s·(λ+ν)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapsedTerm {
    pub nu: Weight,
    pub weight: Weight,
    pub multiplicity: u64,
    pub beta: Option<Weight>,
    pub beta_multiplicity: u64,
    pub reduced: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrvEntry {
    pub representative: Weight,
    pub weight: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightCount {
    pub weight: Weight,
    pub multiplicity: i64,
}

/// Verification state for one `(λ, μ, ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PRVReport {
    pub algebra: String,
    pub level: i64,
    pub lambda: Weight,
    pub mu: Weight,
    pub applicable: bool,
    pub prv_weights_in_p_ell: Vec<PrvEntry>,
    pub fusion_multiplicities: Vec<WeightCount>,
    pub proposition_witnesses: Vec<Witness>,
    /// Every witness satisfies all clauses, including the strict string bounds.
    pub proposition_holds: bool,
    /// The four-sum formula reproduces `π(V(λ) ⊗ V(μ))`.
    pub explicit_matches: bool,
    pub passed: bool,
}

impl PRVReport {
    /// The report is clean: not applicable, or every check succeeded.
    pub fn ok(&self) -> bool {
        !self.applicable || (self.passed && self.proposition_holds && self.explicit_matches)
    }
}

impl AlgebraData {
    /// Dominant representatives of `λ + wμ`, `w ∈ W`.
    pub fn classical_prv_weights(&self, lambda: &Weight, mu: &Weight) -> Result<BTreeSet<Weight>> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        Ok(self
            .orbit(mu)?
            .iter()
            .map(|wmu| self.to_dominant(&(lambda + wmu)).dominant)
            .collect())
    }

    fn require_gg(&self, lambda: &Weight, mu: &Weight, level: i64) -> Result<()> {
        if level < 1 {
            return Err(Error::InvalidLevel(level));
        }
        self.require_p_ell(lambda, level)?;
        self.require_p_ell(mu, level)?;
        if !self.is_lambda_gg_mu(lambda, mu)? {
            return Err(Error::NotDominating {
                lambda: lambda.clone(),
                mu: mu.clone(),
            });
        }
        Ok(())
    }

    /// The `λ ≫ μ` tensor product grouped by term kind and level band.
    pub fn grouped_tensor(&self, lambda: &Weight, mu: &Weight, level: i64) -> Result<GroupedTensor> {
        self.require_gg(lambda, mu, level)?;
        let ws = self.weight_system(mu)?;
        let orbit = self.orbit(mu)?;
        let mut out = GroupedTensor::default();
        for (nu, m) in ws.iter() {
            let xi = lambda + nu;
            let h = self.level(&xi);
            let band = if h <= level {
                LevelBand::Alcove
            } else if h == level + 1 {
                LevelBand::Critical
            } else if h <= 2 * level {
                LevelBand::Reflected
            } else {
                return Err(Error::Internal(format!("term ({xi}) has level {h} > 2ℓ")));
            };
            let kind = if orbit.contains(nu) {
                TermKind::Extremal
            } else {
                TermKind::NonExtremal
            };
            out.group_mut(kind, band).push(Term {
                nu: nu.clone(),
                xi,
                multiplicity: m,
            });
        }
        Ok(out)
    }

    fn build_witnesses(&self, lambda: &Weight, mu: &Weight, level: i64, grouped: &GroupedTensor) -> Result<Vec<Witness>> {
        let ws = self.weight_system(mu)?;
        let prv = self.classical_prv_weights(lambda, mu)?;
        let theta = self.theta();
        let mut out = Vec::new();
        for kind in [TermKind::Extremal, TermKind::NonExtremal] {
            for t in grouped.group(kind, LevelBand::Reflected) {
                let reflected = self.affine_reflect_theta(&t.xi, level);
                let position = level + 1 - self.level(&t.xi);
                let (lower, upper) = match kind {
                    TermKind::Extremal => (-self.level(&t.nu), 0),
                    TermKind::NonExtremal => {
                        let q = (1..).take_while(|&k| ws.contains(&t.nu.add_scaled(theta, &k))).count() as i64;
                        let r = (1..).take_while(|&k| ws.contains(&t.nu.add_scaled(theta, &-k))).count() as i64;
                        if r - q != self.level(&t.nu) {
                            return Err(Error::Internal(format!(
                                "θ-string through ({}) is broken: r = {r}, q = {q}",
                                t.nu
                            )));
                        }
                        (-r, q)
                    }
                };
                out.push(Witness {
                    kind,
                    nu: t.nu.clone(),
                    xi: t.xi.clone(),
                    reflected_level: self.level(&reflected),
                    in_p_ell: self.in_p_ell(&reflected, level),
                    is_prv: prv.contains(&reflected),
                    reflected,
                    position,
                    lower,
                    upper,
                });
            }
        }
        Ok(out)
    }

    /// Witnesses for every `ξ` of level in `(ℓ+1, 2ℓ]`; fails on the first
    /// violated clause.
    pub fn proposition_check(&self, lambda: &Weight, mu: &Weight, level: i64) -> Result<Vec<Witness>> {
        let grouped = self.grouped_tensor(lambda, mu, level)?;
        let witnesses = self.build_witnesses(lambda, mu, level, &grouped)?;
        if let Some(bad) = witnesses.iter().find(|w| !w.holds(level)) {
            return Err(Error::PropositionViolation(format!(
                "{} ℓ={level} λ=({lambda}) μ=({mu}): {}",
                self.name(),
                serde_json::to_string(bad).unwrap_or_default()
            )));
        }
        Ok(witnesses)
    }

    fn assemble_explicit(&self, level: i64, grouped: &GroupedTensor) -> VirtualModule {
        let mut out = VirtualModule::new();
        for (_, band, t) in grouped.iter() {
            let m = t.multiplicity as i64;
            match band {
                LevelBand::Alcove => out.add_term(t.xi.clone(), m),
                LevelBand::Critical => {}
                LevelBand::Reflected => out.add_term(self.affine_reflect_theta(&t.xi, level), -m),
            }
        }
        out
    }

    /// The fusion product from the four signed sums; must agree exactly with
    /// `π(V(λ) ⊗ V(μ))`.
    pub fn explicit_fusion(&self, lambda: &Weight, mu: &Weight, level: i64) -> Result<VirtualModule> {
        let grouped = self.grouped_tensor(lambda, mu, level)?;
        let explicit = self.assemble_explicit(level, &grouped);
        let expected = self.pi_map(&self.tensor_decompose_gg(lambda, mu)?, level)?;
        if explicit != expected || !explicit.is_effective() {
            return Err(Error::ExplicitMismatch {
                expected: expected.to_string(),
                found: explicit.to_string(),
            });
        }
        Ok(explicit)
    }

    /// The non-extremal part of the fusion product as coefficients
    /// `m̃_μ(ν)`. Extremal terms inside `P_ℓ` carry coefficient one.
    pub fn collapsed_fusion(&self, lambda: &Weight, mu: &Weight, level: i64) -> Result<Vec<CollapsedTerm>> {
        let grouped = self.grouped_tensor(lambda, mu, level)?;
        let ws = self.weight_system(mu)?;
        let mut terms = Vec::new();
        let mut module = VirtualModule::new();
        for t in &grouped.s_alcove {
            // s·(λ+β) = λ+ν, inverted exactly since s is a shifted involution
            let beta = &self.affine_reflect_theta(&t.xi, level) - lambda;
            let h = self.level(&(lambda + &beta));
            let valid = ws.contains(&beta) && h > level + 1 && h <= 2 * level;
            let beta_multiplicity = if valid { ws.multiplicity(&beta) } else { 0 };
            let reduced = t.multiplicity as i64 - beta_multiplicity as i64;
            module.add_term(t.xi.clone(), reduced);
            terms.push(CollapsedTerm {
                nu: t.nu.clone(),
                weight: t.xi.clone(),
                multiplicity: t.multiplicity,
                beta: valid.then_some(beta),
                beta_multiplicity,
                reduced,
            });
        }
        for t in &grouped.orbit_alcove {
            module.add_term(t.xi.clone(), 1);
        }
        let expected = self.fusion_product(lambda, mu, level)?;
        if module != expected || terms.iter().any(|t| t.reduced < 0) {
            return Err(Error::ExplicitMismatch {
                expected: expected.to_string(),
                found: module.to_string(),
            });
        }
        Ok(terms)
    }

    /// Checks that every `V(λ+wμ)` with `λ+wμ ∈ P_ℓ` has fusion multiplicity one.
    pub fn verify_theorem(&self, lambda: &Weight, mu: &Weight, level: i64) -> Result<PRVReport> {
        let mut report = PRVReport {
            algebra: self.name(),
            level,
            lambda: lambda.clone(),
            mu: mu.clone(),
            applicable: false,
            prv_weights_in_p_ell: Vec::new(),
            fusion_multiplicities: Vec::new(),
            proposition_witnesses: Vec::new(),
            proposition_holds: true,
            explicit_matches: true,
            passed: true,
        };
        match self.require_gg(lambda, mu, level) {
            Ok(()) => {}
            Err(Error::NotDominating { .. } | Error::NotInAlcove { .. } | Error::NotDominant(_)) => {
                return Ok(report)
            }
            Err(e) => return Err(e),
        }
        report.applicable = true;
        let fusion = self.fusion_product(lambda, mu, level)?;
        for wmu in self.orbit(mu)? {
            let weight = lambda + &wmu;
            if self.in_p_ell(&weight, level) {
                report.fusion_multiplicities.push(WeightCount {
                    weight: weight.clone(),
                    multiplicity: fusion.coefficient(&weight),
                });
                report.prv_weights_in_p_ell.push(PrvEntry {
                    representative: wmu,
                    weight,
                });
            }
        }
        let grouped = self.grouped_tensor(lambda, mu, level)?;
        report.proposition_witnesses = self.build_witnesses(lambda, mu, level, &grouped)?;
        report.proposition_holds = report.proposition_witnesses.iter().all(|w| w.holds(level));
        let explicit = self.assemble_explicit(level, &grouped);
        report.explicit_matches = explicit == fusion;
        report.passed = report.fusion_multiplicities.iter().all(|c| c.multiplicity == 1)
            && report.proposition_witnesses.iter().all(|w| w.in_p_ell && !w.is_prv);
        Ok(report)
    }

    /// All `(λ, μ)` in `P_ℓ × P_ℓ` with `λ ≫ μ`, in canonical order of `(λ, μ)`.
    pub fn gg_pairs(&self, level: i64) -> Result<Vec<(Weight, Weight)>> {
        let p = self.p_ell(level);
        let mut pairs = Vec::new();
        for mu in &p {
            let drop = self.max_drop(mu)?;
            for lambda in &p {
                if lambda.coords().iter().zip(&drop).all(|(c, d)| c >= d) {
                    pairs.push((lambda.clone(), mu.clone()));
                }
            }
        }
        pairs.sort();
        Ok(pairs)
    }

    /// Runs [`AlgebraData::verify_theorem`] on every `λ ≫ μ` pair for each
    /// level, in parallel. Reports come back ordered by level, then `(λ, μ)`.
    pub fn sweep(&self, levels: impl IntoIterator<Item = i64>, filter: &SweepFilter) -> Result<Vec<PRVReport>> {
        let mut jobs = Vec::new();
        for level in levels {
            for (lambda, mu) in self.gg_pairs(level)? {
                if filter.accepts(&lambda, &mu) {
                    jobs.push((level, lambda, mu));
                }
            }
        }
        jobs.par_iter()
            .map(|(level, lambda, mu)| self.verify_theorem(lambda, mu, *level))
            .collect()
    }
}

/// Restricts a sweep to given `λ` or `μ`.
#[derive(Clone, Debug, Default)]
pub struct SweepFilter {
    pub lambda: Option<Weight>,
    pub mu: Option<Weight>,
    /// Skip `μ = 0`.
    pub nontrivial: bool,
}

impl SweepFilter {
    pub fn accepts(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.lambda.as_ref().is_none_or(|l| l == lambda)
            && self.mu.as_ref().is_none_or(|m| m == mu)
            && !(self.nontrivial && mu.is_zero())
    }
}

/// Aggregate counts over a set of reports.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub applicable_pairs: usize,
    pub prv_components: usize,
    pub witnesses: usize,
    pub failures: usize,
}

impl SweepSummary {
    pub fn from_reports(reports: &[PRVReport]) -> Self {
        let mut s = SweepSummary::default();
        for r in reports.iter().filter(|r| r.applicable) {
            s.applicable_pairs += 1;
            s.prv_components += r.prv_weights_in_p_ell.len();
            s.witnesses += r.proposition_witnesses.len();
            if !r.ok() {
                s.failures += 1;
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alg(name: &str) -> AlgebraData {
        AlgebraData::from_name(name).unwrap()
    }

    fn w<const N: usize>(c: [i64; N]) -> Weight {
        Weight::from(c)
    }

    fn xis(terms: &[Term]) -> Vec<Weight> {
        terms.iter().map(|t| t.xi.clone()).collect()
    }

    #[test]
    fn classical_prv_examples() {
        let a1 = alg("A1");
        assert_eq!(a1.classical_prv_weights(&w([4]), &w([2])).unwrap(), [w([6]), w([2])].into());
        let a2 = alg("A2");
        assert_eq!(a2.classical_prv_weights(&w([2, 1]), &w([0, 0])).unwrap(), [w([2, 1])].into());
        let prv = a2.classical_prv_weights(&w([2, 2]), &w([1, 1])).unwrap();
        assert_eq!(prv.len(), 6);
        let theta = a2.theta();
        for wt in a2.orbit(theta).unwrap() {
            assert!(prv.contains(&(&w([2, 2]) + &wt)));
        }
        // without λ ≫ μ the dominant representatives can coincide
        assert_eq!(a1.classical_prv_weights(&w([0]), &w([2])).unwrap(), [w([2])].into());
    }

    #[test]
    fn grouped_tensor_examples() {
        let a1 = alg("A1");
        let g = a1.grouped_tensor(&w([4]), &w([2]), 4).unwrap();
        assert_eq!(xis(&g.s_alcove), vec![w([4])]);
        assert_eq!(g.s_alcove[0].nu, w([0]));
        assert_eq!(xis(&g.orbit_alcove), vec![w([2])]);
        assert!(g.s_reflected.is_empty() && g.s_critical.is_empty() && g.orbit_critical.is_empty());
        assert_eq!(xis(&g.orbit_reflected), vec![w([6])]);

        let g = a1.grouped_tensor(&w([3]), &w([2]), 4).unwrap();
        assert_eq!(xis(&g.orbit_critical), vec![w([5])]);

        let g = a1.grouped_tensor(&w([3]), &w([0]), 4).unwrap();
        assert_eq!(g.iter().count(), 1);
        assert_eq!(xis(&g.orbit_alcove), vec![w([3])]);

        assert!(matches!(
            a1.grouped_tensor(&w([1]), &w([2]), 4),
            Err(Error::NotDominating { .. })
        ));
        assert!(matches!(a1.grouped_tensor(&w([5]), &w([0]), 4), Err(Error::NotInAlcove { .. })));
    }

    #[test]
    fn proposition_examples() {
        let a1 = alg("A1");
        let ws = a1.proposition_check(&w([4]), &w([2]), 4).unwrap();
        assert_eq!(ws.len(), 1);
        let x = &ws[0];
        assert_eq!((x.xi.clone(), x.reflected.clone()), (w([6]), w([4])));
        assert!(x.in_p_ell && !x.is_prv && x.strict());
        assert_eq!((x.lower, x.position, x.upper), (-2, -1, 0));

        assert!(a1.proposition_check(&w([4]), &w([2]), 6).unwrap().is_empty());

        // (1,1) ≫ (1,1) fails in A2: (1,1) + (−2,1) is not dominant
        let a2 = alg("A2");
        assert!(matches!(
            a2.proposition_check(&w([1, 1]), &w([1, 1]), 2),
            Err(Error::NotDominating { .. })
        ));
        let ws = a2.proposition_check(&w([2, 2]), &w([1, 1]), 4).unwrap();
        assert_eq!(ws.len(), 1);
        assert_eq!((ws[0].xi.clone(), ws[0].reflected.clone()), (w([3, 3]), w([2, 2])));
        assert_eq!((ws[0].lower, ws[0].position, ws[0].upper), (-2, -1, 0));
    }

    #[test]
    fn non_extremal_witnesses() {
        let a1 = alg("A1");
        let ws = a1.proposition_check(&w([4]), &w([4]), 4).unwrap();
        let x = ws.iter().find(|x| x.kind == TermKind::NonExtremal).unwrap();
        assert_eq!((x.nu.clone(), x.xi.clone(), x.reflected.clone()), (w([2]), w([6]), w([4])));
        // θ-string 2 − kα inside Π(4ω): q = 1, r = 3
        assert_eq!((x.lower, x.position, x.upper), (-3, -1, 1));

        let b2 = alg("B2");
        let ws = b2.proposition_check(&w([2, 4]), &w([2, 0]), 6).unwrap();
        assert!(ws.iter().any(|x| x.kind == TermKind::NonExtremal && x.reflected == w([2, 4])));

        let a2 = alg("A2");
        let ws = a2.proposition_check(&w([3, 3]), &w([0, 3]), 6).unwrap();
        let x = ws.iter().find(|x| x.kind == TermKind::NonExtremal).unwrap();
        assert_eq!((x.nu.clone(), x.reflected.clone()), (w([1, 1]), w([3, 3])));
    }

    #[test]
    fn explicit_fusion_examples() {
        let a1 = alg("A1");
        let f = a1.explicit_fusion(&w([4]), &w([2]), 4).unwrap();
        assert_eq!(f, VirtualModule::irreducible(w([2])));
        assert_eq!(f, a1.fusion_product(&w([4]), &w([2]), 4).unwrap());
        let f = a1.explicit_fusion(&w([4]), &w([2]), 6).unwrap();
        assert_eq!(f.to_string(), "V(2)+V(4)+V(6)");
        let a2 = alg("A2");
        let f = a2.explicit_fusion(&w([1, 2]), &w([0, 0]), 3).unwrap();
        assert_eq!(f, VirtualModule::irreducible(w([1, 2])));
        let f = a2.explicit_fusion(&w([2, 2]), &w([1, 1]), 4).unwrap();
        assert_eq!(f.to_string(), "V(0,3)+V(1,1)+V(2,2)+V(3,0)");
    }

    #[test]
    fn collapsed_examples() {
        let a1 = alg("A1");
        let c = a1.collapsed_fusion(&w([4]), &w([2]), 4).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].nu, w([0]));
        assert_eq!(c[0].beta, Some(w([2])));
        assert_eq!((c[0].multiplicity, c[0].beta_multiplicity, c[0].reduced), (1, 1, 0));

        let c = a1.collapsed_fusion(&w([4]), &w([2]), 6).unwrap();
        assert_eq!(c[0].beta, None);
        assert_eq!(c[0].reduced, 1);

        let a2 = alg("A2");
        let c = a2.collapsed_fusion(&w([2, 2]), &w([1, 1]), 4).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!((c[0].multiplicity, c[0].beta.clone(), c[0].reduced), (2, Some(w([1, 1])), 1));
    }

    #[test]
    fn verify_examples() {
        let a1 = alg("A1");
        let counts = |r: &PRVReport| -> Vec<(Weight, i64)> {
            r.fusion_multiplicities.iter().map(|c| (c.weight.clone(), c.multiplicity)).collect()
        };
        let r = a1.verify_theorem(&w([4]), &w([2]), 6).unwrap();
        assert!(r.applicable && r.passed && r.ok());
        assert_eq!(counts(&r), vec![(w([2]), 1), (w([6]), 1)]);
        let r = a1.verify_theorem(&w([4]), &w([2]), 4).unwrap();
        assert!(r.passed && r.ok());
        assert_eq!(counts(&r), vec![(w([2]), 1)]);
        let r = a1.verify_theorem(&w([3]), &w([0]), 4).unwrap();
        assert_eq!(counts(&r), vec![(w([3]), 1)]);
        assert!(r.passed);

        let r = a1.verify_theorem(&w([1]), &w([2]), 4).unwrap();
        assert!(!r.applicable && r.ok());
        let r = a1.verify_theorem(&w([5]), &w([2]), 4).unwrap();
        assert!(!r.applicable);
        assert!(a1.verify_theorem(&w([5, 1]), &w([2]), 4).is_err());

        let json = serde_json::to_value(a1.verify_theorem(&w([4]), &w([2]), 4).unwrap()).unwrap();
        assert_eq!(json["lambda"], serde_json::json!([4]));
        assert_eq!(json["proposition_witnesses"][0]["reflected"], serde_json::json!([4]));
        assert_eq!(json["proposition_witnesses"][0]["kind"], "extremal");
    }

    #[test]
    fn gg_pairs_match_definition() {
        for name in ["A1", "A2", "B2", "G2", "A3"] {
            let a = alg(name);
            for level in 1..=3 {
                let pairs = a.gg_pairs(level).unwrap();
                let p = a.p_ell(level);
                let mut brute = Vec::new();
                for lambda in &p {
                    for mu in &p {
                        if a.is_lambda_gg_mu(lambda, mu).unwrap() {
                            brute.push((lambda.clone(), mu.clone()));
                        }
                    }
                }
                assert_eq!(pairs, brute, "{name} @ {level}");
            }
        }
        // A1 at level 1: (1) ≫ (1) is the only nontrivial pair
        let a1 = alg("A1");
        let pairs = a1.gg_pairs(1).unwrap();
        assert_eq!(pairs, vec![(w([0]), w([0])), (w([1]), w([0])), (w([1]), w([1]))]);
    }

    #[test]
    fn small_sweep_passes() {
        for name in ["A1", "A2", "B2", "G2"] {
            let a = alg(name);
            let reports = a.sweep(1..=4, &SweepFilter::default()).unwrap();
            let summary = SweepSummary::from_reports(&reports);
            assert_eq!(summary.failures, 0, "{name}");
            assert!(summary.applicable_pairs > 0);
            let again = a.sweep(1..=4, &SweepFilter::default()).unwrap();
            assert_eq!(reports, again);
        }
    }

    #[test]
    fn sweep_filters() {
        let a1 = alg("A1");
        let f = SweepFilter {
            nontrivial: true,
            ..Default::default()
        };
        assert_eq!(a1.sweep([1], &f).unwrap().len(), 1);
        let f = SweepFilter {
            mu: Some(w([2])),
            ..Default::default()
        };
        assert!(a1.sweep([1], &f).unwrap().is_empty());
    }

    fn small_alg() -> impl Strategy<Value = &'static str> {
        prop::sample::select(vec!["A1", "A2", "B2", "G2", "A3", "C3"])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn random_pairs_verify(name in small_alg(), level in 1i64..=4, seed in 0usize..10_000) {
            let a = alg(name);
            let pairs = a.gg_pairs(level).unwrap();
            let (lambda, mu) = &pairs[seed % pairs.len()];
            let grouped = a.grouped_tensor(lambda, mu, level).unwrap();
            prop_assert_eq!(grouped.to_module(), a.tensor_decompose(lambda, mu).unwrap());
            prop_assert_eq!(
                a.explicit_fusion(lambda, mu, level).unwrap(),
                a.fusion_product(lambda, mu, level).unwrap()
            );
            for t in a.collapsed_fusion(lambda, mu, level).unwrap() {
                prop_assert!(t.reduced >= 0);
            }
            let report = a.verify_theorem(lambda, mu, level).unwrap();
            prop_assert!(report.applicable && report.ok());
            for x in &report.proposition_witnesses {
                prop_assert!(x.holds(level));
            }
        }
    }
}
