//! Finite Weyl group actions on weights.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::rootsys::{AlgebraData, Series};
use crate::weight::{Scalar, Weight};

/// Outcome of folding a weight into the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DominantReduction<T = i64> {
    pub dominant: Weight<T>,
    /// `(-1)^length`; meaningful as `ε(w)` only when `on_wall` is false.
    pub sign: i64,
    /// The input is fixed by some reflection.
    pub on_wall: bool,
    /// Number of simple reflections applied.
    pub length: usize,
}

/// `|W|` from the classical formulas.
pub fn weyl_group_order(series: Series, rank: usize) -> u64 {
    let fact = |n: usize| (1..=n as u64).product::<u64>();
    match series {
        Series::A => fact(rank + 1),
        Series::B | Series::C => (1u64 << rank) * fact(rank),
        Series::D => (1u64 << (rank - 1)) * fact(rank),
        Series::E => match rank {
            6 => 51_840,
            7 => 2_903_040,
            _ => 696_729_600,
        },
        Series::F => 1_152,
        Series::G => 12,
    }
}

impl AlgebraData {
    fn reflect_coords<T: Scalar>(&self, v: &mut [T], i: usize) {
        let c = v[i].clone();
        if c.is_zero() {
            return;
        }
        for (k, a) in self.simple_root(i).coords().iter().enumerate() {
            if *a != 0 {
                v[k] = v[k].clone() - c.clone() * T::from(*a);
            }
        }
    }

    /// `s_i(β) = β − β(H_{α_i}) α_i`.
    pub fn reflect<T: Scalar>(&self, beta: &Weight<T>, i: usize) -> Weight<T> {
        assert!(i < self.rank(), "simple reflection index {i} out of range");
        let mut v = beta.clone();
        self.reflect_coords(v.coords_mut(), i);
        v
    }

    /// Applies `s_{i_1} s_{i_2} ⋯ s_{i_n}` (rightmost first).
    pub fn apply_word<T: Scalar>(&self, word: &[usize], beta: &Weight<T>) -> Weight<T> {
        let mut v = beta.clone();
        for &i in word.iter().rev() {
            self.reflect_coords(v.coords_mut(), i);
        }
        v
    }

    /// Reflects at the lowest-index negative coordinate until dominant.
    pub fn to_dominant<T: Scalar>(&self, xi: &Weight<T>) -> DominantReduction<T> {
        let mut v = xi.clone();
        let mut sign = 1;
        let mut on_wall = false;
        let mut length = 0;
        loop {
            let coords = v.coords();
            on_wall |= coords.iter().any(|c| c.is_zero());
            match coords.iter().position(|c| *c < T::zero()) {
                None => break,
                Some(i) => {
                    self.reflect_coords(v.coords_mut(), i);
                    sign = -sign;
                    length += 1;
                }
            }
        }
        DominantReduction {
            dominant: v,
            sign,
            on_wall,
            length,
        }
    }

    /// The Weyl orbit of `λ`, bounded by `limits.max_orbit`.
    pub fn orbit(&self, lambda: &Weight) -> Result<BTreeSet<Weight>> {
        let cap = self.limits.max_orbit;
        let start = self.to_dominant(lambda).dominant;
        let mut seen: HashSet<Weight> = HashSet::from([start.clone()]);
        let mut frontier = vec![start];
        // Walking down from the dominant representative, reflecting only at
        // positive coordinates, reaches every element of the orbit.
        while let Some(v) = frontier.pop() {
            for i in 0..self.rank() {
                if v.coords()[i] > 0 {
                    let w = self.reflect(&v, i);
                    if !seen.contains(&w) {
                        if seen.len() >= cap {
                            return Err(Error::OrbitCap { cap });
                        }
                        seen.insert(w.clone());
                        frontier.push(w);
                    }
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Orbit of a strictly dominant weight, each element paired with `ε(w)`.
    pub fn signed_orbit(&self, regular: &Weight) -> Result<Vec<(Weight, i64)>> {
        if !regular.is_regular_dominant() {
            return Err(Error::Internal(format!("({regular}) is not strictly dominant")));
        }
        Ok(self
            .orbit(regular)?
            .into_iter()
            .map(|w| {
                let sign = self.to_dominant(&w).sign;
                (w, sign)
            })
            .collect())
    }

    /// `λ* = −w₀λ`, computed as the dominant representative of `−λ`.
    pub fn dual_weight(&self, lambda: &Weight) -> Result<Weight> {
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.clone()));
        }
        Ok(self.to_dominant(&-lambda).dominant)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Rational;
    use proptest::prelude::*;

    fn alg(name: &str) -> AlgebraData {
        AlgebraData::from_name(name).unwrap()
    }

    #[test]
    fn reflect_examples() {
        let a1 = alg("A1");
        assert_eq!(a1.reflect(&Weight::from([3]), 0), Weight::from([-3]));
        let a2 = alg("A2");
        assert_eq!(a2.reflect(&Weight::from([-1, 2]), 0), Weight::from([1, 1]));
        assert_eq!(a2.reflect(&Weight::from([0, 0]), 1), Weight::from([0, 0]));
        let half = Weight::new(vec![Rational::new(1, 2), Rational::from_integer(0)]);
        assert_eq!(
            a2.reflect(&half, 0),
            Weight::new(vec![Rational::new(-1, 2), Rational::new(1, 2)])
        );
    }

    #[test]
    fn to_dominant_examples() {
        let a2 = alg("A2");
        let r = a2.to_dominant(&Weight::from([-1, 2]));
        assert_eq!(r.dominant, Weight::from([1, 1]));
        assert_eq!(r.sign, -1);
        assert!(!r.on_wall);

        let a1 = alg("A1");
        let r = a1.to_dominant(&Weight::from([0]));
        assert!(r.on_wall);
        assert_eq!(r.dominant, Weight::from([0]));

        let r = a2.to_dominant(&Weight::from([2, 0]));
        assert_eq!((r.dominant, r.sign, r.on_wall), (Weight::from([2, 0]), 1, true));
        let r = a2.to_dominant(&Weight::from([2, 3]));
        assert_eq!((r.sign, r.on_wall), (1, false));
    }

    #[test]
    fn to_dominant_matches_brute_force_over_a2_weyl_group() {
        // All six elements of W(A2) as words.
        let a2 = alg("A2");
        let words: [&[usize]; 6] = [&[], &[0], &[1], &[0, 1], &[1, 0], &[0, 1, 0]];
        let xi = Weight::from([-1, 2]);
        let hits: Vec<(Weight, i64)> = words
            .iter()
            .map(|w| (a2.apply_word(w, &xi), if w.len() % 2 == 0 { 1 } else { -1 }))
            .filter(|(v, _)| v.is_dominant())
            .collect();
        assert_eq!(hits, vec![(Weight::from([1, 1]), -1)]);
    }

    #[test]
    fn orbit_examples() {
        let a1 = alg("A1");
        assert_eq!(
            a1.orbit(&Weight::from([2])).unwrap(),
            BTreeSet::from([Weight::from([2]), Weight::from([-2])])
        );
        assert_eq!(alg("A2").orbit(&Weight::from([1, 0])).unwrap().len(), 3);
        assert_eq!(alg("G2").orbit(&Weight::from([0, 0])).unwrap(), BTreeSet::from([Weight::from([0, 0])]));
    }

    #[test]
    fn regular_orbits_have_weyl_group_order() {
        for name in ["A1", "A2", "A3", "A4", "B2", "B3", "C3", "C4", "D4", "D5", "F4", "G2", "E6"] {
            let a = alg(name);
            let n = a.orbit(a.rho()).unwrap().len() as u64;
            assert_eq!(n, weyl_group_order(a.series(), a.rank()), "{name}");
        }
    }

    #[test]
    fn orbit_sizes_divide_group_order() {
        let a = alg("B3");
        let order = weyl_group_order(a.series(), a.rank());
        for c in [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [2, 0, 1]] {
            let n = a.orbit(&Weight::from(c)).unwrap().len() as u64;
            assert_eq!(order % n, 0);
        }
    }

    #[test]
    fn orbit_cap_guards_e8() {
        let e8 = alg("E8");
        assert!(matches!(e8.orbit(e8.rho()), Err(Error::OrbitCap { .. })));
    }

    #[test]
    fn dual_examples() {
        let a1 = alg("A1");
        for m in 0..6 {
            assert_eq!(a1.dual_weight(&Weight::from([m])).unwrap(), Weight::from([m]));
        }
        let a2 = alg("A2");
        assert_eq!(a2.dual_weight(&Weight::from([1, 0])).unwrap(), Weight::from([0, 1]));
        let b2 = alg("B2");
        for c in [[1, 0], [0, 1], [3, 2]] {
            assert_eq!(b2.dual_weight(&Weight::from(c)).unwrap(), Weight::from(c));
        }
        // w₀ = −1 on B2: −λ lies in the orbit of λ.
        assert!(b2.orbit(&Weight::from([3, 2])).unwrap().contains(&Weight::from([-3, -2])));
        assert!(matches!(a2.dual_weight(&Weight::from([-1, 0])), Err(Error::NotDominant(_))));
        let e6 = alg("E6");
        assert_eq!(
            e6.dual_weight(&Weight::from([1, 0, 0, 0, 0, 0])).unwrap(),
            Weight::from([0, 0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn dual_preserves_level() {
        for name in ["A3", "D5", "E6"] {
            let a = alg(name);
            for i in 0..a.rank() {
                let w = Weight::unit(a.rank(), i);
                let d = a.dual_weight(&w).unwrap();
                assert_eq!(a.level(&d), a.level(&w));
                assert_eq!(a.dual_weight(&d).unwrap(), w);
            }
        }
    }

    fn small_alg() -> impl Strategy<Value = &'static str> {
        prop::sample::select(vec!["A1", "A2", "A3", "B2", "C3", "G2", "D4"])
    }

    proptest! {
        #[test]
        fn reflect_is_involution(name in small_alg(), coords in prop::collection::vec(-6i64..=6, 4), i in 0usize..4) {
            let a = alg(name);
            let r = a.rank();
            let w = Weight::new(coords[..r.min(4)].to_vec());
            prop_assume!(w.rank() == r);
            let i = i % r;
            prop_assert_eq!(a.reflect(&a.reflect(&w, i), i), w.clone());
            // the wall H_{α_i} is fixed pointwise
            let mut on = w.clone();
            on.coords_mut()[i] = 0;
            prop_assert_eq!(a.reflect(&on, i), on);
        }

        #[test]
        fn dominant_representative_is_w_invariant(
            name in small_alg(),
            coords in prop::collection::vec(-5i64..=5, 4),
            word in prop::collection::vec(0usize..4, 0..12),
        ) {
            let a = alg(name);
            let r = a.rank();
            prop_assume!(r <= 4);
            let w = Weight::new(coords[..r].to_vec());
            let word: Vec<usize> = word.into_iter().map(|i| i % r).collect();
            let moved = a.apply_word(&word, &w);
            let lhs = a.to_dominant(&moved);
            let rhs = a.to_dominant(&w);
            prop_assert_eq!(&lhs.dominant, &rhs.dominant);
            prop_assert_eq!(lhs.on_wall, rhs.on_wall);
            if !lhs.on_wall {
                let parity = if word.len().is_multiple_of(2) { 1 } else { -1 };
                prop_assert_eq!(lhs.sign, rhs.sign * parity);
            }
            prop_assert!(a.orbit(&w).unwrap().contains(&moved));
        }

        #[test]
        fn dual_is_an_involution(name in small_alg(), coords in prop::collection::vec(0i64..=4, 4)) {
            let a = alg(name);
            let w = Weight::new(coords[..a.rank()].to_vec());
            let d = a.dual_weight(&w).unwrap();
            prop_assert!(d.is_dominant());
            prop_assert_eq!(a.dual_weight(&d).unwrap(), w);
        }
    }
}
