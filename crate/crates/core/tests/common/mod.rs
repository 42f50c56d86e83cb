//! Independent oracles shared by the integration tests and the acceptance run.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use fusionkit::{AlgebraData, Rational, Result, VirtualModule, Weight};

/// sl₂ fusion rule: `|a−b| ≤ c ≤ min(a+b, 2ℓ−a−b)` and `a+b+c` even.
pub fn sl2_rule(a: i64, b: i64, c: i64, level: i64) -> i64 {
    ((a - b).abs() <= c && c <= (a + b).min(2 * level - a - b) && (a + b + c) % 2 == 0) as i64
}

/// Decomposes `ch V(λ) · ch V(μ)` by repeatedly stripping the character of
/// the highest remaining weight.
pub fn brute_force_tensor(alg: &AlgebraData, lambda: &Weight, mu: &Weight) -> Result<VirtualModule> {
    let (a, b) = (alg.weight_system(lambda)?, alg.weight_system(mu)?);
    let mut character: BTreeMap<Weight, i64> = BTreeMap::new();
    for (x, mx) in a.iter() {
        for (y, my) in b.iter() {
            *character.entry(x + y).or_default() += (mx * my) as i64;
        }
    }
    let height = |w: &Weight| -> Rational { alg.to_simple_coords(w).into_iter().sum() };
    let mut out = VirtualModule::new();
    loop {
        character.retain(|_, c| *c != 0);
        let Some(top) = character.keys().max_by(|x, y| height(x).cmp(&height(y))).cloned() else {
            break;
        };
        assert!(top.is_dominant(), "highest remaining weight ({top}) is not dominant");
        let c = character[&top];
        for (nu, m) in alg.weight_system(&top)?.iter() {
            *character.entry(nu.clone()).or_default() -= c * m as i64;
        }
        out.add_term(top, c);
    }
    Ok(out)
}

/// Dominant weights with `dim V(λ) ≤ cap`. Dimension is monotone in each
/// coordinate, so the search stops at the first weight over the cap.
pub fn dominant_up_to_dim(alg: &AlgebraData, cap: u64) -> Vec<Weight> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![Weight::zero(alg.rank())];
    while let Some(w) = stack.pop() {
        if seen.contains(&w) || alg.dimension(&w).unwrap() > cap {
            continue;
        }
        for i in 0..alg.rank() {
            let mut next = w.clone();
            next.coords_mut()[i] += 1;
            stack.push(next);
        }
        seen.insert(w);
    }
    seen.into_iter().collect()
}

/// Pairs `(λ, μ)` with `dim V(λ) · dim V(μ) ≤ cap`.
pub fn pairs_up_to_dim(alg: &AlgebraData, cap: u64) -> Vec<(Weight, Weight)> {
    let weights = dominant_up_to_dim(alg, cap);
    let mut out = Vec::new();
    for x in &weights {
        for y in &weights {
            if alg.dimension(x).unwrap() * alg.dimension(y).unwrap() <= cap {
                out.push((x.clone(), y.clone()));
            }
        }
    }
    out
}

/// Algebras and maximal levels of the verification grid.
pub const GRID: [(&str, i64); 6] = [("A1", 6), ("A2", 6), ("B2", 6), ("G2", 6), ("A3", 3), ("C3", 3)];
