//! Small exact linear algebra over `Rational` and `i64`.

use num_traits::{One, Zero};
#[cfg(test)]
use num_traits::Signed;

use crate::weight::Rational;

pub(crate) fn to_rational_matrix(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x)).collect())
        .collect()
}

/// Gauss–Jordan inverse. `None` when singular.
pub(crate) fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for c in 0..2 * n {
                    let v = a[col][c];
                    a[r][c] -= f * v;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

#[cfg(test)]
pub(crate) fn determinant(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            a.swap(col, pivot);
            det = -det;
        }
        let p = a[col][col];
        det *= p;
        for r in col + 1..n {
            let f = a[r][col] / p;
            if f.is_zero() {
                continue;
            }
            for c in col..n {
                let v = a[col][c];
                a[r][c] -= f * v;
            }
        }
    }
    det
}

/// Row-echelon integer basis of the lattice spanned by `generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntLattice {
    rows: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl IntLattice {
    pub(crate) fn span(dim: usize, generators: &[Vec<i64>]) -> Self {
        let mut work: Vec<Vec<i64>> = generators
            .iter()
            .filter(|g| g.iter().any(|&x| x != 0))
            .cloned()
            .collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..dim {
            loop {
                let mut nonzero: Vec<usize> = (0..work.len()).filter(|&r| work[r][col] != 0).collect();
                if nonzero.len() <= 1 {
                    if let Some(&r) = nonzero.first() {
                        let mut row = work.swap_remove(r);
                        if row[col] < 0 {
                            row.iter_mut().for_each(|x| *x = -*x);
                        }
                        rows.push(row);
                        pivots.push(col);
                    }
                    break;
                }
                nonzero.sort_by_key(|&r| work[r][col].abs());
                let best = nonzero[0];
                let pivot_row = work[best].clone();
                for &r in &nonzero[1..] {
                    let q = work[r][col].div_euclid(pivot_row[col]);
                    for c in 0..dim {
                        work[r][c] -= q * pivot_row[c];
                    }
                }
                work.retain(|row| row.iter().any(|&x| x != 0));
            }
        }
        IntLattice { rows, pivots }
    }

    pub(crate) fn basis(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub(crate) fn contains(&self, v: &[i64]) -> bool {
        let mut x = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if x[p] % row[p] != 0 {
                return false;
            }
            let q = x[p] / row[p];
            for (xi, ri) in x.iter_mut().zip(row) {
                *xi -= q * ri;
            }
        }
        x.iter().all(|&c| c == 0)
    }

    /// Absolute value of the determinant of the basis (full-rank lattices only).
    pub(crate) fn index(&self) -> i64 {
        self.rows.iter().zip(&self.pivots).map(|(r, &p)| r[p].abs()).product()
    }
}

#[cfg(test)]
pub(crate) fn is_positive_definite(m: &[Vec<Rational>]) -> bool {
    (1..=m.len()).all(|k| {
        let minor: Vec<Vec<Rational>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
        determinant(&minor).is_positive()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_a2_cartan() {
        let a = to_rational_matrix(&[vec![2, -1], vec![-1, 2]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], Rational::new(2, 3));
        assert_eq!(inv[0][1], Rational::new(1, 3));
        assert_eq!(determinant(&a), Rational::from_integer(3));
    }

    #[test]
    fn singular_has_no_inverse() {
        let a = to_rational_matrix(&[vec![1, 2], vec![2, 4]]);
        assert!(inverse(&a).is_none());
        assert!(determinant(&a).is_zero());
    }

    #[test]
    fn lattice_membership() {
        let l = IntLattice::span(2, &[vec![1, 0], vec![1, 2], vec![0, 2]]);
        assert_eq!(l.index(), 2);
        assert!(l.contains(&[3, 4]));
        assert!(l.contains(&[0, -2]));
        assert!(!l.contains(&[0, 1]));
        assert!(!l.contains(&[1, 1]));
    }
}
