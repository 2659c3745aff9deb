//! Dense linear algebra over the rationals.

use num_traits::{One, Zero};

use super::poly::{Coefficient, SparsePolynomial};
use std::collections::BTreeMap;

pub type QMatrix = Vec<Vec<Coefficient>>;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(a: &mut QMatrix) -> Vec<usize> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Coefficient::one() / &a[r][c];
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(a: &QMatrix) -> usize {
    let mut m = a.clone();
    rref(&mut m).len()
}

/// Solve `a x = b`; `None` if inconsistent. Free variables are set to 0.
pub fn solve(a: &QMatrix, b: &[Coefficient]) -> Option<Vec<Coefficient>> {
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: QMatrix = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Coefficient::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug[r][cols].clone();
    }
    Some(x)
}

pub fn inverse(a: &QMatrix) -> Option<QMatrix> {
    let n = a.len();
    let mut aug: QMatrix = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Coefficient::one()
                } else {
                    Coefficient::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn transpose(a: &QMatrix) -> QMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Express `target` as a rational combination of `basis`, where every
/// element is a vector of polynomials compared coefficient by coefficient.
pub fn express_in_span(basis: &[Vec<SparsePolynomial>], target: &[SparsePolynomial]) -> Option<Vec<Coefficient>> {
    let mut rows: BTreeMap<(usize, super::poly::Monomial), usize> = BTreeMap::new();
    let mut collect = |v: &[SparsePolynomial]| {
        for (k, p) in v.iter().enumerate() {
            for (m, _) in p.terms() {
                let next = rows.len();
                rows.entry((k, *m)).or_insert(next);
            }
        }
    };
    for b in basis {
        collect(b);
    }
    collect(target);
    let nrows = rows.len();
    let mut a = vec![vec![Coefficient::zero(); basis.len()]; nrows];
    let mut rhs = vec![Coefficient::zero(); nrows];
    for (j, b) in basis.iter().enumerate() {
        for (k, p) in b.iter().enumerate() {
            for (m, c) in p.terms() {
                a[rows[&(k, *m)]][j] = c.clone();
            }
        }
    }
    for (k, p) in target.iter().enumerate() {
        for (m, c) in p.terms() {
            rhs[rows[&(k, *m)]] = c.clone();
        }
    }
    solve(&a, &rhs)
}

/// Rank of a family of polynomial vectors as a vector space over Q.
pub fn span_rank(family: &[Vec<SparsePolynomial>]) -> usize {
    let mut index: BTreeMap<(usize, super::poly::Monomial), usize> = BTreeMap::new();
    for v in family {
        for (k, p) in v.iter().enumerate() {
            for (m, _) in p.terms() {
                let next = index.len();
                index.entry((k, *m)).or_insert(next);
            }
        }
    }
    let a: QMatrix = family
        .iter()
        .map(|v| {
            let mut row = vec![Coefficient::zero(); index.len()];
            for (k, p) in v.iter().enumerate() {
                for (m, c) in p.terms() {
                    row[index[&(k, *m)]] = c.clone();
                }
            }
            row
        })
        .collect();
    rank(&a)
}
