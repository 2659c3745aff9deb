use std::ops::{Index, IndexMut};

use super::poly::SparsePolynomial;
use crate::error::AlgebraError;

/// Largest size handled by fraction-free elimination directly; larger
/// determinants expand along the first row down to this size.
const BAREISS_MAX: usize = 4;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<SparsePolynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize, nvars: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            nvars,
            entries: vec![SparsePolynomial::zero(nvars); rows * cols],
        }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        let mut m = Self::zeros(n, n, nvars);
        for i in 0..n {
            m[(i, i)] = SparsePolynomial::one(nvars);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<SparsePolynomial>>) -> Result<Self, AlgebraError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(AlgebraError::DimensionMismatch("ragged rows".into()));
        }
        let nvars = rows.iter().flatten().map(SparsePolynomial::nvars).max().unwrap_or(0);
        Ok(PolyMatrix {
            rows: r,
            cols: c,
            nvars,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn row(&self, i: usize) -> &[SparsePolynomial] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<SparsePolynomial>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut t = Self::zeros(self.cols, self.rows, self.nvars);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols, self.nvars.max(other.nvars));
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = SparsePolynomial::zero(out.nvars);
                for k in 0..self.cols {
                    acc = &acc + &(&self[(i, k)] * &other[(k, j)]);
                }
                out[(i, j)] = acc;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, p: &SparsePolynomial) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            nvars: self.nvars,
            entries: self.entries.iter().map(|e| e * p).collect(),
        }
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                entries.push(self[(i, j)].clone());
            }
        }
        PolyMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            nvars: self.nvars,
            entries,
        }
    }

    fn require_square(&self) -> Result<usize, AlgebraError> {
        if self.rows != self.cols {
            return Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok(self.rows)
    }

    pub fn det(&self) -> Result<SparsePolynomial, AlgebraError> {
        let n = self.require_square()?;
        if n <= BAREISS_MAX {
            return Ok(bareiss_det(self));
        }
        let mut acc = SparsePolynomial::zero(self.nvars);
        for j in 0..n {
            if self[(0, j)].is_zero() {
                continue;
            }
            let term = &self[(0, j)] * &self.minor(0, j).det()?;
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        Ok(acc)
    }

    /// Rank over the field of rational functions.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        let mut prev = SparsePolynomial::one(self.nvars);
        for col in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(rank, p);
            let pivot = a[(rank, col)].clone();
            for r in rank + 1..a.rows {
                for c in col + 1..a.cols {
                    let v = &(&pivot * &a[(r, c)]) - &(&a[(r, col)] * &a[(rank, c)]);
                    a[(r, c)] = v.exact_divide(&prev).expect("Bareiss step divides exactly");
                }
                a[(r, col)] = SparsePolynomial::zero(self.nvars);
            }
            prev = pivot;
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = SparsePolynomial;
    fn index(&self, (i, j): (usize, usize)) -> &SparsePolynomial {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut SparsePolynomial {
        &mut self.entries[i * self.cols + j]
    }
}

fn bareiss_det(m: &PolyMatrix) -> SparsePolynomial {
    let n = m.rows;
    if n == 0 {
        return SparsePolynomial::one(m.nvars);
    }
    let mut a = m.clone();
    let mut sign = false;
    let mut prev = SparsePolynomial::one(m.nvars);
    for k in 0..n - 1 {
        if a[(k, k)].is_zero() {
            match (k + 1..n).find(|&r| !a[(r, k)].is_zero()) {
                Some(r) => {
                    a.swap_rows(k, r);
                    sign = !sign;
                }
                None => return SparsePolynomial::zero(m.nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                a[(i, j)] = v.exact_divide(&prev).expect("Bareiss step divides exactly");
            }
        }
        prev = a[(k, k)].clone();
    }
    let d = a[(n - 1, n - 1)].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant and adjugate, with `M * adj = det * I`.
pub fn det_adjugate(m: &PolyMatrix) -> Result<(SparsePolynomial, PolyMatrix), AlgebraError> {
    let n = m.require_square()?;
    let det = m.det()?;
    let mut adj = PolyMatrix::zeros(n, n, m.nvars);
    if n == 1 {
        adj[(0, 0)] = SparsePolynomial::one(m.nvars);
        return Ok((det, adj));
    }
    for i in 0..n {
        for j in 0..n {
            let c = m.minor(i, j).det()?;
            adj[(j, i)] = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    Ok((det, adj))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::var(n, i)
    }

    #[test]
    fn two_by_two_adjugate() {
        let (a, b, c, d) = (v(4, 0), v(4, 1), v(4, 2), v(4, 3));
        let m = PolyMatrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c.clone(), d.clone()]]).unwrap();
        let (det, adj) = det_adjugate(&m).unwrap();
        assert_eq!(det, &(&a * &d) - &(&b * &c));
        let expected = PolyMatrix::from_rows(vec![vec![d.clone(), -&b], vec![-&c, a.clone()]]).unwrap();
        assert_eq!(adj, expected);
        assert_eq!(m.mul(&adj).unwrap(), PolyMatrix::identity(2, 4).scale(&det));
    }

    #[test]
    fn singular_matrix_has_zero_det() {
        let p = &v(2, 0) + &v(2, 1);
        let m = PolyMatrix::from_rows(vec![vec![p.clone(), p.clone()], vec![p.clone(), p]]).unwrap();
        assert!(m.det().unwrap().is_zero());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn pivoting_handles_zero_leading_entry() {
        let one = SparsePolynomial::one(1);
        let zero = SparsePolynomial::zero(1);
        let m = PolyMatrix::from_rows(vec![vec![zero.clone(), one.clone()], vec![one, zero]]).unwrap();
        assert_eq!(m.det().unwrap(), SparsePolynomial::from_int(1, -1));
    }

    #[test]
    fn cofactor_path_agrees_with_elimination() {
        // 5x5 upper-triangular plus a twist: det is the diagonal product.
        let n = 5;
        let mut m = PolyMatrix::zeros(n, n, 3);
        for i in 0..n {
            m[(i, i)] = &v(3, i % 3) + &SparsePolynomial::from_int(3, i as i64 + 1);
            for j in i + 1..n {
                m[(i, j)] = v(3, (i + j) % 3);
            }
        }
        let mut expected = SparsePolynomial::one(3);
        for i in 0..n {
            expected = &expected * &m[(i, i)];
        }
        assert_eq!(m.det().unwrap(), expected);
        let (det, adj) = det_adjugate(&m).unwrap();
        assert_eq!(m.mul(&adj).unwrap(), PolyMatrix::identity(n, 3).scale(&det));
    }
}
