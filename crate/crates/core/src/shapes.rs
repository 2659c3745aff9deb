//! Young diagrams, numberings, tabloids and the symmetric-group actions on
//! them, together with the closed-form scalars attached to a diagram.
//!
//! Labels are 1-based throughout (`1..=N`), matching the usual tableau
//! conventions; boxes carry 1-based row and column coordinates.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::ShapeError;
use crate::exactalg::qlinalg::{self, QMatrix};
use crate::exactalg::{int, Coefficient};

/// A partition `λ_1 ≥ … ≥ λ_n > 0`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.is_empty() || parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of boxes `N`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of rows `n`.
    pub fn rows(&self) -> usize {
        self.0.len()
    }

    /// Boxes in row-major reading order.
    pub fn boxes(&self) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| Cell { row: r + 1, col: c + 1 }))
            .collect()
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.0[0];
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&l| l >= c).count()).collect())
    }

    pub fn is_single_row(&self) -> bool {
        self.0.len() == 1
    }

    /// `(N-1, 1)`, the reflection representation.
    pub fn is_hook_reflection(&self) -> bool {
        self.0.len() == 2 && self.0[1] == 1
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = ShapeError;
    fn try_from(v: Vec<usize>) -> Result<Self, ShapeError> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Vec<usize> {
        p.0
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A box of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    /// Content `c(b) - r(b)`.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        go(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// A bijection from the boxes of a partition to `1..=N`, stored row by row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Numbering {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Numbering {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, ShapeError> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &l in rows.iter().flatten() {
            if l == 0 || l > n {
                return Err(ShapeError::LabelOutOfRange { label: l, n });
            }
            if std::mem::replace(&mut seen[l], true) {
                return Err(ShapeError::InvalidNumbering(n));
            }
        }
        Ok(Numbering { shape, rows })
    }

    /// Boxes numbered `1..=N` in reading order.
    pub fn identity(shape: &Partition) -> Numbering {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&l| {
                (0..l)
                    .map(|_| {
                        next += 1;
                        next
                    })
                    .collect()
            })
            .collect();
        Numbering {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn label(&self, cell: Cell) -> usize {
        self.rows[cell.row - 1][cell.col - 1]
    }

    /// Labels in row-major order.
    pub fn reading_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The cell carrying label `k`.
    pub fn cell_of(&self, k: usize) -> Option<Cell> {
        self.rows.iter().enumerate().find_map(|(r, row)| {
            row.iter()
                .position(|&l| l == k)
                .map(|c| Cell { row: r + 1, col: c + 1 })
        })
    }

    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        rows_ok && cols_ok
    }

    pub fn tabloid(&self) -> Tabloid {
        Tabloid::new(self.rows.clone())
    }

    /// `σ ∘ T` for a permutation given as `perm[k-1] = σ(k)`.
    pub fn relabel(&self, perm: &[usize]) -> Numbering {
        Numbering {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&l| perm[l - 1]).collect())
                .collect(),
        }
    }

    /// Labels of each column, top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.shape.parts()[0];
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }
}

impl fmt::Display for Numbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "[{}]", rows.join(" / "))
    }
}

/// Row-equivalence class of numberings. The shape is a composition (rows
/// may be empty or out of order); each row is kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tabloid {
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn new(mut rows: Vec<Vec<usize>>) -> Tabloid {
        for r in rows.iter_mut() {
            r.sort_unstable();
        }
        Tabloid { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Row index (0-based) holding label `k`.
    pub fn row_of(&self, k: usize) -> Option<usize> {
        self.rows.iter().position(|r| r.binary_search(&k).is_ok())
    }

    /// Swap labels `i` and `j`.
    pub fn act_transposition(&self, i: usize, j: usize) -> Tabloid {
        let swap = |l: usize| {
            if l == i {
                j
            } else if l == j {
                i
            } else {
                l
            }
        };
        Tabloid::new(self.rows.iter().map(|r| r.iter().map(|&l| swap(l)).collect()).collect())
    }

    /// Relabel by `perm[k-1] = σ(k)`.
    pub fn act(&self, perm: &[usize]) -> Tabloid {
        Tabloid::new(
            self.rows
                .iter()
                .map(|r| r.iter().map(|&l| perm[l - 1]).collect())
                .collect(),
        )
    }

    /// Move each label of row `s+1` (1-based level `s`) up to row `s`, one
    /// output per label.
    pub fn raise_row(&self, s: usize) -> Result<Vec<Tabloid>, ShapeError> {
        if s == 0 || s >= self.rows.len() {
            return Err(ShapeError::LevelOutOfRange {
                level: s,
                rows: self.rows.len(),
            });
        }
        Ok(self.rows[s]
            .iter()
            .map(|&k| {
                let mut rows = self.rows.clone();
                rows[s].retain(|&l| l != k);
                rows[s - 1].push(k);
                Tabloid::new(rows)
            })
            .collect())
    }

    /// Numbering of a partition shape filling each row in increasing order.
    pub fn representative(&self) -> Result<Numbering, ShapeError> {
        Numbering::new(self.rows.clone())
    }
}

impl fmt::Debug for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|l| l.to_string()).collect();
                format!("{{{}}}", s.join(","))
            })
            .collect();
        f.write_str(&rows.join("|"))
    }
}

/// Standard tableaux of `shape`, ordered lexicographically by reading word.
pub fn standard_tableaux(shape: &Partition) -> Vec<Numbering> {
    fn go(shape: &[usize], fill: &mut Vec<Vec<usize>>, next: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if next > n {
            out.push(fill.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = fill[r].len();
            if len < shape[r] && (r == 0 || fill[r - 1].len() > len) {
                fill[r].push(next);
                go(shape, fill, next + 1, n, out);
                fill[r].pop();
            }
        }
    }
    let mut raw = Vec::new();
    go(
        shape.parts(),
        &mut vec![Vec::new(); shape.rows()],
        1,
        shape.size(),
        &mut raw,
    );
    let mut out: Vec<Numbering> = raw
        .into_iter()
        .map(|rows| Numbering {
            shape: shape.clone(),
            rows,
        })
        .collect();
    out.sort_by_key(Numbering::reading_word);
    out
}

/// All tabloids of a composition shape, in lexicographic row-set order.
pub fn tabloids(shape: &[usize]) -> Vec<Tabloid> {
    fn choose(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            choose(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    fn go(shape: &[usize], pool: Vec<usize>, acc: &mut Vec<Vec<usize>>, out: &mut Vec<Tabloid>) {
        let Some((&k, rest)) = shape.split_first() else {
            out.push(Tabloid::new(acc.clone()));
            return;
        };
        let mut subsets = Vec::new();
        choose(&pool, k, 0, &mut Vec::new(), &mut subsets);
        for sub in subsets {
            let remaining: Vec<usize> = pool.iter().copied().filter(|l| !sub.contains(l)).collect();
            acc.push(sub);
            go(rest, remaining, acc, out);
            acc.pop();
        }
    }
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    go(shape, (1..=n).collect(), &mut Vec::new(), &mut out);
    out
}

/// Permutations of `0..k` in lexicographic order with their signs; the
/// identity comes first.
pub fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(k: usize, cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(k, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut perms = Vec::new();
    go(k, &mut Vec::new(), &mut vec![false; k], &mut perms);
    perms
        .into_iter()
        .map(|p| {
            let inv = (0..k)
                .flat_map(|a| (a + 1..k).map(move |b| (a, b)))
                .filter(|&(a, b)| p[a] > p[b])
                .count();
            let sign = if inv % 2 == 0 { 1 } else { -1 };
            (p, sign)
        })
        .collect()
}

/// Signed tabloids `sign(σ) {σT}` over the column group of `T`; the first
/// entry is `(+1, {T})`.
pub fn column_expansion(t: &Numbering) -> Vec<(i64, Tabloid)> {
    let columns = t.columns();
    let per_col: Vec<Vec<(Vec<usize>, i64)>> = columns.iter().map(|c| permutations_with_sign(c.len())).collect();
    let n = t.shape().size();
    let mut out = Vec::new();
    let mut idx = vec![0usize; columns.len()];
    loop {
        let mut perm: Vec<usize> = (1..=n).collect();
        let mut sign = 1;
        for (c, col) in columns.iter().enumerate() {
            let (p, s) = &per_col[c][idx[c]];
            sign *= s;
            for (a, &b) in p.iter().enumerate() {
                perm[col[a] - 1] = col[b];
            }
        }
        out.push((sign, t.relabel(&perm).tabloid()));
        // odometer over the column groups
        let mut c = columns.len();
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            idx[c] += 1;
            if idx[c] < per_col[c].len() {
                break;
            }
            idx[c] = 0;
        }
    }
}

/// Number of standard tableaux by the hook-length formula.
pub fn hook_length_dimension(shape: &Partition) -> u64 {
    let conj = shape.transpose();
    let n = shape.size() as u64;
    let mut num: u128 = 1;
    for k in 1..=n {
        num *= k as u128;
    }
    let mut den: u128 = 1;
    for cell in shape.boxes() {
        let arm = shape.parts()[cell.row - 1] - cell.col;
        let leg = conj.parts()[cell.col - 1] - cell.row;
        den *= (arm + leg + 1) as u128;
    }
    (num / den) as u64
}

/// Closed-form data attached to a diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramStats {
    pub lambda: Partition,
    /// Eigenvalue of `Σ_{i<j} s_ij`, i.e. the sum of contents.
    pub f2: i64,
    pub specht_dim: u64,
    /// Dimension of the fixed space of a transposition.
    pub d_plus: u64,
    pub transpose: Partition,
    /// `m_s = Σ_{r>s} λ_r` for `s = 0..n-1`.
    pub m_profile: Vec<usize>,
    /// Number of integration variables `Σ_{s≥1} m_s`.
    pub config_dim: usize,
    pub m: i64,
    pub solution_degree: i64,
}

/// `m_0..m_{n-1}` and the configuration dimension.
pub fn level_profile(shape: &Partition) -> (Vec<usize>, usize) {
    let parts = shape.parts();
    let profile: Vec<usize> = (0..parts.len()).map(|s| parts[s..].iter().sum()).collect();
    let dim = profile.iter().skip(1).sum();
    (profile, dim)
}

pub fn content_sum(shape: &Partition) -> i64 {
    shape.boxes().iter().map(Cell::content).sum()
}

pub fn diagram_stats(shape: &Partition, m: i64) -> Result<DiagramStats, ShapeError> {
    let n = shape.size() as i64;
    let f2 = content_sum(shape);
    let dim = hook_length_dimension(shape);
    let pairs = n * (n - 1) / 2;
    let d_plus = if pairs == 0 {
        dim
    } else {
        // χ(s) = f2·dim/pairs, then d₊ = (dim + χ)/2
        let chi_num = f2 * dim as i64;
        if chi_num % pairs != 0 {
            return Err(ShapeError::NonIntegralFixedDimension(shape.parts().to_vec()));
        }
        let twice = dim as i64 + chi_num / pairs;
        if twice % 2 != 0 || twice < 0 {
            return Err(ShapeError::NonIntegralFixedDimension(shape.parts().to_vec()));
        }
        (twice / 2) as u64
    };
    let (m_profile, config_dim) = level_profile(shape);
    Ok(DiagramStats {
        lambda: shape.clone(),
        f2,
        specht_dim: dim,
        d_plus,
        transpose: shape.transpose(),
        m_profile,
        config_dim,
        m,
        solution_degree: m * (f2 + pairs),
    })
}

/// The Specht module `W^λ` inside the tabloid space: polytabloids `v_T` of
/// the standard tableaux in integer tabloid coordinates.
#[derive(Clone, Debug)]
pub struct SpechtBasis {
    pub shape: Partition,
    pub tableaux: Vec<Numbering>,
    pub tabloids: Vec<Tabloid>,
    index: HashMap<Tabloid, usize>,
    /// `vectors[k][u]` = coefficient of tabloid `u` in `v_{T_k}`.
    pub vectors: Vec<Vec<i64>>,
    /// Tabloid index of each standard tableau.
    pub standard_index: Vec<usize>,
    /// Inverse of `A[k][l] = coefficient of {T_k} in v_{T_l}`.
    gram_inverse: QMatrix,
}

impl SpechtBasis {
    pub fn new(shape: &Partition) -> SpechtBasis {
        let tableaux = standard_tableaux(shape);
        let tabs = tabloids(shape.parts());
        let index: HashMap<Tabloid, usize> = tabs.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let vectors: Vec<Vec<i64>> = tableaux
            .iter()
            .map(|t| {
                let mut v = vec![0i64; tabs.len()];
                for (s, u) in column_expansion(t) {
                    v[index[&u]] += s;
                }
                v
            })
            .collect();
        let standard_index: Vec<usize> = tableaux.iter().map(|t| index[&t.tabloid()]).collect();
        let a: QMatrix = standard_index
            .iter()
            .map(|&u| vectors.iter().map(|v| int(v[u])).collect())
            .collect();
        let gram_inverse = qlinalg::inverse(&a).expect("standard polytabloids are independent");
        SpechtBasis {
            shape: shape.clone(),
            tableaux,
            tabloids: tabs,
            index,
            vectors,
            standard_index,
            gram_inverse,
        }
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tabloid_index(&self, t: &Tabloid) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// `A[k][l]` = coefficient of `{T_k}` in `v_{T_l}`.
    pub fn standard_matrix(&self) -> QMatrix {
        self.standard_index
            .iter()
            .map(|&u| self.vectors.iter().map(|v| int(v[u])).collect())
            .collect()
    }

    pub fn standard_matrix_inverse(&self) -> &QMatrix {
        &self.gram_inverse
    }

    /// Coordinates against `v_T` of a vector of `W^λ` given by its values on
    /// the standard tabloids.
    pub fn coordinates_from_standard<T, F>(&self, at_standard: &[T], combine: F) -> Vec<T>
    where
        F: Fn(&[(Coefficient, &T)]) -> T,
    {
        (0..self.dim())
            .map(|k| {
                let terms: Vec<(Coefficient, &T)> = self.gram_inverse[k]
                    .iter()
                    .zip(at_standard)
                    .filter(|(c, _)| !c.is_zero())
                    .map(|(c, v)| (c.clone(), v))
                    .collect();
                combine(&terms)
            })
            .collect()
    }

    /// Tabloid vector `Σ_k coords[k] v_{T_k}` over rationals.
    pub fn to_tabloid_vector(&self, coords: &[Coefficient]) -> Vec<Coefficient> {
        let mut out = vec![Coefficient::zero(); self.tabloids.len()];
        for (c, v) in coords.iter().zip(&self.vectors) {
            for (o, &x) in out.iter_mut().zip(v) {
                if x != 0 {
                    *o += c * int(x);
                }
            }
        }
        out
    }

    /// Matrix of the transposition `(i j)` in the basis `v_T`:
    /// column `l` holds the coordinates of `s_ij v_{T_l}`.
    pub fn transposition_matrix(&self, i: usize, j: usize) -> QMatrix {
        let d = self.dim();
        let mut mat = vec![vec![Coefficient::zero(); d]; d];
        for (l, t) in self.tableaux.iter().enumerate() {
            let n = self.shape.size();
            let mut perm: Vec<usize> = (1..=n).collect();
            perm.swap(i - 1, j - 1);
            let moved = t.relabel(&perm);
            let mut v = vec![Coefficient::zero(); self.tabloids.len()];
            for (s, u) in column_expansion(&moved) {
                v[self.index[&u]] += int(s);
            }
            let at_std: Vec<Coefficient> = self.standard_index.iter().map(|&u| v[u].clone()).collect();
            let coords = self.coordinates_from_standard(&at_std, |terms| {
                terms.iter().fold(Coefficient::zero(), |acc, (c, x)| acc + c * *x)
            });
            for (k, c) in coords.into_iter().enumerate() {
                mat[k][l] = c;
            }
        }
        mat
    }
}

/// Is `q` a rational multiple of the identity?
pub fn scalar_of(q: &QMatrix) -> Option<Coefficient> {
    let d = q.len();
    let lambda = if d == 0 { Coefficient::one() } else { q[0][0].clone() };
    for (i, row) in q.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let expect = if i == j { lambda.clone() } else { Coefficient::zero() };
            if *x != expect {
                return None;
            }
        }
    }
    Some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn brute_force_partitions(n: usize) -> usize {
        // count non-increasing sequences summing to n by scanning all
        // compositions
        let mut count = 0;
        for mask in 0u32..(1 << (n - 1)) {
            let mut parts = Vec::new();
            let mut cur = 1;
            for b in 0..n - 1 {
                if mask & (1 << b) != 0 {
                    parts.push(cur);
                    cur = 1;
                } else {
                    cur += 1;
                }
            }
            parts.push(cur);
            if parts.windows(2).all(|w| w[0] >= w[1]) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn partitions_in_reverse_lex_order() {
        assert_eq!(enumerate_partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(enumerate_partitions(1), vec![p(&[1])]);
        for n in 1..=8 {
            assert_eq!(enumerate_partitions(n).len(), brute_force_partitions(n));
        }
        assert_eq!(enumerate_partitions(4).len(), 5);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn level_profiles() {
        assert_eq!(level_profile(&p(&[3, 2, 1])), (vec![6, 3, 1], 4));
        assert_eq!(level_profile(&p(&[2, 1])), (vec![3, 1], 1));
        assert_eq!(level_profile(&p(&[2])), (vec![2], 0));
    }

    #[test]
    fn standard_tableaux_examples() {
        let t = standard_tableaux(&p(&[2, 1]));
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].rows(), &[vec![1, 2], vec![3]]);
        assert_eq!(t[1].rows(), &[vec![1, 3], vec![2]]);
        assert_eq!(standard_tableaux(&p(&[4])).len(), 1);
        assert_eq!(standard_tableaux(&p(&[2, 2])).len(), 2);
    }

    #[test]
    fn standard_tableaux_match_brute_force_filter() {
        let shape = p(&[2, 2]);
        let mut count = 0;
        for (perm, _) in permutations_with_sign(4) {
            let labels: Vec<usize> = perm.iter().map(|x| x + 1).collect();
            let t = Numbering::new(vec![labels[..2].to_vec(), labels[2..].to_vec()]).unwrap();
            if t.is_standard() {
                count += 1;
            }
        }
        assert_eq!(count, standard_tableaux(&shape).len());
    }

    #[test]
    fn tabloid_counts() {
        let t = tabloids(&[2, 1]);
        assert_eq!(t.len(), 3);
        let seconds: Vec<usize> = t.iter().map(|u| u.rows()[1][0]).collect();
        assert_eq!(seconds, vec![3, 2, 1]);
        assert_eq!(tabloids(&[4]).len(), 1);
        assert_eq!(tabloids(&[2, 2]).len(), 6);
        assert_eq!(tabloids(&[1, 0, 2]).len(), 3);
    }

    #[test]
    fn column_expansion_examples() {
        let t = Numbering::new(vec![vec![1, 2], vec![3]]).unwrap();
        let e = column_expansion(&t);
        assert_eq!(
            e,
            vec![
                (1, Tabloid::new(vec![vec![1, 2], vec![3]])),
                (-1, Tabloid::new(vec![vec![2, 3], vec![1]])),
            ]
        );
        let row = Numbering::new(vec![vec![2, 1, 3]]).unwrap();
        assert_eq!(column_expansion(&row), vec![(1, row.tabloid())]);
        let col = Numbering::identity(&p(&[1, 1, 1, 1]));
        let e = column_expansion(&col);
        assert_eq!(e.len(), 24);
        assert_eq!(e.iter().map(|(s, _)| s).sum::<i64>(), 0);
    }

    #[test]
    fn transposition_action() {
        let u = Tabloid::new(vec![vec![1, 2], vec![3]]);
        assert_eq!(u.act_transposition(1, 3), Tabloid::new(vec![vec![2, 3], vec![1]]));
        assert_eq!(u.act_transposition(1, 2), u);
        assert_eq!(u.act_transposition(2, 3).act_transposition(2, 3), u);
    }

    #[test]
    fn raising_examples() {
        let u = Tabloid::new(vec![vec![1, 2], vec![3]]);
        assert_eq!(u.raise_row(1).unwrap(), vec![Tabloid::new(vec![vec![1, 2, 3], vec![]])]);
        let u = Tabloid::new(vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(
            u.raise_row(1).unwrap(),
            vec![
                Tabloid::new(vec![vec![1, 2, 3], vec![4]]),
                Tabloid::new(vec![vec![1, 2, 4], vec![3]]),
            ]
        );
        let u = Tabloid::new(vec![vec![1, 2], vec![], vec![3]]);
        assert!(u.raise_row(1).unwrap().is_empty());
        assert!(u.raise_row(3).is_err());
    }

    #[test]
    fn stats_examples() {
        let s = diagram_stats(&p(&[2, 1]), 1).unwrap();
        assert_eq!((s.f2, s.specht_dim, s.d_plus, s.solution_degree), (0, 2, 1, 3));
        let s = diagram_stats(&p(&[3]), 1).unwrap();
        assert_eq!((s.f2, s.specht_dim, s.d_plus, s.solution_degree), (3, 1, 1, 6));
        let s = diagram_stats(&p(&[3, 1]), 1).unwrap();
        assert_eq!((s.f2, s.specht_dim, s.d_plus, s.solution_degree), (2, 3, 2, 8));
        let s = diagram_stats(&p(&[1, 1]), 1).unwrap();
        assert_eq!((s.f2, s.d_plus, s.solution_degree), (-1, 0, 0));
        assert_eq!(diagram_stats(&p(&[3, 2, 1]), 1).unwrap().config_dim, 4);
    }

    #[test]
    fn invariants_up_to_six() {
        for n in 1..=6usize {
            let mut sum_sq = 0u64;
            for lam in enumerate_partitions(n) {
                let d = hook_length_dimension(&lam);
                assert_eq!(standard_tableaux(&lam).len() as u64, d, "{lam}");
                sum_sq += d * d;
                assert_eq!(content_sum(&lam), -content_sum(&lam.transpose()));
                let s = diagram_stats(&lam, 1).unwrap();
                let (prof, dim) = level_profile(&lam);
                assert_eq!(prof[0], n);
                assert_eq!(dim, lam.parts().iter().enumerate().map(|(r, l)| r * l).sum::<usize>());
                assert!(s.d_plus <= s.specht_dim);
                let mut fac = 1u64;
                for k in 1..=n as u64 {
                    fac *= k;
                }
                let u = tabloids(lam.parts());
                let denom: u64 = lam.parts().iter().map(|&l| (1..=l as u64).product::<u64>()).product();
                assert_eq!(u.len() as u64, fac / denom);
            }
            let fac: u64 = (1..=n as u64).product();
            assert_eq!(sum_sq, fac);
            let nn = n as i64;
            assert_eq!(content_sum(&p(&[n])), nn * (nn - 1) / 2);
            assert_eq!(content_sum(&Partition::new(vec![1; n]).unwrap()), -nn * (nn - 1) / 2);
        }
    }

    #[test]
    fn column_transposition_flips_expansion_signs() {
        for n in 2..=5 {
            for lam in enumerate_partitions(n) {
                for t in standard_tableaux(&lam) {
                    for col in t.columns() {
                        if col.len() < 2 {
                            continue;
                        }
                        let (a, b) = (col[0], col[1]);
                        let base = column_expansion(&t);
                        let mut perm: Vec<usize> = (1..=n).collect();
                        perm.swap(a - 1, b - 1);
                        let moved = column_expansion(&t.relabel(&perm));
                        let mut lhs: Vec<(i64, Tabloid)> = base.iter().map(|(s, u)| (-s, u.clone())).collect();
                        let mut rhs = moved;
                        lhs.sort_by(|x, y| x.1.cmp(&y.1));
                        rhs.sort_by(|x, y| x.1.cmp(&y.1));
                        assert_eq!(lhs, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn standard_matrix_is_unimodular() {
        let mut non_identity = Vec::new();
        for n in 1..=6 {
            for lam in enumerate_partitions(n) {
                let b = SpechtBasis::new(&lam);
                let a = b.standard_matrix();
                for (k, row) in a.iter().enumerate() {
                    assert_eq!(row[k], Coefficient::one(), "{lam}");
                }
                assert!(b.standard_matrix_inverse().iter().flatten().all(|c| c.is_integer()));
                if scalar_of(&a) != Some(Coefficient::one()) {
                    non_identity.push(lam);
                }
            }
        }
        assert!(non_identity.contains(&p(&[3, 2])));
        assert!(non_identity.iter().all(|l| l.size() >= 5), "{non_identity:?}");
    }

    #[test]
    fn transposition_matrices_square_to_identity() {
        let basis = SpechtBasis::new(&p(&[2, 1]));
        let s = basis.transposition_matrix(1, 2);
        let mut sq = vec![vec![Coefficient::zero(); 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    sq[i][j] += &s[i][k] * &s[k][j];
                }
            }
        }
        assert_eq!(scalar_of(&sq), Some(Coefficient::one()));
        // trace of a transposition on the 2-dim irrep is 0
        assert_eq!(&s[0][0] + &s[1][1], Coefficient::zero());
    }
}
