use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::Q;

/// Row-major sparse matrix with exact entries.
///
/// Each row keeps its `(column, value)` pairs sorted by column and free of
/// zeros, so derived equality is exact matrix equality.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { nrows, ncols, rows: vec![Vec::new(); nrows] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Q::one())
    }

    pub fn scalar(n: usize, c: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        if !c.is_zero() {
            for (i, row) in m.rows.iter_mut().enumerate() {
                row.push((i, c.clone()));
            }
        }
        m
    }

    pub fn diagonal(entries: &[Q]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, c) in entries.iter().enumerate() {
            if !c.is_zero() {
                m.rows[i].push((i, c.clone()));
            }
        }
        m
    }

    /// Builds a matrix from `(row, col, value)` triples; duplicates are summed.
    pub fn from_triples<I>(nrows: usize, ncols: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Q)>,
    {
        let mut acc: Vec<BTreeMap<usize, Q>> = vec![BTreeMap::new(); nrows];
        for (r, c, v) in triples {
            assert!(r < nrows && c < ncols, "triple ({r},{c}) outside {nrows}x{ncols}");
            *acc[r].entry(c).or_insert_with(Q::zero) += v;
        }
        let rows = acc
            .into_iter()
            .map(|row| row.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { nrows, ncols, rows }
    }

    /// Builds a matrix whose `j`-th column is `cols[j]`.
    pub fn from_columns(nrows: usize, cols: &[Vec<Q>]) -> Self {
        let triples = cols.iter().enumerate().flat_map(|(j, col)| {
            col.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(i, v)| (i, j, v.clone()))
        });
        Self::from_triples(nrows, cols.len(), triples)
    }

    pub fn from_dense(rows: &[Vec<Q>], ncols: usize) -> Self {
        let triples = rows.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, v)| (i, j, v.clone()))
        });
        Self::from_triples(rows.len(), ncols, triples)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn row(&self, r: usize) -> &[(usize, Q)] {
        &self.rows[r]
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        match self.rows[r].binary_search_by_key(&c, |(j, _)| *j) {
            Ok(k) => self.rows[r][k].1.clone(),
            Err(_) => Q::zero(),
        }
    }

    /// Entries in canonical (row, col) order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_diagonal(&self) -> bool {
        self.triples().all(|(i, j, _)| i == j)
    }

    pub fn diagonal_entries(&self) -> Vec<Q> {
        (0..self.nrows.min(self.ncols)).map(|i| self.get(i, i)).collect()
    }

    pub fn transpose(&self) -> Self {
        let triples = self.triples().map(|(i, j, v)| (j, i, v.clone()));
        Self::from_triples(self.ncols, self.nrows, triples)
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().map(|(j, v)| (*j, v * c)).collect())
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    fn combine(&self, other: &Self, sign: &Q) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols), "shape mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&other.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut x, mut y) = (0, 0);
                while x < a.len() || y < b.len() {
                    let take_a = y >= b.len() || (x < a.len() && a[x].0 < b[y].0);
                    let take_b = x >= a.len() || (y < b.len() && b[y].0 < a[x].0);
                    if take_a {
                        out.push(a[x].clone());
                        x += 1;
                    } else if take_b {
                        out.push((b[y].0, &b[y].1 * sign));
                        y += 1;
                    } else {
                        let v = &a[x].1 + &b[y].1 * sign;
                        if !v.is_zero() {
                            out.push((a[x].0, v));
                        }
                        x += 1;
                        y += 1;
                    }
                }
                out
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: self.ncols, rows }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "inner dimension mismatch");
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (k, a) in row {
                    for (j, b) in &other.rows[*k] {
                        *acc.entry(*j).or_insert_with(Q::zero) += a * b;
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        SparseMatrix { nrows: self.nrows, ncols: other.ncols, rows }
    }

    /// `[self, other] = self * other - other * self`
    pub fn commutator(&self, other: &Self) -> Self {
        &self.matmul(other) - &other.matmul(self)
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        self.rows
            .iter()
            .map(|row| {
                let mut s = Q::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        s += a * &v[*j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.nrows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut out = vec![vec![Q::zero(); self.ncols]; self.nrows];
        for (i, j, v) in self.triples() {
            out[i][j] = v.clone();
        }
        out
    }

    /// Restriction to the given rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<Q>> {
        let mut col_pos = vec![usize::MAX; self.ncols];
        for (k, &c) in cols.iter().enumerate() {
            col_pos[c] = k;
        }
        rows.iter()
            .map(|&r| {
                let mut out = vec![Q::zero(); cols.len()];
                for (j, v) in &self.rows[r] {
                    if col_pos[*j] != usize::MAX {
                        out[col_pos[*j]] = v.clone();
                    }
                }
                out
            })
            .collect()
    }

    /// `exp(self)` for a nilpotent matrix; `None` if `self` is not nilpotent.
    pub fn exp_nilpotent(&self) -> Option<Self> {
        assert_eq!(self.nrows, self.ncols);
        let n = self.nrows;
        let mut result = Self::identity(n);
        let mut term = Self::identity(n);
        for k in 1..=n + 1 {
            term = term.matmul(self).scale(&Q::new(1.into(), (k as i64).into()));
            if term.is_zero() {
                return Some(result);
            }
            result = &result + &term;
        }
        None
    }
}

impl Add for &SparseMatrix {
    type Output = SparseMatrix;
    fn add(self, rhs: Self) -> SparseMatrix {
        self.combine(rhs, &Q::one())
    }
}

impl Sub for &SparseMatrix {
    type Output = SparseMatrix;
    fn sub(self, rhs: Self) -> SparseMatrix {
        self.combine(rhs, &-Q::one())
    }
}

impl Mul for &SparseMatrix {
    type Output = SparseMatrix;
    fn mul(self, rhs: Self) -> SparseMatrix {
        self.matmul(rhs)
    }
}

impl Neg for &SparseMatrix {
    type Output = SparseMatrix;
    fn neg(self) -> SparseMatrix {
        self.scale(&-Q::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn m(rows: &[&[i64]]) -> SparseMatrix {
        let dense: Vec<Vec<Q>> = rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        SparseMatrix::from_dense(&dense, rows[0].len())
    }

    #[test]
    fn arithmetic_matches_dense() {
        let a = m(&[&[1, 2], &[0, -1]]);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(&a * &b, m(&[&[2, 1], &[-1, 0]]));
        assert_eq!(&a + &b, m(&[&[1, 3], &[1, -1]]));
        assert_eq!(&a - &a, SparseMatrix::zeros(2, 2));
        assert_eq!(a.commutator(&a), SparseMatrix::zeros(2, 2));
        assert_eq!(a.mul_vec(&[q(1), q(1)]), vec![q(3), q(-1)]);
        assert_eq!(a.transpose(), m(&[&[1, 0], &[2, -1]]));
    }

    #[test]
    fn triples_are_canonical() {
        let a = SparseMatrix::from_triples(2, 2, vec![(1, 0, q(1)), (0, 1, q(2)), (1, 0, q(-1))]);
        let t: Vec<_> = a.triples().map(|(i, j, v)| (i, j, v.clone())).collect();
        assert_eq!(t, vec![(0, 1, q(2))]);
    }

    #[test]
    fn nilpotent_exponential() {
        let n = m(&[&[0, 1], &[0, 0]]);
        assert_eq!(n.exp_nilpotent().unwrap(), m(&[&[1, 1], &[0, 1]]));
        assert!(SparseMatrix::identity(2).exp_nilpotent().is_none());
    }
}
