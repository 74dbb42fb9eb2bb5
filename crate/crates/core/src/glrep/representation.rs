use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::weight::HighestWeight;
use crate::algebra::{AlgebraElement, Generator};
use crate::linalg::{is_zero_vec, unit_vec, SparseMatrix, Subspace};
use crate::rational::fmt_q;
use crate::{par, Error, Result, Q};

/// A finite-dimensional gl_n-module with a weight basis and exact action
/// matrices for every matrix unit `e_ij`.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    n: usize,
    highest_weight: HighestWeight,
    weights: Vec<Vec<Q>>,
    labels: Vec<String>,
    actions: Vec<SparseMatrix>,
    hw_index: usize,
}

impl Representation {
    /// Assembles a module from its parts. `actions[(i-1) n + (j-1)]` is the
    /// matrix of `e_ij`. No relation is checked here; see
    /// [`Representation::bracket_violations`].
    pub fn from_parts(
        highest_weight: HighestWeight,
        weights: Vec<Vec<Q>>,
        labels: Vec<String>,
        actions: Vec<SparseMatrix>,
        hw_index: usize,
    ) -> Result<Self> {
        let n = highest_weight.n();
        let dim = weights.len();
        if actions.len() != n * n {
            return Err(Error::DimensionMismatch { expected: n * n, actual: actions.len() });
        }
        if let Some(m) = actions.iter().find(|m| m.nrows() != dim || m.ncols() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, actual: m.nrows() });
        }
        if labels.len() != dim || hw_index >= dim.max(1) {
            return Err(Error::DimensionMismatch { expected: dim, actual: labels.len() });
        }
        Ok(Representation { n, highest_weight, weights, labels, actions, hw_index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.highest_weight
    }

    pub fn weights(&self) -> &[Vec<Q>] {
        &self.weights
    }

    pub fn weight(&self, k: usize) -> &[Q] {
        &self.weights[k]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn highest_weight_index(&self) -> usize {
        self.hw_index
    }

    pub fn highest_weight_vector(&self) -> Vec<Q> {
        unit_vec(self.dim(), self.hw_index)
    }

    /// Matrix of `e_ij`, indices 1-based.
    pub fn action(&self, i: usize, j: usize) -> &SparseMatrix {
        assert!((1..=self.n).contains(&i) && (1..=self.n).contains(&j), "e[{i},{j}] outside gl_{}", self.n);
        &self.actions[(i - 1) * self.n + (j - 1)]
    }

    pub fn generator_matrix(&self, g: Generator) -> Result<&SparseMatrix> {
        if g.rank != self.n {
            return Err(Error::RankMismatch { left: self.n, right: g.rank });
        }
        Ok(self.action(g.row, g.col))
    }

    /// Basis indices of the weight space of `w`.
    pub fn weight_space(&self, w: &[Q]) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.weights[k] == w).collect()
    }

    /// Distinct weights in basis order.
    pub fn distinct_weights(&self) -> Vec<Vec<Q>> {
        let mut out: Vec<Vec<Q>> = Vec::new();
        for w in &self.weights {
            if out.last() != Some(w) && !out.contains(w) {
                out.push(w.clone());
            }
        }
        out
    }

    /// Action of `a` on `v`; the rightmost factor of each monomial acts first.
    pub fn apply_element(&self, a: &AlgebraElement, v: &[Q]) -> Result<Vec<Q>> {
        if a.rank() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: a.rank() });
        }
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: v.len() });
        }
        let mut out = vec![Q::zero(); self.dim()];
        for (m, c) in a.terms() {
            let mut w = v.to_vec();
            for g in m.factors().iter().rev() {
                w = self.action(g.row, g.col).mul_vec(&w);
                if is_zero_vec(&w) {
                    break;
                }
            }
            crate::linalg::axpy(&mut out, c, &w);
        }
        Ok(out)
    }

    /// Matrix of an arbitrary element of U(gl_n).
    pub fn element_matrix(&self, a: &AlgebraElement) -> Result<SparseMatrix> {
        if a.rank() != self.n {
            return Err(Error::RankMismatch { left: self.n, right: a.rank() });
        }
        let terms: Vec<_> = a.terms().collect();
        let parts = par::map(&terms, |(m, c)| {
            let mut acc = SparseMatrix::identity(self.dim());
            for g in m.factors() {
                acc = acc.matmul(self.action(g.row, g.col));
            }
            acc.scale(c)
        });
        Ok(parts.iter().fold(SparseMatrix::zeros(self.dim(), self.dim()), |acc, p| &acc + p))
    }

    /// Every pair `(e_ab, e_cd)` whose matrices fail
    /// `[A(e_ab), A(e_cd)] = delta_bc A(e_ad) - delta_da A(e_cb)`.
    pub fn bracket_violations(&self) -> Vec<(Generator, Generator)> {
        let gens = Generator::all(self.n);
        let pairs: Vec<(Generator, Generator)> =
            gens.iter().flat_map(|&x| gens.iter().filter(move |&&y| x < y).map(move |&y| (x, y))).collect();
        let bad = par::map(&pairs, |&(x, y)| {
            let lhs = self.action(x.row, x.col).commutator(self.action(y.row, y.col));
            let mut rhs = SparseMatrix::zeros(self.dim(), self.dim());
            for (g, c) in crate::algebra::bracket_generators(x, y) {
                rhs = &rhs + &self.action(g.row, g.col).scale(&crate::rational::q(c));
            }
            lhs != rhs
        });
        pairs.into_iter().zip(bad).filter(|(_, b)| *b).map(|(p, _)| p).collect()
    }

    /// Whether each `e_ii` is diagonal with the recorded weights and the
    /// highest-weight vector is killed by every raising operator.
    pub fn weight_structure_ok(&self) -> bool {
        for i in 1..=self.n {
            let h = self.action(i, i);
            if !h.is_diagonal() {
                return false;
            }
            let d = h.diagonal_entries();
            if (0..self.dim()).any(|k| d[k] != self.weights[k][i - 1]) {
                return false;
            }
        }
        if self.dim() == 0 || self.weights[self.hw_index] != self.highest_weight.entries() {
            return false;
        }
        let v = self.highest_weight_vector();
        (1..=self.n).all(|i| (i + 1..=self.n).all(|j| is_zero_vec(&self.action(i, j).mul_vec(&v))))
    }

    /// The same module tensored with the one-dimensional module `det^c`.
    pub fn twisted(&self, c: &Q) -> Representation {
        let mut out = self.clone();
        out.highest_weight = self.highest_weight.shifted(c);
        for w in out.weights.iter_mut() {
            for x in w.iter_mut() {
                *x += c;
            }
        }
        for i in 1..=self.n {
            let k = (i - 1) * self.n + (i - 1);
            out.actions[k] = &self.actions[k] + &SparseMatrix::scalar(self.dim(), c);
        }
        out
    }

    /// Smallest subspace containing `seeds` and stable under the given matrices.
    pub fn closure(matrices: &[&SparseMatrix], seeds: &[Vec<Q>], ambient: usize) -> Subspace {
        let mut space = Subspace::new(ambient);
        let mut frontier: Vec<Vec<Q>> = Vec::new();
        for s in seeds {
            if space.insert(s) {
                frontier.push(s.clone());
            }
        }
        while let Some(v) = frontier.pop() {
            for m in matrices {
                let w = m.mul_vec(&v);
                if !is_zero_vec(&w) && space.insert(&w) {
                    frontier.push(w);
                }
            }
        }
        space
    }

    /// gl_n-submodule generated by `seeds`.
    pub fn gl_closure(&self, seeds: &[Vec<Q>]) -> Subspace {
        let mats: Vec<&SparseMatrix> = self.actions.iter().collect();
        Self::closure(&mats, seeds, self.dim())
    }

    pub fn export(&self) -> RepresentationExport {
        let mut actions = Vec::new();
        for i in 1..=self.n {
            for j in 1..=self.n {
                actions.push(ActionExport {
                    row: i,
                    col: j,
                    triples: self.action(i, j).triples().map(|(r, c, x)| (r, c, fmt_q(x))).collect(),
                });
            }
        }
        RepresentationExport {
            n: self.n,
            dimension: self.dim(),
            highest_weight: self.highest_weight.entries().iter().map(fmt_q).collect(),
            highest_weight_index: self.hw_index,
            weights: self.weights.iter().map(|w| w.iter().map(fmt_q).collect()).collect(),
            labels: self.labels.clone(),
            actions,
        }
    }
}

/// Serializable dump of a [`Representation`]; rationals as `p/q` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepresentationExport {
    pub n: usize,
    pub dimension: usize,
    pub highest_weight: Vec<String>,
    pub highest_weight_index: usize,
    pub weights: Vec<Vec<String>>,
    pub labels: Vec<String>,
    pub actions: Vec<ActionExport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionExport {
    pub row: usize,
    pub col: usize,
    pub triples: Vec<(usize, usize, String)>,
}
