use num_traits::Zero;

use super::operators::WOperatorSet;
use crate::glrep::Representation;
use crate::linalg::{is_zero_vec, zero_vec, SparseMatrix, Subspace};
use crate::Q;

/// A subspace that is a direct sum of its intersections with fixed
/// coordinate blocks (for instance the weight spaces of a module).
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    ambient: usize,
    blocks: Vec<Vec<usize>>,
    spaces: Vec<Subspace>,
}

impl GradedSubspace {
    pub fn new(ambient: usize, blocks: Vec<Vec<usize>>) -> Self {
        let spaces = blocks.iter().map(|b| Subspace::new(b.len())).collect();
        GradedSubspace { ambient, blocks, spaces }
    }

    /// One block covering everything: an ordinary subspace.
    pub fn ungraded(ambient: usize) -> Self {
        Self::new(ambient, vec![(0..ambient).collect()])
    }

    /// Blocks are the weight spaces of `rep`.
    pub fn by_weight(rep: &Representation) -> Self {
        let blocks = rep.distinct_weights().iter().map(|w| rep.weight_space(w)).collect();
        Self::new(rep.dim(), blocks)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    fn local(&self, b: usize, v: &[Q]) -> Vec<Q> {
        self.blocks[b].iter().map(|&k| v[k].clone()).collect()
    }

    fn global(&self, b: usize, local: &[Q]) -> Vec<Q> {
        let mut v = zero_vec(self.ambient);
        for (&k, x) in self.blocks[b].iter().zip(local) {
            v[k] = x.clone();
        }
        v
    }

    /// Inserts every block component of `v`; returns the components that
    /// enlarged the space, as full vectors.
    pub fn insert(&mut self, v: &[Q]) -> Vec<Vec<Q>> {
        let mut grown = Vec::new();
        for b in 0..self.blocks.len() {
            let loc = self.local(b, v);
            if loc.iter().all(Zero::is_zero) {
                continue;
            }
            if self.spaces[b].insert(&loc) {
                grown.push(self.global(b, &loc));
            }
        }
        grown
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        (0..self.blocks.len()).all(|b| self.spaces[b].contains(&self.local(b, v)))
    }

    /// Remainder of `v` modulo the subspace.
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        let mut out = zero_vec(self.ambient);
        for b in 0..self.blocks.len() {
            let r = self.spaces[b].reduce(&self.local(b, v));
            for (&k, x) in self.blocks[b].iter().zip(r) {
                out[k] = x;
            }
        }
        out
    }

    /// A basis as full vectors.
    pub fn basis(&self) -> Vec<Vec<Q>> {
        (0..self.blocks.len())
            .flat_map(|b| self.spaces[b].generators().iter().map(move |g| self.global(b, g)))
            .collect()
    }

    pub fn contains_space(&self, other: &GradedSubspace) -> bool {
        other.basis().iter().all(|v| self.contains(v))
    }

    /// Grows the space to the smallest one containing it and stable under
    /// `matrices`. Each matrix must map blocks into blocks.
    pub fn saturate(&mut self, matrices: &[&SparseMatrix]) {
        let mut frontier = self.basis();
        while let Some(v) = frontier.pop() {
            for m in matrices {
                let w = m.mul_vec(&v);
                if !is_zero_vec(&w) {
                    frontier.extend(self.insert(&w));
                }
            }
        }
    }
}

/// Smallest subspace containing `seeds` and stable under the given matrices.
pub fn closure_under(matrices: &[&SparseMatrix], seeds: &[Vec<Q>], mut space: GradedSubspace) -> GradedSubspace {
    for s in seeds {
        space.insert(s);
    }
    space.saturate(matrices);
    space
}

/// The W-submodule generated by `seeds` under the named generators.
pub fn submodule_closure(ops: &WOperatorSet<'_>, seeds: &[Vec<Q>]) -> GradedSubspace {
    let space = if ops.is_weight_homogeneous() {
        GradedSubspace::by_weight(ops.rep())
    } else {
        GradedSubspace::ungraded(ops.rep().dim())
    };
    closure_under(&ops.named_matrices(), seeds, space)
}

/// The W-submodule generated by `seeds` under the images of `x_ij`, `omega_i`.
pub fn image_closure(ops: &WOperatorSet<'_>, seeds: &[Vec<Q>]) -> GradedSubspace {
    closure_under(&ops.image_matrices(), seeds, GradedSubspace::ungraded(ops.rep().dim()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrep::{build_irreducible, HighestWeight};
    use crate::wstructure::{Flavor, WOperatorSet};

    #[test]
    fn natural_module_rank_two() {
        let rep = build_irreducible(&HighestWeight::from_ints(&[1, 0]).unwrap()).unwrap();
        let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).unwrap();
        let v = rep.highest_weight_vector();
        assert!(submodule_closure(&ops, std::slice::from_ref(&v)).is_full());
        let f = rep.action(2, 1).mul_vec(&v);
        let sub = submodule_closure(&ops, std::slice::from_ref(&f));
        assert_eq!(sub.dim(), 1);
        assert_eq!(image_closure(&ops, &[f]).dim(), 1);
    }
}
