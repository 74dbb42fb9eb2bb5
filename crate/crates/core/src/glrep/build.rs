//! Construction of V(lambda) one weight space at a time.
//!
//! Weight spaces are produced in order of depth below the highest weight.
//! A space `V_mu` is spanned by the vectors `f_i b` with `f_i = e_{i+1,i}`
//! and `b` running over the already constructed basis of `V_{mu + alpha_i}`.
//! In the irreducible quotient a vector of weight `mu != lambda` vanishes
//! exactly when every simple raising operator kills it, so `V_mu` is
//! identified with the span of the raising images
//! `e_j (f_i b) = f_i (e_j b) + delta_ij (nu_i - nu_{i+1}) b`, all of which
//! live one level up. That is the radical of the contravariant form computed
//! without ever leaving the module.

use std::collections::HashMap;

use num_traits::Zero;

use super::representation::Representation;
use super::weight::{weyl_dimension, HighestWeight};
use crate::linalg::{SparseMatrix, Subspace};
use crate::rational::{fmt_q_list, q};
use crate::{par, Error, Result, Q};

type SparseVec = Vec<(usize, Q)>;

struct Space {
    weight: Vec<i64>,
    start: usize,
    dim: usize,
    /// `raise[j][k]`: `e_{j,j+1}` applied to local basis vector `k`, as
    /// coordinates in the space of weight `weight + alpha_j`.
    raise: Vec<Vec<SparseVec>>,
    /// `lower[i][k]`: `e_{i+1,i}` applied to local basis vector `k`.
    lower: Vec<Vec<SparseVec>>,
}

struct Builder {
    n: usize,
    spaces: Vec<Space>,
    index: HashMap<Vec<i64>, usize>,
}

fn shift(w: &[i64], i: usize, sign: i64) -> Vec<i64> {
    let mut out = w.to_vec();
    out[i] += sign;
    out[i + 1] -= sign;
    out
}

/// Result of analysing one candidate weight: its basis size, raising data
/// for the new basis, and the lowering data `(i, b, coords)` for the
/// vectors one level up.
struct NewSpace {
    weight: Vec<i64>,
    dim: usize,
    raise: Vec<Vec<SparseVec>>,
    lowered: Vec<(usize, usize, SparseVec)>,
}

impl Builder {
    fn space(&self, w: &[i64]) -> Option<&Space> {
        self.index.get(w).map(|&k| &self.spaces[k])
    }

    fn analyse(&self, mu: &[i64]) -> NewSpace {
        let r = self.n - 1;
        // blocks of the raising image, one per j with an existing target space
        let mut offsets = vec![None; r];
        let mut total = 0;
        for (j, off) in offsets.iter_mut().enumerate() {
            if let Some(s) = self.space(&shift(mu, j, 1)) {
                *off = Some(total);
                total += s.dim;
            }
        }
        let mut sub = Subspace::with_tracking(total);
        let mut candidates: Vec<(usize, usize, Vec<Q>)> = Vec::new();
        for i in 0..r {
            let nu = shift(mu, i, 1);
            let Some(src) = self.space(&nu) else { continue };
            let hdiff = q(nu[i] - nu[i + 1]);
            for b in 0..src.dim {
                let mut image = vec![Q::zero(); total];
                for (j, off) in offsets.iter().enumerate() {
                    let Some(off) = *off else { continue };
                    // f_i (e_j b)
                    if let Some(up) = self.space(&shift(&nu, j, 1)) {
                        for (c, x) in &src.raise[j][b] {
                            for (t, y) in &up.lower[i][*c] {
                                image[off + t] += x * y;
                            }
                        }
                    }
                    if i == j && !hdiff.is_zero() {
                        image[off + b] += &hdiff;
                    }
                }
                candidates.push((i, b, image));
            }
        }
        let mut accepted: Vec<usize> = Vec::new();
        for (k, (_, _, image)) in candidates.iter().enumerate() {
            if sub.insert(image) {
                accepted.push(k);
            }
        }
        let dim = accepted.len();
        let mut raise = vec![vec![Vec::new(); dim]; r];
        for (local, &k) in accepted.iter().enumerate() {
            let image = &candidates[k].2;
            for j in 0..r {
                let Some(off) = offsets[j] else { continue };
                let len = self.space(&shift(mu, j, 1)).map_or(0, |s| s.dim);
                raise[j][local] =
                    (0..len).filter(|t| !image[off + t].is_zero()).map(|t| (t, image[off + t].clone())).collect();
            }
        }
        let lowered = candidates
            .iter()
            .map(|(i, b, image)| {
                let coords = sub.coords(image).expect("candidate lies in the span");
                let sparse = coords.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect();
                (*i, *b, sparse)
            })
            .collect();
        NewSpace { weight: mu.to_vec(), dim, raise, lowered }
    }

    fn run(partition: &[i64]) -> Builder {
        let n = partition.len();
        let r = n.saturating_sub(1);
        let top = Space {
            weight: partition.to_vec(),
            start: 0,
            dim: 1,
            raise: vec![vec![Vec::new()]; r],
            lower: vec![vec![Vec::new()]; r],
        };
        let mut b = Builder { n, spaces: vec![top], index: HashMap::new() };
        b.index.insert(partition.to_vec(), 0);
        let mut level: Vec<usize> = vec![0];
        let mut next_start = 1;
        while !level.is_empty() {
            let mut targets: Vec<Vec<i64>> =
                level.iter().flat_map(|&s| (0..r).map(move |i| (s, i))).map(|(s, i)| shift(&b.spaces[s].weight, i, -1)).collect();
            targets.sort_by(|x, y| y.cmp(x));
            targets.dedup();
            let results = par::map(&targets, |mu| b.analyse(mu));
            let mut new_level = Vec::new();
            for ns in &results {
                if ns.dim == 0 {
                    continue;
                }
                let id = b.spaces.len();
                b.spaces.push(Space {
                    weight: ns.weight.clone(),
                    start: next_start,
                    dim: ns.dim,
                    raise: ns.raise.clone(),
                    lower: vec![vec![Vec::new(); ns.dim]; r],
                });
                b.index.insert(ns.weight.clone(), id);
                next_start += ns.dim;
                new_level.push(id);
            }
            for ns in results {
                if ns.dim == 0 {
                    continue;
                }
                for (i, src_local, coords) in ns.lowered {
                    let src = b.index[&shift(&ns.weight, i, 1)];
                    b.spaces[src].lower[i][src_local] = coords;
                }
            }
            level = new_level;
        }
        b
    }
}

/// Builds the irreducible gl_n-module of highest weight `lambda`.
pub fn build_irreducible(lambda: &HighestWeight) -> Result<Representation> {
    let n = lambda.n();
    let partition: Vec<i64> = lambda.partition().into_iter().map(|x| x as i64).collect();
    let b = Builder::run(&partition);
    let dim: usize = b.spaces.iter().map(|s| s.dim).sum();
    let expected = weyl_dimension(lambda);
    if dim != expected {
        return Err(Error::ConstructionBug(format!(
            "V{} came out {dim}-dimensional, expected {expected}",
            lambda
        )));
    }
    let shift_by = lambda.last().clone();
    let mut weights = Vec::with_capacity(dim);
    let mut labels = Vec::with_capacity(dim);
    for s in &b.spaces {
        let w: Vec<Q> = s.weight.iter().map(|&x| q(x) + &shift_by).collect();
        for k in 0..s.dim {
            labels.push(format!("{}#{k}", fmt_q_list(&w)));
            weights.push(w.clone());
        }
    }
    let mut raise_triples: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); n.saturating_sub(1)];
    let mut lower_triples: Vec<Vec<(usize, usize, Q)>> = vec![Vec::new(); n.saturating_sub(1)];
    for s in &b.spaces {
        for i in 0..n - 1 {
            if let Some(up) = b.space(&shift(&s.weight, i, 1)) {
                for k in 0..s.dim {
                    for (t, x) in &s.raise[i][k] {
                        raise_triples[i].push((up.start + t, s.start + k, x.clone()));
                    }
                }
            }
            if let Some(down) = b.space(&shift(&s.weight, i, -1)) {
                for k in 0..s.dim {
                    for (t, x) in &s.lower[i][k] {
                        lower_triples[i].push((down.start + t, s.start + k, x.clone()));
                    }
                }
            }
        }
    }
    let mut actions: Vec<Option<SparseMatrix>> = vec![None; n * n];
    let at = |i: usize, j: usize| (i - 1) * n + (j - 1);
    for i in 1..=n {
        let diag: Vec<Q> = weights.iter().map(|w| w[i - 1].clone()).collect();
        actions[at(i, i)] = Some(SparseMatrix::diagonal(&diag));
    }
    for i in 1..n {
        actions[at(i, i + 1)] = Some(SparseMatrix::from_triples(dim, dim, raise_triples[i - 1].drain(..)));
        actions[at(i + 1, i)] = Some(SparseMatrix::from_triples(dim, dim, lower_triples[i - 1].drain(..)));
    }
    for d in 2..n {
        for i in 1..=n - d {
            let j = i + d;
            // e_ij = [e_{i,i+1}, e_{i+1,j}],  e_ji = [e_{j,j-1}, e_{j-1,i}]
            let up = actions[at(i, i + 1)].as_ref().unwrap().commutator(actions[at(i + 1, j)].as_ref().unwrap());
            let down = actions[at(j, j - 1)].as_ref().unwrap().commutator(actions[at(j - 1, i)].as_ref().unwrap());
            actions[at(i, j)] = Some(up);
            actions[at(j, i)] = Some(down);
        }
    }
    let actions: Vec<SparseMatrix> = actions.into_iter().map(|m| m.expect("every e_ij assigned")).collect();
    Representation::from_parts(lambda.clone(), weights, labels, actions, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn trivial_and_natural() {
        let t = build_irreducible(&HighestWeight::from_ints(&[0, 0, 0]).unwrap()).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(t.bracket_violations().is_empty());
        let v = build_irreducible(&HighestWeight::from_ints(&[1, 0]).unwrap()).unwrap();
        assert_eq!(v.dim(), 2);
        let f = v.action(2, 1);
        assert!(!crate::linalg::is_zero_vec(&f.mul_vec(&v.highest_weight_vector())));
        assert!(f.matmul(f).is_zero());
    }

    #[test]
    fn adjoint_like_rank_two() {
        let v = build_irreducible(&HighestWeight::from_ints(&[1, -1]).unwrap()).unwrap();
        let w: Vec<String> = v.weights().iter().map(|w| fmt_q_list(w)).collect();
        assert_eq!(w, vec!["(1,-1)", "(0,0)", "(-1,1)"]);
        assert!(v.bracket_violations().is_empty());
        assert!(v.weight_structure_ok());
    }

    #[test]
    fn rational_shift() {
        let v = build_irreducible(&HighestWeight::new(vec![frac(3, 2), frac(1, 2)]).unwrap()).unwrap();
        assert_eq!(v.dim(), 2);
        assert!(v.weight_structure_ok());
        assert!(v.bracket_violations().is_empty());
    }

    #[test]
    fn rank_three_and_four() {
        for l in [[2, 1, 0].as_slice(), &[3, 1, 0], &[2, 2, 0], &[2, 1, 1, 0], &[3, 2, 1, 0]] {
            let lambda = HighestWeight::from_ints(l).unwrap();
            let v = build_irreducible(&lambda).unwrap();
            assert_eq!(v.dim(), weyl_dimension(&lambda));
            assert!(v.bracket_violations().is_empty(), "{lambda}");
            assert!(v.weight_structure_ok());
        }
    }
}
