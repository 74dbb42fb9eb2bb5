use serde::{Deserialize, Serialize};

use crate::algebra::WGenerator;
use crate::glrep::{branch_restriction, Representation};
use crate::linalg::{unit_vec, SparseMatrix};
use crate::wstructure::{closure_under, sigma_matrix, Flavor, GradedSubspace, WOperatorSet};
use crate::{Result, Q};

/// The W-action on a fiber `V(lambda)`: `x_ij = e_ij - e_ii` and
/// `omega_k = sum_j (e_kj e_jj - e_kj)`.
pub fn fiber_w_operators(fiber: &Representation) -> Vec<(WGenerator, SparseMatrix)> {
    let n = fiber.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            out.push((WGenerator::X(i, j), fiber.action(i, j) - fiber.action(i, i)));
        }
    }
    for k in 1..=n {
        let mut w = SparseMatrix::zeros(fiber.dim(), fiber.dim());
        for j in 1..=n {
            w = &w + &(&fiber.action(k, j).matmul(fiber.action(j, j)) - fiber.action(k, j));
        }
        out.push((WGenerator::Omega(k), w));
    }
    out
}

/// The fiber operators coincide with the images of `x_ij`, `omega_k` under
/// `tau` evaluated through the PBW engine.
pub fn fiber_matches_tau(fiber: &Representation) -> Result<bool> {
    let ops = WOperatorSet::build(fiber, Flavor::Tau)?;
    let direct = fiber_w_operators(fiber);
    Ok(direct.iter().all(|(g, m)| ops.images().iter().any(|(h, a)| h == g && a == m)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberIrreducibility {
    pub fiber_dim: usize,
    /// Number of vectors whose closure was computed.
    pub tested: usize,
    /// Every tested closure is the whole fiber.
    pub irreducible: bool,
    /// Dimension of the smallest proper W-stable subspace found.
    pub proper_subspace_dim: Option<usize>,
    /// A vector generating that subspace.
    #[serde(skip)]
    pub proper_generator: Option<Vec<Q>>,
}

/// Closes the weight basis, the sum of all basis vectors and the
/// branching highest-weight vectors moved into the `tau` picture by
/// `sigma^{-1}` under the fiber W-action.
pub fn fiber_w_irreducibility(fiber: &Representation) -> FiberIrreducibility {
    let d = fiber.dim();
    let ops = fiber_w_operators(fiber);
    let mats: Vec<&SparseMatrix> = ops.iter().map(|(_, m)| m).collect();
    let mut tests: Vec<Vec<Q>> = (0..d).map(|b| unit_vec(d, b)).collect();
    tests.push(vec![Q::from_integer(1.into()); d]);
    let p = sigma_matrix(fiber, true);
    tests.extend(branch_restriction(fiber).into_iter().map(|c| p.mul_vec(&c.vector)));
    let dims: Vec<usize> = crate::par::map(&tests, |v| closure_under(&mats, std::slice::from_ref(v), GradedSubspace::ungraded(d)).dim());
    let best = (0..tests.len()).filter(|&k| dims[k] < d).min_by_key(|&k| dims[k]);
    FiberIrreducibility {
        fiber_dim: d,
        tested: tests.len(),
        irreducible: best.is_none(),
        proper_subspace_dim: best.map(|k| dims[k]),
        proper_generator: best.map(|k| tests[k].clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrep::{build_irreducible, HighestWeight};
    use crate::rational::frac;

    #[test]
    fn rank_two_fibers() {
        let v = build_irreducible(&HighestWeight::new(vec![frac(3, 2), frac(1, 2)]).unwrap()).unwrap();
        assert!(fiber_matches_tau(&v).unwrap());
        let r = fiber_w_irreducibility(&v);
        assert!(r.irreducible && r.fiber_dim == 2);
        let v = build_irreducible(&HighestWeight::from_ints(&[1, 0]).unwrap()).unwrap();
        let r = fiber_w_irreducibility(&v);
        assert_eq!(r.proper_subspace_dim, Some(1));
    }
}
