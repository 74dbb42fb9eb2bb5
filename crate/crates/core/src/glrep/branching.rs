use super::representation::Representation;
use super::weight::InterlacingWeight;
use crate::linalg::dense::nullspace;
use crate::linalg::SparseMatrix;
use crate::{par, Q};

/// A gl_{n-1}-highest-weight vector of a gl_n-module together with the
/// dimension of the gl_{n-1}-submodule it generates.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchComponent {
    pub mu: InterlacingWeight,
    pub vector: Vec<Q>,
    pub dimension: usize,
}

/// Vectors killed by every `e_ij`, `1 <= i < j <= n-1`, one per joint
/// kernel direction of each weight space, sorted by `mu` decreasing.
pub fn branch_restriction(rep: &Representation) -> Vec<BranchComponent> {
    let n = rep.n();
    let weights = rep.distinct_weights();
    let found: Vec<Vec<BranchComponent>> = par::map(&weights, |w| {
        let cols = rep.weight_space(w);
        let mut rows_dense: Vec<Vec<Q>> = Vec::new();
        for i in 1..n.saturating_sub(1) {
            let e = rep.action(i, i + 1);
            let mut target = w.clone();
            target[i - 1] += Q::from_integer(1.into());
            target[i] -= Q::from_integer(1.into());
            let rows = rep.weight_space(&target);
            rows_dense.extend(e.submatrix(&rows, &cols));
        }
        let kernel = if rows_dense.is_empty() {
            (0..cols.len()).map(|k| crate::linalg::unit_vec(cols.len(), k)).collect()
        } else {
            nullspace(&rows_dense, cols.len())
        };
        kernel
            .into_iter()
            .map(|local| {
                let mut v = crate::linalg::zero_vec(rep.dim());
                for (c, x) in cols.iter().zip(local) {
                    v[*c] = x;
                }
                let dimension = sub_closure_dim(rep, &v);
                BranchComponent { mu: InterlacingWeight::new(w[..n - 1].to_vec()), vector: v, dimension }
            })
            .collect()
    });
    let mut out: Vec<BranchComponent> = found.into_iter().flatten().collect();
    out.sort_by(|a, b| b.mu.cmp(&a.mu));
    out
}

/// Dimension of the gl_{n-1}-submodule generated by `v`.
pub fn sub_closure_dim(rep: &Representation, v: &[Q]) -> usize {
    let n = rep.n();
    let mats: Vec<&SparseMatrix> =
        (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).map(|(i, j)| rep.action(i, j)).collect();
    Representation::closure(&mats, &[v.to_vec()], rep.dim()).dim()
}
