//! Exact linear algebra over the rationals.
//!
//! Matrices coming out of weight-graded actions are very sparse, so operators
//! are stored as [`SparseMatrix`]. Small dense systems (single weight spaces,
//! fibers) go through the helpers in [`dense`], and invariant subspaces are
//! grown with [`Subspace`].

pub mod dense;
mod sparse;
mod subspace;

pub use sparse::SparseMatrix;
pub use subspace::Subspace;

use num_traits::Zero;

use crate::Q;

pub fn zero_vec(n: usize) -> Vec<Q> {
    vec![Q::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Q> {
    let mut v = zero_vec(n);
    v[i] = num_traits::One::one();
    v
}

pub fn is_zero_vec(v: &[Q]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Q], a: &Q, x: &[Q]) {
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

pub fn scaled(v: &[Q], a: &Q) -> Vec<Q> {
    v.iter().map(|x| x * a).collect()
}

pub fn sub_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_vec(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}
