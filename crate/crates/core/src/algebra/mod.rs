//! Exact symbolic engine for U(gl_m).
//!
//! Elements are kept in PBW normal form with respect to a fixed total order
//! on the matrix units: lowering `e_ij (i > j)` before Cartan `e_ii` before
//! raising `e_ij (i < j)`, lexicographic inside each class. Acting on a
//! highest-weight vector, a normal monomial therefore applies its raising
//! factors first.

mod element;
mod generator;
mod identities;
mod sigma;
pub mod sl;
mod special;

pub use element::{normal_order, normal_order_with, AlgebraElement, Monomial};
pub use generator::{bracket_generators, Generator};
pub use identities::{
    centrality_constant, commutation_identities, commutation_relations, rank_two_relations, twist_identities,
    CentralityResult, Identity, Relation,
};
pub use sigma::{apply_sigma, sigma_bound};
pub use special::{
    gamma, identity_sum, preimage_certifies, sigma_tau_generator, sigma_tau_preimage, tau_image, x_sum, y, StGenerator, WGenerator,
};
