//! Finite-dimensional irreducible gl_n-modules with exact action matrices.

mod branching;
mod build;
mod representation;
pub mod shapovalov;
mod wedge;
mod weight;

pub use branching::{branch_restriction, sub_closure_dim, BranchComponent};
pub use build::build_irreducible;
pub use representation::{ActionExport, Representation, RepresentationExport};
pub use wedge::{subsets, wedge_module, wedge_with_last};
pub use weight::{interlacings, is_dominant, weyl_dimension, HighestWeight, InterlacingWeight};
