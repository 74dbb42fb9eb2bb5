//! Exact computations for the minimal nilpotent finite W-algebra of sl(n+1).
//!
//! The crate realizes the W-algebra through its images inside U(gl_n): the
//! Miura-type embedding `tau` and its twist `sigma tau` by the inner
//! automorphism `exp(-ad X)`, `X = e_1n + ... + e_{n-1,n}`. On top of an exact
//! PBW rewriting engine it builds finite-dimensional irreducible gl_n-modules,
//! analyses them as W-modules, and assembles truncated realizations of the
//! cuspidal sl(n+1)-modules induced from them.
//!
//! Everything is exact rational arithmetic. Modules:
//!
//! - [`algebra`]: PBW normal ordering in U(gl_m), the automorphism sigma, the
//!   distinguished elements `gamma_i`, `y_k` and the generator images.
//! - [`glrep`]: irreducible gl_n-modules V(lambda), branching to gl_{n-1},
//!   exterior powers, and the contravariant form on Verma weight spaces.
//! - [`wstructure`]: W-operator sets on V(lambda), submodule closures,
//!   singular vectors, central-character classes, composition series and
//!   exact sequences.
//! - [`cuspidal`]: the induced modules G_mu(V^tau), the Shen-Larsson modules
//!   T(P(mu - lambda), V) on a lattice box, and their comparison.

pub mod algebra;
pub mod cuspidal;
mod error;
pub mod glrep;
pub mod linalg;
pub mod par;
pub mod rational;
pub mod wstructure;

pub use error::{Error, Result};
pub use rational::Q;
