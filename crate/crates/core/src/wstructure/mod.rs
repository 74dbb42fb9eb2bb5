//! The minimal W-algebra acting on finite-dimensional gl_n-modules through
//! its images `tau(W)` and `sigma tau(W)`: operator sets, submodule
//! closures, composition series, singular vectors and exact sequences.

mod central;
mod closure;
mod composition;
mod operators;
mod sequence;
mod singular;

pub use central::{chain_member, dot_orbit_class, orbit_invariant, shifted_extended, CentralCharacterClass, OrbitCase};
pub use closure::{closure_under, image_closure, submodule_closure, GradedSubspace};
pub use composition::{analyse, composition_structure, CompositionReport, Factor, FactorDescriptor, WStructureReport};
pub use operators::{part_of, sigma_matrix, Flavor, Part, WOperatorSet};
pub use sequence::{
    chain_sequence, cyclic_morphism, exact_sequence_check, fundamental_sequence, MapReport, SequenceKind, SequenceReport,
};
pub use singular::{
    eta_from_action, eta_invariant, key_identity_sides, key_lemma_check, reducibility_exponent, singular_vector_test,
    EtaInvariant, SingularVectorResult,
};
