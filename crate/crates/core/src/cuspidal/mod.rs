//! Cuspidal sl(n+1)-modules induced from W-modules `V(lambda)^tau`, the
//! Shen-Larsson modules `T(P(mu - lambda), V(lambda))`, and the isomorphism
//! between them, truncated to a box of lattice points.

mod checks;
mod fiber;
mod intertwiner;
mod lattice;
mod module;
mod report;

pub use checks::{
    box_closure, check_sl_relations, full_fibers, injectivity_check, injectivity_sweep, spans_interior,
    weight_space_rigidity, InjectivityResult, RelationReport,
};
pub use fiber::{fiber_matches_tau, fiber_w_irreducibility, fiber_w_operators, FiberIrreducibility};
pub use intertwiner::{fiber_scale, intertwiner_check, intertwiner_diagonal, twisted_action_matches, IntertwinerReport};
pub use lattice::LatticeBox;
pub use module::{displacement, BlockExport, LatticeModule, LatticeModuleExport, Realization};
pub use report::{analyse_cuspidal, cuspidality_criterion, CuspidalParams, CuspidalReport};
