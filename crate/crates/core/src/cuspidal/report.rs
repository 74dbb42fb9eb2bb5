use serde::{Deserialize, Serialize};

use super::checks::{box_closure, check_sl_relations, injectivity_sweep, spans_interior, weight_space_rigidity, InjectivityResult};
use super::fiber::{fiber_matches_tau, fiber_w_irreducibility, FiberIrreducibility};
use super::intertwiner::{intertwiner_check, IntertwinerReport};
use super::module::LatticeModule;
use crate::glrep::{build_irreducible, HighestWeight};
use crate::rational::{fmt_q_list, is_integer};
use crate::wstructure::dot_orbit_class;
use crate::{Error, Result, Q};

/// Whether `G_mu(V(lambda)^tau)` is cuspidal: `mu_i - lambda_i` and
/// `|mu| + lambda_i` are non-integral for every `i`.
pub fn cuspidality_criterion(mu: &[Q], lambda: &HighestWeight) -> bool {
    let size: Q = mu.iter().cloned().sum();
    mu.iter().zip(lambda.entries()).all(|(m, l)| !is_integer(&(m - l)) && !is_integer(&(&size + l)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CuspidalParams {
    pub n: usize,
    pub lambda: String,
    pub mu: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CuspidalReport {
    pub params: CuspidalParams,
    pub radius: i64,
    pub criterion: bool,
    pub relation_violations: Vec<String>,
    pub injectivity: Vec<InjectivityResult>,
    pub all_injective: bool,
    pub weight_spaces_rigid: bool,
    /// `None` when the criterion fails and the isomorphism is undefined.
    pub intertwiner_ok: Option<bool>,
    pub intertwiner: Option<IntertwinerReport>,
    pub fiber: FiberIrreducibility,
    /// Predicted from the orbit class of `lambda`.
    pub fiber_expected_irreducible: bool,
    /// The closure of a fiber vector at the origin fills `interior(2)`.
    pub spans_interior: bool,
    /// For a reducible fiber: the closure of its proper W-subspace, placed
    /// at the origin, has that same dimension at every point of `interior(2)`.
    pub proper_submodule_visible: Option<bool>,
    pub violations: Vec<String>,
}

/// Builds both realizations on a box of the given radius and runs every
/// check. Anything contradicting the expected behaviour goes to
/// `violations`.
pub fn analyse_cuspidal(lambda: &HighestWeight, mu: &[Q], radius: i64) -> Result<CuspidalReport> {
    if mu.len() != lambda.n() {
        return Err(Error::RankMismatch { left: mu.len(), right: lambda.n() });
    }
    if radius < 3 {
        return Err(Error::IndexOutOfRange(format!("radius {radius} < 3 leaves no room for depth-2 checks")));
    }
    let fiber = build_irreducible(lambda)?;
    let g = LatticeModule::induced(mu, &fiber, radius)?;
    let criterion = cuspidality_criterion(mu, lambda);
    let mut violations = Vec::new();

    let relations = check_sl_relations(&g, 2);
    violations.extend(relations.violations.iter().map(|v| format!("relation: {v}")));
    let injectivity = injectivity_sweep(&g);
    let all_injective = injectivity.iter().all(|i| i.injective);
    if all_injective != criterion {
        violations.push(format!(
            "THEOREM-VIOLATION: criterion says {criterion} but all root vectors injective is {all_injective}"
        ));
    }
    let rigid = weight_space_rigidity(&g);
    if !rigid {
        violations.push("weight spaces are not the fiber".into());
    }

    let intertwiner = if criterion {
        let t = LatticeModule::shen_larsson(mu, &fiber, radius)?;
        let tr = check_sl_relations(&t, 2);
        violations.extend(tr.violations.iter().map(|v| format!("Shen-Larsson relation: {v}")));
        let r = intertwiner_check(&g, &t, 2)?;
        if !r.ok() {
            violations.push("THEOREM-VIOLATION: the isomorphism fails to intertwine".into());
        }
        Some(r)
    } else {
        None
    };

    if !fiber_matches_tau(&fiber)? {
        violations.push("fiber W-action differs from the tau images".into());
    }
    let fiber_report = fiber_w_irreducibility(&fiber);
    let expected = dot_orbit_class(lambda)?.predicted_length() == 1;
    if fiber_report.irreducible != expected {
        violations.push(format!(
            "THEOREM-VIOLATION: fiber irreducibility {} but the orbit class predicts {expected}",
            fiber_report.irreducible
        ));
    }
    let spans = criterion && expected && spans_interior(&g, &fiber.highest_weight_vector(), 2);
    if criterion && expected && !spans {
        violations.push("closure of the highest-weight fiber vector misses interior fibers".into());
    }

    let proper_submodule_visible = match (&fiber_report.proper_generator, fiber_report.proper_subspace_dim) {
        (Some(v), Some(k)) if criterion => {
            let origin = g.lattice().index_of(&vec![0; lambda.n()]).expect("origin is in the box");
            let spaces = box_closure(&g, origin, v);
            Some(g.lattice().interior(2).into_iter().all(|p| spaces[p].dim() == k))
        }
        _ => None,
    };

    Ok(CuspidalReport {
        params: CuspidalParams { n: lambda.n(), lambda: lambda.to_string(), mu: fmt_q_list(mu) },
        radius,
        criterion,
        relation_violations: relations.violations,
        injectivity,
        all_injective,
        weight_spaces_rigid: rigid,
        intertwiner_ok: intertwiner.as_ref().map(IntertwinerReport::ok),
        intertwiner,
        fiber: fiber_report,
        fiber_expected_irreducible: expected,
        spans_interior: spans,
        proper_submodule_visible,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};

    #[test]
    fn criterion_examples() {
        let l = HighestWeight::from_ints(&[1, 0]).unwrap();
        assert!(!cuspidality_criterion(&[q(1), q(0)], &l));
        assert!(cuspidality_criterion(&[frac(1, 3), frac(1, 5)], &l));
        assert!(!cuspidality_criterion(&[frac(1, 2), frac(1, 2)], &l));
    }

    #[test]
    fn rank_two_report() {
        let l = HighestWeight::from_ints(&[1, 0]).unwrap();
        let r = analyse_cuspidal(&l, &[frac(1, 3), frac(1, 5)], 3).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.intertwiner_ok, Some(true));
        assert!(!r.fiber.irreducible);
        assert_eq!(r.proper_submodule_visible, Some(true));
        for mu in [[q(1), frac(1, 5)], [frac(1, 2), frac(1, 2)]] {
            let r = analyse_cuspidal(&l, &mu, 3).unwrap();
            assert!(!r.criterion && !r.all_injective && r.violations.is_empty(), "{:?}", r.violations);
        }
    }
}
