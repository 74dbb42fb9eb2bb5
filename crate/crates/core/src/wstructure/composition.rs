use serde::{Deserialize, Serialize};

use super::central::dot_orbit_class;
use super::closure::{closure_under, submodule_closure, GradedSubspace};
use super::operators::{sigma_matrix, Flavor, Part, WOperatorSet};
use super::singular::{eta_from_action, eta_invariant};
use crate::algebra::StGenerator;
use crate::glrep::{branch_restriction, build_irreducible, BranchComponent, HighestWeight, InterlacingWeight};
use crate::linalg::{is_zero_vec, sub_vec};
use crate::rational::fmt_q;
use crate::{par, Error, Result, Q};

/// A composition factor: its highest weight `(mu_1, ..., mu_{n-1}, eta)` and dimension.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Factor {
    pub mu: InterlacingWeight,
    pub eta: Option<Q>,
    pub dim: usize,
}

impl Factor {
    pub fn describe(&self) -> String {
        let mut parts: Vec<String> = self.mu.entries().iter().map(fmt_q).collect();
        parts.push(self.eta.as_ref().map_or("?".into(), fmt_q));
        format!("({})", parts.join(","))
    }
}

/// Composition structure of V(lambda) restricted to a W-image.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CompositionReport {
    pub length: usize,
    /// Factors from the top (quotient) down to the socle.
    pub factors: Vec<Factor>,
    /// Dimension of the largest proper submodule generated by a branching
    /// highest-weight vector, when the module is reducible.
    pub submodule_dim: Option<usize>,
}

/// Strongly connected components of `reach` (a reflexive, transitive
/// relation given as a matrix), listed so that each component only reaches
/// later ones.
fn components(reach: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let m = reach.len();
    let mut assigned = vec![false; m];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..m {
        if assigned[s] {
            continue;
        }
        let comp: Vec<usize> = (0..m).filter(|&t| reach[s][t] && reach[t][s]).collect();
        comp.iter().for_each(|&t| assigned[t] = true);
        comps.push(comp);
    }
    // a component reaching more seeds comes first
    comps.sort_by_key(|c| std::cmp::Reverse((0..m).filter(|&t| reach[c[0]][t]).count()));
    comps
}

/// Composition series of the W-module `ops.rep()` computed from closures of
/// the branching highest-weight vectors (transported by `sigma^{-1}` for
/// the `Tau` flavor).
pub fn composition_structure(ops: &WOperatorSet<'_>) -> Result<CompositionReport> {
    let rep = ops.rep();
    let branches: Vec<BranchComponent> = branch_restriction(rep);
    let seeds: Vec<Vec<Q>> = match ops.flavor() {
        Flavor::SigmaTau => branches.iter().map(|b| b.vector.clone()).collect(),
        Flavor::Tau => {
            let p = sigma_matrix(rep, true);
            branches.iter().map(|b| p.mul_vec(&b.vector)).collect()
        }
    };
    let closures: Vec<GradedSubspace> = par::map(&seeds, |s| match ops.flavor() {
        Flavor::SigmaTau => submodule_closure(ops, std::slice::from_ref(s)),
        Flavor::Tau => closure_under(&ops.image_matrices(), std::slice::from_ref(s), GradedSubspace::ungraded(rep.dim())),
    });
    let m = seeds.len();
    let reach: Vec<Vec<bool>> = (0..m).map(|s| (0..m).map(|t| closures[s].contains(&seeds[t])).collect()).collect();
    let comps = components(&reach);
    let mut factors = Vec::new();
    for comp in &comps {
        let below: Vec<usize> = (0..m).filter(|&t| reach[comp[0]][t] && !comp.contains(&t)).collect();
        let lower_seeds: Vec<Vec<Q>> = below.iter().map(|&t| seeds[t].clone()).collect();
        let lower = closure_of(ops, &lower_seeds);
        let dim = closures[comp[0]].dim() - lower.dim();
        // the factor's highest weight: a seed in the component that every
        // positive-part operator pushes into the lower submodule
        let positive = ops.part(Part::Positive);
        let top: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&s| positive.iter().all(|p| lower.contains(&p.mul_vec(&seeds[s]))))
            .collect();
        let &[s] = top.as_slice() else {
            return Err(Error::ConstructionBug(format!(
                "factor of {} has {} highest-weight candidates",
                rep.highest_weight(),
                top.len()
            )));
        };
        let yn = ops.matrix(StGenerator::Y(rep.n()));
        let eta = eigenvalue_mod(&lower, &seeds[s], &yn.mul_vec(&seeds[s]));
        factors.push(Factor { mu: branches[s].mu.clone(), eta, dim });
    }
    let submodule_dim = (comps.len() > 1).then(|| {
        let top = &comps[0];
        let rest: Vec<Vec<Q>> = (0..m).filter(|t| !top.contains(t)).map(|t| seeds[t].clone()).collect();
        closure_of(ops, &rest).dim()
    });
    Ok(CompositionReport { length: comps.len(), factors, submodule_dim })
}

fn closure_of(ops: &WOperatorSet<'_>, seeds: &[Vec<Q>]) -> GradedSubspace {
    match ops.flavor() {
        Flavor::SigmaTau => submodule_closure(ops, seeds),
        Flavor::Tau => closure_under(&ops.image_matrices(), seeds, GradedSubspace::ungraded(ops.rep().dim())),
    }
}

/// `c` with `w = c v` modulo `lower`, if such a scalar exists.
fn eigenvalue_mod(lower: &GradedSubspace, v: &[Q], w: &[Q]) -> Option<Q> {
    let v = lower.reduce(v);
    let w = lower.reduce(w);
    let k = v.iter().position(|x| !num_traits::Zero::is_zero(x))?;
    let c = &w[k] / &v[k];
    let diff = sub_vec(&w, &v.iter().map(|x| x * &c).collect::<Vec<_>>());
    is_zero_vec(&diff).then_some(c)
}

/// Everything computed about V(lambda) as a `sigma tau(W)`-module.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WStructureReport {
    pub lambda: String,
    pub case: u8,
    pub eta_n: String,
    pub k: usize,
    pub length: usize,
    pub predicted_length: usize,
    pub factors: Vec<FactorDescriptor>,
    pub submodule_dim: Option<usize>,
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDescriptor {
    pub hw: String,
    pub dim: usize,
}

/// Builds V(lambda), its operator set and composition series, and compares
/// with the prediction from the dot-orbit class. Disagreements are listed
/// under `violations`.
pub fn analyse(lambda: &HighestWeight) -> Result<WStructureReport> {
    let rep = build_irreducible(lambda)?;
    let ops = WOperatorSet::build(&rep, Flavor::SigmaTau)?;
    let class = dot_orbit_class(lambda)?;
    let comp = composition_structure(&ops)?;
    let eta = eta_invariant(lambda);
    let mut violations = Vec::new();
    if comp.length != class.predicted_length() {
        violations.push(format!(
            "THEOREM-VIOLATION: composition length {} but the orbit class predicts {}",
            comp.length,
            class.predicted_length()
        ));
    }
    if eta_from_action(&ops).as_ref() != Some(&eta.eta) {
        violations.push("THEOREM-VIOLATION: y_n does not act on v_lambda by eta_n".into());
    }
    if !eta.factorization_holds {
        violations.push("THEOREM-VIOLATION: eta_n factorization fails".into());
    }
    let top_ok = comp.factors.first().is_some_and(|f| {
        f.mu.entries() == &lambda.entries()[..lambda.n() - 1] && f.eta.as_ref() == Some(&eta.eta)
    });
    if !top_ok {
        violations.push("THEOREM-VIOLATION: top factor does not have highest weight (lambda_1..lambda_{n-1}, eta_n)".into());
    }
    if comp.factors.iter().map(|f| f.dim).sum::<usize>() != rep.dim() {
        violations.push("factor dimensions do not add up".into());
    }
    Ok(WStructureReport {
        lambda: lambda.to_string(),
        case: class.case.number(),
        eta_n: fmt_q(&eta.eta),
        k: eta.k,
        length: comp.length,
        predicted_length: class.predicted_length(),
        factors: comp.factors.iter().map(|f| FactorDescriptor { hw: f.describe(), dim: f.dim }).collect(),
        submodule_dim: comp.submodule_dim,
        violations,
    })
}
