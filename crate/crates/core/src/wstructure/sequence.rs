use serde::{Deserialize, Serialize};

use super::central::chain_member;
use super::operators::{Flavor, WOperatorSet};
use crate::glrep::{branch_restriction, build_irreducible, wedge_module, wedge_with_last, HighestWeight, Representation};
use crate::linalg::{dense, is_zero_vec, unit_vec, zero_vec, SparseMatrix, Subspace};
use crate::rational::{binomial, is_integer_at_least, to_i64};
use crate::{par, Error, Result, Q};

/// Which complex to check.
#[derive(Clone, Debug, PartialEq)]
pub enum SequenceKind {
    /// `0 -> wedge^0 -> wedge^1 -> ... -> wedge^n -> 0` with `e_n ∧ -`.
    Fundamental { n: usize },
    /// `0 -> V(mu(0)) -> ... -> V(mu(n)) -> 0` for a chain base `mu`.
    Chain { mu: HighestWeight },
}

/// One map `pi_k` of a complex.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapReport {
    pub index: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub intertwines: bool,
    /// The cyclic vector's image is the one given by the closed formula
    /// (`e_{n,i}^{p} v_{mu(i)}`); otherwise the gl_{n-1}-highest-weight
    /// vector of the same gl_{n-1}-weight was used.
    pub formula_image: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub kind: String,
    pub dims: Vec<usize>,
    pub maps: Vec<MapReport>,
    /// `dim im(pi_{k-1})` inside each term `k = 1..n`.
    pub image_dims: Vec<usize>,
    pub violations: Vec<String>,
}

impl SequenceReport {
    pub fn exact(&self) -> bool {
        self.violations.is_empty()
    }
}

fn intertwines(map: &SparseMatrix, source: &WOperatorSet<'_>, target: &WOperatorSet<'_>) -> bool {
    source
        .named()
        .iter()
        .zip(target.named())
        .all(|((g, a), (h, b))| g == h && map.matmul(a) == b.matmul(map))
}

fn rank(m: &SparseMatrix) -> usize {
    dense::rank(&m.to_dense())
}

/// The unique W-module map sending the cyclic vector `from` of `source` to
/// `to`, built by walking words in the named generators. Fails if `from`
/// does not generate `source` or the assignment is inconsistent.
pub fn cyclic_morphism(source: &WOperatorSet<'_>, target: &WOperatorSet<'_>, from: &[Q], to: &[Q]) -> Result<SparseMatrix> {
    let (ds, dt) = (source.rep().dim(), target.rep().dim());
    let mut span = Subspace::with_tracking(ds);
    let mut images: Vec<Vec<Q>> = Vec::new();
    span.insert(from);
    images.push(to.to_vec());
    let mut frontier = vec![(from.to_vec(), to.to_vec())];
    while let Some((x, y)) = frontier.pop() {
        for ((_, a), (_, b)) in source.named().iter().zip(target.named()) {
            let gx = a.mul_vec(&x);
            let gy = b.mul_vec(&y);
            if let Some(c) = span.coords(&gx) {
                let mut expect = zero_vec(dt);
                for (ck, yk) in c.iter().zip(&images) {
                    crate::linalg::axpy(&mut expect, ck, yk);
                }
                if expect != gy {
                    return Err(Error::ConstructionBug("cyclic assignment is not a module map".into()));
                }
            } else {
                span.insert(&gx);
                images.push(gy.clone());
                frontier.push((gx, gy));
            }
        }
    }
    if !span.is_full() {
        return Err(Error::ConstructionBug(format!(
            "vector generates a {}-dimensional submodule of a {ds}-dimensional module",
            span.dim()
        )));
    }
    let cols: Vec<Vec<Q>> = (0..ds)
        .map(|j| {
            let c = span.coords(&unit_vec(ds, j)).expect("full span");
            let mut col = zero_vec(dt);
            for (ck, yk) in c.iter().zip(&images) {
                crate::linalg::axpy(&mut col, ck, yk);
            }
            col
        })
        .collect();
    Ok(SparseMatrix::from_columns(dt, &cols))
}

fn check_complex(kind: String, reps: &[Representation], maps: Vec<SparseMatrix>, formula: &[bool]) -> Result<SequenceReport> {
    let ops: Vec<WOperatorSet<'_>> = reps.iter().map(|r| WOperatorSet::build(r, Flavor::SigmaTau)).collect::<Result<_>>()?;
    let dims: Vec<usize> = reps.iter().map(Representation::dim).collect();
    let mut violations = Vec::new();
    let ranks: Vec<usize> = par::map(&maps, rank);
    let mut reports = Vec::new();
    for (k, m) in maps.iter().enumerate() {
        let ok = intertwines(m, &ops[k], &ops[k + 1]);
        if !ok {
            violations.push(format!("THEOREM-VIOLATION: pi_{k} does not intertwine the W-action"));
        }
        reports.push(MapReport { index: k, source_dim: dims[k], target_dim: dims[k + 1], rank: ranks[k], intertwines: ok, formula_image: formula[k] });
    }
    for k in 1..maps.len() {
        if !maps[k].matmul(&maps[k - 1]).is_zero() {
            violations.push(format!("THEOREM-VIOLATION: pi_{k} pi_{} is not zero", k - 1));
        }
    }
    let last = maps.len();
    if ranks[0] != dims[0] {
        violations.push("THEOREM-VIOLATION: pi_0 is not injective".into());
    }
    if ranks[last - 1] != dims[last] {
        violations.push(format!("THEOREM-VIOLATION: pi_{} is not surjective", last - 1));
    }
    for k in 1..last {
        // ker(pi_k) has dimension dims[k] - ranks[k]; exactness means it equals im(pi_{k-1})
        if ranks[k - 1] + ranks[k] != dims[k] {
            violations.push(format!("THEOREM-VIOLATION: not exact at term {k}"));
        }
    }
    Ok(SequenceReport { kind, dims, maps: reports, image_dims: ranks, violations })
}

/// Checks the fundamental-weight complex with `pi_k = e_n ∧ -`.
pub fn fundamental_sequence(n: usize) -> Result<SequenceReport> {
    let reps: Vec<Representation> = (0..=n).map(|k| wedge_module(n, k)).collect::<Result<_>>()?;
    let maps: Vec<SparseMatrix> = (0..n).map(|k| wedge_with_last(n, k)).collect::<Result<_>>()?;
    let mut report = check_complex(format!("fundamental n={n}"), &reps, maps, &vec![true; n])?;
    for (k, d) in report.image_dims.iter().enumerate() {
        if *d != binomial(n - 1, k) {
            report.violations.push(format!("image of pi_{k} has dimension {d}, expected C({}, {k})", n - 1));
        }
    }
    Ok(report)
}

/// Checks the chain complex through `mu`, where `-|mu| - mu_1` must be a
/// nonnegative integer. `pi_{i-1}` sends `v_{mu(i-1)}` to
/// `e_{n,i}^{mu_{i-1} - mu_i + 1} v_{mu(i)}` for `i < n` and to `v_{mu(n)}`
/// for `i = n`.
pub fn chain_sequence(mu: &HighestWeight) -> Result<SequenceReport> {
    let n = mu.n();
    let mu0 = -mu.size();
    if !is_integer_at_least(&(&mu0 - mu.at(1)), 0) {
        return Err(Error::NotDominant(format!("{mu} does not start a chain")));
    }
    let members: Vec<HighestWeight> = (0..=n).map(|i| HighestWeight::new(chain_member(mu, i))).collect::<Result<_>>()?;
    let reps: Vec<Representation> = par::map(&members, build_irreducible).into_iter().collect::<Result<_>>()?;
    let ops: Vec<WOperatorSet<'_>> = reps.iter().map(|r| WOperatorSet::build(r, Flavor::SigmaTau)).collect::<Result<_>>()?;
    let mut ext = vec![mu0];
    ext.extend(mu.entries().iter().cloned());
    let mut maps = Vec::with_capacity(n);
    let mut formula = Vec::with_capacity(n);
    for i in 1..=n {
        let target = &reps[i];
        let mut literal = target.highest_weight_vector();
        if i < n {
            let power = to_i64(&(&ext[i - 1] - &ext[i] + Q::from_integer(1.into())))
                .filter(|p| *p >= 0)
                .ok_or_else(|| Error::ConstructionBug(format!("exponent for pi_{} is not a natural number", i - 1)))?;
            let e = target.action(n, i);
            for _ in 0..power {
                literal = e.mul_vec(&literal);
            }
        }
        // the image must be the gl_{n-1}-highest-weight vector of the source's gl_{n-1}-weight
        let nu = &members[i - 1].entries()[..n - 1];
        let seed = branch_restriction(target)
            .into_iter()
            .find(|b| b.mu.entries() == nu)
            .ok_or_else(|| Error::ConstructionBug(format!("{nu:?} does not interlace {}", members[i])))?
            .vector;
        let agrees = !is_zero_vec(&literal) && Subspace::spanned_by(target.dim(), [&seed]).contains(&literal);
        let to = if agrees { literal } else { seed };
        let from = reps[i - 1].highest_weight_vector();
        maps.push(cyclic_morphism(&ops[i - 1], &ops[i], &from, &to)?);
        formula.push(agrees);
    }
    drop(ops);
    check_complex(format!("chain mu={mu}"), &reps, maps, &formula)
}

pub fn exact_sequence_check(kind: &SequenceKind) -> Result<SequenceReport> {
    match kind {
        SequenceKind::Fundamental { n } => fundamental_sequence(*n),
        SequenceKind::Chain { mu } => chain_sequence(mu),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_small() {
        let r = fundamental_sequence(2).unwrap();
        assert!(r.exact(), "{:?}", r.violations);
        assert_eq!(r.dims, vec![1, 2, 1]);
        let r = fundamental_sequence(3).unwrap();
        assert!(r.exact(), "{:?}", r.violations);
        assert_eq!(r.image_dims, vec![1, 2, 1]);
    }

    #[test]
    fn rank_two_chain() {
        let r = chain_sequence(&HighestWeight::from_ints(&[0, -3]).unwrap()).unwrap();
        assert!(r.exact(), "{:?}", r.violations);
        assert_eq!(r.dims, vec![4, 8, 4]);
        assert!(r.maps.iter().all(|m| m.formula_image));
    }

    #[test]
    fn rank_three_chain() {
        let r = chain_sequence(&HighestWeight::from_ints(&[0, 0, -2]).unwrap()).unwrap();
        assert!(r.exact(), "{:?}", r.violations);
        assert_eq!(r.dims, vec![6, 42, 42, 6]);
        let formula: Vec<bool> = r.maps.iter().map(|m| m.formula_image).collect();
        assert_eq!(formula, vec![false, true, true]);
    }
}
