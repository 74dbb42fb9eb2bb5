//! Closed-form identities between sigma, the generators of `sigma tau(W)`
//! and their brackets, packaged as `lhs == rhs` pairs computed by the engine.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::element::AlgebraElement;
use super::sigma::apply_sigma;
use super::special::{gamma, identity_sum, sigma_tau_generator, StGenerator};
use crate::rational::{frac, q};
use crate::{Result, Q};

/// An identity `lhs == rhs` in U(gl_n); both sides are normal forms.
#[derive(Clone, Debug, PartialEq)]
pub struct Identity {
    pub id: String,
    pub lhs: AlgebraElement,
    pub rhs: AlgebraElement,
}

impl Identity {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

fn e(n: usize, i: usize, j: usize) -> AlgebraElement {
    AlgebraElement::e(n, i, j)
}

fn c(n: usize, x: i64) -> AlgebraElement {
    AlgebraElement::scalar(n, q(x))
}

/// The four twist identities for every admissible index.
pub fn twist_identities(n: usize) -> Result<Vec<Identity>> {
    let mut out = Vec::new();
    let shifted = &identity_sum(n, n - 1) - &c(n, n as i64 - 1);
    for i in 1..n {
        for j in 1..n {
            out.push(Identity {
                id: format!("twist.gl-block[{i},{j}]"),
                lhs: apply_sigma(&(&e(n, i, j) - &e(n, i, n)), false)?,
                rhs: e(n, i, j),
            });
        }
    }
    for j in 1..n {
        let mut rhs = e(n, n, j);
        for k in 1..n {
            rhs = &rhs - &e(n, k, j);
        }
        out.push(Identity {
            id: format!("twist.last-row[{j}]"),
            lhs: apply_sigma(&(&e(n, n, j) - &e(n, n, n)), false)?,
            rhs,
        });
    }
    let mut sigma_gammas = Vec::new();
    for i in 1..n {
        let g = gamma(n, i)?;
        let mut rhs = &g + &(&e(n, i, n) * &shifted);
        for j in 1..n {
            rhs = &rhs + &(&e(n, i, j) * &e(n, j, n));
        }
        let lhs = apply_sigma(&g, false)?;
        sigma_gammas.push(lhs.clone());
        out.push(Identity { id: format!("twist.gamma[{i}]"), lhs, rhs });
    }
    let gn = gamma(n, n)?;
    let mut rhs = &gn + &(&e(n, n, n) * &shifted);
    for k in 1..n {
        rhs = &(&rhs - &sigma_gammas[k - 1]) + &(&e(n, n, k) * &e(n, k, n));
    }
    out.push(Identity { id: format!("twist.gamma[{n}]"), lhs: apply_sigma(&gn, false)?, rhs });
    Ok(out)
}

/// A bracket `[a, b] = rhs` between two generators of `sigma tau(W)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Relation {
    pub id: String,
    pub a: StGenerator,
    pub b: StGenerator,
    pub rhs: AlgebraElement,
}

/// The commutation table between `e_ij`, `e_nj` and `y_k`, all indices.
pub fn commutation_relations(n: usize) -> Result<Vec<Relation>> {
    use StGenerator::*;
    let st = |g| sigma_tau_generator(n, g);
    let shifted = &identity_sum(n, n - 1) - &c(n, n as i64);
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..n {
            for k in 1..n {
                let rhs = if j == k { st(Y(i))? } else { AlgebraElement::zero(n) };
                out.push(Relation { id: format!("bracket.e-y[{i},{j};{k}]"), a: E(i, j), b: Y(k), rhs });
            }
            out.push(Relation { id: format!("bracket.e-yn[{i},{j}]"), a: E(i, j), b: Y(n), rhs: AlgebraElement::zero(n) });
        }
    }
    for i in 1..n {
        for k in 1..n {
            out.push(Relation { id: format!("bracket.y-y[{i};{k}]"), a: Y(i), b: Y(k), rhs: AlgebraElement::zero(n) });
        }
    }
    for j in 1..n {
        for k in 1..n {
            let mut rhs = if j == k { st(Y(n))? } else { AlgebraElement::zero(n) };
            rhs = &rhs - &(&e(n, k, j) * &shifted);
            for l in 1..n {
                rhs = &rhs - &(&e(n, k, l) * &e(n, l, j));
            }
            out.push(Relation { id: format!("bracket.en-y[{j};{k}]"), a: EN(j), b: Y(k), rhs });
        }
        let mut rhs = -&(&e(n, n, j) * &shifted);
        for l in 1..n {
            rhs = &rhs - &(&e(n, n, l) * &e(n, l, j));
        }
        out.push(Relation { id: format!("bracket.en-yn[{j}]"), a: EN(j), b: Y(n), rhs });
    }
    Ok(out)
}

/// The commutation table evaluated by the PBW engine.
pub fn commutation_identities(n: usize) -> Result<Vec<Identity>> {
    commutation_relations(n)?
        .into_iter()
        .map(|r| {
            let lhs = sigma_tau_generator(n, r.a)?.commutator(&sigma_tau_generator(n, r.b)?)?;
            Ok(Identity { id: r.id, lhs, rhs: r.rhs })
        })
        .collect()
}

/// Presentation relations of `sigma tau(W)` for n = 2.
pub fn rank_two_relations() -> Result<Vec<Identity>> {
    let n = 2;
    let e11 = e(n, 1, 1);
    let e21 = e(n, 2, 1);
    let y1 = sigma_tau_generator(n, StGenerator::Y(1))?;
    let y2 = sigma_tau_generator(n, StGenerator::Y(2))?;
    let e11_minus_1 = &e11 - &c(n, 1);
    Ok(vec![
        Identity { id: "rank-two.e11-y1".into(), lhs: e11.commutator(&y1)?, rhs: y1.clone() },
        Identity {
            id: "rank-two.y1-e21".into(),
            lhs: y1.commutator(&e21)?,
            rhs: &(&e11 * &e11_minus_1).scale(&q(2)) - &y2,
        },
        Identity { id: "rank-two.e11-e21".into(), lhs: e11.commutator(&e21)?, rhs: -&e21 },
        Identity { id: "rank-two.e11-y2".into(), lhs: e11.commutator(&y2)?, rhs: AlgebraElement::zero(n) },
        Identity {
            id: "rank-two.y2-e21".into(),
            lhs: y2.commutator(&e21)?,
            rhs: (&e21 * &e11_minus_1).scale(&q(2)),
        },
    ])
}

/// Outcome of solving for `c` with `y_2 + e_11^2 + c e_11` central in
/// `sigma tau(W)`, n = 2.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralityResult {
    /// The unique solution, when one exists.
    pub constant: Option<Q>,
    /// The constant stated alongside the rank-two presentation.
    pub stated: Q,
    pub stated_is_central: bool,
}

impl CentralityResult {
    pub fn agrees_with_stated(&self) -> bool {
        self.constant.as_ref() == Some(&self.stated)
    }
}

/// Solves `[y_2 + e_11^2 + c e_11, g] = 0` for every generator `g` of
/// `sigma tau(W)` (n = 2) as a linear system in `c`.
pub fn centrality_constant() -> Result<CentralityResult> {
    let n = 2;
    let base = &sigma_tau_generator(n, StGenerator::Y(2))? + &(&e(n, 1, 1) * &e(n, 1, 1));
    let lin = e(n, 1, 1);
    // one equation a + c b = 0 per (generator, monomial)
    let mut equations: Vec<(Q, Q)> = Vec::new();
    for g in StGenerator::all(n) {
        let x = sigma_tau_generator(n, g)?;
        let a = base.commutator(&x)?;
        let b = lin.commutator(&x)?;
        let mut monos: Vec<_> = a.terms().map(|(m, _)| m.clone()).collect();
        monos.extend(b.terms().map(|(m, _)| m.clone()));
        monos.sort();
        monos.dedup();
        for m in monos {
            equations.push((a.coefficient(&m), b.coefficient(&m)));
        }
    }
    let mut constant: Option<Q> = None;
    let mut consistent = true;
    for (a, b) in &equations {
        if b.is_zero() {
            consistent &= a.is_zero();
        } else {
            let cand = -a / b;
            match &constant {
                Some(c0) if *c0 != cand => consistent = false,
                _ => constant = Some(cand),
            }
        }
    }
    let determined = equations.iter().any(|(_, b)| !b.is_zero());
    let constant = if consistent && determined { constant } else { None };
    let stated = frac(-1, 2);
    let stated_is_central = equations.iter().all(|(a, b)| (a + &stated * b).is_zero());
    Ok(CentralityResult { constant, stated, stated_is_central })
}
