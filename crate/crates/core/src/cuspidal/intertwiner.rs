use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::module::{LatticeModule, Realization};
use crate::glrep::Representation;
use crate::linalg::SparseMatrix;
use crate::rational::to_i64;
use crate::{par, Error, Result, Q};

fn qi(x: i64) -> Q {
    Q::from_integer(x.into())
}

/// Scale of `v_alpha` in the gl_n-isomorphism `V(lambda) -> M_mu`:
/// `prod_k prod_{s = lambda_n}^{alpha_k - 1} (mu_k - s)`.
pub fn fiber_scale(mu: &[Q], lambda_n: &Q, alpha: &[Q]) -> Result<Q> {
    let mut out = Q::one();
    for (m, a) in mu.iter().zip(alpha) {
        let steps = to_i64(&(a - lambda_n)).filter(|s| *s >= 0).ok_or_else(|| {
            Error::ConstructionBug(format!("weight entry {a} is not above the lowest entry {lambda_n}"))
        })?;
        for t in 0..steps {
            out *= m - lambda_n - qi(t);
        }
    }
    Ok(out)
}

/// Product of the `e_0j`-coefficients `-(a - t)` needed to move from
/// `r_j = 0` to `r_j`, where `a = mu_j - alpha_j`; inverted for `r_j < 0`.
fn lattice_scale(a: &Q, r: i64) -> Q {
    if r >= 0 {
        (0..r).fold(Q::one(), |acc, t| acc * -(a - qi(t)))
    } else {
        (1..=-r).fold(Q::one(), |acc, t| acc / -(a + qi(t)))
    }
}

/// Diagonal of the isomorphism `G_mu(V(lambda)^tau) -> T(P(mu - lambda), V(lambda))`
/// at each lattice point: `e^r ⊗ v_b` goes to `s(r, b) x^{mu - r - alpha_b} ⊗ v_b`.
pub fn intertwiner_diagonal(g: &LatticeModule) -> Result<Vec<Vec<Q>>> {
    let fiber = g.fiber();
    let mu = g.mu();
    let lambda_n = fiber.highest_weight().last().clone();
    let base: Vec<Q> = (0..fiber.dim()).map(|b| fiber_scale(mu, &lambda_n, fiber.weight(b))).collect::<Result<_>>()?;
    if base.iter().any(Zero::is_zero) {
        return Err(Error::ZeroDenominator("mu_k - lambda_k is an integer, the fiber map degenerates".into()));
    }
    let mut out = Vec::with_capacity(g.lattice().len());
    for r in g.lattice().points() {
        let mut row = Vec::with_capacity(fiber.dim());
        for (b, f) in base.iter().enumerate() {
            let mut s = f.clone();
            for (j, &rj) in r.iter().enumerate() {
                let a = &mu[j] - &fiber.weight(b)[j];
                if rj < 0 && (1..=-rj).any(|t| (&a + qi(t)).is_zero()) {
                    return Err(Error::ZeroDenominator(format!("mu_{} - alpha_{} + t vanishes", j + 1, j + 1)));
                }
                s *= lattice_scale(&a, rj);
            }
            row.push(s);
        }
        out.push(row);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntertwinerReport {
    pub commutes: bool,
    pub invertible: bool,
    pub twisted_action_ok: bool,
    pub violations: Vec<String>,
}

impl IntertwinerReport {
    pub fn ok(&self) -> bool {
        self.commutes && self.invertible && self.twisted_action_ok && self.violations.is_empty()
    }
}

/// Checks `T(g) Phi = Phi G(g)` blockwise for every generator on
/// `interior(depth)`, and that `Phi` is invertible on every fiber.
pub fn intertwiner_check(g: &LatticeModule, t: &LatticeModule, depth: i64) -> Result<IntertwinerReport> {
    if g.realization() != Realization::Induced || t.realization() != Realization::ShenLarsson {
        return Err(Error::InvalidGenerator("intertwiner goes from the induced to the Shen-Larsson realization".into()));
    }
    if g.mu() != t.mu() || g.lattice() != t.lattice() || g.fiber().highest_weight() != t.fiber().highest_weight() {
        return Err(Error::DimensionMismatch { expected: g.dim(), actual: t.dim() });
    }
    let phi = intertwiner_diagonal(g)?;
    let invertible = phi.iter().flatten().all(|x| !x.is_zero());
    let phi_at = |k: usize| SparseMatrix::diagonal(&phi[k]);
    let points = g.lattice().interior(depth);
    let found: Vec<Vec<String>> = par::map(g.generators(), |&x| {
        let mut bad = Vec::new();
        for &k in &points {
            match (g.block(x, k), t.block(x, k)) {
                (Some((tg, bg)), Some((tt, bt))) if tg == tt => {
                    if bt.matmul(&phi_at(k)) != phi_at(tg).matmul(bg) {
                        bad.push(format!("{x} at {:?}", g.lattice().point(k)));
                    }
                }
                _ => bad.push(format!("{x} leaves the box at {:?}", g.lattice().point(k))),
            }
        }
        bad
    });
    let violations: Vec<String> = found.into_iter().flatten().collect();
    Ok(IntertwinerReport {
        commutes: violations.is_empty(),
        invertible,
        twisted_action_ok: twisted_action_matches(g.fiber(), g.mu())?,
        violations,
    })
}

/// The twisted gl_n-action on the `mu`-weight space of the Shen-Larsson
/// module, `e_ij ∘ (x^{mu-alpha} ⊗ v) = (mu_i - alpha_i + delta_ij)/(mu_j - alpha_j + 1)
/// x^{mu - alpha + e_j - e_i} ⊗ e_ij v`, equals `D e_ij D^{-1}` for the
/// diagonal `D` of [`fiber_scale`]; so it is a gl_n-module isomorphic to
/// `V(lambda)`.
pub fn twisted_action_matches(fiber: &Representation, mu: &[Q]) -> Result<bool> {
    let n = fiber.n();
    let d = fiber.dim();
    let lambda_n = fiber.highest_weight().last().clone();
    let scale: Vec<Q> = (0..d).map(|b| fiber_scale(mu, &lambda_n, fiber.weight(b))).collect::<Result<_>>()?;
    if scale.iter().any(Zero::is_zero) {
        return Err(Error::ZeroDenominator("fiber scale vanishes".into()));
    }
    let dm = SparseMatrix::diagonal(&scale);
    let dinv = SparseMatrix::diagonal(&scale.iter().map(|x| x.recip()).collect::<Vec<_>>());
    for i in 1..=n {
        for j in 1..=n {
            let e = fiber.action(i, j);
            let mut triples = Vec::new();
            for (row, col, x) in e.triples() {
                let alpha = fiber.weight(col);
                let num = &mu[i - 1] - &alpha[i - 1] + if i == j { Q::one() } else { Q::zero() };
                let den = &mu[j - 1] - &alpha[j - 1] + Q::one();
                if den.is_zero() {
                    return Err(Error::ZeroDenominator(format!("mu_{j} - alpha_{j} + 1 = 0")));
                }
                triples.push((row, col, x * num / den));
            }
            let twisted = SparseMatrix::from_triples(d, d, triples);
            if twisted != dm.matmul(e).matmul(&dinv) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
