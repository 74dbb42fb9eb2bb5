use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::lattice::LatticeBox;
use crate::algebra::sl::{basis, SlElement};
use crate::glrep::Representation;
use crate::linalg::SparseMatrix;
use crate::rational::fmt_q_list;
use crate::{par, Error, Result, Q};

/// Which of the two constructions a [`LatticeModule`] realizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Realization {
    /// `G_mu(V(lambda)^tau)`: basis `e^r ⊗ v`.
    Induced,
    /// `T(P(mu - lambda), V(lambda))`: basis `x^{mu - r - alpha_b} ⊗ v_b`,
    /// grouped by the `h`-weight `mu - r`.
    ShenLarsson,
}

/// Lattice displacement of a basis element of sl(n+1): `e_ij` moves `r` by
/// `e_j - e_i` (with `e_0 = 0`), Cartan elements fix it.
pub fn displacement(g: SlElement, n: usize) -> Vec<i64> {
    let mut s = vec![0; n];
    if let SlElement::E(i, j) = g {
        if i > 0 {
            s[i - 1] -= 1;
        }
        if j > 0 {
            s[j - 1] += 1;
        }
    }
    s
}

/// A truncated sl(n+1)-weight module with weight spaces `fiber` over a
/// lattice box. Every basis element `g` of sl(n+1) is stored as one block
/// `fiber -> fiber` per source point whose target `r + displacement(g)`
/// stays in the box.
#[derive(Clone, Debug)]
pub struct LatticeModule {
    realization: Realization,
    mu: Vec<Q>,
    fiber: Representation,
    lattice: LatticeBox,
    generators: Vec<SlElement>,
    blocks: Vec<Vec<Option<(usize, SparseMatrix)>>>,
}

fn check_params(mu: &[Q], fiber: &Representation, radius: i64) -> Result<()> {
    if mu.len() != fiber.n() {
        return Err(Error::RankMismatch { left: mu.len(), right: fiber.n() });
    }
    if radius < 0 {
        return Err(Error::IndexOutOfRange(format!("radius {radius}")));
    }
    Ok(())
}

impl LatticeModule {
    /// `G_mu(V^tau)` from the induced-module formulas with `x_ij = e_ij - e_ii`
    /// and `omega_i = sum_j (e_ij e_jj - e_ij)` on the fiber.
    pub fn induced(mu: &[Q], fiber: &Representation, radius: i64) -> Result<Self> {
        check_params(mu, fiber, radius)?;
        Ok(Self::assemble(Realization::Induced, mu, fiber, radius, induced_block))
    }

    /// `T(P(mu - lambda), V(lambda))` through the differential-operator
    /// realization of sl(n+1) in `D_n ⊗ U(gl_n)`.
    pub fn shen_larsson(mu: &[Q], fiber: &Representation, radius: i64) -> Result<Self> {
        check_params(mu, fiber, radius)?;
        Ok(Self::assemble(Realization::ShenLarsson, mu, fiber, radius, shen_larsson_block))
    }

    fn assemble(
        realization: Realization,
        mu: &[Q],
        fiber: &Representation,
        radius: i64,
        block: fn(&[Q], &Representation, SlElement, &[i64]) -> SparseMatrix,
    ) -> Self {
        let n = fiber.n();
        let lattice = LatticeBox::new(n, radius);
        let generators = basis(n);
        let blocks = par::map(&generators, |&g| {
            let shift = displacement(g, n);
            (0..lattice.len())
                .map(|k| lattice.shifted(k, &shift).map(|t| (t, block(mu, fiber, g, lattice.point(k)))))
                .collect()
        });
        LatticeModule { realization, mu: mu.to_vec(), fiber: fiber.clone(), lattice, generators, blocks }
    }

    pub fn realization(&self) -> Realization {
        self.realization
    }

    pub fn n(&self) -> usize {
        self.fiber.n()
    }

    pub fn mu(&self) -> &[Q] {
        &self.mu
    }

    pub fn fiber(&self) -> &Representation {
        &self.fiber
    }

    pub fn fiber_dim(&self) -> usize {
        self.fiber.dim()
    }

    pub fn lattice(&self) -> &LatticeBox {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.len() * self.fiber_dim()
    }

    /// `h_1..h_n` followed by the root vectors.
    pub fn generators(&self) -> &[SlElement] {
        &self.generators
    }

    fn position(&self, g: SlElement) -> usize {
        self.generators.iter().position(|&h| h == g).expect("validated sl(n+1) element")
    }

    /// Target point and block of `g` at the point with index `k`, if the
    /// target is inside the box.
    pub fn block(&self, g: SlElement, k: usize) -> Option<(usize, &SparseMatrix)> {
        self.blocks[self.position(g)][k].as_ref().map(|(t, b)| (*t, b))
    }

    /// The partial operator of `g` on the whole box, with basis index
    /// `point * fiber_dim + b`. Columns of points whose image leaves the box
    /// are zero.
    pub fn global_matrix(&self, g: SlElement) -> SparseMatrix {
        let d = self.fiber_dim();
        let triples = self.blocks[self.position(g)]
            .iter()
            .enumerate()
            .filter_map(|(k, e)| e.as_ref().map(|(t, b)| (k, *t, b)))
            .flat_map(|(k, t, b)| b.triples().map(move |(r, c, x)| (t * d + r, k * d + c, x.clone())))
            .collect::<Vec<_>>();
        SparseMatrix::from_triples(self.dim(), self.dim(), triples)
    }

    pub fn export(&self) -> LatticeModuleExport {
        let d = self.fiber_dim();
        let mut blocks = Vec::new();
        for (gi, g) in self.generators.iter().enumerate() {
            for (k, e) in self.blocks[gi].iter().enumerate() {
                if let Some((t, b)) = e {
                    blocks.push(BlockExport {
                        generator: g.to_string(),
                        source: self.lattice.point(k).to_vec(),
                        target: self.lattice.point(*t).to_vec(),
                        triples: b.triples().map(|(r, c, x)| (r, c, x.to_string())).collect(),
                    });
                }
            }
        }
        LatticeModuleExport {
            realization: self.realization,
            mu: fmt_q_list(&self.mu),
            lambda: self.fiber.highest_weight().to_string(),
            radius: self.lattice.radius(),
            fiber_dim: d,
            blocks,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BlockExport {
    pub generator: String,
    pub source: Vec<i64>,
    pub target: Vec<i64>,
    pub triples: Vec<(usize, usize, String)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LatticeModuleExport {
    pub realization: Realization,
    pub mu: String,
    pub lambda: String,
    pub radius: i64,
    pub fiber_dim: usize,
    pub blocks: Vec<BlockExport>,
}

fn qi(x: i64) -> Q {
    Q::from_integer(x.into())
}

fn induced_block(mu: &[Q], v: &Representation, g: SlElement, r: &[i64]) -> SparseMatrix {
    let n = v.n();
    let d = v.dim();
    // mu_k - r_k, the h_k-eigenvalue at r
    let m = |k: usize| &mu[k - 1] - qi(r[k - 1]);
    let x = |i: usize, j: usize| v.action(i, j) - v.action(i, i);
    match g {
        SlElement::H(k) => SparseMatrix::scalar(d, &m(k)),
        SlElement::E(0, _) => SparseMatrix::identity(d),
        SlElement::E(i, 0) => {
            let mut omega = SparseMatrix::zeros(d, d);
            for j in 1..=n {
                omega = &omega + &(&v.action(i, j).matmul(v.action(j, j)) - v.action(i, j));
            }
            for j in (1..=n).filter(|&j| j != i) {
                omega = &omega - &x(i, j).scale(&m(j));
            }
            let size: Q = (1..=n).map(m).fold(Q::zero(), |a, b| a + b);
            &omega - &SparseMatrix::scalar(d, &(size * (m(i) + Q::one())))
        }
        SlElement::E(i, j) => &x(i, j) + &SparseMatrix::scalar(d, &(m(i) + Q::one())),
    }
}

fn shen_larsson_block(mu: &[Q], v: &Representation, g: SlElement, r: &[i64]) -> SparseMatrix {
    let n = v.n();
    let d = v.dim();
    // exponent of x_k on basis vector b at point r: mu_k - r_k - alpha_{b,k}
    let exponent = |b: usize, k: usize| &mu[k - 1] - qi(r[k - 1]) - &v.weight(b)[k - 1];
    let diag = |f: &dyn Fn(usize) -> Q| SparseMatrix::diagonal(&(0..d).map(f).collect::<Vec<_>>());
    match g {
        // x_k d/dx_k ⊗ 1 + 1 ⊗ e_kk
        SlElement::H(k) => &diag(&|b| exponent(b, k)) + v.action(k, k),
        // -d/dx_j ⊗ 1
        SlElement::E(0, j) => diag(&|b| -exponent(b, j)),
        // sum_q x_q ⊗ e_iq + x_i sum_q x_q d/dx_q ⊗ 1 + x_i ⊗ I_n
        SlElement::E(i, 0) => {
            let mut out = diag(&|b| (1..=n).map(|q| exponent(b, q)).fold(Q::zero(), |a, c| a + c));
            for q in 1..=n {
                out = &(&out + v.action(i, q)) + v.action(q, q);
            }
            out
        }
        // 1 ⊗ e_ij + x_i d/dx_j ⊗ 1
        SlElement::E(i, j) => &diag(&|b| exponent(b, j)) + v.action(i, j),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrep::{build_irreducible, HighestWeight};
    use crate::rational::{frac, q};

    fn natural() -> Representation {
        build_irreducible(&HighestWeight::from_ints(&[1, 0]).unwrap()).unwrap()
    }

    #[test]
    fn induced_formulas_at_the_origin() {
        let v = natural();
        let mu = [frac(1, 3), frac(1, 5)];
        let g = LatticeModule::induced(&mu, &v, 2).unwrap();
        let o = g.lattice().index_of(&[0, 0]).unwrap();
        let (t, b) = g.block(SlElement::E(0, 1), o).unwrap();
        assert_eq!(g.lattice().point(t), &[1, 0]);
        assert_eq!(*b, SparseMatrix::identity(2));
        let (_, h) = g.block(SlElement::H(2), o).unwrap();
        assert_eq!(*h, SparseMatrix::scalar(2, &frac(1, 5)));
        // e_12 (e^0 ⊗ v_lambda) = e^{-e_1+e_2} ⊗ (e_12 - lambda_1 + mu_1 + 1) v_lambda
        let (t, b) = g.block(SlElement::E(1, 2), o).unwrap();
        assert_eq!(g.lattice().point(t), &[-1, 1]);
        let hw = v.highest_weight_vector();
        let expect: Vec<Q> = hw.iter().map(|x| x * (frac(1, 3) - q(1) + q(1))).collect();
        assert_eq!(b.mul_vec(&hw), expect);
    }

    #[test]
    fn shen_larsson_derivative_coefficients() {
        let v = natural();
        let mu = [frac(1, 3), frac(1, 5)];
        let t = LatticeModule::shen_larsson(&mu, &v, 2).unwrap();
        let o = t.lattice().index_of(&[0, 0]).unwrap();
        // on x^{mu - alpha} ⊗ v_alpha, e_01 multiplies by -(mu_1 - alpha_1)
        let (_, b) = t.block(SlElement::E(0, 1), o).unwrap();
        let hw = v.highest_weight_index();
        assert_eq!(b.get(hw, hw), -(frac(1, 3) - q(1)));
        // h_k is the scalar mu_k - r_k on every weight space
        for k in 1..=2 {
            let (_, h) = t.block(SlElement::H(k), o).unwrap();
            assert_eq!(*h, SparseMatrix::scalar(2, &mu[k - 1]));
        }
    }
}
