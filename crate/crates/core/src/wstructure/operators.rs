use serde::{Deserialize, Serialize};

use crate::algebra::{
    apply_sigma, commutation_relations, sigma_tau_generator, tau_image, AlgebraElement, StGenerator, WGenerator,
};
use crate::glrep::Representation;
use crate::linalg::SparseMatrix;
use crate::{par, Error, Result};

/// Which image of the W-algebra acts on the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// `sigma tau(W)`, generated by `e_ij`, `e_ni` (i, j < n) and `y_k`.
    SigmaTau,
    /// `tau(W)`, generated by `tau(x_ij)` and `tau(omega_i)`.
    Tau,
}

/// Part of the triangular decomposition a named generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Part {
    Positive,
    Zero,
    Negative,
}

pub fn part_of(g: StGenerator, n: usize) -> Part {
    match g {
        StGenerator::E(i, j) if i < j => Part::Positive,
        StGenerator::E(i, j) if i == j => Part::Zero,
        StGenerator::E(..) | StGenerator::EN(_) => Part::Negative,
        StGenerator::Y(k) if k < n => Part::Positive,
        StGenerator::Y(_) => Part::Zero,
    }
}

/// Matrices of the W-algebra generators on a gl_n-module.
///
/// `named` holds the generators `e_ij, e_ni, y_k` of `sigma tau(W)`; for the
/// `Tau` flavor they are transported by `sigma^{-1}` into `tau(W)`, so the
/// triangular decomposition and the commutation table keep their shape.
/// `images` holds the images of `x_ij` and `omega_i` (under `tau` or
/// `sigma tau`), an independent generating set of the same algebra.
pub struct WOperatorSet<'a> {
    rep: &'a Representation,
    flavor: Flavor,
    named: Vec<(StGenerator, SparseMatrix)>,
    images: Vec<(WGenerator, SparseMatrix)>,
}

fn transport(a: &AlgebraElement, flavor: Flavor, forward: bool) -> Result<AlgebraElement> {
    match (flavor, forward) {
        (Flavor::SigmaTau, true) => apply_sigma(a, false),
        (Flavor::Tau, false) => apply_sigma(a, true),
        _ => Ok(a.clone()),
    }
}

fn w_generators(n: usize) -> Vec<WGenerator> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(WGenerator::X(i, j));
            }
        }
    }
    out.extend((1..=n).map(WGenerator::Omega));
    out
}

impl<'a> WOperatorSet<'a> {
    /// Evaluates all generators on `rep` and verifies the commutation table
    /// as matrix identities before returning.
    pub fn build(rep: &'a Representation, flavor: Flavor) -> Result<Self> {
        let ops = Self::build_unchecked(rep, flavor)?;
        let bad = ops.relation_violations()?;
        if !bad.is_empty() {
            return Err(Error::ConstructionBug(format!("commutation table fails on {}: {}", rep.highest_weight(), bad.join(", "))));
        }
        Ok(ops)
    }

    pub fn build_unchecked(rep: &'a Representation, flavor: Flavor) -> Result<Self> {
        let n = rep.n();
        if n < 2 {
            return Err(Error::IndexOutOfRange(format!("W-operators need n >= 2, got {n}")));
        }
        let gens = StGenerator::all(n);
        let named = par::map(&gens, |&g| -> Result<(StGenerator, SparseMatrix)> {
            let a = transport(&sigma_tau_generator(n, g)?, flavor, false)?;
            Ok((g, rep.element_matrix(&a)?))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let ws = w_generators(n);
        let images = par::map(&ws, |&w| -> Result<(WGenerator, SparseMatrix)> {
            let a = transport(&tau_image(n, w)?, flavor, true)?;
            Ok((w, rep.element_matrix(&a)?))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        Ok(WOperatorSet { rep, flavor, named, images })
    }

    pub fn rep(&self) -> &Representation {
        self.rep
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.rep.n()
    }

    pub fn named(&self) -> &[(StGenerator, SparseMatrix)] {
        &self.named
    }

    pub fn images(&self) -> &[(WGenerator, SparseMatrix)] {
        &self.images
    }

    pub fn matrix(&self, g: StGenerator) -> &SparseMatrix {
        &self.named.iter().find(|(h, _)| *h == g).expect("generator present").1
    }

    pub fn part(&self, p: Part) -> Vec<&SparseMatrix> {
        let n = self.n();
        self.named.iter().filter(|(g, _)| part_of(*g, n) == p).map(|(_, m)| m).collect()
    }

    pub fn named_matrices(&self) -> Vec<&SparseMatrix> {
        self.named.iter().map(|(_, m)| m).collect()
    }

    pub fn image_matrices(&self) -> Vec<&SparseMatrix> {
        self.images.iter().map(|(_, m)| m).collect()
    }

    /// Ids of commutation-table entries that fail as matrix identities.
    pub fn relation_violations(&self) -> Result<Vec<String>> {
        let n = self.n();
        let rels = commutation_relations(n)?;
        let bad = par::map(&rels, |r| -> Result<Option<String>> {
            let lhs = self.matrix(r.a).commutator(self.matrix(r.b));
            let rhs = self.rep.element_matrix(&transport(&r.rhs, self.flavor, false)?)?;
            Ok((lhs != rhs).then(|| r.id.clone()))
        });
        let mut out = Vec::new();
        for b in bad {
            if let Some(id) = b? {
                out.push(id);
            }
        }
        Ok(out)
    }

    /// Whether all operators map between gl_n weight spaces, which lets
    /// closures be computed one weight space at a time.
    pub fn is_weight_homogeneous(&self) -> bool {
        self.flavor == Flavor::SigmaTau
    }
}

/// `exp(-X)` on the module (or `exp(X)` for `inverse`), with
/// `X = e_1n + ... + e_{n-1,n}`. Conjugation by it realizes sigma:
/// `A(sigma(a)) = P A(a) P^{-1}`.
pub fn sigma_matrix(rep: &Representation, inverse: bool) -> SparseMatrix {
    let n = rep.n();
    let mut x = SparseMatrix::zeros(rep.dim(), rep.dim());
    for k in 1..n {
        x = &x + rep.action(k, n);
    }
    let arg = if inverse { x } else { -&x };
    arg.exp_nilpotent().expect("X acts nilpotently")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrep::{build_irreducible, HighestWeight};

    #[test]
    fn both_flavors_satisfy_the_table() {
        for l in [[1, 0].as_slice(), &[2, -1], &[2, 1, 0], &[1, 1, 0]] {
            let rep = build_irreducible(&HighestWeight::from_ints(l).unwrap()).unwrap();
            for flavor in [Flavor::SigmaTau, Flavor::Tau] {
                assert!(WOperatorSet::build(&rep, flavor).is_ok(), "{l:?} {flavor:?}");
            }
        }
    }

    #[test]
    fn sigma_matrix_conjugates() {
        let rep = build_irreducible(&HighestWeight::from_ints(&[2, 1, 0]).unwrap()).unwrap();
        let p = sigma_matrix(&rep, false);
        let pinv = sigma_matrix(&rep, true);
        assert_eq!(p.matmul(&pinv), SparseMatrix::identity(rep.dim()));
        let g = crate::algebra::gamma(3, 2).unwrap();
        let lhs = rep.element_matrix(&apply_sigma(&g, false).unwrap()).unwrap();
        let rhs = p.matmul(&rep.element_matrix(&g).unwrap()).matmul(&pinv);
        assert_eq!(lhs, rhs);
    }
}
