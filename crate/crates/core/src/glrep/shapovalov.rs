//! Contravariant form on Verma weight spaces via PBW normal ordering.
//!
//! Independent of the module construction in `build`: the multiplicity of a
//! weight in V(lambda) equals the rank of the Gram matrix of the form on the
//! matching Verma weight space, spanned by ordered lowering monomials.

use num_traits::Zero;

use super::weight::HighestWeight;
use crate::algebra::{normal_order, Generator, Monomial};
use crate::linalg::dense::rank;
use crate::Q;

/// `c_j .. c_{i-1}` shifts of the simple-root depth for lowering `e_ij`.
fn root_of(g: &Generator) -> (usize, usize) {
    (g.col - 1, g.row - 1)
}

/// Ordered lowering monomials whose weight is `lambda - sum_i depth_i alpha_i`.
pub fn lowering_monomials(n: usize, depth: &[usize]) -> Vec<Monomial> {
    let lowering: Vec<Generator> = Generator::all(n).into_iter().filter(Generator::is_lowering).collect();
    let mut out = Vec::new();
    fn go(lowering: &[Generator], from: usize, rest: &mut Vec<usize>, cur: &mut Vec<Generator>, out: &mut Vec<Monomial>) {
        if rest.iter().all(|&c| c == 0) {
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for (k, g) in lowering.iter().enumerate().skip(from) {
            let (a, b) = root_of(g);
            if rest[a..b].iter().all(|&c| c > 0) {
                rest[a..b].iter_mut().for_each(|c| *c -= 1);
                cur.push(*g);
                go(lowering, k, rest, cur, out);
                cur.pop();
                rest[a..b].iter_mut().for_each(|c| *c += 1);
            }
        }
    }
    go(&lowering, 0, &mut depth.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// Gram matrix `<m_a v, m_b v>` with `<u v, w> = <v, theta(u) w>`, where the
/// anti-involution `theta` transposes matrix units.
pub fn gram_matrix(lambda: &HighestWeight, depth: &[usize]) -> Vec<Vec<Q>> {
    let n = lambda.n();
    let monos = lowering_monomials(n, depth);
    let mut gram = vec![vec![Q::zero(); monos.len()]; monos.len()];
    for (a, ma) in monos.iter().enumerate() {
        for (b, mb) in monos.iter().enumerate().skip(a) {
            let mut word: Vec<Generator> =
                ma.factors().iter().rev().map(|g| Generator::new(n, g.col, g.row).unwrap()).collect();
            word.extend_from_slice(mb.factors());
            let value = normal_order(n, &word)
                .unwrap()
                .terms()
                .filter(|(m, _)| m.factors().iter().all(Generator::is_cartan))
                .map(|(m, c)| m.factors().iter().fold(c.clone(), |acc, g| acc * lambda.at(g.row)))
                .fold(Q::zero(), |acc, x| acc + x);
            gram[a][b] = value.clone();
            gram[b][a] = value;
        }
    }
    gram
}

/// Multiplicity of `lambda - sum_i depth_i alpha_i` in V(lambda).
pub fn weight_multiplicity(lambda: &HighestWeight, depth: &[usize]) -> usize {
    if depth.iter().all(|&c| c == 0) {
        return 1;
    }
    let g = gram_matrix(lambda, depth);
    if g.is_empty() {
        0
    } else {
        rank(&g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verma_space_sizes() {
        // Kostant partition function of 2 alpha_1 + alpha_2 in gl_3
        assert_eq!(lowering_monomials(3, &[1, 1]).len(), 2);
        assert_eq!(lowering_monomials(3, &[2, 1]).len(), 2);
        assert_eq!(lowering_monomials(3, &[2, 2]).len(), 3);
    }

    #[test]
    fn sl2_string() {
        let l = HighestWeight::from_ints(&[3, 0]).unwrap();
        let mults: Vec<usize> = (0..6).map(|c| weight_multiplicity(&l, &[c])).collect();
        assert_eq!(mults, vec![1, 1, 1, 1, 0, 0]);
        assert_eq!(gram_matrix(&l, &[1])[0][0], crate::rational::q(3));
    }

    #[test]
    fn adjoint_zero_weight() {
        let l = HighestWeight::from_ints(&[1, 0, -1]).unwrap();
        assert_eq!(weight_multiplicity(&l, &[1, 1]), 2);
    }
}
