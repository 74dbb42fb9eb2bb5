use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::closure::submodule_closure;
use super::operators::{Flavor, Part, WOperatorSet};
use crate::algebra::{identity_sum, sigma_tau_generator, AlgebraElement, StGenerator};
use crate::glrep::{branch_restriction, HighestWeight, InterlacingWeight, Representation};
use crate::linalg::is_zero_vec;
use crate::rational::{is_integer_at_least, q, to_i64};
use crate::{Result, Q};

/// `k = lambda_s - s + |lambda|` when the reducibility condition holds at `s`:
/// `k` is a positive integer and `s - |lambda| - lambda_{s+1}` a non-negative one.
pub fn reducibility_exponent(lambda: &HighestWeight, s: usize) -> Option<usize> {
    let n = lambda.n();
    if s == 0 || s >= n {
        return None;
    }
    let size = lambda.size();
    let k = lambda.at(s) - q(s as i64) + &size;
    let other = q(s as i64) - &size - lambda.at(s + 1);
    (is_integer_at_least(&k, 1) && is_integer_at_least(&other, 0)).then(|| to_i64(&k).unwrap() as usize)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SingularVectorResult {
    pub s: usize,
    pub k: Option<usize>,
    /// `e_ns^k v_lambda` is nonzero.
    pub nonzero: bool,
    /// Every positive-part generator kills `e_ns^k v_lambda`.
    pub killed_by_positive_part: bool,
    /// `e_ns^k v_lambda` generates a proper submodule.
    pub proper: bool,
    /// The gl_{n-1}-weight `nu = (lambda_1, .., s - |lambda|, .., lambda_{n-1})`.
    pub nu: Option<InterlacingWeight>,
    /// The gl_{n-1}-highest-weight vector of weight `nu` (the component of
    /// `e_ns^k v_lambda` in the `V_{n-1}(nu)` summand) is killed by the
    /// positive part and generates a proper submodule.
    pub branch_vector_singular: bool,
    #[serde(skip)]
    pub witness: Option<Vec<Q>>,
}

impl SingularVectorResult {
    /// The statement for the vector `e_ns^k v_lambda` itself.
    pub fn holds(&self) -> bool {
        self.k.is_some() && self.nonzero && self.killed_by_positive_part && self.proper
    }

    /// The statement for the gl_{n-1}-highest-weight vector of weight `nu`.
    /// It differs from [`holds`](Self::holds) when `s < n - 1`: then
    /// `e_sj e_ns^k v_lambda = -k e_ns^{k-1} e_nj v_lambda` need not vanish
    /// for `s < j < n`.
    pub fn branch_holds(&self) -> bool {
        self.k.is_some() && self.nonzero && self.branch_vector_singular
    }
}

/// Checks whether `e_ns^k v_lambda` is a singular vector generating a proper
/// `sigma tau(W)`-submodule when the reducibility condition holds at `s`,
/// and the same for the gl_{n-1}-highest-weight vector of the weight `nu`
/// it lands in.
pub fn singular_vector_test(ops: &WOperatorSet<'_>, s: usize) -> SingularVectorResult {
    assert_eq!(ops.flavor(), Flavor::SigmaTau, "singular vectors are read in the sigma tau picture");
    let rep = ops.rep();
    let n = rep.n();
    let lambda = rep.highest_weight();
    let Some(k) = reducibility_exponent(lambda, s) else {
        return SingularVectorResult {
            s,
            k: None,
            nonzero: false,
            killed_by_positive_part: false,
            proper: false,
            nu: None,
            branch_vector_singular: false,
            witness: None,
        };
    };
    let mut w = rep.highest_weight_vector();
    for _ in 0..k {
        w = rep.action(n, s).mul_vec(&w);
    }
    let positive = ops.part(Part::Positive);
    let is_singular = |v: &[Q]| positive.iter().all(|m| is_zero_vec(&m.mul_vec(v)));
    let generates_proper = |v: &[Q]| !submodule_closure(ops, &[v.to_vec()]).is_full();
    let nonzero = !is_zero_vec(&w);
    let killed = is_singular(&w);
    let proper = nonzero && generates_proper(&w);
    let mut nu: Vec<Q> = lambda.entries()[..n - 1].to_vec();
    nu[s - 1] = q(s as i64) - lambda.size();
    let branch = branch_restriction(rep).into_iter().find(|b| b.mu.entries() == nu.as_slice());
    let branch_vector_singular = branch.as_ref().is_some_and(|b| is_singular(&b.vector) && generates_proper(&b.vector));
    SingularVectorResult {
        s,
        k: Some(k),
        nonzero,
        killed_by_positive_part: killed,
        proper,
        nu: branch.map(|b| b.mu),
        branch_vector_singular,
        witness: Some(w),
    }
}

fn el(n: usize, i: usize, j: usize) -> AlgebraElement {
    AlgebraElement::generator(n, i, j).expect("index in range")
}

/// Both sides of the closed formula for `y_s e_ns^k v+`, `v+` the
/// highest-weight vector, as vectors.
pub fn key_identity_sides(rep: &Representation, s: usize, k: usize) -> Result<(Vec<Q>, Vec<Q>)> {
    let n = rep.n();
    let v = rep.highest_weight_vector();
    let ens = el(n, n, s);
    let y_s = sigma_tau_generator(n, StGenerator::Y(s))?;
    let y_n = sigma_tau_generator(n, StGenerator::Y(n))?;
    let lhs = rep.apply_element(&(&y_s * &ens.pow(k)), &v)?;

    let kq = q(k as i64);
    let one = AlgebraElement::one(n);
    let a = &el(n, s, s) + &one.scale(&(Q::one() - &kq));
    let shifted = &identity_sum(n, n - 1) - &AlgebraElement::scalar(n, q(n as i64));
    let mut inner = &(&a * &a) + &(&a * &shifted);
    for l in (1..n).filter(|&l| l != s) {
        inner = &inner + &(&el(n, s, l) * &el(n, l, s));
    }
    inner = &inner - &y_n;
    let mut rhs_el = (&ens.pow(k - 1) * &inner).scale(&kq);
    if k >= 2 {
        let mut tail = AlgebraElement::zero(n);
        for l in (1..n).filter(|&l| l != s) {
            tail = &tail + &(&(&ens.pow(k - 2) * &el(n, n, l)) * &el(n, l, s));
        }
        rhs_el = &rhs_el - &tail.scale(&(&kq * (&kq - Q::one())));
    }
    let rhs = rep.apply_element(&rhs_el, &v)?;
    Ok((lhs, rhs))
}

pub fn key_lemma_check(rep: &Representation, s: usize, k: usize) -> Result<bool> {
    let (l, r) = key_identity_sides(rep, s, k)?;
    Ok(l == r)
}

/// `eta_n = lambda_n (|lambda| - n)` with the witness `k = lambda_{n-1} - lambda_n + 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EtaInvariant {
    pub eta: Q,
    pub k: usize,
    /// `eta = (lambda_{n-1} + 1 - k)(lambda_1 + ... + lambda_{n-1} - n + lambda_{n-1} + 1 - k)`.
    pub factorization_holds: bool,
}

pub fn eta_invariant(lambda: &HighestWeight) -> EtaInvariant {
    let n = lambda.n();
    let eta = lambda.last() * (lambda.size() - q(n as i64));
    let prev = lambda.at(n - 1);
    let k = to_i64(&(prev - lambda.last() + q(1))).expect("dominant") as usize;
    let head: Q = lambda.entries()[..n - 1].iter().fold(Q::zero(), |a, b| a + b);
    let t = prev + q(1) - q(k as i64);
    let factorization_holds = eta == &t * (head - q(n as i64) + &t);
    EtaInvariant { eta, k, factorization_holds }
}

/// Eigenvalue of `y_n` on the highest-weight vector, if it is an eigenvector.
pub fn eta_from_action(ops: &WOperatorSet<'_>) -> Option<Q> {
    let rep = ops.rep();
    let v = rep.highest_weight_vector();
    let w = ops.matrix(StGenerator::Y(rep.n())).mul_vec(&v);
    let eta = w[rep.highest_weight_index()].clone();
    let expect: Vec<Q> = v.iter().map(|x| x * &eta).collect();
    (w == expect).then_some(eta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrep::build_irreducible;
    use crate::rational::frac;

    fn hw(l: &[i64]) -> HighestWeight {
        HighestWeight::from_ints(l).unwrap()
    }

    #[test]
    fn exponent_examples() {
        assert_eq!(reducibility_exponent(&hw(&[1, 0]), 1), Some(1));
        assert_eq!(reducibility_exponent(&hw(&[0, 0]), 1), None);
        assert_eq!(reducibility_exponent(&HighestWeight::new(vec![frac(3, 2), frac(1, 2)]).unwrap(), 1), None);
    }

    #[test]
    fn natural_module_singular_vector() {
        let rep = build_irreducible(&hw(&[1, 0])).unwrap();
        let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).unwrap();
        let r = singular_vector_test(&ops, 1);
        assert!(r.holds() && r.branch_holds());
        assert_eq!(r.witness.unwrap(), rep.action(2, 1).mul_vec(&rep.highest_weight_vector()));
    }

    #[test]
    fn literal_vector_can_fail_below_the_last_index() {
        let rep = build_irreducible(&hw(&[3, 0, -2])).unwrap();
        let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).unwrap();
        let r = singular_vector_test(&ops, 1);
        assert_eq!(r.k, Some(3));
        assert!(r.nonzero && !r.killed_by_positive_part && !r.proper);
        assert!(r.branch_holds());
    }

    #[test]
    fn eta_examples() {
        let e = eta_invariant(&hw(&[1, -1]));
        assert_eq!((e.eta.clone(), e.k), (q(2), 3));
        assert!(e.factorization_holds);
        let rep = build_irreducible(&hw(&[1, -1])).unwrap();
        let ops = WOperatorSet::build(&rep, Flavor::SigmaTau).unwrap();
        assert_eq!(eta_from_action(&ops), Some(q(2)));
        assert_eq!(eta_invariant(&hw(&[1, 0])).k, 2);
    }

    #[test]
    fn key_identity_small() {
        for (l, s, k) in [(&[1, 0][..], 1, 1), (&[2, 0], 1, 2), (&[2, 1, 0], 1, 2), (&[2, 1, 0], 2, 1), (&[3, 1, -1], 2, 3)] {
            let rep = build_irreducible(&hw(l)).unwrap();
            assert!(key_lemma_check(&rep, s, k).unwrap(), "{l:?} s={s} k={k}");
        }
    }
}
