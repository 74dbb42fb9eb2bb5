use num_traits::One;

use super::element::AlgebraElement;
use super::special::x_sum;
use crate::rational::q;
use crate::{Error, Result, Q};

/// Largest power of `ad X` that [`apply_sigma`] will compute before giving up.
///
/// `ad X` raises the `e_nn`-grading by one, so a monomial of degree `d` is
/// killed by `(ad X)^(2d+1)`; the bound is deliberately looser.
pub fn sigma_bound(a: &AlgebraElement) -> usize {
    2 * a.degree() * a.rank() + 2
}

/// `sigma(a) = exp(-ad X)(a)`, or `exp(ad X)(a)` when `inverse` is set.
///
/// The series is summed until a power of `ad X` vanishes exactly. Exceeding
/// [`sigma_bound`] is reported as an error rather than truncated.
pub fn apply_sigma(a: &AlgebraElement, inverse: bool) -> Result<AlgebraElement> {
    let x = x_sum(a.rank());
    let bound = sigma_bound(a);
    let mut total = a.clone();
    let mut term = a.clone();
    let mut k = 1usize;
    loop {
        // -ad X (b) = [b, X]; ad X (b) = [X, b]
        let next = if inverse { x.commutator(&term)? } else { term.commutator(&x)? };
        if next.is_zero() {
            return Ok(total);
        }
        if k > bound {
            return Err(Error::SigmaBound { bound });
        }
        term = next.scale(&(Q::one() / q(k as i64)));
        total = total.checked_add(&term)?;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{gamma, normal_order, Generator};

    fn el(n: usize, i: usize, j: usize) -> AlgebraElement {
        AlgebraElement::generator(n, i, j).unwrap()
    }

    #[test]
    fn sigma_fixes_x_and_the_last_column() {
        for n in 2..=4 {
            let x = x_sum(n);
            assert_eq!(apply_sigma(&x, false).unwrap(), x);
            for i in 1..n {
                assert_eq!(apply_sigma(&el(n, i, n), false).unwrap(), el(n, i, n));
            }
        }
    }

    #[test]
    fn inverse_round_trip_on_generators_and_gammas() {
        for n in 2..=4 {
            let mut samples: Vec<AlgebraElement> =
                Generator::all(n).into_iter().map(AlgebraElement::from_generator).collect();
            samples.extend((1..=n).map(|i| gamma(n, i).unwrap()));
            for a in samples {
                let s = apply_sigma(&a, false).unwrap();
                assert_eq!(apply_sigma(&s, true).unwrap(), a);
                assert_eq!(apply_sigma(&apply_sigma(&a, true).unwrap(), false).unwrap(), a);
            }
        }
    }

    #[test]
    fn sigma_is_multiplicative_on_generator_pairs() {
        let n = 3;
        let gens = Generator::all(n);
        for a in &gens {
            for b in &gens {
                let ab = normal_order(n, &[*a, *b]).unwrap();
                let lhs = apply_sigma(&ab, false).unwrap();
                let sa = apply_sigma(&AlgebraElement::from_generator(*a), false).unwrap();
                let sb = apply_sigma(&AlgebraElement::from_generator(*b), false).unwrap();
                assert_eq!(lhs, &sa * &sb);
            }
        }
    }

    #[test]
    fn constants_are_fixed() {
        let c = AlgebraElement::scalar(3, q(5));
        assert_eq!(apply_sigma(&c, false).unwrap(), c);
        assert_eq!(sigma_bound(&c), 2);
    }
}
