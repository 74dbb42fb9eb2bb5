//! Distinguished elements: the generator images under `tau` and `sigma tau`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::element::AlgebraElement;
use super::sigma::apply_sigma;
use crate::rational::q;
use crate::{Error, Result};

/// Generators `x_ij` (i != j) and `omega_i` of the W-algebra, indices `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WGenerator {
    X(usize, usize),
    Omega(usize),
}

impl fmt::Display for WGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WGenerator::X(i, j) => write!(f, "x[{i},{j}]"),
            WGenerator::Omega(i) => write!(f, "omega[{i}]"),
        }
    }
}

/// Generators of `sigma tau(W)`: `e_ij` with `i, j <= n-1`, `e_ni` with
/// `i <= n-1`, and `y_k` with `k <= n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum StGenerator {
    E(usize, usize),
    EN(usize),
    Y(usize),
}

impl StGenerator {
    /// All generators for gl_n in a fixed order: `e_ij`, then `e_ni`, then `y_k`.
    pub fn all(n: usize) -> Vec<StGenerator> {
        let mut out = Vec::new();
        for i in 1..n {
            for j in 1..n {
                out.push(StGenerator::E(i, j));
            }
        }
        out.extend((1..n).map(StGenerator::EN));
        out.extend((1..=n).map(StGenerator::Y));
        out
    }

    fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            StGenerator::E(i, j) => (1..n).contains(&i) && (1..n).contains(&j),
            StGenerator::EN(i) => (1..n).contains(&i),
            StGenerator::Y(k) => (1..=n).contains(&k),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} for n = {n}")))
        }
    }
}

impl fmt::Display for StGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StGenerator::E(i, j) => write!(f, "e[{i},{j}]"),
            StGenerator::EN(i) => write!(f, "e[n,{i}]"),
            StGenerator::Y(k) => write!(f, "y[{k}]"),
        }
    }
}

/// `I_m = e_11 + ... + e_mm` inside U(gl_rank).
pub fn identity_sum(rank: usize, m: usize) -> AlgebraElement {
    (1..=m.min(rank)).fold(AlgebraElement::zero(rank), |acc, i| &acc + &AlgebraElement::e(rank, i, i))
}

/// `X = e_1n + ... + e_{n-1,n}`.
pub fn x_sum(n: usize) -> AlgebraElement {
    (1..n).fold(AlgebraElement::zero(n), |acc, k| &acc + &AlgebraElement::e(n, k, n))
}

fn check_index(n: usize, i: usize) -> Result<()> {
    if n == 0 || !(1..=n).contains(&i) {
        return Err(Error::IndexOutOfRange(format!("index {i} for n = {n}")));
    }
    Ok(())
}

/// `gamma_i = sum_j (e_ij e_jj - e_ij)`.
pub fn gamma(n: usize, i: usize) -> Result<AlgebraElement> {
    check_index(n, i)?;
    let mut out = AlgebraElement::zero(n);
    for j in 1..=n {
        let eij = AlgebraElement::e(n, i, j);
        out = &out + &(&(&eij * &AlgebraElement::e(n, j, j)) - &eij);
    }
    Ok(out)
}

/// `y_k = e_kn (I_n - n) + sum_{j<n} e_kj e_jn`.
pub fn y(n: usize, k: usize) -> Result<AlgebraElement> {
    check_index(n, k)?;
    let shifted = &identity_sum(n, n) - &AlgebraElement::scalar(n, q(n as i64));
    let mut out = &AlgebraElement::e(n, k, n) * &shifted;
    for j in 1..n {
        out = &out + &(&AlgebraElement::e(n, k, j) * &AlgebraElement::e(n, j, n));
    }
    Ok(out)
}

/// Image of a W-algebra generator under `tau`: `x_ij -> e_ij - e_ii`,
/// `omega_i -> gamma_i`.
pub fn tau_image(n: usize, g: WGenerator) -> Result<AlgebraElement> {
    match g {
        WGenerator::X(i, j) => {
            check_index(n, i)?;
            check_index(n, j)?;
            if i == j {
                return Err(Error::InvalidGenerator(format!("x[{i},{j}] needs distinct indices")));
            }
            Ok(&AlgebraElement::e(n, i, j) - &AlgebraElement::e(n, i, i))
        }
        WGenerator::Omega(i) => gamma(n, i),
    }
}

/// The element of U(gl_n) named by a `sigma tau(W)` generator.
pub fn sigma_tau_generator(n: usize, g: StGenerator) -> Result<AlgebraElement> {
    g.validate(n)?;
    Ok(match g {
        StGenerator::E(i, j) => AlgebraElement::e(n, i, j),
        StGenerator::EN(i) => AlgebraElement::e(n, n, i),
        StGenerator::Y(k) => y(n, k)?,
    })
}

/// An explicit polynomial `b` in the `tau`-images of the W-generators with
/// `sigma(b)` equal to the given `sigma tau(W)` generator. Applying
/// [`apply_sigma`] to the result and comparing with [`sigma_tau_generator`]
/// certifies that the generator lies in `sigma tau(W)`.
pub fn sigma_tau_preimage(n: usize, g: StGenerator) -> Result<AlgebraElement> {
    g.validate(n)?;
    let t = |w: WGenerator| tau_image(n, w);
    let gl_part = |i: usize, j: usize| -> Result<AlgebraElement> {
        if i == j {
            Ok(-&t(WGenerator::X(i, n))?)
        } else {
            Ok(&t(WGenerator::X(i, j))? - &t(WGenerator::X(i, n))?)
        }
    };
    let last_row = |j: usize| -> Result<AlgebraElement> {
        let mut out = t(WGenerator::X(n, j))?;
        for k in 1..n {
            out = &out + &gl_part(k, j)?;
        }
        Ok(out)
    };
    // sum_{j<n} (b(e_rj) b(e_jj) - b(e_rj)) where b(e_rj) comes from `row`
    let correction = |row: &dyn Fn(usize) -> Result<AlgebraElement>| -> Result<AlgebraElement> {
        let mut out = AlgebraElement::zero(n);
        for j in 1..n {
            let brj = row(j)?;
            out = &out + &(&(&brj * &gl_part(j, j)?) - &brj);
        }
        Ok(out)
    };
    match g {
        StGenerator::E(i, j) => gl_part(i, j),
        StGenerator::EN(j) => last_row(j),
        StGenerator::Y(k) if k < n => Ok(&t(WGenerator::Omega(k))? - &correction(&|j| gl_part(k, j))?),
        StGenerator::Y(_) => {
            let mut out = t(WGenerator::Omega(n))?;
            for k in 1..n {
                out = &out + &t(WGenerator::Omega(k))?;
            }
            Ok(&out - &correction(&last_row)?)
        }
    }
}

/// Verifies `sigma(sigma_tau_preimage(g)) == sigma_tau_generator(g)`.
pub fn preimage_certifies(n: usize, g: StGenerator) -> Result<bool> {
    Ok(apply_sigma(&sigma_tau_preimage(n, g)?, false)? == sigma_tau_generator(n, g)?)
}
