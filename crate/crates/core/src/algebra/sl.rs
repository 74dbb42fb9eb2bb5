//! Basis of sl(n+1) with indices `0..=n`.
//!
//! `H(k)` stands for the traceless Cartan element `h_k = e_kk - I/(n+1)`,
//! `k = 1..=n`; `h_0 = -(h_1 + ... + h_n)` is expanded on demand. The
//! identity never appears inside the PBW engine.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SlElement {
    H(usize),
    E(usize, usize),
}

impl fmt::Display for SlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlElement::H(k) => write!(f, "h[{k}]"),
            SlElement::E(i, j) => write!(f, "e[{i},{j}]"),
        }
    }
}

impl SlElement {
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            SlElement::H(k) => (1..=n).contains(&k),
            SlElement::E(i, j) => i != j && i <= n && j <= n,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange(format!("{self} in sl({})", n + 1)))
        }
    }

    pub fn is_root_vector(&self) -> bool {
        matches!(self, SlElement::E(..))
    }
}

/// The basis `h_1..h_n`, then every `e_ij` with `0 <= i != j <= n` in
/// lexicographic order.
pub fn basis(n: usize) -> Vec<SlElement> {
    let mut out: Vec<SlElement> = (1..=n).map(SlElement::H).collect();
    out.extend(root_vectors(n));
    out
}

pub fn root_vectors(n: usize) -> Vec<SlElement> {
    let mut out = Vec::new();
    for i in 0..=n {
        for j in 0..=n {
            if i != j {
                out.push(SlElement::E(i, j));
            }
        }
    }
    out
}

/// `e_ii - e_jj` written in the `h_1..h_n` basis.
fn cartan_difference(i: usize, j: usize, n: usize) -> Vec<(SlElement, i64)> {
    let mut coeffs = vec![0i64; n + 1];
    let mut add = |k: usize, c: i64| {
        if k == 0 {
            for c0 in coeffs.iter_mut().skip(1) {
                *c0 -= c;
            }
        } else {
            coeffs[k] += c;
        }
    };
    add(i, 1);
    add(j, -1);
    coeffs
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|(_, c)| *c != 0)
        .map(|(k, c)| (SlElement::H(k), c))
        .collect()
}

/// `[a, b]` in sl(n+1) as an integer combination of basis elements.
pub fn bracket(a: SlElement, b: SlElement, n: usize) -> Vec<(SlElement, i64)> {
    use SlElement::*;
    let delta = |x: usize, y: usize| i64::from(x == y);
    match (a, b) {
        (H(_), H(_)) => vec![],
        (H(k), E(i, j)) => {
            let c = delta(k, i) - delta(k, j);
            if c == 0 {
                vec![]
            } else {
                vec![(E(i, j), c)]
            }
        }
        (E(..), H(_)) => bracket(b, a, n).into_iter().map(|(x, c)| (x, -c)).collect(),
        (E(i, j), E(k, l)) => {
            if j == k && l == i {
                return cartan_difference(i, j, n);
            }
            let mut out = Vec::new();
            if j == k {
                out.push((E(i, l), 1));
            }
            if l == i {
                out.push((E(k, j), -1));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn combine(terms: &[(SlElement, i64)], c: i64, acc: &mut BTreeMap<SlElement, i64>) {
        for (x, d) in terms {
            *acc.entry(*x).or_default() += c * d;
        }
    }

    #[test]
    fn jacobi_and_antisymmetry() {
        for n in 1..=3 {
            let b = basis(n);
            for &x in &b {
                for &y in &b {
                    let mut s = BTreeMap::new();
                    combine(&bracket(x, y, n), 1, &mut s);
                    combine(&bracket(y, x, n), 1, &mut s);
                    assert!(s.values().all(|c| *c == 0));
                    for &z in &b {
                        let mut acc = BTreeMap::new();
                        for (p, q, r) in [(x, y, z), (y, z, x), (z, x, y)] {
                            for (w, c) in bracket(q, r, n) {
                                combine(&bracket(p, w, n), c, &mut acc);
                            }
                        }
                        assert!(acc.values().all(|c| *c == 0), "{x} {y} {z}");
                    }
                }
            }
        }
    }

    #[test]
    fn h0_expansion() {
        assert_eq!(
            bracket(SlElement::E(0, 1), SlElement::E(1, 0), 2),
            vec![(SlElement::H(1), -2), (SlElement::H(2), -1)]
        );
    }
}
