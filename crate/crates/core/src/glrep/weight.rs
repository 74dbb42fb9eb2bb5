use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{fmt_q_list, is_integer_at_least, parse_q_list, q, to_i64};
use crate::{Error, Result, Q};

/// A dominant weight `lambda = (lambda_1, ..., lambda_n)`: consecutive
/// differences are non-negative integers, the entries themselves are
/// arbitrary rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HighestWeight {
    entries: Vec<Q>,
}

impl HighestWeight {
    pub fn new(entries: Vec<Q>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::NotDominant("empty weight".into()));
        }
        if !is_dominant(&entries) {
            return Err(Error::NotDominant(fmt_q_list(&entries)));
        }
        Ok(HighestWeight { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| q(x)).collect())
    }

    /// Parses a comma separated list such as `3/2,1/2`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_q_list(s)?)
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    /// `lambda_i`, 1-based.
    pub fn at(&self, i: usize) -> &Q {
        &self.entries[i - 1]
    }

    /// `|lambda| = lambda_1 + ... + lambda_n`.
    pub fn size(&self) -> Q {
        self.entries.iter().fold(Q::zero(), |a, b| a + b)
    }

    /// `lambda_n`, the amount of determinant twist.
    pub fn last(&self) -> &Q {
        self.entries.last().expect("nonempty")
    }

    /// `lambda - lambda_n (1, ..., 1)` as a partition.
    pub fn partition(&self) -> Vec<usize> {
        let last = self.last();
        self.entries
            .iter()
            .map(|x| to_i64(&(x - last)).expect("dominant differences are integral") as usize)
            .collect()
    }

    pub fn shifted(&self, c: &Q) -> HighestWeight {
        HighestWeight { entries: self.entries.iter().map(|x| x + c).collect() }
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|x| x.is_integer())
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q_list(&self.entries))
    }
}

pub fn is_dominant(entries: &[Q]) -> bool {
    entries.windows(2).all(|w| is_integer_at_least(&(&w[0] - &w[1]), 0))
}

/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn weyl_dimension(lambda: &HighestWeight) -> usize {
    let e = lambda.entries();
    let mut d = Q::one();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let gap = q((j - i) as i64);
            d *= (&e[i] - &e[j] + &gap) / gap;
        }
    }
    to_i64(&d).expect("Weyl dimension is an integer") as usize
}

/// A gl_{n-1} weight `mu` interlacing a gl_n weight `lambda`:
/// `lambda_1 >= mu_1 >= lambda_2 >= ... >= mu_{n-1} >= lambda_n` with integral steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InterlacingWeight {
    entries: Vec<Q>,
}

impl InterlacingWeight {
    pub fn new(entries: Vec<Q>) -> Self {
        InterlacingWeight { entries }
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn interlaces(&self, lambda: &HighestWeight) -> bool {
        let l = lambda.entries();
        self.entries.len() + 1 == l.len()
            && self.entries.iter().enumerate().all(|(i, m)| {
                is_integer_at_least(&(&l[i] - m), 0) && is_integer_at_least(&(m - &l[i + 1]), 0)
            })
    }

    /// As a gl_{n-1} highest weight (`None` when `n = 1`).
    pub fn as_highest_weight(&self) -> Option<HighestWeight> {
        HighestWeight::new(self.entries.clone()).ok()
    }

    /// Dimension of the gl_{n-1}-module it labels.
    pub fn dimension(&self) -> usize {
        self.as_highest_weight().map_or(1, |h| weyl_dimension(&h))
    }
}

impl fmt::Display for InterlacingWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_q_list(&self.entries))
    }
}

/// All weights interlacing `lambda`, lexicographically decreasing.
pub fn interlacings(lambda: &HighestWeight) -> Vec<InterlacingWeight> {
    let l = lambda.entries();
    let mut out: Vec<Vec<Q>> = vec![vec![]];
    for i in 0..l.len() - 1 {
        let span = to_i64(&(&l[i] - &l[i + 1])).expect("integral");
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=span).rev().map(move |t| {
                    let mut p = prefix.clone();
                    p.push(&l[i + 1] + q(t));
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(InterlacingWeight::new).collect()
}
