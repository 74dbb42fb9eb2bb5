//! Arbitrary precision rationals and the few helpers the rest of the crate needs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, d: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(d))
}

pub fn is_integer(x: &Q) -> bool {
    x.denom().is_one()
}

/// `x` is an integer `>= lo`.
pub fn is_integer_at_least(x: &Q, lo: i64) -> bool {
    is_integer(x) && x.numer() >= &BigInt::from(lo)
}

pub fn to_i64(x: &Q) -> Option<i64> {
    if is_integer(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Parses `p`, `-p` or `p/q`. Decimal points are rejected.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = || Error::Parse(format!("malformed rational `{s}` (expected p or p/q)"));
    if s.is_empty() || s.contains('.') || s.contains('e') || s.contains('E') {
        return Err(bad());
    }
    let (p, d) = match s.split_once('/') {
        Some((p, d)) => (p.trim(), d.trim()),
        None => (s, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Q::new(p, d))
}

/// Parses a comma separated list such as `1,-1/2,0`.
pub fn parse_q_list(s: &str) -> Result<Vec<Q>> {
    s.split(',').map(parse_q).collect()
}

/// Canonical text: `p` for integers, `p/q` otherwise.
pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn fmt_q_list(xs: &[Q]) -> String {
    let parts: Vec<String> = xs.iter().map(fmt_q).collect();
    format!("({})", parts.join(","))
}

pub fn factorial(k: usize) -> Q {
    (1..=k as i64).fold(Q::one(), |acc, i| acc * q(i))
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: usize = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn is_negative(x: &Q) -> bool {
    x.is_negative()
}
