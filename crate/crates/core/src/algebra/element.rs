use std::cell::RefCell;
use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::generator::{bracket_generators, Generator};
use crate::rational::{parse_q, q};
use crate::{Error, Result, Q};

/// An ordered product of generators; normal when its factors are non-decreasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<Generator>);

impl Monomial {
    pub fn identity() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(factors: Vec<Generator>) -> Self {
        Monomial(factors)
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    fn pushed(&self, g: Generator) -> Monomial {
        let mut f = self.0.clone();
        f.push(g);
        Monomial(f)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Generator::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

type Terms = BTreeMap<Monomial, Q>;
type ProductCache = HashMap<(Monomial, Generator), Rc<Vec<(Monomial, Q)>>>;

thread_local! {
    static PRODUCT_CACHE: RefCell<ProductCache> =
        RefCell::new(HashMap::new());
}

/// Normal form of `m * g` for a normal monomial `m`.
fn monomial_times_generator(m: &Monomial, g: Generator) -> Rc<Vec<(Monomial, Q)>> {
    if m.0.last().is_none_or(|last| *last <= g) {
        return Rc::new(vec![(m.pushed(g), Q::one())]);
    }
    let key = (m.clone(), g);
    if let Some(hit) = PRODUCT_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let (last, prefix) = m.0.split_last().expect("nonempty");
    let prefix = Monomial(prefix.to_vec());
    let mut acc: Terms = BTreeMap::new();
    // m g = (prefix g) last + prefix [last, g]
    for (t, c) in monomial_times_generator(&prefix, g).iter() {
        for (u, d) in monomial_times_generator(t, *last).iter() {
            *acc.entry(u.clone()).or_insert_with(Q::zero) += c * d;
        }
    }
    for (h, s) in bracket_generators(*last, g) {
        let s = q(s);
        for (u, d) in monomial_times_generator(&prefix, h).iter() {
            *acc.entry(u.clone()).or_insert_with(Q::zero) += &s * d;
        }
    }
    let out: Rc<Vec<(Monomial, Q)>> = Rc::new(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect());
    PRODUCT_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// An element of U(gl_rank) in PBW normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    rank: usize,
    terms: Terms,
}

impl AlgebraElement {
    pub fn zero(rank: usize) -> Self {
        AlgebraElement { rank, terms: BTreeMap::new() }
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, Q::one())
    }

    pub fn scalar(rank: usize, c: Q) -> Self {
        let mut e = Self::zero(rank);
        if !c.is_zero() {
            e.terms.insert(Monomial::identity(), c);
        }
        e
    }

    pub fn from_generator(g: Generator) -> Self {
        let mut e = Self::zero(g.rank);
        e.terms.insert(Monomial(vec![g]), Q::one());
        e
    }

    /// `e_{row,col}` of gl_rank, with index validation.
    pub fn generator(rank: usize, row: usize, col: usize) -> Result<Self> {
        Ok(Self::from_generator(Generator::new(rank, row, col)?))
    }

    pub(crate) fn e(rank: usize, row: usize, col: usize) -> Self {
        Self::from_generator(Generator::e(rank, row, col))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        Ok(())
    }

    fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        AlgebraElement { rank: self.rank, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// `self * g` for a single generator.
    fn times_generator(&self, g: Generator) -> Self {
        let mut acc: Terms = BTreeMap::new();
        for (m, c) in &self.terms {
            for (u, d) in monomial_times_generator(m, g).iter() {
                *acc.entry(u.clone()).or_insert_with(Q::zero) += c * d;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        AlgebraElement { rank: self.rank, terms: acc }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.rank);
        for (m, c) in &other.terms {
            let mut partial = self.scale(c);
            for g in &m.0 {
                partial = partial.times_generator(*g);
            }
            for (u, d) in partial.terms {
                out.add_term(u, d);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(self.rank), |acc, _| &acc * self)
    }

    /// `[self, other] = self other - other self`, both normal ordered.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// Parses the canonical text form produced by `Display`.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        let mut out = Self::zero(rank);
        if s == "0" {
            return Ok(out);
        }
        for term in s.split(" + ") {
            let (coeff, mono) = match term.split_once(" * ") {
                Some((c, m)) => (parse_q(c)?, Some(m)),
                None => (parse_q(term)?, None),
            };
            let mut factors = Vec::new();
            if let Some(mono) = mono {
                for f in mono.split('*') {
                    let inner = f
                        .trim()
                        .strip_prefix("e[")
                        .and_then(|x| x.strip_suffix(']'))
                        .ok_or_else(|| Error::Parse(format!("bad factor `{f}`")))?;
                    let (i, j) = inner.split_once(',').ok_or_else(|| Error::Parse(format!("bad factor `{f}`")))?;
                    let i: usize = i.trim().parse().map_err(|_| Error::Parse(format!("bad index in `{f}`")))?;
                    let j: usize = j.trim().parse().map_err(|_| Error::Parse(format!("bad index in `{f}`")))?;
                    factors.push(Generator::new(rank, i, j)?);
                }
            }
            let element = normal_order(rank, &factors)?;
            out = out.checked_add(&element.scale(&coeff))?;
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| if m.degree() == 0 { c.to_string() } else { format!("{c} * {m}") })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: Self) -> AlgebraElement {
        self.checked_add(rhs).expect("rank mismatch in +")
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: Self) -> AlgebraElement {
        self.checked_sub(rhs).expect("rank mismatch in -")
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: Self) -> AlgebraElement {
        self.checked_mul(rhs).expect("rank mismatch in *")
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.scale(&-Q::one())
    }
}

/// PBW normal form of the word `w_1 w_2 ... w_k`; the empty word is `1`.
pub fn normal_order(rank: usize, word: &[Generator]) -> Result<AlgebraElement> {
    if let Some(g) = word.iter().find(|g| g.rank != rank) {
        return Err(Error::RankMismatch { left: rank, right: g.rank });
    }
    let mut out = AlgebraElement::one(rank);
    for g in word {
        out = out.times_generator(*g);
    }
    Ok(out)
}

/// Naive rewriting of a word, swapping one out-of-order adjacent pair at a
/// time. `pick` receives the current word and the positions `i` with
/// `w[i] > w[i+1]` and returns the position to rewrite; any choice sequence
/// must reach the same normal form.
pub fn normal_order_with<F>(rank: usize, word: &[Generator], mut pick: F) -> Result<AlgebraElement>
where
    F: FnMut(&[Generator], &[usize]) -> usize,
{
    if let Some(g) = word.iter().find(|g| g.rank != rank) {
        return Err(Error::RankMismatch { left: rank, right: g.rank });
    }
    let mut pending: Vec<(Vec<Generator>, Q)> = vec![(word.to_vec(), Q::one())];
    let mut out = AlgebraElement::zero(rank);
    while let Some((w, c)) = pending.pop() {
        let inversions: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| w[i] > w[i + 1]).collect();
        if inversions.is_empty() {
            out.add_term(Monomial(w), c);
            continue;
        }
        let k = pick(&w, &inversions);
        assert!(inversions.contains(&k), "strategy picked a position that is not an inversion");
        let mut swapped = w.clone();
        swapped.swap(k, k + 1);
        pending.push((swapped, c.clone()));
        for (h, s) in bracket_generators(w[k], w[k + 1]) {
            let mut shorter = w[..k].to_vec();
            shorter.push(h);
            shorter.extend_from_slice(&w[k + 2..]);
            pending.push((shorter, &c * q(s)));
        }
    }
    Ok(out)
}
