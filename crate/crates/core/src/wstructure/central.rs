use serde::{Deserialize, Serialize};

use crate::glrep::{is_dominant, HighestWeight};
use crate::rational::{fmt_q_list, is_integer, q};
use crate::{Error, Result, Q};

/// The three shapes a dot-orbit class can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrbitCase {
    /// `-|lambda| - lambda_1` is not an integer; the class is `{lambda}`.
    Nonintegral,
    /// `-|lambda| = lambda_i - i` for some `i`; the class is `{lambda}`.
    Degenerate,
    /// Integral and regular: the class is a chain `mu, mu(1), ..., mu(n)`.
    Chain,
}

impl OrbitCase {
    pub fn number(&self) -> u8 {
        match self {
            OrbitCase::Nonintegral => 1,
            OrbitCase::Degenerate => 2,
            OrbitCase::Chain => 3,
        }
    }
}

/// Dot-orbit class `[lambda]` of a dominant weight.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CentralCharacterClass {
    pub lambda: HighestWeight,
    pub case: OrbitCase,
    /// For a chain: the base `mu` with `-|mu| - mu_1 >= 0`, the chain
    /// `mu(0) = mu, mu(1), ..., mu(n)` and the position of `lambda` in it.
    pub base: Option<HighestWeight>,
    pub chain: Vec<HighestWeight>,
    pub position: Option<usize>,
}

impl CentralCharacterClass {
    /// Members of the class.
    pub fn members(&self) -> Vec<HighestWeight> {
        if self.case == OrbitCase::Chain {
            self.chain.clone()
        } else {
            vec![self.lambda.clone()]
        }
    }

    /// Composition length of V(lambda) over the W-algebra predicted by the
    /// class: 2 strictly inside a chain, 1 otherwise.
    pub fn predicted_length(&self) -> usize {
        match (self.case, self.position) {
            (OrbitCase::Chain, Some(i)) if i >= 1 && i < self.lambda.n() => 2,
            _ => 1,
        }
    }
}

/// `(-|lambda|, lambda_1 - 1, ..., lambda_n - n)`.
pub fn shifted_extended(lambda: &HighestWeight) -> Vec<Q> {
    let mut out = vec![-lambda.size()];
    out.extend(lambda.entries().iter().enumerate().map(|(i, x)| x - q(i as i64 + 1)));
    out
}

/// Sorted copy of the shifted extended weight, the invariant of a class.
pub fn orbit_invariant(lambda: &HighestWeight) -> Vec<Q> {
    let mut s = shifted_extended(lambda);
    s.sort();
    s
}

/// `mu(i) = (mu_0 + 1, ..., mu_{i-1} + 1, mu_{i+1}, ..., mu_n)`, `mu_0 = -|mu|`.
pub fn chain_member(mu: &HighestWeight, i: usize) -> Vec<Q> {
    let mut ext = vec![-mu.size()];
    ext.extend(mu.entries().iter().cloned());
    let n = mu.n();
    let mut out = Vec::with_capacity(n);
    out.extend(ext.iter().take(i).map(|x| x + q(1)));
    out.extend(ext.iter().skip(i + 1).cloned());
    out
}

/// Classifies `lambda` and, for an integral regular weight, reconstructs
/// its chain.
pub fn dot_orbit_class(lambda: &HighestWeight) -> Result<CentralCharacterClass> {
    let n = lambda.n();
    let l0 = -lambda.size();
    let l = lambda.entries();
    if !is_integer(&(&l0 - &l[0])) {
        return Ok(CentralCharacterClass { lambda: lambda.clone(), case: OrbitCase::Nonintegral, base: None, chain: vec![], position: None });
    }
    let shifted: Vec<Q> = (1..=n).map(|i| &l[i - 1] - q(i as i64)).collect();
    if shifted.contains(&l0) {
        return Ok(CentralCharacterClass { lambda: lambda.clone(), case: OrbitCase::Degenerate, base: None, chain: vec![], position: None });
    }
    let i = shifted.iter().filter(|s| **s > l0).count();
    // mu_0..mu_{i-1} = lambda_1 - 1..lambda_i - 1, mu_i = i - |lambda|, mu_j = lambda_j after
    let mut ext: Vec<Q> = l[..i].iter().map(|x| x - q(1)).collect();
    ext.push(q(i as i64) + &l0);
    ext.extend(l[i..].iter().cloned());
    let mu = HighestWeight::new(ext[1..].to_vec())
        .map_err(|_| Error::ConstructionBug(format!("base of the chain through {lambda} is not dominant")))?;
    if ext[0] != -mu.size() {
        return Err(Error::ConstructionBug(format!("base of the chain through {lambda} has the wrong size")));
    }
    let mut chain = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let m = chain_member(&mu, k);
        if !is_dominant(&m) {
            return Err(Error::ConstructionBug(format!("chain member {k} of {mu} is {}", fmt_q_list(&m))));
        }
        chain.push(HighestWeight::new(m)?);
    }
    if chain[i] != *lambda {
        return Err(Error::ConstructionBug(format!("{lambda} is not at position {i} of its chain")));
    }
    Ok(CentralCharacterClass { lambda: lambda.clone(), case: OrbitCase::Chain, base: Some(mu), chain, position: Some(i) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn examples() {
        let c = dot_orbit_class(&HighestWeight::new(vec![frac(3, 2), frac(1, 2)]).unwrap()).unwrap();
        assert_eq!(c.case, OrbitCase::Nonintegral);
        let c = dot_orbit_class(&HighestWeight::from_ints(&[1, -1]).unwrap()).unwrap();
        assert_eq!(c.case, OrbitCase::Degenerate);
        let mu = HighestWeight::from_ints(&[0, -3]).unwrap();
        let c = dot_orbit_class(&mu).unwrap();
        assert_eq!(c.case, OrbitCase::Chain);
        assert_eq!(c.position, Some(0));
        let names: Vec<String> = c.chain.iter().map(|m| m.to_string()).collect();
        assert_eq!(names, vec!["(0,-3)", "(4,-3)", "(4,1)"]);
        for m in &c.chain {
            assert_eq!(orbit_invariant(m), vec![q(-5), q(-1), q(3)]);
            let again = dot_orbit_class(m).unwrap();
            assert_eq!(again.chain, c.chain);
        }
        assert_eq!(dot_orbit_class(&HighestWeight::from_ints(&[4, -3]).unwrap()).unwrap().predicted_length(), 2);
    }
}
