use super::representation::Representation;
use super::weight::HighestWeight;
use crate::linalg::SparseMatrix;
use crate::rational::q;
use crate::{Error, Result, Q};

/// `k`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// `e_i` replacing `e_j` in the wedge of the sorted set `s`, with its sign.
fn substitute(s: &[usize], i: usize, j: usize) -> Option<(Vec<usize>, i64)> {
    if !s.contains(&j) {
        return None;
    }
    if i == j {
        return Some((s.to_vec(), 1));
    }
    if s.contains(&i) {
        return None;
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let between = s.iter().filter(|&&x| lo < x && x < hi).count();
    let mut t: Vec<usize> = s.iter().map(|&x| if x == j { i } else { x }).collect();
    t.sort_unstable();
    Some((t, if between % 2 == 0 { 1 } else { -1 }))
}

/// The exterior power `wedge^k C^n` as a gl_n-module, basis `e_S` for
/// `k`-subsets `S` in lexicographic order.
pub fn wedge_module(n: usize, k: usize) -> Result<Representation> {
    if k > n || n == 0 {
        return Err(Error::IndexOutOfRange(format!("wedge power {k} of C^{n}")));
    }
    let basis = subsets(n, k);
    let pos = |s: &[usize]| basis.iter().position(|b| b == s).expect("subset in basis");
    let dim = basis.len();
    let mut actions = Vec::with_capacity(n * n);
    for i in 1..=n {
        for j in 1..=n {
            let triples = basis
                .iter()
                .enumerate()
                .filter_map(|(c, s)| substitute(s, i, j).map(|(t, sign)| (pos(&t), c, q(sign))));
            actions.push(SparseMatrix::from_triples(dim, dim, triples.collect::<Vec<_>>()));
        }
    }
    let weights: Vec<Vec<Q>> =
        basis.iter().map(|s| (1..=n).map(|i| q(i64::from(s.contains(&i)))).collect()).collect();
    let labels = basis
        .iter()
        .map(|s| if s.is_empty() { "1".to_string() } else { s.iter().map(|x| format!("e{x}")).collect::<Vec<_>>().join("^") })
        .collect();
    let hw: Vec<i64> = (1..=n).map(|i| i64::from(i <= k)).collect();
    Representation::from_parts(HighestWeight::from_ints(&hw)?, weights, labels, actions, 0)
}

/// Matrix of `v -> e_n ^ v` from `wedge^k C^n` to `wedge^{k+1} C^n`.
pub fn wedge_with_last(n: usize, k: usize) -> Result<SparseMatrix> {
    if k >= n {
        return Err(Error::IndexOutOfRange(format!("wedge power {k} of C^{n}")));
    }
    let src = subsets(n, k);
    let dst = subsets(n, k + 1);
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let triples: Vec<_> = src
        .iter()
        .enumerate()
        .filter(|(_, s)| !s.contains(&n))
        .map(|(c, s)| {
            let mut t = s.clone();
            t.push(n);
            (dst.iter().position(|b| *b == t).unwrap(), c, q(sign))
        })
        .collect();
    Ok(SparseMatrix::from_triples(dst.len(), src.len(), triples))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extremes() {
        let t = wedge_module(3, 0).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(t.bracket_violations().is_empty());
        let d = wedge_module(3, 3).unwrap();
        assert_eq!(d.dim(), 1);
        for i in 1..=3 {
            assert_eq!(d.action(i, i).get(0, 0), q(1));
        }
        let nat = wedge_module(3, 1).unwrap();
        assert_eq!(nat.weights()[1], vec![q(0), q(1), q(0)]);
        assert!(wedge_module(2, 3).is_err());
    }

    #[test]
    fn relations_and_weights() {
        for n in 1..=4 {
            for k in 0..=n {
                let w = wedge_module(n, k).unwrap();
                assert!(w.bracket_violations().is_empty());
                assert!(w.weight_structure_ok());
            }
        }
    }

    #[test]
    fn wedge_with_last_squares_to_zero() {
        for n in 2..=4 {
            for k in 0..n - 1 {
                let a = wedge_with_last(n, k).unwrap();
                let b = wedge_with_last(n, k + 1).unwrap();
                assert!(b.matmul(&a).is_zero());
            }
        }
    }
}
