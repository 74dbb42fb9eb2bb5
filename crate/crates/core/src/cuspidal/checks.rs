use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::module::LatticeModule;
use crate::algebra::sl::{bracket, SlElement};
use crate::linalg::{dense, is_zero_vec, unit_vec, SparseMatrix, Subspace};
use crate::{par, Q};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationReport {
    pub depth: i64,
    pub pairs: usize,
    pub points: usize,
    pub violations: Vec<String>,
}

/// `[A, B] = AB - BA` for every pair of basis elements of sl(n+1), as
/// blocks at every point of `interior(depth)`.
pub fn check_sl_relations(m: &LatticeModule, depth: i64) -> RelationReport {
    let n = m.n();
    let gens = m.generators();
    let pairs: Vec<(SlElement, SlElement)> =
        gens.iter().enumerate().flat_map(|(a, &x)| gens[a + 1..].iter().map(move |&y| (x, y))).collect();
    let points = m.lattice().interior(depth);
    let found: Vec<Vec<String>> = par::map(&pairs, |&(a, b)| {
        let rhs_terms = bracket(a, b, n);
        let mut bad = Vec::new();
        for &k in &points {
            let (Some(ab), Some(ba)) = (compose(m, a, b, k), compose(m, b, a, k)) else {
                bad.push(format!("[{a}, {b}] leaves the box at {:?}", m.lattice().point(k)));
                continue;
            };
            if ab.0 != ba.0 {
                bad.push(format!("[{a}, {b}] has inconsistent targets at {:?}", m.lattice().point(k)));
                continue;
            }
            let lhs = &ab.1 - &ba.1;
            let d = m.fiber_dim();
            let mut rhs = SparseMatrix::zeros(d, d);
            for (g, c) in &rhs_terms {
                match m.block(*g, k) {
                    Some((t, blk)) if t == ab.0 => rhs = &rhs + &blk.scale(&Q::from_integer((*c).into())),
                    _ => bad.push(format!("{g} does not land with [{a}, {b}] at {:?}", m.lattice().point(k))),
                }
            }
            if lhs != rhs {
                bad.push(format!("[{a}, {b}] fails at {:?}", m.lattice().point(k)));
            }
        }
        bad
    });
    RelationReport { depth, pairs: pairs.len(), points: points.len(), violations: found.into_iter().flatten().collect() }
}

/// `A B` at point `k`: the target point and the block.
fn compose(m: &LatticeModule, a: SlElement, b: SlElement, k: usize) -> Option<(usize, SparseMatrix)> {
    let (t1, bb) = m.block(b, k)?;
    let (t2, ab) = m.block(a, t1)?;
    Some((t2, ab.matmul(bb)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InjectivityResult {
    pub generator: String,
    pub injective: bool,
    /// A point of `interior(1)` where the block has a kernel.
    pub witness: Option<Vec<i64>>,
}

/// Whether the root vector `g` has trivial kernel on sources in
/// `interior(1)`. Distinct sources have distinct targets, so this is a
/// per-block rank test.
pub fn injectivity_check(m: &LatticeModule, g: SlElement) -> InjectivityResult {
    let d = m.fiber_dim();
    let witness = m.lattice().interior(1).into_iter().find(|&k| match m.block(g, k) {
        Some((_, b)) => dense::rank(&b.to_dense()) < d,
        None => true,
    });
    InjectivityResult {
        generator: g.to_string(),
        injective: witness.is_none(),
        witness: witness.map(|k| m.lattice().point(k).to_vec()),
    }
}

/// Injectivity of every root vector.
pub fn injectivity_sweep(m: &LatticeModule) -> Vec<InjectivityResult> {
    let roots: Vec<SlElement> = m.generators().iter().copied().filter(SlElement::is_root_vector).collect();
    par::map(&roots, |&g| injectivity_check(m, g))
}

/// Every `h_k` acts on the fiber at `r` by the scalar `mu_k - r_k`, so the
/// weight space of weight `mu - r` is exactly that fiber and has dimension
/// `dim V(lambda)`.
pub fn weight_space_rigidity(m: &LatticeModule) -> bool {
    let d = m.fiber_dim();
    (0..m.lattice().len()).all(|k| {
        let r = m.lattice().point(k);
        (1..=m.n()).all(|i| match m.block(SlElement::H(i), k) {
            Some((t, b)) => t == k && *b == SparseMatrix::scalar(d, &(&m.mu()[i - 1] - Q::from_integer(r[i - 1].into()))),
            None => false,
        })
    })
}

/// The span of everything reachable from `v` placed at point `k` by paths
/// of operators that stay in the box, as one fiber subspace per point.
pub fn box_closure(m: &LatticeModule, k: usize, v: &[Q]) -> Vec<Subspace> {
    let d = m.fiber_dim();
    let mut spaces: Vec<Subspace> = (0..m.lattice().len()).map(|_| Subspace::new(d)).collect();
    let mut frontier = VecDeque::new();
    let push = |spaces: &mut Vec<Subspace>, frontier: &mut VecDeque<(usize, Vec<Q>)>, t: usize, y: Vec<Q>| {
        if !spaces[t].insert(&y) {
            return;
        }
        if spaces[t].is_full() {
            // a full fiber is better propagated through its standard basis:
            // products along long paths have large coefficients
            frontier.extend((0..d).map(|b| (t, unit_vec(d, b))));
        } else {
            frontier.push_back((t, y));
        }
    };
    push(&mut spaces, &mut frontier, k, v.to_vec());
    while let Some((p, x)) = frontier.pop_front() {
        for &g in m.generators() {
            if let Some((t, b)) = m.block(g, p) {
                if spaces[t].is_full() {
                    continue;
                }
                let y = b.mul_vec(&x);
                if !is_zero_vec(&y) {
                    push(&mut spaces, &mut frontier, t, y);
                }
            }
        }
    }
    spaces
}

/// Points of `interior(depth)` whose whole fiber lies in `spaces`.
pub fn full_fibers(m: &LatticeModule, spaces: &[Subspace], depth: i64) -> Vec<usize> {
    m.lattice().interior(depth).into_iter().filter(|&k| spaces[k].is_full()).collect()
}

/// Desk-scale irreducibility surrogate: the closure of `v` at the origin
/// contains every fiber of `interior(depth)`.
pub fn spans_interior(m: &LatticeModule, v: &[Q], depth: i64) -> bool {
    if is_zero_vec(v) {
        return false;
    }
    let origin = m.lattice().index_of(&vec![0; m.n()]).expect("origin is in the box");
    let spaces = box_closure(m, origin, v);
    full_fibers(m, &spaces, depth).len() == m.lattice().interior(depth).len()
}
