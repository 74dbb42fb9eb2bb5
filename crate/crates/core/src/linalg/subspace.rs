use num_traits::{One, Zero};

use super::zero_vec;
use crate::Q;

/// A subspace of `Q^n` grown one vector at a time.
///
/// Accepted vectors are kept verbatim in insertion order (the
/// *generators*) next to a row echelon form. With tracking enabled every
/// echelon row also records its expansion in the generators, which makes
/// [`Subspace::coords`] available.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Q>>,
    pivots: Vec<usize>,
    generators: Vec<Vec<Q>>,
    combos: Option<Vec<Vec<Q>>>,
}

impl Subspace {
    pub fn new(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new(), generators: Vec::new(), combos: None }
    }

    pub fn with_tracking(ambient: usize) -> Self {
        Subspace { combos: Some(Vec::new()), ..Self::new(ambient) }
    }

    pub fn spanned_by<'a, I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a Vec<Q>>,
    {
        let mut s = Self::new(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The accepted (linearly independent) vectors in insertion order.
    pub fn generators(&self) -> &[Vec<Q>] {
        &self.generators
    }

    fn reduce_tracked(&self, v: &[Q]) -> (Vec<Q>, Vec<(usize, Q)>) {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut r = v.to_vec();
        let mut used = Vec::new();
        for (k, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let f = r[p].clone();
            for (x, y) in r.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            used.push((k, f));
        }
        (r, used)
    }

    /// Remainder of `v` modulo the subspace (zero iff `v` is contained).
    pub fn reduce(&self, v: &[Q]) -> Vec<Q> {
        self.reduce_tracked(v).0
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Q]) -> bool {
        let (mut r, used) = self.reduce_tracked(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = Q::one() / &r[p];
        for x in r.iter_mut() {
            *x *= &inv;
        }
        let g = self.generators.len();
        if let Some(combos) = self.combos.as_mut() {
            // r = (v - sum f_k row_k) / pivot
            let mut c = zero_vec(g + 1);
            c[g] = Q::one();
            for (k, f) in &used {
                for (j, x) in combos[*k].iter().enumerate() {
                    if !x.is_zero() {
                        c[j] -= f * x;
                    }
                }
            }
            for x in c.iter_mut() {
                *x *= &inv;
            }
            combos.push(c);
        }
        self.rows.push(r);
        self.pivots.push(p);
        self.generators.push(v.to_vec());
        true
    }

    /// Coefficients of `v` in terms of [`Subspace::generators`], or `None` if
    /// `v` is not in the subspace. Panics without tracking.
    pub fn coords(&self, v: &[Q]) -> Option<Vec<Q>> {
        let combos = self.combos.as_ref().expect("coords requires a tracking subspace");
        let (r, used) = self.reduce_tracked(v);
        if !r.iter().all(Zero::is_zero) {
            return None;
        }
        let mut out = zero_vec(self.generators.len());
        for (k, f) in used {
            for (j, x) in combos[k].iter().enumerate() {
                if !x.is_zero() {
                    out[j] += &f * x;
                }
            }
        }
        Some(out)
    }
}
