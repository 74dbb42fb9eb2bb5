use std::collections::HashMap;

use serde::{Deserialize, Serialize};

/// The points `r` of `Z^n` with `|r_i| <= radius`, in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBox {
    n: usize,
    radius: i64,
    points: Vec<Vec<i64>>,
    #[serde(skip)]
    index: HashMap<Vec<i64>, usize>,
}

impl LatticeBox {
    pub fn new(n: usize, radius: i64) -> Self {
        assert!(radius >= 0, "negative radius");
        let mut points: Vec<Vec<i64>> = vec![vec![]];
        for _ in 0..n {
            points = points
                .into_iter()
                .flat_map(|p| {
                    (-radius..=radius).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        let index = points.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        LatticeBox { n, radius, points, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<i64>] {
        &self.points
    }

    pub fn point(&self, k: usize) -> &[i64] {
        &self.points[k]
    }

    pub fn index_of(&self, r: &[i64]) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &[i64]) -> bool {
        r.len() == self.n && r.iter().all(|x| x.abs() <= self.radius)
    }

    /// Indices of the points at distance at least `depth` from the boundary.
    pub fn interior(&self, depth: i64) -> Vec<usize> {
        let lim = self.radius - depth;
        (0..self.len()).filter(|&k| self.points[k].iter().all(|x| x.abs() <= lim)).collect()
    }

    /// `r + shift` if it lies in the box.
    pub fn shifted(&self, k: usize, shift: &[i64]) -> Option<usize> {
        let r: Vec<i64> = self.points[k].iter().zip(shift).map(|(a, b)| a + b).collect();
        self.index_of(&r)
    }
}
