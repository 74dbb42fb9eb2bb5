use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The matrix unit `e_{row,col}` of gl_rank, indices `1..=rank`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub rank: usize,
    pub row: usize,
    pub col: usize,
}

impl Generator {
    pub fn new(rank: usize, row: usize, col: usize) -> Result<Self> {
        if row == 0 || col == 0 || row > rank || col > rank {
            return Err(Error::IndexOutOfRange(format!("e[{row},{col}] in gl_{rank}")));
        }
        Ok(Generator { rank, row, col })
    }

    /// Unchecked constructor for indices already known to be in range.
    pub(crate) fn e(rank: usize, row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1 && row <= rank && col <= rank);
        Generator { rank, row, col }
    }

    pub fn is_lowering(&self) -> bool {
        self.row > self.col
    }

    pub fn is_cartan(&self) -> bool {
        self.row == self.col
    }

    pub fn is_raising(&self) -> bool {
        self.row < self.col
    }

    fn class(&self) -> u8 {
        match self.row.cmp(&self.col) {
            Ordering::Greater => 0,
            Ordering::Equal => 1,
            Ordering::Less => 2,
        }
    }

    fn key(&self) -> (usize, u8, usize, usize) {
        (self.rank, self.class(), self.row, self.col)
    }

    /// All generators of gl_rank in the global order.
    pub fn all(rank: usize) -> Vec<Generator> {
        let mut v: Vec<Generator> =
            (1..=rank).flat_map(|i| (1..=rank).map(move |j| Generator::e(rank, i, j))).collect();
        v.sort();
        v
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e[{},{}]", self.row, self.col)
    }
}

/// `[e_ab, e_cd] = delta_bc e_ad - delta_da e_cb` as a list of signed generators.
pub fn bracket_generators(x: Generator, y: Generator) -> Vec<(Generator, i64)> {
    let mut out = Vec::with_capacity(2);
    if x.col == y.row {
        out.push((Generator::e(x.rank, x.row, y.col), 1));
    }
    if y.col == x.row {
        let g = Generator::e(x.rank, y.row, x.col);
        match out.iter().position(|(h, _)| *h == g) {
            Some(k) => {
                out.remove(k);
            }
            None => out.push((g, -1)),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_puts_lowering_first() {
        let all = Generator::all(2);
        let names: Vec<String> = all.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["e[2,1]", "e[1,1]", "e[2,2]", "e[1,2]"]);
    }

    #[test]
    fn structure_constants() {
        let e = |i, j| Generator::e(3, i, j);
        assert_eq!(bracket_generators(e(1, 2), e(2, 3)), vec![(e(1, 3), 1)]);
        assert_eq!(bracket_generators(e(1, 2), e(2, 1)), vec![(e(1, 1), 1), (e(2, 2), -1)]);
        assert_eq!(bracket_generators(e(1, 1), e(1, 1)), vec![]);
        assert!(bracket_generators(e(1, 2), e(3, 3)).is_empty());
        assert!(Generator::new(3, 0, 1).is_err());
        assert!(Generator::new(3, 4, 1).is_err());
    }

    #[test]
    fn antisymmetry_and_jacobi_exhaustive() {
        use std::collections::BTreeMap;
        // brackets extended linearly, as maps generator -> coefficient
        fn br(a: &BTreeMap<Generator, i64>, b: &BTreeMap<Generator, i64>) -> BTreeMap<Generator, i64> {
            let mut out = BTreeMap::new();
            for (x, cx) in a {
                for (y, cy) in b {
                    for (z, cz) in bracket_generators(*x, *y) {
                        *out.entry(z).or_insert(0) += cx * cy * cz;
                    }
                }
            }
            out.retain(|_, c| *c != 0);
            out
        }
        for m in 1..=4 {
            let gens = Generator::all(m);
            let single = |g: Generator| BTreeMap::from([(g, 1)]);
            for &x in &gens {
                for &y in &gens {
                    let xy = br(&single(x), &single(y));
                    let mut yx = br(&single(y), &single(x));
                    yx.values_mut().for_each(|c| *c = -*c);
                    assert_eq!(xy, yx);
                    for &z in &gens {
                        let mut total = br(&single(x), &br(&single(y), &single(z)));
                        for (g, c) in br(&single(y), &br(&single(z), &single(x))) {
                            *total.entry(g).or_insert(0) += c;
                        }
                        for (g, c) in br(&single(z), &br(&single(x), &single(y))) {
                            *total.entry(g).or_insert(0) += c;
                        }
                        total.retain(|_, c| *c != 0);
                        assert!(total.is_empty(), "Jacobi fails for {x} {y} {z}");
                    }
                }
            }
        }
    }
}
