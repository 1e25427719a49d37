//! Finite lattices as thin monoidal categories under join.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::thin::{Arrow, Thin, ThinOrder};
use crate::closed::Cocartesian;
use crate::error::{Error, Result};

/// A finite lattice on `0..n` given by its order. Joins, meets and the
/// bounds are derived and checked on construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "LatticeSpec", into = "LatticeSpec")]
pub struct FinLattice {
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

/// The serialized form: `leq[i][j]` iff `i ≤ j`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeSpec {
    pub leq: Vec<Vec<bool>>,
}

impl TryFrom<LatticeSpec> for FinLattice {
    type Error = Error;
    fn try_from(s: LatticeSpec) -> Result<Self> {
        FinLattice::new(s.leq)
    }
}

impl From<FinLattice> for LatticeSpec {
    fn from(l: FinLattice) -> Self {
        LatticeSpec { leq: l.leq }
    }
}

fn bound(n: usize, leq: &[Vec<bool>], a: usize, b: usize, upper: bool) -> Option<usize> {
    let rel = |x: usize, y: usize| if upper { leq[x][y] } else { leq[y][x] };
    let cands: Vec<usize> = (0..n).filter(|&u| rel(a, u) && rel(b, u)).collect();
    cands.iter().copied().find(|&u| cands.iter().all(|&v| rel(u, v)))
}

impl FinLattice {
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = leq.len();
        let bad = |m: String| Err(Error::InvalidInstance(m));
        if n == 0 {
            return bad(String::from("a lattice needs at least one element"));
        }
        if leq.iter().any(|r| r.len() != n) {
            return bad(String::from("order table is not square"));
        }
        for i in 0..n {
            if !leq[i][i] {
                return bad(format!("{i} ≤ {i} fails"));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return bad(format!("{i} and {j} are distinct but equivalent"));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return bad(format!("{i} ≤ {j} ≤ {k} but not {i} ≤ {k}"));
                    }
                }
            }
        }
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                join[a][b] = match bound(n, &leq, a, b, true) {
                    Some(u) => u,
                    None => return bad(format!("{a} and {b} have no join")),
                };
                meet[a][b] = match bound(n, &leq, a, b, false) {
                    Some(u) => u,
                    None => return bad(format!("{a} and {b} have no meet")),
                };
            }
        }
        let bottom = (0..n).find(|&b| (0..n).all(|x| leq[b][x])).expect("joins exist");
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x][t])).expect("meets exist");
        Ok(FinLattice { leq, join, meet, bottom, top })
    }

    /// From the cover or order pairs `(a, b)` meaning `a ≤ b`, closed
    /// reflexively and transitively.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidInstance(format!("pair ({a}, {b}) out of range")));
            }
            leq[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        Self::new(leq)
    }

    /// `⊥ < a, b < ⊤` with `a = 1`, `b = 2`.
    pub fn diamond() -> Self {
        Self::from_pairs(4, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("diamond is a lattice")
    }

    /// `0 < 1 < … < n−1`
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_pairs(n, &pairs).expect("chains are lattices")
    }

    /// `⊥ < a, b, c < ⊤`
    pub fn m3() -> Self {
        Self::from_pairs(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
            .expect("M3 is a lattice")
    }

    /// `⊥ < a < b < ⊤`, `⊥ < c < ⊤`
    pub fn n5() -> Self {
        Self::from_pairs(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).expect("N5 is a lattice")
    }

    pub fn len(&self) -> usize {
        self.leq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leq.is_empty()
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.len()).collect()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }
}

impl ThinOrder for FinLattice {
    type Elem = usize;
    fn arrow(&self, a: &usize, b: &usize) -> bool {
        *a < self.len() && *b < self.len() && self.leq[*a][*b]
    }
    fn tensor(&self, a: &usize, b: &usize) -> usize {
        self.join[*a][*b]
    }
    fn unit(&self) -> usize {
        self.bottom
    }
}

pub type LatticeCat = Thin<FinLattice>;

impl Cocartesian for LatticeCat {
    fn inl(&self, a: &usize, b: &usize) -> Result<Arrow<usize>> {
        Ok(Arrow::new(*a, self.0.join(*a, *b)))
    }
    fn inr(&self, a: &usize, b: &usize) -> Result<Arrow<usize>> {
        Ok(Arrow::new(*b, self.0.join(*a, *b)))
    }
    fn copair(&self, f: &Arrow<usize>, g: &Arrow<usize>) -> Result<Arrow<usize>> {
        if f.tgt != g.tgt {
            return Err(Error::IllTyped(format!("copair of {f:?} and {g:?}")));
        }
        Ok(Arrow::new(self.0.join(f.src, g.src), f.tgt))
    }
}
