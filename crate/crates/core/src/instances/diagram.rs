//! Functors from the chain `0 < 1` to finite sets, i.e. single functions
//! `C(0) → C(1)`, under the pointwise cartesian product.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use super::finset::FinMap;
use crate::cat::Category;
use crate::error::{Error, Result};
use crate::report::odometer;
use crate::skew::SkewMonoidal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    pub sets: [usize; 2],
    /// `C(0 ≤ 1)`
    pub map: Vec<usize>,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}{:?}", self.sets[0], self.sets[1], self.map)
    }
}

impl Diagram {
    pub fn new(n0: usize, n1: usize, map: Vec<usize>) -> Result<Self> {
        if map.len() != n0 || map.iter().any(|&v| v >= n1) {
            return Err(Error::InvalidInstance(format!("{map:?} is not a function {n0} -> {n1}")));
        }
        Ok(Diagram { sets: [n0, n1], map })
    }

    /// `C(j ≤ k)` for `j ≤ k` in the chain.
    pub fn along(&self, j: usize, k: usize) -> FinMap {
        if j == k {
            FinMap::identity(self.sets[j])
        } else {
            FinMap { src: self.sets[0], tgt: self.sets[1], table: self.map.clone() }
        }
    }

    /// Every diagram with both sets of size at most `n`.
    pub fn all(n: usize) -> Vec<Diagram> {
        let mut out = Vec::new();
        for n0 in 0..=n {
            for n1 in 0..=n {
                for map in odometer(&alloc::vec![n1; n0]) {
                    out.push(Diagram { sets: [n0, n1], map });
                }
            }
        }
        out
    }
}

/// A natural transformation, one function per chain element.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DiagramMap {
    pub src: Diagram,
    pub tgt: Diagram,
    pub at: [Vec<usize>; 2],
}

impl fmt::Debug for DiagramMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{:?} : {:?} -> {:?}", self.at[0], self.at[1], self.src, self.tgt)
    }
}

impl DiagramMap {
    fn natural(&self) -> bool {
        let ok = |j: usize| {
            self.at[j].len() == self.src.sets[j] && self.at[j].iter().all(|&v| v < self.tgt.sets[j])
        };
        ok(0) && ok(1)
            && (0..self.src.sets[0]).all(|x| self.at[1][self.src.map[x]] == self.tgt.map[self.at[0][x]])
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ChainDiagrams;

impl Category for ChainDiagrams {
    type Obj = Diagram;
    type Mor = DiagramMap;

    fn source(&self, f: &DiagramMap) -> Diagram {
        f.src.clone()
    }
    fn target(&self, f: &DiagramMap) -> Diagram {
        f.tgt.clone()
    }
    fn identity(&self, a: &Diagram) -> DiagramMap {
        DiagramMap {
            src: a.clone(),
            tgt: a.clone(),
            at: [(0..a.sets[0]).collect(), (0..a.sets[1]).collect()],
        }
    }
    fn compose(&self, f: &DiagramMap, g: &DiagramMap) -> Result<DiagramMap> {
        if f.tgt != g.src {
            return Err(Error::IllTyped(format!("{f:?} ; {g:?}")));
        }
        let at = |j: usize| f.at[j].iter().map(|&x| g.at[j][x]).collect();
        Ok(DiagramMap { src: f.src.clone(), tgt: g.tgt.clone(), at: [at(0), at(1)] })
    }
    fn is_morphism(&self, f: &DiagramMap) -> bool {
        f.natural()
    }
    fn hom(&self, a: &Diagram, b: &Diagram) -> Result<Vec<DiagramMap>> {
        let mut out = Vec::new();
        for f0 in odometer(&alloc::vec![b.sets[0]; a.sets[0]]) {
            for f1 in odometer(&alloc::vec![b.sets[1]; a.sets[1]]) {
                let m = DiagramMap { src: a.clone(), tgt: b.clone(), at: [f0.clone(), f1] };
                if m.natural() {
                    out.push(m);
                }
            }
        }
        Ok(out)
    }
}

fn product(a: &Diagram, b: &Diagram) -> Diagram {
    let n = b.sets[1];
    Diagram {
        sets: [a.sets[0] * b.sets[0], a.sets[1] * b.sets[1]],
        map: (0..a.sets[0] * b.sets[0])
            .map(|i| a.map[i / b.sets[0]] * n + b.map[i % b.sets[0]])
            .collect(),
    }
}

impl SkewMonoidal for ChainDiagrams {
    fn tensor_obj(&self, a: &Diagram, b: &Diagram) -> Diagram {
        product(a, b)
    }
    fn tensor_mor(&self, f: &DiagramMap, g: &DiagramMap) -> Result<DiagramMap> {
        let at = |j: usize| {
            let (nb, nb2) = (g.src.sets[j], g.tgt.sets[j]);
            (0..f.src.sets[j] * nb).map(|i| f.at[j][i / nb] * nb2 + g.at[j][i % nb]).collect()
        };
        Ok(DiagramMap { src: product(&f.src, &g.src), tgt: product(&f.tgt, &g.tgt), at: [at(0), at(1)] })
    }
    fn unit(&self) -> Diagram {
        Diagram { sets: [1, 1], map: alloc::vec![0] }
    }
    fn assoc(&self, a: &Diagram, b: &Diagram, c: &Diagram) -> Result<DiagramMap> {
        Ok(self.identity(&self.tensor3l(a, b, c)))
    }
    fn lunit(&self, a: &Diagram) -> Result<DiagramMap> {
        Ok(self.identity(a))
    }
    fn runit(&self, a: &Diagram) -> Result<DiagramMap> {
        Ok(self.identity(a))
    }
}
