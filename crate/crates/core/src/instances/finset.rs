//! The skeleton of finite sets: objects are cardinalities, morphisms are
//! function tables.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::cat::Category;
use crate::closed::{Cartesian, Cocartesian, DualData, InternalHom, LeftDuals, Side};
use crate::error::{Error, Result};
use crate::report::odometer;
use crate::skew::SkewMonoidal;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinMap {
    pub src: usize,
    pub tgt: usize,
    pub table: Vec<usize>,
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}{:?}", self.src, self.tgt, self.table)
    }
}

impl FinMap {
    pub fn new(src: usize, tgt: usize, table: Vec<usize>) -> Result<Self> {
        let m = FinMap { src, tgt, table };
        if !m.valid() {
            return Err(Error::InvalidInstance(format!("{m:?} is not a function")));
        }
        Ok(m)
    }

    pub fn from_fn(src: usize, tgt: usize, f: impl Fn(usize) -> usize) -> Self {
        FinMap { src, tgt, table: (0..src).map(f).collect() }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i| i)
    }

    pub fn valid(&self) -> bool {
        self.table.len() == self.src && self.table.iter().all(|&v| v < self.tgt)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }
}

/// `base^exp`, saturating.
pub fn pow(base: usize, exp: usize) -> usize {
    (0..exp).fold(1usize, |acc, _| acc.saturating_mul(base))
}

/// A function `0..vals.len() → 0..base` as a big-endian base-`base` index.
pub fn encode(vals: &[usize], base: usize) -> usize {
    vals.iter().fold(0, |acc, &v| acc * base + v)
}

/// Inverse of [`encode`] for functions on `len` points.
pub fn decode(mut idx: usize, len: usize, base: usize) -> Vec<usize> {
    let mut out = alloc::vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = idx % base;
        idx /= base;
    }
    out
}

fn compose_maps(f: &FinMap, g: &FinMap) -> Result<FinMap> {
    if f.tgt != g.src {
        return Err(Error::IllTyped(format!("{f:?} ; {g:?}")));
    }
    Ok(FinMap::from_fn(f.src, g.tgt, |i| g.table[f.table[i]]))
}

fn all_maps(a: usize, b: usize) -> Vec<FinMap> {
    odometer(&alloc::vec![b; a])
        .into_iter()
        .map(|table| FinMap { src: a, tgt: b, table })
        .collect()
}

macro_rules! finset_category {
    ($t:ty) => {
        impl Category for $t {
            type Obj = usize;
            type Mor = FinMap;

            fn source(&self, f: &FinMap) -> usize {
                f.src
            }
            fn target(&self, f: &FinMap) -> usize {
                f.tgt
            }
            fn identity(&self, a: &usize) -> FinMap {
                FinMap::identity(*a)
            }
            fn compose(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
                compose_maps(f, g)
            }
            fn is_morphism(&self, f: &FinMap) -> bool {
                f.valid()
            }
            fn hom(&self, a: &usize, b: &usize) -> Result<Vec<FinMap>> {
                Ok(all_maps(*a, *b))
            }
        }
    };
}

/// Finite sets under the cartesian product, pairs in row-major order.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinSetProduct;

/// Finite sets under disjoint union, the left summand first.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinSetSum;

finset_category!(FinSetProduct);
finset_category!(FinSetSum);

impl SkewMonoidal for FinSetProduct {
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a * b
    }
    fn tensor_mor(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        let (nb, nb2) = (g.src, g.tgt);
        Ok(FinMap::from_fn(f.src * nb, f.tgt * nb2, |i| f.table[i / nb] * nb2 + g.table[i % nb]))
    }
    fn unit(&self) -> usize {
        1
    }
    fn assoc(&self, a: &usize, b: &usize, c: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(a * b * c))
    }
    fn lunit(&self, a: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(*a))
    }
    fn runit(&self, a: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(*a))
    }
}

impl SkewMonoidal for FinSetSum {
    fn tensor_obj(&self, a: &usize, b: &usize) -> usize {
        a + b
    }
    fn tensor_mor(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        Ok(FinMap::from_fn(f.src + g.src, f.tgt + g.tgt, |i| {
            if i < f.src {
                f.table[i]
            } else {
                f.tgt + g.table[i - f.src]
            }
        }))
    }
    fn unit(&self) -> usize {
        0
    }
    fn assoc(&self, a: &usize, b: &usize, c: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(a + b + c))
    }
    fn lunit(&self, a: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(*a))
    }
    fn runit(&self, a: &usize) -> Result<FinMap> {
        Ok(FinMap::identity(*a))
    }
}

impl Cartesian for FinSetProduct {
    fn product(&self, a: &usize, b: &usize) -> usize {
        a * b
    }
    fn proj1(&self, a: &usize, b: &usize) -> Result<FinMap> {
        Ok(FinMap::from_fn(a * b, *a, |i| i / b))
    }
    fn proj2(&self, a: &usize, b: &usize) -> Result<FinMap> {
        Ok(FinMap::from_fn(a * b, *b, |i| i % b))
    }
    fn pair(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        if f.src != g.src {
            return Err(Error::IllTyped(format!("pair of {f:?} and {g:?}")));
        }
        Ok(FinMap::from_fn(f.src, f.tgt * g.tgt, |i| f.table[i] * g.tgt + g.table[i]))
    }
}

impl Cocartesian for FinSetSum {
    fn inl(&self, a: &usize, b: &usize) -> Result<FinMap> {
        Ok(FinMap::from_fn(*a, a + b, |i| i))
    }
    fn inr(&self, a: &usize, b: &usize) -> Result<FinMap> {
        Ok(FinMap::from_fn(*b, a + b, |i| a + i))
    }
    fn copair(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        if f.tgt != g.tgt {
            return Err(Error::IllTyped(format!("copair of {f:?} and {g:?}")));
        }
        Ok(FinMap::from_fn(f.src + g.src, f.tgt, |i| {
            if i < f.src {
                f.table[i]
            } else {
                g.table[i - f.src]
            }
        }))
    }
}

/// Exponentials `[B, C] = C^B` of [`FinSetProduct`], points encoded by
/// [`encode`].
#[derive(Debug, Clone, Copy)]
pub struct FinSetHom {
    pub side: Side,
}

impl InternalHom for FinSetHom {
    type Cat = FinSetProduct;

    fn category(&self) -> &FinSetProduct {
        &FinSetProduct
    }
    fn side(&self) -> Side {
        self.side
    }
    fn hom_obj(&self, b: &usize, c: &usize) -> Result<usize> {
        Ok(pow(*c, *b))
    }
    fn curry(&self, a: &usize, b: &usize, c: &usize, f: &FinMap) -> Result<FinMap> {
        let (a, b, c) = (*a, *b, *c);
        Ok(match self.side {
            Side::Right => FinMap::from_fn(a, pow(c, b), |i| {
                encode(&(0..b).map(|j| f.table[i * b + j]).collect::<Vec<_>>(), c)
            }),
            Side::Left => FinMap::from_fn(b, pow(c, a), |j| {
                encode(&(0..a).map(|i| f.table[i * b + j]).collect::<Vec<_>>(), c)
            }),
        })
    }
    fn uncurry(&self, a: &usize, b: &usize, c: &usize, g: &FinMap) -> Result<FinMap> {
        let (a, b, c) = (*a, *b, *c);
        Ok(match self.side {
            Side::Right => FinMap::from_fn(a * b, c, |k| decode(g.table[k / b], b, c)[k % b]),
            Side::Left => FinMap::from_fn(a * b, c, |k| decode(g.table[k % b], a, c)[k / b]),
        })
    }
}

/// The one-point set is its own dual; no other cardinality has one.
#[derive(Debug, Clone, Copy, Default)]
pub struct FinSetDuals;

impl LeftDuals for FinSetDuals {
    type Cat = FinSetProduct;
    fn category(&self) -> &FinSetProduct {
        &FinSetProduct
    }
    fn dual(&self, a: &usize) -> Result<DualData<usize, FinMap>> {
        if *a != 1 {
            return Err(Error::NoDual(format!("{a} points")));
        }
        Ok(DualData { dual: 1, eval: FinMap::identity(1), coeval: FinMap::identity(1) })
    }
}
