//! Thin monoidal categories presented by a preorder with a monotone tensor.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Debug;

use crate::cat::Category;
use crate::error::{Error, Result};
use crate::num::{ExtRat, Rational};
use crate::skew::{CoherenceInverses, SkewMonoidal};

pub trait ThinOrder {
    type Elem: Clone + PartialEq + Debug;
    /// Whether there is an arrow `a → b`.
    fn arrow(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn tensor(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow<E> {
    pub src: E,
    pub tgt: E,
}

impl<E> Arrow<E> {
    pub fn new(src: E, tgt: E) -> Self {
        Arrow { src, tgt }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Thin<P>(pub P);

impl<P: ThinOrder> Thin<P> {
    pub fn arrow(&self, a: &P::Elem, b: &P::Elem) -> Option<Arrow<P::Elem>> {
        self.0.arrow(a, b).then(|| Arrow::new(a.clone(), b.clone()))
    }

    /// Every arrow between the given elements.
    pub fn arrows(&self, elems: &[P::Elem]) -> Vec<Arrow<P::Elem>> {
        elems
            .iter()
            .flat_map(|a| elems.iter().filter_map(move |b| self.arrow(a, b)))
            .collect()
    }
}

impl<P: ThinOrder> Category for Thin<P> {
    type Obj = P::Elem;
    type Mor = Arrow<P::Elem>;

    fn source(&self, f: &Self::Mor) -> P::Elem {
        f.src.clone()
    }
    fn target(&self, f: &Self::Mor) -> P::Elem {
        f.tgt.clone()
    }
    fn identity(&self, a: &P::Elem) -> Self::Mor {
        Arrow::new(a.clone(), a.clone())
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        if f.tgt != g.src {
            return Err(Error::IllTyped(format!("{f:?} ; {g:?}")));
        }
        Ok(Arrow::new(f.src.clone(), g.tgt.clone()))
    }
    fn is_morphism(&self, f: &Self::Mor) -> bool {
        self.0.arrow(&f.src, &f.tgt)
    }
    fn hom(&self, a: &P::Elem, b: &P::Elem) -> Result<Vec<Self::Mor>> {
        Ok(self.arrow(a, b).into_iter().collect())
    }
}

impl<P: ThinOrder> SkewMonoidal for Thin<P> {
    fn tensor_obj(&self, a: &P::Elem, b: &P::Elem) -> P::Elem {
        self.0.tensor(a, b)
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok(Arrow::new(self.0.tensor(&f.src, &g.src), self.0.tensor(&f.tgt, &g.tgt)))
    }
    fn unit(&self) -> P::Elem {
        self.0.unit()
    }
    fn assoc(&self, a: &P::Elem, b: &P::Elem, c: &P::Elem) -> Result<Self::Mor> {
        Ok(Arrow::new(self.tensor3r(a, b, c), self.tensor3l(a, b, c)))
    }
    fn lunit(&self, a: &P::Elem) -> Result<Self::Mor> {
        Ok(Arrow::new(a.clone(), self.0.tensor(&self.0.unit(), a)))
    }
    fn runit(&self, a: &P::Elem) -> Result<Self::Mor> {
        Ok(Arrow::new(self.0.tensor(a, &self.0.unit()), a.clone()))
    }
}

/// Reversed coherence arrows. They are genuine morphisms exactly when the
/// structure is monoidal, which the invertibility check confirms.
#[derive(Debug, Clone, Copy, Default)]
pub struct ThinInverses;

impl<P: ThinOrder> CoherenceInverses<Thin<P>> for ThinInverses {
    fn assoc_inv(&self, s: &Thin<P>, a: &P::Elem, b: &P::Elem, c: &P::Elem) -> Result<Arrow<P::Elem>> {
        Ok(Arrow::new(s.tensor3l(a, b, c), s.tensor3r(a, b, c)))
    }
    fn lunit_inv(&self, s: &Thin<P>, a: &P::Elem) -> Result<Arrow<P::Elem>> {
        Ok(Arrow::new(s.tensor_obj(&s.unit(), a), a.clone()))
    }
    fn runit_inv(&self, s: &Thin<P>, a: &P::Elem) -> Result<Arrow<P::Elem>> {
        Ok(Arrow::new(a.clone(), s.tensor_obj(a, &s.unit())))
    }
}

/// `{F → T}` under conjunction.
#[derive(Debug, Clone, Copy, Default)]
pub struct TruthValues;

impl ThinOrder for TruthValues {
    type Elem = bool;
    fn arrow(&self, a: &bool, b: &bool) -> bool {
        !*a || *b
    }
    fn tensor(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn unit(&self) -> bool {
        true
    }
}

/// `[0,∞]` with an arrow `x → y` iff `x ≥ y`, tensor `min` and unit `∞`.
#[derive(Debug, Clone, Copy, Default)]
pub struct MinGrid;

impl ThinOrder for MinGrid {
    type Elem = ExtRat;
    fn arrow(&self, a: &ExtRat, b: &ExtRat) -> bool {
        a >= b
    }
    fn tensor(&self, a: &ExtRat, b: &ExtRat) -> ExtRat {
        (*a).min(*b)
    }
    fn unit(&self) -> ExtRat {
        ExtRat::INF
    }
}

/// The default grid `{0, 1/2, 1, 2, ∞}`.
pub fn default_grid() -> Vec<ExtRat> {
    vec![ExtRat::zero(), ExtRat::frac(1, 2), ExtRat::int(1), ExtRat::int(2), ExtRat::INF]
}

/// Integer exponents under `+`, with an arrow `x → y` iff `x ≥ y`.
/// With `natural` set only non-negative exponents are objects.
#[derive(Debug, Clone, Copy, Default)]
pub struct Exponents {
    pub natural: bool,
}

impl Exponents {
    pub fn contains(&self, a: i64) -> bool {
        !self.natural || a >= 0
    }

    /// `[y, z]`: `max(z−y, 0)` over ℕ, `z−y` over ℤ.
    pub fn hom(&self, y: i64, z: i64) -> i64 {
        if self.natural {
            (z - y).max(0)
        } else {
            z - y
        }
    }
}

impl ThinOrder for Exponents {
    type Elem = i64;
    fn arrow(&self, a: &i64, b: &i64) -> bool {
        self.contains(*a) && self.contains(*b) && a >= b
    }
    fn tensor(&self, a: &i64, b: &i64) -> i64 {
        a + b
    }
    fn unit(&self) -> i64 {
        0
    }
}

/// The nonzero rationals as a discrete monoidal category under
/// multiplication.
#[derive(Debug, Clone, Copy, Default)]
pub struct Scalars;

impl ThinOrder for Scalars {
    type Elem = Rational;
    fn arrow(&self, a: &Rational, b: &Rational) -> bool {
        a == b && *a != Rational::from_integer(0)
    }
    fn tensor(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn unit(&self) -> Rational {
        Rational::from_integer(1)
    }
}

/// Monotone endomaps `(F0, F1)` of the chain `0 < 1`, ordered pointwise,
/// with tensor `F ⊗ G = F ∘ G` and unit the identity.
#[derive(Debug, Clone, Copy, Default)]
pub struct ChainEndo;

pub type Endo = [usize; 2];

impl ChainEndo {
    pub fn all() -> Vec<Endo> {
        vec![[0, 0], [0, 1], [1, 1]]
    }
}

impl ThinOrder for ChainEndo {
    type Elem = Endo;
    fn arrow(&self, a: &Endo, b: &Endo) -> bool {
        let ok = |f: &Endo| f[0] <= f[1] && f[1] <= 1;
        ok(a) && ok(b) && a[0] <= b[0] && a[1] <= b[1]
    }
    fn tensor(&self, f: &Endo, g: &Endo) -> Endo {
        [f[g[0]], f[g[1]]]
    }
    fn unit(&self) -> Endo {
        [0, 1]
    }
}

pub type TruthCat = Thin<TruthValues>;
pub type GridCat = Thin<MinGrid>;
pub type ExponentCat = Thin<Exponents>;
pub type ScalarCat = Thin<Scalars>;
pub type ChainEndoCat = Thin<ChainEndo>;
