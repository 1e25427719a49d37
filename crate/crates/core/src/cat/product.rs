use alloc::vec::Vec;

use super::{Category, Functor};
use crate::error::Result;

/// The product of two categories; objects and morphisms are pairs.
#[derive(Debug, Clone)]
pub struct Product<A, B> {
    pub left: A,
    pub right: B,
}

impl<A: Category, B: Category> Category for Product<A, B> {
    type Obj = (A::Obj, B::Obj);
    type Mor = (A::Mor, B::Mor);

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        (self.left.source(&f.0), self.right.source(&f.1))
    }

    fn target(&self, f: &Self::Mor) -> Self::Obj {
        (self.left.target(&f.0), self.right.target(&f.1))
    }

    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        (self.left.identity(&a.0), self.right.identity(&a.1))
    }

    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok((self.left.compose(&f.0, &g.0)?, self.right.compose(&f.1, &g.1)?))
    }

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.left.mor_eq(&f.0, &g.0) && self.right.mor_eq(&f.1, &g.1)
    }

    fn is_morphism(&self, f: &Self::Mor) -> bool {
        self.left.is_morphism(&f.0) && self.right.is_morphism(&f.1)
    }

    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>> {
        let l = self.left.hom(&a.0, &b.0)?;
        let r = self.right.hom(&a.1, &b.1)?;
        Ok(l.iter()
            .flat_map(|f| r.iter().map(move |g| (f.clone(), g.clone())))
            .collect())
    }
}

pub struct ProjectLeft<'a, A, B>(pub &'a Product<A, B>);
pub struct ProjectRight<'a, A, B>(pub &'a Product<A, B>);

impl<'a, A: Category, B: Category> Functor for ProjectLeft<'a, A, B> {
    type Source = Product<A, B>;
    type Target = A;

    fn source_category(&self) -> &Product<A, B> {
        self.0
    }

    fn target_category(&self) -> &A {
        &self.0.left
    }

    fn on_obj(&self, a: &(A::Obj, B::Obj)) -> A::Obj {
        a.0.clone()
    }

    fn on_mor(&self, f: &(A::Mor, B::Mor)) -> A::Mor {
        f.0.clone()
    }
}

impl<'a, A: Category, B: Category> Functor for ProjectRight<'a, A, B> {
    type Source = Product<A, B>;
    type Target = B;

    fn source_category(&self) -> &Product<A, B> {
        self.0
    }

    fn target_category(&self) -> &B {
        &self.0.right
    }

    fn on_obj(&self, a: &(A::Obj, B::Obj)) -> B::Obj {
        a.1.clone()
    }

    fn on_mor(&self, f: &(A::Mor, B::Mor)) -> B::Mor {
        f.1.clone()
    }
}

/// A morphism of the opposite category: `Op(f) : B -> A` for `f : A -> B`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Op<M>(pub M);

/// The opposite of a category. Monoidal structure on it is provided in
/// [`crate::skew`], since it needs the inverses of the coherence data.
#[derive(Debug, Clone, Copy)]
pub struct Opposite<C> {
    pub inner: C,
}

impl<C: Category> Category for Opposite<C> {
    type Obj = C::Obj;
    type Mor = Op<C::Mor>;

    fn source(&self, f: &Op<C::Mor>) -> C::Obj {
        self.inner.target(&f.0)
    }

    fn target(&self, f: &Op<C::Mor>) -> C::Obj {
        self.inner.source(&f.0)
    }

    fn identity(&self, a: &C::Obj) -> Op<C::Mor> {
        Op(self.inner.identity(a))
    }

    fn compose(&self, f: &Op<C::Mor>, g: &Op<C::Mor>) -> Result<Op<C::Mor>> {
        self.inner.compose(&g.0, &f.0).map(Op)
    }

    fn mor_eq(&self, f: &Op<C::Mor>, g: &Op<C::Mor>) -> bool {
        self.inner.mor_eq(&f.0, &g.0)
    }

    fn is_morphism(&self, f: &Op<C::Mor>) -> bool {
        self.inner.is_morphism(&f.0)
    }

    fn hom(&self, a: &C::Obj, b: &C::Obj) -> Result<Vec<Op<C::Mor>>> {
        Ok(self.inner.hom(b, a)?.into_iter().map(Op).collect())
    }
}
