//! Single-component corruptions of working instances, used to confirm
//! that each checker can fail.

use crate::action::{CMor, CObj, StrongAction, WeakAction, XMor, XObj};
use crate::cat::Category;
use crate::closed::{InternalHom, Side};
use crate::error::Result;

use super::finset::FinMap;
use super::gms::GmsMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    Phi2,
    Phi0,
    Psi2,
    Psi0,
    Phi2Inv,
    Psi2Inv,
}

/// An action with one structure map post-processed by `corrupt`.
#[derive(Debug, Clone)]
pub struct Mutant<A, F> {
    pub inner: A,
    pub component: Component,
    pub corrupt: F,
}

impl<A: WeakAction, F: Fn(&CMor<A>) -> CMor<A>> Mutant<A, F> {
    fn hit(&self, which: Component, m: Result<CMor<A>>) -> Result<CMor<A>> {
        if self.component == which {
            m.map(|m| (self.corrupt)(&m))
        } else {
            m
        }
    }
}

impl<A: WeakAction, F: Fn(&CMor<A>) -> CMor<A>> WeakAction for Mutant<A, F> {
    type X = A::X;
    type C = A::C;

    fn acting(&self) -> &A::X {
        self.inner.acting()
    }
    fn acted(&self) -> &A::C {
        self.inner.acted()
    }
    fn act_obj(&self, c: &CObj<A>, x: &XObj<A>) -> CObj<A> {
        self.inner.act_obj(c, x)
    }
    fn act_mor(&self, g: &CMor<A>, x: &XObj<A>) -> Result<CMor<A>> {
        self.inner.act_mor(g, x)
    }
    fn act_x_mor(&self, c: &CObj<A>, f: &XMor<A>) -> Result<CMor<A>> {
        self.inner.act_x_mor(c, f)
    }
    fn phi2(&self, x: &XObj<A>, b: &CObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        self.hit(Component::Phi2, self.inner.phi2(x, b, c))
    }
    fn phi0(&self, x: &XObj<A>) -> Result<CMor<A>> {
        self.hit(Component::Phi0, self.inner.phi0(x))
    }
    fn psi2(&self, x: &XObj<A>, y: &XObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        self.hit(Component::Psi2, self.inner.psi2(x, y, c))
    }
    fn psi0(&self, c: &CObj<A>) -> Result<CMor<A>> {
        self.hit(Component::Psi0, self.inner.psi0(c))
    }
}

impl<A: StrongAction, F: Fn(&CMor<A>) -> CMor<A>> StrongAction for Mutant<A, F> {
    fn phi2_inv(&self, x: &XObj<A>, b: &CObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        self.hit(Component::Phi2Inv, self.inner.phi2_inv(x, b, c))
    }
    fn phi0_inv(&self, x: &XObj<A>) -> Result<CMor<A>> {
        self.inner.phi0_inv(x)
    }
    fn psi2_inv(&self, x: &XObj<A>, y: &XObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        self.hit(Component::Psi2Inv, self.inner.psi2_inv(x, y, c))
    }
    fn psi0_inv(&self, c: &CObj<A>) -> Result<CMor<A>> {
        self.inner.psi0_inv(c)
    }
}

type HObj<H> = <<H as InternalHom>::Cat as Category>::Obj;
type HMor<H> = <<H as InternalHom>::Cat as Category>::Mor;

/// An internal hom whose curried maps are post-processed by `corrupt`.
#[derive(Debug, Clone)]
pub struct MutantHom<H, F> {
    pub inner: H,
    pub corrupt: F,
}

impl<H: InternalHom, F: Fn(&HMor<H>) -> HMor<H>> InternalHom for MutantHom<H, F> {
    type Cat = H::Cat;

    fn category(&self) -> &H::Cat {
        self.inner.category()
    }
    fn side(&self) -> Side {
        self.inner.side()
    }
    fn hom_obj(&self, b: &HObj<H>, c: &HObj<H>) -> Result<HObj<H>> {
        self.inner.hom_obj(b, c)
    }
    fn curry(&self, a: &HObj<H>, b: &HObj<H>, c: &HObj<H>, f: &HMor<H>) -> Result<HMor<H>> {
        self.inner.curry(a, b, c, f).map(|g| (self.corrupt)(&g))
    }
    fn uncurry(&self, a: &HObj<H>, b: &HObj<H>, c: &HObj<H>, g: &HMor<H>) -> Result<HMor<H>> {
        self.inner.uncurry(a, b, c, g)
    }
}

/// Reads the point function backwards: `i ↦ f(n−1−i)`.
pub fn reverse_points(m: &GmsMap) -> GmsMap {
    let mut func = m.func.clone();
    func.reverse();
    GmsMap { src: m.src.clone(), tgt: m.tgt.clone(), func }
}

/// Shifts every value by one, cyclically in the target.
pub fn rotate_values(f: &FinMap) -> FinMap {
    FinMap::from_fn(f.src, f.tgt, |i| (f.table[i] + 1) % f.tgt.max(1))
}
