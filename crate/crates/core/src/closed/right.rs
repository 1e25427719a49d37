//! Right internal homs of `X ⋉ C` from a right adjoint `(-)_Y` of each
//! `(-)^Y`, and the construction of such adjoints from left duals.

use alloc::format;

use super::{InternalHom, LeftDuals, Side};
use crate::action::{CObj, CMor, StrongAction, WeakAction, XObj, XMor};
use crate::cat::{chain, compare, expect_shape, Category, Pool};
use crate::error::Result;
use crate::report::{Budget, CheckReport, FailureKind, LawReport};
use crate::semidirect::Semidirect;
use crate::skew::{CoherenceInverses, SkewMonoidal};

/// A right adjoint `(-)_X` of `(-)^X` for every `X`, with unit
/// `C → (C^X)_X` and counit `(C_X)^X → C`.
pub trait RightAdjoint {
    type Action: WeakAction;
    fn action(&self) -> &Self::Action;
    fn radj_obj(&self, c: &CObj<Self::Action>, x: &XObj<Self::Action>) -> Result<CObj<Self::Action>>;
    fn radj_mor(&self, g: &CMor<Self::Action>, x: &XObj<Self::Action>) -> Result<CMor<Self::Action>>;
    fn unit(&self, c: &CObj<Self::Action>, x: &XObj<Self::Action>) -> Result<CMor<Self::Action>>;
    fn counit(&self, c: &CObj<Self::Action>, x: &XObj<Self::Action>) -> Result<CMor<Self::Action>>;

    /// `f : B^X → C` to `η_B ; f_X : B → C_X`.
    fn transpose(
        &self,
        b: &CObj<Self::Action>,
        x: &XObj<Self::Action>,
        f: &CMor<Self::Action>,
    ) -> Result<CMor<Self::Action>> {
        let cs = self.action().acted();
        cs.compose(&self.unit(b, x)?, &self.radj_mor(f, x)?)
    }

    /// `g : B → C_X` to `g^X ; ε_C : B^X → C`.
    fn untranspose(
        &self,
        c: &CObj<Self::Action>,
        x: &XObj<Self::Action>,
        g: &CMor<Self::Action>,
    ) -> Result<CMor<Self::Action>> {
        let a = self.action();
        a.acted().compose(&a.act_mor(g, x)?, &self.counit(c, x)?)
    }
}

impl<T: RightAdjoint> RightAdjoint for &T {
    type Action = T::Action;
    fn action(&self) -> &T::Action {
        (**self).action()
    }
    fn radj_obj(&self, c: &CObj<T::Action>, x: &XObj<T::Action>) -> Result<CObj<T::Action>> {
        (**self).radj_obj(c, x)
    }
    fn radj_mor(&self, g: &CMor<T::Action>, x: &XObj<T::Action>) -> Result<CMor<T::Action>> {
        (**self).radj_mor(g, x)
    }
    fn unit(&self, c: &CObj<T::Action>, x: &XObj<T::Action>) -> Result<CMor<T::Action>> {
        (**self).unit(c, x)
    }
    fn counit(&self, c: &CObj<T::Action>, x: &XObj<T::Action>) -> Result<CMor<T::Action>> {
        (**self).counit(c, x)
    }
}

/// Functoriality of `(-)_X`, naturality of unit and counit, and the two
/// triangle identities `η^X ; ε_{C^X} = id` and `η_{C_X} ; (ε_C)_X = id`.
pub fn check_right_adjoint<R: RightAdjoint>(
    r: &R,
    x_objects: &[XObj<R::Action>],
    c: &Pool<CObj<R::Action>, CMor<R::Action>>,
    budget: &Budget,
) -> CheckReport {
    let a = r.action();
    let cs = a.acted();
    let mut report = CheckReport::new("right adjoint of the action", budget);
    let mut shape = LawReport::new("radj-shape", "η : C → (C^X)_X, ε : (C_X)^X → C");
    let mut func = LawReport::new("radj-functor", "(id)_X = id, (f;g)_X = f_X;g_X");
    let mut un = LawReport::new("unit-natural", "η_B ; (f^X)_X = f ; η_C");
    let mut cn = LawReport::new("counit-natural", "(f_X)^X ; ε_C = ε_B ; f");
    let mut t1 = LawReport::new("adj-triangle-1", "(η_C)^X ; ε_{C^X} = id_{C^X}");
    let mut t2 = LawReport::new("adj-triangle-2", "η_{C_X} ; (ε_C)_X = id_{C_X}");

    for x in x_objects {
        for o in &c.objects {
            let inst = || inst![x, o];
            let ox = a.act_obj(o, x);
            let (o_x, ox_x) = match (r.radj_obj(o, x), r.radj_obj(&ox, x)) {
                (Ok(p), Ok(q)) => (p, q),
                (Err(e), _) | (_, Err(e)) => {
                    shape.tick();
                    shape.fail_with(FailureKind::MissingWitness, inst(), format!("{e}"));
                    continue;
                }
            };
            shape.tick();
            expect_shape(cs, &mut shape, inst, "unit", &r.unit(o, x), o, &ox_x);
            shape.tick();
            expect_shape(cs, &mut shape, inst, "counit", &r.counit(o, x), &a.act_obj(&o_x, x), o);
            compare(cs, &mut func, inst, r.radj_mor(&cs.identity(o), x), Ok(cs.identity(&o_x)));
            let lhs = (|| cs.compose(&a.act_mor(&r.unit(o, x)?, x)?, &r.counit(&ox, x)?))();
            compare(cs, &mut t1, inst, lhs, Ok(cs.identity(&ox)));
            let lhs = (|| cs.compose(&r.unit(&o_x, x)?, &r.radj_mor(&r.counit(o, x)?, x)?))();
            compare(cs, &mut t2, inst, lhs, Ok(cs.identity(&o_x)));
        }
        for f in &c.morphisms {
            let inst = || inst![x, f];
            let (b, t) = (cs.source(f), cs.target(f));
            let lhs = (|| cs.compose(&r.unit(&b, x)?, &r.radj_mor(&a.act_mor(f, x)?, x)?))();
            let rhs = (|| cs.compose(f, &r.unit(&t, x)?))();
            compare(cs, &mut un, inst, lhs, rhs);
            let lhs = (|| cs.compose(&a.act_mor(&r.radj_mor(f, x)?, x)?, &r.counit(&t, x)?))();
            let rhs = (|| cs.compose(&r.counit(&b, x)?, f))();
            compare(cs, &mut cn, inst, lhs, rhs);
            for g in &c.morphisms {
                if cs.target(f) != cs.source(g) {
                    continue;
                }
                let inst = || inst![x, f, g];
                let lhs = (|| r.radj_mor(&cs.compose(f, g)?, x))();
                let rhs = (|| cs.compose(&r.radj_mor(f, x)?, &r.radj_mor(g, x)?))();
                compare(cs, &mut func, inst, lhs, rhs);
            }
        }
    }
    for l in [shape, func, un, cn, t1, t2] {
        report.push(l);
    }
    report
}

/// `[⟨Y,B⟩, ⟨Z,C⟩] = ⟨[Y,Z], ([B,C])_Y⟩` from right homs in both factors and
/// a right adjoint of the action.
pub struct SemidirectRightHom<'a, A, R, HX, HC> {
    pub s: &'a Semidirect<A>,
    pub radj: R,
    pub x: HX,
    pub c: HC,
}

pub fn right_closed_hom<A, R, HX, HC>(
    h: &SemidirectRightHom<'_, A, R, HX, HC>,
    b: &(XObj<A>, CObj<A>),
    c: &(XObj<A>, CObj<A>),
) -> Result<(XObj<A>, CObj<A>)>
where
    A: WeakAction,
    R: RightAdjoint<Action = A>,
    HX: InternalHom<Cat = A::X>,
    HC: InternalHom<Cat = A::C>,
{
    h.hom_obj(b, c)
}

/// The right hom of [`right_closed_hom`] with `(-)_Y = (-)^{∨Y}` and
/// `[Y,Z] = Z⊗∨Y`, which gives `⟨Z⊗∨Y, [B,C]^{∨Y}⟩`.
pub fn right_closed_hom_via_dual<A, D, W, HC>(
    s: &Semidirect<A>,
    duals: D,
    x_inverses: W,
    hc: HC,
    b: &(XObj<A>, CObj<A>),
    c: &(XObj<A>, CObj<A>),
) -> Result<(XObj<A>, CObj<A>)>
where
    A: StrongAction,
    D: LeftDuals<Cat = A::X> + Clone,
    W: CoherenceInverses<A::X>,
    HC: InternalHom<Cat = A::C>,
{
    let h = SemidirectRightHom {
        s,
        radj: DualRightAdjoint { action: &s.action, duals: duals.clone() },
        x: DualHom { duals, inverses: x_inverses },
        c: hc,
    };
    h.hom_obj(b, c)
}

impl<A, R, HX, HC> InternalHom for SemidirectRightHom<'_, A, R, HX, HC>
where
    A: WeakAction,
    R: RightAdjoint<Action = A>,
    HX: InternalHom<Cat = A::X>,
    HC: InternalHom<Cat = A::C>,
{
    type Cat = Semidirect<A>;

    fn category(&self) -> &Semidirect<A> {
        self.s
    }

    fn side(&self) -> Side {
        Side::Right
    }

    fn hom_obj(&self, b: &(XObj<A>, CObj<A>), c: &(XObj<A>, CObj<A>)) -> Result<(XObj<A>, CObj<A>)> {
        Ok((self.x.hom_obj(&b.0, &c.0)?, self.radj.radj_obj(&self.c.hom_obj(&b.1, &c.1)?, &b.0)?))
    }

    /// `(f, g) ↦ (curry f, η_A ; (curry g)_Y)`
    fn curry(
        &self,
        a: &(XObj<A>, CObj<A>),
        b: &(XObj<A>, CObj<A>),
        c: &(XObj<A>, CObj<A>),
        f: &(XMor<A>, CMor<A>),
    ) -> Result<(XMor<A>, CMor<A>)> {
        let ay = self.s.action.act_obj(&a.1, &b.0);
        let g = self.c.curry(&ay, &b.1, &c.1, &f.1)?;
        Ok((self.x.curry(&a.0, &b.0, &c.0, &f.0)?, self.radj.transpose(&a.1, &b.0, &g)?))
    }

    /// `(u, v) ↦ (uncurry u, uncurry(v^Y ; ε_{[B,C]}))`
    fn uncurry(
        &self,
        a: &(XObj<A>, CObj<A>),
        b: &(XObj<A>, CObj<A>),
        c: &(XObj<A>, CObj<A>),
        g: &(XMor<A>, CMor<A>),
    ) -> Result<(XMor<A>, CMor<A>)> {
        let ay = self.s.action.act_obj(&a.1, &b.0);
        let bc = self.c.hom_obj(&b.1, &c.1)?;
        let v = self.radj.untranspose(&bc, &b.0, &g.1)?;
        Ok((self.x.uncurry(&a.0, &b.0, &c.0, &g.0)?, self.c.uncurry(&ay, &b.1, &c.1, &v)?))
    }
}

/// `(-)_X = (-)^{∨X}` for a strong action and left duals in `X`, with
///
/// ```text
/// η : ψ⁻¹ ; C^{η_X} ; ψ^{X,∨X}_C        C → (C^X)^{∨X}
/// ε : (ψ^{∨X,X}_C)⁻¹ ; C^{ε_X} ; ψ      (C^{∨X})^X → C
/// ```
#[derive(Clone)]
pub struct DualRightAdjoint<'a, A, D> {
    pub action: &'a A,
    pub duals: D,
}

impl<A, D> RightAdjoint for DualRightAdjoint<'_, A, D>
where
    A: StrongAction,
    D: LeftDuals<Cat = A::X>,
{
    type Action = A;

    fn action(&self) -> &A {
        self.action
    }

    fn radj_obj(&self, c: &CObj<A>, x: &XObj<A>) -> Result<CObj<A>> {
        Ok(self.action.act_obj(c, &self.duals.dual(x)?.dual))
    }

    fn radj_mor(&self, g: &CMor<A>, x: &XObj<A>) -> Result<CMor<A>> {
        self.action.act_mor(g, &self.duals.dual(x)?.dual)
    }

    fn unit(&self, c: &CObj<A>, x: &XObj<A>) -> Result<CMor<A>> {
        let d = self.duals.dual(x)?;
        let a = self.action;
        chain(
            a.acted(),
            &[a.psi0_inv(c)?, a.act_x_mor(c, &d.coeval)?, a.psi2(x, &d.dual, c)?],
        )
    }

    fn counit(&self, c: &CObj<A>, x: &XObj<A>) -> Result<CMor<A>> {
        let d = self.duals.dual(x)?;
        let a = self.action;
        chain(
            a.acted(),
            &[a.psi2_inv(&d.dual, x, c)?, a.act_x_mor(c, &d.eval)?, a.psi0(c)?],
        )
    }
}

/// The right hom `[Y,Z] = Z⊗∨Y` of a category with left duals.
///
/// ```text
/// curry f   = ρ⁻¹ ; (X⊗η_Y) ; α ; (f⊗∨Y)
/// uncurry g = (g⊗Y) ; α⁻¹ ; (Z⊗ε_Y) ; ρ
/// ```
#[derive(Clone)]
pub struct DualHom<D, W> {
    pub duals: D,
    pub inverses: W,
}

impl<D, W> InternalHom for DualHom<D, W>
where
    D: LeftDuals,
    W: CoherenceInverses<D::Cat>,
{
    type Cat = D::Cat;

    fn category(&self) -> &D::Cat {
        self.duals.category()
    }

    fn side(&self) -> Side {
        Side::Right
    }

    fn hom_obj(
        &self,
        y: &<D::Cat as Category>::Obj,
        z: &<D::Cat as Category>::Obj,
    ) -> Result<<D::Cat as Category>::Obj> {
        Ok(self.category().tensor_obj(z, &self.duals.dual(y)?.dual))
    }

    fn curry(
        &self,
        x: &<D::Cat as Category>::Obj,
        y: &<D::Cat as Category>::Obj,
        _z: &<D::Cat as Category>::Obj,
        f: &<D::Cat as Category>::Mor,
    ) -> Result<<D::Cat as Category>::Mor> {
        let s = self.category();
        let d = self.duals.dual(y)?;
        chain(
            s,
            &[
                self.inverses.runit_inv(s, x)?,
                s.whisker_left(x, &d.coeval)?,
                s.assoc(x, y, &d.dual)?,
                s.whisker_right(f, &d.dual)?,
            ],
        )
    }

    fn uncurry(
        &self,
        _x: &<D::Cat as Category>::Obj,
        y: &<D::Cat as Category>::Obj,
        z: &<D::Cat as Category>::Obj,
        g: &<D::Cat as Category>::Mor,
    ) -> Result<<D::Cat as Category>::Mor> {
        let s = self.category();
        let d = self.duals.dual(y)?;
        chain(
            s,
            &[
                s.whisker_right(g, y)?,
                self.inverses.assoc_inv(s, z, &d.dual, y)?,
                s.whisker_left(z, &d.eval)?,
                s.runit(z)?,
            ],
        )
    }
}
