//! Left internal homs of `X ⋉ C` when `C` is cocartesian, via a functor
//! `⊳ : C^op × C → X` with `C(B^X, C) ≅ X(X, B⊳C)`.

use alloc::format;

use super::{InternalHom, Side};
use crate::action::{CObj, CMor, PoolOf, WeakAction, XObj, XMor};
use crate::cat::{compare, enumerate_hom, expect_shape, Category};
use crate::error::{Error, Result};
use crate::report::{render_one, Budget, CheckReport, FailureKind, LawReport};
use crate::semidirect::Semidirect;
use crate::skew::SkewMonoidal;

/// Binary products with projections and pairing.
pub trait Cartesian: Category {
    fn product(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn proj1(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;
    fn proj2(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;
    /// `⟨f, g⟩ : X → A×B` for `f : X → A`, `g : X → B`.
    fn pair(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
}

/// A monoidal structure whose tensor is the coproduct and whose unit is
/// initial.
pub trait Cocartesian: SkewMonoidal {
    fn inl(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;
    fn inr(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Mor>;
    /// `[f, g] : A⊗B → C` for `f : A → C`, `g : B → C`.
    fn copair(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
}

/// `B ⊳ C` with the transposition `C(B^X, C) ≅ X(X, B⊳C)`.
pub trait TriangleHom {
    type Action: WeakAction;
    fn action(&self) -> &Self::Action;
    fn tri_obj(&self, b: &CObj<Self::Action>, c: &CObj<Self::Action>) -> XObj<Self::Action>;
    /// `f : B^X → C` to `X → B⊳C`.
    fn transpose(
        &self,
        b: &CObj<Self::Action>,
        x: &XObj<Self::Action>,
        c: &CObj<Self::Action>,
        f: &CMor<Self::Action>,
    ) -> Result<XMor<Self::Action>>;
    fn untranspose(
        &self,
        b: &CObj<Self::Action>,
        x: &XObj<Self::Action>,
        c: &CObj<Self::Action>,
        g: &XMor<Self::Action>,
    ) -> Result<CMor<Self::Action>>;
}

impl<T: TriangleHom> TriangleHom for &T {
    type Action = T::Action;
    fn action(&self) -> &T::Action {
        (**self).action()
    }
    fn tri_obj(&self, b: &CObj<T::Action>, c: &CObj<T::Action>) -> XObj<T::Action> {
        (**self).tri_obj(b, c)
    }
    fn transpose(
        &self,
        b: &CObj<T::Action>,
        x: &XObj<T::Action>,
        c: &CObj<T::Action>,
        f: &CMor<T::Action>,
    ) -> Result<XMor<T::Action>> {
        (**self).transpose(b, x, c, f)
    }
    fn untranspose(
        &self,
        b: &CObj<T::Action>,
        x: &XObj<T::Action>,
        c: &CObj<T::Action>,
        g: &XMor<T::Action>,
    ) -> Result<CMor<T::Action>> {
        (**self).untranspose(b, x, c, g)
    }
}

/// Bijection `C(B^X, C) ≅ X(X, B⊳C)` on enumerated hom sets, and its
/// naturality `transpose(B^u ; f) = u ; transpose(f)` in `X`.
pub fn check_triangle_hom<T: TriangleHom>(
    t: &T,
    pool: &PoolOf<T::Action>,
    budget: &Budget,
) -> CheckReport {
    let a = t.action();
    let (xs, cs) = (a.acting(), a.acted());
    let (xo, co) = (&pool.x.objects, &pool.c.objects);
    let mut report = CheckReport::new("triangle hom", budget);
    let mut size = LawReport::new("tri-size", "|C(B^X, C)| = |X(X, B⊳C)|");
    let mut shape = LawReport::new("tri-shape", "transposes land in the paired hom set");
    let mut ut = LawReport::new("tri-untranspose-transpose", "untranspose(transpose(f)) = f");
    let mut tu = LawReport::new("tri-transpose-untranspose", "transpose(untranspose(g)) = g");
    let mut nat = LawReport::new("tri-natural", "transpose(B^u ; f) = u ; transpose(f)");

    let (tuples, ex) = budget.tuples(&[co.len(), xo.len(), co.len()], "tri-hom");
    size.exhaustive = ex;
    for tu_ in tuples {
        let (b, x, c) = (&co[tu_[0]], &xo[tu_[1]], &co[tu_[2]]);
        let inst = || inst![b, x, c];
        size.tick();
        let bx = a.act_obj(b, x);
        let bc = t.tri_obj(b, c);
        let (lhs, rhs) = match (enumerate_hom(cs, &bx, c), enumerate_hom(xs, x, &bc)) {
            (Ok(l), Ok(r)) => (l, r),
            (Err(e), _) | (_, Err(e)) => {
                size.fail_with(FailureKind::NotEnumerable, inst(), format!("{e}"));
                continue;
            }
        };
        if lhs.len() != rhs.len() {
            size.fail_with(FailureKind::Law, inst(), format!("{} against {}", lhs.len(), rhs.len()));
        }
        for f in &lhs {
            let g = t.transpose(b, x, c, f);
            shape.tick();
            if expect_shape(xs, &mut shape, inst, "transpose", &g, x, &bc) {
                compare(cs, &mut ut, inst, t.untranspose(b, x, c, &g.expect("checked")), Ok(f.clone()));
            }
        }
        for g in &rhs {
            let f = t.untranspose(b, x, c, g);
            shape.tick();
            if expect_shape(cs, &mut shape, inst, "untranspose", &f, &bx, c) {
                compare(xs, &mut tu, inst, t.transpose(b, x, c, &f.expect("checked")), Ok(g.clone()));
            }
        }
    }

    let xm = &pool.x.morphisms;
    let (tuples, ex) = budget.tuples(&[xm.len(), co.len(), co.len()], "tri-natural");
    nat.exhaustive = ex;
    for tu_ in tuples {
        let (u, b, c) = (&xm[tu_[0]], &co[tu_[1]], &co[tu_[2]]);
        let (x0, x1) = (xs.source(u), xs.target(u));
        let homs = match enumerate_hom(cs, &a.act_obj(b, &x1), c) {
            Ok(h) => h,
            Err(e) => {
                nat.tick();
                nat.fail_with(FailureKind::NotEnumerable, inst![u, b, c], format!("{e}"));
                continue;
            }
        };
        for f in &homs {
            let lhs = (|| t.transpose(b, &x0, c, &cs.compose(&a.act_x_mor(b, u)?, f)?))();
            let rhs = (|| xs.compose(u, &t.transpose(b, &x1, c, f)?))();
            compare(xs, &mut nat, || inst![u, b, c, f], lhs, rhs);
        }
    }

    for l in [size, shape, ut, tu, nat] {
        report.push(l);
    }
    report
}

/// `[⟨X,A⟩, ⟨Z,C⟩] = ⟨[X,Z] × (A⊳C), C⟩`, adjoint on the left.
///
/// A morphism `⟨X,A⟩⊗⟨Y,B⟩ → ⟨Z,C⟩` is a pair `f₀ : X⊗Y → Z`,
/// `f₁ : A^Y + B → C`. Currying sends it to
/// `⟨⟨curry f₀, transpose(inl ; f₁)⟩, inr ; f₁⟩`.
pub struct SemidirectLeftHom<'a, A, HX, T> {
    pub s: &'a Semidirect<A>,
    pub x: HX,
    pub tri: T,
}

pub fn left_closed_hom<A, HX, T>(
    h: &SemidirectLeftHom<'_, A, HX, T>,
    a: &(XObj<A>, CObj<A>),
    c: &(XObj<A>, CObj<A>),
) -> Result<(XObj<A>, CObj<A>)>
where
    A: WeakAction,
    A::X: Cartesian,
    A::C: Cocartesian,
    HX: InternalHom<Cat = A::X>,
    T: TriangleHom<Action = A>,
{
    h.hom_obj(a, c)
}

impl<A, HX, T> InternalHom for SemidirectLeftHom<'_, A, HX, T>
where
    A: WeakAction,
    A::X: Cartesian,
    A::C: Cocartesian,
    HX: InternalHom<Cat = A::X>,
    T: TriangleHom<Action = A>,
{
    type Cat = Semidirect<A>;

    fn category(&self) -> &Semidirect<A> {
        self.s
    }

    fn side(&self) -> Side {
        Side::Left
    }

    fn hom_obj(&self, a: &(XObj<A>, CObj<A>), c: &(XObj<A>, CObj<A>)) -> Result<(XObj<A>, CObj<A>)> {
        if self.x.side() != Side::Left {
            return Err(Error::MissingHomData(format!("{:?} hom on X", self.x.side())));
        }
        let xz = self.x.hom_obj(&a.0, &c.0)?;
        Ok((self.s.x().product(&xz, &self.tri.tri_obj(&a.1, &c.1)), c.1.clone()))
    }

    fn curry(
        &self,
        a: &(XObj<A>, CObj<A>),
        b: &(XObj<A>, CObj<A>),
        c: &(XObj<A>, CObj<A>),
        f: &(XMor<A>, CMor<A>),
    ) -> Result<(XMor<A>, CMor<A>)> {
        let (xs, cs) = (self.s.x(), self.s.c());
        let ay = self.s.action.act_obj(&a.1, &b.0);
        let u0 = self.x.curry(&a.0, &b.0, &c.0, &f.0)?;
        let u1 = self.tri.transpose(&a.1, &b.0, &c.1, &cs.compose(&cs.inl(&ay, &b.1)?, &f.1)?)?;
        Ok((xs.pair(&u0, &u1)?, cs.compose(&cs.inr(&ay, &b.1)?, &f.1)?))
    }

    fn uncurry(
        &self,
        a: &(XObj<A>, CObj<A>),
        b: &(XObj<A>, CObj<A>),
        c: &(XObj<A>, CObj<A>),
        g: &(XMor<A>, CMor<A>),
    ) -> Result<(XMor<A>, CMor<A>)> {
        let (xs, cs) = (self.s.x(), self.s.c());
        let xz = self.x.hom_obj(&a.0, &c.0)?;
        let ac = self.tri.tri_obj(&a.1, &c.1);
        let u0 = xs.compose(&g.0, &xs.proj1(&xz, &ac)?)?;
        let u1 = xs.compose(&g.0, &xs.proj2(&xz, &ac)?)?;
        let f0 = self.x.uncurry(&a.0, &b.0, &c.0, &u0)?;
        let h = self.tri.untranspose(&a.1, &b.0, &c.1, &u1)?;
        Ok((f0, cs.copair(&h, &g.1)?))
    }
}

/// Whether `initial ⊗ probe` is again initial, tested against `targets`.
///
/// `initial` itself must have exactly one morphism to every target, else
/// [`Error::NotInitial`]. The report fails when the tensor is not initial.
pub fn check_initial_preservation<S: SkewMonoidal>(
    s: &S,
    initial: &S::Obj,
    probe: &S::Obj,
    targets: &[S::Obj],
    budget: &Budget,
) -> Result<CheckReport> {
    for t in targets {
        let n = enumerate_hom(s, initial, t)?.len();
        if n != 1 {
            return Err(Error::NotInitial(format!("{n} morphisms {initial:?} -> {t:?}")));
        }
    }
    let mut report = CheckReport::new(format!("initial object tensored with {probe:?}"), budget);
    let mut law = LawReport::new("initial-preserved", "|hom(0⊗P, T)| = 1 for every target T");
    let tp = s.tensor_obj(initial, probe);
    for t in targets {
        law.tick();
        let n = enumerate_hom(s, &tp, t)?.len();
        if n != 1 {
            law.fail_with(
                FailureKind::Law,
                alloc::vec![render_one(initial), render_one(probe), render_one(t)],
                format!("{tp:?} has {n} morphisms to {t:?}"),
            );
        }
    }
    report.push(law);
    Ok(report)
}
