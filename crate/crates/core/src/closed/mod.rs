//! Left duals, internal homs and the adjunction checks around them.

mod left;
mod right;

pub use left::{
    check_initial_preservation, check_triangle_hom, left_closed_hom, Cartesian, Cocartesian,
    SemidirectLeftHom, TriangleHom,
};
pub use right::{
    check_right_adjoint, right_closed_hom, right_closed_hom_via_dual, DualHom,
    DualRightAdjoint, RightAdjoint, SemidirectRightHom,
};

use alloc::format;
use alloc::vec::Vec;

use crate::action::{CObj, CMor, StrongAction, XObj, XMor};
use crate::cat::{chain, compare, enumerate_hom, expect_shape, Category};
use crate::error::{Error, Result};
use crate::report::{render_one, Budget, CheckReport, FailureKind, LawReport};
use crate::semidirect::Semidirect;
use crate::skew::{CoherenceInverses, SkewMonoidal};

/// A left dual `∨A` with `eval : ∨A⊗A → I` and `coeval : I → A⊗∨A`.
#[derive(Debug, Clone, PartialEq)]
pub struct DualData<O, M> {
    pub dual: O,
    pub eval: M,
    pub coeval: M,
}

/// A chosen left dual for objects of a category.
pub trait LeftDuals {
    type Cat: SkewMonoidal;
    fn category(&self) -> &Self::Cat;
    /// Fails with [`Error::NoDual`] when `a` has no left dual.
    fn dual(
        &self,
        a: &<Self::Cat as Category>::Obj,
    ) -> Result<DualData<<Self::Cat as Category>::Obj, <Self::Cat as Category>::Mor>>;
}

impl<T: LeftDuals> LeftDuals for &T {
    type Cat = T::Cat;
    fn category(&self) -> &T::Cat {
        (**self).category()
    }
    fn dual(
        &self,
        a: &<T::Cat as Category>::Obj,
    ) -> Result<DualData<<T::Cat as Category>::Obj, <T::Cat as Category>::Mor>> {
        (**self).dual(a)
    }
}

/// Snake equations for `d` as a left dual of `a`:
///
/// ```text
/// λ_A ; (η⊗A) ; α⁻¹_{A,∨A,A} ; (A⊗ε) ; ρ_A = id_A
/// ρ⁻¹_{∨A} ; (∨A⊗η) ; α_{∨A,A,∨A} ; (ε⊗∨A) ; λ⁻¹_{∨A} = id_{∨A}
/// ```
pub fn check_duality<S, W>(
    s: &S,
    w: &W,
    a: &S::Obj,
    d: &DualData<S::Obj, S::Mor>,
    budget: &Budget,
) -> CheckReport
where
    S: SkewMonoidal,
    W: CoherenceInverses<S>,
{
    let mut report = CheckReport::new(format!("left dual of {a:?}"), budget);
    let inst = || alloc::vec![render_one(a), render_one(&d.dual)];
    let i = s.unit();
    let da = &d.dual;

    let mut shape = LawReport::new("duality-shape", "ε : ∨A⊗A → I, η : I → A⊗∨A");
    shape.tick();
    let ok_e = expect_shape(s, &mut shape, inst, "eval", &Ok(d.eval.clone()), &s.tensor_obj(da, a), &i);
    shape.tick();
    let ok_c =
        expect_shape(s, &mut shape, inst, "coeval", &Ok(d.coeval.clone()), &i, &s.tensor_obj(a, da));
    report.push(shape);

    let mut s1 = LawReport::new(
        "snake-1",
        "λ_A ; (η⊗A) ; α⁻¹_{A,∨A,A} ; (A⊗ε) ; ρ_A = id_A",
    );
    let mut s2 = LawReport::new(
        "snake-2",
        "ρ⁻¹_{∨A} ; (∨A⊗η) ; α_{∨A,A,∨A} ; (ε⊗∨A) ; λ⁻¹_{∨A} = id_{∨A}",
    );
    if ok_e && ok_c {
        let lhs1 = (|| {
            chain(
                s,
                &[
                    s.lunit(a)?,
                    s.whisker_right(&d.coeval, a)?,
                    w.assoc_inv(s, a, da, a)?,
                    s.whisker_left(a, &d.eval)?,
                    s.runit(a)?,
                ],
            )
        })();
        compare(s, &mut s1, inst, lhs1, Ok(s.identity(a)));
        let lhs2 = (|| {
            chain(
                s,
                &[
                    w.runit_inv(s, da)?,
                    s.whisker_left(da, &d.coeval)?,
                    s.assoc(da, a, da)?,
                    s.whisker_right(&d.eval, da)?,
                    w.lunit_inv(s, da)?,
                ],
            )
        })();
        compare(s, &mut s2, inst, lhs2, Ok(s.identity(da)));
    }
    report.push(s1);
    report.push(s2);
    report
}

/// The left dual of `⟨X,A⟩` in `X ⋉ C`, namely `⟨∨X, (∨A)^{∨X}⟩`, with
///
/// ```text
/// π_C ε = ((ψ^{∨X,X}_{∨A})⁻¹ ; (∨A)^{ε_X} ; ψ_{∨A}) ⊗ A ; ε_A
/// π_C η = φ^{∨X} ; (η_A)^{∨X} ; (φ^{∨X}_{A,∨A})⁻¹
/// ```
///
/// Missing inverse structure maps are reported as [`Error::NotStrong`].
pub fn left_dual_sd<A: StrongAction>(
    s: &Semidirect<A>,
    x_dual: &DualData<XObj<A>, XMor<A>>,
    a_dual: &DualData<CObj<A>, CMor<A>>,
    obj: &(XObj<A>, CObj<A>),
) -> Result<DualData<(XObj<A>, CObj<A>), (XMor<A>, CMor<A>)>> {
    let strong = |e: Error| match e {
        Error::MissingWitness(m) => Error::NotStrong(m),
        e => e,
    };
    let (cs, act) = (s.c(), &s.action);
    let (x, a) = obj;
    let (dx, da) = (&x_dual.dual, &a_dual.dual);
    let eval_c = (|| {
        let back = chain(
            cs,
            &[
                act.psi2_inv(dx, x, da)?,
                act.act_x_mor(da, &x_dual.eval)?,
                act.psi0(da)?,
            ],
        )?;
        cs.compose(&cs.whisker_right(&back, a)?, &a_dual.eval)
    })()
    .map_err(strong)?;
    let coeval_c = (|| {
        chain(
            cs,
            &[
                act.phi0(dx)?,
                act.act_mor(&a_dual.coeval, dx)?,
                act.phi2_inv(dx, a, da)?,
            ],
        )
    })()
    .map_err(strong)?;
    Ok(DualData {
        dual: (dx.clone(), act.act_obj(da, dx)),
        eval: (x_dual.eval.clone(), eval_c),
        coeval: (x_dual.coeval.clone(), coeval_c),
    })
}

/// Left duals in `X ⋉ C` built by [`left_dual_sd`] from chosen duals in the
/// two factors.
pub struct SemidirectDuals<'a, A, DX, DC> {
    pub s: &'a Semidirect<A>,
    pub x: DX,
    pub c: DC,
}

impl<A, DX, DC> LeftDuals for SemidirectDuals<'_, A, DX, DC>
where
    A: StrongAction,
    DX: LeftDuals<Cat = A::X>,
    DC: LeftDuals<Cat = A::C>,
{
    type Cat = Semidirect<A>;
    fn category(&self) -> &Semidirect<A> {
        self.s
    }
    fn dual(
        &self,
        a: &(XObj<A>, CObj<A>),
    ) -> Result<DualData<(XObj<A>, CObj<A>), (XMor<A>, CMor<A>)>> {
        left_dual_sd(self.s, &self.x.dual(&a.0)?, &self.c.dual(&a.1)?, a)
    }
}

/// Which variable the internal hom is adjoint in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `hom(A⊗B, C) ≅ hom(A, [B,C])`
    Right,
    /// `hom(A⊗B, C) ≅ hom(B, [A,C])`
    Left,
}

/// An internal hom with explicit bijection witnesses.
///
/// For [`Side::Right`], `curry(a, b, c, f)` sends `f : A⊗B → C` to
/// `A → [B,C]`. For [`Side::Left`] it sends `f` to `B → [A,C]`.
pub trait InternalHom {
    type Cat: SkewMonoidal;
    fn category(&self) -> &Self::Cat;
    fn side(&self) -> Side;
    fn hom_obj(
        &self,
        b: &<Self::Cat as Category>::Obj,
        c: &<Self::Cat as Category>::Obj,
    ) -> Result<<Self::Cat as Category>::Obj>;
    fn curry(
        &self,
        a: &<Self::Cat as Category>::Obj,
        b: &<Self::Cat as Category>::Obj,
        c: &<Self::Cat as Category>::Obj,
        f: &<Self::Cat as Category>::Mor,
    ) -> Result<<Self::Cat as Category>::Mor>;
    fn uncurry(
        &self,
        a: &<Self::Cat as Category>::Obj,
        b: &<Self::Cat as Category>::Obj,
        c: &<Self::Cat as Category>::Obj,
        g: &<Self::Cat as Category>::Mor,
    ) -> Result<<Self::Cat as Category>::Mor>;
}

type HObj<H> = <<H as InternalHom>::Cat as Category>::Obj;
type HMor<H> = <<H as InternalHom>::Cat as Category>::Mor;

impl<T: InternalHom> InternalHom for &T {
    type Cat = T::Cat;
    fn category(&self) -> &T::Cat {
        (**self).category()
    }
    fn side(&self) -> Side {
        (**self).side()
    }
    fn hom_obj(&self, b: &HObj<T>, c: &HObj<T>) -> Result<HObj<T>> {
        (**self).hom_obj(b, c)
    }
    fn curry(&self, a: &HObj<T>, b: &HObj<T>, c: &HObj<T>, f: &HMor<T>) -> Result<HMor<T>> {
        (**self).curry(a, b, c, f)
    }
    fn uncurry(&self, a: &HObj<T>, b: &HObj<T>, c: &HObj<T>, g: &HMor<T>) -> Result<HMor<T>> {
        (**self).uncurry(a, b, c, g)
    }
}

/// The two hom sets related by `h` at `(a, b, c)`: `hom(A⊗B, C)` and the
/// curried side.
fn hom_pair<H: InternalHom>(
    h: &H,
    a: &HObj<H>,
    b: &HObj<H>,
    c: &HObj<H>,
) -> Result<(HObj<H>, HObj<H>, Vec<HMor<H>>, Vec<HMor<H>>)> {
    let s = h.category();
    let (outer, inner) = match h.side() {
        Side::Right => (a, b),
        Side::Left => (b, a),
    };
    let ho = h.hom_obj(inner, c)?;
    let lhs = enumerate_hom(s, &s.tensor_obj(a, b), c)?;
    let rhs = enumerate_hom(s, outer, &ho)?;
    Ok((outer.clone(), ho, lhs, rhs))
}

fn enumeration_failure(law: &mut LawReport, inst: Vec<alloc::string::String>, e: Error) {
    let kind = match e {
        Error::NotEnumerable(_) => FailureKind::NotEnumerable,
        Error::MissingHomData(_) => FailureKind::MissingWitness,
        _ => FailureKind::IllTyped,
    };
    law.fail_with(kind, inst, format!("{e}"));
}

/// Bijection and naturality of the currying maps of `h`.
///
/// Every `(A, B, C)` over the pool objects is checked with both hom sets
/// fully enumerated: equal sizes, curried morphisms land in the curried hom
/// set, and the two maps are mutually inverse. Naturality in the outer
/// variable is checked for each pool morphism `u : A' → A` (right) or
/// `u : B' → B` (left): `curry((u⊗B) ; f) = u ; curry(f)`.
pub fn check_hom_adjunction<H: InternalHom>(
    h: &H,
    objects: &[HObj<H>],
    morphisms: &[HMor<H>],
    budget: &Budget,
) -> CheckReport {
    let s = h.category();
    let side = h.side();
    let n = objects.len();
    let (diag_size, diag_nat) = match side {
        Side::Right => ("|hom(A⊗B,C)| = |hom(A,[B,C])|", "curry((u⊗B);f) = u;curry(f)"),
        Side::Left => ("|hom(A⊗B,C)| = |hom(B,[A,C])|", "curry((A⊗u);f) = u;curry(f)"),
    };
    let mut report = CheckReport::new(
        match side {
            Side::Right => "right internal hom",
            Side::Left => "left internal hom",
        },
        budget,
    );
    let mut size = LawReport::new("hom-size", diag_size);
    let mut shape = LawReport::new("curry-shape", "curry(f) and uncurry(g) land in the paired hom set");
    let mut uc = LawReport::new("uncurry-curry", "uncurry(curry(f)) = f");
    let mut cu = LawReport::new("curry-uncurry", "curry(uncurry(g)) = g");
    let mut nat = LawReport::new("hom-natural", diag_nat);

    let (tuples, ex) = budget.tuples(&[n, n, n], "hom-adjunction");
    size.exhaustive = ex;
    for t in tuples {
        let (a, b, c) = (&objects[t[0]], &objects[t[1]], &objects[t[2]]);
        let inst = || alloc::vec![render_one(a), render_one(b), render_one(c)];
        size.tick();
        let (outer, ho, lhs, rhs) = match hom_pair(h, a, b, c) {
            Ok(p) => p,
            Err(e) => {
                enumeration_failure(&mut size, inst(), e);
                continue;
            }
        };
        if lhs.len() != rhs.len() {
            size.fail_with(
                FailureKind::Law,
                inst(),
                format!("{} morphisms against {}", lhs.len(), rhs.len()),
            );
        }
        let ab = s.tensor_obj(a, b);
        for f in &lhs {
            let g = h.curry(a, b, c, f);
            shape.tick();
            if !expect_shape(s, &mut shape, || inst_with(inst(), f), "curry(f)", &g, &outer, &ho) {
                continue;
            }
            let g = g.expect("shape checked");
            compare(s, &mut uc, || inst_with(inst(), f), h.uncurry(a, b, c, &g), Ok(f.clone()));
        }
        for g in &rhs {
            let f = h.uncurry(a, b, c, g);
            shape.tick();
            if !expect_shape(s, &mut shape, || inst_with(inst(), g), "uncurry(g)", &f, &ab, c) {
                continue;
            }
            let f = f.expect("shape checked");
            compare(s, &mut cu, || inst_with(inst(), g), h.curry(a, b, c, &f), Ok(g.clone()));
        }
    }

    let m = morphisms.len();
    let (tuples, ex) = budget.tuples(&[m, n, n], "hom-natural");
    nat.exhaustive = ex;
    for t in tuples {
        let (u, other, c) = (&morphisms[t[0]], &objects[t[1]], &objects[t[2]]);
        let (src, tgt) = (s.source(u), s.target(u));
        // (a, b) before and after precomposition
        let ((a0, b0), (a1, b1), whisk) = match side {
            Side::Right => ((src.clone(), other.clone()), (tgt.clone(), other.clone()), s.whisker_right(u, other)),
            Side::Left => ((other.clone(), src.clone()), (other.clone(), tgt.clone()), s.whisker_left(other, u)),
        };
        let whisk = match whisk {
            Ok(w) => w,
            Err(e) => {
                nat.tick();
                nat.fail_with(FailureKind::IllTyped, alloc::vec![render_one(u)], format!("{e}"));
                continue;
            }
        };
        let homs = match enumerate_hom(s, &s.tensor_obj(&a1, &b1), c) {
            Ok(hs) => hs,
            Err(e) => {
                nat.tick();
                enumeration_failure(&mut nat, alloc::vec![render_one(u)], e);
                continue;
            }
        };
        for f in &homs {
            let inst = || alloc::vec![render_one(u), render_one(other), render_one(c), render_one(f)];
            let lhs = s.compose(&whisk, f).and_then(|wf| h.curry(&a0, &b0, c, &wf));
            let rhs = h.curry(&a1, &b1, c, f).and_then(|g| s.compose(u, &g));
            compare(s, &mut nat, inst, lhs, rhs);
        }
    }

    report.push(size);
    report.push(shape);
    report.push(uc);
    report.push(cu);
    report.push(nat);
    report
}

fn inst_with<T: core::fmt::Debug>(
    mut v: Vec<alloc::string::String>,
    extra: &T,
) -> Vec<alloc::string::String> {
    v.push(render_one(extra));
    v
}

/// Two internal homs on the same side of the same category agree: the
/// bijection `hom(·, [B,C]₁) → hom(A⊗B, C) → hom(·, [B,C]₂)` and its
/// counterpart compose to the identity in both orders.
pub fn check_hom_agreement<H1, H2>(
    h1: &H1,
    h2: &H2,
    objects: &[HObj<H1>],
    budget: &Budget,
) -> CheckReport
where
    H1: InternalHom,
    H2: InternalHom<Cat = H1::Cat>,
{
    let s = h1.category();
    let n = objects.len();
    let mut report = CheckReport::new("internal hom agreement", budget);
    let mut law = LawReport::new(
        "hom-agreement",
        "curry₁ ∘ uncurry₂ ∘ curry₂ ∘ uncurry₁ = id and symmetrically",
    );
    let (tuples, ex) = budget.tuples(&[n, n, n], "hom-agreement");
    law.exhaustive = ex;
    if h1.side() != h2.side() {
        law.tick();
        law.fail_with(FailureKind::Shape, Vec::new(), "internal homs on different sides");
        report.push(law);
        return report;
    }
    for t in tuples {
        let (a, b, c) = (&objects[t[0]], &objects[t[1]], &objects[t[2]]);
        let inst = || alloc::vec![render_one(a), render_one(b), render_one(c)];
        let (r1, r2) = match (hom_pair(h1, a, b, c), hom_pair(h2, a, b, c)) {
            (Ok(p1), Ok(p2)) => (p1.3, p2.3),
            (Err(e), _) | (_, Err(e)) => {
                law.tick();
                enumeration_failure(&mut law, inst(), e);
                continue;
            }
        };
        for g in &r1 {
            let there = h1.uncurry(a, b, c, g).and_then(|f| h2.curry(a, b, c, &f));
            let back = there
                .and_then(|g2| h2.uncurry(a, b, c, &g2))
                .and_then(|f| h1.curry(a, b, c, &f));
            compare(s, &mut law, || inst_with(inst(), g), back, Ok(g.clone()));
        }
        for g in &r2 {
            let there = h2.uncurry(a, b, c, g).and_then(|f| h1.curry(a, b, c, &f));
            let back = there
                .and_then(|g1| h1.uncurry(a, b, c, &g1))
                .and_then(|f| h2.curry(a, b, c, &f));
            compare(s, &mut law, || inst_with(inst(), g), back, Ok(g.clone()));
        }
    }
    report.push(law);
    report
}

/// An internal hom of a thin category given by its object function. The
/// currying maps return the unique arrow with the required endpoints.
pub struct ThinHom<'a, S, F> {
    pub cat: &'a S,
    pub side: Side,
    pub hom: F,
}

impl<S, F> InternalHom for ThinHom<'_, S, F>
where
    S: SkewMonoidal,
    F: Fn(&S::Obj, &S::Obj) -> Result<S::Obj>,
{
    type Cat = S;
    fn category(&self) -> &S {
        self.cat
    }
    fn side(&self) -> Side {
        self.side
    }
    fn hom_obj(&self, b: &S::Obj, c: &S::Obj) -> Result<S::Obj> {
        (self.hom)(b, c)
    }
    fn curry(&self, a: &S::Obj, b: &S::Obj, c: &S::Obj, _f: &S::Mor) -> Result<S::Mor> {
        match self.side {
            Side::Right => thin_arrow(self.cat, a, &(self.hom)(b, c)?),
            Side::Left => thin_arrow(self.cat, b, &(self.hom)(a, c)?),
        }
    }
    fn uncurry(&self, a: &S::Obj, b: &S::Obj, c: &S::Obj, _g: &S::Mor) -> Result<S::Mor> {
        thin_arrow(self.cat, &self.cat.tensor_obj(a, b), c)
    }
}

/// The unique arrow `src → tgt` of a thin category.
pub(crate) fn thin_arrow<C: Category>(
    cat: &C,
    src: &C::Obj,
    tgt: &C::Obj,
) -> Result<C::Mor> {
    enumerate_hom(cat, src, tgt)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::MissingHomData(format!("no arrow {src:?} -> {tgt:?}")))
}
