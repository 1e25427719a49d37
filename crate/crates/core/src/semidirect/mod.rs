//! The semidirect product `X ⋉ C` of a weak action.
//!
//! Objects and morphisms are pairs. The tensor is
//! `⟨X,B⟩ ⊗ ⟨Y,C⟩ = ⟨X⊗Y, B^Y ⊗ C⟩` with unit `⟨I,I⟩`, and the `C`-parts of
//! the coherence data are
//!
//! ```text
//! α : (ψ^{Y,Z}_A ⊗ (B^Z⊗C)) ; α_{(A^Y)^Z, B^Z, C} ; (φ^Z_{A^Y,B} ⊗ C)
//! λ : λ_C ; (φ^X ⊗ C)
//! ρ : (ψ_C ⊗ I) ; ρ_C
//! ```

mod comonad;
mod monoid;

pub use comonad::{corepresented_skew, ComonadAction, Corepresented};
pub use monoid::{check_monoid_reduction, monoid_semidirect, SemidirectMonoid};

use alloc::format;
use alloc::vec::Vec;

use crate::action::{check_weak_action, CObj, CMor, PoolOf, StrongAction, WeakAction, XMor, XObj};
use crate::cat::{chain, compare, Category, Functor, Pool};
use crate::error::{Error, Result};
use crate::report::{Budget, CheckReport, LawReport};
use crate::skew::{CoherenceInverses, SkewMonoidal};

#[derive(Debug, Clone)]
pub struct Semidirect<A> {
    pub action: A,
}

/// Builds `X ⋉ C`. With `validate` set, the action is first run through
/// [`check_weak_action`] on the given pools and rejected if any law fails.
pub fn build_semidirect<A: WeakAction>(
    action: A,
    validate: Option<(&PoolOf<A>, &Budget)>,
) -> Result<Semidirect<A>> {
    if let Some((pool, budget)) = validate {
        let report = check_weak_action(&action, pool, budget);
        if !report.passed() {
            return Err(Error::InvalidAction {
                condition: "weak action laws",
                witness: format!("{:?}", report.failed_laws()),
            });
        }
    }
    Ok(Semidirect { action })
}

impl<A: WeakAction> Semidirect<A> {
    pub fn x(&self) -> &A::X {
        self.action.acting()
    }

    pub fn c(&self) -> &A::C {
        self.action.acted()
    }

    /// Every pair of pool objects and every pair of pool morphisms.
    pub fn product_pool(
        x: &Pool<XObj<A>, XMor<A>>,
        c: &Pool<CObj<A>, CMor<A>>,
    ) -> Pool<(XObj<A>, CObj<A>), (XMor<A>, CMor<A>)> {
        let objects = x
            .objects
            .iter()
            .flat_map(|a| c.objects.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        let morphisms = x
            .morphisms
            .iter()
            .flat_map(|f| c.morphisms.iter().map(move |g| (f.clone(), g.clone())))
            .collect();
        Pool::new(objects, morphisms)
    }
}

impl<A: WeakAction> Category for Semidirect<A> {
    type Obj = (XObj<A>, CObj<A>);
    type Mor = (XMor<A>, CMor<A>);

    fn source(&self, f: &Self::Mor) -> Self::Obj {
        (self.x().source(&f.0), self.c().source(&f.1))
    }
    fn target(&self, f: &Self::Mor) -> Self::Obj {
        (self.x().target(&f.0), self.c().target(&f.1))
    }
    fn identity(&self, a: &Self::Obj) -> Self::Mor {
        (self.x().identity(&a.0), self.c().identity(&a.1))
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        Ok((self.x().compose(&f.0, &g.0)?, self.c().compose(&f.1, &g.1)?))
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.x().mor_eq(&f.0, &g.0) && self.c().mor_eq(&f.1, &g.1)
    }
    fn is_morphism(&self, f: &Self::Mor) -> bool {
        self.x().is_morphism(&f.0) && self.c().is_morphism(&f.1)
    }
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>> {
        let l = self.x().hom(&a.0, &b.0)?;
        let r = self.c().hom(&a.1, &b.1)?;
        Ok(l.iter()
            .flat_map(|f| r.iter().map(move |g| (f.clone(), g.clone())))
            .collect())
    }
}

impl<A: WeakAction> SkewMonoidal for Semidirect<A> {
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
        (
            self.x().tensor_obj(&a.0, &b.0),
            self.c().tensor_obj(&self.action.act_obj(&a.1, &b.0), &b.1),
        )
    }

    /// `⟨f,g⟩ ⊗ ⟨f',g'⟩ = ⟨f⊗f', (g^Y ; B'^{f'}) ⊗ g'⟩`
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        let a = &self.action;
        let y = self.x().source(&g.0);
        let b2 = self.c().target(&f.1);
        let left = self.c().compose(&a.act_mor(&f.1, &y)?, &a.act_x_mor(&b2, &g.0)?)?;
        Ok((self.x().tensor_mor(&f.0, &g.0)?, self.c().tensor_mor(&left, &g.1)?))
    }

    fn unit(&self) -> Self::Obj {
        (self.x().unit(), self.c().unit())
    }

    fn assoc(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor> {
        let (xs, cs, act) = (self.x(), self.c(), &self.action);
        let ((x, aa), (y, bb), (z, cc)) = (a, b, c);
        let ay = act.act_obj(aa, y);
        let bz = act.act_obj(bb, z);
        let c_part = chain(
            cs,
            &[
                cs.whisker_right(&act.psi2(y, z, aa)?, &cs.tensor_obj(&bz, cc))?,
                cs.assoc(&act.act_obj(&ay, z), &bz, cc)?,
                cs.whisker_right(&act.phi2(z, &ay, bb)?, cc)?,
            ],
        )?;
        Ok((xs.assoc(x, y, z)?, c_part))
    }

    fn lunit(&self, a: &Self::Obj) -> Result<Self::Mor> {
        let (x, c) = a;
        let cs = self.c();
        let c_part = cs.compose(&cs.lunit(c)?, &cs.whisker_right(&self.action.phi0(x)?, c)?)?;
        Ok((self.x().lunit(x)?, c_part))
    }

    fn runit(&self, a: &Self::Obj) -> Result<Self::Mor> {
        let (x, c) = a;
        let cs = self.c();
        let c_part = cs.compose(&cs.whisker_right(&self.action.psi0(c)?, &cs.unit())?, &cs.runit(c)?)?;
        Ok((self.x().runit(x)?, c_part))
    }
}

/// Inverse candidates for the coherence data of `X ⋉ C` under a strong
/// action, assembled from inverses in `X`, in `C` and of `φ`, `ψ`.
#[derive(Debug, Clone, Copy, Default)]
pub struct SemidirectInverses<WX, WC> {
    pub x: WX,
    pub c: WC,
}

impl<A, WX, WC> CoherenceInverses<Semidirect<A>> for SemidirectInverses<WX, WC>
where
    A: StrongAction,
    WX: CoherenceInverses<A::X>,
    WC: CoherenceInverses<A::C>,
{
    fn assoc_inv(
        &self,
        s: &Semidirect<A>,
        a: &(XObj<A>, CObj<A>),
        b: &(XObj<A>, CObj<A>),
        c: &(XObj<A>, CObj<A>),
    ) -> Result<(XMor<A>, CMor<A>)> {
        let (xs, cs, act) = (s.x(), s.c(), &s.action);
        let ((x, aa), (y, bb), (z, cc)) = (a, b, c);
        let ay = act.act_obj(aa, y);
        let bz = act.act_obj(bb, z);
        let c_part = chain(
            cs,
            &[
                cs.whisker_right(&act.phi2_inv(z, &ay, bb)?, cc)?,
                self.c.assoc_inv(cs, &act.act_obj(&ay, z), &bz, cc)?,
                cs.whisker_right(&act.psi2_inv(y, z, aa)?, &cs.tensor_obj(&bz, cc))?,
            ],
        )?;
        Ok((self.x.assoc_inv(xs, x, y, z)?, c_part))
    }

    fn lunit_inv(&self, s: &Semidirect<A>, a: &(XObj<A>, CObj<A>)) -> Result<(XMor<A>, CMor<A>)> {
        let (x, c) = a;
        let cs = s.c();
        let c_part = cs.compose(
            &cs.whisker_right(&s.action.phi0_inv(x)?, c)?,
            &self.c.lunit_inv(cs, c)?,
        )?;
        Ok((self.x.lunit_inv(s.x(), x)?, c_part))
    }

    fn runit_inv(&self, s: &Semidirect<A>, a: &(XObj<A>, CObj<A>)) -> Result<(XMor<A>, CMor<A>)> {
        let (x, c) = a;
        let cs = s.c();
        let c_part = cs.compose(
            &self.c.runit_inv(cs, c)?,
            &cs.whisker_right(&s.action.psi0_inv(c)?, &cs.unit())?,
        )?;
        Ok((self.x.runit_inv(s.x(), x)?, c_part))
    }
}

/// `π_X : X ⋉ C → X`
pub struct ProjectX<'a, A>(pub &'a Semidirect<A>);

/// `π_C : X ⋉ C → C`
pub struct ProjectC<'a, A>(pub &'a Semidirect<A>);

impl<A: WeakAction> Functor for ProjectX<'_, A> {
    type Source = Semidirect<A>;
    type Target = A::X;

    fn source_category(&self) -> &Semidirect<A> {
        self.0
    }
    fn target_category(&self) -> &A::X {
        self.0.x()
    }
    fn on_obj(&self, a: &(XObj<A>, CObj<A>)) -> XObj<A> {
        a.0.clone()
    }
    fn on_mor(&self, f: &(XMor<A>, CMor<A>)) -> XMor<A> {
        f.0.clone()
    }
}

impl<A: WeakAction> Functor for ProjectC<'_, A> {
    type Source = Semidirect<A>;
    type Target = A::C;

    fn source_category(&self) -> &Semidirect<A> {
        self.0
    }
    fn target_category(&self) -> &A::C {
        self.0.c()
    }
    fn on_obj(&self, a: &(XObj<A>, CObj<A>)) -> CObj<A> {
        a.1.clone()
    }
    fn on_mor(&self, f: &(XMor<A>, CMor<A>)) -> CMor<A> {
        f.1.clone()
    }
}

/// The `X`-components of `α, λ, ρ` in `X ⋉ C` are those of `X`.
pub fn check_projection_invariant<A: WeakAction>(
    s: &Semidirect<A>,
    pool: &Pool<(XObj<A>, CObj<A>), (XMor<A>, CMor<A>)>,
    budget: &Budget,
) -> CheckReport {
    let xs = s.x();
    let obs = &pool.objects;
    let n = obs.len();
    let mut report = CheckReport::new("projection invariant", budget);
    let mut law = LawReport::new("pi-x", "π_X α = α, π_X λ = λ, π_X ρ = ρ");
    let (t, ex) = budget.tuples(&[n, n, n], "pi-x");
    law.exhaustive = ex;
    for t in t {
        let (a, b, c) = (&obs[t[0]], &obs[t[1]], &obs[t[2]]);
        compare(
            xs,
            &mut law,
            || inst![a, b, c],
            s.assoc(a, b, c).map(|m| m.0),
            xs.assoc(&a.0, &b.0, &c.0),
        );
    }
    for a in obs {
        compare(xs, &mut law, || inst![a], s.lunit(a).map(|m| m.0), xs.lunit(&a.0));
        compare(xs, &mut law, || inst![a], s.runit(a).map(|m| m.0), xs.runit(&a.0));
    }
    report.push(law);
    report
}
