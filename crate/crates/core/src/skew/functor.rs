//! Lax monoidal functors, monoidal natural transformations and lax monoidal
//! comonads between skew monoidal categories.

use alloc::format;
use alloc::vec::Vec;

use super::SkewMonoidal;
use crate::cat::{chain, compare, expect_shape, Category, Pool};
use crate::error::Result;
use crate::report::{render, Budget, CheckReport, LawReport};

type Obj<C> = <C as Category>::Obj;
type Mor<C> = <C as Category>::Mor;

/// `F` with `F B ⊗ F C → F(B⊗C)` and `I → F I`.
pub trait LaxMonoidalFunctor {
    type Source: SkewMonoidal;
    type Target: SkewMonoidal;

    fn source_category(&self) -> &Self::Source;
    fn target_category(&self) -> &Self::Target;
    fn on_obj(&self, a: &Obj<Self::Source>) -> Obj<Self::Target>;
    fn on_mor(&self, f: &Mor<Self::Source>) -> Result<Mor<Self::Target>>;
    fn mult(&self, b: &Obj<Self::Source>, c: &Obj<Self::Source>) -> Result<Mor<Self::Target>>;
    fn unit_map(&self) -> Result<Mor<Self::Target>>;
}

pub struct IdentityFunctor<'a, S>(pub &'a S);

impl<S: SkewMonoidal> LaxMonoidalFunctor for IdentityFunctor<'_, S> {
    type Source = S;
    type Target = S;

    fn source_category(&self) -> &S {
        self.0
    }
    fn target_category(&self) -> &S {
        self.0
    }
    fn on_obj(&self, a: &S::Obj) -> S::Obj {
        a.clone()
    }
    fn on_mor(&self, f: &S::Mor) -> Result<S::Mor> {
        Ok(f.clone())
    }
    fn mult(&self, b: &S::Obj, c: &S::Obj) -> Result<S::Mor> {
        Ok(self.0.identity(&self.0.tensor_obj(b, c)))
    }
    fn unit_map(&self) -> Result<S::Mor> {
        Ok(self.0.identity(&self.0.unit()))
    }
}

/// `first` then `second`, with the composite lax structure
/// `G.mult(F B, F C) ; G(F.mult(B, C))` and `G.unit ; G(F.unit)`.
pub struct Composite<'a, F, G> {
    pub first: &'a F,
    pub second: &'a G,
}

impl<F, G> LaxMonoidalFunctor for Composite<'_, F, G>
where
    F: LaxMonoidalFunctor,
    G: LaxMonoidalFunctor<Source = F::Target>,
{
    type Source = F::Source;
    type Target = G::Target;

    fn source_category(&self) -> &F::Source {
        self.first.source_category()
    }
    fn target_category(&self) -> &G::Target {
        self.second.target_category()
    }
    fn on_obj(&self, a: &Obj<F::Source>) -> Obj<G::Target> {
        self.second.on_obj(&self.first.on_obj(a))
    }
    fn on_mor(&self, f: &Mor<F::Source>) -> Result<Mor<G::Target>> {
        self.second.on_mor(&self.first.on_mor(f)?)
    }
    fn mult(&self, b: &Obj<F::Source>, c: &Obj<F::Source>) -> Result<Mor<G::Target>> {
        let outer = self
            .second
            .mult(&self.first.on_obj(b), &self.first.on_obj(c))?;
        let inner = self.second.on_mor(&self.first.mult(b, c)?)?;
        self.target_category().compose(&outer, &inner)
    }
    fn unit_map(&self) -> Result<Mor<G::Target>> {
        let outer = self.second.unit_map()?;
        let inner = self.second.on_mor(&self.first.unit_map()?)?;
        self.target_category().compose(&outer, &inner)
    }
}

/// Functoriality, shape and naturality of the structure maps, and the three
/// lax coherence diagrams.
pub fn check_lax_monoidal_functor<F: LaxMonoidalFunctor>(
    functor: &F,
    pool: &Pool<Obj<F::Source>, Mor<F::Source>>,
    budget: &Budget,
) -> CheckReport {
    let s = functor.source_category();
    let t = functor.target_category();
    let mut report = CheckReport::new("lax monoidal functor", budget);
    let obs = &pool.objects;
    let ms = &pool.morphisms;
    let n = obs.len();

    let mut shape = LawReport::new("lax-shape", "F f : F A → F B, μ : FB⊗FC → F(B⊗C), η : I → FI");
    for f in ms {
        shape.tick();
        let img = functor.on_mor(f);
        expect_shape(
            t,
            &mut shape,
            || render(&[f]),
            "F f",
            &img,
            &functor.on_obj(&s.source(f)),
            &functor.on_obj(&s.target(f)),
        );
    }
    let (pairs, ex) = budget.tuples(&[n, n], "lax-shape");
    shape.exhaustive = ex;
    for p in &pairs {
        let (b, c) = (&obs[p[0]], &obs[p[1]]);
        shape.tick();
        expect_shape(
            t,
            &mut shape,
            || render(&[b, c]),
            "μ",
            &functor.mult(b, c),
            &t.tensor_obj(&functor.on_obj(b), &functor.on_obj(c)),
            &functor.on_obj(&s.tensor_obj(b, c)),
        );
    }
    shape.tick();
    expect_shape(
        t,
        &mut shape,
        Vec::new,
        "η",
        &functor.unit_map(),
        &t.unit(),
        &functor.on_obj(&s.unit()),
    );
    report.push(shape);

    let mut ids = LawReport::new("functor-identity", "F id_A = id_{FA}");
    for a in obs {
        compare(
            t,
            &mut ids,
            || render(&[a]),
            functor.on_mor(&s.identity(a)),
            Ok(t.identity(&functor.on_obj(a))),
        );
    }
    report.push(ids);

    let mut comp = LawReport::new("functor-composition", "F(f ; g) = F f ; F g");
    let (mp, ex) = budget.tuples(&[ms.len(), ms.len()], "lax-composition");
    comp.exhaustive = ex;
    for p in mp {
        let (f, g) = (&ms[p[0]], &ms[p[1]]);
        if s.target(f) != s.source(g) {
            continue;
        }
        compare(
            t,
            &mut comp,
            || render(&[f, g]),
            s.compose(f, g).and_then(|fg| functor.on_mor(&fg)),
            (|| t.compose(&functor.on_mor(f)?, &functor.on_mor(g)?))(),
        );
    }
    report.push(comp);

    let mut nat = LawReport::new("lax-natural", "(Ff ⊗ Fg) ; μ = μ ; F(f⊗g)");
    let (mp, ex) = budget.tuples(&[ms.len(), ms.len()], "lax-natural");
    nat.exhaustive = ex;
    for p in mp {
        let (f, g) = (&ms[p[0]], &ms[p[1]]);
        let lhs = (|| {
            let fg = t.tensor_mor(&functor.on_mor(f)?, &functor.on_mor(g)?)?;
            t.compose(&fg, &functor.mult(&s.target(f), &s.target(g))?)
        })();
        let rhs = (|| {
            let m = functor.mult(&s.source(f), &s.source(g))?;
            t.compose(&m, &functor.on_mor(&s.tensor_mor(f, g)?)?)
        })();
        compare(t, &mut nat, || render(&[f, g]), lhs, rhs);
    }
    report.push(nat);

    let mut assoc = LawReport::new(
        "lax-assoc",
        "α_{FA,FB,FC} ; (μ_{A,B}⊗FC) ; μ_{A⊗B,C} = (FA⊗μ_{B,C}) ; μ_{A,B⊗C} ; F α_{A,B,C}",
    );
    let (triples, ex) = budget.tuples(&[n, n, n], "lax-assoc");
    assoc.exhaustive = ex;
    for p in triples {
        let (a, b, c) = (&obs[p[0]], &obs[p[1]], &obs[p[2]]);
        let (fa, fb, fc) = (functor.on_obj(a), functor.on_obj(b), functor.on_obj(c));
        let lhs = (|| {
            chain(
                t,
                &[
                    t.assoc(&fa, &fb, &fc)?,
                    t.whisker_right(&functor.mult(a, b)?, &fc)?,
                    functor.mult(&s.tensor_obj(a, b), c)?,
                ],
            )
        })();
        let rhs = (|| {
            chain(
                t,
                &[
                    t.whisker_left(&fa, &functor.mult(b, c)?)?,
                    functor.mult(a, &s.tensor_obj(b, c))?,
                    functor.on_mor(&s.assoc(a, b, c)?)?,
                ],
            )
        })();
        compare(t, &mut assoc, || render(&[a, b, c]), lhs, rhs);
    }
    report.push(assoc);

    let mut left = LawReport::new("lax-left-unit", "λ_{FC} ; (η⊗FC) ; μ_{I,C} = F λ_C");
    let mut right = LawReport::new("lax-right-unit", "(FC⊗η) ; μ_{C,I} ; F ρ_C = ρ_{FC}");
    let si = s.unit();
    for c in obs {
        let fc = functor.on_obj(c);
        let inst = || render(&[c]);
        let lhs = (|| {
            chain(
                t,
                &[
                    t.lunit(&fc)?,
                    t.whisker_right(&functor.unit_map()?, &fc)?,
                    functor.mult(&si, c)?,
                ],
            )
        })();
        compare(t, &mut left, inst, lhs, s.lunit(c).and_then(|l| functor.on_mor(&l)));
        let lhs = (|| {
            chain(
                t,
                &[
                    t.whisker_left(&fc, &functor.unit_map()?)?,
                    functor.mult(c, &si)?,
                    functor.on_mor(&s.runit(c)?)?,
                ],
            )
        })();
        compare(t, &mut right, inst, lhs, t.runit(&fc));
    }
    report.push(left);
    report.push(right);
    report
}

/// A transformation `t : F ⇒ G` between lax monoidal functors with the same
/// source and target.
pub trait MonoidalNat {
    type From: LaxMonoidalFunctor;
    type To: LaxMonoidalFunctor<
        Source = <Self::From as LaxMonoidalFunctor>::Source,
        Target = <Self::From as LaxMonoidalFunctor>::Target,
    >;

    fn from(&self) -> &Self::From;
    fn to(&self) -> &Self::To;
    fn component(
        &self,
        c: &Obj<<Self::From as LaxMonoidalFunctor>::Source>,
    ) -> Result<Mor<<Self::From as LaxMonoidalFunctor>::Target>>;
}

/// Shape, naturality, and compatibility with `μ` and `η`.
pub fn check_monoidal_nat<T: MonoidalNat>(
    nat: &T,
    pool: &Pool<
        Obj<<T::From as LaxMonoidalFunctor>::Source>,
        Mor<<T::From as LaxMonoidalFunctor>::Source>,
    >,
    budget: &Budget,
) -> CheckReport {
    let f = nat.from();
    let g = nat.to();
    let s = f.source_category();
    let t = f.target_category();
    let obs = &pool.objects;
    let n = obs.len();
    let mut report = CheckReport::new("monoidal natural transformation", budget);

    let mut shape = LawReport::new("nat-shape", "t_C : F C → G C");
    for c in obs {
        shape.tick();
        expect_shape(
            t,
            &mut shape,
            || render(&[c]),
            "t",
            &nat.component(c),
            &f.on_obj(c),
            &g.on_obj(c),
        );
    }
    report.push(shape);

    let mut natural = LawReport::new("naturality", "F h ; t_B = t_A ; G h");
    for h in &pool.morphisms {
        let lhs = (|| t.compose(&f.on_mor(h)?, &nat.component(&s.target(h))?))();
        let rhs = (|| t.compose(&nat.component(&s.source(h))?, &g.on_mor(h)?))();
        compare(t, &mut natural, || render(&[h]), lhs, rhs);
    }
    report.push(natural);

    let mut mult = LawReport::new("nat-mult", "(t_B ⊗ t_C) ; μ^G_{B,C} = μ^F_{B,C} ; t_{B⊗C}");
    let (pairs, ex) = budget.tuples(&[n, n], "nat-mult");
    mult.exhaustive = ex;
    for p in pairs {
        let (b, c) = (&obs[p[0]], &obs[p[1]]);
        let lhs = (|| {
            let tt = t.tensor_mor(&nat.component(b)?, &nat.component(c)?)?;
            t.compose(&tt, &g.mult(b, c)?)
        })();
        let rhs = (|| t.compose(&f.mult(b, c)?, &nat.component(&s.tensor_obj(b, c))?))();
        compare(t, &mut mult, || render(&[b, c]), lhs, rhs);
    }
    report.push(mult);

    let mut unit = LawReport::new("nat-unit", "η^F ; t_I = η^G");
    let lhs = (|| t.compose(&f.unit_map()?, &nat.component(&s.unit())?))();
    compare(t, &mut unit, Vec::new, lhs, g.unit_map());
    report.push(unit);
    report
}

/// A comonad on a skew monoidal category whose functor, counit and
/// comultiplication are lax monoidal.
pub trait LaxMonoidalComonad {
    type Cat: SkewMonoidal;

    fn category(&self) -> &Self::Cat;
    fn on_obj(&self, a: &Obj<Self::Cat>) -> Obj<Self::Cat>;
    fn on_mor(&self, f: &Mor<Self::Cat>) -> Result<Mor<Self::Cat>>;
    fn mult(&self, b: &Obj<Self::Cat>, c: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
    fn unit_map(&self) -> Result<Mor<Self::Cat>>;
    /// `T C → C`
    fn counit(&self, c: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
    /// `T C → T T C`
    fn comult(&self, c: &Obj<Self::Cat>) -> Result<Mor<Self::Cat>>;
}

/// The underlying lax monoidal endofunctor of a comonad.
pub struct UnderlyingFunctor<'a, T>(pub &'a T);

impl<T: LaxMonoidalComonad> LaxMonoidalFunctor for UnderlyingFunctor<'_, T> {
    type Source = T::Cat;
    type Target = T::Cat;

    fn source_category(&self) -> &T::Cat {
        self.0.category()
    }
    fn target_category(&self) -> &T::Cat {
        self.0.category()
    }
    fn on_obj(&self, a: &Obj<T::Cat>) -> Obj<T::Cat> {
        self.0.on_obj(a)
    }
    fn on_mor(&self, f: &Mor<T::Cat>) -> Result<Mor<T::Cat>> {
        self.0.on_mor(f)
    }
    fn mult(&self, b: &Obj<T::Cat>, c: &Obj<T::Cat>) -> Result<Mor<T::Cat>> {
        self.0.mult(b, c)
    }
    fn unit_map(&self) -> Result<Mor<T::Cat>> {
        self.0.unit_map()
    }
}

/// A transformation given by a component function.
pub struct FnNat<'a, F, G, K> {
    pub from: &'a F,
    pub to: &'a G,
    pub component: K,
}

impl<F, G, K> MonoidalNat for FnNat<'_, F, G, K>
where
    F: LaxMonoidalFunctor,
    G: LaxMonoidalFunctor<Source = F::Source, Target = F::Target>,
    K: Fn(&Obj<F::Source>) -> Result<Mor<F::Target>>,
{
    type From = F;
    type To = G;

    fn from(&self) -> &F {
        self.from
    }
    fn to(&self) -> &G {
        self.to
    }
    fn component(&self, c: &Obj<F::Source>) -> Result<Mor<F::Target>> {
        (self.component)(c)
    }
}

/// Lax monoidality of `T`, the comonad laws, naturality and monoidality of
/// the counit and comultiplication.
pub fn check_lax_monoidal_comonad<T: LaxMonoidalComonad>(
    comonad: &T,
    pool: &Pool<Obj<T::Cat>, Mor<T::Cat>>,
    budget: &Budget,
) -> CheckReport {
    let c = comonad.category();
    let under = UnderlyingFunctor(comonad);
    let mut report = check_lax_monoidal_functor(&under, pool, budget);
    report.subject = "lax monoidal comonad".into();

    let id = IdentityFunctor(c);
    let counit = FnNat {
        from: &under,
        to: &id,
        component: |x: &Obj<T::Cat>| comonad.counit(x),
    };
    for mut law in check_monoidal_nat(&counit, pool, budget).laws {
        law.law = format!("counit-{}", law.law);
        report.push(law);
    }
    let twice = Composite {
        first: &under,
        second: &under,
    };
    let comult = FnNat {
        from: &under,
        to: &twice,
        component: |x: &Obj<T::Cat>| comonad.comult(x),
    };
    for mut law in check_monoidal_nat(&comult, pool, budget).laws {
        law.law = format!("comult-{}", law.law);
        report.push(law);
    }

    let mut lc = LawReport::new("comonad-left-counit", "δ_C ; ε_{TC} = id_{TC}");
    let mut rc = LawReport::new("comonad-right-counit", "δ_C ; T ε_C = id_{TC}");
    let mut co = LawReport::new("comonad-coassoc", "δ_C ; δ_{TC} = δ_C ; T δ_C");
    for x in &pool.objects {
        let tx = comonad.on_obj(x);
        let inst = || render(&[x]);
        compare(
            c,
            &mut lc,
            inst,
            (|| c.compose(&comonad.comult(x)?, &comonad.counit(&tx)?))(),
            Ok(c.identity(&tx)),
        );
        compare(
            c,
            &mut rc,
            inst,
            (|| c.compose(&comonad.comult(x)?, &comonad.on_mor(&comonad.counit(x)?)?))(),
            Ok(c.identity(&tx)),
        );
        compare(
            c,
            &mut co,
            inst,
            (|| c.compose(&comonad.comult(x)?, &comonad.comult(&tx)?))(),
            (|| c.compose(&comonad.comult(x)?, &comonad.on_mor(&comonad.comult(x)?)?))(),
        );
    }
    report.push(lc);
    report.push(rc);
    report.push(co);
    report
}

impl<T: LaxMonoidalComonad> LaxMonoidalComonad for &T {
    type Cat = T::Cat;

    fn category(&self) -> &T::Cat {
        (**self).category()
    }
    fn on_obj(&self, a: &Obj<T::Cat>) -> Obj<T::Cat> {
        (**self).on_obj(a)
    }
    fn on_mor(&self, f: &Mor<T::Cat>) -> Result<Mor<T::Cat>> {
        (**self).on_mor(f)
    }
    fn mult(&self, b: &Obj<T::Cat>, c: &Obj<T::Cat>) -> Result<Mor<T::Cat>> {
        (**self).mult(b, c)
    }
    fn unit_map(&self) -> Result<Mor<T::Cat>> {
        (**self).unit_map()
    }
    fn counit(&self, c: &Obj<T::Cat>) -> Result<Mor<T::Cat>> {
        (**self).counit(c)
    }
    fn comult(&self, c: &Obj<T::Cat>) -> Result<Mor<T::Cat>> {
        (**self).comult(c)
    }
}
