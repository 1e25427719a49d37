//! Skew monoidal structure and its coherence checker.
//!
//! Orientation: `α : A⊗(B⊗C) → (A⊗B)⊗C`, `λ : A → I⊗A`, `ρ : A⊗I → A`.
//! None of them need be invertible.

mod functor;

pub use functor::{
    check_lax_monoidal_comonad, check_lax_monoidal_functor, check_monoidal_nat, Composite, FnNat,
    IdentityFunctor, LaxMonoidalComonad, LaxMonoidalFunctor, MonoidalNat, UnderlyingFunctor,
};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::cat::{chain, compare, expect_shape, Category, Op, Opposite, Pool};
use crate::error::{Error, Result};
use crate::report::{render, Budget, CheckReport, LawReport};

pub trait SkewMonoidal: Category {
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn unit(&self) -> Self::Obj;
    /// `A⊗(B⊗C) → (A⊗B)⊗C`
    fn assoc(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Result<Self::Mor>;
    /// `A → I⊗A`
    fn lunit(&self, a: &Self::Obj) -> Result<Self::Mor>;
    /// `A⊗I → A`
    fn runit(&self, a: &Self::Obj) -> Result<Self::Mor>;

    fn tensor3l(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Obj {
        self.tensor_obj(&self.tensor_obj(a, b), c)
    }

    fn tensor3r(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::Obj {
        self.tensor_obj(a, &self.tensor_obj(b, c))
    }

    /// `f ⊗ id_B`
    fn whisker_right(&self, f: &Self::Mor, b: &Self::Obj) -> Result<Self::Mor> {
        self.tensor_mor(f, &self.identity(b))
    }

    /// `id_A ⊗ g`
    fn whisker_left(&self, a: &Self::Obj, g: &Self::Mor) -> Result<Self::Mor> {
        self.tensor_mor(&self.identity(a), g)
    }
}

/// Candidate inverses for the coherence data of a structure.
pub trait CoherenceInverses<S: SkewMonoidal> {
    /// `(A⊗B)⊗C → A⊗(B⊗C)`
    fn assoc_inv(&self, s: &S, a: &S::Obj, b: &S::Obj, c: &S::Obj) -> Result<S::Mor>;
    /// `I⊗A → A`
    fn lunit_inv(&self, s: &S, a: &S::Obj) -> Result<S::Mor>;
    /// `A → A⊗I`
    fn runit_inv(&self, s: &S, a: &S::Obj) -> Result<S::Mor>;
}

/// Identities as inverse candidates; right for strict structures.
#[derive(Debug, Clone, Copy, Default)]
pub struct IdentityInverses;

impl<S: SkewMonoidal> CoherenceInverses<S> for IdentityInverses {
    fn assoc_inv(&self, s: &S, a: &S::Obj, b: &S::Obj, c: &S::Obj) -> Result<S::Mor> {
        Ok(s.identity(&s.tensor3l(a, b, c)))
    }

    fn lunit_inv(&self, s: &S, a: &S::Obj) -> Result<S::Mor> {
        Ok(s.identity(&s.tensor_obj(&s.unit(), a)))
    }

    fn runit_inv(&self, s: &S, a: &S::Obj) -> Result<S::Mor> {
        Ok(s.identity(a))
    }
}

/// No inverses at all.
#[derive(Debug, Clone, Copy, Default)]
pub struct NoInverses;

impl<S: SkewMonoidal> CoherenceInverses<S> for NoInverses {
    fn assoc_inv(&self, _: &S, a: &S::Obj, b: &S::Obj, c: &S::Obj) -> Result<S::Mor> {
        Err(Error::MissingWitness(format!("assoc inverse at {a:?}, {b:?}, {c:?}")))
    }

    fn lunit_inv(&self, _: &S, a: &S::Obj) -> Result<S::Mor> {
        Err(Error::MissingWitness(format!("left unitor inverse at {a:?}")))
    }

    fn runit_inv(&self, _: &S, a: &S::Obj) -> Result<S::Mor> {
        Err(Error::MissingWitness(format!("right unitor inverse at {a:?}")))
    }
}

/// The opposite of a monoidal category, with coherence data taken from the
/// inverses `W` of the original.
#[derive(Debug, Clone, Copy)]
pub struct OppositeMonoidal<S, W> {
    pub cat: Opposite<S>,
    pub inverses: W,
}

impl<S, W> OppositeMonoidal<S, W> {
    pub fn new(inner: S, inverses: W) -> Self {
        OppositeMonoidal {
            cat: Opposite { inner },
            inverses,
        }
    }
}

impl<S: SkewMonoidal, W> Category for OppositeMonoidal<S, W> {
    type Obj = S::Obj;
    type Mor = Op<S::Mor>;

    fn source(&self, f: &Self::Mor) -> S::Obj {
        self.cat.source(f)
    }
    fn target(&self, f: &Self::Mor) -> S::Obj {
        self.cat.target(f)
    }
    fn identity(&self, a: &S::Obj) -> Self::Mor {
        self.cat.identity(a)
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.cat.compose(f, g)
    }
    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        self.cat.mor_eq(f, g)
    }
    fn is_morphism(&self, f: &Self::Mor) -> bool {
        self.cat.is_morphism(f)
    }
    fn hom(&self, a: &S::Obj, b: &S::Obj) -> Result<Vec<Self::Mor>> {
        self.cat.hom(a, b)
    }
}

impl<S: SkewMonoidal, W: CoherenceInverses<S>> SkewMonoidal for OppositeMonoidal<S, W> {
    fn tensor_obj(&self, a: &S::Obj, b: &S::Obj) -> S::Obj {
        self.cat.inner.tensor_obj(a, b)
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.cat.inner.tensor_mor(&f.0, &g.0).map(Op)
    }
    fn unit(&self) -> S::Obj {
        self.cat.inner.unit()
    }
    fn assoc(&self, a: &S::Obj, b: &S::Obj, c: &S::Obj) -> Result<Self::Mor> {
        self.inverses.assoc_inv(&self.cat.inner, a, b, c).map(Op)
    }
    fn lunit(&self, a: &S::Obj) -> Result<Self::Mor> {
        self.inverses.lunit_inv(&self.cat.inner, a).map(Op)
    }
    fn runit(&self, a: &S::Obj) -> Result<Self::Mor> {
        self.inverses.runit_inv(&self.cat.inner, a).map(Op)
    }
}

/// The coherence inverses of an opposite structure are the original data.
#[derive(Debug, Clone, Copy, Default)]
pub struct OppositeInverses;

impl<S: SkewMonoidal, W: CoherenceInverses<S>> CoherenceInverses<OppositeMonoidal<S, W>>
    for OppositeInverses
{
    fn assoc_inv(
        &self,
        s: &OppositeMonoidal<S, W>,
        a: &S::Obj,
        b: &S::Obj,
        c: &S::Obj,
    ) -> Result<Op<S::Mor>> {
        s.cat.inner.assoc(a, b, c).map(Op)
    }
    fn lunit_inv(&self, s: &OppositeMonoidal<S, W>, a: &S::Obj) -> Result<Op<S::Mor>> {
        s.cat.inner.lunit(a).map(Op)
    }
    fn runit_inv(&self, s: &OppositeMonoidal<S, W>, a: &S::Obj) -> Result<Op<S::Mor>> {
        s.cat.inner.runit(a).map(Op)
    }
}

pub(crate) fn diagram_laws() -> [(&'static str, &'static str); 5] {
    [
        (
            "pentagon",
            "α_{A,B,C⊗D} ; α_{A⊗B,C,D} = (A⊗α_{B,C,D}) ; α_{A,B⊗C,D} ; (α_{A,B,C}⊗D)",
        ),
        ("triangle-1", "λ_{A⊗B} ; α_{I,A,B} = λ_A ⊗ B"),
        ("triangle-2", "(A⊗λ_B) ; α_{A,I,B} ; (ρ_A⊗B) = id_{A⊗B}"),
        ("triangle-3", "α_{A,B,I} ; ρ_{A⊗B} = A⊗ρ_B"),
        ("unitor", "λ_I ; ρ_I = id_I"),
    ]
}

/// Pentagon, the three triangles, the unitor identity, component shapes,
/// naturality of `α, λ, ρ` and bifunctoriality of `⊗`, over the pool.
pub fn check_skew_laws<S: SkewMonoidal>(
    s: &S,
    pool: &Pool<S::Obj, S::Mor>,
    budget: &Budget,
) -> CheckReport {
    let mut report = CheckReport::new("skew monoidal laws", budget);
    let obs = &pool.objects;
    let n = obs.len();
    let i = s.unit();

    let mut shape = LawReport::new(
        "shape",
        "α : A⊗(B⊗C) → (A⊗B)⊗C, λ : A → I⊗A, ρ : A⊗I → A",
    );
    let (triples, ex3) = budget.tuples(&[n, n, n], "shape-assoc");
    shape.exhaustive = ex3;
    for t in &triples {
        let (a, b, c) = (&obs[t[0]], &obs[t[1]], &obs[t[2]]);
        shape.tick();
        expect_shape(
            s,
            &mut shape,
            || render(&[a, b, c]),
            "α",
            &s.assoc(a, b, c),
            &s.tensor3r(a, b, c),
            &s.tensor3l(a, b, c),
        );
    }
    for a in obs.iter().chain(core::iter::once(&i)) {
        shape.tick();
        expect_shape(s, &mut shape, || render(&[a]), "λ", &s.lunit(a), a, &s.tensor_obj(&i, a));
        shape.tick();
        expect_shape(s, &mut shape, || render(&[a]), "ρ", &s.runit(a), &s.tensor_obj(a, &i), a);
    }
    report.push(shape);

    let [pent, tri1, tri2, tri3, unitor] = diagram_laws();

    let mut law = LawReport::new(pent.0, pent.1);
    let (quads, ex) = budget.tuples(&[n, n, n, n], "pentagon");
    law.exhaustive = ex;
    for t in quads {
        let (a, b, c, d) = (&obs[t[0]], &obs[t[1]], &obs[t[2]], &obs[t[3]]);
        let ab = s.tensor_obj(a, b);
        let bc = s.tensor_obj(b, c);
        let cd = s.tensor_obj(c, d);
        let lhs = (|| chain(s, &[s.assoc(a, b, &cd)?, s.assoc(&ab, c, d)?]))();
        let rhs = (|| {
            chain(
                s,
                &[
                    s.whisker_left(a, &s.assoc(b, c, d)?)?,
                    s.assoc(a, &bc, d)?,
                    s.whisker_right(&s.assoc(a, b, c)?, d)?,
                ],
            )
        })();
        compare(s, &mut law, || render(&[a, b, c, d]), lhs, rhs);
    }
    report.push(law);

    let (pairs, ex2) = budget.tuples(&[n, n], "triangles");
    let mut l1 = LawReport::new(tri1.0, tri1.1);
    let mut l2 = LawReport::new(tri2.0, tri2.1);
    let mut l3 = LawReport::new(tri3.0, tri3.1);
    l1.exhaustive = ex2;
    l2.exhaustive = ex2;
    l3.exhaustive = ex2;
    for t in pairs {
        let (a, b) = (&obs[t[0]], &obs[t[1]]);
        let ab = s.tensor_obj(a, b);
        let inst = || render(&[a, b]);
        compare(
            s,
            &mut l1,
            inst,
            (|| chain(s, &[s.lunit(&ab)?, s.assoc(&i, a, b)?]))(),
            (|| s.whisker_right(&s.lunit(a)?, b))(),
        );
        compare(
            s,
            &mut l2,
            inst,
            (|| {
                chain(
                    s,
                    &[
                        s.whisker_left(a, &s.lunit(b)?)?,
                        s.assoc(a, &i, b)?,
                        s.whisker_right(&s.runit(a)?, b)?,
                    ],
                )
            })(),
            Ok(s.identity(&ab)),
        );
        compare(
            s,
            &mut l3,
            inst,
            (|| chain(s, &[s.assoc(a, b, &i)?, s.runit(&ab)?]))(),
            (|| s.whisker_left(a, &s.runit(b)?))(),
        );
    }
    report.push(l1);
    report.push(l2);
    report.push(l3);

    let mut u = LawReport::new(unitor.0, unitor.1);
    compare(
        s,
        &mut u,
        || render(&[&i]),
        (|| chain(s, &[s.lunit(&i)?, s.runit(&i)?]))(),
        Ok(s.identity(&i)),
    );
    report.push(u);

    report.extend(check_naturality_and_bifunctoriality(s, pool, budget));
    report
}

fn check_naturality_and_bifunctoriality<S: SkewMonoidal>(
    s: &S,
    pool: &Pool<S::Obj, S::Mor>,
    budget: &Budget,
) -> CheckReport {
    let mut report = CheckReport::new("naturality", budget);
    let obs = &pool.objects;
    let ms = &pool.morphisms;
    let i = s.unit();

    let mut ids = LawReport::new("tensor-identity", "id_A ⊗ id_B = id_{A⊗B}");
    let (pairs, ex) = budget.tuples(&[obs.len(), obs.len()], "tensor-identity");
    ids.exhaustive = ex;
    for t in pairs {
        let (a, b) = (&obs[t[0]], &obs[t[1]]);
        compare(
            s,
            &mut ids,
            || render(&[a, b]),
            s.tensor_mor(&s.identity(a), &s.identity(b)),
            Ok(s.identity(&s.tensor_obj(a, b))),
        );
    }
    report.push(ids);

    // interchange over composable pairs (f ; f') and (g ; g')
    let mut inter = LawReport::new("interchange", "(f;f') ⊗ (g;g') = (f⊗g) ; (f'⊗g')");
    let composable: Vec<(usize, usize)> = (0..ms.len())
        .flat_map(|x| (0..ms.len()).map(move |y| (x, y)))
        .filter(|&(x, y)| s.target(&ms[x]) == s.source(&ms[y]))
        .collect();
    let (quads, ex) = budget.tuples(&[composable.len(), composable.len()], "interchange");
    inter.exhaustive = ex;
    for t in quads {
        let (f, f2) = (&ms[composable[t[0]].0], &ms[composable[t[0]].1]);
        let (g, g2) = (&ms[composable[t[1]].0], &ms[composable[t[1]].1]);
        let lhs = (|| s.tensor_mor(&s.compose(f, f2)?, &s.compose(g, g2)?))();
        let rhs = (|| s.compose(&s.tensor_mor(f, g)?, &s.tensor_mor(f2, g2)?))();
        compare(s, &mut inter, || render(&[f, f2, g, g2]), lhs, rhs);
    }
    report.push(inter);

    let mut nat_a = LawReport::new("assoc-natural", "(f⊗(g⊗h)) ; α = α ; ((f⊗g)⊗h)");
    let (triples, ex) = budget.tuples(&[ms.len(), ms.len(), ms.len()], "assoc-natural");
    nat_a.exhaustive = ex;
    for t in triples {
        let (f, g, h) = (&ms[t[0]], &ms[t[1]], &ms[t[2]]);
        let lhs = (|| {
            let fgh = s.tensor_mor(f, &s.tensor_mor(g, h)?)?;
            let al = s.assoc(&s.target(f), &s.target(g), &s.target(h))?;
            s.compose(&fgh, &al)
        })();
        let rhs = (|| {
            let al = s.assoc(&s.source(f), &s.source(g), &s.source(h))?;
            let fgh = s.tensor_mor(&s.tensor_mor(f, g)?, h)?;
            s.compose(&al, &fgh)
        })();
        compare(s, &mut nat_a, || render(&[f, g, h]), lhs, rhs);
    }
    report.push(nat_a);

    let mut nat_u = LawReport::new("unitors-natural", "f ; λ = λ ; (I⊗f) and (f⊗I) ; ρ = ρ ; f");
    for f in ms {
        let (a, b) = (s.source(f), s.target(f));
        let inst = || render(&[f]);
        compare(
            s,
            &mut nat_u,
            inst,
            (|| s.compose(f, &s.lunit(&b)?))(),
            (|| s.compose(&s.lunit(&a)?, &s.whisker_left(&i, f)?))(),
        );
        compare(
            s,
            &mut nat_u,
            inst,
            (|| s.compose(&s.whisker_right(f, &i)?, &s.runit(&b)?))(),
            (|| s.compose(&s.runit(&a)?, f))(),
        );
    }
    report.push(nat_u);
    report
}

/// Two-sided invertibility of every `α, λ, ρ` component against the
/// candidates in `w`.
pub fn check_monoidal_invertibility<S: SkewMonoidal, W: CoherenceInverses<S>>(
    s: &S,
    w: &W,
    pool: &Pool<S::Obj, S::Mor>,
    budget: &Budget,
) -> CheckReport {
    let mut report = CheckReport::new("coherence invertibility", budget);
    let obs = &pool.objects;
    let n = obs.len();

    let mut la = LawReport::new("assoc-invertible", "α ; α⁻¹ = id and α⁻¹ ; α = id");
    let (triples, ex) = budget.tuples(&[n, n, n], "assoc-invertible");
    la.exhaustive = ex;
    for t in triples {
        let (a, b, c) = (&obs[t[0]], &obs[t[1]], &obs[t[2]]);
        let inst = || render(&[a, b, c]);
        inverse_pair(
            s,
            &mut la,
            inst,
            s.assoc(a, b, c),
            w.assoc_inv(s, a, b, c),
            &s.tensor3r(a, b, c),
            &s.tensor3l(a, b, c),
        );
    }
    report.push(la);

    let i = s.unit();
    let mut ll = LawReport::new("lunit-invertible", "λ ; λ⁻¹ = id and λ⁻¹ ; λ = id");
    let mut lr = LawReport::new("runit-invertible", "ρ ; ρ⁻¹ = id and ρ⁻¹ ; ρ = id");
    for a in obs {
        let inst = || render(&[a]);
        inverse_pair(s, &mut ll, inst, s.lunit(a), w.lunit_inv(s, a), a, &s.tensor_obj(&i, a));
        inverse_pair(s, &mut lr, inst, s.runit(a), w.runit_inv(s, a), &s.tensor_obj(a, &i), a);
    }
    report.push(ll);
    report.push(lr);
    report
}

/// `f : x → y` and candidate `g : y → x` compose to identities both ways.
pub(crate) fn inverse_pair<C: Category>(
    cat: &C,
    law: &mut LawReport,
    inst: impl Fn() -> Vec<String>,
    f: Result<C::Mor>,
    g: Result<C::Mor>,
    x: &C::Obj,
    y: &C::Obj,
) -> bool {
    let g = match g {
        Ok(g) => g,
        Err(e) => {
            law.tick();
            let kind = match e {
                Error::MissingWitness(_) => crate::report::FailureKind::MissingWitness,
                _ => crate::report::FailureKind::IllTyped,
            };
            law.fail_with(kind, inst(), format!("{e}"));
            return false;
        }
    };
    if !expect_shape(cat, law, &inst, "component", &f, x, y) {
        law.tick();
        return false;
    }
    if !expect_shape(cat, law, &inst, "inverse candidate", &Ok(g.clone()), y, x) {
        law.tick();
        return false;
    }
    let f = f.expect("shape checked");
    let a = compare(cat, law, &inst, cat.compose(&f, &g), Ok(cat.identity(x)));
    let b = compare(cat, law, &inst, cat.compose(&g, &f), Ok(cat.identity(y)));
    a && b
}

/// The terminal category with its unique monoidal structure.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Terminal;

impl Category for Terminal {
    type Obj = ();
    type Mor = ();

    fn source(&self, _: &()) {}
    fn target(&self, _: &()) {}
    fn identity(&self, _: &()) {}
    fn compose(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn hom(&self, _: &(), _: &()) -> Result<Vec<()>> {
        Ok(alloc::vec![()])
    }
}

impl SkewMonoidal for Terminal {
    fn tensor_obj(&self, _: &(), _: &()) {}
    fn tensor_mor(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn unit(&self) {}
    fn assoc(&self, _: &(), _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn lunit(&self, _: &()) -> Result<()> {
        Ok(())
    }
    fn runit(&self, _: &()) -> Result<()> {
        Ok(())
    }
}
