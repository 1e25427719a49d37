//! Categories, functors and natural transformations over enumerable data.
//!
//! Composition is written in diagrammatic order everywhere: `compose(f, g)`
//! is "f then g" and requires `target(f) == source(g)`.

mod finite;
mod product;

pub use finite::{
    opposite_category, product_category, FiniteCategory, FunctorData, MorphismRecord,
    NatTransData,
};
pub use product::{Op, Opposite, Product, ProjectLeft, ProjectRight};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::report::{Budget, CheckReport, Failure, FailureKind, LawReport, Witness};

pub trait Category {
    type Obj: Clone + PartialEq + Debug;
    type Mor: Clone + PartialEq + Debug;

    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;
    fn identity(&self, a: &Self::Obj) -> Self::Mor;

    /// `f ; g`. Fails with [`Error::IllTyped`] unless `target(f) == source(g)`.
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    fn mor_eq(&self, f: &Self::Mor, g: &Self::Mor) -> bool {
        f == g
    }

    /// Whether a datum with the right endpoints really is a morphism (for
    /// instances whose payloads can be built before being validated).
    fn is_morphism(&self, _f: &Self::Mor) -> bool {
        true
    }

    /// All morphisms `a -> b`.
    fn hom(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Vec<Self::Mor>> {
        Err(Error::NotEnumerable(format!("{a:?} -> {b:?}")))
    }
}

/// Complete, duplicate-free list of morphisms `a -> b`.
pub fn enumerate_hom<C: Category>(cat: &C, a: &C::Obj, b: &C::Obj) -> Result<Vec<C::Mor>> {
    let raw = cat.hom(a, b)?;
    let mut out: Vec<C::Mor> = Vec::with_capacity(raw.len());
    for f in raw {
        if cat.source(&f) != *a || cat.target(&f) != *b {
            return Err(Error::Shape(format!("hom({a:?}, {b:?}) listed {f:?}")));
        }
        if !out.iter().any(|g| cat.mor_eq(g, &f)) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Composes a non-empty chain left to right.
pub fn chain<C: Category>(cat: &C, fs: &[C::Mor]) -> Result<C::Mor> {
    let (first, rest) = fs
        .split_first()
        .ok_or_else(|| Error::IllTyped(String::from("empty composite")))?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| cat.compose(&acc, f))
}

/// Objects and morphisms that a law check quantifies over.
#[derive(Debug, Clone)]
pub struct Pool<O, M> {
    pub objects: Vec<O>,
    pub morphisms: Vec<M>,
}

impl<O, M> Pool<O, M> {
    pub fn new(objects: Vec<O>, morphisms: Vec<M>) -> Self {
        Pool { objects, morphisms }
    }

    pub fn objects(objects: Vec<O>) -> Self {
        Pool {
            objects,
            morphisms: Vec::new(),
        }
    }
}

/// Every morphism between pool objects, up to `cap` per hom set.
pub fn hom_closure<C: Category>(cat: &C, objects: &[C::Obj], cap: usize) -> Vec<C::Mor> {
    let mut out = Vec::new();
    for a in objects {
        for b in objects {
            if let Ok(h) = enumerate_hom(cat, a, b) {
                out.extend(h.into_iter().take(cap));
            }
        }
    }
    out
}

/// Records `lhs == rhs` (as parallel morphisms) into `law`.
pub(crate) fn compare<C: Category>(
    cat: &C,
    law: &mut LawReport,
    inst: impl FnOnce() -> Vec<String>,
    lhs: Result<C::Mor>,
    rhs: Result<C::Mor>,
) -> bool {
    law.tick();
    let (l, r) = match (lhs, rhs) {
        (Ok(l), Ok(r)) => (l, r),
        (Err(e), _) | (_, Err(e)) => {
            let kind = match e {
                Error::Shape(_) => FailureKind::Shape,
                Error::MissingWitness(_) => FailureKind::MissingWitness,
                _ => FailureKind::IllTyped,
            };
            law.fail_with(kind, inst(), format!("{e}"));
            return false;
        }
    };
    let (ls, lt, rs, rt) = (cat.source(&l), cat.target(&l), cat.source(&r), cat.target(&r));
    if ls != rs || lt != rt {
        law.fail(Failure {
            kind: FailureKind::Shape,
            instantiation: inst(),
            lhs: Some(Witness::of(&l)),
            rhs: Some(Witness::of(&r)),
            message: format!("sides are not parallel: {ls:?} -> {lt:?} vs {rs:?} -> {rt:?}"),
        });
        return false;
    }
    if !cat.mor_eq(&l, &r) {
        law.fail(Failure {
            kind: FailureKind::Law,
            instantiation: inst(),
            lhs: Some(Witness::of(&l)),
            rhs: Some(Witness::of(&r)),
            message: String::from("diagram does not commute"),
        });
        return false;
    }
    true
}

/// Checks that a structure component has the stated endpoints and is a
/// genuine morphism.
pub(crate) fn expect_shape<C: Category>(
    cat: &C,
    law: &mut LawReport,
    inst: impl FnOnce() -> Vec<String>,
    what: &str,
    f: &Result<C::Mor>,
    src: &C::Obj,
    tgt: &C::Obj,
) -> bool {
    let f = match f {
        Ok(f) => f,
        Err(e) => {
            law.fail_with(FailureKind::IllTyped, inst(), format!("{what}: {e}"));
            return false;
        }
    };
    let (s, t) = (cat.source(f), cat.target(f));
    if s != *src || t != *tgt {
        law.fail(Failure {
            kind: FailureKind::Shape,
            instantiation: inst(),
            lhs: Some(Witness::of(f)),
            rhs: None,
            message: format!("{what}: expected {src:?} -> {tgt:?}, found {s:?} -> {t:?}"),
        });
        return false;
    }
    if !cat.is_morphism(f) {
        law.fail(Failure {
            kind: FailureKind::NotAMorphism,
            instantiation: inst(),
            lhs: Some(Witness::of(f)),
            rhs: None,
            message: format!("{what} is not a morphism"),
        });
        return false;
    }
    true
}

/// Identity and associativity laws over the pool. Associativity is checked on
/// composable triples of pool morphisms, all of them when their number is
/// within budget and a seeded sample otherwise.
pub fn check_category_axioms<C: Category>(
    cat: &C,
    pool: &Pool<C::Obj, C::Mor>,
    budget: &Budget,
) -> CheckReport {
    let mut report = CheckReport::new("category axioms", budget);
    let ms = &pool.morphisms;

    let mut wf = LawReport::new("well-formed", "f : A -> B is a morphism; id_A : A -> A");
    for f in ms {
        let (a, b) = (cat.source(f), cat.target(f));
        expect_shape(cat, &mut wf, || crate::report::render(&[f]), "morphism", &Ok(f.clone()), &a, &b);
        wf.tick();
    }
    for a in &pool.objects {
        let id = cat.identity(a);
        expect_shape(cat, &mut wf, || crate::report::render(&[a]), "identity", &Ok(id), a, a);
        wf.tick();
    }
    report.push(wf);

    let mut unit = LawReport::new("identity", "id_A ; f = f = f ; id_B");
    for f in ms {
        let (a, b) = (cat.source(f), cat.target(f));
        let inst = || crate::report::render(&[f]);
        compare(cat, &mut unit, inst, cat.compose(&cat.identity(&a), f), Ok(f.clone()));
        compare(cat, &mut unit, inst, cat.compose(f, &cat.identity(&b)), Ok(f.clone()));
    }
    report.push(unit);

    let mut assoc = LawReport::new("associativity", "(f ; g) ; h = f ; (g ; h)");
    // successors[i]: pool morphisms composable after ms[i]
    let successors: Vec<Vec<usize>> = ms
        .iter()
        .map(|f| {
            let t = cat.target(f);
            (0..ms.len()).filter(|&j| cat.source(&ms[j]) == t).collect()
        })
        .collect();
    let total: usize = successors
        .iter()
        .map(|s| s.iter().map(|&j| successors[j].len()).sum::<usize>())
        .sum();
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    if total <= budget.max_tuples {
        for (i, si) in successors.iter().enumerate() {
            for &j in si {
                for &k in &successors[j] {
                    triples.push((i, j, k));
                }
            }
        }
    } else {
        assoc.exhaustive = false;
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        let starts: Vec<usize> = (0..ms.len())
            .filter(|&i| successors[i].iter().any(|&j| !successors[j].is_empty()))
            .collect();
        for _ in 0..budget.max_tuples {
            let i = starts[rng.gen_range(0..starts.len())];
            let js: Vec<usize> = successors[i]
                .iter()
                .copied()
                .filter(|&j| !successors[j].is_empty())
                .collect();
            let j = js[rng.gen_range(0..js.len())];
            let k = successors[j][rng.gen_range(0..successors[j].len())];
            triples.push((i, j, k));
        }
    }
    for (i, j, k) in triples {
        let (f, g, h) = (&ms[i], &ms[j], &ms[k]);
        let inst = || crate::report::render(&[f, g, h]);
        let fg = cat.compose(f, g);
        if let Ok(fg) = &fg {
            if cat.source(fg) != cat.source(f) || cat.target(fg) != cat.target(g) {
                assoc.fail(Failure {
                    kind: FailureKind::Shape,
                    instantiation: inst(),
                    lhs: Some(Witness::of(fg)),
                    rhs: None,
                    message: String::from("composite has wrong endpoints"),
                });
                continue;
            }
        }
        let lhs = fg.and_then(|fg| cat.compose(&fg, h));
        let rhs = cat.compose(g, h).and_then(|gh| cat.compose(f, &gh));
        compare(cat, &mut assoc, inst, lhs, rhs);
    }
    report.push(assoc);
    report
}

pub trait Functor {
    type Source: Category;
    type Target: Category;

    fn source_category(&self) -> &Self::Source;
    fn target_category(&self) -> &Self::Target;
    fn on_obj(&self, a: &<Self::Source as Category>::Obj) -> <Self::Target as Category>::Obj;
    fn on_mor(&self, f: &<Self::Source as Category>::Mor) -> <Self::Target as Category>::Mor;
}

type SObj<F> = <<F as Functor>::Source as Category>::Obj;
type SMor<F> = <<F as Functor>::Source as Category>::Mor;

/// Endpoint, identity and composition preservation over the pool.
pub fn check_functor<F: Functor>(
    functor: &F,
    pool: &Pool<SObj<F>, SMor<F>>,
    budget: &Budget,
) -> CheckReport {
    let src = functor.source_category();
    let tgt = functor.target_category();
    let mut report = CheckReport::new("functor", budget);

    let mut ends = LawReport::new("endpoints", "F f : F A -> F B");
    for f in &pool.morphisms {
        let img = functor.on_mor(f);
        let (a, b) = (functor.on_obj(&src.source(f)), functor.on_obj(&src.target(f)));
        expect_shape(tgt, &mut ends, || crate::report::render(&[f]), "F f", &Ok(img), &a, &b);
        ends.tick();
    }
    report.push(ends);

    let mut ids = LawReport::new("identity", "F id_A = id_{F A}");
    for a in &pool.objects {
        compare(
            tgt,
            &mut ids,
            || crate::report::render(&[a]),
            Ok(functor.on_mor(&src.identity(a))),
            Ok(tgt.identity(&functor.on_obj(a))),
        );
    }
    report.push(ids);

    let mut comp = LawReport::new("composition", "F (f ; g) = F f ; F g");
    let ms = &pool.morphisms;
    let (pairs, exhaustive) = budget.tuples(&[ms.len(), ms.len()], "functor-composition");
    comp.exhaustive = exhaustive;
    for p in pairs {
        let (f, g) = (&ms[p[0]], &ms[p[1]]);
        if src.target(f) != src.source(g) {
            continue;
        }
        compare(
            tgt,
            &mut comp,
            || crate::report::render(&[f, g]),
            src.compose(f, g).map(|fg| functor.on_mor(&fg)),
            tgt.compose(&functor.on_mor(f), &functor.on_mor(g)),
        );
    }
    report.push(comp);
    report
}
