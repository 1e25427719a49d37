//! Weak and strong actions of one skew monoidal category on another.
//!
//! An action assigns to each `X` a lax monoidal endofunctor `(-)^X` of `C`
//! (with `φ^X_{B,C} : B^X ⊗ C^X → (B⊗C)^X` and `φ^X : I → I^X`), to each
//! `f : X → Y` a monoidal transformation `(-)^f`, and carries oplax data
//! `ψ^{X,Y}_C : C^{X⊗Y} → (C^X)^Y` and `ψ_C : C^I → C`.

mod monoid;

pub use monoid::{
    all_actions, all_monoids, lift_monoid_action, lift_monoid_action_unchecked, DiscreteMonoid,
    LiftedAction, Monoid, MonoidAction,
};

use alloc::string::String;
use alloc::vec::Vec;

use crate::cat::{chain, compare, Category, Pool};
use crate::error::Result;
use crate::report::{render, render_one, Budget, CheckReport, LawReport};
use crate::skew::{
    check_lax_monoidal_functor, check_monoidal_nat, inverse_pair, Composite, FnNat,
    IdentityFunctor, LaxMonoidalFunctor, SkewMonoidal,
};

pub type XObj<A> = <<A as WeakAction>::X as Category>::Obj;
pub type XMor<A> = <<A as WeakAction>::X as Category>::Mor;
pub type CObj<A> = <<A as WeakAction>::C as Category>::Obj;
pub type CMor<A> = <<A as WeakAction>::C as Category>::Mor;

pub trait WeakAction {
    type X: SkewMonoidal;
    type C: SkewMonoidal;

    fn acting(&self) -> &Self::X;
    fn acted(&self) -> &Self::C;
    /// `C^X`
    fn act_obj(&self, c: &CObj<Self>, x: &XObj<Self>) -> CObj<Self>;
    /// `g^X : B^X → C^X` for `g : B → C`
    fn act_mor(&self, g: &CMor<Self>, x: &XObj<Self>) -> Result<CMor<Self>>;
    /// `C^f : C^X → C^Y` for `f : X → Y`
    fn act_x_mor(&self, c: &CObj<Self>, f: &XMor<Self>) -> Result<CMor<Self>>;
    /// `φ^X_{B,C} : B^X ⊗ C^X → (B⊗C)^X`
    fn phi2(&self, x: &XObj<Self>, b: &CObj<Self>, c: &CObj<Self>) -> Result<CMor<Self>>;
    /// `φ^X : I → I^X`
    fn phi0(&self, x: &XObj<Self>) -> Result<CMor<Self>>;
    /// `ψ^{X,Y}_C : C^{X⊗Y} → (C^X)^Y`
    fn psi2(&self, x: &XObj<Self>, y: &XObj<Self>, c: &CObj<Self>) -> Result<CMor<Self>>;
    /// `ψ_C : C^I → C`
    fn psi0(&self, c: &CObj<Self>) -> Result<CMor<Self>>;
}

/// A weak action whose `φ` and `ψ` components come with inverse candidates.
pub trait StrongAction: WeakAction {
    fn phi2_inv(&self, x: &XObj<Self>, b: &CObj<Self>, c: &CObj<Self>) -> Result<CMor<Self>>;
    fn phi0_inv(&self, x: &XObj<Self>) -> Result<CMor<Self>>;
    fn psi2_inv(&self, x: &XObj<Self>, y: &XObj<Self>, c: &CObj<Self>) -> Result<CMor<Self>>;
    fn psi0_inv(&self, c: &CObj<Self>) -> Result<CMor<Self>>;
}

impl<A: WeakAction + ?Sized> WeakAction for &A {
    type X = A::X;
    type C = A::C;

    fn acting(&self) -> &A::X {
        (**self).acting()
    }
    fn acted(&self) -> &A::C {
        (**self).acted()
    }
    fn act_obj(&self, c: &CObj<A>, x: &XObj<A>) -> CObj<A> {
        (**self).act_obj(c, x)
    }
    fn act_mor(&self, g: &CMor<A>, x: &XObj<A>) -> Result<CMor<A>> {
        (**self).act_mor(g, x)
    }
    fn act_x_mor(&self, c: &CObj<A>, f: &XMor<A>) -> Result<CMor<A>> {
        (**self).act_x_mor(c, f)
    }
    fn phi2(&self, x: &XObj<A>, b: &CObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        (**self).phi2(x, b, c)
    }
    fn phi0(&self, x: &XObj<A>) -> Result<CMor<A>> {
        (**self).phi0(x)
    }
    fn psi2(&self, x: &XObj<A>, y: &XObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        (**self).psi2(x, y, c)
    }
    fn psi0(&self, c: &CObj<A>) -> Result<CMor<A>> {
        (**self).psi0(c)
    }
}

impl<A: StrongAction + ?Sized> StrongAction for &A {
    fn phi2_inv(&self, x: &XObj<A>, b: &CObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        (**self).phi2_inv(x, b, c)
    }
    fn phi0_inv(&self, x: &XObj<A>) -> Result<CMor<A>> {
        (**self).phi0_inv(x)
    }
    fn psi2_inv(&self, x: &XObj<A>, y: &XObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        (**self).psi2_inv(x, y, c)
    }
    fn psi0_inv(&self, c: &CObj<A>) -> Result<CMor<A>> {
        (**self).psi0_inv(c)
    }
}

/// Pools for the acting and the acted-upon category.
#[derive(Debug, Clone)]
pub struct ActionPool<XO, XM, CO, CM> {
    pub x: Pool<XO, XM>,
    pub c: Pool<CO, CM>,
}

pub type PoolOf<A> = ActionPool<XObj<A>, XMor<A>, CObj<A>, CMor<A>>;

/// `(-)^X` as a lax monoidal endofunctor of `C`.
pub struct ActAt<'a, A: WeakAction> {
    pub action: &'a A,
    pub x: XObj<A>,
}

impl<A: WeakAction> LaxMonoidalFunctor for ActAt<'_, A> {
    type Source = A::C;
    type Target = A::C;

    fn source_category(&self) -> &A::C {
        self.action.acted()
    }
    fn target_category(&self) -> &A::C {
        self.action.acted()
    }
    fn on_obj(&self, c: &CObj<A>) -> CObj<A> {
        self.action.act_obj(c, &self.x)
    }
    fn on_mor(&self, g: &CMor<A>) -> Result<CMor<A>> {
        self.action.act_mor(g, &self.x)
    }
    fn mult(&self, b: &CObj<A>, c: &CObj<A>) -> Result<CMor<A>> {
        self.action.phi2(&self.x, b, c)
    }
    fn unit_map(&self) -> Result<CMor<A>> {
        self.action.phi0(&self.x)
    }
}

/// The twelve coherence families, in order.
pub const FAMILIES: [(&str, &str); 12] = [
    (
        "phi-assoc",
        "α_{A^X,B^X,C^X} ; (φ_{A,B}⊗C^X) ; φ_{A⊗B,C} = (A^X⊗φ_{B,C}) ; φ_{A,B⊗C} ; (α_{A,B,C})^X",
    ),
    ("phi-left-unit", "λ_{C^X} ; (φ^X⊗C^X) ; φ_{I,C} = (λ_C)^X"),
    ("phi-right-unit", "(C^X⊗φ^X) ; φ_{C,I} ; (ρ_C)^X = ρ_{C^X}"),
    ("f-mult", "(B^f⊗C^f) ; φ^Y_{B,C} = φ^X_{B,C} ; (B⊗C)^f"),
    ("f-unit", "φ^X ; I^f = φ^Y"),
    (
        "psi-assoc",
        "C^{α_{X,Y,Z}} ; ψ^{X⊗Y,Z}_C ; (ψ^{X,Y}_C)^Z = ψ^{X,Y⊗Z}_C ; ψ^{Y,Z}_{C^X}",
    ),
    ("psi-left-unit", "C^{λ_X} ; ψ^{I,X}_C ; (ψ_C)^X = id_{C^X}"),
    ("psi-right-unit", "ψ^{X,I}_C ; ψ_{C^X} = C^{ρ_X}"),
    (
        "psi2-mult",
        "(ψ_B⊗ψ_C) ; φ^Y_{B^X,C^X} ; (φ^X_{B,C})^Y = φ^{X⊗Y}_{B,C} ; ψ_{B⊗C}",
    ),
    ("psi2-unit", "φ^Y ; (φ^X)^Y = φ^{X⊗Y} ; ψ_I"),
    ("psi0-mult", "ψ_B⊗ψ_C = φ^I_{B,C} ; ψ_{B⊗C}"),
    ("psi0-unit", "φ^I ; ψ_I = id_I"),
];

/// Functoriality and naturality conditions checked alongside the families.
pub const AUXILIARY: [(&str, &str); 8] = [
    ("act-shape", "typing of g^X, C^f, φ, ψ"),
    ("act-functor", "(-)^X preserves identities and composition"),
    ("phi-natural", "(g^X⊗h^X) ; φ = φ ; (g⊗h)^X"),
    ("f-natural", "g^X ; C^f = B^f ; g^Y"),
    ("gamma-functor", "C^{id} = id and C^{f;g} = C^f ; C^g"),
    ("psi2-natural", "g^{X⊗Y} ; ψ = ψ ; (g^X)^Y"),
    ("psi2-natural-x", "C^{f⊗g} ; ψ^{X',Y'} = ψ^{X,Y} ; (C^f)^Y ; (C^{X'})^g"),
    ("psi0-natural", "g^I ; ψ = ψ ; g"),
];

fn diagram_of(name: &str) -> &'static str {
    FAMILIES
        .iter()
        .chain(AUXILIARY.iter())
        .find(|(n, _)| *n == name)
        .map(|(_, d)| *d)
        .unwrap_or("")
}

/// Accumulates sub-reports under family names.
struct Families {
    laws: Vec<LawReport>,
}

impl Families {
    fn new() -> Self {
        let laws = FAMILIES
            .iter()
            .chain(AUXILIARY.iter())
            .map(|(n, d)| LawReport::new(*n, *d))
            .collect();
        Families { laws }
    }

    fn get(&mut self, name: &str) -> &mut LawReport {
        let i = self
            .laws
            .iter()
            .position(|l| l.law == name)
            .unwrap_or_else(|| {
                self.laws.push(LawReport::new(name, diagram_of(name)));
                self.laws.len() - 1
            });
        &mut self.laws[i]
    }

    fn absorb(&mut self, sub: CheckReport, rename: &[(&str, &str)], context: &[String]) {
        for law in sub.laws {
            let target = rename
                .iter()
                .find(|(from, _)| *from == law.law)
                .map(|(_, to)| *to)
                .unwrap_or("act-shape");
            self.get(target).absorb(law, context);
        }
    }

    fn finish(self, subject: &str, budget: &Budget) -> CheckReport {
        let mut report = CheckReport::new(subject, budget);
        for law in self.laws {
            report.push(law);
        }
        report
    }
}

/// All twelve families plus functoriality and naturality, over the pools.
pub fn check_weak_action<A: WeakAction>(
    a: &A,
    pool: &PoolOf<A>,
    budget: &Budget,
) -> CheckReport {
    let xs = a.acting();
    let cs = a.acted();
    let xo = &pool.x.objects;
    let co = &pool.c.objects;
    let mut fam = Families::new();

    // (-)^X lax monoidal, families 1-3
    for x in xo {
        let f = ActAt { action: a, x: x.clone() };
        let sub = check_lax_monoidal_functor(&f, &pool.c, budget);
        fam.absorb(
            sub,
            &[
                ("lax-shape", "act-shape"),
                ("functor-identity", "act-functor"),
                ("functor-composition", "act-functor"),
                ("lax-natural", "phi-natural"),
                ("lax-assoc", "phi-assoc"),
                ("lax-left-unit", "phi-left-unit"),
                ("lax-right-unit", "phi-right-unit"),
            ],
            &[render_one(x)],
        );
    }

    // (-)^f monoidal, families 4-5
    for f in &pool.x.morphisms {
        let from = ActAt { action: a, x: xs.source(f) };
        let to = ActAt { action: a, x: xs.target(f) };
        let nat = FnNat {
            from: &from,
            to: &to,
            component: |c: &CObj<A>| a.act_x_mor(c, f),
        };
        fam.absorb(
            check_monoidal_nat(&nat, &pool.c, budget),
            &[
                ("nat-shape", "act-shape"),
                ("naturality", "f-natural"),
                ("nat-mult", "f-mult"),
                ("nat-unit", "f-unit"),
            ],
            &[render_one(f)],
        );
    }

    // Γ functorial
    {
        let law = fam.get("gamma-functor");
        for x in xo {
            for c in co {
                compare(
                    cs,
                    law,
                    || inst![x, c],
                    a.act_x_mor(c, &xs.identity(x)),
                    Ok(cs.identity(&a.act_obj(c, x))),
                );
            }
        }
        let ms = &pool.x.morphisms;
        let (triples, ex) = budget.tuples(&[ms.len(), ms.len(), co.len()], "gamma-functor");
        law.exhaustive &= ex;
        for t in triples {
            let (f, g, c) = (&ms[t[0]], &ms[t[1]], &co[t[2]]);
            if xs.target(f) != xs.source(g) {
                continue;
            }
            compare(
                cs,
                law,
                || render(&[f, g]),
                xs.compose(f, g).and_then(|fg| a.act_x_mor(c, &fg)),
                (|| cs.compose(&a.act_x_mor(c, f)?, &a.act_x_mor(c, g)?))(),
            );
        }
    }

    // ψ^{X,Y} monoidal, families 9-10
    let (xy, _) = budget.tuples(&[xo.len(), xo.len()], "psi2-pairs");
    for p in &xy {
        let (x, y) = (&xo[p[0]], &xo[p[1]]);
        let from = ActAt { action: a, x: xs.tensor_obj(x, y) };
        let fx = ActAt { action: a, x: x.clone() };
        let fy = ActAt { action: a, x: y.clone() };
        let to = Composite { first: &fx, second: &fy };
        let nat = FnNat {
            from: &from,
            to: &to,
            component: |c: &CObj<A>| a.psi2(x, y, c),
        };
        fam.absorb(
            check_monoidal_nat(&nat, &pool.c, budget),
            &[
                ("nat-shape", "act-shape"),
                ("naturality", "psi2-natural"),
                ("nat-mult", "psi2-mult"),
                ("nat-unit", "psi2-unit"),
            ],
            &[render_one(x), render_one(y)],
        );
    }

    // ψ monoidal, families 11-12
    {
        let from = ActAt { action: a, x: xs.unit() };
        let to = IdentityFunctor(cs);
        let nat = FnNat {
            from: &from,
            to: &to,
            component: |c: &CObj<A>| a.psi0(c),
        };
        fam.absorb(
            check_monoidal_nat(&nat, &pool.c, budget),
            &[
                ("nat-shape", "act-shape"),
                ("naturality", "psi0-natural"),
                ("nat-mult", "psi0-mult"),
                ("nat-unit", "psi0-unit"),
            ],
            &[],
        );
    }

    // ψ natural in X and Y
    {
        let ms = &pool.x.morphisms;
        let law = fam.get("psi2-natural-x");
        let (t, ex) = budget.tuples(&[ms.len(), ms.len(), co.len()], "psi2-natural-x");
        law.exhaustive &= ex;
        for t in t {
            let (f, g, c) = (&ms[t[0]], &ms[t[1]], &co[t[2]]);
            let (x, y, x2, y2) = (xs.source(f), xs.source(g), xs.target(f), xs.target(g));
            let lhs = (|| {
                chain(cs, &[a.act_x_mor(c, &xs.tensor_mor(f, g)?)?, a.psi2(&x2, &y2, c)?])
            })();
            let rhs = (|| {
                chain(
                    cs,
                    &[
                        a.psi2(&x, &y, c)?,
                        a.act_mor(&a.act_x_mor(c, f)?, &y)?,
                        a.act_x_mor(&a.act_obj(c, &x2), g)?,
                    ],
                )
            })();
            compare(cs, law, || inst![f, g, c], lhs, rhs);
        }
    }

    // families 6-8
    {
        let (t, ex) = budget.tuples(&[xo.len(), xo.len(), xo.len(), co.len()], "psi-assoc");
        let law = fam.get("psi-assoc");
        law.exhaustive &= ex;
        for t in t {
            let (x, y, z, c) = (&xo[t[0]], &xo[t[1]], &xo[t[2]], &co[t[3]]);
            let xy = xs.tensor_obj(x, y);
            let yz = xs.tensor_obj(y, z);
            let cx = a.act_obj(c, x);
            let lhs = (|| {
                chain(
                    cs,
                    &[
                        a.act_x_mor(c, &xs.assoc(x, y, z)?)?,
                        a.psi2(&xy, z, c)?,
                        a.act_mor(&a.psi2(x, y, c)?, z)?,
                    ],
                )
            })();
            let rhs = (|| chain(cs, &[a.psi2(x, &yz, c)?, a.psi2(y, z, &cx)?]))();
            compare(cs, law, || inst![x, y, z, c], lhs, rhs);
        }
    }
    {
        let i = xs.unit();
        let (t, ex) = budget.tuples(&[xo.len(), co.len()], "psi-units");
        for t in t {
            let (x, c) = (&xo[t[0]], &co[t[1]]);
            let cx = a.act_obj(c, x);
            let inst = || inst![x, c];
            let law = fam.get("psi-left-unit");
            law.exhaustive &= ex;
            let lhs = (|| {
                chain(
                    cs,
                    &[
                        a.act_x_mor(c, &xs.lunit(x)?)?,
                        a.psi2(&i, x, c)?,
                        a.act_mor(&a.psi0(c)?, x)?,
                    ],
                )
            })();
            compare(cs, law, inst, lhs, Ok(cs.identity(&cx)));
            let law = fam.get("psi-right-unit");
            law.exhaustive &= ex;
            let lhs = (|| chain(cs, &[a.psi2(x, &i, c)?, a.psi0(&cx)?]))();
            compare(cs, law, inst, lhs, xs.runit(x).and_then(|r| a.act_x_mor(c, &r)));
        }
    }

    fam.finish("weak action", budget)
}

/// [`check_weak_action`] plus two-sided invertibility of every `φ`, `ψ`
/// component against the supplied candidates.
pub fn check_strong_action<A: StrongAction>(
    a: &A,
    pool: &PoolOf<A>,
    budget: &Budget,
) -> CheckReport {
    let mut report = check_weak_action(a, pool, budget);
    report.subject = String::from("strong action");
    let xs = a.acting();
    let cs = a.acted();
    let xo = &pool.x.objects;
    let co = &pool.c.objects;

    let mut p2 = LawReport::new("phi2-invertible", "φ^X_{B,C} has a two-sided inverse");
    let (t, ex) = budget.tuples(&[xo.len(), co.len(), co.len()], "phi2-invertible");
    p2.exhaustive = ex;
    for t in t {
        let (x, b, c) = (&xo[t[0]], &co[t[1]], &co[t[2]]);
        let src = cs.tensor_obj(&a.act_obj(b, x), &a.act_obj(c, x));
        let tgt = a.act_obj(&cs.tensor_obj(b, c), x);
        inverse_pair(
            cs,
            &mut p2,
            || inst![x, b, c],
            a.phi2(x, b, c),
            a.phi2_inv(x, b, c),
            &src,
            &tgt,
        );
    }
    report.push(p2);

    let mut p0 = LawReport::new("phi0-invertible", "φ^X has a two-sided inverse");
    let ci = cs.unit();
    for x in xo {
        inverse_pair(
            cs,
            &mut p0,
            || render(&[x]),
            a.phi0(x),
            a.phi0_inv(x),
            &ci,
            &a.act_obj(&ci, x),
        );
    }
    report.push(p0);

    let mut s2 = LawReport::new("psi2-invertible", "ψ^{X,Y}_C has a two-sided inverse");
    let (t, ex) = budget.tuples(&[xo.len(), xo.len(), co.len()], "psi2-invertible");
    s2.exhaustive = ex;
    for t in t {
        let (x, y, c) = (&xo[t[0]], &xo[t[1]], &co[t[2]]);
        let src = a.act_obj(c, &xs.tensor_obj(x, y));
        let tgt = a.act_obj(&a.act_obj(c, x), y);
        inverse_pair(
            cs,
            &mut s2,
            || inst![x, y, c],
            a.psi2(x, y, c),
            a.psi2_inv(x, y, c),
            &src,
            &tgt,
        );
    }
    report.push(s2);

    let mut s0 = LawReport::new("psi0-invertible", "ψ_C has a two-sided inverse");
    let xi = xs.unit();
    for c in co {
        inverse_pair(
            cs,
            &mut s0,
            || render(&[c]),
            a.psi0(c),
            a.psi0_inv(c),
            &a.act_obj(c, &xi),
            c,
        );
    }
    report.push(s0);
    report
}
