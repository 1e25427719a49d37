//! The one-object case: a lax monoidal comonad `T` on `C` is an action of the
//! terminal category, and `X ⋉ C` collapses to `C` with `A ⊗̂ B = T A ⊗ B`.

use alloc::format;
use alloc::vec::Vec;

use crate::action::WeakAction;
use crate::cat::{chain, Category, Pool};
use crate::error::{Error, Result};
use crate::report::Budget;
use crate::skew::{check_lax_monoidal_comonad, LaxMonoidalComonad, SkewMonoidal, Terminal};

type Obj<T> = <<T as LaxMonoidalComonad>::Cat as Category>::Obj;
type Mor<T> = <<T as LaxMonoidalComonad>::Cat as Category>::Mor;

/// `C^⋆ = T C`, `φ = μ`, `ψ^{⋆,⋆} = δ`, `ψ = ε`.
#[derive(Debug, Clone)]
pub struct ComonadAction<T> {
    pub comonad: T,
}

impl<T: LaxMonoidalComonad> WeakAction for ComonadAction<T> {
    type X = Terminal;
    type C = T::Cat;

    fn acting(&self) -> &Terminal {
        &Terminal
    }
    fn acted(&self) -> &T::Cat {
        self.comonad.category()
    }
    fn act_obj(&self, c: &Obj<T>, _: &()) -> Obj<T> {
        self.comonad.on_obj(c)
    }
    fn act_mor(&self, g: &Mor<T>, _: &()) -> Result<Mor<T>> {
        self.comonad.on_mor(g)
    }
    fn act_x_mor(&self, c: &Obj<T>, _: &()) -> Result<Mor<T>> {
        Ok(self.acted().identity(&self.comonad.on_obj(c)))
    }
    fn phi2(&self, _: &(), b: &Obj<T>, c: &Obj<T>) -> Result<Mor<T>> {
        self.comonad.mult(b, c)
    }
    fn phi0(&self, _: &()) -> Result<Mor<T>> {
        self.comonad.unit_map()
    }
    fn psi2(&self, _: &(), _: &(), c: &Obj<T>) -> Result<Mor<T>> {
        self.comonad.comult(c)
    }
    fn psi0(&self, c: &Obj<T>) -> Result<Mor<T>> {
        self.comonad.counit(c)
    }
}

/// The skew structure corepresented by a lax monoidal comonad:
///
/// ```text
/// A ⊗̂ B = T A ⊗ B
/// α = (δ_A ⊗ (TB⊗C)) ; α_{TTA,TB,C} ; (μ_{TA,B} ⊗ C)
/// λ = λ_C ; (η ⊗ C)
/// ρ = (ε_C ⊗ I) ; ρ_C
/// ```
#[derive(Debug, Clone)]
pub struct Corepresented<T> {
    pub comonad: T,
}

/// Builds the corepresented structure, optionally checking the comonad first.
pub fn corepresented_skew<T: LaxMonoidalComonad>(
    comonad: T,
    validate: Option<(&Pool<Obj<T>, Mor<T>>, &Budget)>,
) -> Result<Corepresented<T>> {
    if let Some((pool, budget)) = validate {
        let report = check_lax_monoidal_comonad(&comonad, pool, budget);
        if !report.passed() {
            return Err(Error::ComonadLawViolation(format!("{:?}", report.failed_laws())));
        }
    }
    Ok(Corepresented { comonad })
}

impl<T: LaxMonoidalComonad> Corepresented<T> {
    fn base(&self) -> &T::Cat {
        self.comonad.category()
    }
}

impl<T: LaxMonoidalComonad> Category for Corepresented<T> {
    type Obj = Obj<T>;
    type Mor = Mor<T>;

    fn source(&self, f: &Mor<T>) -> Obj<T> {
        self.base().source(f)
    }
    fn target(&self, f: &Mor<T>) -> Obj<T> {
        self.base().target(f)
    }
    fn identity(&self, a: &Obj<T>) -> Mor<T> {
        self.base().identity(a)
    }
    fn compose(&self, f: &Mor<T>, g: &Mor<T>) -> Result<Mor<T>> {
        self.base().compose(f, g)
    }
    fn mor_eq(&self, f: &Mor<T>, g: &Mor<T>) -> bool {
        self.base().mor_eq(f, g)
    }
    fn is_morphism(&self, f: &Mor<T>) -> bool {
        self.base().is_morphism(f)
    }
    fn hom(&self, a: &Obj<T>, b: &Obj<T>) -> Result<Vec<Mor<T>>> {
        self.base().hom(a, b)
    }
}

impl<T: LaxMonoidalComonad> SkewMonoidal for Corepresented<T> {
    fn tensor_obj(&self, a: &Obj<T>, b: &Obj<T>) -> Obj<T> {
        self.base().tensor_obj(&self.comonad.on_obj(a), b)
    }
    fn tensor_mor(&self, f: &Mor<T>, g: &Mor<T>) -> Result<Mor<T>> {
        self.base().tensor_mor(&self.comonad.on_mor(f)?, g)
    }
    fn unit(&self) -> Obj<T> {
        self.base().unit()
    }
    fn assoc(&self, a: &Obj<T>, b: &Obj<T>, c: &Obj<T>) -> Result<Mor<T>> {
        let (cs, t) = (self.base(), &self.comonad);
        let ta = t.on_obj(a);
        let tb = t.on_obj(b);
        chain(
            cs,
            &[
                cs.whisker_right(&t.comult(a)?, &cs.tensor_obj(&tb, c))?,
                cs.assoc(&t.on_obj(&ta), &tb, c)?,
                cs.whisker_right(&t.mult(&ta, b)?, c)?,
            ],
        )
    }
    fn lunit(&self, c: &Obj<T>) -> Result<Mor<T>> {
        let cs = self.base();
        cs.compose(&cs.lunit(c)?, &cs.whisker_right(&self.comonad.unit_map()?, c)?)
    }
    fn runit(&self, c: &Obj<T>) -> Result<Mor<T>> {
        let cs = self.base();
        cs.compose(&cs.whisker_right(&self.comonad.counit(c)?, &cs.unit())?, &cs.runit(c)?)
    }
}
