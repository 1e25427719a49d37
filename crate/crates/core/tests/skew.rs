use skewcat_core::action::{ActAt, DiscreteMonoid, Monoid};
use skewcat_core::cat::{hom_closure, Category, Pool};
use skewcat_core::instances::mutants::{reverse_points, Component, Mutant};
use skewcat_core::instances::pools::{gms_pool, small_spaces, thin_pool};
use skewcat_core::instances::{
    default_grid, Arrow, FinSetProduct, FinSetSum, GmsCat, MinGrid, Thin, ThinInverses,
    ThinOrder, Truncation, TruthAction, TruthValues,
};
use skewcat_core::num::ExtRat;
use skewcat_core::report::FailureKind;
use skewcat_core::skew::{
    check_lax_monoidal_functor, check_monoidal_invertibility, check_monoidal_nat,
    check_skew_laws, FnNat, IdentityFunctor, IdentityInverses, SkewMonoidal,
};
use skewcat_core::{Budget, Result};

fn exhaustive() -> Budget {
    Budget::new(usize::MAX, 0)
}

#[test]
fn thin_grid_is_skew_monoidal() {
    let g = Thin(MinGrid);
    let r = check_skew_laws(&g, &thin_pool(MinGrid, default_grid()), &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
    assert!(r.laws.iter().all(|l| l.exhaustive));
    assert_eq!(r.law("pentagon").unwrap().checked, 5u64.pow(4));
}

#[test]
fn discrete_cyclic_monoid_is_skew_monoidal() {
    let d = DiscreteMonoid { monoid: Monoid::cyclic(3) };
    let pool = Pool::new(vec![0, 1, 2], vec![0, 1, 2]);
    assert!(check_skew_laws(&d, &pool, &exhaustive()).passed());
}

#[test]
fn nonassociative_table_breaks_the_pentagon() {
    // a unital magma on three elements with (1·1)·2 ≠ 1·(1·2)
    let mul = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 0, 1]];
    let d = DiscreteMonoid { monoid: Monoid { mul, unit: 0 } };
    let pool = Pool::new(vec![0, 1, 2], vec![0, 1, 2]);
    let r = check_skew_laws(&d, &pool, &exhaustive());
    assert!(!r.passed());
}

/// The grid with an associator that has the right shape only when
/// `A = B = C`.
struct Mistyped(Thin<MinGrid>);

impl Category for Mistyped {
    type Obj = ExtRat;
    type Mor = Arrow<ExtRat>;
    fn source(&self, f: &Self::Mor) -> ExtRat {
        self.0.source(f)
    }
    fn target(&self, f: &Self::Mor) -> ExtRat {
        self.0.target(f)
    }
    fn identity(&self, a: &ExtRat) -> Self::Mor {
        self.0.identity(a)
    }
    fn compose(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.0.compose(f, g)
    }
}

impl SkewMonoidal for Mistyped {
    fn tensor_obj(&self, a: &ExtRat, b: &ExtRat) -> ExtRat {
        self.0.tensor_obj(a, b)
    }
    fn tensor_mor(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor> {
        self.0.tensor_mor(f, g)
    }
    fn unit(&self) -> ExtRat {
        self.0.unit()
    }
    fn assoc(&self, a: &ExtRat, _: &ExtRat, _: &ExtRat) -> Result<Self::Mor> {
        Ok(Arrow::new(*a, *a))
    }
    fn lunit(&self, a: &ExtRat) -> Result<Self::Mor> {
        self.0.lunit(a)
    }
    fn runit(&self, a: &ExtRat) -> Result<Self::Mor> {
        self.0.runit(a)
    }
}

#[test]
fn thin_structure_with_mistyped_associator_fails_shape() {
    let m = Mistyped(Thin(MinGrid));
    let r = check_skew_laws(&m, &thin_pool(MinGrid, default_grid()), &exhaustive());
    let shape = r.law("shape").unwrap();
    assert!(!shape.passed());
    assert!(shape.failures.iter().all(|f| f.kind == FailureKind::Shape));
}

#[test]
fn strict_finite_sets_pass_everything() {
    let objs = vec![0, 1, 2];
    let pool = Pool::new(objs.clone(), hom_closure(&FinSetProduct, &objs, usize::MAX));
    assert!(check_skew_laws(&FinSetProduct, &pool, &exhaustive()).passed());
    assert!(check_monoidal_invertibility(&FinSetProduct, &IdentityInverses, &pool, &exhaustive())
        .passed());
    let pool = Pool::new(objs.clone(), hom_closure(&FinSetSum, &objs, usize::MAX));
    assert!(check_skew_laws(&FinSetSum, &pool, &exhaustive()).passed());
}

#[test]
fn thin_grid_is_monoidal() {
    let pool = thin_pool(MinGrid, default_grid());
    assert!(check_monoidal_invertibility(&Thin(MinGrid), &ThinInverses, &pool, &exhaustive()).passed());
}

#[test]
fn identity_functor_is_lax_monoidal() {
    let pool = gms_pool(small_spaces(), 4);
    let r = check_lax_monoidal_functor(&IdentityFunctor(&GmsCat), &pool, &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
}

#[test]
fn truncation_at_each_grid_point_is_lax_monoidal() {
    let a = Truncation::new(MinGrid);
    let pool = gms_pool(small_spaces(), 4);
    for x in default_grid() {
        let r = check_lax_monoidal_functor(&ActAt { action: &a, x }, &pool, &exhaustive());
        assert!(r.passed(), "{x}: {:?}", r.failed_laws());
    }
}

#[test]
fn corrupted_multiplication_is_not_lax_monoidal() {
    let a = Mutant { inner: Truncation::new(MinGrid), component: Component::Phi2, corrupt: reverse_points };
    let pool = gms_pool(small_spaces(), 4);
    let r = check_lax_monoidal_functor(&ActAt { action: &a, x: ExtRat::int(1) }, &pool, &exhaustive());
    assert!(!r.passed());
}

#[test]
fn identity_transformation_is_monoidal() {
    let id = IdentityFunctor(&GmsCat);
    let nat = FnNat { from: &id, to: &id, component: |c: &_| Ok(GmsCat.identity(c)) };
    assert!(check_monoidal_nat(&nat, &gms_pool(small_spaces(), 4), &exhaustive()).passed());
}

#[test]
fn psi_at_the_unit_is_monoidal_for_truth_values() {
    use skewcat_core::action::WeakAction;
    let a = TruthAction::new(TruthValues);
    let at_unit = ActAt { action: &a, x: TruthValues.unit() };
    let id = IdentityFunctor(&GmsCat);
    let nat = FnNat { from: &at_unit, to: &id, component: |c: &_| a.psi0(c) };
    assert!(check_monoidal_nat(&nat, &gms_pool(small_spaces(), 4), &exhaustive()).passed());

    // swapping the two points of an asymmetric space is not even non-expansive
    let swapped = FnNat {
        from: &at_unit,
        to: &id,
        component: |c: &_| a.psi0(c).map(|m| reverse_points(&m)),
    };
    assert!(!check_monoidal_nat(&swapped, &gms_pool(small_spaces(), 4), &exhaustive()).passed());
}
