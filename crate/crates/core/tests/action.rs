use skewcat_core::action::{
    check_strong_action, check_weak_action, lift_monoid_action_unchecked, ActionPool, Monoid,
    MonoidAction, WeakAction,
};
use skewcat_core::cat::Pool;
use skewcat_core::instances::mutants::{reverse_points, Component, Mutant};
use skewcat_core::instances::pools::{
    copower_pool, finset_op_pool, finset_pool, kstar_pool, product_pool, small_spaces,
    truncation_pool, truth_pool,
};
use skewcat_core::instances::{
    Copower, FinLattice, FinSetOp, FinSetProduct, Kstar, MinGrid, ThinInverses, TrivialAction,
    Truncation, TruncationCandidate, TruthAction, TruthValues,
};
use skewcat_core::semidirect::{build_semidirect, SemidirectInverses};
use skewcat_core::skew::{check_monoidal_invertibility, IdentityInverses, OppositeInverses};
use skewcat_core::Budget;

fn exhaustive() -> Budget {
    Budget::new(usize::MAX, 0)
}

#[test]
fn trivial_action_is_strong() {
    let a = TrivialAction { c: FinSetProduct };
    let pool = ActionPool { x: Pool::new(vec![()], vec![()]), c: finset_pool(&[0, 1, 2]) };
    let r = check_strong_action(&a, &pool, &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
    assert_eq!(a.act_obj(&2, &()), 2);
}

fn lifted_pool(m: &MonoidAction) -> ActionPool<usize, usize, usize, usize> {
    let (nx, nc) = (m.x.order(), m.c.order());
    ActionPool {
        x: Pool::new((0..nx).collect(), (0..nx).collect()),
        c: Pool::new((0..nc).collect(), (0..nc).collect()),
    }
}

#[test]
fn lifted_inversion_is_a_weak_action() {
    let act = (0..3).map(|c| vec![c, (3 - c) % 3]).collect();
    let m = MonoidAction::new(Monoid::cyclic(2), Monoid::cyclic(3), act).unwrap();
    let r = check_weak_action(&lift_monoid_action_unchecked(&m), &lifted_pool(&m), &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
}

#[test]
fn table_that_is_not_an_action_fails_the_psi_family() {
    // ℤ/3 acting on ℤ/3 by c^1 = 2c, c^2 = c: each is a homomorphism, but
    // c^{1+2} = c while (c^1)^2 = 2c
    let act = (0..3).map(|c| vec![c, (2 * c) % 3, c]).collect();
    let m = MonoidAction::new_unchecked(Monoid::cyclic(3), Monoid::cyclic(3), act);
    assert!(m.validate().is_err());
    let r = check_weak_action(&lift_monoid_action_unchecked(&m), &lifted_pool(&m), &exhaustive());
    let failed = r.failed_laws();
    assert!(failed.iter().any(|l| l.starts_with("psi")), "{failed:?}");
    assert!(!failed.iter().any(|l| l.starts_with("phi")), "{failed:?}");
}

#[test]
fn table_that_breaks_multiplication_fails_the_phi_family() {
    // ℤ/2 acting on ℤ/2 by swapping, which moves the unit
    let m = MonoidAction::new_unchecked(Monoid::cyclic(2), Monoid::cyclic(2), vec![vec![0, 1], vec![1, 0]]);
    assert!(m.validate().is_err());
    let r = check_weak_action(&lift_monoid_action_unchecked(&m), &lifted_pool(&m), &exhaustive());
    assert!(r.failed_laws().iter().any(|l| l.starts_with("phi")), "{:?}", r.failed_laws());
}

#[test]
fn truncation_is_weak_but_its_inverse_candidates_fail() {
    let pool = truncation_pool(small_spaces());
    assert!(check_weak_action(&Truncation::new(MinGrid), &pool, &exhaustive()).passed());
    let r = check_strong_action(&TruncationCandidate(Truncation::new(MinGrid)), &pool, &exhaustive());
    assert!(r.law("phi2-invertible").is_some_and(|l| !l.passed()));
    // ψ is the identity on the underlying distances, so it does invert
    assert!(r.law("psi2-invertible").unwrap().passed());
}

#[test]
fn strong_actions_give_monoidal_semidirect_products() {
    let truth = truth_pool(small_spaces());
    let s = build_semidirect(TruthAction::new(TruthValues), None).unwrap();
    let w = SemidirectInverses { x: ThinInverses, c: IdentityInverses };
    let r = check_monoidal_invertibility(&s, &w, &product_pool(&truth, 20), &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());

    for k in [1, 2] {
        let a = Kstar::new(k);
        let pool = kstar_pool(&a);
        let s = build_semidirect(a, None).unwrap();
        let r = check_monoidal_invertibility(&s, &w, &product_pool(&pool, 40), &exhaustive());
        assert!(r.passed(), "k = {k}: {:?}", r.failed_laws());
    }

    let pool = finset_op_pool();
    let s = build_semidirect(FinSetOp::default(), None).unwrap();
    let w = SemidirectInverses { x: OppositeInverses, c: IdentityInverses };
    let r = check_monoidal_invertibility(&s, &w, &product_pool(&pool, 40), &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());

    for lattice in [FinLattice::diamond(), FinLattice::chain(5), FinLattice::m3(), FinLattice::n5()] {
        let a = Copower::new(lattice);
        let pool = copower_pool(&a);
        let s = build_semidirect(a, None).unwrap();
        let w = SemidirectInverses { x: IdentityInverses, c: ThinInverses };
        let r = check_monoidal_invertibility(&s, &w, &product_pool(&pool, 40), &exhaustive());
        assert!(r.passed(), "{:?}", r.failed_laws());
    }
}

#[test]
fn truncation_semidirect_is_not_monoidal() {
    let pool = truncation_pool(small_spaces());
    let s = build_semidirect(TruncationCandidate(Truncation::new(MinGrid)), None).unwrap();
    let w = SemidirectInverses { x: ThinInverses, c: IdentityInverses };
    let r = check_monoidal_invertibility(&s, &w, &product_pool(&pool, 10), &exhaustive());
    let assoc = r.law("assoc-invertible").unwrap();
    assert!(!assoc.passed());
    let f = &assoc.failures[0];
    assert_eq!(f.instantiation.len(), 3);
    assert!(f.lhs.is_some() || !f.message.is_empty());
}

#[test]
fn corrupted_inverse_is_caught() {
    let pool = truth_pool(small_spaces());
    let m = Mutant { inner: TruthAction::new(TruthValues), component: Component::Phi2Inv, corrupt: reverse_points };
    assert!(check_weak_action(&m, &pool, &exhaustive()).passed());
    let r = check_strong_action(&m, &pool, &exhaustive());
    assert_eq!(r.failed_laws(), vec!["phi2-invertible"]);
}
