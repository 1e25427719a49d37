use skewcat_core::cat::enumerate_hom;
use skewcat_core::closed::{
    check_duality, check_hom_adjunction, check_hom_agreement, check_initial_preservation,
    check_right_adjoint, check_triangle_hom, left_closed_hom, right_closed_hom,
    right_closed_hom_via_dual, DualData, DualHom, DualRightAdjoint, InternalHom, LeftDuals,
    SemidirectDuals, SemidirectLeftHom, SemidirectRightHom, Side, ThinHom, TriangleHom,
};
use skewcat_core::error::Error;
use skewcat_core::instances::mutants::{reverse_points, rotate_values, MutantHom};
use skewcat_core::instances::pools::{asym2, copower_pool, gms_pool, product_pool, self_tensor_pool};
use skewcat_core::instances::{
    d_space, gms_internal_hom, Arrow, GmsMap, Copower, CopowerTriangle, ExponentDuals, Exponents, FinGms,
    FinLattice, FinMap, FinSetDuals, FinSetHom, FinSetProduct, GmsHom, Kstar, MatCat, MatDuals,
    Matrix, ScalarDuals, Scaling, ScalingAdjoint, SelfTensor, SelfTensorTriangle, Thin,
    ThinInverses,
};
use skewcat_core::num::{ExtRat, Rational};
use skewcat_core::semidirect::{build_semidirect, Semidirect, SemidirectInverses};
use skewcat_core::skew::{IdentityInverses, SkewMonoidal};
use skewcat_core::action::{ActionPool, WeakAction};
use skewcat_core::Budget;

fn exhaustive() -> Budget {
    Budget::new(usize::MAX, 0)
}

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p, q)
}

// Duals

type KstarSd = Semidirect<Kstar>;

fn kstar(k: i64) -> KstarSd {
    build_semidirect(Kstar::new(k), None).unwrap()
}

fn kstar_duals(s: &KstarSd) -> SemidirectDuals<'_, Kstar, ScalarDuals, MatDuals> {
    SemidirectDuals { s, x: ScalarDuals::default(), c: MatDuals }
}

const W: SemidirectInverses<ThinInverses, IdentityInverses> =
    SemidirectInverses { x: ThinInverses, c: IdentityInverses };

fn scalars_for_duals() -> Vec<Rational> {
    vec![r(1, 2), r(1, 1), r(2, 1), r(3, 1)]
}

#[test]
fn kstar_coherence_is_deformed_by_powers_of_the_scalars() {
    for k in [1, 2] {
        let s = kstar(k);
        let (x, y, z) = (r(2, 1), r(3, 1), r(1, 2));
        let a = s.assoc(&(x, 1), &(y, 2), &(z, 2)).unwrap().1;
        assert_eq!(a, Matrix::scalar(4, num_traits::pow(z, k as usize)));
        let l = s.lunit(&(x, 2)).unwrap().1;
        assert_eq!(l, Matrix::scalar(2, Rational::from_integer(1) / num_traits::pow(x, k as usize)));
        assert_eq!(s.runit(&(x, 2)).unwrap().1, Matrix::identity(2));
        assert_eq!(s.tensor_obj(&(x, 2), &(y, 2)), (x * y, 4));
    }
}

#[test]
fn kstar_objects_have_left_duals() {
    let s = kstar(1);
    let d = kstar_duals(&s);
    for x in scalars_for_duals() {
        for n in [1, 2] {
            let dual = d.dual(&(x, n)).unwrap();
            assert_eq!(dual.dual, (x.recip(), n));
            let rep = check_duality(&s, &W, &(x, n), &dual, &exhaustive());
            assert!(rep.passed(), "x = {x}, n = {n}: {:?}", rep.failed_laws());
        }
    }
    assert!(matches!(ScalarDuals::default().dual(&r(0, 1)), Err(Error::NoDual(_))));
}

#[test]
fn unit_is_self_dual() {
    let s = kstar(2);
    let i = s.unit();
    let d = kstar_duals(&s).dual(&i).unwrap();
    assert_eq!(d.dual, i);
    assert!(check_duality(&s, &W, &i, &d, &exhaustive()).passed());
}

/// `ε^C` and `η^C` for dimension `n`, written out independently.
fn plain_duality(n: usize) -> (Matrix, Matrix) {
    let delta = |k: usize| Rational::from_integer(i64::from(k / n == k % n));
    (Matrix::from_fn(n * n, 1, |k, _| delta(k)), Matrix::from_fn(1, n * n, |_, k| delta(k)))
}

#[test]
fn kstar_duality_data_carries_the_deformation_on_the_coevaluation() {
    for k in [1, 2] {
        let s = kstar(k);
        let d = kstar_duals(&s);
        for x in scalars_for_duals() {
            let (eps, eta) = plain_duality(2);
            let dual = d.dual(&(x, 2)).unwrap();
            assert_eq!(dual.eval.1, eps);
            assert_eq!(dual.coeval.1, eta.scale(num_traits::pow(x, 2 * k as usize)));
        }
    }
}

#[test]
fn displayed_epsilon_rescaling_breaks_the_snakes_away_from_units() {
    let s = kstar(1);
    for x in scalars_for_duals() {
        let (eps, eta) = plain_duality(2);
        let one = Rational::from_integer(1);
        let displayed = DualData {
            dual: (x.recip(), 2),
            eval: (Arrow::new(one, one), eps.scale(one / (x * x))),
            coeval: (Arrow::new(one, one), eta),
        };
        let rep = check_duality(&s, &W, &(x, 2), &displayed, &exhaustive());
        assert_eq!(rep.passed(), x == one, "x = {x}");
    }
}

#[test]
fn wrong_power_on_the_coevaluation_is_caught() {
    let s = kstar(1);
    let x = r(2, 1);
    let mut d = kstar_duals(&s).dual(&(x, 2)).unwrap();
    d.coeval.1 = d.coeval.1.scale(x.recip());
    assert!(!check_duality(&s, &W, &(x, 2), &d, &exhaustive()).passed());
}

#[test]
fn finite_sets_have_duals_only_at_one_point() {
    for n in [0, 2, 3] {
        assert!(matches!(FinSetDuals.dual(&n), Err(Error::NoDual(_))));
    }
    let d = FinSetDuals.dual(&1).unwrap();
    assert!(check_duality(&FinSetProduct, &IdentityInverses, &1, &d, &exhaustive()).passed());
}

#[test]
fn matrices_are_self_dual() {
    for n in [1, 2, 3] {
        let d = MatDuals.dual(&n).unwrap();
        assert!(check_duality(&MatCat, &IdentityInverses, &n, &d, &exhaustive()).passed());
    }
}

// Right closedness on scaling

fn two_point_spaces() -> Vec<FinGms> {
    vec![FinGms::point(), d_space(ExtRat::int(1)), d_space(ExtRat::frac(1, 2)), asym2()]
}

fn scaling_objects(exps: &[i64], spaces: &[FinGms]) -> Vec<(i64, FinGms)> {
    exps.iter().flat_map(|&y| spaces.iter().map(move |m| (y, m.clone()))).collect()
}

fn scaling_pool(natural: bool, exps: Vec<i64>, spaces: Vec<FinGms>) -> ActionPool<i64, Arrow<i64>, FinGms, GmsMap> {
    ActionPool {
        x: skewcat_core::instances::pools::thin_pool(Exponents { natural }, exps),
        c: gms_pool(spaces, 4),
    }
}

fn exps_hom(natural: bool) -> impl Fn(&i64, &i64) -> skewcat_core::Result<i64> {
    move |y, z| Ok(Exponents { natural }.hom(*y, *z))
}

#[test]
fn scaling_right_adjoint_laws() {
    for natural in [true, false] {
        let exps = if natural { vec![0, 1, 2, 3] } else { vec![-1, 0, 2] };
        let adj = ScalingAdjoint { action: Scaling::new(Exponents { natural }) };
        let pool = scaling_pool(natural, exps, two_point_spaces());
        let rep = check_right_adjoint(&adj, &pool.x.objects, &pool.c, &exhaustive());
        assert!(rep.passed(), "{:?}", rep.failed_laws());
    }
}

#[test]
fn scaling_semidirect_is_right_closed() {
    let exps = Thin(Exponents { natural: true });
    let s = build_semidirect(Scaling::new(Exponents { natural: true }), None).unwrap();
    let h = SemidirectRightHom {
        s: &s,
        radj: ScalingAdjoint { action: s.action },
        x: ThinHom { cat: &exps, side: Side::Right, hom: exps_hom(true) },
        c: GmsHom { side: Side::Right },
    };
    let pool = scaling_pool(true, vec![0, 1, 2, 3], vec![FinGms::point(), d_space(ExtRat::int(1)), asym2()]);
    let objects = scaling_objects(&[0, 1, 2, 3], &pool.c.objects);
    let rep = check_hom_adjunction(&h, &objects, &product_pool(&pool, 40).morphisms, &exhaustive());
    assert!(rep.passed(), "{:?}", rep.failed_laws());
    assert!(rep.laws.iter().all(|l| l.exhaustive));

    // [⟨y,N⟩, ⟨z,P⟩] = ⟨max(z−y,0), [N,P]_y⟩
    let (n, p) = (d_space(ExtRat::int(1)), asym2());
    for (y, z) in [(0, 3), (1, 3), (3, 1), (2, 2)] {
        let (e, m) = right_closed_hom(&h, &(y, n.clone()), &(z, p.clone())).unwrap();
        assert_eq!(e, (z - y).max(0));
        assert_eq!(m, gms_internal_hom(&n, &p, y).0);
    }
}

#[test]
fn hom_space_between_two_point_discrete_spaces() {
    // the four maps D_1 → D_1: constant 0, identity, swap, constant 1
    let d1 = d_space(ExtRat::int(1));
    let (h, maps) = gms_internal_hom(&d1, &d1, 1);
    assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    let half = ExtRat::frac(1, 2);
    let expected = [
        [0, 1, 1, 1],
        [1, 0, 1, 1],
        [1, 1, 0, 1],
        [1, 1, 1, 0],
    ];
    for i in 0..4 {
        for j in 0..4 {
            let want = if expected[i][j] == 0 { ExtRat::zero() } else { half };
            assert_eq!(h.dist(i, j), want);
        }
    }
}

fn integer_scaling() -> Semidirect<Scaling> {
    build_semidirect(Scaling::new(Exponents { natural: false }), None).unwrap()
}

#[test]
fn both_right_homs_agree_over_the_integers() {
    let ints = Thin(Exponents { natural: false });
    let s = integer_scaling();
    let duals = ExponentDuals { x: ints };
    let direct = SemidirectRightHom {
        s: &s,
        radj: ScalingAdjoint { action: s.action },
        x: ThinHom { cat: &ints, side: Side::Right, hom: exps_hom(false) },
        c: GmsHom { side: Side::Right },
    };
    let via_dual = SemidirectRightHom {
        s: &s,
        radj: DualRightAdjoint { action: &s.action, duals },
        x: DualHom { duals, inverses: ThinInverses },
        c: GmsHom { side: Side::Right },
    };
    let objects = scaling_objects(&[-1, 0, 1], &[FinGms::point(), d_space(ExtRat::int(1)), asym2()]);
    let pool = scaling_pool(false, vec![-1, 0, 1], vec![FinGms::point(), d_space(ExtRat::int(1)), asym2()]);
    let morphisms = product_pool(&pool, 30).morphisms;
    assert!(check_hom_adjunction(&direct, &objects, &morphisms, &exhaustive()).passed());
    let rep = check_hom_adjunction(&via_dual, &objects, &morphisms, &exhaustive());
    assert!(rep.passed(), "{:?}", rep.failed_laws());
    let rep = check_hom_agreement(&direct, &via_dual, &objects, &exhaustive());
    assert!(rep.passed(), "{:?}", rep.failed_laws());

    for b in &objects {
        for c in &objects {
            let d = direct.hom_obj(b, c).unwrap();
            let v = right_closed_hom_via_dual(&s, duals, ThinInverses, GmsHom { side: Side::Right }, b, c).unwrap();
            assert_eq!(d, v);
        }
    }
}

#[test]
fn corrupted_currying_is_caught_on_the_right() {
    let exps = Thin(Exponents { natural: true });
    let s = build_semidirect(Scaling::new(Exponents { natural: true }), None).unwrap();
    let h = SemidirectRightHom {
        s: &s,
        radj: ScalingAdjoint { action: s.action },
        x: ThinHom { cat: &exps, side: Side::Right, hom: exps_hom(true) },
        c: GmsHom { side: Side::Right },
    };
    let m = MutantHom { inner: &h, corrupt: |g: &(Arrow<i64>, GmsMap)| (g.0.clone(), reverse_points(&g.1)) };
    let objects = scaling_objects(&[0, 1], &[FinGms::point(), asym2()]);
    assert!(!check_hom_adjunction(&m, &objects, &[], &exhaustive()).passed());
}

#[test]
fn kstar_right_hom_through_duals() {
    let s = kstar(1);
    let hc = DualHom { duals: MatDuals, inverses: IdentityInverses };
    for (y, z) in [(r(2, 1), r(3, 1)), (r(1, 2), r(1, 2))] {
        for (b, c) in [(1, 2), (2, 2)] {
            let h = right_closed_hom_via_dual(&s, ScalarDuals::default(), ThinInverses, hc.clone(), &(y, b), &(z, c)).unwrap();
            assert_eq!(h, (z / y, c * b));
        }
    }
    // curry and uncurry are inverse on sampled morphisms ⟨x,A⟩⊗⟨y,B⟩ → ⟨z,C⟩
    let h = SemidirectRightHom {
        s: &s,
        radj: DualRightAdjoint { action: &s.action, duals: ScalarDuals::default() },
        x: DualHom { duals: ScalarDuals::default(), inverses: ThinInverses },
        c: hc,
    };
    let (x, y) = (r(2, 1), r(3, 1));
    let z = x * y;
    let one = Arrow::new(z, z);
    let f = (one, Matrix::from_fn(4, 2, |i, j| Rational::from_integer((i * 2 + j) as i64 - 3)));
    let (a, b, c) = ((x, 2), (y, 2), (z, 2));
    let g = h.curry(&a, &b, &c, &f).unwrap();
    assert_eq!(h.uncurry(&a, &b, &c, &g).unwrap(), f);
}

// Left closedness

#[test]
fn copower_semidirect_is_left_closed() {
    let a = Copower::new(FinLattice::diamond());
    let pool = copower_pool(&a);
    let tri = CopowerTriangle { action: a.clone() };
    assert!(check_triangle_hom(&tri, &pool, &exhaustive()).passed());
    let s = build_semidirect(a.clone(), None).unwrap();
    let h = SemidirectLeftHom { s: &s, x: FinSetHom { side: Side::Left }, tri };
    let small = ActionPool { x: skewcat_core::instances::pools::finset_pool(&[0, 1, 2]), c: pool.c.clone() };
    let objects = product_pool(&small, 0).objects;
    let rep = check_hom_adjunction(&h, &objects, &product_pool(&small, 40).morphisms, &exhaustive());
    assert!(rep.passed(), "{:?}", rep.failed_laws());

    // [⟨X,A⟩, ⟨Z,C⟩] = ⟨Z^X × [A ≤ C], C⟩
    let l = a.lattice();
    for (x, z) in [(0, 2), (2, 2), (1, 0), (2, 0)] {
        for p in l.elements() {
            for q in l.elements() {
                let (e, c) = left_closed_hom(&h, &(x, p), &(z, q)).unwrap();
                assert_eq!(c, q);
                assert_eq!(e, (z as u32).pow(x as u32) as usize * usize::from(l.leq(p, q)));
            }
        }
    }
}

#[test]
fn self_tensor_semidirect_is_left_closed() {
    let tri = SelfTensorTriangle { action: SelfTensor };
    let pool = self_tensor_pool();
    assert!(check_triangle_hom(&tri, &pool, &exhaustive()).passed());
    let s = build_semidirect(SelfTensor, None).unwrap();
    let h = SemidirectLeftHom { s: &s, x: FinSetHom { side: Side::Left }, tri };
    let objects = product_pool(&pool, 0).objects;
    let rep = check_hom_adjunction(&h, &objects, &product_pool(&pool, 40).morphisms, &exhaustive());
    assert!(rep.passed(), "{:?}", rep.failed_laws());
    // ⟨[X,Z] × [A,C], C⟩
    assert_eq!(left_closed_hom(&h, &(2, 1), &(2, 3)).unwrap(), (4 * 3, 3));
    assert_eq!(left_closed_hom(&h, &(0, 2), &(1, 0)).unwrap(), (0, 0));
    assert_eq!(left_closed_hom(&h, &(0, 2), &(3, 1)).unwrap(), (1, 1));
}

#[test]
fn corrupted_currying_is_caught_on_the_left() {
    let a = Copower::new(FinLattice::diamond());
    let s = build_semidirect(a.clone(), None).unwrap();
    let h = SemidirectLeftHom { s: &s, x: FinSetHom { side: Side::Left }, tri: CopowerTriangle { action: a } };
    let m = MutantHom { inner: &h, corrupt: |g: &(FinMap, Arrow<usize>)| (rotate_values(&g.0), g.1.clone()) };
    let objects: Vec<(usize, usize)> = [1, 2].iter().flat_map(|&x| [0, 3].map(|c| (x, c))).collect();
    assert!(!check_hom_adjunction(&m, &objects, &[], &exhaustive()).passed());
}

#[test]
fn finite_set_exponentials() {
    for side in [Side::Right, Side::Left] {
        let pool = skewcat_core::instances::pools::finset_pool(&[0, 1, 2]);
        let rep = check_hom_adjunction(&FinSetHom { side }, &pool.objects, &pool.morphisms, &exhaustive());
        assert!(rep.passed(), "{:?}", rep.failed_laws());
    }
    let h = FinSetHom { side: Side::Right };
    assert_eq!(enumerate_hom(&FinSetProduct, &4, &2).unwrap().len(), 16);
    assert_eq!(enumerate_hom(&FinSetProduct, &2, &h.hom_obj(&2, &2).unwrap()).unwrap().len(), 16);
}

#[test]
fn tensoring_the_initial_object_on_the_right_is_not_initial() {
    let a = Copower::new(FinLattice::diamond());
    let l = a.lattice().clone();
    let s = build_semidirect(a, None).unwrap();
    let targets: Vec<(usize, usize)> = [0, 1, 2].iter().flat_map(|&x| l.elements().into_iter().map(move |c| (x, c))).collect();
    let initial = (0, l.bottom());
    for x in [0, 1, 2] {
        for c in l.elements() {
            let rep = check_initial_preservation(&s, &initial, &(x, c), &targets, &exhaustive()).unwrap();
            assert_eq!(rep.passed(), c == l.bottom(), "probe ⟨{x},{c}⟩");
        }
    }
    assert!(matches!(
        check_initial_preservation(&s, &(1, l.bottom()), &(1, 0), &targets, &exhaustive()),
        Err(Error::NotInitial(_))
    ));
}

#[test]
fn copower_triangle_matches_hom_sets() {
    let a = Copower::new(FinLattice::n5());
    let cat = Thin(a.lattice().clone());
    let tri = CopowerTriangle { action: a.clone() };
    for b in a.lattice().elements() {
        for c in a.lattice().elements() {
            for x in 0..3usize {
                let lhs = enumerate_hom(&cat, &a.act_obj(&b, &x), &c).unwrap().len();
                let rhs = enumerate_hom(&FinSetProduct, &x, &tri.tri_obj(&b, &c)).unwrap().len();
                assert_eq!(lhs, rhs, "b={b} c={c} x={x}");
            }
        }
    }
}
