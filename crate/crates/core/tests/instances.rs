use skewcat_core::cat::{enumerate_hom, Category};
use skewcat_core::error::Error;
use skewcat_core::instances::pools::{asym2, tri3};
use skewcat_core::instances::{
    build_action, coproduct_is_universal, d_space, gms_act, gms_chain_colimit, gms_coproduct,
    gms_internal_hom, gms_iso_exists, gms_tensor, ActionParams, FinGms, FinLattice, GmsAct,
    GmsCat, GmsMap, ACTIONS,
};
use skewcat_core::num::ExtRat;

fn q(p: i64, d: i64) -> ExtRat {
    ExtRat::frac(p, d)
}

#[test]
fn tensor_of_discrete_spaces_adds_distances() {
    let t = gms_tensor(&d_space(ExtRat::int(1)), &d_space(ExtRat::int(2)));
    assert_eq!(t.len(), 4);
    // (0,0) → (1,1) moves in both factors
    assert_eq!(t.dist(0, 3), ExtRat::int(3));
    assert_eq!(t.dist(0, 1), ExtRat::int(2));
    assert_eq!(t.dist(0, 2), ExtRat::int(1));
    assert_eq!(t.dist(1, 2), ExtRat::int(3));
    assert!(t.validate().is_ok());
}

#[test]
fn truncate_flatten_and_scale_act_on_distances() {
    let m = asym2();
    let rows = |g: &FinGms| g.rows();
    assert_eq!(rows(&gms_act(&m, GmsAct::Truncate(ExtRat::int(1)))), vec![vec![ExtRat::zero(), q(1, 2)], vec![ExtRat::int(1), ExtRat::zero()]]);
    assert_eq!(gms_act(&m, GmsAct::Truncate(ExtRat::INF)), m);
    assert_eq!(gms_act(&m, GmsAct::Truncate(ExtRat::zero())), d_space(ExtRat::zero()));
    assert_eq!(gms_act(&m, GmsAct::Flatten(true)), m);
    assert_eq!(gms_act(&m, GmsAct::Flatten(false)), d_space(ExtRat::INF));
    assert_eq!(rows(&gms_act(&m, GmsAct::Scale(2))), vec![vec![ExtRat::zero(), ExtRat::int(2)], vec![ExtRat::int(8), ExtRat::zero()]]);
    assert_eq!(rows(&gms_act(&m, GmsAct::Scale(-1))), vec![vec![ExtRat::zero(), q(1, 4)], vec![ExtRat::int(1), ExtRat::zero()]]);
    assert_eq!(gms_act(&d_space(ExtRat::INF), GmsAct::Scale(-3)), d_space(ExtRat::INF));
}

#[test]
fn invalid_tables_are_rejected() {
    let bad = FinGms::new(vec![
        vec![ExtRat::zero(), ExtRat::int(1), ExtRat::int(5)],
        vec![ExtRat::int(1), ExtRat::zero(), ExtRat::int(1)],
        vec![ExtRat::int(5), ExtRat::int(1), ExtRat::zero()],
    ]);
    assert!(matches!(bad, Err(Error::InvalidInstance(_))));
    let diag = FinGms::new(vec![vec![ExtRat::int(1)]]);
    assert!(diag.is_err());
    let ragged = FinGms::new(vec![vec![ExtRat::zero(), ExtRat::zero()], vec![ExtRat::zero()]]);
    assert!(ragged.is_err());
    assert!(FinGms::new(Vec::new()).is_ok());
}

#[test]
fn coproducts_sit_at_infinite_distance_and_are_universal() {
    let (s, inl, inr) = gms_coproduct(&d_space(ExtRat::int(1)), &FinGms::point());
    assert_eq!(s.len(), 3);
    assert_eq!(s.dist(0, 2), ExtRat::INF);
    assert_eq!(s.dist(2, 1), ExtRat::INF);
    assert_eq!(s.dist(0, 1), ExtRat::int(1));
    let targets = [FinGms::point(), d_space(ExtRat::int(1)), asym2(), tri3()];
    assert!(coproduct_is_universal(&inl, &inr, &targets));

    // gluing the summands at distance 1 loses universality into D_2
    let glued = FinGms::from_fn(3, |i, j| if i == j { ExtRat::zero() } else { ExtRat::int(1) }).unwrap();
    let gl = GmsMap::new(d_space(ExtRat::int(1)), glued.clone(), vec![0, 1]).unwrap();
    let gr = GmsMap::new(FinGms::point(), glued, vec![2]).unwrap();
    assert!(!coproduct_is_universal(&gl, &gr, &[d_space(ExtRat::int(2))]));
}

#[test]
fn chain_of_shrinking_discrete_spaces_has_the_zero_space_as_colimit() {
    let stages: Vec<FinGms> = (1..=5).map(|n| d_space(q(1, n))).collect();
    let targets = [FinGms::point(), d_space(ExtRat::zero()), d_space(ExtRat::int(1)), asym2()];
    let c = gms_chain_colimit(&stages, &d_space(ExtRat::zero()), &targets).unwrap();
    assert!(c.cocone && c.universal);
    assert_eq!(c.colimit, d_space(ExtRat::zero()));

    // too large a limit is no lower bound; a growing chain is not monotone
    assert!(matches!(gms_chain_colimit(&stages, &d_space(q(1, 2)), &targets), Err(Error::NotLowerBound(_))));
    let mut up = stages.clone();
    up.reverse();
    assert!(matches!(gms_chain_colimit(&up, &d_space(ExtRat::zero()), &targets), Err(Error::NotMonotone(_))));

    // a lower bound that is not the infimum is not universal
    let stages: Vec<FinGms> = (1..=3).map(|n| d_space(ExtRat::int(1) + q(1, n))).collect();
    let c = gms_chain_colimit(&stages, &d_space(ExtRat::zero()), &[d_space(ExtRat::int(1))]).unwrap();
    assert!(c.cocone && !c.universal);
}

#[test]
fn isometries() {
    assert!(gms_iso_exists(&d_space(ExtRat::zero()), &d_space(ExtRat::INF)).is_none());
    let m = asym2();
    let flipped = FinGms::new(vec![vec![ExtRat::zero(), ExtRat::int(2)], vec![q(1, 2), ExtRat::zero()]]).unwrap();
    assert_eq!(gms_iso_exists(&m, &flipped), Some(vec![1, 0]));
    assert_eq!(gms_iso_exists(&m, &m), Some(vec![0, 1]));
    assert!(gms_iso_exists(&m, &FinGms::point()).is_none());
}

#[test]
fn maps_from_a_closer_pair_to_a_farther_pair_are_constant() {
    let homs = enumerate_hom(&GmsCat, &d_space(ExtRat::int(1)), &d_space(ExtRat::int(2))).unwrap();
    let funcs: Vec<Vec<usize>> = homs.iter().map(|h| h.func.clone()).collect();
    assert_eq!(funcs, vec![vec![0, 0], vec![1, 1]]);
    assert!(homs.iter().all(|h| GmsCat.is_morphism(h)));
}

#[test]
fn hom_space_of_the_unit_distance_pair() {
    let d1 = d_space(ExtRat::int(1));
    let (h, maps) = gms_internal_hom(&d1, &d1, 0);
    assert_eq!(maps.len(), 4);
    let c0 = maps.iter().position(|m| m == &vec![0, 0]).unwrap();
    let c1 = maps.iter().position(|m| m == &vec![1, 1]).unwrap();
    assert_eq!(h.dist(c0, c1), ExtRat::int(1));
    assert!(h.validate().is_ok());
}

#[test]
fn tensor_hom_adjunction_counts() {
    // |GMS(A⊗B, C)| = |GMS(A, [B,C])| on a few spaces
    let spaces = [FinGms::point(), d_space(ExtRat::int(1)), asym2(), d_space(ExtRat::INF)];
    for a in &spaces {
        for b in &spaces {
            for c in &spaces {
                let lhs = gms_tensor(a, b).maps_to(c).len();
                let rhs = a.maps_to(&gms_internal_hom(b, c, 0).0).len();
                assert_eq!(lhs, rhs, "{a:?} {b:?} {c:?}");
            }
        }
    }
}

#[test]
fn lattice_constructors() {
    let d = FinLattice::diamond();
    assert_eq!((d.len(), d.bottom(), d.top()), (4, 0, 3));
    assert_eq!(d.join(1, 2), 3);
    assert_eq!(d.meet(1, 2), 0);
    let c = FinLattice::chain(5);
    assert_eq!(c.join(1, 3), 3);
    assert_eq!(c.meet(1, 3), 1);
    let m3 = FinLattice::m3();
    assert_eq!(m3.join(1, 2), 4);
    let n5 = FinLattice::n5();
    assert_eq!(n5.join(1, 3), 4);
    assert_eq!(n5.meet(2, 3), 0);
    // two maximal elements: no top
    assert!(FinLattice::from_pairs(3, &[(0, 1), (0, 2)]).is_err());
    // a 2-cycle is not antisymmetric
    assert!(FinLattice::from_pairs(2, &[(0, 1), (1, 0)]).is_err());
    assert!(FinLattice::new(Vec::new()).is_err());
}

#[test]
fn every_named_action_builds_with_defaults() {
    for name in ACTIONS {
        let a = build_action(name, &ActionParams::default()).unwrap();
        assert_eq!(a.name(), *name);
        assert_eq!(a.is_strong(), *name != "truncation");
    }
}

#[test]
fn action_parameters_are_bounded() {
    let with_k = ActionParams { k: Some(4), ..Default::default() };
    assert!(matches!(build_action("kstar", &with_k), Err(Error::ParamOutOfBounds(_))));
    let with_k = ActionParams { k: Some(-3), ..Default::default() };
    assert!(build_action("kstar", &with_k).is_ok());
    let with_j = ActionParams { j: Some(3), ..Default::default() };
    assert!(matches!(build_action("finset_j", &with_j), Err(Error::ParamOutOfBounds(_))));
    let big = ActionParams { lattice: Some(FinLattice::chain(7)), ..Default::default() };
    assert!(matches!(build_action("copower", &big), Err(Error::ParamOutOfBounds(_))));
    assert!(matches!(build_action("nope", &ActionParams::default()), Err(Error::UnknownAction(_))));
}
