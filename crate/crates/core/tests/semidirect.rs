use itertools::Itertools;
use skewcat_core::action::{all_actions, all_monoids, Monoid, MonoidAction};
use skewcat_core::cat::Category;
use skewcat_core::instances::mutants::{reverse_points, Component, Mutant};
use skewcat_core::instances::pools::{
    asym2, gms_pool, product_pool, small_spaces, tri3, truncation_pool, truth_pool,
};
use skewcat_core::instances::{
    d_space, gms_tensor, FinGms, FlattenComonad, GmsCat, MinGrid, Truncation, TruthAction,
    TruthValues,
};
use skewcat_core::num::ExtRat;
use skewcat_core::semidirect::{
    build_semidirect, check_monoid_reduction, check_projection_invariant, corepresented_skew,
    monoid_semidirect, ComonadAction,
};
use skewcat_core::skew::{check_skew_laws, SkewMonoidal};
use skewcat_core::Budget;

fn exhaustive() -> Budget {
    Budget::new(usize::MAX, 0)
}

fn with_tri3() -> Vec<FinGms> {
    let mut s = small_spaces();
    s.push(tri3());
    s
}

#[test]
fn truncation_semidirect_is_skew_monoidal() {
    let pool = truncation_pool(small_spaces());
    let s = build_semidirect(Truncation::new(MinGrid), Some((&pool, &exhaustive()))).unwrap();
    let r = check_skew_laws(&s, &product_pool(&pool, 40), &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
    assert!(r.laws.iter().all(|l| l.exhaustive));
}

#[test]
fn truncation_semidirect_on_a_three_point_space() {
    let pool = truncation_pool(vec![tri3()]);
    let s = build_semidirect(Truncation::new(MinGrid), None).unwrap();
    let r = check_skew_laws(&s, &product_pool(&pool, 12), &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
}

#[test]
fn truth_semidirect_is_skew_monoidal() {
    let pool = truth_pool(with_tri3());
    let s = build_semidirect(TruthAction::new(TruthValues), Some((&pool, &exhaustive()))).unwrap();
    let r = check_skew_laws(&s, &product_pool(&pool, 40), &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
}

#[test]
fn flatten_corepresents_a_skew_structure() {
    let pool = gms_pool(with_tri3(), 6);
    let s = corepresented_skew(FlattenComonad, Some((&pool, &exhaustive()))).unwrap();
    let r = check_skew_laws(&s, &pool, &exhaustive());
    assert!(r.passed(), "{:?}", r.failed_laws());
}

#[test]
fn corepresented_structure_is_the_one_object_semidirect_product() {
    let s = corepresented_skew(FlattenComonad, None).unwrap();
    let sd = build_semidirect(ComonadAction { comonad: FlattenComonad }, None).unwrap();
    let spaces = with_tri3();
    for a in &spaces {
        assert_eq!(sd.lunit(&((), a.clone())).unwrap().1, s.lunit(a).unwrap());
        assert_eq!(sd.runit(&((), a.clone())).unwrap().1, s.runit(a).unwrap());
        for b in &spaces {
            assert_eq!(sd.tensor_obj(&((), a.clone()), &((), b.clone())).1, s.tensor_obj(a, b));
            for c in &spaces {
                let t = |m: &FinGms| ((), m.clone());
                assert_eq!(sd.assoc(&t(a), &t(b), &t(c)).unwrap().1, s.assoc(a, b, c).unwrap());
            }
        }
    }
}

/// `min(d, t)` entrywise, computed from the rows.
fn truncated(m: &FinGms, t: ExtRat) -> Vec<Vec<ExtRat>> {
    m.rows().into_iter().map(|r| r.into_iter().map(|d| d.min(t)).collect()).collect()
}

/// Pairs in row-major order with distances added.
fn product_rows(m: &[Vec<ExtRat>], n: &[Vec<ExtRat>]) -> Vec<Vec<ExtRat>> {
    let (a, b) = (m.len(), n.len());
    (0..a * b)
        .map(|p| (0..a * b).map(|q| m[p / b][q / b] + n[p % b][q % b]).collect())
        .collect()
}

#[test]
fn truncation_tensor_takes_min_and_truncates_the_left_space() {
    let s = build_semidirect(Truncation::new(MinGrid), None).unwrap();
    let (m, n) = (asym2(), d_space(ExtRat::int(1)));
    for (x, y) in [(ExtRat::int(2), ExtRat::frac(1, 2)), (ExtRat::INF, ExtRat::int(1)), (ExtRat::zero(), ExtRat::INF)] {
        let (z, p) = s.tensor_obj(&(x, m.clone()), &(y, n.clone()));
        assert_eq!(z, x.min(y));
        assert_eq!(p.rows(), product_rows(&truncated(&m, y), &n.rows()));
    }
}

#[test]
fn truth_tensor_takes_conjunction_and_flattens_under_false() {
    let s = build_semidirect(TruthAction::new(TruthValues), None).unwrap();
    let m = asym2();
    let one = FinGms::point();
    let (x, p) = s.tensor_obj(&(true, m.clone()), &(false, one.clone()));
    assert!(!x);
    assert_eq!(p.rows(), vec![vec![ExtRat::zero(), ExtRat::INF], vec![ExtRat::INF, ExtRat::zero()]]);
    let (x, p) = s.tensor_obj(&(true, m.clone()), &(true, one));
    assert!(x);
    assert_eq!(p.rows(), m.rows());
    assert_eq!(gms_tensor(&m, &FinGms::point()).rows(), m.rows());
}

#[test]
fn projection_to_the_acting_category_is_strict() {
    let pool = truncation_pool(small_spaces());
    let s = build_semidirect(Truncation::new(MinGrid), None).unwrap();
    assert!(check_projection_invariant(&s, &product_pool(&pool, 10), &exhaustive()).passed());
    let pool = truth_pool(small_spaces());
    let s = build_semidirect(TruthAction::new(TruthValues), None).unwrap();
    assert!(check_projection_invariant(&s, &product_pool(&pool, 10), &exhaustive()).passed());
}

#[test]
fn corrupted_psi_breaks_the_skew_laws() {
    let pool = truth_pool(small_spaces());
    let m = Mutant { inner: TruthAction::new(TruthValues), component: Component::Psi2, corrupt: reverse_points };
    assert!(build_semidirect(m.clone(), Some((&pool, &exhaustive()))).is_err());
    let s = build_semidirect(m, None).unwrap();
    let r = check_skew_laws(&s, &product_pool(&pool, 20), &exhaustive());
    assert!(!r.passed());
    assert!(r.laws.iter().flat_map(|l| &l.failures).all(|f| !f.instantiation.is_empty()));
}

// Monoid oracle. Actions are recounted here by brute force over all tables.

fn is_action(x: &Monoid, c: &Monoid, act: &[Vec<usize>]) -> bool {
    let (nx, nc) = (x.order(), c.order());
    (0..nc).all(|e| act[e][x.unit] == e)
        && (0..nx).all(|a| act[c.unit][a] == c.unit)
        && iproduct3(nc, nc, nx).all(|(b, d, a)| c.mul(act[b][a], act[d][a]) == act[c.mul(b, d)][a])
        && iproduct3(nc, nx, nx).all(|(e, a, b)| act[e][x.mul(a, b)] == act[act[e][a]][b])
}

fn iproduct3(a: usize, b: usize, c: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    itertools::iproduct!(0..a, 0..b, 0..c)
}

fn brute_force_actions(x: &Monoid, c: &Monoid) -> usize {
    let (nx, nc) = (x.order(), c.order());
    (0..nc * nx)
        .map(|_| 0..nc)
        .multi_cartesian_product()
        .filter(|vals| {
            let act: Vec<Vec<usize>> = vals.chunks(nx).map(<[usize]>::to_vec).collect();
            is_action(x, c, &act)
        })
        .count()
        .max(usize::from(nx * nc == 0))
}

#[test]
fn every_small_monoid_action_gives_a_monoid_matching_the_categorical_tensor() {
    let monoids = all_monoids(3);
    let of_order = |n| monoids.iter().filter(|m| m.order() == n).count();
    assert_eq!((of_order(1), of_order(2), of_order(3)), (1, 2, 11));
    let mut total = 0;
    for x in &monoids {
        for c in &monoids {
            let acts = all_actions(x, c);
            assert_eq!(acts.len(), brute_force_actions(x, c));
            for m in &acts {
                let sm = monoid_semidirect(m).unwrap();
                assert!(sm.check_laws().passed());
                assert!(check_monoid_reduction(m).unwrap().passed());
                total += 1;
            }
        }
    }
    assert!(total > 0);
}

fn inversion_action() -> MonoidAction {
    let act = (0..3).map(|c| vec![c, (3 - c) % 3]).collect();
    MonoidAction::new(Monoid::cyclic(2), Monoid::cyclic(3), act).unwrap()
}

/// Composition table of the permutations of three letters.
fn s3() -> Vec<Vec<usize>> {
    let perms: Vec<Vec<usize>> = (0..3).permutations(3).collect();
    let idx = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
    perms
        .iter()
        .map(|p| perms.iter().map(|q| idx(&(0..3).map(|i| q[p[i]]).collect())).collect())
        .collect()
}

fn isomorphic(a: &[Vec<usize>], b: &[Vec<usize>]) -> bool {
    let n = a.len();
    n == b.len()
        && (0..n).permutations(n).any(|f| {
            (0..n).all(|i| (0..n).all(|j| f[a[i][j]] == b[f[i]][f[j]]))
        })
}

#[test]
fn inversion_action_gives_the_symmetric_group() {
    let sm = monoid_semidirect(&inversion_action()).unwrap();
    let t = &sm.table;
    assert_eq!(t.order(), 6);
    assert!((0..6).any(|a| (0..6).any(|b| t.mul(a, b) != t.mul(b, a))));
    assert!(isomorphic(&t.mul, &s3()));
    // ⟨1,1⟩⟨1,0⟩ = ⟨0, 1^1·0⟩ = ⟨0,2⟩
    assert_eq!(sm.decode(t.mul(sm.encode(1, 1), sm.encode(1, 0))), (0, 2));
}

#[test]
fn trivial_action_gives_the_direct_product() {
    let m = MonoidAction::trivial(Monoid::cyclic(2), Monoid::cyclic(2));
    let sm = monoid_semidirect(&m).unwrap();
    let t = &sm.table;
    assert!((0..4).all(|a| t.mul(a, a) == t.unit));
    assert!((0..4).all(|a| (0..4).all(|b| t.mul(a, b) == t.mul(b, a))));
    assert!(!isomorphic(&t.mul, &Monoid::cyclic(4).mul));
}

#[test]
fn broken_action_table_is_rejected() {
    // c^x = c + 1 does not fix the unit
    let act = (0..3).map(|c| vec![c, (c + 1) % 3]).collect();
    let m = MonoidAction::new_unchecked(Monoid::cyclic(2), Monoid::cyclic(3), act);
    assert!(m.validate().is_err());
    assert!(monoid_semidirect(&m).is_err());
}

#[test]
fn gms_is_the_acted_category() {
    let s = build_semidirect(Truncation::new(MinGrid), None).unwrap();
    let a = (ExtRat::int(1), d_space(ExtRat::int(1)));
    assert_eq!(s.c().identity(&a.1), GmsCat.identity(&a.1));
}
