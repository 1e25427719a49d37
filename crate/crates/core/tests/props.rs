use proptest::prelude::*;
use skewcat_core::cat::Category;
use skewcat_core::closed::{InternalHom, Side};
use skewcat_core::instances::finset::{decode, encode};
use skewcat_core::instances::{
    gms_act, gms_coproduct, gms_internal_hom, gms_tensor, FinGms, FinMap, FinSetHom, GmsAct,
    GmsCat, GmsMap,
};
use skewcat_core::num::ExtRat;

fn grid() -> Vec<ExtRat> {
    vec![ExtRat::zero(), ExtRat::frac(1, 2), ExtRat::int(1), ExtRat::int(2), ExtRat::INF]
}

/// Shortest-path closure of a random grid table.
fn close(n: usize, raw: &[usize]) -> FinGms {
    let g = grid();
    let mut d: Vec<Vec<ExtRat>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { ExtRat::zero() } else { g[raw[i * n + j]] }).collect())
        .collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let via = d[i][k] + d[k][j];
                if via < d[i][j] {
                    d[i][j] = via;
                }
            }
        }
    }
    FinGms::new(d).expect("closure satisfies the axioms")
}

fn space() -> impl Strategy<Value = FinGms> {
    (0usize..=3).prop_flat_map(|n| prop::collection::vec(0usize..5, n * n).prop_map(move |raw| close(n, &raw)))
}

fn act() -> impl Strategy<Value = GmsAct> {
    prop_oneof![
        prop::sample::select(grid()).prop_map(GmsAct::Truncate),
        any::<bool>().prop_map(GmsAct::Flatten),
        (-3i64..=3).prop_map(GmsAct::Scale),
    ]
}

proptest! {
    #[test]
    fn constructions_stay_generalised_metric(a in space(), b in space(), x in act(), k in 0i64..3) {
        prop_assert!(gms_tensor(&a, &b).validate().is_ok());
        prop_assert!(gms_act(&a, x).validate().is_ok());
        prop_assert!(gms_coproduct(&a, &b).0.validate().is_ok());
        if a.len() <= 2 && b.len() <= 2 {
            prop_assert!(gms_internal_hom(&a, &b, k).0.validate().is_ok());
        }
    }

    #[test]
    fn scaling_by_opposite_exponents_cancels(a in space(), k in -3i64..=3) {
        prop_assert_eq!(gms_act(&gms_act(&a, GmsAct::Scale(k)), GmsAct::Scale(-k)), a);
    }

    #[test]
    fn truncation_is_idempotent_and_deflationary(a in space(), t in prop::sample::select(grid())) {
        let once = gms_act(&a, GmsAct::Truncate(t));
        prop_assert_eq!(gms_act(&once, GmsAct::Truncate(t)), once.clone());
        prop_assert!(once.dominated_by(&a));
    }

    #[test]
    fn flattening_is_idempotent_and_inflationary(a in space(), b in any::<bool>()) {
        let once = gms_act(&a, GmsAct::Flatten(b));
        prop_assert_eq!(gms_act(&once, GmsAct::Flatten(b)), once.clone());
        prop_assert!(a.dominated_by(&once));
    }

    #[test]
    fn nonexpansive_maps_compose(a in space(), b in space(), c in space(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let (fs, gs) = (a.maps_to(&b), b.maps_to(&c));
        if !fs.is_empty() && !gs.is_empty() {
            let f = GmsMap::new(a.clone(), b.clone(), fs[i.index(fs.len())].clone()).unwrap();
            let g = GmsMap::new(b.clone(), c.clone(), gs[j.index(gs.len())].clone()).unwrap();
            prop_assert!(GmsCat.is_morphism(&GmsCat.compose(&f, &g).unwrap()));
        }
    }

    #[test]
    fn finset_currying_roundtrips(a in 0usize..=3, b in 0usize..=3, c in 1usize..=3, seed in prop::collection::vec(0usize..3, 9), left in any::<bool>()) {
        let f = FinMap::from_fn(a * b, c, |k| seed[k] % c);
        let h = FinSetHom { side: if left { Side::Left } else { Side::Right } };
        let g = h.curry(&a, &b, &c, &f).unwrap();
        prop_assert!(g.valid());
        prop_assert_eq!(h.uncurry(&a, &b, &c, &g).unwrap(), f);
    }

    #[test]
    fn encode_inverts_decode(vals in prop::collection::vec(0usize..4, 0..5)) {
        prop_assert_eq!(decode(encode(&vals, 4), vals.len(), 4), vals);
    }
}
