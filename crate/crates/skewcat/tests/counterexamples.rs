use skewcat::counterexamples::{counterexample_left_closed, counterexample_right_closed};
use skewcat::HarnessError;
use skewcat_core::instances::pools::{asym2, tri3};
use skewcat_core::instances::{d_space, FinGms};
use skewcat_core::num::ExtRat;
use skewcat_core::Budget;

const LAWS_RIGHT: [&str; 5] = ["chain-colimit", "image-chain", "image-colimit", "tensor-of-colimit", "not-isomorphic"];

#[test]
fn right_counterexample_reproduces() {
    for stages in [3, 5, 8] {
        let r = counterexample_right_closed(stages, &Budget::default()).unwrap();
        assert!(r.passed(), "{stages}: {:?}", r.failed_laws());
        let laws: Vec<&str> = r.laws.iter().map(|l| l.law.as_str()).collect();
        assert_eq!(laws, LAWS_RIGHT);
        assert_eq!(r.law("image-chain").unwrap().checked, stages as u64);
    }
}

#[test]
fn a_single_stage_is_its_own_colimit() {
    let r = counterexample_right_closed(1, &Budget::default()).unwrap();
    assert_eq!(r.failed_laws(), vec!["chain-colimit"]);
}

#[test]
fn left_counterexample_reproduces_for_several_probes() {
    let probes = [
        (true, d_space(ExtRat::int(1))),
        (false, d_space(ExtRat::int(1))),
        (true, d_space(ExtRat::frac(1, 2))),
        (true, asym2()),
        (false, tri3()),
    ];
    for (x, m) in probes {
        let r = counterexample_left_closed(x, &m, &Budget::default()).unwrap();
        assert!(r.passed(), "{x} {m:?}: {:?}", r.failed_laws());
        assert_eq!(r.laws.len(), 6);
    }
}

#[test]
fn probes_without_a_finite_gap_are_degenerate() {
    // flattening fixes these, so both sides agree
    let half_inf = FinGms::new(vec![vec![ExtRat::zero(), ExtRat::INF], vec![ExtRat::zero(), ExtRat::zero()]]).unwrap();
    for m in [d_space(ExtRat::INF), d_space(ExtRat::zero()), FinGms::point(), FinGms::empty(), half_inf] {
        let e = counterexample_left_closed(true, &m, &Budget::default());
        assert!(matches!(e, Err(HarnessError::DegenerateProbe(_))), "{m:?}");
    }
}
