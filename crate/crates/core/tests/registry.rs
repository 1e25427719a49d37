use skewcat_core::instances::{build_action, ActionParams, ACTIONS};
use skewcat_core::Budget;

#[test]
fn every_shipped_action_satisfies_its_laws() {
    let budget = Budget::new(1_000_000, 7);
    for name in ACTIONS {
        let a = build_action(name, &ActionParams::default()).unwrap();
        let t = std::time::Instant::now();
        let report = a.check(&budget);
        eprintln!("{name}: {} checks in {:?}", report.checked(), t.elapsed());
        assert!(report.passed(), "{name}: {:?}", report.failed_laws());
    }
}
