use skewcat::io::Loaded;
use skewcat::report::{Expect, SCHEMA};
use skewcat::suites::{resolve_suites, SuiteConfig, SUITES};
use skewcat::{run_suite, HarnessError};
use skewcat_core::cat::{FiniteCategory, MorphismRecord};
use skewcat_core::instances::{d_space, FinLattice};
use skewcat_core::num::ExtRat;

fn cfg(suite: &str) -> SuiteConfig {
    SuiteConfig::suite(suite)
}

#[test]
fn all_expands_to_every_suite_once() {
    let s = resolve_suites(&["duals".into(), "all".into()]).unwrap();
    assert_eq!(s.len(), SUITES.len());
    assert_eq!(s[0], "duals");
    assert!(matches!(resolve_suites(&["nope".into()]), Err(HarnessError::UnknownSuite(_))));
}

#[test]
fn reports_carry_schema_and_seed() {
    let r = run_suite(&SuiteConfig { seed: 11, ..cfg("duals") }).unwrap();
    assert_eq!(r.schema, SCHEMA);
    assert_eq!(r.seed, 11);
    assert!(r.passed());
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(json["schema"], 1);
    let entries = &json["suites"][0]["entries"];
    assert!(entries.as_array().unwrap().iter().all(|e| e["report"]["seed"] == 11));
}

#[test]
fn expected_failures_pass_only_when_the_check_fails() {
    let r = run_suite(&cfg("duals")).unwrap();
    let e = r.entry("kstar/rescaled-evaluation").unwrap();
    assert_eq!(e.expect, Expect::Fail);
    assert!(e.passed());
    assert!(!e.report.as_ref().unwrap().passed());
}

#[test]
fn same_config_same_bytes_regardless_of_workers() {
    let run = |workers| run_suite(&SuiteConfig { seed: 3, workers, budget: 500, ..cfg("counterexamples") }).unwrap().to_json();
    let a = run(1);
    assert_eq!(a, run(1));
    assert_eq!(a, run(3));
}

#[test]
fn small_budgets_sample_with_the_seed() {
    let run = |seed| {
        let c = SuiteConfig { seed, budget: 50, action: Some("truth_values".into()), ..cfg("skew-laws") };
        run_suite(&c).unwrap()
    };
    let (a, b) = (run(1), run(2));
    assert!(a.passed() && b.passed());
    let laws = &a.suites[0].entries[0].report.as_ref().unwrap().laws;
    assert!(laws.iter().any(|l| !l.exhaustive && l.checked == 50));
    assert_ne!(a.to_json(), b.to_json());
}

#[test]
fn action_filter() {
    let r = run_suite(&SuiteConfig { action: Some("self_tensor".into()), ..cfg("left-closed") }).unwrap();
    assert_eq!(r.summary.checks, 1);
    assert!(matches!(
        run_suite(&SuiteConfig { action: Some("bogus".into()), ..cfg("left-closed") }),
        Err(HarnessError::UnknownAction(_))
    ));
    assert!(matches!(
        run_suite(&SuiteConfig { action: Some("kstar".into()), ..cfg("left-closed") }),
        Err(HarnessError::NothingToRun { .. })
    ));
}

#[test]
fn unwritable_output_is_an_io_error() {
    let c = SuiteConfig { out: Some("/nonexistent-dir/report.json".into()), ..cfg("duals") };
    assert!(matches!(run_suite(&c), Err(HarnessError::Io { .. })));
}

#[test]
fn loaded_space_joins_the_counterexamples() {
    let m = d_space(ExtRat::int(2));
    let r = run_suite(&SuiteConfig { load: Some(Loaded::Gms(m)), ..cfg("counterexamples") }).unwrap();
    assert!(r.entry("left-closed/loaded").unwrap().passed());
    let degenerate = SuiteConfig { load: Some(Loaded::Gms(d_space(ExtRat::INF))), ..cfg("counterexamples") };
    assert!(matches!(run_suite(&degenerate), Err(HarnessError::DegenerateProbe(_))));
}

#[test]
fn loaded_lattice_drives_the_copower_checks() {
    let r = run_suite(&SuiteConfig { load: Some(Loaded::Lattice(FinLattice::chain(3))), ..cfg("counterexamples") }).unwrap();
    assert!(r.passed());
    let probes = r.suites[0].entries.iter().filter(|e| e.check.starts_with("initial-preservation")).count();
    assert_eq!(probes, 9);
}

#[test]
fn loaded_category_axioms() {
    let good = FiniteCategory::thin(&["a", "b"], |i, j| i <= j).unwrap();
    let r = run_suite(&SuiteConfig { load: Some(Loaded::Category(good.clone())), ..cfg("duals") }).unwrap();
    assert!(r.entry("category-axioms").unwrap().passed());

    // ℤ/2 with a broken table: 1;1 = 1
    let mut bad = FiniteCategory::from_monoid(&[vec![0, 1], vec![1, 0]], 0).unwrap();
    bad.compose[1][1] = Some(1);
    bad.morphisms.push(MorphismRecord { src: 0, tgt: 0, payload: "spare".into() });
    for row in &mut bad.compose {
        row.push(None);
    }
    bad.compose.push(vec![None; 3]);
    let r = run_suite(&SuiteConfig { load: Some(Loaded::Category(bad)), ..cfg("duals") }).unwrap();
    assert!(!r.passed());
    assert_eq!(r.failing()[0].check, "category-axioms");
}

#[test]
fn monoid_oracle_respects_max_order() {
    let r = run_suite(&SuiteConfig { max_order: 2, ..cfg("monoid-oracle") }).unwrap();
    assert!(r.passed());
    assert_eq!(r.suites[0].entries[0].check, "all-actions/order<=2");
}
