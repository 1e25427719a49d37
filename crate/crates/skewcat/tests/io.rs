use skewcat::io::{parse_document, Document, GmsSpec, Loaded};
use skewcat_core::action::{Monoid, MonoidAction};
use skewcat_core::cat::FiniteCategory;
use skewcat_core::instances::pools::asym2;
use skewcat_core::instances::FinLattice;
use skewcat_core::num::ExtRat;

#[test]
fn gms_with_fractions_and_infinity() {
    let text = r#"{"kind": "gms", "points": ["a", "b", "c"],
        "dist": [["0", "1/2", "inf"], ["2", "0", "inf"], ["inf", "inf", "0"]]}"#;
    let Ok(Loaded::Gms(m)) = parse_document(text) else { panic!("not a gms") };
    assert_eq!(m.len(), 3);
    assert_eq!(m.dist(0, 1), ExtRat::frac(1, 2));
    assert_eq!(m.dist(1, 0), ExtRat::int(2));
    assert!(m.dist(2, 0).is_inf());
}

#[test]
fn gms_roundtrip() {
    let doc = Document::Gms(GmsSpec::of(&asym2()));
    let text = serde_json::to_string(&doc).unwrap();
    assert!(text.contains(r#""1/2""#), "{text}");
    let Ok(Loaded::Gms(m)) = parse_document(&text) else { panic!() };
    assert_eq!(m, asym2());
}

#[test]
fn triangle_violations_and_bad_numbers_are_rejected() {
    let bad = r#"{"kind": "gms", "dist": [["0", "1", "5"], ["1", "0", "1"], ["5", "1", "0"]]}"#;
    assert!(parse_document(bad).unwrap_err().contains("invalid instance"));
    assert!(parse_document(r#"{"kind": "gms", "dist": [["0", "x"], ["1", "0"]]}"#).is_err());
    assert!(parse_document(r#"{"kind": "gms", "dist": [["0", "-1"], ["1", "0"]]}"#).is_err());
    assert!(parse_document(r#"{"kind": "gms", "points": ["a"], "dist": [["0", "1"], ["1", "0"]]}"#).is_err());
    assert!(parse_document(r#"{"kind": "metric", "dist": []}"#).is_err());
}

#[test]
fn lattices() {
    let text = serde_json::to_string(&Document::Lattice(FinLattice::n5())).unwrap();
    let Ok(Loaded::Lattice(l)) = parse_document(&text) else { panic!() };
    assert_eq!(l, FinLattice::n5());
    let no_top = r#"{"kind": "lattice", "leq": [[true, true, true], [false, true, false], [false, false, true]]}"#;
    assert!(parse_document(no_top).is_err());
}

#[test]
fn monoid_actions_are_validated() {
    let inversion = MonoidAction::new(Monoid::cyclic(2), Monoid::cyclic(3), vec![vec![0, 0], vec![1, 2], vec![2, 1]]).unwrap();
    let text = serde_json::to_string(&Document::MonoidAction(inversion.clone())).unwrap();
    let Ok(Loaded::MonoidAction(m)) = parse_document(&text) else { panic!() };
    assert_eq!(m, inversion);
    let moves_unit = r#"{"kind": "monoid_action", "x": {"mul": [[0, 1], [1, 0]], "unit": 0},
        "c": {"mul": [[0, 1], [1, 0]], "unit": 0}, "act": [[0, 1], [1, 0]]}"#;
    assert!(parse_document(moves_unit).is_err());
}

#[test]
fn categories() {
    let c = FiniteCategory::thin(&["0", "1"], |i, j| i <= j).unwrap();
    let text = serde_json::to_string(&Document::Category(c.clone())).unwrap();
    let Ok(Loaded::Category(d)) = parse_document(&text) else { panic!() };
    assert_eq!(d, c);
    let dangling = r#"{"kind": "category", "objects": ["a"], "morphisms": [{"src": 0, "tgt": 1, "payload": "f"}],
        "identities": [0], "compose": [[0]]}"#;
    assert!(parse_document(dangling).is_err());
}
