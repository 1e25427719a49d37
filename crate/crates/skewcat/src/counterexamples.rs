//! Two evaluations in the truth-values semidirect product showing that
//! tensoring on one side fails to preserve a colimit.
//!
//! Objects are `⟨x, M⟩` with `x` a truth value (`false → true`) and `M` a
//! finite generalized metric space. `⟨x,B⟩ ⊗ ⟨y,C⟩ = ⟨x ∧ y, B^y ⊗ C⟩`
//! where `B^false` sends every nonzero distance to `∞`.

use std::fmt::Debug;

use skewcat_core::cat::enumerate_hom;
use skewcat_core::instances::pools::{asym2, tri3};
use skewcat_core::instances::{
    coproduct_is_universal, d_space, gms_act, gms_chain_colimit, gms_coproduct, gms_iso_exists,
    FinGms, GmsAct, Thin, TruthAction, TruthValues,
};
use skewcat_core::num::ExtRat;
use skewcat_core::report::FailureKind;
use skewcat_core::semidirect::{build_semidirect, Semidirect};
use skewcat_core::skew::SkewMonoidal;
use skewcat_core::{Budget, CheckReport, LawReport};

use crate::error::HarnessError;

type Obj = (bool, FinGms);

fn truth() -> Semidirect<TruthAction> {
    build_semidirect(TruthAction::new(TruthValues), None).expect("unvalidated build")
}

fn show(o: &Obj) -> String {
    format!("<{}, {:?}>", if o.0 { "T" } else { "F" }, o.1)
}

/// One step: passes iff `ok`, recording both sides on failure.
fn step<T: Debug>(law: &str, diagram: &str, inst: Vec<String>, ok: bool, got: &T, want: &T) -> LawReport {
    let mut l = LawReport::new(law, diagram);
    l.tick();
    if !ok {
        l.fail_with(FailureKind::Law, inst, format!("got {got:?}, expected {want:?}"));
    }
    l
}

fn step_eq(law: &str, diagram: &str, got: &Obj, want: &Obj) -> LawReport {
    step(law, diagram, vec![show(got)], got == want, &show(got), &show(want))
}

/// Spaces the colimit claims are tested against. Their smallest nonzero
/// distance is `1/2`, so a chain prefix that gets below it already
/// behaves like the full chain `D_{1/k}` against them.
fn test_targets() -> Vec<FinGms> {
    let mut t = vec![FinGms::empty(), FinGms::point()];
    t.extend([ExtRat::zero(), ExtRat::frac(1, 2), ExtRat::int(1), ExtRat::INF].map(d_space));
    t.push(asym2());
    t.push(tri3());
    t
}

/// The chain `⟨T, D_1⟩ → ⟨T, D_{1/2}⟩ → … → ⟨T, D_{1/n}⟩` has colimit
/// `⟨T, D_0⟩`, but its image under `− ⊗ ⟨F, 1⟩` is constant at `⟨F, D_∞⟩`
/// while `⟨T, D_0⟩ ⊗ ⟨F, 1⟩ = ⟨F, D_0⟩`, and `D_0 ≇ D_∞`.
pub fn counterexample_right_closed(stages: usize, budget: &Budget) -> Result<CheckReport, HarnessError> {
    let s = truth();
    let n = stages.max(1) as i64;
    let spaces: Vec<FinGms> = (1..=n).map(|k| d_space(ExtRat::frac(1, k))).collect();
    let (d0, dinf) = (d_space(ExtRat::zero()), d_space(ExtRat::INF));
    let targets = test_targets();
    let probe: Obj = (false, FinGms::point());
    let mut report = CheckReport::new("right tensoring by <F, 1> does not preserve a chain colimit", budget);

    let c = gms_chain_colimit(&spaces, &d0, &targets)?;
    report.push(step(
        "chain-colimit",
        "D_1 -> D_{1/2} -> ... has colimit D_0",
        vec![format!("{n} stages")],
        c.cocone && c.universal && c.colimit == d0,
        &(c.cocone, c.universal),
        &(true, true),
    ));

    let images: Vec<Obj> = spaces.iter().map(|m| s.tensor_obj(&(true, m.clone()), &probe)).collect();
    let mut constant = LawReport::new("image-chain", "<T, D_{1/k}> (x) <F, 1> = <F, D_inf> for every k");
    for (k, img) in images.iter().enumerate() {
        constant.tick();
        if *img != (false, dinf.clone()) {
            constant.fail_with(FailureKind::Law, vec![format!("stage {}", k + 1)], show(img));
        }
    }
    report.push(constant);
    let image_spaces: Vec<FinGms> = images.iter().map(|o| o.1.clone()).collect();
    let ic = gms_chain_colimit(&image_spaces, &dinf, &targets)?;
    report.push(step(
        "image-colimit",
        "the constant chain at D_inf has colimit D_inf",
        vec![],
        ic.cocone && ic.universal,
        &(ic.cocone, ic.universal),
        &(true, true),
    ));

    let at_limit = s.tensor_obj(&(true, d0.clone()), &probe);
    report.push(step_eq("tensor-of-colimit", "<T, D_0> (x) <F, 1> = <F, D_0>", &at_limit, &(false, d0.clone())));

    let iso = gms_iso_exists(&at_limit.1, &dinf);
    report.push(step(
        "not-isomorphic",
        "no isometry D_0 ~ D_inf",
        vec![format!("{:?}", at_limit.1), format!("{dinf:?}")],
        iso.is_none(),
        &iso,
        &None,
    ));
    Ok(report)
}

/// The coproduct in the thin category of truth values, found by search.
fn truth_join(a: bool, b: bool) -> Option<bool> {
    let cat = Thin(TruthValues);
    let arrow = |p: bool, q: bool| enumerate_hom(&cat, &p, &q).is_ok_and(|h| h.len() == 1);
    [false, true]
        .into_iter()
        .find(|&c| arrow(a, c) && arrow(b, c) && [false, true].iter().all(|&d| !(arrow(a, d) && arrow(b, d)) || arrow(c, d)))
}

/// Binary coproduct in the semidirect product: componentwise, with the
/// metric part checked universal against a fixed set of test spaces.
fn coproduct(a: &Obj, b: &Obj) -> Option<Obj> {
    let x = truth_join(a.0, b.0)?;
    let (sum, inl, inr) = gms_coproduct(&a.1, &b.1);
    coproduct_is_universal(&inl, &inr, &test_targets()).then_some((x, sum))
}

/// `⟨x, M⟩ ⊗ −` sends the coproduct `⟨F,1⟩ + ⟨T,0⟩ = ⟨T,1⟩` to `⟨x, M^T⟩`,
/// but the coproduct of the images is `⟨x, M^F⟩`, and these differ
/// whenever `M` has a pair at finite nonzero distance.
pub fn counterexample_left_closed(x: bool, m: &FinGms, budget: &Budget) -> Result<CheckReport, HarnessError> {
    let finite_gap = (0..m.len()).any(|i| (0..m.len()).any(|j| {
        let d = m.dist(i, j);
        !d.is_zero() && !d.is_inf()
    }));
    if !finite_gap {
        return Err(HarnessError::DegenerateProbe(format!("{m:?}")));
    }
    let s = truth();
    let probe: Obj = (x, m.clone());
    let (one, zero) = (FinGms::point(), FinGms::empty());
    let (l, r): (Obj, Obj) = ((false, one.clone()), (true, zero.clone()));
    let mut report = CheckReport::new(format!("left tensoring by {} does not preserve a coproduct", show(&probe)), budget);

    let sum = coproduct(&l, &r);
    report.push(step("coproduct", "<F, 1> + <T, 0> = <T, 1>", vec![show(&l), show(&r)], sum == Some((true, one.clone())), &sum.as_ref().map(show), &Some(show(&(true, one.clone())))));

    let (il, ir) = (s.tensor_obj(&probe, &l), s.tensor_obj(&probe, &r));
    let m_f = gms_act(m, GmsAct::Flatten(false));
    let m_t = gms_act(m, GmsAct::Flatten(true));
    report.push(step_eq("left-image", "<x, M> (x) <F, 1> = <F, M^F>", &il, &(false, m_f.clone())));
    report.push(step_eq("right-image", "<x, M> (x) <T, 0> = <x, 0>", &ir, &(x, zero.clone())));
    let image_sum = coproduct(&il, &ir);
    report.push(step(
        "coproduct-of-images",
        "<F, M^F> + <x, 0> = <x, M^F>",
        vec![show(&il), show(&ir)],
        image_sum == Some((x, m_f.clone())),
        &image_sum.as_ref().map(show),
        &Some(show(&(x, m_f.clone()))),
    ));

    let of_sum = s.tensor_obj(&probe, &(true, one));
    report.push(step_eq("tensor-of-coproduct", "<x, M> (x) <T, 1> = <x, M^T>", &of_sum, &(x, m_t.clone())));

    let iso = gms_iso_exists(&m_t, &m_f);
    report.push(step(
        "not-isomorphic",
        "no isometry M^T ~ M^F",
        vec![format!("{m_t:?}"), format!("{m_f:?}")],
        iso.is_none(),
        &iso,
        &None,
    ));
    Ok(report)
}
