//! Named suites of checks and their orchestration.

use std::collections::BTreeMap;
use std::path::PathBuf;

use rayon::prelude::*;
use skewcat_core::action::{
    all_actions, all_monoids, check_strong_action, check_weak_action, lift_monoid_action, ActionPool,
    MonoidAction, PoolOf, WeakAction,
};
use skewcat_core::cat::{check_category_axioms, Pool};
use skewcat_core::closed::{
    check_duality, check_hom_adjunction, check_hom_agreement, check_initial_preservation,
    check_right_adjoint, check_triangle_hom, left_dual_sd, DualHom, DualRightAdjoint, InternalHom,
    LeftDuals, SemidirectLeftHom, SemidirectRightHom, Side, ThinHom,
};
use skewcat_core::instances::mutants::{reverse_points, rotate_values, Component, Mutant, MutantHom};
use skewcat_core::instances::pools::{
    asym2, copower_pool, finset_j_pool, finset_op_pool, finset_pool, gms_pool, kstar_pool,
    precompose_pool, product_pool, scaling_pool, self_tensor_pool, small_spaces, thin_pool, tri3,
    truncation_pool, truth_pool,
};
use skewcat_core::instances::{
    build_action, d_space, ActionParams, Arrow, Copower, CopowerTriangle, ExponentDuals, Exponents,
    FinGms, FinLattice, FinMap, FinSetHom, FinSetJ, FinSetOp, FlattenComonad, GmsHom, GmsMap, Kstar,
    MatDuals, MinGrid, Precompose, ScalarDuals, Scaling, ScalingAdjoint, SelfTensor,
    SelfTensorTriangle, Thin, ThinInverses, Truncation, TruncationCandidate, TruthAction, TruthValues,
    ACTIONS,
};
use skewcat_core::num::{rpow, ExtRat, Rational};
use skewcat_core::report::FailureKind;
use skewcat_core::semidirect::{
    build_semidirect, check_monoid_reduction, check_projection_invariant, corepresented_skew,
    monoid_semidirect, Semidirect, SemidirectInverses,
};
use skewcat_core::skew::{
    check_monoidal_invertibility, check_skew_laws, CoherenceInverses, IdentityInverses,
    OppositeInverses,
};
use skewcat_core::{Budget, CheckReport, LawReport};

use crate::counterexamples::{counterexample_left_closed, counterexample_right_closed};
use crate::error::HarnessError;
use crate::io::Loaded;
use crate::report::{merge, Entry, Expect, Report, SuiteResult};

pub const SUITES: &[(&str, &str)] = &[
    ("skew-laws", "coherence laws of each semidirect product"),
    ("monoid-oracle", "every action between monoids of bounded order"),
    ("action", "weak and strong action laws of each shipped action"),
    ("strong", "invertible coherence from strong actions, and its failure for truncation"),
    ("duals", "left duals in the scalar-deformed matrix product"),
    ("right-closed", "right internal homs from right adjoints"),
    ("left-closed", "left internal homs from triangle homs"),
    ("counterexamples", "colimits that tensoring fails to preserve"),
    ("mutations", "single-component corruptions each checker must catch"),
];

/// Labels accepted by `--action`: the shipped actions plus the
/// corepresented flatten structure, monoid tables and finite-set homs.
pub fn action_labels() -> Vec<&'static str> {
    let mut v = ACTIONS.to_vec();
    v.extend(["flatten", "monoid", "finset", "loaded"]);
    v
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    /// Suite names; `all` expands to every suite.
    pub suites: Vec<String>,
    /// Keep only checks involving this action.
    pub action: Option<String>,
    /// Default cap on instantiations per law.
    pub budget: usize,
    /// Per-suite overrides of `budget`.
    pub budgets: BTreeMap<String, usize>,
    pub seed: u64,
    /// Worker threads; 0 picks the rayon default.
    pub workers: usize,
    pub max_order: usize,
    /// Left-closed counterexample chain length.
    pub chain_length: usize,
    pub load: Option<Loaded>,
    pub out: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: vec!["all".into()],
            action: None,
            budget: Budget::default().max_tuples,
            budgets: BTreeMap::new(),
            seed: 0,
            workers: 0,
            max_order: 3,
            chain_length: 5,
            load: None,
            out: None,
        }
    }
}

impl SuiteConfig {
    pub fn suite(name: &str) -> Self {
        SuiteConfig { suites: vec![name.into()], ..Default::default() }
    }

    fn budget_for(&self, suite: &str) -> Budget {
        Budget::new(self.budgets.get(suite).copied().unwrap_or(self.budget), self.seed)
    }

    fn loaded_space(&self) -> Option<FinGms> {
        match &self.load {
            Some(Loaded::Gms(m)) => Some(m.clone()),
            _ => None,
        }
    }

    fn lattice(&self) -> FinLattice {
        match &self.load {
            Some(Loaded::Lattice(l)) => l.clone(),
            _ => FinLattice::diamond(),
        }
    }

    fn spaces(&self) -> Vec<FinGms> {
        let mut s = small_spaces();
        s.extend(self.loaded_space());
        s
    }
}

type Outcome = Result<CheckReport, String>;

pub struct Job {
    pub check: String,
    pub action: &'static str,
    pub expect: Expect,
    run: Box<dyn Fn(&Budget) -> Outcome + Send + Sync>,
}

fn job(check: impl Into<String>, action: &'static str, run: impl Fn(&Budget) -> Outcome + Send + Sync + 'static) -> Job {
    Job { check: check.into(), action, expect: Expect::Pass, run: Box::new(run) }
}

fn refute(check: impl Into<String>, action: &'static str, run: impl Fn(&Budget) -> Outcome + Send + Sync + 'static) -> Job {
    Job { expect: Expect::Fail, ..job(check, action, run) }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

/// Expands `all`, rejects unknown names, removes duplicates.
pub fn resolve_suites(names: &[String]) -> Result<Vec<&'static str>, HarnessError> {
    let mut out: Vec<&'static str> = Vec::new();
    for n in names {
        if n == "all" {
            for (s, _) in SUITES {
                if !out.contains(s) {
                    out.push(s);
                }
            }
            continue;
        }
        let s = SUITES.iter().find(|(s, _)| s == n).ok_or_else(|| HarnessError::UnknownSuite(n.clone()))?.0;
        if !out.contains(&s) {
            out.push(s);
        }
    }
    Ok(out)
}

pub fn jobs(suite: &str, cfg: &SuiteConfig) -> Vec<Job> {
    match suite {
        "skew-laws" => skew_jobs(cfg),
        "monoid-oracle" => monoid_jobs(cfg),
        "action" => action_jobs(cfg),
        "strong" => strong_jobs(cfg),
        "duals" => dual_jobs(),
        "right-closed" => right_jobs(),
        "left-closed" => left_jobs(cfg),
        "counterexamples" => counterexample_jobs(cfg),
        "mutations" => mutation_jobs(),
        _ => Vec::new(),
    }
}

/// Runs the configured suites, writes the report if an output path is set,
/// and returns it. Law failures are part of the report, not errors.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Report, HarnessError> {
    let suites = resolve_suites(&cfg.suites)?;
    if let Some(a) = &cfg.action {
        if !action_labels().contains(&a.as_str()) {
            return Err(HarnessError::UnknownAction(a.clone()));
        }
    }
    if let (Some(m), true) = (cfg.loaded_space(), suites.contains(&"counterexamples")) {
        counterexample_left_closed(true, &m, &Budget::default())?;
    }
    let mut planned: Vec<(&str, Budget, Vec<Job>)> = Vec::new();
    for s in &suites {
        let mut js = jobs(s, cfg);
        if let Some(a) = &cfg.action {
            js.retain(|j| j.action == a);
            if js.is_empty() && suites.len() == 1 {
                return Err(HarnessError::NothingToRun { suite: s.to_string(), action: a.clone() });
            }
        }
        planned.push((s, cfg.budget_for(s), js));
    }
    if let Some(Loaded::Category(c)) = &cfg.load {
        let c = c.clone();
        let check = job("category-axioms", "loaded", move |b| {
            let pool = Pool::new(c.all_objects(), c.all_morphisms());
            Ok(check_category_axioms(&c, &pool, b))
        });
        planned.push(("loaded", cfg.budget_for("loaded"), vec![check]));
    }

    let tasks: Vec<(usize, &Job, Budget)> = planned
        .iter()
        .enumerate()
        .flat_map(|(i, (_, b, js))| js.iter().map(move |j| (i, j, *b)))
        .collect();
    let exec = || -> Vec<Entry> {
        tasks
            .par_iter()
            .map(|(_, j, b)| Entry::new(j.check.clone(), j.action.to_string(), j.expect, (j.run)(b)))
            .collect()
    };
    let entries = if cfg.workers == 0 {
        exec()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.workers)
            .build()
            .map_err(|e| HarnessError::Workers(e.to_string()))?
            .install(exec)
    };

    let mut results: Vec<SuiteResult> = planned
        .iter()
        .map(|(s, _, _)| SuiteResult { suite: s.to_string(), status: skewcat_core::Status::Pass, entries: Vec::new() })
        .collect();
    for ((i, _, _), e) in tasks.iter().zip(entries) {
        if !e.passed() {
            results[*i].status = skewcat_core::Status::Fail;
        }
        results[*i].entries.push(e);
    }
    let report = Report::new(cfg.seed, cfg.budget, results);
    if let Some(path) = &cfg.out {
        crate::io::write_text(path, &report.to_json())?;
    }
    Ok(report)
}

// skew-laws

fn with_tri3(mut v: Vec<FinGms>) -> Vec<FinGms> {
    v.push(tri3());
    v
}

/// Skew laws of `X ⋉ C` over pairs drawn from `pool`, after checking the
/// action itself on the same pool.
fn semidirect_laws<A>(a: &A, pool: &PoolOf<A>, cap: usize, b: &Budget) -> Outcome
where
    A: WeakAction + Clone,
{
    let s = build_semidirect(a.clone(), Some((pool, b))).map_err(err)?;
    let mut r = check_skew_laws(&s, &product_pool(pool, cap), b);
    r.extend(check_projection_invariant(&s, &product_pool(pool, cap / 4), b));
    Ok(r)
}

fn skew_job<A>(check: &str, action: &'static str, a: A, pool: PoolOf<A>, cap: usize) -> Job
where
    A: WeakAction + Clone + Send + Sync + 'static,
    PoolOf<A>: Send + Sync,
{
    job(check, action, move |b| semidirect_laws(&a, &pool, cap, b))
}

fn skew_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let spaces = cfg.spaces();
    let flat_pool = gms_pool(with_tri3(spaces.clone()), 6);
    let copower = Copower::new(cfg.lattice());
    vec![
        skew_job("truncation", "truncation", Truncation::new(MinGrid), truncation_pool(spaces.clone()), 40),
        skew_job("truncation/three-points", "truncation", Truncation::new(MinGrid), truncation_pool(vec![tri3()]), 12),
        skew_job("truth_values", "truth_values", TruthAction::new(TruthValues), truth_pool(with_tri3(spaces.clone())), 40),
        job("flatten", "flatten", move |b| {
            let s = corepresented_skew(FlattenComonad, Some((&flat_pool, b))).map_err(err)?;
            Ok(check_skew_laws(&s, &flat_pool, b))
        }),
        skew_job("scaling", "scaling", Scaling::new(Exponents { natural: true }), scaling_pool(true, spaces.clone()), 40),
        skew_job("scaling/integers", "scaling", Scaling::new(Exponents { natural: false }), scaling_pool(false, spaces), 40),
        skew_job("finset_op", "finset_op", FinSetOp::default(), finset_op_pool(), 40),
        skew_job("finset_j", "finset_j", FinSetJ { j: 2 }, finset_j_pool(), 40),
        skew_job("precompose", "precompose", Precompose::default(), precompose_pool(), 40),
        skew_job("kstar", "kstar", Kstar::new(1), kstar_pool(&Kstar::new(1)), 40),
        skew_job("kstar/k=2", "kstar", Kstar::new(2), kstar_pool(&Kstar::new(2)), 40),
        skew_job("copower", "copower", copower.clone(), copower_pool(&copower), 40),
        skew_job("self_tensor", "self_tensor", SelfTensor, self_tensor_pool(), 40),
    ]
}

// monoid-oracle

/// Every action between monoids of order at most `max_order`: the
/// semidirect monoid laws, agreement with the categorical tensor, and the
/// weak action laws of the lifted action.
pub fn monoid_oracle(actions: &[MonoidAction], b: &Budget) -> Outcome {
    let mut parts = Vec::new();
    let mut count = LawReport::new("actions-enumerated", "every action table is valid");
    for m in actions {
        count.tick();
        let context = format!("x={:?} c={:?} act={:?}", m.x.mul, m.c.mul, m.act);
        if let Err(e) = m.validate() {
            count.fail_with(FailureKind::Law, vec![context.clone()], e.to_string());
            continue;
        }
        let sm = monoid_semidirect(m).map_err(err)?;
        parts.push((context.clone(), sm.check_laws()));
        parts.push((context.clone(), check_monoid_reduction(m).map_err(err)?));
        let lifted = lift_monoid_action(m).map_err(err)?;
        let (nx, nc) = (m.x.order(), m.c.order());
        let pool = ActionPool {
            x: Pool::new((0..nx).collect(), (0..nx).collect()),
            c: Pool::new((0..nc).collect(), (0..nc).collect()),
        };
        parts.push((context, check_weak_action(&lifted, &pool, b)));
    }
    let mut r = merge(format!("{} monoid actions", actions.len()), b.seed, parts);
    r.push(count);
    Ok(r)
}

fn monoid_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let n = cfg.max_order;
    let mut v = vec![job(format!("all-actions/order<={n}"), "monoid", move |b| {
        let monoids = all_monoids(n);
        let actions: Vec<MonoidAction> =
            monoids.iter().flat_map(|x| monoids.iter().flat_map(move |c| all_actions(x, c))).collect();
        monoid_oracle(&actions, b)
    })];
    if let Some(Loaded::MonoidAction(m)) = &cfg.load {
        let m = m.clone();
        v.push(job("loaded-action", "monoid", move |b| monoid_oracle(std::slice::from_ref(&m), b)));
    }
    v
}

// action

fn action_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let mut v = Vec::new();
    for &name in ACTIONS {
        let params = ActionParams { lattice: Some(cfg.lattice()), ..Default::default() };
        v.push(job(name, name, move |b| Ok(build_action(name, &params).map_err(err)?.check(b))));
    }
    v.push(job("kstar/k=2", "kstar", |b| {
        let a = Kstar::new(2);
        Ok(check_strong_action(&a, &kstar_pool(&a), b))
    }));
    v.push(job("scaling/integers", "scaling", |b| {
        let a = Scaling::new(Exponents { natural: false });
        Ok(check_strong_action(&a, &scaling_pool(false, small_spaces()), b))
    }));
    if let Some(m) = cfg.loaded_space() {
        let m2 = m.clone();
        v.push(job("truncation/loaded", "truncation", move |b| {
            Ok(check_weak_action(&Truncation::new(MinGrid), &truncation_pool(vec![m.clone()]), b))
        }));
        v.push(job("truth_values/loaded", "truth_values", move |b| {
            Ok(check_strong_action(&TruthAction::new(TruthValues), &truth_pool(vec![m2.clone()]), b))
        }));
    }
    v
}

// strong

fn invertibility<A, W>(a: A, w: W, pool: &PoolOf<A>, cap: usize, b: &Budget) -> Outcome
where
    A: WeakAction,
    W: CoherenceInverses<Semidirect<A>>,
{
    let s = build_semidirect(a, None).map_err(err)?;
    Ok(check_monoidal_invertibility(&s, &w, &product_pool(pool, cap), b))
}

const THIN_C: SemidirectInverses<ThinInverses, IdentityInverses> =
    SemidirectInverses { x: ThinInverses, c: IdentityInverses };

fn strong_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let spaces = cfg.spaces();
    let truncation_spaces = spaces.clone();
    let mut v = vec![
        job("truth_values", "truth_values", move |b| {
            invertibility(TruthAction::new(TruthValues), THIN_C, &truth_pool(spaces.clone()), 20, b)
        }),
        job("kstar", "kstar", |b| invertibility(Kstar::new(1), THIN_C, &kstar_pool(&Kstar::new(1)), 40, b)),
        job("kstar/k=2", "kstar", |b| invertibility(Kstar::new(2), THIN_C, &kstar_pool(&Kstar::new(2)), 40, b)),
        job("finset_op", "finset_op", |b| {
            let w = SemidirectInverses { x: OppositeInverses, c: IdentityInverses };
            invertibility(FinSetOp::default(), w, &finset_op_pool(), 40, b)
        }),
        job("scaling/integers", "scaling", |b| {
            let a = Scaling::new(Exponents { natural: false });
            invertibility(a, THIN_C, &scaling_pool(false, small_spaces()), 40, b)
        }),
    ];
    let mut lattices = vec![
        ("diamond", FinLattice::diamond()),
        ("chain5", FinLattice::chain(5)),
        ("m3", FinLattice::m3()),
        ("n5", FinLattice::n5()),
    ];
    if let Some(Loaded::Lattice(l)) = &cfg.load {
        lattices.push(("loaded", l.clone()));
    }
    for (label, l) in lattices {
        v.push(job(format!("copower/{label}"), "copower", move |b| {
            let a = Copower::new(l.clone());
            let w = SemidirectInverses { x: IdentityInverses, c: ThinInverses };
            let pool = copower_pool(&a);
            invertibility(a, w, &pool, 40, b)
        }));
    }
    v.push(refute("truncation/identity-candidates", "truncation", move |b| {
        let a = TruncationCandidate(Truncation::new(MinGrid));
        invertibility(a, THIN_C, &truncation_pool(truncation_spaces.clone()), 10, b)
    }));
    v
}

// duals

fn scalars_for_duals() -> Vec<Rational> {
    [(1, 2), (1, 1), (2, 1), (3, 1)].map(|(p, q)| Rational::new(p, q)).to_vec()
}

/// Snake identities of [`left_dual_sd`] on `⟨x, n⟩` for each scalar `x`
/// and dimension `n ≤ 2`.
pub fn kstar_duality(k: i64, b: &Budget) -> Outcome {
    let s = build_semidirect(Kstar::new(k), None).map_err(err)?;
    let mut parts = Vec::new();
    for x in scalars_for_duals() {
        for n in [1usize, 2] {
            let xd = ScalarDuals::default().dual(&x).map_err(err)?;
            let ad = MatDuals.dual(&n).map_err(err)?;
            let d = left_dual_sd(&s, &xd, &ad, &(x, n)).map_err(err)?;
            parts.push((format!("x={x} n={n}"), check_duality(&s, &THIN_C, &(x, n), &d, b)));
        }
    }
    Ok(merge(format!("left duals in kstar(k={k})"), b.seed, parts))
}

/// Compares the duality payloads of [`left_dual_sd`] with plain matrix
/// duality whose evaluation is rescaled by `x^{-2k}` and whose
/// coevaluation is left alone.
pub fn kstar_rescaled_evaluation(k: i64, b: &Budget) -> Outcome {
    let s = build_semidirect(Kstar::new(k), None).map_err(err)?;
    let mut report = CheckReport::new(format!("kstar(k={k}) duals against rescaled evaluation"), b);
    let mut eval = LawReport::new("evaluation-payload", "pi_C eps = x^{-2k} eps_A");
    let mut coeval = LawReport::new("coevaluation-payload", "pi_C eta = eta_A");
    for x in scalars_for_duals() {
        for n in [1usize, 2] {
            let xd = ScalarDuals::default().dual(&x).map_err(err)?;
            let ad = MatDuals.dual(&n).map_err(err)?;
            let d = left_dual_sd(&s, &xd, &ad, &(x, n)).map_err(err)?;
            let want_eval = ad.eval.scale(rpow(x, -2 * k));
            let inst = vec![format!("x={x}"), format!("n={n}")];
            eval.tick();
            if d.eval.1 != want_eval {
                eval.fail_with(FailureKind::Law, inst.clone(), format!("{:?} vs {want_eval:?}", d.eval.1));
            }
            coeval.tick();
            if d.coeval.1 != ad.coeval {
                coeval.fail_with(FailureKind::Law, inst, format!("{:?} vs {:?}", d.coeval.1, ad.coeval));
            }
        }
    }
    report.push(eval);
    report.push(coeval);
    Ok(report)
}

fn dual_jobs() -> Vec<Job> {
    vec![
        job("kstar", "kstar", |b| kstar_duality(1, b)),
        job("kstar/k=2", "kstar", |b| kstar_duality(2, b)),
        // the payloads carry x^{2k} on the coevaluation instead
        refute("kstar/rescaled-evaluation", "kstar", |b| kstar_rescaled_evaluation(1, b)),
    ]
}

// right-closed

fn exps_hom(natural: bool) -> impl Fn(&i64, &i64) -> skewcat_core::Result<i64> {
    move |y, z| Ok(Exponents { natural }.hom(*y, *z))
}

fn two_point_spaces() -> Vec<FinGms> {
    vec![FinGms::point(), d_space(ExtRat::int(1)), d_space(ExtRat::frac(1, 2)), asym2()]
}

fn scaling_action_pool(natural: bool, exps: Vec<i64>, spaces: Vec<FinGms>) -> ActionPool<i64, Arrow<i64>, FinGms, GmsMap> {
    ActionPool { x: thin_pool(Exponents { natural }, exps), c: gms_pool(spaces, 4) }
}

fn objects_of<XO: Clone, XM, CO: Clone, CM>(p: &ActionPool<XO, XM, CO, CM>) -> Vec<(XO, CO)> {
    p.x.objects.iter().flat_map(|x| p.c.objects.iter().map(move |c| (x.clone(), c.clone()))).collect()
}

/// The direct right hom of the scaling semidirect product.
pub fn scaling_right_hom<'a>(
    s: &'a Semidirect<Scaling>,
    exps: &'a Thin<Exponents>,
) -> SemidirectRightHom<'a, Scaling, ScalingAdjoint, ThinHom<'a, Thin<Exponents>, impl Fn(&i64, &i64) -> skewcat_core::Result<i64>>, GmsHom> {
    SemidirectRightHom {
        s,
        radj: ScalingAdjoint { action: s.action },
        x: ThinHom { cat: exps, side: Side::Right, hom: exps_hom(exps.0.natural) },
        c: GmsHom { side: Side::Right },
    }
}

/// Currying bijection for the scaling product with exponents `exps`.
pub fn scaling_adjunction(natural: bool, exps: Vec<i64>, spaces: Vec<FinGms>, b: &Budget) -> Outcome {
    let thin = Thin(Exponents { natural });
    let s = build_semidirect(Scaling::new(Exponents { natural }), None).map_err(err)?;
    let h = scaling_right_hom(&s, &thin);
    let pool = scaling_action_pool(natural, exps, spaces);
    Ok(check_hom_adjunction(&h, &objects_of(&pool), &product_pool(&pool, 40).morphisms, b))
}

/// Over the integers the direct hom and the one built from duals are both
/// adjunctions and agree.
pub fn scaling_hom_agreement(exps: Vec<i64>, spaces: Vec<FinGms>, b: &Budget) -> Outcome {
    let ints = Thin(Exponents { natural: false });
    let s = build_semidirect(Scaling::new(Exponents { natural: false }), None).map_err(err)?;
    let duals = ExponentDuals { x: ints };
    let direct = scaling_right_hom(&s, &ints);
    let via_dual = SemidirectRightHom {
        s: &s,
        radj: DualRightAdjoint { action: &s.action, duals },
        x: DualHom { duals, inverses: ThinInverses },
        c: GmsHom { side: Side::Right },
    };
    let pool = scaling_action_pool(false, exps, spaces);
    let objects = objects_of(&pool);
    let morphisms = product_pool(&pool, 30).morphisms;
    let mut hom_objects = LawReport::new("hom-objects-agree", "[B, C] direct = [B, C] via duals");
    for p in &objects {
        for q in &objects {
            hom_objects.tick();
            let (d, v) = (direct.hom_obj(p, q).map_err(err)?, via_dual.hom_obj(p, q).map_err(err)?);
            if d != v {
                hom_objects.fail_with(FailureKind::Law, vec![format!("{p:?}"), format!("{q:?}")], format!("{d:?} vs {v:?}"));
            }
        }
    }
    let mut r = merge(
        "integer scaling: direct and dual right homs",
        b.seed,
        vec![
            ("direct".into(), check_hom_adjunction(&direct, &objects, &morphisms, b)),
            ("via-duals".into(), check_hom_adjunction(&via_dual, &objects, &morphisms, b)),
            ("both".into(), check_hom_agreement(&direct, &via_dual, &objects, b)),
        ],
    );
    r.push(hom_objects);
    Ok(r)
}

fn right_jobs() -> Vec<Job> {
    vec![
        job("scaling/adjoint", "scaling", |b| {
            let adj = ScalingAdjoint { action: Scaling::new(Exponents { natural: true }) };
            let pool = scaling_action_pool(true, vec![0, 1, 2, 3], two_point_spaces());
            Ok(check_right_adjoint(&adj, &pool.x.objects, &pool.c, b))
        }),
        job("scaling/adjoint-integers", "scaling", |b| {
            let adj = ScalingAdjoint { action: Scaling::new(Exponents { natural: false }) };
            let pool = scaling_action_pool(false, vec![-3, -1, 0, 2, 3], two_point_spaces());
            Ok(check_right_adjoint(&adj, &pool.x.objects, &pool.c, b))
        }),
        job("scaling/hom", "scaling", |b| {
            scaling_adjunction(true, vec![0, 1, 2, 3], vec![FinGms::point(), d_space(ExtRat::int(1)), asym2()], b)
        }),
        job("scaling/hom-integers", "scaling", |b| {
            scaling_hom_agreement(vec![-1, 0, 1], vec![FinGms::point(), d_space(ExtRat::int(1)), asym2()], b)
        }),
    ]
}

// left-closed

/// Triangle-hom laws and the left currying bijection for the copower
/// action of `lattice`, with sets of size at most 2.
pub fn copower_left_hom(lattice: FinLattice, b: &Budget) -> Outcome {
    let a = Copower::new(lattice);
    let tri = CopowerTriangle { action: a.clone() };
    let triangle = check_triangle_hom(&tri, &copower_pool(&a), b);
    let s = build_semidirect(a.clone(), None).map_err(err)?;
    let h = SemidirectLeftHom { s: &s, x: FinSetHom { side: Side::Left }, tri };
    let pool = ActionPool { x: finset_pool(&[0, 1, 2]), c: copower_pool(&a).c };
    let mut r = check_hom_adjunction(&h, &objects_of(&pool), &product_pool(&pool, 40).morphisms, b);
    r.extend(triangle);
    Ok(r)
}

pub fn self_tensor_left_hom(b: &Budget) -> Outcome {
    let tri = SelfTensorTriangle { action: SelfTensor };
    let pool = self_tensor_pool();
    let triangle = check_triangle_hom(&tri, &pool, b);
    let s = build_semidirect(SelfTensor, None).map_err(err)?;
    let h = SemidirectLeftHom { s: &s, x: FinSetHom { side: Side::Left }, tri };
    let mut r = check_hom_adjunction(&h, &objects_of(&pool), &product_pool(&pool, 40).morphisms, b);
    r.extend(triangle);
    Ok(r)
}

fn left_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let lattice = cfg.lattice();
    vec![
        job("copower", "copower", move |b| copower_left_hom(lattice.clone(), b)),
        job("self_tensor", "self_tensor", self_tensor_left_hom),
        job("finset-exponentials", "finset", |b| {
            let pool = finset_pool(&[0, 1, 2]);
            let parts = [Side::Right, Side::Left]
                .map(|side| (format!("{side:?}"), check_hom_adjunction(&FinSetHom { side }, &pool.objects, &pool.morphisms, b)));
            Ok(merge("finite set exponentials", b.seed, parts.to_vec()))
        }),
    ]
}

// counterexamples

/// Whether `⟨∅, ⊥⟩ ⊗ probe` stays initial in `FinSet ⋉ lattice`.
pub fn initial_preservation(lattice: &FinLattice, probe: (usize, usize), b: &Budget) -> Outcome {
    let a = Copower::new(lattice.clone());
    let s = build_semidirect(a, None).map_err(err)?;
    let targets: Vec<(usize, usize)> =
        [0, 1, 2].iter().flat_map(|&x| lattice.elements().into_iter().map(move |c| (x, c))).collect();
    check_initial_preservation(&s, &(0, lattice.bottom()), &probe, &targets, b).map_err(err)
}

fn counterexample_jobs(cfg: &SuiteConfig) -> Vec<Job> {
    let n = cfg.chain_length;
    let mut v = vec![job("right-closed", "truth_values", move |b| counterexample_right_closed(n, b).map_err(err))];
    let mut probes = vec![
        ("left-closed", true, d_space(ExtRat::int(1))),
        ("left-closed/false", false, d_space(ExtRat::int(1))),
        ("left-closed/half", true, d_space(ExtRat::frac(1, 2))),
        ("left-closed/asym2", true, asym2()),
        ("left-closed/three-points", true, tri3()),
    ];
    if let Some(m) = cfg.loaded_space() {
        probes.push(("left-closed/loaded", true, m));
    }
    for (name, x, m) in probes {
        v.push(job(name, "truth_values", move |b| counterexample_left_closed(x, &m, b).map_err(err)));
    }
    let lattice = cfg.lattice();
    for x in 0..3usize {
        for c in lattice.elements() {
            let l = lattice.clone();
            let name = format!("initial-preservation/<{x},{c}>");
            let run = move |b: &Budget| initial_preservation(&l, (x, c), b);
            // only a probe over the bottom element keeps the tensor initial
            v.push(if c == lattice.bottom() { job(name, "copower", run) } else { refute(name, "copower", run) });
        }
    }
    v
}

// mutations

pub fn mutant_skew_laws(b: &Budget) -> Outcome {
    let pool = truth_pool(small_spaces());
    let m = Mutant { inner: TruthAction::new(TruthValues), component: Component::Psi2, corrupt: reverse_points };
    let s = build_semidirect(m, None).map_err(err)?;
    Ok(check_skew_laws(&s, &product_pool(&pool, 20), b))
}

pub fn mutant_invertibility(b: &Budget) -> Outcome {
    let pool = truth_pool(small_spaces());
    let m = Mutant { inner: TruthAction::new(TruthValues), component: Component::Phi2Inv, corrupt: reverse_points };
    let mut r = check_strong_action(&m, &pool, b);
    r.extend(invertibility(m, THIN_C, &pool, 20, b)?);
    Ok(r)
}

pub fn mutant_right_hom(b: &Budget) -> Outcome {
    let exps = Thin(Exponents { natural: true });
    let s = build_semidirect(Scaling::new(Exponents { natural: true }), None).map_err(err)?;
    let h = scaling_right_hom(&s, &exps);
    let m = MutantHom { inner: &h, corrupt: |g: &(Arrow<i64>, GmsMap)| (g.0.clone(), reverse_points(&g.1)) };
    let pool = scaling_action_pool(true, vec![0, 1], vec![FinGms::point(), asym2()]);
    Ok(check_hom_adjunction(&m, &objects_of(&pool), &[], b))
}

pub fn mutant_left_hom(b: &Budget) -> Outcome {
    let a = Copower::new(FinLattice::diamond());
    let s = build_semidirect(a.clone(), None).map_err(err)?;
    let h = SemidirectLeftHom { s: &s, x: FinSetHom { side: Side::Left }, tri: CopowerTriangle { action: a } };
    let m = MutantHom { inner: &h, corrupt: |g: &(FinMap, Arrow<usize>)| (rotate_values(&g.0), g.1.clone()) };
    let objects: Vec<(usize, usize)> = [1, 2].iter().flat_map(|&x| [0, 3].map(|c| (x, c))).collect();
    Ok(check_hom_adjunction(&m, &objects, &[], b))
}

fn mutation_jobs() -> Vec<Job> {
    vec![
        refute("psi2-reversed/skew-laws", "truth_values", mutant_skew_laws),
        refute("phi2-inverse-reversed/invertibility", "truth_values", mutant_invertibility),
        refute("curry-reversed/right-hom", "scaling", mutant_right_hom),
        refute("curry-rotated/left-hom", "copower", mutant_left_hom),
    ]
}
