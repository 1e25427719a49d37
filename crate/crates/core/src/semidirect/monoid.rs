//! The set-level construction: `⟨x,b⟩⟨y,c⟩ = ⟨xy, b^y c⟩` on `X × C`.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::build_semidirect;
use crate::action::{lift_monoid_action, Monoid, MonoidAction};
use crate::cat::{compare, Category};
use crate::error::Result;
use crate::report::{Budget, CheckReport, LawReport};
use crate::skew::SkewMonoidal;

/// The semidirect product monoid. Element `⟨x,c⟩` has index `x·|C| + c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemidirectMonoid {
    pub x_order: usize,
    pub c_order: usize,
    pub table: Monoid,
}

impl SemidirectMonoid {
    pub fn encode(&self, x: usize, c: usize) -> usize {
        x * self.c_order + c
    }

    pub fn decode(&self, e: usize) -> (usize, usize) {
        (e / self.c_order, e % self.c_order)
    }

    /// Associativity and unitality, exhaustively.
    pub fn check_laws(&self) -> CheckReport {
        let t = &self.table;
        let n = t.order();
        let mut report = CheckReport::new("semidirect monoid", &Budget::default());
        let mut assoc = LawReport::new("associativity", "(pq)r = p(qr)");
        let mut unit = LawReport::new("unitality", "1p = p = p1");
        for p in 0..n {
            unit.tick();
            if t.mul(t.unit, p) != p || t.mul(p, t.unit) != p {
                unit.fail_with(crate::report::FailureKind::Law, inst![self.decode(p)], "unit law");
            }
            for q in 0..n {
                for r in 0..n {
                    assoc.tick();
                    if t.mul(t.mul(p, q), r) != t.mul(p, t.mul(q, r)) {
                        assoc.fail_with(
                            crate::report::FailureKind::Law,
                            inst![self.decode(p), self.decode(q), self.decode(r)],
                            "not associative",
                        );
                    }
                }
            }
        }
        report.push(assoc);
        report.push(unit);
        report
    }
}

/// Tabulates `⟨x,b⟩⟨y,c⟩ = ⟨xy, b^y c⟩`. The table is returned unvalidated;
/// see [`SemidirectMonoid::check_laws`].
pub fn monoid_semidirect(m: &MonoidAction) -> Result<SemidirectMonoid> {
    m.validate()?;
    let (nx, nc) = (m.x.order(), m.c.order());
    let enc = |x: usize, c: usize| x * nc + c;
    let mut mul = alloc::vec![alloc::vec![0; nx * nc]; nx * nc];
    for x in 0..nx {
        for b in 0..nc {
            for y in 0..nx {
                for c in 0..nc {
                    mul[enc(x, b)][enc(y, c)] = enc(m.x.mul(x, y), m.c.mul(m.apply(b, y), c));
                }
            }
        }
    }
    Ok(SemidirectMonoid {
        x_order: nx,
        c_order: nc,
        table: Monoid {
            mul,
            unit: enc(m.x.unit, m.c.unit),
        },
    })
}

/// Compares the object-level tensor of the categorical semidirect product of
/// the lifted action with the monoid table, and checks that every coherence
/// component is an identity.
pub fn check_monoid_reduction(m: &MonoidAction) -> Result<CheckReport> {
    let sm = monoid_semidirect(m)?;
    let sd = build_semidirect(lift_monoid_action(m)?, None)?;
    let budget = Budget::default();
    let mut report = CheckReport::new("monoid reduction", &budget);
    let elems: Vec<(usize, usize)> = (0..sm.table.order()).map(|e| sm.decode(e)).collect();

    let mut table = LawReport::new("tensor-table", "⟨x,b⟩ ⊗ ⟨y,c⟩ = ⟨xy, b^y c⟩");
    for p in &elems {
        for q in &elems {
            table.tick();
            let cat = sd.tensor_obj(p, q);
            let tab = sm.decode(sm.table.mul(sm.encode(p.0, p.1), sm.encode(q.0, q.1)));
            if cat != tab {
                table.fail_with(
                    crate::report::FailureKind::Law,
                    inst![p, q],
                    alloc::format!("category gives {cat:?}, table gives {tab:?}"),
                );
            }
        }
    }
    report.push(table);

    let mut ids = LawReport::new("identity-coherence", "α, λ, ρ are identities");
    for p in &elems {
        compare(&sd, &mut ids, || inst![p], sd.lunit(p), Ok(sd.identity(p)));
        let pi = sd.tensor_obj(p, &sd.unit());
        compare(&sd, &mut ids, || inst![p], sd.runit(p), Ok(sd.identity(&pi)));
        for q in &elems {
            for r in &elems {
                let src = sd.tensor3r(p, q, r);
                compare(&sd, &mut ids, || inst![p, q, r], sd.assoc(p, q, r), Ok(sd.identity(&src)));
            }
        }
    }
    report.push(ids);
    Ok(report)
}
