//! Construction of the shipped actions by name.

use alloc::format;
use alloc::string::String;

use serde::{Deserialize, Serialize};

use super::actions::{
    Copower, CopowerTriangle, FinSetJ, FinSetOp, Kstar, Precompose, Scaling, ScalingAdjoint,
    SelfTensor, SelfTensorTriangle, Truncation, TruthAction,
};
use super::lattice::FinLattice;
use super::pools;
use super::thin::{Exponents, MinGrid, TruthValues};
use crate::action::{check_strong_action, check_weak_action};
use crate::error::{Error, Result};
use crate::report::{Budget, CheckReport};

pub const ACTIONS: &[&str] = &[
    "truncation",
    "truth_values",
    "finset_op",
    "finset_j",
    "precompose",
    "kstar",
    "scaling",
    "copower",
    "self_tensor",
];

pub const MAX_K: i64 = 3;
pub const MAX_J: usize = 2;
pub const MAX_LATTICE: usize = 6;

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionParams {
    /// Exponent of the deformation for `kstar`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    /// `|J|` for `finset_j`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<usize>,
    /// `scaling` over ℕ (default) or ℤ.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub natural: Option<bool>,
    /// Lattice for `copower`; the diamond by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lattice: Option<FinLattice>,
}

#[derive(Debug, Clone)]
pub enum BuiltAction {
    Truncation(Truncation),
    TruthValues(TruthAction),
    FinsetOp(FinSetOp),
    FinsetJ(FinSetJ),
    Precompose(Precompose),
    Kstar(Kstar),
    Scaling { action: Scaling, adjoint: ScalingAdjoint },
    Copower { action: Copower, triangle: CopowerTriangle },
    SelfTensor { action: SelfTensor, triangle: SelfTensorTriangle },
}

pub fn build_action(name: &str, params: &ActionParams) -> Result<BuiltAction> {
    let out = |what: String| Err(Error::ParamOutOfBounds(what));
    Ok(match name {
        "truncation" => BuiltAction::Truncation(Truncation::new(MinGrid)),
        "truth_values" => BuiltAction::TruthValues(TruthAction::new(TruthValues)),
        "finset_op" => BuiltAction::FinsetOp(FinSetOp::default()),
        "finset_j" => {
            let j = params.j.unwrap_or(2);
            if j > MAX_J {
                return out(format!("j = {j} exceeds {MAX_J}"));
            }
            BuiltAction::FinsetJ(FinSetJ { j })
        }
        "precompose" => BuiltAction::Precompose(Precompose::default()),
        "kstar" => {
            let k = params.k.unwrap_or(1);
            if k.abs() > MAX_K {
                return out(format!("|k| = {} exceeds {MAX_K}", k.abs()));
            }
            BuiltAction::Kstar(Kstar::new(k))
        }
        "scaling" => {
            let action = Scaling::new(Exponents { natural: params.natural.unwrap_or(true) });
            BuiltAction::Scaling { action, adjoint: ScalingAdjoint { action } }
        }
        "copower" => {
            let lattice = params.lattice.clone().unwrap_or_else(FinLattice::diamond);
            if lattice.len() > MAX_LATTICE {
                return out(format!("lattice of size {} exceeds {MAX_LATTICE}", lattice.len()));
            }
            let action = Copower::new(lattice);
            BuiltAction::Copower { triangle: CopowerTriangle { action: action.clone() }, action }
        }
        "self_tensor" => BuiltAction::SelfTensor {
            action: SelfTensor,
            triangle: SelfTensorTriangle { action: SelfTensor },
        },
        _ => return Err(Error::UnknownAction(String::from(name))),
    })
}

impl BuiltAction {
    pub fn name(&self) -> &'static str {
        match self {
            BuiltAction::Truncation(_) => "truncation",
            BuiltAction::TruthValues(_) => "truth_values",
            BuiltAction::FinsetOp(_) => "finset_op",
            BuiltAction::FinsetJ(_) => "finset_j",
            BuiltAction::Precompose(_) => "precompose",
            BuiltAction::Kstar(_) => "kstar",
            BuiltAction::Scaling { .. } => "scaling",
            BuiltAction::Copower { .. } => "copower",
            BuiltAction::SelfTensor { .. } => "self_tensor",
        }
    }

    /// Truncation is the only shipped action that is weak but not strong.
    pub fn is_strong(&self) -> bool {
        !matches!(self, BuiltAction::Truncation(_))
    }

    /// The weak action laws, plus the strong ones where they apply, over
    /// the default pool.
    pub fn check(&self, budget: &Budget) -> CheckReport {
        let small = pools::small_spaces;
        match self {
            BuiltAction::Truncation(a) => check_weak_action(a, &pools::truncation_pool(small()), budget),
            BuiltAction::TruthValues(a) => check_strong_action(a, &pools::truth_pool(small()), budget),
            BuiltAction::FinsetOp(a) => check_strong_action(a, &pools::finset_op_pool(), budget),
            BuiltAction::FinsetJ(a) => check_strong_action(a, &pools::finset_j_pool(), budget),
            BuiltAction::Precompose(a) => check_strong_action(a, &pools::precompose_pool(), budget),
            BuiltAction::Kstar(a) => check_strong_action(a, &pools::kstar_pool(a), budget),
            BuiltAction::Scaling { action, .. } => {
                let pool = pools::scaling_pool(action.x.0.natural, small());
                check_strong_action(action, &pool, budget)
            }
            BuiltAction::Copower { action, .. } => {
                check_strong_action(action, &pools::copower_pool(action), budget)
            }
            BuiltAction::SelfTensor { action, .. } => {
                check_strong_action(action, &pools::self_tensor_pool(), budget)
            }
        }
    }
}
