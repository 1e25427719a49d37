//! JSON documents accepted by `--load`.
//!
//! Every document is an object with a `kind` field:
//!
//! ```json
//! {"kind": "gms", "dist": [["0", "1/2"], ["inf", "0"]]}
//! {"kind": "lattice", "leq": [[true, true], [false, true]]}
//! {"kind": "monoid_action", "x": {"mul": [[0]], "unit": 0}, "c": {...}, "act": [[0], ...]}
//! {"kind": "category", "objects": [...], "morphisms": [...], "identities": [...], "compose": [...]}
//! ```
//!
//! Distances are strings: `"p/q"`, an integer, or `"inf"`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use skewcat_core::action::MonoidAction;
use skewcat_core::cat::FiniteCategory;
use skewcat_core::instances::{FinGms, FinLattice};
use skewcat_core::num::ExtRat;

use crate::error::HarnessError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GmsSpec {
    /// Optional point labels, only used for display.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<String>,
    pub dist: Vec<Vec<ExtRat>>,
}

impl GmsSpec {
    pub fn of(m: &FinGms) -> Self {
        GmsSpec { points: Vec::new(), dist: m.rows() }
    }

    pub fn build(&self) -> skewcat_core::Result<FinGms> {
        if !self.points.is_empty() && self.points.len() != self.dist.len() {
            return Err(skewcat_core::Error::InvalidInstance(format!(
                "{} labels for {} points",
                self.points.len(),
                self.dist.len()
            )));
        }
        FinGms::new(self.dist.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Document {
    Gms(GmsSpec),
    Lattice(FinLattice),
    MonoidAction(MonoidAction),
    Category(FiniteCategory),
}

/// A validated document.
#[derive(Debug, Clone)]
pub enum Loaded {
    Gms(FinGms),
    Lattice(FinLattice),
    MonoidAction(MonoidAction),
    Category(FiniteCategory),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Gms(_) => "gms",
            Loaded::Lattice(_) => "lattice",
            Loaded::MonoidAction(_) => "monoid_action",
            Loaded::Category(_) => "category",
        }
    }
}

pub fn parse_document(text: &str) -> Result<Loaded, String> {
    let doc: Document = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let checked = match doc {
        Document::Gms(g) => g.build().map(Loaded::Gms),
        Document::Lattice(l) => Ok(Loaded::Lattice(l)),
        Document::MonoidAction(m) => m.validate().map(|()| Loaded::MonoidAction(m)),
        Document::Category(c) => c.validate().map(|()| Loaded::Category(c)),
    };
    checked.map_err(|e| e.to_string())
}

pub fn load_document(path: &Path) -> Result<Loaded, HarnessError> {
    let text = fs::read_to_string(path)
        .map_err(|source| HarnessError::Io { path: path.to_path_buf(), source })?;
    parse_document(&text).map_err(|message| HarnessError::Format { path: path.to_path_buf(), message })
}

pub fn write_text(path: &Path, text: &str) -> Result<(), HarnessError> {
    fs::write(path, text).map_err(|source| HarnessError::Io { path: path.to_path_buf(), source })
}
