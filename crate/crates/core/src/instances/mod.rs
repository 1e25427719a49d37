//! The categories and actions the checkers are exercised on.

pub mod actions;
pub mod diagram;
pub mod finset;
pub mod gms;
pub mod lattice;
pub mod matrix;
pub mod mutants;
pub mod pools;
pub mod registry;
pub mod thin;

pub use actions::*;
pub use diagram::{ChainDiagrams, Diagram, DiagramMap};
pub use finset::{FinMap, FinSetDuals, FinSetHom, FinSetProduct, FinSetSum};
pub use gms::*;
pub use lattice::{FinLattice, LatticeCat};
pub use matrix::{MatCat, MatDuals, Matrix};
pub use registry::{build_action, ActionParams, BuiltAction, ACTIONS};
pub use thin::*;
