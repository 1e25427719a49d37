//! Skew monoidal categories, weak actions on them, and their semidirect
//! products, with law checkers that work over enumerable pools of objects
//! and morphisms.

#![no_std]

extern crate alloc;

/// Debug-renders each argument, for failure instantiations.
macro_rules! inst {
    ($($e:expr),* $(,)?) => {
        alloc::vec![$(alloc::format!("{:?}", $e)),*]
    };
}

pub mod action;
pub mod cat;
pub mod closed;
pub mod error;
pub mod instances;
pub mod num;
pub mod report;
pub mod semidirect;
pub mod skew;

pub use error::{Error, Result};
pub use report::{Budget, CheckReport, LawReport, Status};
