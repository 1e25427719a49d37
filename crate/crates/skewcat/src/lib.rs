//! Harness around `skewcat-core`: named suites, the two colimit
//! counterexamples, JSON input documents and reports.

pub mod counterexamples;
pub mod error;
pub mod io;
pub mod report;
pub mod suites;

pub use skewcat_core as core;

pub use counterexamples::{counterexample_left_closed, counterexample_right_closed};
pub use error::HarnessError;
pub use report::{Entry, Expect, Report};
pub use suites::{run_suite, SuiteConfig, SUITES};
