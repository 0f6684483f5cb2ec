//! Verification harness for `cayley-core`: seeded sampling, named suites
//! with reproducible reports, and the handlers behind the `cayley-verify`
//! command.

pub mod commands;
pub mod error;
pub mod report;
pub mod sample;
pub mod suites;

pub use error::CliError;
pub use report::{Counterexample, SuiteReport};
pub use sample::SampleSpec;
pub use suites::{run_suite, Suite};
