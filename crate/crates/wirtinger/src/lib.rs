//! Configuration, suite orchestration and reporting on top of
//! `wirtinger-core`.

pub mod config;
pub mod dump;
pub mod report;
pub mod suites;

pub use config::{ConfigError, OutputFormat, Overrides, SuiteConfig, SuiteName};
pub use report::{Check, Status, VerificationReport};
pub use suites::run_suite;
