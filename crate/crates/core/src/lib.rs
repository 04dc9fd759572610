//! Exact and numeric verification of operator realizations of the
//! inhomogeneous Lorentz group and SU(n) over complex variables, plus a small
//! fermionic Fock model of a molecular vacuum and its gauge response.
//!
//! The crate is `no_std` and needs only `alloc`. File formats, the command
//! line and report rendering live in the `wirtinger` companion crate.

#![no_std]

extern crate alloc;

pub mod fock;
pub mod interactions;
pub mod internal;
pub mod linalg;
pub mod lorentz;
pub mod report;
pub mod symcore;
pub mod transforms;

/// Crate version, recorded in report headers.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub use symcore::{Coefficient, GaussianRational, LinearVariableMap, Monomial, SymError, VariableId, WeylOperator};
