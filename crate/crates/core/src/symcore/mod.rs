//! Exact arithmetic for the Weyl algebra over complex (Wirtinger) variables.
//!
//! Every variable and its conjugate are independent symbols, each with its
//! own derivative. Operators are stored normal ordered (multiplications left
//! of derivatives) with a fixed variable order, so equality of operators is
//! equality of term maps.

mod coefficient;
mod linear_map;
mod operator;
mod text;
mod variable;

use core::fmt;

pub use coefficient::{Coefficient, GaussianRational, FLOAT_ZERO_TOLERANCE};
pub use linear_map::{substitute_linear, LinearForm, LinearVariableMap};
pub use operator::{Monomial, Polynomial, Powers, WeylOperator};
pub use text::to_text;
pub use variable::{Family, Kind, VariableId};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymError {
    /// Operands draw on different variable families.
    AlphabetMismatch,
    /// A polynomial argument carried derivative symbols.
    NotPolynomial,
    Unassigned(VariableId),
    NotInvertible,
    ImageOutsideDomain(VariableId),
    /// Substitution images are given for unconjugated variables only.
    ConjugatedDomain(VariableId),
    Parse { line: usize },
}

impl fmt::Display for SymError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymError::AlphabetMismatch => f.write_str("operands use different variable alphabets"),
            SymError::NotPolynomial => f.write_str("expected a polynomial (no derivative symbols)"),
            SymError::Unassigned(v) => write!(f, "variable {} has no value", v),
            SymError::NotInvertible => f.write_str("linear map is not invertible"),
            SymError::ImageOutsideDomain(v) => write!(f, "image uses {} outside the map's domain", v),
            SymError::ConjugatedDomain(v) => write!(f, "images must be given for unconjugated variables, got {}", v),
            SymError::Parse { line } => write!(f, "malformed operator text at line {}", line),
        }
    }
}
