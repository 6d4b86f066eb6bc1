//! Exact scalars: multivariate rational functions over the rationals in named
//! formal symbols, complex pairs of them, and a double-precision backend.
//!
//! Exponentials such as `e^{-m/k}` are never expanded; they enter as
//! independent symbols (`lambda`, `lambdaP`), which keeps every identity in
//! this crate a finite rational computation.

mod complex;
pub mod poly;
mod rational;
pub mod symbol;

pub use complex::{Coefficient, ExactComplex};
pub use poly::{Monomial, Polynomial};
pub use rational::{normalize, RationalFunction};
pub use symbol::{Symbol, SymbolRole, SymbolTable};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("degenerate input: zero denominator")]
    DegenerateInput,
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("no value assigned to symbol `{0}`")]
    MissingSymbol(String),
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("non-finite value")]
    NonFinite,
    #[error("symbol `{0}` already defined")]
    DuplicateSymbol(String),
}
