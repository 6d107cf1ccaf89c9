pub mod enumerate;
pub mod error;
pub mod grammar;
pub mod polynomial;
pub mod stats;
pub mod catalog;
pub mod analysis;
pub mod cli;

pub use error::{Result, SpkError};
pub use polynomial::{poly, var, Monomial, Polynomial, RationalPoint, Var};
