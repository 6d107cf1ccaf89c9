//! Polynomial families, gamma tables and the identity checks between routes.

mod checks;
mod families;
mod gamma;

pub use checks::*;
pub use families::*;
pub use gamma::{
    gamma_evaluate, gamma_substitute, gamma_table, gamma_table_cached, gamma_table_grammar,
    gamma_table_recursion, spec_variables, GammaSpec, GammaTable, SpecName,
};
