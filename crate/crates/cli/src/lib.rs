//! Species expression language and output formatting for the `species` binary.

pub mod eval;
pub mod expr;
pub mod output;

pub use eval::Evaluator;
pub use expr::{parse, Expr, ParseError};
