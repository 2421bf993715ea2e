//! Programs, datasets, parsing and grounding.

pub mod ast;
pub mod ground;
pub mod parser;

pub use ast::*;
pub use ground::{active_constants, ground, GroundProgram, FRESH_CONSTANT};
pub use parser::{check_safety, parse_dataset, parse_ground_metric_atom, parse_interval, parse_metric_atom, parse_program};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LangError {
    #[error("syntax error at {line}:{col}: {message}")]
    Syntax { line: usize, col: usize, message: String },
    #[error("unsafe variable `{variable}` in rule `{rule}`")]
    Safety { variable: String, rule: String },
    #[error("bottom is not allowed in a rule head at {line}:{col}")]
    BottomInHead { line: usize, col: usize },
    #[error("fact `{atom}` at {line}:{col} is not ground")]
    NonGroundFact { line: usize, col: usize, atom: String },
    #[error("predicate `{predicate}` used with arity {found} at {line}:{col}, expected {expected}")]
    Arity { predicate: String, expected: usize, found: usize, line: usize, col: usize },
    #[error("predicate `{predicate}` has arity {program} in the program but {dataset} in the dataset")]
    ArityMismatch { predicate: String, program: usize, dataset: usize },
    #[error("interval {interval} at {line}:{col} must be non-negative")]
    NegativeInterval { line: usize, col: usize, interval: String },
    #[error("head interval {interval} at {line}:{col} must have finite endpoints")]
    InfiniteHeadInterval { line: usize, col: usize, interval: String },
}
