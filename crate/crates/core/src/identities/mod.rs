//! Symbolic Jordan polynomials: an AST with a small expression grammar, an
//! evaluator that is generic over the target algebra, the Glennie-family
//! identities, complete linearization, randomized counterexample search, and
//! Macdonald-style instance checks for operator-commuting tuples.

pub mod ast;
pub mod eval;
pub mod glennie;
pub mod linearize;
pub mod macdonald;
pub mod parser;
pub mod search;

pub use ast::JPoly;
pub use eval::{evaluate, EvalError, FreeJordanBackend, JordanBackend};
pub use glennie::{
    g8, g8_with, g9, g9_with, h8, h8_linearized, h8_linearized_with, h8_with, h9, h9_with,
    OperatorOrder,
};
pub use linearize::{complete_linearization, Linearization, LinearizeError};
pub use macdonald::{check_macdonald_instance, MacdonaldError, MacdonaldReport};
pub use parser::{parse, parse_identity_file, ParseError};
pub use search::{find_counterexample, Witness};
