//! Workbench for equilibrium logic with explicit negation.
//!
//! Formulas mix two negations: explicit negation `~` (constructive falsity,
//! freely nestable) and default negation `not` (negation as failure). They
//! are evaluated over here-and-there pairs `<H,T>` of consistent literal sets,
//! or equivalently over the five truth values `-2..=2`.
//!
//! The crate is organised as
//!
//! - [`syntax`]: formulas, rules, programs, theories and interpretations;
//! - [`parser`]: the text grammar (`.x5` files);
//! - [`semantics`]: satisfaction, falsification and the five-valued valuation;
//! - [`reduct`]: the nested-expression reduct and the dual `+`/`-` reducts;
//! - [`solver`]: brute-force enumeration of answer sets and equilibrium models;
//! - [`equivalence`]: validity, weak and substitution equivalence, and
//!   discriminating contexts;
//! - [`transform`]: normal forms, regular rules, solver export and
//!   cross-encodings between the two five-valued logics.

pub mod equivalence;
pub mod error;
pub mod parser;
pub mod reduct;
pub mod semantics;
pub mod solver;
pub mod syntax;
pub mod transform;

pub use error::{Error, Result};
pub use parser::{parse_formula, parse_interpretation, parse_program, parse_theory, SourceSpan};
pub use semantics::{value5, x5_fals, x5_sat, EvalMode};
pub use syntax::{
    Atom, Atoms, ExplicitLiteral, FiveValue, Formula, Interpretation, Program, Rule, Signature,
    Theory, X5Interpretation,
};
