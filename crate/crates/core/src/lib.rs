//! Minimal faithful representations of complex reductive Lie algebras.
//!
//! The crate computes `mu(g)`, the least degree of a faithful linear
//! representation, for reductive algebras `g = s_1 + ... + s_l + C^k`,
//! builds explicit representations of that degree over the rationals, and
//! checks them. Independent oracles (Weyl dimension sweeps, exhaustive
//! dimension-matrix search) re-derive the closed forms.
//!
//! Modules:
//! - [`algebra`]: simple types, reductive algebras, expression syntax.
//! - [`invariants`]: `dim`, `mu`, `alpha`, the nilpotent bound `p(n, k)`.
//! - [`repmodel`]: dimension matrices, decomposition and centralizer shapes.
//! - [`weyl`]: root data and the Weyl dimension formula.
//! - [`matrixrep`]: exact matrix representations and their verification.
//! - [`classify`]: subalgebras of `gl_n` and alpha-pruning against host tables.
//! - [`cli`]: the `lierep` command line.

pub mod algebra;
pub mod classify;
pub mod cli;
pub mod error;
pub mod invariants;
pub mod linalg;
pub mod matrixrep;
pub mod repmodel;
pub mod weyl;

pub use algebra::{parse_expr, Family, ReductiveAlgebra, SimpleType};
pub use error::{Error, ParseError, Result};
