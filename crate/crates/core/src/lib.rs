//! Canonical Landau–Ginzburg superpotentials for the maximal orthogonal
//! Grassmannians `OG(n+1, 2n+2)`, built in exact arithmetic over
//! diagram-indexed Plücker variables, together with their restrictions to
//! the torus chart.
//!
//! - [`diagram`]: staircase diagrams, box labels, and the add/remove/move calculus.
//! - [`poly`]: exact sparse polynomials and unreduced rational expressions.
//! - [`potential`]: the `M`/`N` pair recursion, `δ_i`, and the terms `W_i`.
//! - [`torus`]: path-sum restriction of Plücker coordinates and the
//!   restriction identities.
//! - [`verify`]: per-rank check suite and reports.
//! - [`cli`]: the command-line front end.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod poly;
pub mod potential;
pub mod torus;
pub mod verify;

pub use diagram::{is_valid, Diagram, DiagramPair, HasseEdge, LabeledBox, Rank};
pub use error::{Error, Result};
pub use poly::{Monomial, Polynomial, RationalExpression, Variable};
pub use potential::{delta, m_sets, n_sets, superpotential, term, PairLevel, SuperpotentialTerm};
pub use torus::{
    expected_phi_restriction, laurent_potential, reduced_word, restrict_plucker,
    restrict_polynomial, verify_term_restriction, PluckerRestrictions, ReducedWord,
    TermRestrictionCheck,
};
