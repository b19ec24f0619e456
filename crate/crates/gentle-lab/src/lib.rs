//! Computations with gentle algebras presented as bound quivers.
//!
//! The crate has two layers that deliberately overlap:
//!
//! * a combinatorial layer ([`quiver`], [`strings`], [`forbidden`],
//!   [`homdim`]) that decides homological questions exactly from forbidden
//!   paths and the string automaton, with no length bounds;
//! * a linear-algebra layer ([`rep`]) over exact rationals that realizes
//!   modules and complexes concretely and re-derives the same answers by
//!   projective resolutions and rank computations.
//!
//! On top of those sit the CM-Auslander construction and its recollement
//! checks ([`cma`]), string complexes and cohomological widths
//! ([`derived`]), and the quasi-tilted / Krull-Gabriel classification
//! ([`classify`]). The [`cli`] module drives everything from the command
//! line; any disagreement between the two layers is treated as a
//! falsification event, not a recoverable error.

pub mod classify;
pub mod cli;
pub mod cma;
pub mod derived;
pub mod forbidden;
pub mod generate;
pub mod homdim;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod report;
pub mod strings;

pub use linalg::Rat;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("{0}")]
    Input(String),
    #[error("bound quiver is not gentle: {}", .0.join("; "))]
    NotGentle(Vec<String>),
    #[error("algebra is infinite-dimensional: oriented cycle {} avoids the ideal", .cycle.join(" -> "))]
    InfiniteDimensional { cycle: Vec<String> },
    #[error("not a band: {0}")]
    NotABand(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// The four bound quivers every test suite exercises. The files also ship
/// in `corpus/` for the command line.
pub mod corpus {
    use crate::quiver::{parse_bound_quiver, BoundQuiver};

    pub const E1_TEXT: &str = include_str!("../corpus/e1.quiver");
    pub const E2_TEXT: &str = include_str!("../corpus/e2.quiver");
    pub const E3_TEXT: &str = include_str!("../corpus/e3.quiver");
    pub const KRONECKER_TEXT: &str = include_str!("../corpus/kronecker.quiver");

    /// Nine vertices, twelve arrows, two full-relational triangles joined by
    /// three relation-carrying spokes.
    pub fn e1() -> BoundQuiver {
        parse_bound_quiver(E1_TEXT).expect("corpus file e1 is well-formed")
    }

    /// The chain 1 -> 2 -> 3 with the composite killed.
    pub fn e2() -> BoundQuiver {
        parse_bound_quiver(E2_TEXT).expect("corpus file e2 is well-formed")
    }

    /// Two vertices on an oriented two-cycle with both composites killed.
    pub fn e3() -> BoundQuiver {
        parse_bound_quiver(E3_TEXT).expect("corpus file e3 is well-formed")
    }

    /// Two parallel arrows, no relations.
    pub fn kronecker() -> BoundQuiver {
        parse_bound_quiver(KRONECKER_TEXT).expect("corpus file kronecker is well-formed")
    }

    pub fn all() -> Vec<(&'static str, BoundQuiver)> {
        vec![("e1", e1()), ("e2", e2()), ("e3", e3()), ("kronecker", kronecker())]
    }
}
