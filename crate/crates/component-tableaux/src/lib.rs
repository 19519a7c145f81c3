//! Component tableaux for the nilfibre of a parabolic nilradical in `sl(n)`.
//!
//! The pipeline is: a [`Composition`] gives a [`Diagram`]; [`builder`]
//! enumerates its component tableaux; [`roots`] derives excluded roots;
//! [`invariants`] computes the semi-invariant generators and checks that they
//! vanish and restrict to coordinates; [`analysis`] does the linear algebra.

pub mod analysis;
pub mod builder;
pub mod diagram;
pub mod invariants;
pub mod linalg;
pub mod poly;
pub mod render;
pub mod report;
pub mod roots;

pub use builder::{component_tableaux, extend_all, ComponentTableau, ExtendedTableau, Label};
pub use diagram::{Composition, Diagram, NeighbouringPair, Pos};
pub use poly::SparsePolynomial;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The construction reached a state its rules say cannot occur.
    #[error("construction violation: {0}")]
    ConstructionViolation(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
