//! Computational toolkit for real simple Lie algebras.
//!
//! The crate works entirely in exact rational arithmetic. Roots and Cartan
//! space vectors are stored in simple-root coordinates together with the
//! symmetrized bilinear form of the root system.
//!
//! * [`rootcore`] builds finite root systems and the Weyl group action.
//! * [`realforms`] holds the Satake-diagram catalog, the matching condition
//!   and the a-hyperbolic rank.
//! * [`nilorbits`] classifies nilpotent orbits of the classical complex
//!   algebras by partitions and computes their weighted Dynkin diagrams.
//! * [`proper`] implements the decision procedures for proper
//!   `SL(2,R)`-actions on homogeneous spaces `G/H`.
//! * [`examples_gen`] enumerates certified families of such spaces.

pub mod error;
pub mod examples_gen;
pub mod linalg;
pub mod nilorbits;
pub mod proper;
pub mod qser;
pub mod realforms;
pub mod rootcore;

pub use error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Q = num_rational::Rational64;

/// Default bound on Weyl-orbit enumeration.
pub const DEFAULT_ORBIT_CAP: usize = 10_000_000;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}
