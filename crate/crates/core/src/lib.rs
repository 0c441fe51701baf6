//! Exact arithmetic in a computable fragment of a non-Archimedean
//! ultrapower field.
//!
//! Elements are quotients of generalized polynomials in an infinitely
//! large unit ω (the class of the sequence `n ↦ n`) with rational
//! exponents and rational coefficients. On top of the field sit monads and
//! galaxies, walkable worlds, the reciprocal self-similarities, the
//! monad criterion for limits of rational sequences, and a literal finite
//! model of filters, ideals and reduced powers.

pub mod batch;
pub mod error;
pub mod filters;
pub mod gpoly;
pub mod hyper;
pub mod limits;
pub mod monads;
pub mod rational;
pub mod similarity;
pub mod worlds;

#[cfg(any(test, feature = "random"))]
pub mod random;

pub use error::{Error, Result};
pub use gpoly::{GPoly, Term};
pub use hyper::{Hyper, MagnitudeClass, Sign};
pub use rational::Rational;
