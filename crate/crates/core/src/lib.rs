//! Homological invariants of quiver representations and an exact
//! Gröbner/free-resolution engine for checking when orbit closures are
//! Cohen–Macaulay.
//!
//! The crate is organised bottom-up:
//!
//! - [`field`], [`linalg`]: exact scalars (ℚ or 𝔽_p) and elimination.
//! - [`quiver`], [`representation`], [`classify`]: the data model and its text formats.
//! - [`homology`]: Hom, End, Ext¹, orbit dimension and the projective-dimension formula.
//! - [`roots`]: Dynkin root systems, reflection functors, indecomposables, decomposition.
//! - [`degeneration`]: the degeneration order for Dynkin quivers.
//! - [`homogeneity`]: scaling isomorphisms and the λM ≅ M test.
//! - [`groebner`]: polynomials, Gröbner bases, minimal free resolutions and the
//!   Cohen–Macaulay verification pipeline.
//! - [`cli`]: the command-line driver behind the `quiver-cm` binary.

pub mod classify;
pub mod cli;
pub mod degeneration;
pub mod error;
pub mod field;
pub mod groebner;
pub mod homogeneity;
pub mod homology;
pub mod linalg;
pub mod quiver;
pub mod representation;
pub mod roots;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linalg::Matrix;
pub use quiver::{DimVector, Quiver};
pub use representation::Representation;
