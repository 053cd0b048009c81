//! Castelnuovo–Mumford regularity of deficiency modules.
//!
//! The crate has two halves. [`bounds`] evaluates the explicit bounding
//! functions over arbitrary-precision integers. [`kernel`] and [`homology`]
//! form a small exact Gröbner-basis engine that computes minimal free
//! resolutions, Hilbert data and deficiency modules `K^i(M)` of graded modules
//! over a polynomial ring, so that [`verify`] can compare the bounds against
//! the invariants they are supposed to dominate. [`cli`] wires everything to
//! JSON input documents and report formats.

pub mod bounds;
pub mod cli;
pub mod ext;
pub mod homology;
pub mod kernel;
pub mod univariate;
pub mod verify;

pub use ext::{ExtBig, ExtInt, Extended};
pub use univariate::QPoly;
