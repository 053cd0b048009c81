//! Minimal free resolutions, Hilbert data, deficiency modules and the
//! cohomological invariants derived from them.

mod deficiency;
mod module;
mod profile;
mod resolution;

pub use deficiency::{deficiency, ext_module};
pub use module::{hilbert_function_from_betti, hilbert_poly_from_betti, ring_dimension, GradedModule};
pub use profile::{CohomologyProfile, NuValue};
pub use resolution::{free_resolution, minimal_presentation, BettiTable, MinimalResolution};
