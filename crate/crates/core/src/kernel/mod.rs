//! Exact coefficient fields, graded polynomial rings, twisted free modules
//! and a Gröbner engine for submodules of free modules.

mod field;
mod free;
mod groebner;
mod monomial;
mod poly;
mod syzygy;
mod torsion;
mod vector;

pub use field::{Field, Fp, PrimeField, Rationals, Scalar};
pub use free::{GradedMatrix, GradedPresentation, PolyRing};
pub use groebner::{contained_in, groebner_basis, normal_form, standard_monomial_count, term_compare, Buchberger};
pub use monomial::Monomial;
pub use poly::Poly;
pub use syzygy::{colon, intersect, minimal_generators, minimal_generators_modulo, subquotient, syzygy_kernel};
pub use torsion::{
    find_filter_regular, is_filter_regular, saturation, torsion_submodule, DEFAULT_SATURATION_CAP,
    DEFAULT_SEARCH_BUDGET,
};
pub use vector::{Term, Vector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KernelError {
    #[error("invalid coefficient field: {0}")]
    InvalidField(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no filter-regular linear form found within {budget} candidates over {field}; try a larger field")]
    FilterRegularExhausted { budget: usize, field: String },
    #[error("saturation did not stabilize within {cap} colon steps")]
    SaturationCap { cap: usize },
    #[error("{0}")]
    Invalid(String),
}
