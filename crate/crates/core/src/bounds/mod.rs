//! Closed-form and recursive regularity bounds.
//!
//! Everything here is pure integer arithmetic over [`BigInt`]; some of the
//! derived bounds are doubly exponential in the dimension, so no fixed-width
//! arithmetic is used anywhere. Binomials inside bound formulas follow the
//! truncated convention of [`trunc_binomial`]; binomials inside Hilbert
//! polynomials are genuine polynomials, see [`poly_binomial`].

mod binomial;
mod derived;
mod functions;
mod hilbert;

use num_bigint::BigInt;
use thiserror::Error;

pub use binomial::{poly_binomial, trunc_binomial, trunc_binomial_i64};
pub use derived::{
    diagonal_cohomology_bound, gamma_ideal_bound, ideal_gendeg_bound, ideal_mumford_bound,
    lemma33_bound, mumford_t, presentation_bound, submodule_gendeg_bound,
    submodule_mumford_bound, MumfordT, SubmoduleGendegBound,
};
pub use functions::{eval_e, eval_f, eval_f_traced, eval_g, BoundEvaluator, RecursionTrace, TraceStep};
pub use hilbert::{eval_h, hilbert_poly_of_coeffs, HilbertCoefficients};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundError {
    #[error("index i = {i} outside 0..={max}")]
    IndexOutOfRange { i: i64, max: i64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Caps `(x_0, .., x_{d-1}; y)` for the bounding function `F^i_d`: `x_j`
/// bounds `d^j_M(-j)` and `y` bounds `beg(M)` from below.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagonalVector {
    entries: Vec<BigInt>,
    basedeg: BigInt,
}

impl DiagonalVector {
    pub fn new(entries: Vec<BigInt>, basedeg: BigInt) -> Result<Self, BoundError> {
        if entries.is_empty() {
            return Err(BoundError::InvalidArgument("diagonal vector needs d >= 1 entries".into()));
        }
        if entries.iter().any(|x| x.sign() == num_bigint::Sign::Minus) {
            return Err(BoundError::InvalidArgument("diagonal entries must be nonnegative".into()));
        }
        Ok(DiagonalVector { entries, basedeg })
    }

    pub fn from_i64(entries: &[i64], basedeg: i64) -> Result<Self, BoundError> {
        DiagonalVector::new(entries.iter().map(|&x| BigInt::from(x)).collect(), basedeg.into())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn basedeg(&self) -> &BigInt {
        &self.basedeg
    }

    /// The same caps in dimension `d >= self.dim()`, zero-filled.
    pub fn padded(&self, d: usize) -> DiagonalVector {
        let mut entries = self.entries.clone();
        entries.resize(d.max(entries.len()), BigInt::from(0));
        DiagonalVector { entries, basedeg: self.basedeg.clone() }
    }
}

pub(crate) fn check_index(i: i64, max: i64) -> Result<usize, BoundError> {
    if i < 0 || i > max {
        Err(BoundError::IndexOutOfRange { i, max })
    } else {
        Ok(i as usize)
    }
}
