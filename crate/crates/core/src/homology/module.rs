use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::resolution::{free_resolution, BettiTable, MinimalResolution};
use crate::bounds::{poly_binomial, trunc_binomial_i64, HilbertCoefficients};
use crate::ext::ExtInt;
use crate::kernel::{
    groebner_basis, standard_monomial_count, Field, GradedPresentation, KernelError, PolyRing, Vector,
};
use crate::univariate::QPoly;

/// `dim_k S_m` for `S` with `nvars` variables; zero for `m < 0`.
pub fn ring_dimension(nvars: usize, m: i64) -> BigInt {
    if m < 0 {
        return BigInt::zero();
    }
    let n = nvars as i64;
    trunc_binomial_i64(m + n - 1, n - 1)
}

/// Hilbert function of the module resolved by `betti`.
pub fn hilbert_function_from_betti(betti: &BettiTable, nvars: usize, n: i64) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, j, b) in betti.entries() {
        let term = ring_dimension(nvars, n - j) * BigInt::from(b);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// Hilbert polynomial of the module resolved by `betti`.
pub fn hilbert_poly_from_betti(betti: &BettiTable, nvars: usize) -> QPoly {
    let mut acc = QPoly::zero();
    let d = nvars as i64;
    for (i, j, b) in betti.entries() {
        let mut c = BigRational::from_integer(BigInt::from(b));
        if i % 2 == 1 {
            c = -c;
        }
        acc = acc.add(&poly_binomial(d - 1 - j, nvars - 1).scale(&c));
    }
    acc
}

/// A finitely generated graded module together with its minimal free
/// resolution and the numerical data read off from it.
#[derive(Clone, Debug)]
pub struct GradedModule<F: Field> {
    ring: PolyRing<F>,
    resolution: MinimalResolution<F::Elem>,
    betti: BettiTable,
    gb: Vec<Vector<F::Elem>>,
    hilbert_poly: QPoly,
}

impl<F: Field> GradedModule<F> {
    pub fn new(ring: &PolyRing<F>, p: &GradedPresentation<F::Elem>) -> Result<Self, KernelError> {
        let resolution = free_resolution(ring, p)?;
        let betti = resolution.betti();
        let pres = resolution.presentation();
        let gb = groebner_basis(ring.field(), pres.generator_twists(), pres.relations())?;
        let hilbert_poly = hilbert_poly_from_betti(&betti, ring.nvars());
        Ok(GradedModule { ring: ring.clone(), resolution, betti, gb, hilbert_poly })
    }

    pub fn ring(&self) -> &PolyRing<F> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// The minimal presentation.
    pub fn presentation(&self) -> GradedPresentation<F::Elem> {
        self.resolution.presentation()
    }

    pub fn resolution(&self) -> &MinimalResolution<F::Elem> {
        &self.resolution
    }

    pub fn betti(&self) -> &BettiTable {
        &self.betti
    }

    pub fn is_zero(&self) -> bool {
        self.betti.is_zero()
    }

    /// `length(M_n)` from the Betti numbers.
    pub fn hilbert_function(&self, n: i64) -> BigInt {
        hilbert_function_from_betti(&self.betti, self.nvars(), n)
    }

    /// `length(M_n)` by counting standard monomials of a Gröbner basis.
    pub fn hilbert_function_by_basis(&self, n: i64) -> u64 {
        let pres = self.presentation();
        standard_monomial_count(&self.gb, pres.generator_twists(), self.nvars(), n)
    }

    pub fn hilbert_poly(&self) -> &QPoly {
        &self.hilbert_poly
    }

    pub fn hilbert_poly_at(&self, n: i64) -> BigInt {
        self.hilbert_poly.eval_integer(n)
    }

    /// Krull dimension: `1 + deg p_M`, `0` for nonzero modules of finite
    /// length, `-inf` for the zero module.
    pub fn dim(&self) -> ExtInt {
        if self.is_zero() {
            return ExtInt::NegInf;
        }
        match self.hilbert_poly.degree() {
            Some(k) => ExtInt::Finite(k as i64 + 1),
            None => ExtInt::Finite(0),
        }
    }

    /// Projective dimension, `None` for the zero module.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.resolution.length()
    }

    /// `nvars - pd`, `+inf` for the zero module.
    pub fn depth(&self) -> ExtInt {
        match self.projective_dimension() {
            Some(pd) => ExtInt::Finite(self.nvars() as i64 - pd as i64),
            None => ExtInt::PosInf,
        }
    }

    pub fn beg(&self) -> ExtInt {
        self.betti.beg()
    }

    pub fn gendeg(&self) -> ExtInt {
        self.betti.gendeg()
    }

    /// Regularity from the Betti table.
    pub fn regularity(&self) -> ExtInt {
        self.betti.regularity()
    }

    /// Largest `n` with `length(M_n) != p_M(n)`, `-inf` if there is none.
    pub fn postulation(&self) -> ExtInt {
        let (ExtInt::Finite(reg), ExtInt::Finite(beg)) = (self.regularity(), self.beg()) else {
            return ExtInt::NegInf;
        };
        let dim = self.dim().finite().copied().unwrap_or(0);
        let mut n = reg + 1;
        while n >= beg - dim - 2 {
            if self.hilbert_function(n) != self.hilbert_poly_at(n) {
                return ExtInt::Finite(n);
            }
            n -= 1;
        }
        ExtInt::NegInf
    }

    /// Hilbert coefficients `e_0, .., e_{dim-1}`; empty for finite length
    /// and for the zero module.
    pub fn hilbert_coefficients(&self) -> HilbertCoefficients {
        let d = self.dim().finite().copied().unwrap_or(0).max(0) as usize;
        HilbertCoefficients::from_poly(&self.hilbert_poly, d).expect("Hilbert polynomials are numerical")
    }

    /// Last degree with `M_n != 0` for modules of finite length.
    pub fn end(&self) -> ExtInt {
        match (self.dim(), self.regularity()) {
            (ExtInt::NegInf, _) => ExtInt::NegInf,
            (ExtInt::Finite(0), ExtInt::Finite(reg)) => {
                let mut n = reg;
                while self.hilbert_function(n).is_zero() {
                    n -= 1;
                }
                ExtInt::Finite(n)
            }
            _ => ExtInt::PosInf,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{GradedMatrix, Poly, Rationals};

    fn ring(n: usize) -> PolyRing<Rationals> {
        let names = ["x", "y", "z", "w"];
        PolyRing::new(Rationals, names[..n].iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn quotient(r: &PolyRing<Rationals>, gens: &[Poly<BigRational>]) -> GradedModule<Rationals> {
        let source = gens.iter().map(|g| g.degree().unwrap()).collect();
        let p = GradedPresentation::new(GradedMatrix::from_entries(vec![0], source, &[gens.to_vec()]).unwrap());
        GradedModule::new(r, &p).unwrap()
    }

    #[test]
    fn free_module_hilbert_data() {
        let r = ring(2);
        let m = GradedModule::new(&r, &GradedPresentation::free(vec![0])).unwrap();
        assert_eq!(m.hilbert_poly(), &QPoly::from_int_coeffs(&[1, 1]));
        assert_eq!(m.postulation(), ExtInt::Finite(-2));
        assert_eq!(m.dim(), ExtInt::Finite(2));
        assert_eq!(m.depth(), ExtInt::Finite(2));
        assert_eq!(m.hilbert_function(-1), BigInt::zero());
    }

    #[test]
    fn fixture_a_hilbert_data() {
        let r = ring(2);
        let (x, y) = (r.var(0), r.var(1));
        let m = quotient(&r, &[x.mul(&x), x.mul(&y)]);
        assert_eq!(m.hilbert_poly(), &QPoly::from_int_coeffs(&[1]));
        assert_eq!(m.hilbert_coefficients(), HilbertCoefficients::from_i64(&[1]));
        // length M_1 = 2 while the polynomial is 1
        assert_eq!(m.postulation(), ExtInt::Finite(1));
        assert_eq!(m.dim(), ExtInt::Finite(1));
        assert_eq!(m.depth(), ExtInt::Finite(0));
        for n in -3..6 {
            assert_eq!(m.hilbert_function(n), BigInt::from(m.hilbert_function_by_basis(n)));
        }
    }

    #[test]
    fn fixture_b_hilbert_data() {
        let r = ring(3);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let m = quotient(&r, &[x.mul(&y), x.mul(&z)]);
        assert_eq!(m.hilbert_poly(), &QPoly::from_int_coeffs(&[2, 1]));
        assert_eq!(m.hilbert_coefficients(), HilbertCoefficients::from_i64(&[1, -1]));
        assert_eq!(m.dim(), ExtInt::Finite(2));
        assert_eq!(m.depth(), ExtInt::Finite(1));
        assert_eq!(m.regularity(), ExtInt::Finite(1));
    }

    #[test]
    fn one_variable_guard() {
        let r = ring(1);
        let x = r.var(0);
        let m = quotient(&r, &[x.mul(&x)]);
        let values: Vec<BigInt> = (-2..4).map(|n| m.hilbert_function(n)).collect();
        let expected: Vec<BigInt> = [0, 0, 1, 1, 0, 0].iter().map(|&v| BigInt::from(v)).collect();
        assert_eq!(values, expected);
        assert_eq!(m.dim(), ExtInt::Finite(0));
        assert_eq!(m.end(), ExtInt::Finite(1));
    }
}
