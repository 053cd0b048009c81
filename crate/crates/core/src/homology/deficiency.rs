use super::resolution::{minimal_presentation, MinimalResolution};
use crate::kernel::{subquotient, syzygy_kernel, Field, GradedPresentation, KernelError, PolyRing};

/// `Ext^j_S(M, S(-shift))` as the homology at spot `j` of the dual of the
/// minimal resolution of `M`.
pub fn ext_module<F: Field>(
    ring: &PolyRing<F>,
    res: &MinimalResolution<F::Elem>,
    j: usize,
    shift: i64,
) -> Result<GradedPresentation<F::Elem>, KernelError> {
    let Some(pd) = res.length() else {
        return Ok(GradedPresentation::free(Vec::new()));
    };
    if j > pd {
        return Ok(GradedPresentation::free(Vec::new()));
    }
    let dual_twists: Vec<i64> = res.twists(j).iter().map(|a| shift - a).collect();
    // image of F_{j-1}^* -> F_j^*
    let incoming = match res.differential(j) {
        Some(d) => d.dual(shift).cols().to_vec(),
        None => Vec::new(),
    };
    let p = if j == pd {
        let source = match res.differential(j) {
            Some(d) => d.dual(shift).source().to_vec(),
            None => Vec::new(),
        };
        GradedPresentation::free(dual_twists.clone()).with_relations(&incoming, &source)?
    } else {
        let outgoing = res.differential(j + 1).expect("j < pd").dual(shift);
        let kernel = syzygy_kernel(ring.field(), ring.nvars(), &outgoing)?;
        subquotient(ring.field(), ring.nvars(), &dual_twists, kernel.cols(), &incoming)?
    };
    minimal_presentation(ring, &p)
}

/// The deficiency module `K^i(M) = Ext^{n-i}_S(M, S(-n))`, `n` the number of
/// variables, for `0 <= i <= n`.
pub fn deficiency<F: Field>(
    ring: &PolyRing<F>,
    res: &MinimalResolution<F::Elem>,
    i: usize,
) -> Result<GradedPresentation<F::Elem>, KernelError> {
    let n = ring.nvars();
    if i > n {
        return Err(KernelError::Invalid(format!("deficiency index {i} outside 0..={n}")));
    }
    ext_module(ring, res, n - i, n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::module::GradedModule;
    use crate::homology::resolution::free_resolution;
    use crate::kernel::{GradedMatrix, Poly, Rationals};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn ring(n: usize) -> PolyRing<Rationals> {
        let names = ["x", "y", "z", "w"];
        PolyRing::new(Rationals, names[..n].iter().map(|s| s.to_string()).collect()).unwrap()
    }

    fn quotient(gens: &[Poly<BigRational>]) -> GradedPresentation<BigRational> {
        let source = gens.iter().map(|g| g.degree().unwrap()).collect();
        GradedPresentation::new(GradedMatrix::from_entries(vec![0], source, &[gens.to_vec()]).unwrap())
    }

    fn lengths(r: &PolyRing<Rationals>, p: &GradedPresentation<BigRational>, lo: i64, hi: i64) -> Vec<i64> {
        let m = GradedModule::new(r, p).unwrap();
        (lo..=hi).map(|n| i64::try_from(m.hilbert_function(n)).unwrap()).collect()
    }

    #[test]
    fn fixture_a_deficiency() {
        let r = ring(2);
        let (x, y) = (r.var(0), r.var(1));
        let res = free_resolution(&r, &quotient(&[x.mul(&x), x.mul(&y)])).unwrap();
        let k0 = deficiency(&r, &res, 0).unwrap();
        assert_eq!(lengths(&r, &k0, -3, 2), vec![0, 0, 1, 0, 0, 0]);
        let k1 = deficiency(&r, &res, 1).unwrap();
        assert_eq!(k1.generator_twists(), &[1]);
        assert_eq!(lengths(&r, &k1, -1, 4), vec![0, 0, 1, 1, 1, 1]);
        let k2 = deficiency(&r, &res, 2).unwrap();
        assert_eq!(k2.ngens(), 0);
        assert!(deficiency(&r, &res, 3).is_err());
    }

    #[test]
    fn fixture_b_canonical_module() {
        let r = ring(3);
        let (x, y, z) = (r.var(0), r.var(1), r.var(2));
        let res = free_resolution(&r, &quotient(&[x.mul(&y), x.mul(&z)])).unwrap();
        let k2 = deficiency(&r, &res, 2).unwrap();
        let m = GradedModule::new(&r, &k2).unwrap();
        for n in -2..6 {
            let expected = if n >= 2 { n - 1 } else { 0 };
            assert_eq!(m.hilbert_function(n), BigInt::from(expected), "degree {n}");
        }
        assert_eq!(m.regularity(), crate::ext::ExtInt::Finite(2));
    }

    #[test]
    fn free_module_top_deficiency() {
        let r = ring(2);
        let res = free_resolution(&r, &GradedPresentation::free(vec![0])).unwrap();
        let k2 = deficiency(&r, &res, 2).unwrap();
        assert_eq!(k2.generator_twists(), &[2]);
        assert_eq!(deficiency(&r, &res, 1).unwrap().ngens(), 0);
        assert_eq!(deficiency(&r, &res, 0).unwrap().ngens(), 0);
    }
}
