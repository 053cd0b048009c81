use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::deficiency::deficiency;
use super::module::GradedModule;
use crate::bounds::HilbertCoefficients;
use crate::ext::ExtInt;
use crate::kernel::{Field, GradedPresentation, KernelError, PolyRing};
use crate::univariate::QPoly;

/// The two readings of the cohomological postulation number: the first
/// disagreement of `d^i` with its polynomial, and `-p(K^{i+1})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NuValue {
    pub definitional: ExtInt,
    pub via_deficiency: ExtInt,
}

/// Every cohomological invariant of one module.
#[derive(Clone, Debug)]
pub struct CohomologyProfile<F: Field> {
    module: GradedModule<F>,
    deficiency: Vec<GradedModule<F>>,
    pub dim: ExtInt,
    pub depth: ExtInt,
    pub beg: ExtInt,
    pub gendeg: ExtInt,
    /// Regularity from the Betti table.
    pub reg: ExtInt,
    /// `a[i] = -beg(K^i)` for `i = 0..=n`.
    pub a: Vec<ExtInt>,
    /// `reg_k[k] = max{a_i + i : i >= k}` for `k = 0..=n+1`.
    pub reg_k: Vec<ExtInt>,
    pub hilbert_poly: QPoly,
    pub e: HilbertCoefficients,
    pub postulation: ExtInt,
    /// `nu[i]` for `i = 0..n-1`.
    pub nu: Vec<NuValue>,
    /// `(d^0(0), d^1(-1), .., d^{dim-1}(1-dim))`.
    pub diagonal: Vec<BigInt>,
    pub window: (i64, i64),
}

impl<F: Field> CohomologyProfile<F> {
    pub fn new(ring: &PolyRing<F>, p: &GradedPresentation<F::Elem>) -> Result<Self, KernelError> {
        Self::from_module(GradedModule::new(ring, p)?)
    }

    pub fn from_module(module: GradedModule<F>) -> Result<Self, KernelError> {
        let ring = module.ring().clone();
        let n = ring.nvars();
        let mut deficiency_modules = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let k = deficiency(&ring, module.resolution(), i)?;
            deficiency_modules.push(GradedModule::new(&ring, &k)?);
        }
        let a: Vec<ExtInt> = deficiency_modules.iter().map(|k| k.beg().negate()).collect();
        let mut reg_k = vec![ExtInt::NegInf; n + 2];
        for k in (0..=n).rev() {
            reg_k[k] = reg_k[k + 1].clone().max(a[k].shift(k as i64));
        }
        let dim = module.dim();
        let beg = module.beg();
        let reg = module.regularity();
        let window = match (&beg, &reg, &dim) {
            (ExtInt::Finite(b), ExtInt::Finite(r), ExtInt::Finite(d)) => (b - d - 2, r + 2),
            _ => (-2, 2),
        };
        let mut profile = CohomologyProfile {
            depth: module.depth(),
            gendeg: module.gendeg(),
            hilbert_poly: module.hilbert_poly().clone(),
            e: module.hilbert_coefficients(),
            postulation: module.postulation(),
            module,
            deficiency: deficiency_modules,
            dim,
            beg,
            reg,
            a,
            reg_k,
            nu: Vec::new(),
            diagonal: Vec::new(),
            window,
        };
        profile.nu = (0..n).map(|i| profile.compute_nu(i)).collect();
        let d = profile.dim.finite().copied().unwrap_or(0).max(0);
        profile.diagonal = (0..d).map(|i| profile.d(i as usize, -i)).collect();
        Ok(profile)
    }

    pub fn module(&self) -> &GradedModule<F> {
        &self.module
    }

    pub fn nvars(&self) -> usize {
        self.module.nvars()
    }

    /// `K^i(M)`, `0 <= i <= n`.
    pub fn deficiency(&self, i: usize) -> &GradedModule<F> {
        &self.deficiency[i]
    }

    pub fn deficiency_modules(&self) -> &[GradedModule<F>] {
        &self.deficiency
    }

    pub fn hilbert_function(&self, n: i64) -> BigInt {
        self.module.hilbert_function(n)
    }

    pub fn is_zero(&self) -> bool {
        self.module.is_zero()
    }

    /// `reg^k(M)`; `-inf` for `k` beyond the number of variables.
    pub fn reg_from(&self, k: usize) -> ExtInt {
        self.reg_k.get(k).cloned().unwrap_or(ExtInt::NegInf)
    }

    /// `h^i_M(n) = length K^i(M)_{-n}`.
    pub fn h(&self, i: usize, n: i64) -> BigInt {
        match self.deficiency.get(i) {
            Some(k) => k.hilbert_function(-n),
            None => BigInt::zero(),
        }
    }

    /// `d^i_M(n)`: `length M_n - h^0 + h^1` for `i = 0`, `h^{i+1}` above.
    pub fn d(&self, i: usize, n: i64) -> BigInt {
        if i == 0 {
            self.hilbert_function(n) - self.h(0, n) + self.h(1, n)
        } else {
            self.h(i + 1, n)
        }
    }

    /// `q^i_M(x) = p_{K^{i+1}}(-x)`.
    pub fn q(&self, i: usize) -> QPoly {
        match self.deficiency.get(i + 1) {
            Some(k) => k.hilbert_poly().reflect(),
            None => QPoly::zero(),
        }
    }

    fn compute_nu(&self, i: usize) -> NuValue {
        let via_deficiency = match self.deficiency.get(i + 1) {
            Some(k) => k.postulation().negate(),
            None => ExtInt::PosInf,
        };
        if i > 0 {
            return NuValue { definitional: via_deficiency.clone(), via_deficiency };
        }
        let definitional = self.nu0_by_scan(&via_deficiency);
        NuValue { definitional, via_deficiency }
    }

    fn nu0_by_scan(&self, minus_p_k1: &ExtInt) -> ExtInt {
        let ExtInt::Finite(beg) = self.beg else {
            return ExtInt::PosInf;
        };
        let lo = match minus_p_k1 {
            ExtInt::Finite(v) => beg.min(*v) - 1,
            _ => beg - 1,
        };
        let hi_ext = self.postulation.clone().max(self.a[0].clone()).max(self.a.get(1).cloned().unwrap_or(ExtInt::NegInf));
        let hi = match hi_ext {
            ExtInt::Finite(v) => v + 1,
            _ => lo,
        };
        let q = self.q(0);
        for n in lo..=hi {
            if self.d(0, n) != q.eval_integer(n) {
                return ExtInt::Finite(n);
            }
        }
        if q == self.hilbert_poly {
            return ExtInt::PosInf;
        }
        let mut n = hi + 1;
        loop {
            if self.d(0, n) != q.eval_integer(n) {
                return ExtInt::Finite(n);
            }
            n += 1;
        }
    }
}
