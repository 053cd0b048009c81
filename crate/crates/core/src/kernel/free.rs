use std::collections::HashSet;

use super::field::Field;
use super::poly::Poly;
use super::vector::Vector;
use super::KernelError;

/// `S = k[x_1, .., x_n]` with the standard grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing<F: Field> {
    field: F,
    vars: Vec<String>,
}

impl<F: Field> PolyRing<F> {
    pub fn new(field: F, vars: Vec<String>) -> Result<Self, KernelError> {
        if vars.is_empty() {
            return Err(KernelError::Invalid("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        for v in &vars {
            let ok = !v.is_empty()
                && v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !ok {
                return Err(KernelError::Invalid(format!("bad variable name {v:?}")));
            }
            if !seen.insert(v.as_str()) {
                return Err(KernelError::Invalid(format!("variable {v} listed twice")));
            }
        }
        Ok(PolyRing { field, vars })
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var(&self, k: usize) -> Poly<F::Elem> {
        Poly::var(&self.field, self.nvars(), k)
    }

    pub fn one(&self) -> Poly<F::Elem> {
        Poly::constant(self.field.one(), self.nvars())
    }

    pub fn basis(&self, comp: usize) -> Vector<F::Elem> {
        Vector::basis(self.field.one(), self.nvars(), comp)
    }

    pub fn fmt_poly(&self, p: &Poly<F::Elem>) -> String {
        p.fmt_with(&self.vars)
    }
}

/// A homogeneous map of free modules `⊕ S(-source[c]) -> ⊕ S(-target[r])`,
/// stored by columns: column `c` is the image of the `c`-th basis element and
/// is homogeneous of degree `source[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix<E> {
    target: Vec<i64>,
    source: Vec<i64>,
    cols: Vec<Vector<E>>,
}

impl<E: super::Scalar> GradedMatrix<E> {
    pub fn new(target: Vec<i64>, source: Vec<i64>, cols: Vec<Vector<E>>) -> Result<Self, KernelError> {
        if source.len() != cols.len() {
            return Err(KernelError::Shape(format!(
                "{} source twists for {} columns",
                source.len(),
                cols.len()
            )));
        }
        for (c, col) in cols.iter().enumerate() {
            if let Some(k) = col.max_comp() {
                if k >= target.len() {
                    return Err(KernelError::Shape(format!(
                        "column {c} has an entry in row {k} but the target has rank {}",
                        target.len()
                    )));
                }
            }
            if !col.is_homogeneous(&target) {
                return Err(KernelError::NotHomogeneous(format!("column {c} mixes degrees")));
            }
            if let Some(d) = col.degree(&target) {
                if d != source[c] {
                    return Err(KernelError::NotHomogeneous(format!(
                        "column {c} has degree {d}, source twist is {}",
                        source[c]
                    )));
                }
            }
        }
        Ok(GradedMatrix { target, source, cols })
    }

    /// Row-major entries; `entries[r][c]` must be homogeneous of degree
    /// `source[c] - target[r]`.
    pub fn from_entries(target: Vec<i64>, source: Vec<i64>, entries: &[Vec<Poly<E>>]) -> Result<Self, KernelError> {
        if entries.len() != target.len() || entries.iter().any(|row| row.len() != source.len()) {
            return Err(KernelError::Shape(format!(
                "matrix is not {} x {}",
                target.len(),
                source.len()
            )));
        }
        for (r, row) in entries.iter().enumerate() {
            for (c, p) in row.iter().enumerate() {
                if !p.is_homogeneous() {
                    return Err(KernelError::NotHomogeneous(format!("entry ({r}, {c}) mixes degrees")));
                }
                if let Some(d) = p.degree() {
                    if d != source[c] - target[r] {
                        return Err(KernelError::NotHomogeneous(format!(
                            "entry ({r}, {c}) has degree {d}, expected {}",
                            source[c] - target[r]
                        )));
                    }
                }
            }
        }
        let cols = (0..source.len())
            .map(|c| {
                let column: Vec<Poly<E>> = entries.iter().map(|row| row[c].clone()).collect();
                Vector::from_polys(&column)
            })
            .collect();
        GradedMatrix::new(target, source, cols)
    }

    pub fn zero(target: Vec<i64>) -> Self {
        GradedMatrix { target, source: Vec::new(), cols: Vec::new() }
    }

    pub fn target(&self) -> &[i64] {
        &self.target
    }

    pub fn source(&self) -> &[i64] {
        &self.source
    }

    pub fn cols(&self) -> &[Vector<E>] {
        &self.cols
    }

    pub fn nrows(&self) -> usize {
        self.target.len()
    }

    pub fn ncols(&self) -> usize {
        self.source.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> Poly<E> {
        self.cols[c].component(r)
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vector::is_zero)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GradedMatrix<E>) -> GradedMatrix<E> {
        let cols = other.cols.iter().map(|v| v.apply(&self.cols)).collect();
        GradedMatrix { target: self.target.clone(), source: other.source.clone(), cols }
    }

    /// The transpose as a map between dual modules twisted by `shift`:
    /// `⊕ S(shift - target) -> ⊕ S(shift - source)` with generator degrees
    /// `shift - a`.
    pub fn dual(&self, shift: i64) -> GradedMatrix<E> {
        let target: Vec<i64> = self.source.iter().map(|a| shift - a).collect();
        let source: Vec<i64> = self.target.iter().map(|a| shift - a).collect();
        let mut cols_terms: Vec<Vec<_>> = vec![Vec::new(); source.len()];
        for (c, col) in self.cols.iter().enumerate() {
            for (t, e) in col.terms() {
                let mut nt = t.clone();
                nt.comp = c;
                nt.block = 0;
                cols_terms[t.comp].push((nt, e.clone()));
            }
        }
        let cols = cols_terms.into_iter().map(Vector::from_terms).collect();
        GradedMatrix { target, source, cols }
    }
}

/// A finitely generated graded module, given as the cokernel of a graded
/// matrix: generators are the target basis, relations are the columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation<E> {
    matrix: GradedMatrix<E>,
}

impl<E: super::Scalar> GradedPresentation<E> {
    pub fn new(matrix: GradedMatrix<E>) -> Self {
        GradedPresentation { matrix }
    }

    /// `⊕ S(-twists)` with no relations.
    pub fn free(twists: Vec<i64>) -> Self {
        GradedPresentation { matrix: GradedMatrix::zero(twists) }
    }

    pub fn matrix(&self) -> &GradedMatrix<E> {
        &self.matrix
    }

    pub fn generator_twists(&self) -> &[i64] {
        self.matrix.target()
    }

    pub fn relations(&self) -> &[Vector<E>] {
        self.matrix.cols()
    }

    pub fn ngens(&self) -> usize {
        self.matrix.nrows()
    }

    /// Same generators with extra relations appended.
    pub fn with_relations(&self, extra: &[Vector<E>], twists: &[i64]) -> Result<Self, KernelError> {
        let mut cols = self.matrix.cols().to_vec();
        cols.extend_from_slice(extra);
        let mut source = self.matrix.source().to_vec();
        source.extend_from_slice(twists);
        Ok(GradedPresentation::new(GradedMatrix::new(self.matrix.target().to_vec(), source, cols)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::Rationals;

    fn ring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    #[test]
    fn ring_validation() {
        assert!(PolyRing::new(Rationals, vec![]).is_err());
        assert!(PolyRing::new(Rationals, vec!["x".into(), "x".into()]).is_err());
        assert!(PolyRing::new(Rationals, vec!["2x".into()]).is_err());
    }

    #[test]
    fn matrix_degrees_are_checked() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        let xx = x.mul(&x);
        let ok = GradedMatrix::from_entries(vec![0], vec![2, 2], &[vec![xx.clone(), x.mul(&y)]]);
        assert!(ok.is_ok());
        let bad = GradedMatrix::from_entries(vec![0], vec![2, 1], &[vec![xx.clone(), x.mul(&y)]]);
        assert!(matches!(bad, Err(KernelError::NotHomogeneous(_))));
        let inhom = GradedMatrix::from_entries(vec![0], vec![2], &[vec![xx.add(&y)]]);
        assert!(inhom.is_err());
        let shape = GradedMatrix::from_entries(vec![0, 0], vec![2], &[vec![xx]]);
        assert!(matches!(shape, Err(KernelError::Shape(_))));
    }

    #[test]
    fn dual_transposes_and_twists() {
        let r = ring();
        let x = r.var(0);
        let y = r.var(1);
        let m = GradedMatrix::from_entries(vec![0], vec![1, 1], &[vec![x.clone(), y.clone()]]).unwrap();
        let d = m.dual(2);
        assert_eq!(d.target(), &[1, 1]);
        assert_eq!(d.source(), &[2]);
        assert_eq!(d.entry(0, 0), x);
        assert_eq!(d.entry(1, 0), y);
        let koszul = GradedMatrix::from_entries(vec![1, 1], vec![2], &[vec![y.clone()], vec![x.neg()]]).unwrap();
        assert!(m.compose(&koszul).is_zero());
    }
}
