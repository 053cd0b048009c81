use std::cmp::Ordering;

use super::field::Scalar;
use super::monomial::Monomial;
use super::poly::Poly;

/// A module term `mono * e_comp`.
///
/// Terms compare by `block` first, then by the monomial in degrevlex, then
/// by component with lower index larger. `block = 0` everywhere gives the
/// term-over-position order; a positive block on some components makes
/// them dominate, which is how elimination is expressed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub block: u8,
    pub mono: Monomial,
    pub comp: usize,
}

impl Term {
    pub fn new(mono: Monomial, comp: usize) -> Self {
        Term { block: 0, mono, comp }
    }

    pub fn degree(&self, twists: &[i64]) -> i64 {
        self.mono.degree() + twists[self.comp]
    }

    /// `self` divides `other`: same component and monomial divisibility.
    pub fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.block
            .cmp(&other.block)
            .then_with(|| self.mono.cmp_degrevlex(&other.mono))
            .then_with(|| other.comp.cmp(&self.comp))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of a free module, terms sorted descending, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vector<E> {
    terms: Vec<(Term, E)>,
}

impl<E: Scalar> Vector<E> {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn basis(one: E, nvars: usize, comp: usize) -> Self {
        Vector { terms: vec![(Term::new(Monomial::one(nvars), comp), one)] }
    }

    pub fn from_terms(mut terms: Vec<(Term, E)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Term, E)> = Vec::with_capacity(terms.len());
        for (t, c) in terms {
            match out.last_mut() {
                Some((lt, lc)) if *lt == t => *lc = lc.add(&c),
                _ => out.push((t, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Vector { terms: out }
    }

    /// Builds a vector from one polynomial per component.
    pub fn from_polys(entries: &[Poly<E>]) -> Self {
        let mut terms = Vec::new();
        for (comp, p) in entries.iter().enumerate() {
            for (m, c) in p.terms() {
                terms.push((Term::new(m.clone(), comp), c.clone()));
            }
        }
        Vector::from_terms(terms)
    }

    /// Wraps terms that are already sorted descending, distinct and nonzero.
    pub(crate) fn from_sorted(terms: Vec<(Term, E)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        Vector { terms }
    }

    pub fn terms(&self) -> &[(Term, E)] {
        &self.terms
    }

    /// Leading term and the rest.
    pub fn split_leading(mut self) -> Option<((Term, E), Vector<E>)> {
        if self.terms.is_empty() {
            return None;
        }
        let lead = self.terms.remove(0);
        Some((lead, self))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Term, E)> {
        self.terms.first()
    }

    /// Degree of the leading term under the given twists.
    pub fn degree(&self, twists: &[i64]) -> Option<i64> {
        self.terms.first().map(|(t, _)| t.degree(twists))
    }

    pub fn is_homogeneous(&self, twists: &[i64]) -> bool {
        match self.degree(twists) {
            None => true,
            Some(d) => self.terms.iter().all(|(t, _)| t.degree(twists) == d),
        }
    }

    /// The polynomial in component `comp`.
    pub fn component(&self, comp: usize) -> Poly<E> {
        Poly::from_terms(
            self.terms
                .iter()
                .filter(|(t, _)| t.comp == comp)
                .map(|(t, c)| (t.mono.clone(), c.clone()))
                .collect(),
        )
    }

    /// `self + c * mono * other`.
    pub fn add_scaled(&self, c: &E, mono: &Monomial, other: &Vector<E>) -> Vector<E> {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut rhs = other.terms.iter().map(|(t, a)| {
            (Term { block: t.block, mono: t.mono.mul(mono), comp: t.comp }, a.mul(c))
        });
        let mut next = rhs.next();
        while let Some((bt, bc)) = next.take() {
            while i < self.terms.len() && self.terms[i].0 > bt {
                out.push(self.terms[i].clone());
                i += 1;
            }
            if i < self.terms.len() && self.terms[i].0 == bt {
                let s = self.terms[i].1.add(&bc);
                if !s.is_zero() {
                    out.push((bt, s));
                }
                i += 1;
            } else {
                out.push((bt, bc));
            }
            next = rhs.next();
        }
        out.extend_from_slice(&self.terms[i..]);
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector<E>) -> Vector<E> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a.1.add(&b.1);
                    if !c.is_zero() {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Vector { terms: out }
    }

    pub fn sub(&self, other: &Vector<E>) -> Vector<E> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Vector<E> {
        Vector { terms: self.terms.iter().map(|(t, c)| (t.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, c: &E) -> Vector<E> {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector { terms: self.terms.iter().map(|(t, a)| (t.clone(), a.mul(c))).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Vector<E> {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    pub fn mul_poly(&self, p: &Poly<E>) -> Vector<E> {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(c, m, self);
        }
        acc
    }

    /// `sum_c coeffs[c] * cols[c]` where `coeffs` is read off the components
    /// of `self`.
    pub fn apply(&self, cols: &[Vector<E>]) -> Vector<E> {
        let mut acc = Vector::zero();
        for (t, c) in &self.terms {
            acc = acc.add_scaled(c, &t.mono, &cols[t.comp]);
        }
        acc
    }

    /// Renumbers components through `f`, dropping terms mapped to `None`,
    /// and resets every block to 0.
    pub fn remap(&self, f: impl Fn(usize) -> Option<usize>) -> Vector<E> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(t, c)| f(t.comp).map(|k| (Term::new(t.mono.clone(), k), c.clone())))
            .collect();
        Vector::from_terms(terms)
    }

    /// Sets the block of every term whose component satisfies `pred`.
    pub fn with_block(&self, pred: impl Fn(usize) -> bool) -> Vector<E> {
        let terms = self
            .terms
            .iter()
            .map(|(t, c)| {
                let block = u8::from(pred(t.comp));
                (Term { block, mono: t.mono.clone(), comp: t.comp }, c.clone())
            })
            .collect();
        Vector::from_terms(terms)
    }

    pub fn max_comp(&self) -> Option<usize> {
        self.terms.iter().map(|(t, _)| t.comp).max()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::{Field, Rationals};

    #[test]
    fn top_order_breaks_ties_by_component() {
        let m = Monomial::from_exponents(&[1, 0]);
        let a = Term::new(m.clone(), 0);
        let b = Term::new(m.clone(), 1);
        assert!(a > b);
        let bigger = Term::new(Monomial::from_exponents(&[2, 0]), 1);
        assert!(bigger > a);
        let eliminated = Term { block: 1, mono: Monomial::one(2), comp: 3 };
        assert!(eliminated > bigger);
    }

    #[test]
    fn arithmetic() {
        let q = Rationals;
        let x = Poly::var(&q, 2, 0);
        let y = Poly::var(&q, 2, 1);
        let v = Vector::from_polys(&[x.clone(), y.clone()]);
        let w = Vector::from_polys(&[y.clone(), Poly::zero()]);
        let s = v.add(&w);
        assert_eq!(s.component(0), x.add(&y));
        assert!(s.sub(&s).is_zero());
        assert!(v.is_homogeneous(&[0, 0]));
        assert!(!v.is_homogeneous(&[0, 1]));
        let applied = Vector::from_polys(&[x.clone(), y.clone()])
            .apply(&[Vector::from_polys(std::slice::from_ref(&y)), Vector::from_polys(&[x.neg()])]);
        assert!(applied.is_zero());
        assert_eq!(v.mul_poly(&x).component(1), x.mul(&y));
        assert_eq!(v.scale(&q.from_i64(2)).monic(), v);
    }
}
