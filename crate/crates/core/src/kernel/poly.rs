use std::cmp::Ordering;

use super::field::{Field, Scalar};
use super::monomial::Monomial;

/// A polynomial, terms sorted by descending degrevlex, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<E> {
    terms: Vec<(Monomial, E)>,
}

impl<E: Scalar> Poly<E> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn constant(c: E, nvars: usize) -> Self {
        Poly::monomial(c, Monomial::one(nvars))
    }

    pub fn monomial(c: E, m: Monomial) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly { terms: vec![(m, c)] }
        }
    }

    pub fn var<F: Field<Elem = E>>(field: &F, nvars: usize, k: usize) -> Self {
        Poly::monomial(field.one(), Monomial::var(nvars, k))
    }

    /// Collects like terms and drops zeros.
    pub fn from_terms(mut terms: Vec<(Monomial, E)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp_degrevlex(&a.0));
        let mut out: Vec<(Monomial, E)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.add(&c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, E)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, E)> {
        self.terms.first()
    }

    /// Degree of the leading term; `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.degree() {
            None => true,
            Some(d) => self.terms.iter().all(|(m, _)| m.degree() == d),
        }
    }

    /// The constant coefficient if the polynomial is a nonzero constant.
    pub fn as_constant(&self) -> Option<&E> {
        match self.terms.as_slice() {
            [(m, c)] if m.is_one() => Some(c),
            _ => None,
        }
    }

    pub fn add(&self, other: &Poly<E>) -> Poly<E> {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp_degrevlex(&b.0) {
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
        Poly { terms: out }
    }

    pub fn neg(&self) -> Poly<E> {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn sub(&self, other: &Poly<E>) -> Poly<E> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &E) -> Poly<E> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.clone(), a.mul(c))).collect() }
    }

    pub fn mul_term(&self, c: &E, mono: &Monomial) -> Poly<E> {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a.mul(c))).collect() }
    }

    pub fn mul(&self, other: &Poly<E>) -> Poly<E> {
        let mut acc = Poly::zero();
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(c, m));
        }
        acc
    }

    pub fn pow(&self, e: u32, nvars: usize, one: E) -> Poly<E> {
        let mut acc = Poly::constant(one, nvars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let cs = c.to_string();
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&mag);
            } else {
                if mag != "1" {
                    s.push_str(&mag);
                    s.push('*');
                }
                s.push_str(&m.fmt_with(names));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::Rationals;

    fn names() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn arithmetic_and_display() {
        let q = Rationals;
        let x = Poly::var(&q, 2, 0);
        let y = Poly::var(&q, 2, 1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        assert_eq!(sq.fmt_with(&names()), "x^2 + 2*x*y + y^2");
        let d = sq.sub(&x.mul(&x));
        assert_eq!(d.fmt_with(&names()), "2*x*y + y^2");
        assert!(d.is_homogeneous());
        assert!(!d.add(&x).is_homogeneous());
        assert!(s.sub(&s).is_zero());
        assert_eq!(s.pow(3, 2, q.one()).terms().len(), 4);
        let neg = y.scale(&q.from_i64(-3)).add(&x);
        assert_eq!(neg.fmt_with(&names()), "x - 3*y");
    }

    #[test]
    fn from_terms_collects() {
        let q = Rationals;
        let m = Monomial::from_exponents(&[1, 0]);
        let p = Poly::from_terms(vec![(m.clone(), q.one()), (m.clone(), q.from_i64(-1))]);
        assert!(p.is_zero());
        let c = Poly::constant(q.from_i64(4), 2);
        assert_eq!(c.as_constant(), Some(&q.from_i64(4)));
    }
}
