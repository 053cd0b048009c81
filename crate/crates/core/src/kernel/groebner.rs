use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};

use super::field::{Field, Scalar};
use super::monomial::Monomial;
use super::vector::{Term, Vector};
use super::KernelError;

/// Compares two module terms: degree (with twists) first, then the
/// term-over-position order.
pub fn term_compare(a: &Term, b: &Term, twists: &[i64]) -> Ordering {
    a.degree(twists).cmp(&b.degree(twists)).then_with(|| a.cmp(b))
}

pub(crate) fn check_homogeneous<E: Scalar>(v: &Vector<E>, twists: &[i64]) -> Result<(), KernelError> {
    if let Some(k) = v.max_comp() {
        if k >= twists.len() {
            return Err(KernelError::Shape(format!(
                "component {k} outside a free module of rank {}",
                twists.len()
            )));
        }
    }
    if !v.is_homogeneous(twists) {
        return Err(KernelError::NotHomogeneous("module element mixes degrees".into()));
    }
    Ok(())
}

/// Full reduction of `v` by `divisors` (any leading coefficients).
fn reduce_by<E: Scalar>(v: Vector<E>, divisors: &[Vector<E>]) -> Vector<E> {
    let mut rest = v;
    let mut rem: Vec<(Term, E)> = Vec::new();
    while let Some(((t, c), tail)) = rest.split_leading() {
        let hit = divisors.iter().find(|g| g.leading().is_some_and(|(lt, _)| lt.divides(&t)));
        match hit {
            Some(g) => {
                let (lt, lc) = g.leading().expect("nonzero divisor");
                let q = c.div(lc).neg();
                let mono = t.mono.div(&lt.mono);
                // the leading term cancels exactly; only the tail of g matters
                let g_tail = Vector::from_sorted(g.terms()[1..].to_vec());
                rest = tail.add_scaled(&q, &mono, &g_tail);
            }
            None => {
                rem.push((t, c));
                rest = tail;
            }
        }
    }
    Vector::from_sorted(rem)
}

/// Division remainder of `f` by `g` in a free module with the given twists.
pub fn normal_form<E: Scalar>(f: &Vector<E>, g: &[Vector<E>], twists: &[i64]) -> Result<Vector<E>, KernelError> {
    check_homogeneous(f, twists)?;
    for v in g {
        check_homogeneous(v, twists)?;
    }
    let divisors: Vec<Vector<E>> = g.iter().filter(|v| !v.is_zero()).cloned().collect();
    Ok(reduce_by(f.clone(), &divisors))
}

/// Incremental homogeneous Buchberger algorithm.
///
/// Generators and S-pairs are processed in order of degree, so after
/// [`Buchberger::run_up_to`]`(n)` the basis is a Gröbner basis in all
/// degrees `<= n`.
#[derive(Clone, Debug)]
pub struct Buchberger<F: Field> {
    field: F,
    twists: Vec<i64>,
    basis: Vec<Vector<F::Elem>>,
    pairs: BTreeSet<(i64, usize, usize)>,
    pending: HashSet<(usize, usize)>,
    gens: BTreeSet<(i64, usize)>,
    gen_store: Vec<Vector<F::Elem>>,
    product_criterion: bool,
}

impl<F: Field> Buchberger<F> {
    pub fn new(field: F, twists: Vec<i64>) -> Self {
        let product_criterion = twists.len() == 1;
        Buchberger {
            field,
            twists,
            basis: Vec::new(),
            pairs: BTreeSet::new(),
            pending: HashSet::new(),
            gens: BTreeSet::new(),
            gen_store: Vec::new(),
            product_criterion,
        }
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    /// Queues a homogeneous generator; zero is ignored.
    pub fn add_generator(&mut self, v: Vector<F::Elem>) -> Result<(), KernelError> {
        check_homogeneous(&v, &self.twists)?;
        if let Some(d) = v.degree(&self.twists) {
            if v.terms().iter().any(|(t, _)| t.block != 0) {
                self.product_criterion = false;
            }
            self.gens.insert((d, self.gen_store.len()));
            self.gen_store.push(v);
        }
        Ok(())
    }

    fn next_degree(&self) -> Option<i64> {
        let p = self.pairs.iter().next().map(|x| x.0);
        let g = self.gens.iter().next().map(|x| x.0);
        match (p, g) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Processes everything of degree `<= limit` (everything if `None`).
    pub fn run_up_to(&mut self, limit: Option<i64>) {
        while let Some(d) = self.next_degree() {
            if limit.is_some_and(|l| d > l) {
                break;
            }
            while let Some(&(pd, i, j)) = self.pairs.iter().next() {
                if pd != d {
                    break;
                }
                self.pairs.remove(&(pd, i, j));
                self.pending.remove(&(i, j));
                if self.chain_criterion(i, j) {
                    continue;
                }
                let s = self.s_vector(i, j);
                self.insert_reduced(s);
            }
            while let Some(&(gd, k)) = self.gens.iter().next() {
                if gd != d {
                    break;
                }
                self.gens.remove(&(gd, k));
                let g = std::mem::replace(&mut self.gen_store[k], Vector::zero());
                self.insert_reduced(g);
            }
        }
    }

    pub fn run(&mut self) {
        self.run_up_to(None);
    }

    pub fn is_complete(&self) -> bool {
        self.pairs.is_empty() && self.gens.is_empty()
    }

    /// Reduces `v` and, if nonzero, adds it to the basis. Returns whether it
    /// was added. The caller is responsible for having run the computation
    /// up to the degree of `v`.
    pub fn insert_reduced(&mut self, v: Vector<F::Elem>) -> bool {
        let r = reduce_by(v, &self.basis);
        if r.is_zero() {
            return false;
        }
        let r = r.monic();
        let k = self.basis.len();
        let (lt, _) = r.leading().expect("nonzero").clone();
        for (i, g) in self.basis.iter().enumerate() {
            let (gt, _) = g.leading().expect("nonzero");
            if gt.comp != lt.comp || gt.block != lt.block {
                continue;
            }
            if self.product_criterion && gt.mono.is_coprime(&lt.mono) {
                continue;
            }
            let l = gt.mono.lcm(&lt.mono);
            let deg = l.degree() + self.twists[lt.comp];
            self.pairs.insert((deg, i, k));
            self.pending.insert((i, k));
        }
        self.basis.push(r);
        true
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        let key = if a < b { (a, b) } else { (b, a) };
        self.pending.contains(&key)
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let ti = &self.basis[i].leading().expect("nonzero").0;
        let tj = &self.basis[j].leading().expect("nonzero").0;
        let l = ti.mono.lcm(&tj.mono);
        self.basis.iter().enumerate().any(|(k, g)| {
            if k == i || k == j {
                return false;
            }
            let tk = &g.leading().expect("nonzero").0;
            tk.comp == ti.comp
                && tk.block == ti.block
                && tk.mono.divides(&l)
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    fn s_vector(&self, i: usize, j: usize) -> Vector<F::Elem> {
        let (gi, gj) = (&self.basis[i], &self.basis[j]);
        let ti = &gi.leading().expect("nonzero").0;
        let tj = &gj.leading().expect("nonzero").0;
        let l = ti.mono.lcm(&tj.mono);
        let one = self.field.one();
        let left = Vector::zero().add_scaled(&one, &l.div(&ti.mono), gi);
        left.add_scaled(&one.neg(), &l.div(&tj.mono), gj)
    }

    pub fn basis(&self) -> &[Vector<F::Elem>] {
        &self.basis
    }

    /// Reduces against the current basis without inserting.
    pub fn reduce(&self, v: &Vector<F::Elem>) -> Vector<F::Elem> {
        reduce_by(v.clone(), &self.basis)
    }

    /// Reduced, monic basis sorted by descending leading term. Runs the
    /// computation to completion first.
    pub fn reduced_basis(&mut self) -> Vec<Vector<F::Elem>> {
        self.run();
        interreduce(&self.basis)
    }
}

/// Minimizes leading terms and tail-reduces a Gröbner basis.
pub(crate) fn interreduce<E: Scalar>(basis: &[Vector<E>]) -> Vec<Vector<E>> {
    let mut keep: Vec<Vector<E>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lt = &g.leading().expect("nonzero").0;
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let ht = &h.leading().expect("nonzero").0;
            j != i && ht.divides(lt) && (ht != lt || j < i)
        });
        if !redundant {
            keep.push(g.monic());
        }
    }
    let mut out: Vec<Vector<E>> = Vec::with_capacity(keep.len());
    for (i, g) in keep.iter().enumerate() {
        let others: Vec<Vector<E>> =
            keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.clone()).collect();
        let ((t, c), tail) = g.clone().split_leading().expect("nonzero");
        let reduced_tail = reduce_by(tail, &others);
        let mut terms = vec![(t, c)];
        terms.extend_from_slice(reduced_tail.terms());
        out.push(Vector::from_sorted(terms));
    }
    out.sort_by(|a, b| b.leading().expect("nonzero").0.cmp(&a.leading().expect("nonzero").0));
    out
}

/// Reduced Gröbner basis of the submodule generated by `gens`.
pub fn groebner_basis<F: Field>(
    field: &F,
    twists: &[i64],
    gens: &[Vector<F::Elem>],
) -> Result<Vec<Vector<F::Elem>>, KernelError> {
    let mut b = Buchberger::new(field.clone(), twists.to_vec());
    for g in gens {
        b.add_generator(g.clone())?;
    }
    Ok(b.reduced_basis())
}

/// Whether every element of `gens` lies in the submodule with Gröbner basis `gb`.
pub fn contained_in<E: Scalar>(gens: &[Vector<E>], gb: &[Vector<E>]) -> bool {
    gens.iter().all(|g| reduce_by(g.clone(), gb).is_zero())
}

/// Number of standard monomials of degree `n` (twisted) modulo the leading
/// terms of `gb`, i.e. the Hilbert function of `F / <gb>` at `n`.
pub fn standard_monomial_count<E: Scalar>(gb: &[Vector<E>], twists: &[i64], nvars: usize, n: i64) -> u64 {
    let mut count = 0u64;
    for (comp, a) in twists.iter().enumerate() {
        let leads: Vec<&Monomial> = gb
            .iter()
            .filter_map(|g| g.leading())
            .filter(|(t, _)| t.comp == comp)
            .map(|(t, _)| &t.mono)
            .collect();
        for m in Monomial::all_of_degree(nvars, n - a) {
            if !leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::field::Rationals;
    use crate::kernel::poly::Poly;
    use crate::kernel::PolyRing;

    fn ring() -> PolyRing<Rationals> {
        PolyRing::new(Rationals, vec!["x".into(), "y".into()]).unwrap()
    }

    fn v(p: Poly<num_rational::BigRational>) -> Vector<num_rational::BigRational> {
        Vector::from_polys(&[p])
    }

    #[test]
    fn term_compare_is_degree_first() {
        let m = Monomial::from_exponents(&[1, 0]);
        let a = Term::new(m.clone(), 0);
        let b = Term::new(m.clone(), 1);
        assert_eq!(term_compare(&a, &b, &[0, -1]), Ordering::Greater);
        assert_eq!(term_compare(&a, &b, &[-1, 0]), Ordering::Less);
        assert_eq!(term_compare(&a, &a, &[0, 0]), Ordering::Equal);
    }

    #[test]
    fn normal_form_examples() {
        let r = ring();
        let (x, y) = (r.var(0), r.var(1));
        let xx = x.mul(&x);
        let xy = x.mul(&y);
        assert!(normal_form(&v(xx.clone()), &[v(xx.clone())], &[0]).unwrap().is_zero());
        assert!(normal_form(&v(xx.mul(&y)), &[v(xy.clone())], &[0]).unwrap().is_zero());
        let yyy = y.mul(&y).mul(&y);
        assert_eq!(normal_form(&v(yyy.clone()), &[v(xx.clone()), v(xy.clone())], &[0]).unwrap(), v(yyy));
        assert!(normal_form(&v(xx.add(&y)), &[], &[0]).is_err());
    }

    #[test]
    fn groebner_examples() {
        let r = ring();
        let (x, y) = (r.var(0), r.var(1));
        let xx = x.mul(&x);
        let xy = x.mul(&y);
        let gb = groebner_basis(r.field(), &[0], &[v(xx.clone()), v(xy.clone())]).unwrap();
        assert_eq!(gb, vec![v(xx.clone()), v(xy.clone())]);
        let gb = groebner_basis(r.field(), &[0], &[v(x.clone())]).unwrap();
        assert_eq!(gb, vec![v(x.clone())]);
        assert!(groebner_basis(r.field(), &[0], &[]).unwrap().is_empty());
        // x^2 + y^2, xy: the S-pair produces y^3
        let f = xx.add(&y.mul(&y));
        let gb = groebner_basis(r.field(), &[0], &[v(f.clone()), v(xy.clone())]).unwrap();
        assert_eq!(gb.len(), 3);
        assert_eq!(standard_monomial_count(&gb, &[0], 2, 3), 0);
        assert_eq!(standard_monomial_count(&gb, &[0], 2, 2), 1);
    }

    #[test]
    fn truncated_run_is_complete_below_limit() {
        let r = ring();
        let (x, y) = (r.var(0), r.var(1));
        let f = x.mul(&x).add(&y.mul(&y));
        let mut b = Buchberger::new(*r.field(), vec![0]);
        b.add_generator(v(f)).unwrap();
        b.add_generator(v(x.mul(&y))).unwrap();
        b.run_up_to(Some(2));
        assert_eq!(b.basis().len(), 2);
        assert!(!b.is_complete());
        b.run();
        assert_eq!(b.basis().len(), 3);
    }
}
