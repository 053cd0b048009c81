use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector `x_1^{a_1} ... x_n^{a_n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 4]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars) }
    }

    pub fn var(nvars: usize, k: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[k] = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial { exps: SmallVec::from_slice(exps) }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> i64 {
        self.exps.iter().map(|&e| e as i64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect() }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, assuming `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect() }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect() }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Degree reverse lexicographic comparison: higher total degree wins;
    /// on ties the monomial with the smaller exponent in the last variable
    /// where they differ is larger.
    pub fn cmp_degrevlex(&self, other: &Monomial) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.exps.iter().zip(&other.exps).rev() {
            if a != b {
                return b.cmp(a);
            }
        }
        Ordering::Equal
    }

    /// All monomials of the given degree, in descending degrevlex order.
    pub fn all_of_degree(nvars: usize, degree: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if degree < 0 || nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(nvars));
            }
            return out;
        }
        let mut cur = vec![0u32; nvars];
        fill(&mut cur, 0, degree as u32, &mut out);
        out.sort_by(|a, b| b.cmp_degrevlex(a));
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (k, &e) in self.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(names[k].clone()),
                _ => parts.push(format!("{}^{}", names[k], e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

fn fill(cur: &mut Vec<u32>, k: usize, left: u32, out: &mut Vec<Monomial>) {
    if k + 1 == cur.len() {
        cur[k] = left;
        out.push(Monomial::from_exponents(cur));
        return;
    }
    for e in 0..=left {
        cur[k] = e;
        fill(cur, k + 1, left - e, out);
    }
    cur[k] = 0;
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_examples() {
        // x^2 > xy > y^2 in (x, y)
        assert_eq!(m(&[2, 0]).cmp_degrevlex(&m(&[1, 1])), Ordering::Greater);
        assert_eq!(m(&[1, 1]).cmp_degrevlex(&m(&[0, 2])), Ordering::Greater);
        // x*z < y^2 in (x, y, z): last differing variable is z
        assert_eq!(m(&[1, 0, 1]).cmp_degrevlex(&m(&[0, 2, 0])), Ordering::Less);
        assert_eq!(m(&[0, 0, 3]).cmp_degrevlex(&m(&[1, 0, 0])), Ordering::Greater);
        assert_eq!(m(&[1, 1]).cmp_degrevlex(&m(&[1, 1])), Ordering::Equal);
    }

    #[test]
    fn enumerate_by_degree() {
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
        assert_eq!(Monomial::all_of_degree(2, -1).len(), 0);
        assert_eq!(Monomial::all_of_degree(1, 4), vec![m(&[4])]);
        let all = Monomial::all_of_degree(2, 2);
        assert_eq!(all, vec![m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 0])), m(&[1, 1]));
        assert_eq!(m(&[2, 0]).lcm(&m(&[1, 3])), m(&[2, 3]));
        assert!(m(&[2, 0]).is_coprime(&m(&[0, 3])));
    }
}
