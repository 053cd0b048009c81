use std::collections::BTreeMap;
use std::fmt;

use crate::ext::ExtInt;
use crate::kernel::{
    minimal_generators, syzygy_kernel, Field, GradedMatrix, GradedPresentation, KernelError, PolyRing, Scalar,
    Vector,
};

/// Removes generator/relation pairs joined by a unit entry, then drops
/// redundant relations. The result presents an isomorphic module and has
/// no entries of degree 0.
pub fn minimal_presentation<F: Field>(
    ring: &PolyRing<F>,
    p: &GradedPresentation<F::Elem>,
) -> Result<GradedPresentation<F::Elem>, KernelError> {
    let mut target = p.generator_twists().to_vec();
    let mut source = p.matrix().source().to_vec();
    let mut cols: Vec<Vector<F::Elem>> = p.relations().to_vec();
    while let Some((r, c, u)) = find_unit(&cols, &target, &source) {
        let pivot = cols[c].clone();
        let mut next_cols = Vec::with_capacity(cols.len() - 1);
        let mut next_source = Vec::with_capacity(cols.len() - 1);
        for (k, col) in cols.iter().enumerate() {
            if k == c {
                continue;
            }
            let a = col.component(r);
            let updated = if a.is_zero() { col.clone() } else { col.sub(&pivot.mul_poly(&a.scale(&u.inv()))) };
            next_cols.push(updated.remap(|j| match j.cmp(&r) {
                std::cmp::Ordering::Less => Some(j),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(j - 1),
            }));
            next_source.push(source[k]);
        }
        target.remove(r);
        cols = next_cols;
        source = next_source;
    }
    let mins = minimal_generators(ring.field(), &target, &cols)?;
    let source = mins.iter().map(|(_, d)| *d).collect();
    let cols = mins.into_iter().map(|(v, _)| v).collect();
    Ok(GradedPresentation::new(GradedMatrix::new(target, source, cols)?))
}

fn find_unit<E: Scalar>(cols: &[Vector<E>], target: &[i64], source: &[i64]) -> Option<(usize, usize, E)> {
    for (c, col) in cols.iter().enumerate() {
        for (t, e) in col.terms() {
            if t.mono.is_one() && target[t.comp] == source[c] {
                return Some((t.comp, c, e.clone()));
            }
        }
    }
    None
}

/// A minimal graded free resolution
/// `0 <- F_0 <- F_1 <- ... <- F_p <- 0`; `maps[i]` is `d_{i+1}: F_{i+1} -> F_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalResolution<E> {
    f0: Vec<i64>,
    maps: Vec<GradedMatrix<E>>,
}

impl<E: Scalar> MinimalResolution<E> {
    /// Generator degrees of `F_i` (empty beyond the length).
    pub fn twists(&self, i: usize) -> &[i64] {
        if i == 0 {
            &self.f0
        } else {
            self.maps.get(i - 1).map(|m| m.source()).unwrap_or(&[])
        }
    }

    pub fn maps(&self) -> &[GradedMatrix<E>] {
        &self.maps
    }

    /// `d_i: F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential(&self, i: usize) -> Option<&GradedMatrix<E>> {
        i.checked_sub(1).and_then(|k| self.maps.get(k))
    }

    /// Projective dimension; `None` for the zero module.
    pub fn length(&self) -> Option<usize> {
        if self.f0.is_empty() {
            None
        } else {
            Some(self.maps.len())
        }
    }

    pub fn betti(&self) -> BettiTable {
        let mut t = BettiTable::default();
        for i in 0..=self.maps.len() {
            for &a in self.twists(i) {
                *t.entries.entry((i, a)).or_insert(0) += 1;
            }
        }
        t
    }

    /// The presentation `d_1`.
    pub fn presentation(&self) -> GradedPresentation<E> {
        match self.maps.first() {
            Some(m) => GradedPresentation::new(m.clone()),
            None => GradedPresentation::free(self.f0.clone()),
        }
    }
}

/// Minimal graded free resolution of the cokernel of `p`.
pub fn free_resolution<F: Field>(
    ring: &PolyRing<F>,
    p: &GradedPresentation<F::Elem>,
) -> Result<MinimalResolution<F::Elem>, KernelError> {
    let p = minimal_presentation(ring, p)?;
    let f0 = p.generator_twists().to_vec();
    let mut maps = Vec::new();
    let mut cur = p.matrix().clone();
    while cur.ncols() > 0 {
        let next = syzygy_kernel(ring.field(), ring.nvars(), &cur)?;
        maps.push(cur);
        cur = next;
        if maps.len() > ring.nvars() + 1 {
            return Err(KernelError::Invalid("resolution longer than the number of variables".into()));
        }
    }
    Ok(MinimalResolution { f0, maps })
}

/// Graded Betti numbers `beta_{i,j}`, the number of generators of degree
/// `j` in `F_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, i64, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max{ j - i : beta_{i,j} != 0 }`, `-inf` for the zero module.
    pub fn regularity(&self) -> ExtInt {
        self.entries.keys().map(|&(i, j)| j - i as i64).max().map_or(ExtInt::NegInf, ExtInt::Finite)
    }

    /// Smallest generator degree, `+inf` for the zero module.
    pub fn beg(&self) -> ExtInt {
        self.entries.keys().filter(|k| k.0 == 0).map(|k| k.1).min().map_or(ExtInt::PosInf, ExtInt::Finite)
    }

    /// Largest generator degree, `-inf` for the zero module.
    pub fn gendeg(&self) -> ExtInt {
        self.entries.keys().filter(|k| k.0 == 0).map(|k| k.1).max().map_or(ExtInt::NegInf, ExtInt::Finite)
    }

    pub fn length(&self) -> Option<usize> {
        self.entries.keys().map(|k| k.0).max()
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2-style table: rows are `j - i`, columns are `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(len) = self.length() else {
            return writeln!(f, "0");
        };
        let lo = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap_or(0);
        let hi = self.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap_or(0);
        write!(f, "{:>6}", "")?;
        for i in 0..=len {
            write!(f, "{i:>6}")?;
        }
        writeln!(f)?;
        for row in lo..=hi {
            write!(f, "{:>5}:", row)?;
            for i in 0..=len {
                match self.get(i, row + i as i64) {
                    0 => write!(f, "{:>6}", ".")?,
                    b => write!(f, "{b:>6}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
