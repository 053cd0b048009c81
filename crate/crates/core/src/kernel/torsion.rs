use super::field::{Field, Scalar};
use super::free::{GradedPresentation, PolyRing};
use super::groebner::{contained_in, groebner_basis};
use super::poly::Poly;
use super::syzygy::{colon, subquotient};
use super::vector::Vector;
use super::KernelError;

/// Default number of colon steps before saturation gives up.
pub const DEFAULT_SATURATION_CAP: usize = 64;

/// Default number of linear forms tried by [`find_filter_regular`].
pub const DEFAULT_SEARCH_BUDGET: usize = 200;

/// `N^sat = ∪_k N : m^k` for the irrelevant ideal `m`, by repeated colon
/// until the submodule stops growing.
pub fn saturation<F: Field>(
    ring: &PolyRing<F>,
    twists: &[i64],
    n: &[Vector<F::Elem>],
    cap: usize,
) -> Result<Vec<Vector<F::Elem>>, KernelError> {
    let vars: Vec<Poly<F::Elem>> = (0..ring.nvars()).map(|k| ring.var(k)).collect();
    let mut cur = n.to_vec();
    let mut cur_gb = groebner_basis(ring.field(), twists, &cur)?;
    for _ in 0..cap {
        let next = colon(ring.field(), ring.nvars(), twists, &cur, &vars)?;
        if contained_in(&next, &cur_gb) {
            return Ok(cur);
        }
        cur_gb = groebner_basis(ring.field(), twists, &next)?;
        cur = next;
    }
    Err(KernelError::SaturationCap { cap })
}

/// The submodule `Γ(M) = N^sat / N` of `M = F / N`, presented on its own
/// generators.
pub fn torsion_submodule<F: Field>(
    ring: &PolyRing<F>,
    p: &GradedPresentation<F::Elem>,
) -> Result<GradedPresentation<F::Elem>, KernelError> {
    let twists = p.generator_twists();
    let sat = saturation(ring, twists, p.relations(), DEFAULT_SATURATION_CAP)?;
    subquotient(ring.field(), ring.nvars(), twists, &sat, p.relations())
}

/// Whether `x` is a nonzerodivisor on `M / Γ(M)`: `(N^sat : x) = N^sat`.
pub fn is_filter_regular<F: Field>(
    ring: &PolyRing<F>,
    x: &Poly<F::Elem>,
    p: &GradedPresentation<F::Elem>,
) -> Result<bool, KernelError> {
    if !x.is_homogeneous() || x.degree() != Some(1) {
        return Err(KernelError::Invalid("a filter-regular element must be a nonzero linear form".into()));
    }
    let twists = p.generator_twists();
    let sat = saturation(ring, twists, p.relations(), DEFAULT_SATURATION_CAP)?;
    let gb = groebner_basis(ring.field(), twists, &sat)?;
    let c = colon(ring.field(), ring.nvars(), twists, &sat, std::slice::from_ref(x))?;
    Ok(contained_in(&c, &gb))
}

/// Linear forms in the search order: the variables, then combinations with
/// coefficients `0..=c` for growing `c`, skipping forms already tried.
fn candidate_forms<F: Field>(ring: &PolyRing<F>, budget: usize) -> Vec<Poly<F::Elem>> {
    let n = ring.nvars();
    let mut out: Vec<Poly<F::Elem>> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut push = |coeffs: Vec<i64>, out: &mut Vec<Poly<F::Elem>>| {
        let mut p = Poly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p = p.add(&ring.var(k).scale(&ring.field().from_i64(*c)));
        }
        if p.is_zero() {
            return;
        }
        let lc = p.leading().expect("nonzero").1.clone();
        let p = p.scale(&lc.inv());
        if seen.insert(p.clone()) {
            out.push(p);
        }
    };
    for k in 0..n {
        let mut c = vec![0; n];
        c[k] = 1;
        push(c, &mut out);
    }
    let max_c = match ring.field().size() {
        Some(q) => (q as i64 - 1).min(16),
        None => 16,
    };
    for top in 1..=max_c {
        let mut c = vec![0i64; n];
        loop {
            if c.contains(&top) {
                push(c.clone(), &mut out);
            }
            if out.len() >= budget {
                return out;
            }
            let mut k = 0;
            while k < n {
                c[k] += 1;
                if c[k] <= top {
                    break;
                }
                c[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    out.truncate(budget);
    out
}

/// The first linear form, in a fixed search order, that is filter-regular
/// with respect to `p` and every module in `companions`.
pub fn find_filter_regular<F: Field>(
    ring: &PolyRing<F>,
    p: &GradedPresentation<F::Elem>,
    companions: &[GradedPresentation<F::Elem>],
    budget: usize,
) -> Result<Poly<F::Elem>, KernelError> {
    let mut sats = Vec::new();
    for q in std::iter::once(p).chain(companions) {
        let twists = q.generator_twists().to_vec();
        let sat = saturation(ring, &twists, q.relations(), DEFAULT_SATURATION_CAP)?;
        let gb = groebner_basis(ring.field(), &twists, &sat)?;
        sats.push((twists, sat, gb));
    }
    for x in candidate_forms(ring, budget) {
        let mut ok = true;
        for (twists, sat, gb) in &sats {
            let c = colon(ring.field(), ring.nvars(), twists, sat, std::slice::from_ref(&x))?;
            if !contained_in(&c, gb) {
                ok = false;
                break;
            }
        }
        if ok {
            return Ok(x);
        }
    }
    Err(KernelError::FilterRegularExhausted { budget, field: ring.field().describe() })
}
