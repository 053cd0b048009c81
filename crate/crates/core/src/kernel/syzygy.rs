use super::field::Field;
use super::free::{GradedMatrix, GradedPresentation};
use super::groebner::{check_homogeneous, Buchberger};
use super::poly::Poly;
use super::vector::Vector;
use super::KernelError;

/// A minimal generating set of the submodule generated by `gens`, chosen
/// greedily in order of degree (input order breaks ties). Zero and redundant
/// generators are dropped. Returns the chosen elements with their degrees.
pub fn minimal_generators<F: Field>(
    field: &F,
    twists: &[i64],
    gens: &[Vector<F::Elem>],
) -> Result<Vec<(Vector<F::Elem>, i64)>, KernelError> {
    minimal_generators_modulo(field, twists, gens, &[])
}

/// Like [`minimal_generators`], but minimal modulo the submodule generated
/// by `base`: the result together with `base` generates the same submodule
/// as `gens` and `base`, and no element is redundant.
pub fn minimal_generators_modulo<F: Field>(
    field: &F,
    twists: &[i64],
    gens: &[Vector<F::Elem>],
    base: &[Vector<F::Elem>],
) -> Result<Vec<(Vector<F::Elem>, i64)>, KernelError> {
    let mut b = Buchberger::new(field.clone(), twists.to_vec());
    for g in base {
        b.add_generator(g.clone())?;
    }
    let mut order: Vec<(i64, usize)> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        check_homogeneous(g, twists)?;
        if let Some(d) = g.degree(twists) {
            order.push((d, k));
        }
    }
    order.sort();
    let mut out = Vec::new();
    for (d, k) in order {
        b.run_up_to(Some(d));
        if b.insert_reduced(gens[k].clone()) {
            out.push((gens[k].clone(), d));
        }
    }
    Ok(out)
}

/// Generators of the kernel of `m`, as a matrix into the source of `m`.
/// The generating set is minimal.
pub fn syzygy_kernel<F: Field>(field: &F, nvars: usize, m: &GradedMatrix<F::Elem>) -> Result<GradedMatrix<F::Elem>, KernelError> {
    let r = m.nrows();
    let k = m.ncols();
    let mut twists = m.target().to_vec();
    twists.extend_from_slice(m.source());
    let mut b = Buchberger::new(field.clone(), twists);
    for (c, col) in m.cols().iter().enumerate() {
        let lifted = col.with_block(|_| true);
        let tag = Vector::basis(field.one(), nvars, r + c);
        b.add_generator(lifted.add(&tag))?;
    }
    b.run();
    let kernel: Vec<Vector<F::Elem>> = b
        .basis()
        .iter()
        .filter(|g| g.leading().is_some_and(|(t, _)| t.block == 0))
        .map(|g| g.remap(|comp| comp.checked_sub(r)))
        .collect();
    let mins = minimal_generators(field, m.source(), &kernel)?;
    let source: Vec<i64> = mins.iter().map(|(_, d)| *d).collect();
    let cols: Vec<Vector<F::Elem>> = mins.into_iter().map(|(v, _)| v).collect();
    debug_assert!(k == m.source().len());
    GradedMatrix::new(m.source().to_vec(), source, cols)
}

/// Intersection of the submodules generated by `a` and `b`, minimally
/// generated.
pub fn intersect<F: Field>(
    field: &F,
    nvars: usize,
    twists: &[i64],
    a: &[Vector<F::Elem>],
    b: &[Vector<F::Elem>],
) -> Result<Vec<Vector<F::Elem>>, KernelError> {
    let a = nonzero_with_degrees(a, twists)?;
    let b = nonzero_with_degrees(b, twists)?;
    let mut cols: Vec<Vector<F::Elem>> = a.iter().map(|(v, _)| v.clone()).collect();
    cols.extend(b.iter().map(|(v, _)| v.clone()));
    let mut source: Vec<i64> = a.iter().map(|(_, d)| *d).collect();
    source.extend(b.iter().map(|(_, d)| *d));
    let m = GradedMatrix::new(twists.to_vec(), source, cols)?;
    let syz = syzygy_kernel(field, nvars, &m)?;
    let na = a.len();
    let a_cols: Vec<Vector<F::Elem>> = a.into_iter().map(|(v, _)| v).collect();
    let images: Vec<Vector<F::Elem>> =
        syz.cols().iter().map(|s| s.remap(|c| (c < na).then_some(c)).apply(&a_cols)).collect();
    Ok(minimal_generators(field, twists, &images)?.into_iter().map(|(v, _)| v.monic()).collect())
}

fn nonzero_with_degrees<E: super::Scalar>(
    gens: &[Vector<E>],
    twists: &[i64],
) -> Result<Vec<(Vector<E>, i64)>, KernelError> {
    let mut out = Vec::new();
    for g in gens {
        check_homogeneous(g, twists)?;
        if let Some(d) = g.degree(twists) {
            out.push((g.clone(), d));
        }
    }
    Ok(out)
}

/// `N : (f_1, .., f_s) = { v : f_j v ∈ N for all j }` for homogeneous
/// polynomials `f_j`, in one kernel computation of `F -> (F/N)^s`.
pub fn colon<F: Field>(
    field: &F,
    nvars: usize,
    twists: &[i64],
    n: &[Vector<F::Elem>],
    ideal: &[Poly<F::Elem>],
) -> Result<Vec<Vector<F::Elem>>, KernelError> {
    let rank = twists.len();
    let fs: Vec<&Poly<F::Elem>> = ideal.iter().filter(|p| !p.is_zero()).collect();
    let n = nonzero_with_degrees(n, twists)?;
    if fs.is_empty() {
        return Ok((0..rank).map(|j| Vector::basis(field.one(), nvars, j)).collect());
    }
    let mut fdeg = Vec::new();
    for f in &fs {
        if !f.is_homogeneous() {
            return Err(KernelError::NotHomogeneous("colon by an inhomogeneous polynomial".into()));
        }
        fdeg.push(f.degree().expect("nonzero"));
    }
    // copy j of F is shifted by top - deg f_j so every column is homogeneous
    let s = fs.len();
    let top = *fdeg.iter().max().expect("nonempty");
    let shifts: Vec<i64> = fdeg.iter().map(|d| top - d).collect();
    let mut target = Vec::with_capacity(rank * s);
    for sh in &shifts {
        target.extend(twists.iter().map(|a| a + sh));
    }
    let mut cols = Vec::new();
    let mut source = Vec::new();
    for i in 0..rank {
        let e = Vector::basis(field.one(), nvars, i);
        let mut col = Vector::zero();
        for (j, f) in fs.iter().enumerate() {
            col = col.add(&e.mul_poly(f).remap(|c| Some(c + j * rank)));
        }
        cols.push(col);
        source.push(twists[i] + top);
    }
    for (j, sh) in shifts.iter().enumerate() {
        for (g, d) in &n {
            cols.push(g.remap(|c| Some(c + j * rank)));
            source.push(d + sh);
        }
    }
    let m = GradedMatrix::new(target, source, cols)?;
    let syz = syzygy_kernel(field, nvars, &m)?;
    let part: Vec<Vector<F::Elem>> =
        syz.cols().iter().map(|v| v.remap(|c| (c < rank).then_some(c))).collect();
    let mut all = part;
    all.extend(n.iter().map(|(g, _)| g.clone()));
    Ok(minimal_generators(field, twists, &all)?.into_iter().map(|(v, _)| v.monic()).collect())
}

/// Presentation of `A / (A ∩ B)` where `A`, `B` are submodules of the free
/// module with the given twists; for `B ⊆ A` this is `A / B`.
pub fn subquotient<F: Field>(
    field: &F,
    nvars: usize,
    twists: &[i64],
    a: &[Vector<F::Elem>],
    b: &[Vector<F::Elem>],
) -> Result<GradedPresentation<F::Elem>, KernelError> {
    let gens = minimal_generators_modulo(field, twists, a, b)?;
    let b = nonzero_with_degrees(b, twists)?;
    let ngens = gens.len();
    let gen_twists: Vec<i64> = gens.iter().map(|(_, d)| *d).collect();
    if ngens == 0 {
        return Ok(GradedPresentation::free(Vec::new()));
    }
    let mut cols: Vec<Vector<F::Elem>> = gens.iter().map(|(v, _)| v.clone()).collect();
    cols.extend(b.iter().map(|(v, _)| v.clone()));
    let mut source = gen_twists.clone();
    source.extend(b.iter().map(|(_, d)| *d));
    let m = GradedMatrix::new(twists.to_vec(), source, cols)?;
    let syz = syzygy_kernel(field, nvars, &m)?;
    let rels: Vec<Vector<F::Elem>> =
        syz.cols().iter().map(|v| v.remap(|c| (c < ngens).then_some(c))).collect();
    let mins = minimal_generators(field, &gen_twists, &rels)?;
    let source: Vec<i64> = mins.iter().map(|(_, d)| *d).collect();
    let cols = mins.into_iter().map(|(v, _)| v).collect();
    Ok(GradedPresentation::new(GradedMatrix::new(gen_twists, source, cols)?))
}
