use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BoundCheck, CheckGroup, Direction, SubmodulePair, VerifyOptions};
use crate::bounds::{
    diagonal_cohomology_bound, eval_e, eval_f, eval_g, gamma_ideal_bound, ideal_gendeg_bound, ideal_mumford_bound,
    lemma33_bound, mumford_t, presentation_bound, submodule_gendeg_bound, submodule_mumford_bound, BoundError,
    DiagonalVector, HilbertCoefficients, MumfordT,
};
use crate::ext::{ExtBig, ExtInt};
use crate::homology::{deficiency, free_resolution, CohomologyProfile, GradedModule};
use crate::kernel::{
    colon, find_filter_regular, subquotient, torsion_submodule, Field, GradedPresentation, KernelError, Poly,
    PolyRing, Vector,
};

pub(super) struct PairData<F: Field> {
    ambient: CohomologyProfile<F>,
    sub: CohomologyProfile<F>,
    quotient: CohomologyProfile<F>,
    ambient_is_ring: bool,
}

impl<F: Field> PairData<F> {
    pub(super) fn new(ring: &PolyRing<F>, pair: &SubmodulePair<F::Elem>) -> Result<Self, KernelError> {
        let ambient = CohomologyProfile::new(ring, &pair.ambient)?;
        let sub = CohomologyProfile::new(ring, &pair.submodule(ring)?)?;
        let quotient = CohomologyProfile::new(ring, &pair.quotient()?)?;
        let pres = ambient.module().presentation();
        let ambient_is_ring = pres.generator_twists() == [0] && pres.relations().is_empty();
        Ok(PairData { ambient, sub, quotient, ambient_is_ring })
    }
}

pub(super) struct Context<'a, F: Field> {
    ring: &'a PolyRing<F>,
    p: &'a CohomologyProfile<F>,
    pair: Option<&'a PairData<F>>,
    opts: &'a VerifyOptions,
    window: (i64, i64),
    x: Option<Result<Poly<F::Elem>, String>>,
}

fn fin(v: impl Into<BigInt>) -> ExtBig {
    ExtBig::Finite(v.into())
}

fn reg_of<F: Field>(p: &CohomologyProfile<F>, i: usize) -> ExtInt {
    if i <= p.nvars() {
        p.deficiency(i).regularity()
    } else {
        ExtInt::NegInf
    }
}

/// `dim M` as an index, `None` for the zero module.
fn dim_of<F: Field>(p: &CohomologyProfile<F>) -> Option<usize> {
    p.dim.finite().map(|d| *d as usize)
}

fn finite_or(v: &ExtInt, fallback: i64) -> i64 {
    v.finite().copied().unwrap_or(fallback)
}

fn bound_row(
    id: String,
    statement: &str,
    lhs_name: &str,
    lhs: ExtBig,
    direction: Direction,
    rhs_name: String,
    rhs: Result<BigInt, BoundError>,
) -> BoundCheck {
    match rhs {
        Ok(v) => BoundCheck::compare(id, statement, lhs_name, lhs, direction, rhs_name, fin(v)),
        Err(e) => BoundCheck::skipped(id, statement, format!("bound undefined: {e}")),
    }
}

/// Counts window points where both sides agree.
fn agreement(
    id: String,
    statement: &str,
    window: (i64, i64),
    mut sides: impl FnMut(i64) -> Result<(BigInt, BigInt), KernelError>,
) -> Result<BoundCheck, KernelError> {
    let (lo, hi) = window;
    let mut agree = 0i64;
    let mut first_bad = None;
    for n in lo..=hi {
        let (a, b) = sides(n)?;
        if a == b {
            agree += 1;
        } else if first_bad.is_none() {
            first_bad = Some(n);
        }
    }
    let lhs_name = match first_bad {
        Some(n) => format!("agreeing points (first mismatch at n = {n})"),
        None => "agreeing points".to_string(),
    };
    Ok(BoundCheck::compare(
        id,
        statement,
        lhs_name,
        fin(agree),
        Direction::Equal,
        format!("points in [{lo}, {hi}]"),
        fin((hi - lo + 1).max(0)),
    ))
}

fn max_reg<F: Field>(a: &CohomologyProfile<F>, b: &CohomologyProfile<F>, i: usize) -> ExtBig {
    reg_of(a, i).max(reg_of(b, i)).to_big()
}

const NO_PAIR: &str = "no submodule pair given";

impl<'a, F: Field> Context<'a, F> {
    pub(super) fn new(
        ring: &'a PolyRing<F>,
        p: &'a CohomologyProfile<F>,
        pair: Option<&'a PairData<F>>,
        opts: &'a VerifyOptions,
    ) -> Self {
        let window = opts.window.unwrap_or(p.window);
        Context { ring, p, pair, opts, window, x: None }
    }

    pub(super) fn find_filter_regular(&mut self) -> Result<(), KernelError> {
        if self.p.is_zero() {
            self.x = Some(Err("zero module".into()));
            return Ok(());
        }
        let companions: Vec<GradedPresentation<F::Elem>> = self
            .p
            .deficiency_modules()
            .iter()
            .filter(|k| !k.is_zero())
            .map(GradedModule::presentation)
            .collect();
        let pres = self.p.module().presentation();
        self.x = Some(match find_filter_regular(self.ring, &pres, &companions, self.opts.search_budget) {
            Ok(x) => Ok(x),
            Err(e @ KernelError::FilterRegularExhausted { .. }) => Err(e.to_string()),
            Err(e) => return Err(e),
        });
        Ok(())
    }

    pub(super) fn filter_regular_description(&self) -> Option<Result<String, String>> {
        self.x.as_ref().map(|r| r.as_ref().map(|x| self.ring.fmt_poly(x)).map_err(Clone::clone))
    }

    pub(super) fn run(&self, g: CheckGroup) -> Result<Vec<BoundCheck>, KernelError> {
        Ok(match g {
            CheckGroup::Thm36 => self.thm36(),
            CheckGroup::Cor37 => self.cor37(),
            CheckGroup::Thm42 => self.thm42(),
            CheckGroup::Cor43 => self.cor43(),
            CheckGroup::Cor44 => self.cor44(),
            CheckGroup::Cor46 => self.cor46(),
            CheckGroup::Rem47 => self.rem47(),
            CheckGroup::Cor48 => self.cor48(),
            CheckGroup::Prop412 => self.prop412(),
            CheckGroup::Cor413 => self.cor413(),
            CheckGroup::Cor414 => self.cor414(),
            CheckGroup::Thm53 => self.thm53(),
            CheckGroup::Diag => self.diag(),
            CheckGroup::Lemma31 => self.lemma31(),
            CheckGroup::Lemma32 => self.lemma32()?,
            CheckGroup::Lemma33 => self.lemma33(),
            CheckGroup::Prop25 => self.prop25()?,
            CheckGroup::Gendeg => self.gendeg(),
            CheckGroup::Serre => self.serre()?,
            CheckGroup::Duality => self.duality()?,
            CheckGroup::RegRoutes => self.reg_routes(),
            CheckGroup::Sandwich => self.sandwich()?,
            CheckGroup::Qdeg => self.qdeg(),
        })
    }

    fn diagonal_caps(&self, d: usize) -> DiagonalVector {
        let mut entries = self.p.diagonal.clone();
        entries.resize(d.max(1), BigInt::zero());
        DiagonalVector::new(entries, BigInt::from(finite_or(&self.p.beg, 0))).expect("lengths are nonnegative")
    }

    fn thm36(&self) -> Vec<BoundCheck> {
        const S: &str = "reg K^i(M) <= F^i_d(d^0(0), .., d^{d-1}(1-d); beg M), d = dim M";
        let Some(dim) = dim_of(self.p) else {
            return vec![BoundCheck::skipped("thm3.6", S, "zero module")];
        };
        let d = dim.max(1);
        let caps = self.diagonal_caps(d);
        (0..=dim)
            .map(|i| {
                bound_row(
                    format!("thm3.6[i={i}]"),
                    S,
                    "reg K^i(M)",
                    reg_of(self.p, i).to_big(),
                    Direction::AtMost,
                    format!("F^{i}_{d}(diagonal; beg)"),
                    eval_f(i as i64, &caps),
                )
            })
            .collect()
    }

    fn cor37(&self) -> Vec<BoundCheck> {
        const S: &str = "reg K^i(M) <= F^i_d(x; y) whenever dim M <= d, d^j(-j) <= x_j, beg M >= y";
        let Some(dim) = dim_of(self.p) else {
            return vec![BoundCheck::skipped("cor3.7", S, "zero module")];
        };
        let caps = match &self.opts.caps {
            Some(c) => c.clone(),
            None => {
                let d = dim + 1;
                let entries = (0..d).map(|j| self.p.d(j, -(j as i64))).collect();
                DiagonalVector::new(entries, BigInt::from(finite_or(&self.p.beg, 0))).expect("nonnegative")
            }
        };
        let d = caps.dim();
        if dim > d {
            return vec![BoundCheck::skipped("cor3.7", S, format!("hypothesis unmet: dim M = {dim} > d = {d}"))];
        }
        for (j, x) in caps.entries().iter().enumerate() {
            let actual = self.p.d(j, -(j as i64));
            if &actual > x {
                return vec![BoundCheck::skipped(
                    "cor3.7",
                    S,
                    format!("hypothesis unmet: d^{j}({}) = {actual} > x_{j} = {x}", -(j as i64)),
                )];
            }
        }
        if self.p.beg.to_big() < fin(caps.basedeg().clone()) {
            return vec![BoundCheck::skipped("cor3.7", S, "hypothesis unmet: beg M < y")];
        }
        (0..=d)
            .map(|i| {
                bound_row(
                    format!("cor3.7[i={i}]"),
                    S,
                    "reg K^i(M)",
                    reg_of(self.p, i).to_big(),
                    Direction::AtMost,
                    format!("F^{i}_{d}(caps)"),
                    eval_f(i as i64, &caps),
                )
            })
            .collect()
    }

    fn thm42(&self) -> Vec<BoundCheck> {
        const S: &str = "reg K^i(M) <= G^i_d(p, b, r) with r >= reg^2 M, b <= beg M, p >= p_M(r)";
        let Some(dim) = dim_of(self.p) else {
            return vec![BoundCheck::skipped("thm4.2", S, "zero module")];
        };
        let d = dim.max(1);
        let b = finite_or(&self.p.beg, 0);
        let r = finite_or(&self.p.reg_from(2), b);
        let p = self.p.hilbert_poly.eval_integer(r).max(BigInt::zero());
        (0..=d)
            .map(|i| {
                bound_row(
                    format!("thm4.2[i={i}]"),
                    S,
                    "reg K^i(M)",
                    reg_of(self.p, i).to_big(),
                    Direction::AtMost,
                    format!("G^{i}_{d}({p}, {b}, {r})"),
                    eval_g(i as i64, d as i64, &p, &BigInt::from(b), &BigInt::from(r)),
                )
            })
            .collect()
    }

    fn cor43(&self) -> Vec<BoundCheck> {
        const S: &str = "max(reg K^i(M), reg K^i(U/M)) <= G^i_d(p, b, r) with r >= reg^2 of U and M, p >= p_U(r)";
        let Some(pd) = self.pair else {
            return vec![BoundCheck::skipped("cor4.3", S, NO_PAIR)];
        };
        let Some(dim_u) = dim_of(&pd.ambient) else {
            return vec![BoundCheck::skipped("cor4.3", S, "zero ambient module")];
        };
        let d = dim_u.max(1);
        let b = finite_or(&pd.ambient.beg, 0);
        let r = finite_or(&pd.ambient.reg_from(2).max(pd.sub.reg_from(2)), b);
        let p = pd.ambient.hilbert_poly.eval_integer(r).max(BigInt::zero());
        (0..=d)
            .map(|i| {
                bound_row(
                    format!("cor4.3[i={i}]"),
                    S,
                    "max(reg K^i(M), reg K^i(U/M))",
                    max_reg(&pd.sub, &pd.quotient, i),
                    Direction::AtMost,
                    format!("G^{i}_{d}({p}, {b}, {r})"),
                    eval_g(i as i64, d as i64, &p, &BigInt::from(b), &BigInt::from(r)),
                )
            })
            .collect()
    }

    fn ideal_pair(&self, id: &str, statement: &str) -> Result<&'a PairData<F>, Vec<BoundCheck>> {
        match self.pair {
            None => Err(vec![BoundCheck::skipped(id, statement, NO_PAIR)]),
            Some(pd) if !pd.ambient_is_ring => {
                Err(vec![BoundCheck::skipped(id, statement, "hypothesis unmet: ambient module is not the ring")])
            }
            Some(pd) => Ok(pd),
        }
    }

    fn cor44(&self) -> Vec<BoundCheck> {
        const S: &str = "max(reg K^i(a), reg K^i(R/a)) <= G^i_d(binom(m+r-1, r-1), 0, r), r >= max(1, reg^1 R, reg^2 a)";
        let pd = match self.ideal_pair("cor4.4", S) {
            Ok(pd) => pd,
            Err(rows) => return rows,
        };
        let n = self.ring.nvars() as i64;
        let r = 1i64.max(finite_or(&pd.sub.reg_from(2), 1)).max(finite_or(&pd.ambient.reg_from(1), 1));
        (0..=n)
            .map(|i| {
                bound_row(
                    format!("cor4.4[i={i}]"),
                    S,
                    "max(reg K^i(a), reg K^i(R/a))",
                    max_reg(&pd.sub, &pd.quotient, i as usize),
                    Direction::AtMost,
                    format!("gamma(i={i}, d={n}, m={n}, r={r})"),
                    gamma_ideal_bound(i, n, &BigInt::from(n), &BigInt::from(r), &BigInt::one()),
                )
            })
            .collect()
    }

    fn cor46(&self) -> Vec<BoundCheck> {
        const S: &str = "max(reg K^i(M), reg K^i(U/M)) < delta for gendeg M <= r, U m-generated, beg U = b, reg U < r";
        let Some(pd) = self.pair else {
            return vec![BoundCheck::skipped("cor4.6", S, NO_PAIR)];
        };
        if pd.ambient.is_zero() {
            return vec![BoundCheck::skipped("cor4.6", S, "hypothesis unmet: zero ambient module")];
        }
        let m = pd.ambient.module().presentation().ngens();
        let b = finite_or(&pd.ambient.beg, 0);
        let r = finite_or(&pd.ambient.reg, 0) + 1;
        if pd.sub.gendeg > ExtInt::Finite(r) {
            return vec![BoundCheck::skipped(
                "cor4.6",
                S,
                format!("hypothesis unmet: gendeg M = {} > r = {r}", pd.sub.gendeg),
            )];
        }
        let n = self.ring.nvars() as i64;
        (0..=n)
            .map(|i| {
                let rhs = submodule_gendeg_bound(i, n, &BigInt::from(m), &BigInt::one(), &BigInt::from(b), &BigInt::from(r))
                    .map(|v| v.delta);
                bound_row(
                    format!("cor4.6[i={i}]"),
                    S,
                    "max(reg K^i(M), reg K^i(U/M))",
                    max_reg(&pd.sub, &pd.quotient, i as usize),
                    Direction::Below,
                    format!("delta(i={i}, d={n}, m={m}, b={b}, r={r})"),
                    rhs,
                )
            })
            .collect()
    }

    fn rem47(&self) -> Vec<BoundCheck> {
        const S: &str = "max(reg K^i(a), reg K^i(R/a)) < gamma, r = (2 gendeg a)^(2^d - 2), for a proper of positive height, d, i > 1";
        let pd = match self.ideal_pair("rem4.7", S) {
            Ok(pd) => pd,
            Err(rows) => return rows,
        };
        let n = self.ring.nvars() as i64;
        if pd.sub.is_zero() || pd.quotient.is_zero() {
            return vec![BoundCheck::skipped("rem4.7", S, "hypothesis unmet: ideal is zero or the unit ideal")];
        }
        if pd.quotient.dim >= ExtInt::Finite(n) {
            return vec![BoundCheck::skipped("rem4.7", S, "hypothesis unmet: ideal of height 0")];
        }
        let g = BigInt::from(finite_or(&pd.sub.gendeg, 0));
        (0..=n)
            .map(|i| {
                let id = format!("rem4.7[i={i}]");
                if n <= 1 || i <= 1 {
                    return BoundCheck::skipped(id, S, "hypothesis unmet: needs d > 1 and i > 1");
                }
                bound_row(
                    id,
                    S,
                    "max(reg K^i(a), reg K^i(R/a))",
                    max_reg(&pd.sub, &pd.quotient, i as usize),
                    Direction::Below,
                    format!("gamma(i={i}, d={n}, gendeg={g})"),
                    ideal_gendeg_bound(i, n, &g, &BigInt::one()).map(|(_, gamma)| gamma),
                )
            })
            .collect()
    }

    fn cor48(&self) -> Vec<BoundCheck> {
        const S: &str = "reg K^i(N) < delta for F -> N onto, r = max(gendeg F + 1, gendeg ker)";
        if self.p.is_zero() {
            return vec![BoundCheck::skipped("cor4.8", S, "zero module")];
        }
        let pres = self.p.module().presentation();
        let twists = pres.generator_twists();
        let m = BigInt::from(twists.len());
        let b = BigInt::from(*twists.iter().min().expect("nonzero module"));
        let gf = *twists.iter().max().expect("nonzero module");
        let gk = pres.matrix().source().iter().copied().max().unwrap_or(gf);
        let n = self.ring.nvars() as i64;
        (0..=n)
            .map(|i| {
                bound_row(
                    format!("cor4.8[i={i}]"),
                    S,
                    "reg K^i(M)",
                    reg_of(self.p, i as usize).to_big(),
                    Direction::Below,
                    format!("delta(i={i}, d={n}, m={m}, b={b}, gendeg F={gf}, gendeg ker={gk})"),
                    presentation_bound(i, n, &m, &BigInt::one(), &b, &BigInt::from(gf), &BigInt::from(gk)),
                )
            })
            .collect()
    }

    /// Shared data for the Mumford-type checks: `(d, r, t)`.
    fn mumford_setup(&self, id: &str, statement: &str) -> Result<(&'a PairData<F>, usize, i64, MumfordT), Vec<BoundCheck>> {
        let Some(pd) = self.pair else {
            return Err(vec![BoundCheck::skipped(id, statement, NO_PAIR)]);
        };
        let d = dim_of(&pd.ambient).unwrap_or(0);
        if d < 2 {
            return Err(vec![BoundCheck::skipped(id, statement, format!("hypothesis unmet: dim U = {} < 2", pd.ambient.dim))]);
        }
        let r = finite_or(&pd.ambient.reg, 0);
        let m = pd.ambient.hilbert_function(r).max(BigInt::one());
        let t = lift_t(&pd.quotient, d, r, &m);
        match t {
            Ok(t) => Ok((pd, d, r, t)),
            Err(e) => Err(vec![BoundCheck::skipped(id, statement, format!("bound undefined: {e}"))]),
        }
    }

    fn prop412(&self) -> Vec<BoundCheck> {
        const S: &str = "reg^1(U/M) <= max(0, t-1) + r and reg^2(M) <= max(1, t) + r, reg U <= r";
        let (pd, _, r, mt) = match self.mumford_setup("prop4.12", S) {
            Ok(v) => v,
            Err(rows) => return rows,
        };
        vec![
            BoundCheck::compare(
                "prop4.12[a]",
                S,
                "reg^1(U/M)",
                pd.quotient.reg_from(1).to_big(),
                Direction::AtMost,
                format!("max(0, t-1) + r, t = {}, r = {r}", mt.t),
                fin(&mt.reg1_offset + r),
            ),
            BoundCheck::compare(
                "prop4.12[b]",
                S,
                "reg^2(M)",
                pd.sub.reg_from(2).to_big(),
                Direction::AtMost,
                format!("max(1, t) + r, t = {}, r = {r}", mt.t),
                fin(&mt.reg2_offset + r),
            ),
        ]
    }

    fn cor413(&self) -> Vec<BoundCheck> {
        const S: &str = "max(reg K^i(M), reg K^i(U/M)) <= G^i_d(p, b, max(1, t) + r), p >= p_U(r), b <= beg U";
        let (pd, d, r, mt) = match self.mumford_setup("cor4.13", S) {
            Ok(v) => v,
            Err(rows) => return rows,
        };
        let b = BigInt::from(finite_or(&pd.ambient.beg, 0));
        let p = pd.ambient.hilbert_poly.eval_integer(r).max(BigInt::zero());
        (0..=d)
            .map(|i| {
                bound_row(
                    format!("cor4.13[i={i}]"),
                    S,
                    "max(reg K^i(M), reg K^i(U/M))",
                    max_reg(&pd.sub, &pd.quotient, i),
                    Direction::AtMost,
                    format!("G^{i}_{d}({p}, {b}, max(1, {}) + {r})", mt.t),
                    submodule_mumford_bound(i as i64, d as i64, &p, &b, &mt.t, &BigInt::from(r)),
                )
            })
            .collect()
    }

    fn cor414(&self) -> Vec<BoundCheck> {
        const S: &str = "max(reg K^i(a), reg K^i(R/a)) <= G^i_d(1, 0, max(1, t)), t from the Hilbert coefficients of R/a";
        let pd = match self.ideal_pair("cor4.14", S) {
            Ok(pd) => pd,
            Err(rows) => return rows,
        };
        let n = self.ring.nvars();
        if n < 2 {
            return vec![BoundCheck::skipped("cor4.14", S, "hypothesis unmet: needs d > 1")];
        }
        let t = match lift_t(&pd.quotient, n, 0, &BigInt::one()) {
            Ok(mt) => mt.t,
            Err(e) => return vec![BoundCheck::skipped("cor4.14", S, format!("bound undefined: {e}"))],
        };
        (0..=n)
            .map(|i| {
                bound_row(
                    format!("cor4.14[i={i}]"),
                    S,
                    "max(reg K^i(a), reg K^i(R/a))",
                    max_reg(&pd.sub, &pd.quotient, i),
                    Direction::AtMost,
                    format!("G^{i}_{n}(1, 0, max(1, {t}))"),
                    ideal_mumford_bound(i as i64, n as i64, &t),
                )
            })
            .collect()
    }

    fn thm53(&self) -> Vec<BoundCheck> {
        const S: &str = "nu^i(M) >= E^i_d(d^0(0), .., d^{d-1}(1-d)), d = dim M";
        let Some(dim) = dim_of(self.p) else {
            return vec![BoundCheck::skipped("thm5.3", S, "zero module")];
        };
        (0..dim)
            .map(|i| {
                bound_row(
                    format!("thm5.3[i={i}]"),
                    S,
                    "nu^i(M)",
                    self.p.nu[i].definitional.to_big(),
                    Direction::AtLeast,
                    format!("E^{i}_{dim}(diagonal)"),
                    eval_e(i as i64, &self.p.diagonal),
                )
            })
            .collect()
    }

    fn diag(&self) -> Vec<BoundCheck> {
        const S: &str = "d^i(n) <= diagonal cohomology bound for n <= -i";
        let dim = dim_of(self.p).unwrap_or(0);
        let (lo, hi) = self.window;
        let mut rows = Vec::new();
        for i in 0..dim {
            let caps = &self.p.diagonal[..=i];
            for n in lo..=hi.min(-(i as i64)) {
                rows.push(bound_row(
                    format!("diag[i={i},n={n}]"),
                    S,
                    "d^i(n)",
                    fin(self.p.d(i, n)),
                    Direction::AtMost,
                    format!("diagonal bound(i={i}, n={n})"),
                    diagonal_cohomology_bound(i as i64, n, caps),
                ));
            }
        }
        rows
    }

    fn lemma31(&self) -> Vec<BoundCheck> {
        const S: &str = "depth K^{dim M}(M) >= min(2, dim M)";
        let Some(dim) = dim_of(self.p) else {
            return Vec::new();
        };
        vec![BoundCheck::compare(
            "lemma3.1",
            S,
            "depth K^dim(M)",
            self.p.deficiency(dim).depth().to_big(),
            Direction::AtLeast,
            "min(2, dim M)",
            fin(dim.min(2) as i64),
        )]
    }

    fn lemma33(&self) -> Vec<BoundCheck> {
        const S: &str = "length K^{i+1}(M)_n <= sum_j binom(n-j-1, i-j) sum_l binom(i-j, l) d^{i-l}(l-i), n >= i";
        let dim = dim_of(self.p).unwrap_or(0);
        let (lo, hi) = self.window;
        let mut rows = Vec::new();
        for i in 0..dim {
            let caps = &self.p.diagonal[..=i];
            for n in lo.max(i as i64)..=hi {
                rows.push(bound_row(
                    format!("lemma3.3[i={i},n={n}]"),
                    S,
                    "length K^{i+1}(M)_n",
                    fin(self.p.deficiency(i + 1).hilbert_function(n)),
                    Direction::AtMost,
                    format!("lemma bound(i={i}, n={n})"),
                    lemma33_bound(i as i64, n, caps),
                ));
            }
        }
        rows
    }

    fn gendeg(&self) -> Vec<BoundCheck> {
        vec![BoundCheck::compare(
            "gendeg",
            "gendeg M <= reg M",
            "gendeg M",
            self.p.gendeg.to_big(),
            Direction::AtMost,
            "reg M",
            self.p.reg.to_big(),
        )]
    }

    fn serre(&self) -> Result<Vec<BoundCheck>, KernelError> {
        let n_vars = self.p.nvars();
        let hp = &self.p.hilbert_poly;
        let by_h = agreement(
            "serre[h]".into(),
            "p_M(n) = length M_n - sum_j (-1)^j h^j(n)",
            self.window,
            |n| {
                let mut rhs = self.p.hilbert_function(n);
                for j in 0..=n_vars {
                    let h = self.p.h(j, n);
                    if j % 2 == 0 {
                        rhs -= h;
                    } else {
                        rhs += h;
                    }
                }
                Ok((hp.eval_integer(n), rhs))
            },
        )?;
        let by_d = agreement("serre[d]".into(), "p_M(n) = sum_i (-1)^i d^i(n)", self.window, |n| {
            let mut rhs = BigInt::zero();
            for i in 0..n_vars.max(1) {
                let d = self.p.d(i, n);
                if i % 2 == 0 {
                    rhs += d;
                } else {
                    rhs -= d;
                }
            }
            Ok((hp.eval_integer(n), rhs))
        })?;
        Ok(vec![by_h, by_d])
    }

    fn duality(&self) -> Result<Vec<BoundCheck>, KernelError> {
        let gamma = torsion_submodule(self.ring, &self.p.module().presentation())?;
        let gamma = GradedModule::new(self.ring, &gamma)?;
        Ok(vec![agreement(
            "duality".into(),
            "h^0(n) from K^0 equals length of the saturation quotient in degree n",
            self.window,
            |n| Ok((self.p.h(0, n), gamma.hilbert_function(n))),
        )?])
    }

    fn reg_routes(&self) -> Vec<BoundCheck> {
        vec![BoundCheck::compare(
            "reg-routes",
            "reg M from the Betti table equals max(a_i + i)",
            "reg M (Betti)",
            self.p.reg.to_big(),
            Direction::Equal,
            "max(a_i + i)",
            self.p.reg_from(0).to_big(),
        )]
    }

    fn qdeg(&self) -> Vec<BoundCheck> {
        (0..self.p.nvars())
            .map(|i| {
                let deg = self.p.q(i).degree().map_or(ExtBig::NegInf, |k| fin(k as i64));
                BoundCheck::compare(
                    format!("qdeg[i={i}]"),
                    "deg q^i(M) <= i",
                    "deg q^i",
                    deg,
                    Direction::AtMost,
                    "i",
                    fin(i as i64),
                )
            })
            .collect()
    }

    fn filter_regular(&self, id: &str, statement: &str) -> Result<&Poly<F::Elem>, Vec<BoundCheck>> {
        match &self.x {
            Some(Ok(x)) => Ok(x),
            Some(Err(reason)) if self.p.is_zero() => {
                let _ = reason;
                Err(Vec::new())
            }
            Some(Err(reason)) => Err(vec![BoundCheck::skipped(id, statement, format!("no filter-regular form: {reason}"))]),
            None => Err(vec![BoundCheck::skipped(id, statement, "filter-regular search not run")]),
        }
    }

    /// `M / xM`.
    fn modulo_x(&self, pres: &GradedPresentation<F::Elem>, x: &Poly<F::Elem>) -> Result<GradedPresentation<F::Elem>, KernelError> {
        let (rels, degs) = x_relations(self.ring, pres, x);
        pres.with_relations(&rels, &degs)
    }

    /// `(0 :_M x)` as a subquotient of the free cover.
    fn annihilated_by(&self, pres: &GradedPresentation<F::Elem>, x: &Poly<F::Elem>) -> Result<GradedPresentation<F::Elem>, KernelError> {
        let twists = pres.generator_twists();
        let c = colon(self.ring.field(), self.ring.nvars(), twists, pres.relations(), std::slice::from_ref(x))?;
        subquotient(self.ring.field(), self.ring.nvars(), twists, &c, pres.relations())
    }

    fn lemma32(&self) -> Result<Vec<BoundCheck>, KernelError> {
        const S: &str = "length K^i(M/xM)_n = length (K^{i+1}/xK^{i+1})_{n+1} + length (0 :_{K^i} x)_n";
        let x = match self.filter_regular("lemma3.2", S) {
            Ok(x) => x,
            Err(rows) => return Ok(rows),
        };
        let mx = self.modulo_x(&self.p.module().presentation(), x)?;
        let res = free_resolution(self.ring, &mx)?;
        let n_vars = self.ring.nvars();
        let top = dim_of(self.p).unwrap_or(0).min(n_vars);
        let mut rows = Vec::new();
        for i in 0..=top {
            let left = GradedModule::new(self.ring, &deficiency(self.ring, &res, i)?)?;
            let cok = if i < n_vars {
                let k = self.p.deficiency(i + 1).presentation();
                Some(GradedModule::new(self.ring, &self.modulo_x(&k, x)?)?)
            } else {
                None
            };
            let ann = GradedModule::new(self.ring, &self.annihilated_by(&self.p.deficiency(i).presentation(), x)?)?;
            rows.push(agreement(format!("lemma3.2[i={i}]"), S, self.window, |n| {
                let mut rhs = ann.hilbert_function(n);
                if let Some(c) = &cok {
                    rhs += c.hilbert_function(n + 1);
                }
                Ok((left.hilbert_function(n), rhs))
            })?);
        }
        Ok(rows)
    }

    fn prop25(&self) -> Result<Vec<BoundCheck>, KernelError> {
        const S: &str = "reg M <= m + h^0(m) for m >= max(reg M/xM, gendeg (0 :_M x)), x filter-regular";
        let x = match self.filter_regular("prop2.5", S) {
            Ok(x) => x,
            Err(rows) => return Ok(rows),
        };
        let pres = self.p.module().presentation();
        let mx = GradedModule::new(self.ring, &self.modulo_x(&pres, x)?)?;
        let ann = GradedModule::new(self.ring, &self.annihilated_by(&pres, x)?)?;
        let ExtInt::Finite(m) = mx.regularity().max(ann.gendeg()) else {
            return Ok(vec![BoundCheck::skipped("prop2.5", S, "M/xM and (0 :_M x) both vanish")]);
        };
        let h0 = self.p.h(0, m);
        Ok(vec![BoundCheck::compare(
            "prop2.5",
            S,
            "reg M",
            self.p.reg.to_big(),
            Direction::AtMost,
            format!("m + h^0(m), m = {m}"),
            fin(BigInt::from(m) + h0),
        )])
    }

    fn sandwich(&self) -> Result<Vec<BoundCheck>, KernelError> {
        const S: &str = "reg^1 M <= reg M/xM <= reg M, x filter-regular";
        let x = match self.filter_regular("sandwich", S) {
            Ok(x) => x,
            Err(rows) => return Ok(rows),
        };
        let mx = GradedModule::new(self.ring, &self.modulo_x(&self.p.module().presentation(), x)?)?;
        let r = mx.regularity().to_big();
        Ok(vec![
            BoundCheck::compare(
                "sandwich[lower]",
                S,
                "reg^1 M",
                self.p.reg_from(1).to_big(),
                Direction::AtMost,
                "reg M/xM",
                r.clone(),
            ),
            BoundCheck::compare("sandwich[upper]", S, "reg M/xM", r, Direction::AtMost, "reg M", self.p.reg.to_big()),
        ])
    }
}

/// `x e_j` for every generator `e_j`, with degrees.
fn x_relations<F: Field>(
    ring: &PolyRing<F>,
    pres: &GradedPresentation<F::Elem>,
    x: &Poly<F::Elem>,
) -> (Vec<Vector<F::Elem>>, Vec<i64>) {
    let twists = pres.generator_twists();
    let rels = (0..twists.len()).map(|j| ring.basis(j).mul_poly(x)).collect();
    let degs = twists.iter().map(|a| a + 1).collect();
    (rels, degs)
}

/// `t` for the quotient `L = U/M` and `U` of dimension `d`, regularity `r`.
fn lift_t<F: Field>(l: &CohomologyProfile<F>, d: usize, r: i64, m: &BigInt) -> Result<MumfordT, BoundError> {
    let (h, e) = match dim_of(l) {
        None => (d as i64, HilbertCoefficients::new(Vec::new())),
        Some(dl) => (d as i64 - dl as i64, HilbertCoefficients::from_poly(&l.hilbert_poly.shift(r), dl)?),
    };
    mumford_t(m, d as i64, &BigInt::one(), h, &e)
}
