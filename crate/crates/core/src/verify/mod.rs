//! Compares the bounds of [`crate::bounds`] against invariants computed by
//! [`crate::homology`] for one concrete module.
//!
//! Every check is an inequality (or identity) between an actual invariant,
//! the left-hand side, and a bound or second route, the right-hand side.
//! A failing check on valid input means a bug somewhere in the pipeline.

mod checks;

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::bounds::DiagonalVector;
use crate::ext::ExtBig;
use crate::homology::CohomologyProfile;
use crate::kernel::{
    subquotient, Field, GradedPresentation, KernelError, PolyRing, Vector, DEFAULT_SEARCH_BUDGET,
};

/// Named families of checks, selectable on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckGroup {
    Thm36,
    Cor37,
    Thm42,
    Cor43,
    Cor44,
    Cor46,
    Rem47,
    Cor48,
    Prop412,
    Cor413,
    Cor414,
    Thm53,
    Diag,
    Lemma31,
    Lemma32,
    Lemma33,
    Prop25,
    Gendeg,
    Serre,
    Duality,
    RegRoutes,
    Sandwich,
    Qdeg,
}

impl CheckGroup {
    pub const ALL: [CheckGroup; 23] = [
        CheckGroup::Thm36,
        CheckGroup::Cor37,
        CheckGroup::Thm42,
        CheckGroup::Cor43,
        CheckGroup::Cor44,
        CheckGroup::Cor46,
        CheckGroup::Rem47,
        CheckGroup::Cor48,
        CheckGroup::Prop412,
        CheckGroup::Cor413,
        CheckGroup::Cor414,
        CheckGroup::Thm53,
        CheckGroup::Diag,
        CheckGroup::Lemma31,
        CheckGroup::Lemma32,
        CheckGroup::Lemma33,
        CheckGroup::Prop25,
        CheckGroup::Gendeg,
        CheckGroup::Serre,
        CheckGroup::Duality,
        CheckGroup::RegRoutes,
        CheckGroup::Sandwich,
        CheckGroup::Qdeg,
    ];

    pub fn id(self) -> &'static str {
        match self {
            CheckGroup::Thm36 => "thm3.6",
            CheckGroup::Cor37 => "cor3.7",
            CheckGroup::Thm42 => "thm4.2",
            CheckGroup::Cor43 => "cor4.3",
            CheckGroup::Cor44 => "cor4.4",
            CheckGroup::Cor46 => "cor4.6",
            CheckGroup::Rem47 => "rem4.7",
            CheckGroup::Cor48 => "cor4.8",
            CheckGroup::Prop412 => "prop4.12",
            CheckGroup::Cor413 => "cor4.13",
            CheckGroup::Cor414 => "cor4.14",
            CheckGroup::Thm53 => "thm5.3",
            CheckGroup::Diag => "diag",
            CheckGroup::Lemma31 => "lemma3.1",
            CheckGroup::Lemma32 => "lemma3.2",
            CheckGroup::Lemma33 => "lemma3.3",
            CheckGroup::Prop25 => "prop2.5",
            CheckGroup::Gendeg => "gendeg",
            CheckGroup::Serre => "serre",
            CheckGroup::Duality => "duality",
            CheckGroup::RegRoutes => "reg-routes",
            CheckGroup::Sandwich => "sandwich",
            CheckGroup::Qdeg => "qdeg",
        }
    }

    pub fn parse(s: &str) -> Option<CheckGroup> {
        CheckGroup::ALL.into_iter().find(|g| g.id() == s.trim())
    }

    /// Parses a comma-separated list, `"all"` selecting every group.
    pub fn parse_list(s: &str) -> Result<Vec<CheckGroup>, String> {
        if s.trim() == "all" {
            return Ok(CheckGroup::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in s.split(',').filter(|p| !p.trim().is_empty()) {
            match CheckGroup::parse(part) {
                Some(g) => out.push(g),
                None => return Err(format!("unknown check group '{}'", part.trim())),
            }
        }
        Ok(out)
    }

    /// Groups that need a submodule inside an ambient module.
    pub fn needs_pair(self) -> bool {
        matches!(
            self,
            CheckGroup::Cor43
                | CheckGroup::Cor44
                | CheckGroup::Cor46
                | CheckGroup::Rem47
                | CheckGroup::Prop412
                | CheckGroup::Cor413
                | CheckGroup::Cor414
        )
    }

    /// Groups that need a filter-regular linear form.
    pub fn needs_filter_regular(self) -> bool {
        matches!(self, CheckGroup::Lemma32 | CheckGroup::Prop25 | CheckGroup::Sandwich)
    }
}

impl fmt::Display for CheckGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// How the two sides are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    #[serde(rename = "<=")]
    AtMost,
    #[serde(rename = "<")]
    Below,
    #[serde(rename = ">=")]
    AtLeast,
    #[serde(rename = "=")]
    Equal,
}

impl Direction {
    pub fn symbol(self) -> &'static str {
        match self {
            Direction::AtMost => "<=",
            Direction::Below => "<",
            Direction::AtLeast => ">=",
            Direction::Equal => "=",
        }
    }

    fn holds(self, lhs: &ExtBig, rhs: &ExtBig) -> bool {
        match self {
            Direction::AtMost => lhs <= rhs,
            Direction::Below => lhs < rhs,
            Direction::AtLeast => lhs >= rhs,
            Direction::Equal => lhs == rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(String),
}

/// One verified inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCheck {
    pub id: String,
    pub statement: String,
    pub lhs_name: String,
    pub lhs: Option<ExtBig>,
    pub rhs_name: String,
    pub rhs: Option<ExtBig>,
    pub direction: Direction,
    pub outcome: Outcome,
}

fn difference(a: &ExtBig, b: &ExtBig) -> ExtBig {
    match (a, b) {
        (ExtBig::Finite(x), ExtBig::Finite(y)) => ExtBig::Finite(x - y),
        (ExtBig::PosInf, ExtBig::PosInf) | (ExtBig::NegInf, ExtBig::NegInf) => ExtBig::Finite(BigInt::from(0)),
        (ExtBig::PosInf, _) | (_, ExtBig::NegInf) => ExtBig::PosInf,
        (ExtBig::NegInf, _) | (_, ExtBig::PosInf) => ExtBig::NegInf,
    }
}

impl BoundCheck {
    pub fn compare(
        id: impl Into<String>,
        statement: impl Into<String>,
        lhs_name: impl Into<String>,
        lhs: ExtBig,
        direction: Direction,
        rhs_name: impl Into<String>,
        rhs: ExtBig,
    ) -> BoundCheck {
        let outcome = if direction.holds(&lhs, &rhs) { Outcome::Pass } else { Outcome::Fail };
        BoundCheck {
            id: id.into(),
            statement: statement.into(),
            lhs_name: lhs_name.into(),
            lhs: Some(lhs),
            rhs_name: rhs_name.into(),
            rhs: Some(rhs),
            direction,
            outcome,
        }
    }

    pub fn skipped(id: impl Into<String>, statement: impl Into<String>, reason: impl Into<String>) -> BoundCheck {
        BoundCheck {
            id: id.into(),
            statement: statement.into(),
            lhs_name: String::new(),
            lhs: None,
            rhs_name: String::new(),
            rhs: None,
            direction: Direction::AtMost,
            outcome: Outcome::Skipped(reason.into()),
        }
    }

    /// Slack in the direction of the check: `rhs - lhs` for upper bounds and
    /// identities, `lhs - rhs` for lower bounds. Never clamped.
    pub fn margin(&self) -> Option<ExtBig> {
        let (lhs, rhs) = (self.lhs.as_ref()?, self.rhs.as_ref()?);
        Some(match self.direction {
            Direction::AtLeast => difference(lhs, rhs),
            _ => difference(rhs, lhs),
        })
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn failed(&self) -> bool {
        self.outcome == Outcome::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.outcome, Outcome::Skipped(_))
    }
}

/// A submodule `M` of `U = coker(ambient)`, given by vectors of the free
/// module covering `U`.
#[derive(Clone, Debug)]
pub struct SubmodulePair<E> {
    pub ambient: GradedPresentation<E>,
    pub generators: Vec<Vector<E>>,
}

impl<E: crate::kernel::Scalar> SubmodulePair<E> {
    /// Presentation of `M = (<generators> + N) / N`.
    pub fn submodule<F: Field<Elem = E>>(&self, ring: &PolyRing<F>) -> Result<GradedPresentation<E>, KernelError> {
        for g in &self.generators {
            if g.max_comp().is_some_and(|c| c >= self.ambient.ngens()) {
                return Err(KernelError::Shape("submodule generator has more entries than the ambient module".into()));
            }
        }
        let twists = self.ambient.generator_twists();
        let mut all = self.generators.clone();
        all.extend_from_slice(self.ambient.relations());
        subquotient(ring.field(), ring.nvars(), twists, &all, self.ambient.relations())
    }

    /// Presentation of `U / M`.
    pub fn quotient(&self) -> Result<GradedPresentation<E>, KernelError> {
        let twists = self.ambient.generator_twists();
        let mut degs = Vec::new();
        let mut gens = Vec::new();
        for g in &self.generators {
            if g.is_zero() {
                continue;
            }
            if !g.is_homogeneous(twists) {
                return Err(KernelError::NotHomogeneous("submodule generator is not homogeneous".into()));
            }
            degs.push(g.degree(twists).expect("nonzero"));
            gens.push(g.clone());
        }
        self.ambient.with_relations(&gens, &degs)
    }
}

/// What to verify.
#[derive(Clone, Debug)]
pub struct VerifyInput<F: Field> {
    pub ring: PolyRing<F>,
    pub module: GradedPresentation<F::Elem>,
    pub pair: Option<SubmodulePair<F::Elem>>,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Degree window for pointwise checks; defaults to the profile window.
    pub window: Option<(i64, i64)>,
    /// Caps `(x; y)` for the padded-dimension variant; defaults to the
    /// cohomology diagonal padded by one.
    pub caps: Option<DiagonalVector>,
    pub search_budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { window: None, caps: None, search_budget: DEFAULT_SEARCH_BUDGET }
    }
}

/// The outcome of a verification run.
#[derive(Clone, Debug)]
pub struct Report<F: Field> {
    pub profile: CohomologyProfile<F>,
    pub checks: Vec<BoundCheck>,
    /// The filter-regular form used, or why none was available.
    pub filter_regular: Option<Result<String, String>>,
}

impl<F: Field> Report<F> {
    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(BoundCheck::failed)
    }

    pub fn failures(&self) -> Vec<&BoundCheck> {
        self.checks.iter().filter(|c| c.failed()).collect()
    }

    pub fn find(&self, id: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Runs the selected groups in canonical order, each at most once. Every
/// enabled group contributes at least one record.
pub fn verify<F: Field>(
    input: &VerifyInput<F>,
    groups: &[CheckGroup],
    opts: &VerifyOptions,
) -> Result<Report<F>, KernelError> {
    let profile = CohomologyProfile::new(&input.ring, &input.module)?;
    verify_profile(input, profile, groups, opts)
}

/// As [`verify`], reusing an already computed profile of `input.module`.
pub fn verify_profile<F: Field>(
    input: &VerifyInput<F>,
    profile: CohomologyProfile<F>,
    groups: &[CheckGroup],
    opts: &VerifyOptions,
) -> Result<Report<F>, KernelError> {
    let mut groups = groups.to_vec();
    groups.sort();
    groups.dedup();
    let pair = match (&input.pair, groups.iter().any(|g| g.needs_pair())) {
        (Some(p), true) => Some(checks::PairData::new(&input.ring, p)?),
        _ => None,
    };
    let mut ctx = checks::Context::new(&input.ring, &profile, pair.as_ref(), opts);
    if groups.iter().any(|g| g.needs_filter_regular()) {
        ctx.find_filter_regular()?;
    }
    let mut out = Vec::new();
    for g in &groups {
        let mut rows = ctx.run(*g)?;
        if rows.is_empty() {
            rows.push(BoundCheck::skipped(g.id(), "no instance applies", "vacuous"));
        }
        out.extend(rows);
    }
    let filter_regular = ctx.filter_regular_description();
    Ok(Report { profile, checks: out, filter_regular })
}
