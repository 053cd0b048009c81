//! Input documents: a ring, a module over it, and optionally a submodule pair.
//!
//! JSON is the canonical form. A one-line shorthand `Q[x,y] (x^2, x*y)` or
//! `GF(7)[x,y,z] (x*y, x*z)` describes `R/a` for an ideal `a`.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::parse::{parse_polynomial, ParseError};
use crate::bounds::DiagonalVector;
use crate::kernel::{Field, GradedMatrix, GradedPresentation, KernelError, Poly, PolyRing, PrimeField, Rationals, Vector};
use crate::verify::{SubmodulePair, VerifyInput, VerifyOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    GF(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CokerSpec {
    pub target_twists: Vec<i64>,
    pub source_twists: Vec<i64>,
    /// Row-major; one row per target twist, one column per source twist.
    pub matrix: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModuleSpec {
    /// `R/a`.
    Ideal(Vec<String>),
    /// `a` itself.
    IdealAsModule(Vec<String>),
    Coker(CokerSpec),
}

/// Caps `(x_0, .., x_{d-1}; y)` for the padded-dimension checks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CapsSpec {
    pub x: Vec<i64>,
    pub y: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub field: FieldSpec,
    pub vars: Vec<String>,
    pub module: ModuleSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ambient: Option<CokerSpec>,
    /// Generators of a submodule of `ambient`, one vector of polynomial
    /// strings per generator.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub submodule: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caps: Option<CapsSpec>,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{context}: {source}")]
    Parse {
        context: String,
        #[source]
        source: ParseError,
    },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A built input over one of the two supported fields.
#[derive(Clone, Debug)]
pub enum AnyInput {
    Q(VerifyInput<Rationals>),
    GF(VerifyInput<PrimeField>),
}

impl InputDocument {
    pub fn ideal(field: FieldSpec, vars: &[&str], gens: &[&str]) -> Self {
        InputDocument {
            field,
            vars: vars.iter().map(|s| s.to_string()).collect(),
            module: ModuleSpec::Ideal(gens.iter().map(|s| s.to_string()).collect()),
            ambient: None,
            submodule: None,
            caps: None,
        }
    }

    /// JSON if the text starts with `{`, the shorthand otherwise.
    pub fn parse(text: &str) -> Result<Self, InputError> {
        let t = text.trim();
        if t.starts_with('{') {
            Ok(serde_json::from_str(t)?)
        } else {
            parse_shorthand(t)
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn build(&self) -> Result<AnyInput, InputError> {
        match self.field {
            FieldSpec::Q => Ok(AnyInput::Q(self.build_over(Rationals)?)),
            FieldSpec::GF(p) => Ok(AnyInput::GF(self.build_over(PrimeField::new(p)?)?)),
        }
    }

    pub fn build_over<F: Field>(&self, field: F) -> Result<VerifyInput<F>, InputError> {
        let ring = PolyRing::new(field, self.vars.clone())?;
        let (module, implicit_pair) = match &self.module {
            ModuleSpec::Ideal(gens) => {
                let gens = parse_list(&ring, gens, "ideal")?;
                (ideal_quotient(&gens)?, Some(ideal_pair(&gens)))
            }
            ModuleSpec::IdealAsModule(gens) => {
                let gens = parse_list(&ring, gens, "ideal_as_module")?;
                let pair = ideal_pair(&gens);
                (pair.submodule(&ring)?, Some(pair))
            }
            ModuleSpec::Coker(spec) => (coker(&ring, spec, "module")?, None),
        };
        let pair = match (&self.ambient, &self.submodule) {
            (Some(amb), Some(sub)) => {
                let ambient = coker(&ring, amb, "ambient")?;
                let mut generators = Vec::with_capacity(sub.len());
                for (k, v) in sub.iter().enumerate() {
                    if v.len() != ambient.ngens() {
                        return Err(InputError::Invalid(format!(
                            "submodule generator {k} has {} entries, the ambient module has {} generators",
                            v.len(),
                            ambient.ngens()
                        )));
                    }
                    let polys = parse_list(&ring, v, &format!("submodule[{k}]"))?;
                    generators.push(Vector::from_polys(&polys));
                }
                let pair = SubmodulePair { ambient, generators };
                check_pair_homogeneous(&pair)?;
                Some(pair)
            }
            (None, None) => implicit_pair,
            _ => return Err(InputError::Invalid("\"ambient\" and \"submodule\" must be given together".into())),
        };
        Ok(VerifyInput { ring, module, pair })
    }

    pub fn options(&self) -> Result<VerifyOptions, InputError> {
        let mut opts = VerifyOptions::default();
        if let Some(c) = &self.caps {
            let caps = DiagonalVector::from_i64(&c.x, c.y).map_err(|e| InputError::Invalid(format!("caps: {e}")))?;
            opts.caps = Some(caps);
        }
        Ok(opts)
    }
}

impl FromStr for InputDocument {
    type Err = InputError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InputDocument::parse(s)
    }
}

fn parse_list<F: Field>(ring: &PolyRing<F>, items: &[String], context: &str) -> Result<Vec<Poly<F::Elem>>, InputError> {
    items
        .iter()
        .enumerate()
        .map(|(k, s)| {
            parse_polynomial(s, ring).map_err(|source| InputError::Parse { context: format!("{context}[{k}] {s:?}"), source })
        })
        .collect()
}

fn homogeneous_degrees<E: crate::kernel::Scalar>(gens: &[Poly<E>]) -> Result<Vec<(Poly<E>, i64)>, InputError> {
    let mut out = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if !g.is_homogeneous() {
            return Err(InputError::Invalid(format!("generator {k} is not homogeneous")));
        }
        out.push((g.clone(), g.degree().expect("nonzero")));
    }
    Ok(out)
}

fn ideal_quotient<E: crate::kernel::Scalar>(gens: &[Poly<E>]) -> Result<GradedPresentation<E>, InputError> {
    let gens = homogeneous_degrees(gens)?;
    let source = gens.iter().map(|g| g.1).collect();
    let row: Vec<Poly<E>> = gens.into_iter().map(|g| g.0).collect();
    Ok(GradedPresentation::new(GradedMatrix::from_entries(vec![0], source, &[row])?))
}

fn ideal_pair<E: crate::kernel::Scalar>(gens: &[Poly<E>]) -> SubmodulePair<E> {
    SubmodulePair {
        ambient: GradedPresentation::free(vec![0]),
        generators: gens.iter().filter(|g| !g.is_zero()).map(|g| Vector::from_polys(std::slice::from_ref(g))).collect(),
    }
}

fn coker<F: Field>(ring: &PolyRing<F>, spec: &CokerSpec, context: &str) -> Result<GradedPresentation<F::Elem>, InputError> {
    if spec.matrix.len() != spec.target_twists.len() {
        return Err(InputError::Invalid(format!(
            "{context}: matrix has {} rows but {} target twists",
            spec.matrix.len(),
            spec.target_twists.len()
        )));
    }
    let mut entries = Vec::with_capacity(spec.matrix.len());
    for (r, row) in spec.matrix.iter().enumerate() {
        if row.len() != spec.source_twists.len() {
            return Err(InputError::Invalid(format!(
                "{context}: row {r} has {} entries but there are {} source twists",
                row.len(),
                spec.source_twists.len()
            )));
        }
        entries.push(parse_list(ring, row, &format!("{context} row {r}"))?);
    }
    let m = GradedMatrix::from_entries(spec.target_twists.clone(), spec.source_twists.clone(), &entries)
        .map_err(|e| InputError::Invalid(format!("{context}: {e}")))?;
    Ok(GradedPresentation::new(m))
}

fn check_pair_homogeneous<E: crate::kernel::Scalar>(pair: &SubmodulePair<E>) -> Result<(), InputError> {
    let twists = pair.ambient.generator_twists();
    for (k, g) in pair.generators.iter().enumerate() {
        if !g.is_homogeneous(twists) {
            return Err(InputError::Invalid(format!("submodule generator {k} is not homogeneous")));
        }
    }
    Ok(())
}

fn parse_shorthand(t: &str) -> Result<InputDocument, InputError> {
    let bad = |why: &str| InputError::Invalid(format!("shorthand {t:?}: {why}; expected e.g. Q[x,y] (x^2, x*y)"));
    let open = t.find('[').ok_or_else(|| bad("missing '['"))?;
    let close = t[open..].find(']').map(|k| k + open).ok_or_else(|| bad("missing ']'"))?;
    let field = parse_field(t[..open].trim()).ok_or_else(|| bad("unknown field"))?;
    let vars: Vec<String> = t[open + 1..close].split(',').map(|v| v.trim().to_string()).collect();
    let rest = t[close + 1..].trim();
    let inner = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| bad("generators must be enclosed in parentheses"))?;
    let gens: Vec<String> = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner.split(',').map(|g| g.trim().to_string()).collect()
    };
    Ok(InputDocument {
        field,
        vars,
        module: ModuleSpec::Ideal(gens),
        ambient: None,
        submodule: None,
        caps: None,
    })
}

fn parse_field(s: &str) -> Option<FieldSpec> {
    if s == "Q" || s == "QQ" {
        return Some(FieldSpec::Q);
    }
    let p = s.strip_prefix("GF(")?.strip_suffix(')')?;
    p.trim().parse().ok().map(FieldSpec::GF)
}

/// Big integers as accepted on the command line.
pub fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim().parse().map_err(|_| format!("not an integer: {s:?}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Scalar;

    #[test]
    fn json_and_shorthand_agree() {
        let json = r#"{"field": "Q", "vars": ["x", "y"], "module": {"ideal": ["x^2", "x*y"]}}"#;
        let a = InputDocument::parse(json).unwrap();
        let b: InputDocument = "Q[x, y] (x^2, x*y)".parse().unwrap();
        assert_eq!(a, b);
        let gf = InputDocument::parse(r#"{"field": {"GF": 7}, "vars": ["x"], "module": {"ideal": ["x"]}}"#).unwrap();
        assert_eq!(gf.field, FieldSpec::GF(7));
        assert_eq!(InputDocument::parse("GF(7)[x] (x)").unwrap(), gf);
    }

    #[test]
    fn round_trip() {
        let mut doc = InputDocument::ideal(FieldSpec::GF(11), &["x", "y"], &["x*y"]);
        doc.ambient = Some(CokerSpec { target_twists: vec![0], source_twists: vec![], matrix: vec![vec![]] });
        doc.submodule = Some(vec![vec!["x".into()]]);
        doc.caps = Some(CapsSpec { x: vec![1, 0], y: 0 });
        assert_eq!(InputDocument::parse(&doc.to_json()).unwrap(), doc);
    }

    #[test]
    fn build_errors() {
        let nonhom = InputDocument::ideal(FieldSpec::Q, &["x", "y"], &["x^2 + y"]);
        assert!(matches!(nonhom.build(), Err(InputError::Invalid(m)) if m.contains("homogeneous")));
        let unknown = InputDocument::ideal(FieldSpec::Q, &["x", "y"], &["x + w"]);
        let msg = unknown.build().unwrap_err().to_string();
        assert!(msg.contains("'w'") && msg.contains("column 5"), "{msg}");
        let dup = InputDocument::ideal(FieldSpec::Q, &["x", "x"], &["x"]);
        assert!(dup.build().is_err());
        assert!(InputDocument::ideal(FieldSpec::GF(8), &["x"], &["x"]).build().is_err());
        assert!(InputDocument::parse(r#"{"field": "Q", "vars": ["x"], "module": {"ideal": []}, "extra": 1}"#).is_err());
        let shape = r#"{"field": "Q", "vars": ["x"], "module": {"coker": {"target_twists": [0], "source_twists": [1, 1], "matrix": [["x"]]}}}"#;
        assert!(InputDocument::parse(shape).unwrap().build().is_err());
        let half = r#"{"field": "Q", "vars": ["x"], "module": {"ideal": ["x"]}, "submodule": [["x"]]}"#;
        assert!(InputDocument::parse(half).unwrap().build().is_err());
    }

    #[test]
    fn ideal_inputs_carry_the_pair() {
        let doc = InputDocument::ideal(FieldSpec::Q, &["x", "y"], &["x^2", "0", "x*y"]);
        let AnyInput::Q(input) = doc.build().unwrap() else { panic!() };
        assert_eq!(input.module.relations().len(), 2);
        let pair = input.pair.unwrap();
        assert_eq!(pair.generators.len(), 2);
        assert!(pair.ambient.relations().is_empty());
    }

    #[test]
    fn coker_input() {
        let json = r#"{"field": {"GF": 5}, "vars": ["x", "y"],
            "module": {"coker": {"target_twists": [0, 1], "source_twists": [2], "matrix": [["x^2"], ["2*y"]]}}}"#;
        let AnyInput::GF(input) = InputDocument::parse(json).unwrap().build().unwrap() else { panic!() };
        assert_eq!(input.module.ngens(), 2);
        let c = input.module.relations()[0].component(1);
        assert!(c.terms()[0].1.add(&c.terms()[0].1).add(&c.terms()[0].1).is_one());
        assert!(input.pair.is_none());
    }
}
