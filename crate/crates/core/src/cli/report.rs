//! JSON, CSV and Markdown renderings of profiles and verification reports.
//!
//! Every integer is emitted exactly: JSON numbers carry arbitrary precision
//! and the sentinels become the strings `"-inf"` and `"+inf"`.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use super::input::InputDocument;
use crate::homology::CohomologyProfile;
use crate::kernel::Field;
use crate::verify::{BoundCheck, Outcome, Report};
use crate::{ExtBig, ExtInt, Extended};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Meta {
    pub field: String,
    pub wall_time_ms: Option<u128>,
}

impl Meta {
    fn to_json(&self) -> Value {
        json!({
            "field": self.field,
            "wall_time_ms": self.wall_time_ms.map(|t| Value::Number(Number::from_str(&t.to_string()).expect("integer"))),
        })
    }
}

pub fn big(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integers are valid JSON numbers"))
}

pub fn ext_big(v: &ExtBig) -> Value {
    match v {
        Extended::Finite(b) => big(b),
        other => Value::String(other.to_string()),
    }
}

pub fn ext_int(v: &ExtInt) -> Value {
    ext_big(&v.to_big())
}

fn opt_ext(v: &Option<ExtBig>) -> Value {
    v.as_ref().map_or(Value::Null, ext_big)
}

fn indexed<T>(items: &[T], f: impl Fn(&T) -> Value) -> Value {
    let mut m = Map::new();
    for (i, v) in items.iter().enumerate() {
        m.insert(i.to_string(), f(v));
    }
    Value::Object(m)
}

pub fn profile_json<F: Field>(p: &CohomologyProfile<F>) -> Value {
    let betti: Vec<Value> = p
        .module()
        .betti()
        .entries()
        .map(|(i, j, b)| json!({"i": i, "j": j, "beta": b}))
        .collect();
    let reg_deficiency: Vec<ExtInt> = p.deficiency_modules().iter().map(|k| k.regularity()).collect();
    json!({
        "nvars": p.nvars(),
        "dim": ext_int(&p.dim),
        "depth": ext_int(&p.depth),
        "beg": ext_int(&p.beg),
        "gendeg": ext_int(&p.gendeg),
        "reg": ext_int(&p.reg),
        "reg_k": indexed(&p.reg_k, ext_int),
        "a": indexed(&p.a, ext_int),
        "reg_deficiency": indexed(&reg_deficiency, ext_int),
        "diagonal": p.diagonal.iter().map(big).collect::<Vec<_>>(),
        "hilbert_poly": p.hilbert_poly.to_string(),
        "e": p.e.coeffs().iter().map(big).collect::<Vec<_>>(),
        "postulation": ext_int(&p.postulation),
        "nu": indexed(&p.nu, |v| json!({
            "definitional": ext_int(&v.definitional),
            "via_deficiency": ext_int(&v.via_deficiency),
        })),
        "betti": betti,
        "window": [p.window.0, p.window.1],
    })
}

/// One row per degree: the Hilbert function, `h^i(n)` for `i = 0..=n` and
/// `d^i(n)` for `i = 0..n`.
pub fn tables_json<F: Field>(p: &CohomologyProfile<F>, window: (i64, i64)) -> Value {
    let rows: Vec<Value> = (window.0..=window.1)
        .map(|n| {
            json!({
                "n": n,
                "hilbert_function": big(&p.hilbert_function(n)),
                "h": (0..=p.nvars()).map(|i| big(&p.h(i, n))).collect::<Vec<_>>(),
                "d": (0..p.nvars()).map(|i| big(&p.d(i, n))).collect::<Vec<_>>(),
            })
        })
        .collect();
    Value::Array(rows)
}

pub fn check_json(c: &BoundCheck) -> Value {
    let mut m = Map::new();
    m.insert("id".into(), c.id.clone().into());
    m.insert("ref".into(), c.statement.clone().into());
    m.insert("lhs_name".into(), c.lhs_name.clone().into());
    m.insert("lhs".into(), opt_ext(&c.lhs));
    m.insert("direction".into(), c.direction.symbol().into());
    m.insert("rhs_name".into(), c.rhs_name.clone().into());
    m.insert("rhs".into(), opt_ext(&c.rhs));
    m.insert("margin".into(), opt_ext(&c.margin()));
    match &c.outcome {
        Outcome::Skipped(why) => m.insert("skipped".into(), why.clone().into()),
        other => m.insert("pass".into(), (*other == Outcome::Pass).into()),
    };
    Value::Object(m)
}

fn filter_regular_json(fr: &Option<Result<String, String>>) -> Value {
    match fr {
        None => Value::Null,
        Some(Ok(form)) => json!({ "form": form }),
        Some(Err(why)) => json!({ "error": why }),
    }
}

pub fn verify_json<F: Field>(doc: &InputDocument, report: &Report<F>, meta: &Meta) -> Value {
    json!({
        "input": serde_json::to_value(doc).expect("documents serialize"),
        "profile": profile_json(&report.profile),
        "checks": report.checks.iter().map(check_json).collect::<Vec<_>>(),
        "filter_regular": filter_regular_json(&report.filter_regular),
        "meta": meta.to_json(),
    })
}

pub fn analyze_json<F: Field>(doc: &InputDocument, p: &CohomologyProfile<F>, window: (i64, i64), meta: &Meta) -> Value {
    json!({
        "input": serde_json::to_value(doc).expect("documents serialize"),
        "profile": profile_json(p),
        "tables": tables_json(p, window),
        "checks": [],
        "meta": meta.to_json(),
    })
}

fn cell(v: &Option<ExtBig>) -> String {
    v.as_ref().map_or(String::new(), ToString::to_string)
}

fn status(c: &BoundCheck) -> (&'static str, String) {
    match &c.outcome {
        Outcome::Pass => ("pass", String::new()),
        Outcome::Fail => ("FAIL", String::new()),
        Outcome::Skipped(why) => ("skipped", why.clone()),
    }
}

pub const VERIFY_CSV_HEADER: [&str; 11] =
    ["input", "id", "ref", "lhs_name", "lhs", "direction", "rhs_name", "rhs", "margin", "status", "reason"];

/// Check rows, optionally preceded by the header.
pub fn verify_csv(label: &str, checks: &[BoundCheck], header: bool) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    if header {
        w.write_record(VERIFY_CSV_HEADER).expect("in-memory write");
    }
    for c in checks {
        let (st, why) = status(c);
        w.write_record([
            label,
            &c.id,
            &c.statement,
            &c.lhs_name,
            &cell(&c.lhs),
            c.direction.symbol(),
            &c.rhs_name,
            &cell(&c.rhs),
            &cell(&c.margin()),
            st,
            &why,
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn analyze_csv<F: Field>(label: &str, p: &CohomologyProfile<F>, window: (i64, i64), header: bool) -> String {
    let n = p.nvars();
    let mut w = csv::Writer::from_writer(Vec::new());
    if header {
        let mut head = vec!["input".to_string(), "n".into(), "hilbert_function".into()];
        head.extend((0..=n).map(|i| format!("h{i}")));
        head.extend((0..n).map(|i| format!("d{i}")));
        w.write_record(&head).expect("in-memory write");
    }
    for deg in window.0..=window.1 {
        let mut row = vec![label.to_string(), deg.to_string(), p.hilbert_function(deg).to_string()];
        row.extend((0..=n).map(|i| p.h(i, deg).to_string()));
        row.extend((0..n).map(|i| p.d(i, deg).to_string()));
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

fn md_profile<F: Field>(out: &mut String, p: &CohomologyProfile<F>) {
    let n = p.nvars();
    out.push_str("| invariant | value |\n|---|---|\n");
    let rows = [
        ("dim", p.dim.to_string()),
        ("depth", p.depth.to_string()),
        ("beg", p.beg.to_string()),
        ("gendeg", p.gendeg.to_string()),
        ("reg", p.reg.to_string()),
        ("Hilbert polynomial", p.hilbert_poly.to_string()),
        ("postulation", p.postulation.to_string()),
        ("diagonal", format!("({})", p.diagonal.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "| {k} | {} |", md_escape(&v));
    }
    out.push_str("\n| i | a_i | reg^i | reg K^i |");
    out.push_str(if n > 0 { " nu^i |\n|---|---|---|---|---|\n" } else { "\n|---|---|---|---|\n" });
    for i in 0..=n {
        let nu = p.nu.get(i).map_or(String::new(), |v| format!(" {} |", v.definitional));
        let _ = writeln!(
            out,
            "| {i} | {} | {} | {} |{}",
            p.a[i],
            p.reg_from(i),
            p.deficiency(i).regularity(),
            if i < n { nu } else { " |".into() }
        );
    }
    out.push_str("\nBetti table:\n\n```\n");
    let _ = write!(out, "{}", p.module().betti());
    out.push_str("```\n");
}

pub fn verify_md<F: Field>(label: &str, report: &Report<F>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "## {label}\n");
    md_profile(&mut out, &report.profile);
    if let Some(fr) = &report.filter_regular {
        match fr {
            Ok(form) => {
                let _ = writeln!(out, "\nFilter-regular form: `{form}`");
            }
            Err(why) => {
                let _ = writeln!(out, "\nNo filter-regular form: {why}");
            }
        }
    }
    out.push_str("\n| id | statement | lhs | | rhs | margin | result |\n|---|---|---|---|---|---|---|\n");
    for c in &report.checks {
        let (st, why) = status(c);
        let result = if why.is_empty() { st.to_string() } else { format!("{st}: {why}") };
        let _ = writeln!(
            out,
            "| {} | {} | {} = {} | {} | {} = {} | {} | {} |",
            c.id,
            md_escape(&c.statement),
            md_escape(&c.lhs_name),
            cell(&c.lhs),
            c.direction.symbol(),
            md_escape(&c.rhs_name),
            cell(&c.rhs),
            cell(&c.margin()),
            md_escape(&result)
        );
    }
    let failed = report.failures().len();
    let _ = writeln!(out, "\n{} checks, {failed} failed", report.checks.len());
    out
}

pub fn analyze_md<F: Field>(label: &str, p: &CohomologyProfile<F>, window: (i64, i64)) -> String {
    let n = p.nvars();
    let mut out = String::new();
    let _ = writeln!(out, "## {label}\n");
    md_profile(&mut out, p);
    out.push_str("\n| n | HF |");
    for i in 0..=n {
        let _ = write!(out, " h^{i} |");
    }
    for i in 0..n {
        let _ = write!(out, " d^{i} |");
    }
    out.push_str("\n|");
    out.push_str(&"---|".repeat(2 * n + 3));
    out.push('\n');
    for deg in window.0..=window.1 {
        let _ = write!(out, "| {deg} | {} |", p.hilbert_function(deg));
        for i in 0..=n {
            let _ = write!(out, " {} |", p.h(i, deg));
        }
        for i in 0..n {
            let _ = write!(out, " {} |", p.d(i, deg));
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::Direction;

    #[test]
    fn exact_numbers_and_sentinels() {
        let huge: BigInt = "123456789012345678901234567890".parse().unwrap();
        assert_eq!(big(&huge).to_string(), "123456789012345678901234567890");
        assert_eq!(ext_int(&ExtInt::NegInf), Value::String("-inf".into()));
        assert_eq!(ext_int(&ExtInt::PosInf).to_string(), "\"+inf\"");
        assert_eq!(ext_int(&ExtInt::from(-2)).to_string(), "-2");
    }

    #[test]
    fn check_rows() {
        let c = BoundCheck::compare("t[i=1]", "s", "l", ExtInt::from(1).to_big(), Direction::AtMost, "r", ExtInt::from(1).to_big());
        assert_eq!(
            check_json(&c).to_string(),
            r#"{"id":"t[i=1]","ref":"s","lhs_name":"l","lhs":1,"direction":"<=","rhs_name":"r","rhs":1,"margin":0,"pass":true}"#
        );
        let s = BoundCheck::skipped("g", "s", "vacuous");
        let v = check_json(&s);
        assert_eq!(v["skipped"], "vacuous");
        assert!(v.get("pass").is_none());
        let csv = verify_csv("f", &[c, s], true);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.lines().nth(1).unwrap().ends_with(",pass,"));
    }
}
