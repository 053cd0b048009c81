mod common;

use cmreg::cli::AnyInput;
use cmreg::homology::{free_resolution, GradedModule};
use cmreg::kernel::{torsion_submodule, Field};
use cmreg::verify::{CheckGroup, VerifyInput};
use cmreg::ExtInt;

use common::*;

#[test]
fn corpus_failures_are_exactly_the_known_counterexamples() {
    let mut seen_known = 0;
    for f in corpus_files() {
        let name = stem(&f);
        let out = run_checks(&load(&f), &CheckGroup::ALL);
        let mut got = failures(&out.checks);
        got.sort();
        let mut want = known_failures(&name);
        want.sort();
        assert_eq!(got, want, "{name}");
        seen_known += usize::from(!want.is_empty());
    }
    assert_eq!(seen_known, KNOWN_FAILURES.len(), "a known-failure entry names a missing file");
}

#[test]
fn every_enabled_group_reports() {
    let doc = load(&fixtures_dir().join("fixtureA.json"));
    let out = run_checks(&doc, &CheckGroup::ALL);
    for g in CheckGroup::ALL {
        let prefix = g.id();
        assert!(
            out.checks.iter().any(|c| c.id == prefix || c.id.starts_with(&format!("{prefix}["))),
            "no record for {prefix}"
        );
    }
    let ids: std::collections::HashSet<&str> = out.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids.len(), out.checks.len(), "duplicate check ids");
}

#[test]
fn corpus_covers_the_required_shapes() {
    let files = corpus_files();
    assert!(files.len() >= 10);
    let mut finite_length = false;
    let mut unsaturated = false;
    let mut saturated = false;
    for f in &files {
        let doc = load(f);
        let out = run_checks(&doc, &[CheckGroup::Duality]);
        assert!(out.nvars <= 4, "{}", stem(f));
        if out.dim == ExtInt::Finite(0) {
            finite_length = true;
        }
        let has_torsion = match doc.build().unwrap() {
            AnyInput::Q(i) => torsion_length(&i) > 0,
            AnyInput::GF(i) => torsion_length(&i) > 0,
        };
        let positive_dim = matches!(out.dim, ExtInt::Finite(d) if d > 0);
        unsaturated |= positive_dim && has_torsion;
        saturated |= positive_dim && !has_torsion;
    }
    assert!(finite_length && unsaturated && saturated);
}

/// Total length of the `R_+`-torsion; asserts it is finite.
fn torsion_length<F: Field>(input: &VerifyInput<F>) -> u64 {
    let tors = torsion_submodule(&input.ring, &input.module).unwrap();
    let m = GradedModule::new(&input.ring, &tors).unwrap();
    assert!(m.dim() <= ExtInt::Finite(0), "torsion of positive dimension");
    (-10..=20).map(|n| m.hilbert_function_by_basis(n)).sum()
}

fn resolution_is_minimal<F: Field>(input: &VerifyInput<F>) {
    let res = free_resolution(&input.ring, &input.module).unwrap();
    let maps = res.maps();
    assert!(maps.len() <= input.ring.nvars());
    for pair in maps.windows(2) {
        assert!(pair[0].compose(&pair[1]).is_zero());
    }
    for m in maps {
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                let e = m.entry(r, c);
                assert!(e.is_zero() || e.degree().unwrap() > 0, "unit entry in a differential");
            }
        }
    }
}

#[test]
fn resolutions_are_minimal_complexes() {
    for f in corpus_files() {
        match load(&f).build().unwrap() {
            AnyInput::Q(i) => resolution_is_minimal(&i),
            AnyInput::GF(i) => resolution_is_minimal(&i),
        }
    }
}

#[test]
fn torsion_always_has_finite_length() {
    for f in corpus_files() {
        match load(&f).build().unwrap() {
            AnyInput::Q(i) => torsion_length(&i),
            AnyInput::GF(i) => torsion_length(&i),
        };
    }
}
