//! Property tests for the bounding functions, the Gröbner engine, the
//! cohomology profile and the polynomial parser.

mod common;

use cmreg::bounds::{
    diagonal_cohomology_bound, eval_f, eval_f_traced, hilbert_poly_of_coeffs, lemma33_bound, trunc_binomial,
    DiagonalVector, HilbertCoefficients,
};
use cmreg::cli::{parse_polynomial, AnyInput, FieldSpec, InputDocument};
use cmreg::homology::CohomologyProfile;
use cmreg::kernel::{
    contained_in, groebner_basis, normal_form, syzygy_kernel, GradedMatrix, Monomial, Poly, PolyRing, Rationals,
    Vector,
};
use cmreg::verify::CheckGroup;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use common::*;

const VARS: [&str; 4] = ["x", "y", "z", "w"];

fn f(i: usize, x: &[i64], y: i64) -> BigInt {
    eval_f(i as i64, &DiagonalVector::from_i64(x, y).unwrap()).unwrap()
}

fn big(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&a| BigInt::from(a)).collect()
}

fn caps_and_index() -> impl Strategy<Value = (Vec<i64>, i64, usize)> {
    (1usize..=5)
        .prop_flat_map(|d| (prop::collection::vec(0i64..=6, d), -6i64..=6, 0..=d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn f_agrees_with_unmemoized_recursion((x, y, i) in caps_and_index()) {
        prop_assert_eq!(f(i, &x, y), naive_f(i, &x, y));
    }

    #[test]
    fn f_is_monotone((x, y, i) in caps_and_index(), bumps in prop::collection::vec(0i64..=3, 5), dy in 0i64..=3) {
        let raised: Vec<i64> = x.iter().zip(&bumps).map(|(a, b)| a + b).collect();
        prop_assert!(f(i, &x, y) <= f(i, &raised, y - dy));
    }

    #[test]
    fn zero_padding_never_lowers_f((x, y, i) in caps_and_index(), extra in 0usize..=2) {
        let mut padded = x.clone();
        padded.resize(x.len() + extra, 0);
        prop_assert!(f(i, &x, y) <= f(i, &padded, y));
    }

    #[test]
    fn trace_steps_stay_above_the_index(x in prop::collection::vec(0i64..=6, 3..=5), y in -6i64..=6) {
        let d = x.len() as i64;
        let (_, trace) = eval_f_traced(d, &DiagonalVector::from_i64(&x, y).unwrap()).unwrap();
        prop_assert!(!trace.steps.is_empty());
        for s in &trace.steps {
            prop_assert!(s.m >= BigInt::from(s.i) && s.t >= BigInt::from(s.i));
            prop_assert!(s.i >= 2 && s.i < s.d && s.d >= 3);
        }
    }

    #[test]
    fn binomials_match_falling_factorials(a in -20i64..80, b in -3i64..12) {
        prop_assert_eq!(trunc_binomial(&BigInt::from(a), &BigInt::from(b)), naive_binomial(a, b));
    }

    #[test]
    fn hilbert_polynomial_degree_law(e in prop::collection::vec(-3i64..=3, 1..=4)) {
        prop_assume!(e.iter().any(|&v| v != 0));
        let first = e.iter().position(|&v| v != 0).unwrap();
        let coeffs = HilbertCoefficients::from_i64(&e);
        let p = hilbert_poly_of_coeffs(&coeffs);
        prop_assert_eq!(p.degree(), Some(e.len() - 1 - first));
        prop_assert_eq!(HilbertCoefficients::from_poly(&p, e.len()).unwrap(), coeffs);
    }

    #[test]
    fn cohomology_caps_are_monotone_and_nonnegative(
        x in prop::collection::vec(0i64..=5, 1..=4),
        k in 0usize..4,
        n in 0i64..8,
    ) {
        let i = (x.len() - 1) as i64;
        let mut raised = x.clone();
        raised[k % x.len()] += 1;
        let (xs, rs) = (big(&x), big(&raised));
        let lemma = lemma33_bound(i, i + n, &xs).unwrap();
        prop_assert!(lemma >= BigInt::from(0));
        prop_assert!(lemma <= lemma33_bound(i, i + n, &rs).unwrap());
        let diag = diagonal_cohomology_bound(i, -i - n, &xs).unwrap();
        prop_assert!(diag >= BigInt::from(0));
        prop_assert!(diag <= diagonal_cohomology_bound(i, -i - n, &rs).unwrap());
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

fn ring(n: usize) -> PolyRing<Rationals> {
    PolyRing::new(Rationals, VARS[..n].iter().map(|s| s.to_string()).collect()).unwrap()
}

fn homogeneous(nvars: usize, deg: i64, coeffs: &[i64]) -> Poly<BigRational> {
    let terms = Monomial::all_of_degree(nvars, deg)
        .into_iter()
        .zip(coeffs.iter().cycle())
        .filter(|(_, &c)| c != 0)
        .map(|(m, &c)| (m, q(c)))
        .collect();
    Poly::from_terms(terms)
}

/// Up to three homogeneous generators in two or three variables.
fn ideal_gens() -> impl Strategy<Value = (usize, Vec<Poly<BigRational>>)> {
    (2usize..=3).prop_flat_map(|n| {
        let gen = (1i64..=3, prop::collection::vec(-2i64..=2, 1..=10)).prop_map(move |(d, c)| homogeneous(n, d, &c));
        (Just(n), prop::collection::vec(gen, 1..=3))
    })
}

fn rank_one(gens: &[Poly<BigRational>]) -> Vec<Vector<BigRational>> {
    gens.iter().filter(|g| !g.is_zero()).map(|g| Vector::from_polys(std::slice::from_ref(g))).collect()
}

fn exps() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (2usize..=3).prop_flat_map(|n| {
        let mono = prop::collection::vec(0u32..=3, n).prop_filter("positive degree", |e| e.iter().sum::<u32>() > 0);
        (Just(n), prop::collection::vec(mono, 1..=4))
    })
}

fn monomial_text(e: &[u32]) -> String {
    let parts: Vec<String> = e
        .iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(v, &k)| if k == 1 { VARS[v].to_string() } else { format!("{}^{k}", VARS[v]) })
        .collect();
    parts.join("*")
}

fn monomial_doc(n: usize, gens: &[Vec<u32>]) -> InputDocument {
    let texts: Vec<String> = gens.iter().map(|e| monomial_text(e)).collect();
    let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
    InputDocument::ideal(FieldSpec::Q, &VARS[..n], &refs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn normal_form_is_idempotent_and_linear(
        (n, gens) in ideal_gens(),
        a in prop::collection::vec(-3i64..=3, 1..=10),
        b in prop::collection::vec(-3i64..=3, 1..=10),
        deg in 1i64..=3,
        c in -3i64..=3,
    ) {
        let gens = rank_one(&gens);
        prop_assume!(!gens.is_empty());
        let gb = groebner_basis(&Rationals, &[0], &gens).unwrap();
        prop_assert!(contained_in(&gens, &gb));
        let fa = Vector::from_polys(&[homogeneous(n, deg, &a)]);
        let fb = Vector::from_polys(&[homogeneous(n, deg, &b)]);
        let na = normal_form(&fa, &gb, &[0]).unwrap();
        let nb = normal_form(&fb, &gb, &[0]).unwrap();
        prop_assert_eq!(normal_form(&na, &gb, &[0]).unwrap(), na.clone());
        prop_assert_eq!(normal_form(&fa.add(&fb), &gb, &[0]).unwrap(), na.add(&nb));
        prop_assert_eq!(normal_form(&fa.scale(&q(c)), &gb, &[0]).unwrap(), na.scale(&q(c)));
        prop_assert!(contained_in(&[fa.sub(&na)], &gb));
    }

    #[test]
    fn groebner_basis_ignores_generator_order((_, gens) in ideal_gens()) {
        let gens = rank_one(&gens);
        let mut reversed = gens.clone();
        reversed.reverse();
        prop_assert_eq!(
            groebner_basis(&Rationals, &[0], &gens).unwrap(),
            groebner_basis(&Rationals, &[0], &reversed).unwrap()
        );
    }

    #[test]
    fn syzygies_compose_to_zero((n, gens) in ideal_gens()) {
        let gens: Vec<Poly<BigRational>> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        prop_assume!(!gens.is_empty());
        let degs = gens.iter().map(|g| g.degree().unwrap()).collect();
        let m = GradedMatrix::from_entries(vec![0], degs, &[gens]).unwrap();
        let syz = syzygy_kernel(&Rationals, n, &m).unwrap();
        prop_assert!(m.compose(&syz).is_zero());
    }

    #[test]
    fn parser_reads_back_what_it_prints((n, gens) in ideal_gens()) {
        let r = ring(n);
        for g in &gens {
            let text = r.fmt_poly(g);
            prop_assert_eq!(&parse_polynomial(&text, &r).unwrap(), g, "{}", text);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn monomial_hilbert_function_matches_brute_force((n, gens) in exps()) {
        let AnyInput::Q(input) = monomial_doc(n, &gens).build().unwrap() else { unreachable!() };
        let profile = CohomologyProfile::new(&input.ring, &input.module).unwrap();
        for deg in -1..=8 {
            let want = monomial_quotient_count(n, &gens, deg);
            prop_assert_eq!(profile.hilbert_function(deg), BigInt::from(want), "degree {}", deg);
            prop_assert_eq!(profile.module().hilbert_function_by_basis(deg), want);
        }
    }

    #[test]
    fn monomial_quotients_satisfy_the_structural_identities((n, gens) in exps()) {
        let groups = [
            CheckGroup::Serre,
            CheckGroup::Duality,
            CheckGroup::Gendeg,
            CheckGroup::RegRoutes,
            CheckGroup::Qdeg,
            CheckGroup::Lemma31,
            CheckGroup::Thm36,
            CheckGroup::Thm42,
            CheckGroup::Thm53,
            CheckGroup::Diag,
            CheckGroup::Lemma33,
        ];
        let out = run_checks(&monomial_doc(n, &gens), &groups);
        prop_assert!(failures(&out.checks).is_empty(), "{:?}", failures(&out.checks));
        for (i, deg, value, bound) in &out.diagonal_points {
            prop_assert!(value <= bound, "d^{}({}) = {} > {}", i, deg, value, bound);
        }
    }
}
