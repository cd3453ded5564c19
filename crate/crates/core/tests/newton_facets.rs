use std::collections::BTreeSet;

use hispec::localalg::steenbrink_spectrum;
use hispec::newton::{convenientize, hull_facets, is_nondegenerate, support, LinearForm, NewtonPolyhedron};
use hispec::polycore::parse_polynomial;
use hispec::{Monomial, Polynomial, Rational};
use proptest::prelude::*;

fn p(s: &str, vars: &[&str]) -> Polynomial {
    let v: Vec<String> = vars.iter().map(|x| x.to_string()).collect();
    parse_polynomial(s, &v).unwrap()
}

fn key(l: &LinearForm) -> (Vec<Rational>, Rational) {
    (l.coeffs.clone(), l.constant.clone())
}

fn strict_hull(f: &Polynomial) -> BTreeSet<(Vec<Rational>, Rational)> {
    hull_facets(f.n(), &support(f).unwrap())
        .iter()
        .filter(|l| l.is_strict())
        .map(key)
        .collect()
}

/// `∏ (1 + γ x_i^{b_i})`.
fn h_b(n: usize, b: &[u32], gamma: &Rational) -> Polynomial {
    let mut h = Polynomial::one(n);
    for (i, &bi) in b.iter().enumerate() {
        let mut e = vec![0; n];
        e[i] = bi;
        let factor = &Polynomial::one(n) + &Polynomial::term(Monomial::new(e), gamma.clone());
        h = &h * &factor;
    }
    h
}

fn from_support(n: usize, pts: &[Vec<u32>], coeffs: &[i64]) -> Polynomial {
    let mut f = Polynomial::zero(n);
    for (e, &c) in pts.iter().zip(coeffs.iter().cycle()) {
        f.add_term(Monomial::new(e.clone()), &Rational::from(c));
    }
    f
}

fn check_lemma(f: &Polynomial, b: &[u32], gamma: &Rational) -> Result<(), TestCaseError> {
    let np = NewtonPolyhedron::new(f).unwrap();
    let plus: BTreeSet<_> = np.strict_facets().iter().map(key).collect();
    let own = strict_hull(f);
    let hf = &h_b(f.n(), b, gamma) * f;
    let twisted = strict_hull(&hf);
    prop_assert_eq!(&own, &plus);
    prop_assert_eq!(&twisted, &plus);
    Ok(())
}

fn small_support() -> impl Strategy<Value = (usize, Vec<Vec<u32>>)> {
    (2usize..=3).prop_flat_map(|n| (Just(n), prop::collection::vec(prop::collection::vec(0u32..6, n), n + 1..n + 5)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn strictly_positive_facets_agree(
        (n, pts) in small_support(),
        b in prop::collection::vec(1u32..5, 3),
        coeffs in prop::collection::vec(1i64..5, 1..4),
        g in (1i64..40, 1i64..40),
    ) {
        let f = from_support(n, &pts, &coeffs);
        prop_assume!(f.order().is_some_and(|o| o >= 1));
        check_lemma(&f, &b[..n], &Rational::new(17, 13))?;
        check_lemma(&f, &b[..n], &Rational::new(g.0, g.1))?;
    }
}

#[test]
fn lemma_on_named_germs() {
    for (s, vars) in [
        ("x^2*y+x*y^2", &["x", "y"][..]),
        ("x^5+y^4+x^3*y^2", &["x", "y"]),
        ("x^3*y+y^3*z+z^3*x", &["x", "y", "z"]),
        ("u^4-2*u^2*v^2+v^4+z^5+4*u*v*z", &["u", "v", "z"]),
    ] {
        let f = p(s, vars);
        let b = vec![3; f.n()];
        check_lemma(&f, &b, &Rational::new(17, 13)).unwrap();
    }
}

#[test]
fn convenientized_germs_are_nondegenerate() {
    for (s, vars) in [("x^3*y+x*y^3", &["x", "y"][..]), ("x^3*y+y^3*z+z^3*x", &["x", "y", "z"])] {
        let f = p(s, vars);
        let conv = convenientize(&f, 8).unwrap();
        assert_eq!(conv.added.len(), f.n());
        for c in [Rational::one(), Rational::new(5, 7), Rational::new(-19, 3)] {
            let g = conv.build(&c);
            assert!(NewtonPolyhedron::new(&g).unwrap().is_convenient());
            assert!(is_nondegenerate(&g).is_yes(), "{g} with c = {c}");
        }
    }
}

#[test]
fn newton_spectrum_survives_convenientization() {
    for (s, vars, m) in [
        ("x^3*y+x*y^3", &["x", "y"][..], 8),
        ("x^2*y+x*y^2", &["x", "y"], 6),
        ("x^3*y+y^3*z+z^3*x", &["x", "y", "z"], 12),
    ] {
        let f = p(s, vars);
        assert!(!NewtonPolyhedron::new(&f).unwrap().is_convenient());
        assert!(is_nondegenerate(&f).is_yes());
        let sp = steenbrink_spectrum(&f, None).unwrap();
        let conv = convenientize(&f, m).unwrap();
        for c in [Rational::one(), Rational::new(3, 2)] {
            assert_eq!(steenbrink_spectrum(&conv.build(&c), None).unwrap(), sp, "{s}");
        }
    }
}
