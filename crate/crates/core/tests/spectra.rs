use hispec::hodge::Analysis;
use hispec::polycore::parse_polynomial;
use hispec::{Polynomial, Rational, WeightSystem};

struct Fixture {
    f: &'static str,
    vars: &'static [&'static str],
    weights: Option<&'static [(i64, i64)]>,
}

const FIXTURES: &[Fixture] = &[
    Fixture { f: "x^5+y^4+x^3*y^2", vars: &["x", "y"], weights: Some(&[(1, 5), (1, 4)]) },
    Fixture { f: "x^8+y^4+x^6*y^2", vars: &["x", "y"], weights: Some(&[(1, 8), (1, 4)]) },
    Fixture { f: "x^7+y^5+x^5*y^3", vars: &["x", "y"], weights: Some(&[(1, 7), (1, 5)]) },
    Fixture { f: "x^7+y^4+x^4*y^2", vars: &["x", "y"], weights: Some(&[(1, 7), (1, 4)]) },
    Fixture { f: "x^5+y^4+x^3*y^2+z^2", vars: &["x", "y", "z"], weights: Some(&[(1, 5), (1, 4), (1, 2)]) },
    Fixture { f: "x^3+y^4+z^5", vars: &["x", "y", "z"], weights: Some(&[(1, 3), (1, 4), (1, 5)]) },
    Fixture { f: "x^4+y^5+x^2*y^3", vars: &["x", "y"], weights: None },
    Fixture { f: "x^3*y+x*y^3", vars: &["x", "y"], weights: None },
    Fixture { f: "x^2*y+x*y^2+z^4", vars: &["x", "y", "z"], weights: None },
];

fn analyse(fx: &Fixture) -> (Polynomial, Analysis) {
    let v: Vec<String> = fx.vars.iter().map(|s| s.to_string()).collect();
    let f = parse_polynomial(fx.f, &v).unwrap();
    let w = fx
        .weights
        .map(|w| WeightSystem::new(w.iter().map(|&(a, b)| Rational::new(a, b)).collect()).unwrap());
    let an = Analysis::new(&f, w.as_ref()).unwrap();
    (f, an)
}

#[test]
fn steenbrink_spectrum_invariants() {
    for fx in FIXTURES {
        let (f, an) = analyse(fx);
        let sp = &an.steenbrink;
        assert_eq!(sp.total(), an.mu(), "{}", fx.f);
        assert!(sp.is_symmetric(), "{}", fx.f);
        assert!(sp.extremes_simple(), "{}", fx.f);
        let ma = &an.setup.ma;
        // The basis is filtration compatible, so V^β is spanned by basis classes of order ≥ β.
        for k in 0..ma.mu() {
            let beta = ma.basis_order(k).unwrap().clone();
            let g = Polynomial::monomial(ma.basis_monomial(k).clone());
            for (j, _) in ma.nf(&(&f * &g)) {
                let o = ma.basis_order(j as usize).unwrap();
                assert!(o >= &(&beta + &Rational::one()), "{}: f·V^{beta} hits order {o}", fx.f);
            }
        }
    }
}

#[test]
fn derived_spectra_invariants() {
    for fx in FIXTURES {
        let (_, an) = analyse(fx);
        assert_eq!(an.hi_spectrum().total(), an.mu(), "{}", fx.f);
        assert_eq!(an.tj_spectrum().total(), an.tau, "{}", fx.f);
        assert!(an.tj_spectrum().is_submultiset_of(&an.steenbrink), "{}", fx.f);
        assert!(an.tj_spectrum().is_submultiset_of(an.hi_spectrum()), "{}", fx.f);
        if an.tau == an.mu() {
            assert_eq!(an.hi_spectrum(), &an.steenbrink, "{}", fx.f);
        }
    }
}
