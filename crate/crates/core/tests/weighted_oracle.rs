use hispec::hodge::Analysis;
use hispec::localalg::filtered_quotient_dims;
use hispec::newton::{FiltrationOrder, NewtonPolyhedron};
use hispec::polycore::spectrum_product_formula;
use hispec::{Error, Monomial, Polynomial, Rational, WeightSystem};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const CASES: usize = 60;

/// Brieskorn-Pham or chain core `x_0^{a_0} x_1 + …`, plus random weight-one terms.
fn random_germ(rng: &mut StdRng) -> (Polynomial, WeightSystem) {
    let n = rng.gen_range(1..=3);
    let a: Vec<u32> = (0..n).map(|_| rng.gen_range(2..=6)).collect();
    let chain = n >= 2 && rng.gen_bool(0.4);
    let mut f = Polynomial::zero(n);
    let mut w = vec![Rational::zero(); n];
    // Chain x_0^{a_0} + x_0 x_1^{a_1} + x_1 x_2^{a_2}: weights solved left to right.
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = a[i];
        let mut rest = Rational::one();
        if chain && i > 0 {
            e[i - 1] = 1;
            rest = &rest - &w[i - 1];
        }
        w[i] = &rest / &Rational::from(a[i]);
        f.add_term(Monomial::new(e), &Rational::from(rng.gen_range(1..=3)));
    }
    let ws = WeightSystem::new(w).unwrap();
    // Every monomial of weight one, so the sum stays quasi-homogeneous.
    for d in 2..=12 {
        for m in Monomial::of_degree(n, d) {
            if ws.weighted_degree(m.exps()) == Rational::one() && f.coeff(&m).is_zero() && rng.gen_bool(0.5) {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    f.add_term(m, &Rational::new(c, rng.gen_range(1..=4)));
                }
            }
        }
    }
    (f, ws)
}

#[test]
fn product_formula_matches_filtered_quotient() {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut done = 0;
    let mut attempts = 0;
    while done < CASES {
        attempts += 1;
        assert!(attempts < 2000, "only {done} usable germs");
        let (f, w) = random_germ(&mut rng);
        let formula = spectrum_product_formula(&w).unwrap();
        if formula.total() > 40 {
            continue;
        }
        let order = FiltrationOrder::weight(w.clone());
        let dims = match filtered_quotient_dims(&f, &order, false) {
            Ok(d) => d,
            Err(Error::NonIsolated { .. }) => continue,
            Err(e) => panic!("{f}: {e}"),
        };
        assert_eq!(dims, formula, "{f}");
        let an = Analysis::new(&f, Some(&w)).unwrap();
        assert_eq!(an.tau, an.mu(), "{f}");
        assert_eq!(an.steenbrink, formula, "{f}");
        assert_eq!(an.hi_spectrum(), &formula, "{f}");
        assert_eq!(an.tj_spectrum(), &formula, "{f}");
        done += 1;
    }
}

#[test]
fn newton_order_is_weight_order_on_convenient_germs() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut done = 0;
    while done < 30 {
        let (f, w) = random_germ(&mut rng);
        let np = NewtonPolyhedron::new(&f).unwrap();
        if !np.is_convenient() {
            continue;
        }
        let by_weight = FiltrationOrder::weight(w.clone());
        let by_newton = FiltrationOrder::newton(np).unwrap();
        for m in Monomial::below_degree(f.n(), 8) {
            assert_eq!(by_weight.of_monomial(&m), by_newton.of_monomial(&m), "{f} at {m:?}");
        }
        done += 1;
    }
}
