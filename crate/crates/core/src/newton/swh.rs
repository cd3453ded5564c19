use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::newton::groebner::{groebner_basis, is_unit, Outcome};
use crate::polycore::{Monomial, Polynomial, Rational, WeightSystem};

/// Split `f = f_1 + f_{>1}` by weighted degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwhStructure {
    pub f1: Polynomial,
    pub f_gt1: Polynomial,
    /// Monomials of weighted degree `< 1`.
    pub below: Vec<Monomial>,
    pub is_swh: bool,
}

/// Whether the weighted homogeneous `g` has an isolated critical point.
///
/// The Jacobian ideal is quasi-homogeneous, so it is `𝔪`-primary exactly when
/// it is zero-dimensional, which a global Gröbner basis decides.
fn weighted_homogeneous_isolated(g: &Polynomial) -> Result<bool> {
    let n = g.n();
    let partials: Vec<Polynomial> = (0..n).map(|i| g.d(i)).filter(|p| !p.is_zero()).collect();
    if partials.len() < n {
        return Ok(false);
    }
    match groebner_basis(&partials, 1_000_000) {
        Outcome::Capped => Err(Error::CapExceeded("Gröbner basis of the weight-one part".into())),
        Outcome::Basis(b) => {
            if is_unit(&b) {
                return Ok(false);
            }
            // Zero-dimensional iff each variable has a pure power among leading monomials.
            Ok((0..n).all(|i| {
                b.iter().any(|p| {
                    let m = p.leading().unwrap().0.exps();
                    m.iter().enumerate().all(|(j, &e)| (j == i) == (e > 0))
                })
            }))
        }
    }
}

pub fn swh_structure(f: &Polynomial, w: &WeightSystem) -> Result<SwhStructure> {
    if w.n() != f.n() {
        return Err(Error::VariableMismatch {
            expected: f.n(),
            got: w.n(),
        });
    }
    let n = f.n();
    let one = Rational::one();
    let mut f1 = Polynomial::zero(n);
    let mut f_gt1 = Polynomial::zero(n);
    let mut below = Vec::new();
    for (m, c) in f.terms() {
        match w.weighted_degree(m.exps()).cmp(&one) {
            Ordering::Less => below.push(m.clone()),
            Ordering::Equal => f1.add_term(m.clone(), c),
            Ordering::Greater => f_gt1.add_term(m.clone(), c),
        }
    }
    let is_swh = below.is_empty() && !f1.is_zero() && weighted_homogeneous_isolated(&f1)?;
    Ok(SwhStructure {
        f1,
        f_gt1,
        below,
        is_swh,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn p(s: &str, vars: &[&str]) -> Polynomial {
        let v: Vec<String> = vars.iter().map(|x| x.to_string()).collect();
        parse_polynomial(s, &v).unwrap()
    }

    fn ws(w: &[(i64, i64)]) -> WeightSystem {
        WeightSystem::new(w.iter().map(|&(a, b)| Rational::new(a, b)).collect()).unwrap()
    }

    #[test]
    fn two_variable_family() {
        let s = swh_structure(&p("x^5+y^4+x^3*y^2", &["x", "y"]), &ws(&[(1, 5), (1, 4)])).unwrap();
        assert_eq!(s.f1, p("x^5+y^4", &["x", "y"]));
        assert_eq!(s.f_gt1, p("x^3*y^2", &["x", "y"]));
        assert!(s.is_swh);
    }

    #[test]
    fn three_variable_example() {
        let vars = ["x", "y", "z"];
        let f = p("x^9+y^10+z^11+(x+y)*x^3*y^3*z^3", &vars);
        let w = ws(&[(1, 9), (1, 10), (1, 11)]);
        let s = swh_structure(&f, &w).unwrap();
        assert!(s.is_swh);
        assert_eq!(w.weighted_degree(&[3, 4, 3]), Rational::new(166, 165));
        assert_eq!(s.f_gt1.len(), 2);
    }

    #[test]
    fn homogeneous_and_failures() {
        let s = swh_structure(&p("x^3+y^3", &["x", "y"]), &ws(&[(1, 3), (1, 3)])).unwrap();
        assert!(s.is_swh && s.f_gt1.is_zero());
        let s = swh_structure(&p("x^2+y^3", &["x", "y"]), &ws(&[(1, 3), (1, 3)])).unwrap();
        assert!(!s.is_swh);
        assert_eq!(s.below.len(), 1);
        // x^2 y^2 is weighted homogeneous but not isolated.
        let s = swh_structure(&p("x^2*y^2", &["x", "y"]), &ws(&[(1, 4), (1, 4)])).unwrap();
        assert!(!s.is_swh);
    }
}
