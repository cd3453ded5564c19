use crate::newton::groebner::{groebner_basis, is_unit, Outcome};
use crate::newton::lattice::{coordinates, hermite_basis};
use crate::newton::{Face, NewtonPolyhedron};
use crate::polycore::{Monomial, Polynomial, Rational};

/// Reduction budget per face.
pub const FACE_CAP: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    /// All compact faces whose logarithmic derivatives share a torus zero.
    No(Vec<Face>),
    Unknown(Face, String),
}

impl Verdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, Verdict::Yes)
    }
}

/// Restriction `f_σ` of `f` to the support points of a face.
pub fn face_polynomial(f: &Polynomial, face: &Face) -> Polynomial {
    let mut out = Polynomial::zero(f.n());
    for m in &face.points {
        out.add_term(m.clone(), &f.coeff(m));
    }
    out
}

/// Decides whether `{x_i ∂_i f_σ = 0}` has a zero in the torus.
///
/// Returns `Some(true)` if it has one (degenerate face), `None` past the cap.
pub fn face_is_degenerate(f_sigma: &Polynomial, cap: u64) -> Option<bool> {
    let n = f_sigma.n();
    let terms: Vec<(Monomial, Rational)> = f_sigma.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    if terms.len() <= 1 {
        return Some(false);
    }
    let p0: Vec<i64> = terms[0].0.exps().iter().map(|&e| e as i64).collect();
    let diffs: Vec<Vec<i64>> = terms
        .iter()
        .map(|(m, _)| m.exps().iter().zip(&p0).map(|(&a, b)| a as i64 - b).collect())
        .collect();
    let basis = hermite_basis(&diffs, n);
    let k = basis.len();
    let coords: Vec<Vec<i64>> = diffs
        .iter()
        .map(|d| coordinates(&basis, d).expect("generator outside its lattice"))
        .collect();
    // Shift so that every exponent of h(y) = Σ c_s y^{m_s} is nonnegative.
    let shift: Vec<i64> = (0..k).map(|j| coords.iter().map(|c| c[j]).min().unwrap()).collect();
    let p0s: Vec<Rational> = (0..n)
        .map(|i| {
            let s: i64 = (0..k).map(|j| shift[j] * basis[j][i]).sum();
            Rational::from(p0[i] + s)
        })
        .collect();
    // Variables y_1..y_k plus t for the saturation.
    let nv = k + 1;
    let mut h = Polynomial::zero(nv);
    for ((_, c), m) in terms.iter().zip(&coords) {
        let mut e: Vec<u32> = m.iter().zip(&shift).map(|(a, s)| (a - s) as u32).collect();
        e.push(0);
        h.add_term(Monomial::new(e), c);
    }
    let theta: Vec<Polynomial> = (0..k)
        .map(|j| h.d(j).mul_monomial(&Monomial::var(nv, j)))
        .collect();
    let mut gens = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut e = h.scale(&p0s[i]);
        for j in 0..k {
            e = &e + &theta[j].scale(&Rational::from(basis[j][i]));
        }
        if !e.is_zero() {
            gens.push(e);
        }
    }
    let sat = vec![1u32; nv];
    gens.push(&Polynomial::one(nv) - &Polynomial::monomial(Monomial::new(sat)));
    match groebner_basis(&gens, cap) {
        Outcome::Basis(b) => Some(!is_unit(&b)),
        Outcome::Capped => None,
    }
}

/// Non-degeneracy of the Newton boundary over all compact faces.
pub fn is_nondegenerate(f: &Polynomial) -> Verdict {
    let np = match NewtonPolyhedron::new(f) {
        Ok(np) => np,
        Err(_) => return Verdict::Yes,
    };
    is_nondegenerate_with(f, &np, FACE_CAP)
}

pub fn is_nondegenerate_with(f: &Polynomial, np: &NewtonPolyhedron, cap: u64) -> Verdict {
    let mut bad = Vec::new();
    for face in np.compact_faces() {
        if face.dim == 0 {
            continue;
        }
        match face_is_degenerate(&face_polynomial(f, &face), cap) {
            Some(true) => bad.push(face),
            Some(false) => {}
            None => return Verdict::Unknown(face, format!("more than {cap} reductions")),
        }
    }
    if bad.is_empty() {
        Verdict::Yes
    } else {
        Verdict::No(bad)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn p(s: &str, vars: &[&str]) -> Polynomial {
        let v: Vec<String> = vars.iter().map(|x| x.to_string()).collect();
        parse_polynomial(s, &v).unwrap()
    }

    #[test]
    fn brieskorn_pham_is_nondegenerate() {
        assert!(is_nondegenerate(&p("x^2+y^3", &["x", "y"])).is_yes());
        assert!(is_nondegenerate(&p("x^5+y^4+x^3*y^2", &["x", "y"])).is_yes());
    }

    #[test]
    fn square_of_binomial_is_degenerate() {
        assert!(!is_nondegenerate(&p("(x^2-y^3)^2+x^7", &["x", "y"])).is_yes());
        assert!(face_is_degenerate(&p("(x-y)^2", &["x", "y"]), 1000).unwrap());
        assert!(!face_is_degenerate(&p("x^2+y^2", &["x", "y"]), 1000).unwrap());
    }

    #[test]
    fn t544_degenerate_edge() {
        let f = p("(u^2-v^2)^2+z^5+4*u*v*z", &["u", "v", "z"]);
        let Verdict::No(faces) = is_nondegenerate(&f) else {
            panic!("expected degenerate")
        };
        assert_eq!(faces.len(), 1);
        let pts: Vec<Vec<u32>> = faces[0].points.iter().map(|m| m.exps().to_vec()).collect();
        assert_eq!(pts, vec![vec![0, 4, 0], vec![2, 2, 0], vec![4, 0, 0]]);
    }

    #[test]
    fn cyclic_chain_nondegenerate() {
        let f = p("x^3*y+y^3*z+z^3*x", &["x", "y", "z"]);
        assert!(is_nondegenerate(&f).is_yes());
        assert!(is_nondegenerate(&p("x^2*y+x*y^2", &["x", "y"])).is_yes());
    }
}
