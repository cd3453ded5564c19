use crate::error::{Error, Result};
use crate::newton::dense::rank;
use crate::newton::nondegenerate::{is_nondegenerate_with, Verdict, FACE_CAP};
use crate::newton::NewtonPolyhedron;
use crate::polycore::{Monomial, Polynomial, Rational};

/// Width of the exponent search window per axis.
pub const SEARCH_WINDOW: u32 = 64;

/// Axis terms `x_i^{a_i}` to add to a non-convenient germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convenientization {
    pub f: Polynomial,
    /// `(i, a_i)` for every axis that had no support point.
    pub added: Vec<(usize, u32)>,
}

impl Convenientization {
    /// `f + c Σ x_i^{a_i}` over the added axes.
    pub fn build(&self, c: &Rational) -> Polynomial {
        let n = self.f.n();
        let mut out = self.f.clone();
        for &(i, a) in &self.added {
            let mut e = vec![0; n];
            e[i] = a;
            out.add_term(Monomial::new(e), c);
        }
        out
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.added.iter().map(|&(_, a)| a).collect()
    }
}

fn axis_point(n: usize, i: usize, a: u32) -> Monomial {
    let mut e = vec![0; n];
    e[i] = a;
    Monomial::new(e)
}

fn to_q(ms: &[Monomial]) -> Vec<Vec<Rational>> {
    ms.iter()
        .map(|m| m.exps().iter().map(|&e| Rational::from(e)).collect())
        .collect()
}

/// Every new compact face is `conv(τ ∪ {a e_i})` with `τ` a face of the old
/// polyhedron and `e_i` outside the span of `τ`.
fn faces_extend(old: &NewtonPolyhedron, new: &NewtonPolyhedron, pt: &Monomial, i: usize) -> bool {
    let old_faces = old.faces();
    let n = old.n();
    new.compact_faces().into_iter().filter(|f| f.points.contains(pt)).all(|face| {
        let tau: Vec<Monomial> = face.points.iter().filter(|m| *m != pt).cloned().collect();
        if tau.is_empty() {
            return true;
        }
        if !old_faces.iter().any(|g| g.points == tau) {
            return false;
        }
        let mut with = to_q(&tau);
        let r = rank(&with);
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        with.push(e);
        rank(&with) > r
    })
}

/// Adds `x_i^{a_i}` with `a_i ≥ m` on each missing axis, one axis at a time,
/// keeping the Newton boundary non-degenerate.
pub fn convenientize(f: &Polynomial, m: u32) -> Result<Convenientization> {
    if m == 0 {
        return Err(Error::InvalidArgument("m must be at least 1".into()));
    }
    let n = f.n();
    let np = NewtonPolyhedron::new(f)?;
    match is_nondegenerate_with(f, &np, FACE_CAP) {
        Verdict::Yes => {}
        Verdict::No(_) => return Err(Error::Degenerate("input has a degenerate compact face".into())),
        Verdict::Unknown(_, why) => return Err(Error::CapExceeded(why)),
    }
    let mut out = Convenientization {
        f: f.clone(),
        added: Vec::new(),
    };
    let missing: Vec<usize> = (0..n)
        .filter(|&i| {
            !f.terms()
                .any(|(mm, _)| mm.exps().iter().enumerate().all(|(j, &e)| (j == i) == (e > 0)))
        })
        .collect();
    let mut cur_np = np;
    for (slot, &i) in missing.iter().enumerate() {
        let mut found = None;
        // Offsetting by the slot keeps the added exponents pairwise distinct.
        for a in (m + slot as u32)..=(m + SEARCH_WINDOW) {
            if out.added.iter().any(|&(_, b)| b == a) {
                continue;
            }
            let pt = axis_point(n, i, a);
            let mut trial = out.build(&Rational::one());
            trial.add_term(pt.clone(), &Rational::one());
            let trial_np = NewtonPolyhedron::new(&trial)?;
            if !faces_extend(&cur_np, &trial_np, &pt, i) {
                continue;
            }
            if is_nondegenerate_with(&trial, &trial_np, FACE_CAP).is_yes() {
                found = Some((a, trial_np));
                break;
            }
        }
        let Some((a, np2)) = found else {
            return Err(Error::CapExceeded(format!(
                "no exponent in [{}, {}] for axis {}",
                m,
                m + SEARCH_WINDOW,
                i + 1
            )));
        };
        out.added.push((i, a));
        cur_np = np2;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::nondegenerate::is_nondegenerate;
    use crate::polycore::parse_polynomial;

    fn p(s: &str, vars: &[&str]) -> Polynomial {
        let v: Vec<String> = vars.iter().map(|x| x.to_string()).collect();
        parse_polynomial(s, &v).unwrap()
    }

    #[test]
    fn convenient_input_unchanged() {
        let f = p("x^2+y^3", &["x", "y"]);
        let c = convenientize(&f, 4).unwrap();
        assert!(c.added.is_empty());
        assert_eq!(c.build(&Rational::one()), f);
    }

    #[test]
    fn binary_cubic() {
        let f = p("x^2*y+x*y^2", &["x", "y"]);
        let c = convenientize(&f, 4).unwrap();
        assert_eq!(c.added.len(), 2);
        assert!(c.exponents().iter().all(|&a| a >= 4));
        for cc in [Rational::one(), Rational::new(-3, 7), Rational::new(11, 5)] {
            let g = c.build(&cc);
            assert!(NewtonPolyhedron::new(&g).unwrap().is_convenient());
            assert!(is_nondegenerate(&g).is_yes());
        }
    }

    #[test]
    fn cyclic_chain() {
        let f = p("x^2*y+y^2*z+z^2*x", &["x", "y", "z"]);
        let c = convenientize(&f, 3).unwrap();
        let g = c.build(&Rational::one());
        assert!(NewtonPolyhedron::new(&g).unwrap().is_convenient());
        assert!(is_nondegenerate(&g).is_yes());
    }

    #[test]
    fn degenerate_input_rejected() {
        let f = p("(x-y)^2*x*y", &["x", "y"]);
        assert!(matches!(convenientize(&f, 4), Err(Error::Degenerate(_))));
    }
}
