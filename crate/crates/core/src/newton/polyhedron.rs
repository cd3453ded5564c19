use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::newton::dense::{affine_dim, nullspace, rank};
use crate::polycore::{Monomial, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Positivity {
    Strict,
    Weak,
    Other,
}

/// `ℓ(ν) = Σ c_i ν_i − c_0`, normalized so that `c_0 = 1` when nonzero and
/// otherwise the first nonzero `c_i` equals 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
    pub positivity: Positivity,
}

impl LinearForm {
    /// Normalizes a form `c·ν ≥ c0`; `None` if all `c_i` vanish.
    pub fn normalized(coeffs: Vec<Rational>, constant: Rational) -> Option<LinearForm> {
        let scale = if !constant.is_zero() {
            constant.abs()
        } else {
            coeffs.iter().find(|c| !c.is_zero())?.abs()
        };
        let inv = scale.recip();
        let coeffs: Vec<Rational> = coeffs.iter().map(|c| c * &inv).collect();
        let constant = &constant * &inv;
        let positivity = if coeffs.iter().all(|c| c.is_positive()) {
            Positivity::Strict
        } else if coeffs.iter().all(|c| !c.is_negative()) {
            Positivity::Weak
        } else {
            Positivity::Other
        };
        Some(LinearForm {
            coeffs,
            constant,
            positivity,
        })
    }

    /// `Σ c_i ν_i`.
    pub fn eval_linear(&self, nu: &[u32]) -> Rational {
        self.coeffs
            .iter()
            .zip(nu)
            .filter(|(_, e)| **e != 0)
            .map(|(c, e)| c * &Rational::from(*e))
            .sum()
    }

    /// `ℓ(ν)`.
    pub fn eval(&self, nu: &[u32]) -> Rational {
        self.eval_linear(nu) - &self.constant
    }

    pub fn is_strict(&self) -> bool {
        self.positivity == Positivity::Strict
    }
}

/// A face of `Γ₊(f)`, described by its support points and defining facets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub facets: Vec<usize>,
    pub points: Vec<Monomial>,
    pub dim: usize,
    pub compact: bool,
}

/// The Newton polyhedron `Γ₊(f)`.
#[derive(Clone, Debug)]
pub struct NewtonPolyhedron {
    n: usize,
    support: Vec<Monomial>,
    vertices: Vec<Monomial>,
    facets: Vec<LinearForm>,
    convenient: bool,
}

fn to_q(m: &Monomial) -> Vec<Rational> {
    m.exps().iter().map(|&e| Rational::from(e)).collect()
}

fn combinations(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, k, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, n, &mut Vec::new(), &mut out);
    out
}

/// Points not dominated coordinatewise by another point of the set.
pub fn minimal_points(points: &[Monomial]) -> Vec<Monomial> {
    points
        .iter()
        .filter(|p| !points.iter().any(|q| q != *p && q.divides(p)))
        .cloned()
        .collect()
}

/// Facets of `conv(points) + ℝⁿ₊` as forms `c·ν ≥ c0` with `c ≥ 0`.
fn positive_hull_facets(n: usize, points: &[Monomial]) -> Vec<LinearForm> {
    let mins = minimal_points(points);
    let qs: Vec<Vec<Rational>> = mins.iter().map(to_q).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in 1..=n.min(qs.len()) {
        for pts in combinations(r, qs.len()) {
            for dirs in combinations(n - r, n) {
                let mut rows: Vec<Vec<Rational>> = pts[1..]
                    .iter()
                    .map(|&k| qs[k].iter().zip(&qs[pts[0]]).map(|(a, b)| a - b).collect())
                    .collect();
                for &j in &dirs {
                    let mut e = vec![Rational::zero(); n];
                    e[j] = Rational::one();
                    rows.push(e);
                }
                if rank(&rows) != n - 1 {
                    continue;
                }
                let ns = nullspace(&rows, n);
                let mut c = ns.into_iter().next().unwrap();
                if c.iter().any(|x| x.is_negative()) {
                    if c.iter().any(|x| x.is_positive()) {
                        continue;
                    }
                    c = c.iter().map(|x| -x).collect();
                }
                let c0: Rational = c.iter().zip(&qs[pts[0]]).map(|(a, b)| a * b).sum();
                let ok = points.iter().all(|s| {
                    let v: Rational = c.iter().zip(s.exps()).map(|(a, &e)| a * &Rational::from(e)).sum();
                    v >= c0
                });
                if !ok {
                    continue;
                }
                let lf = LinearForm::normalized(c, c0).unwrap();
                let key = (lf.coeffs.clone(), lf.constant.clone());
                if seen.insert(key) {
                    out.push(lf);
                }
            }
        }
    }
    out.sort_by(|a, b| (&a.constant, &a.coeffs).cmp(&(&b.constant, &b.coeffs)).reverse());
    out
}

/// Facets of the convex hull of a finite point set, as forms `ℓ ≥ 0` on the set.
///
/// A set spanning a hyperplane gives both orientations of it; lower-dimensional
/// sets give nothing.
pub fn hull_facets(n: usize, points: &[Monomial]) -> Vec<LinearForm> {
    let qs: Vec<Vec<Rational>> = points.iter().map(to_q).collect();
    if affine_dim(&qs) < n as isize - 1 {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for pts in combinations(n, qs.len()) {
        let rows: Vec<Vec<Rational>> = pts[1..]
            .iter()
            .map(|&k| qs[k].iter().zip(&qs[pts[0]]).map(|(a, b)| a - b).collect())
            .collect();
        if rank(&rows) != n - 1 {
            continue;
        }
        let c = nullspace(&rows, n).into_iter().next().unwrap();
        let c0: Rational = c.iter().zip(&qs[pts[0]]).map(|(a, b)| a * b).sum();
        let vals: Vec<Rational> = qs
            .iter()
            .map(|s| c.iter().zip(s).map(|(a, b)| a * b).sum::<Rational>() - &c0)
            .collect();
        let flat = vals.iter().all(|v| v.is_zero());
        let c = if vals.iter().all(|v| !v.is_negative()) {
            c
        } else if vals.iter().all(|v| !v.is_positive()) {
            c.iter().map(|x| -x).collect()
        } else {
            continue;
        };
        let mut sides = vec![c.clone()];
        if flat {
            sides.push(c.iter().map(|x| -x).collect());
        }
        for c in sides {
            let c0: Rational = c.iter().zip(&qs[pts[0]]).map(|(a, b)| a * b).sum();
            // Scaling is by |c0| or |c_i|, so the orientation survives.
            let lf = LinearForm::normalized(c, c0).unwrap();
            let key = (lf.coeffs.clone(), lf.constant.clone());
            if seen.insert(key) {
                out.push(lf);
            }
        }
    }
    out
}

impl NewtonPolyhedron {
    pub fn new(f: &Polynomial) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_support(f.n(), &f.support()))
    }

    pub fn from_support(n: usize, support: &[Monomial]) -> Self {
        let facets = positive_hull_facets(n, support);
        let mins = minimal_points(support);
        let vertices: Vec<Monomial> = mins
            .into_iter()
            .filter(|p| {
                let normals: Vec<Vec<Rational>> = facets
                    .iter()
                    .filter(|l| l.eval(p.exps()).is_zero())
                    .map(|l| l.coeffs.clone())
                    .collect();
                rank(&normals) == n
            })
            .collect();
        let convenient = (0..n).all(|i| {
            support
                .iter()
                .any(|m| m.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0))
        });
        NewtonPolyhedron {
            n,
            support: support.to_vec(),
            vertices,
            facets,
            convenient,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support(&self) -> &[Monomial] {
        &self.support
    }

    pub fn vertices(&self) -> &[Monomial] {
        &self.vertices
    }

    pub fn facets(&self) -> &[LinearForm] {
        &self.facets
    }

    pub fn is_convenient(&self) -> bool {
        self.convenient
    }

    /// Facets with nonzero constant (those that scale under `a Γ₊`).
    pub fn scaling_facets(&self) -> impl Iterator<Item = &LinearForm> {
        self.facets.iter().filter(|l| !l.constant.is_zero())
    }

    /// Strictly positive facets, i.e. `LF₊^sp(f)`.
    pub fn strict_facets(&self) -> Vec<LinearForm> {
        self.facets.iter().filter(|l| l.is_strict()).cloned().collect()
    }

    /// Whether `ν` lies in `Γ₊(f)`.
    pub fn contains(&self, nu: &[Rational]) -> bool {
        self.facets.iter().all(|l| {
            let v: Rational = l.coeffs.iter().zip(nu).map(|(a, b)| a * b).sum();
            v >= l.constant
        })
    }

    /// All faces carrying at least one support point, compact or not.
    pub fn faces(&self) -> Vec<Face> {
        let on: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|l| {
                (0..self.support.len())
                    .filter(|&s| l.eval(self.support[s].exps()).is_zero())
                    .collect()
            })
            .collect();
        let mut sets: BTreeSet<BTreeSet<usize>> = on.iter().filter(|s| !s.is_empty()).cloned().collect();
        loop {
            let cur: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
            let mut added = false;
            for i in 0..cur.len() {
                for j in i + 1..cur.len() {
                    let x: BTreeSet<usize> = cur[i].intersection(&cur[j]).cloned().collect();
                    if !x.is_empty() && sets.insert(x) {
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|pset| {
                let facets: Vec<usize> = (0..self.facets.len())
                    .filter(|&k| pset.is_subset(&on[k]))
                    .collect();
                let compact = (0..self.n).all(|i| {
                    facets
                        .iter()
                        .any(|&k| self.facets[k].coeffs[i].is_positive())
                });
                let points: Vec<Monomial> = pset.iter().map(|&s| self.support[s].clone()).collect();
                let qs: Vec<Vec<Rational>> = points.iter().map(to_q).collect();
                Face {
                    facets,
                    dim: affine_dim(&qs) as usize,
                    points,
                    compact,
                }
            })
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.points.cmp(&b.points)));
        faces
    }

    /// Compact faces of every dimension.
    pub fn compact_faces(&self) -> Vec<Face> {
        self.faces().into_iter().filter(|f| f.compact).collect()
    }

    /// `v(x^ν) = min_ℓ (c·(ν+1))/c0` over facets with `c0 ≠ 0`.
    pub fn monomial_order(&self, nu: &[u32]) -> Rational {
        let shifted: Vec<u32> = nu.iter().map(|e| e + 1).collect();
        self.scaling_facets()
            .map(|l| l.eval_linear(&shifted) / &l.constant)
            .min()
            .expect("polyhedron without scaling facet")
    }

    pub fn has_scaling_facet(&self) -> bool {
        self.scaling_facets().next().is_some()
    }
}

/// Exponent vectors with nonzero coefficient.
pub fn support(f: &Polynomial) -> Result<Vec<Monomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(f.support())
}
