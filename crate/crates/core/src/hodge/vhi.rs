use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hodge::generators::{eval_vectors, GeneratorTable, Setup};
use crate::localalg::echelon::SparseVec;
use crate::localalg::{IdealSpan, MilnorAlgebra};
use crate::polycore::{Rational, Spectrum};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Graded pieces of `ℂ{x}/(∂f)`.
    Jacobian,
    /// Graded pieces of `ℂ{x}/((∂f), f)`.
    JacobianAndF,
}

#[derive(Clone, Debug)]
pub struct VhiFiltration {
    pub mode: Mode,
    /// Jumps in increasing order.
    pub jumps: Vec<Rational>,
    /// `dim V^β` of the quotient at each jump.
    pub dims: Vec<usize>,
    pub graded: Spectrum,
    /// Largest `p` whose ideals contribute a jump.
    pub p_max: usize,
    pub generators: usize,
}

impl VhiFiltration {
    pub fn total(&self) -> usize {
        self.dims.first().copied().unwrap_or(0)
    }

    /// `dim V^β` for an arbitrary `β`.
    pub fn dim_at(&self, beta: &Rational) -> usize {
        match self.jumps.iter().position(|j| j >= beta) {
            Some(k) => self.dims[k],
            None => 0,
        }
    }
}

/// `α ∈ (0, 1]` with `α ≡ level (mod 1)`.
pub fn unit_representative(level: &Rational) -> Rational {
    level.frac_in_unit_interval()
}

/// The filtration `V_HI^β = Σ_{α+p ≥ β} I_p(αZ)` on the Milnor algebra (or its Tjurina quotient).
///
/// A generator `P~(I, α) x^ν` with `k = |I|` lies in `I_p(αZ)` exactly when
/// `k ≤ p` and `α + p ≤ L := ord(x^ν) + k`. For `β < L` the admissible `α`
/// fill an interval, so every `α`-coefficient is in `V^β`; at `β = L` only
/// the value at the unique admissible `α` is.
pub fn v_hi_filtration(setup: &Setup, mode: Mode) -> Result<VhiFiltration> {
    v_hi_filtration_with(setup, &GeneratorTable::new(setup), mode)
}

fn by_level(table: &GeneratorTable) -> BTreeMap<&Rational, Vec<usize>> {
    let mut out: BTreeMap<&Rational, Vec<usize>> = BTreeMap::new();
    for (t, key) in table.keys.iter().enumerate() {
        out.entry(&key.level).or_default().push(t);
    }
    out
}

fn base_span(ma: &MilnorAlgebra, mode: Mode) -> IdealSpan {
    match mode {
        Mode::Jacobian => ma.ideal(),
        Mode::JacobianAndF => ma.f_ideal(),
    }
}

pub fn v_hi_filtration_with(setup: &Setup, table: &GeneratorTable, mode: Mode) -> Result<VhiFiltration> {
    let ma = &setup.ma;
    let mu = ma.mu();
    let mut span = base_span(ma, mode);
    let base = span.dim();
    let mut graded = BTreeMap::new();
    let mut jumps_desc = Vec::new();
    let mut p_max = 0;
    for (level, group) in by_level(table).into_iter().rev() {
        if span.dim() == mu {
            break;
        }
        let alpha = unit_representative(level);
        let evals: Vec<SparseVec> = group.iter().map(|&t| eval_vectors(&table.coeffs[t], &alpha)).collect();
        let grown = span.add(ma, evals);
        if grown > 0 {
            graded.insert(level.clone(), grown);
            jumps_desc.push((level.clone(), span.dim() - base));
            let p = (level - &alpha).to_i64_pair().map_or(0, |(q, _)| q);
            p_max = p_max.max(p as usize);
        }
        span.add(ma, group.iter().flat_map(|&t| table.coeffs[t].iter().cloned()).collect());
    }
    if span.dim() != mu {
        return Err(Error::Inconsistent(format!(
            "V_HI spans {} of {mu} dimensions",
            span.dim()
        )));
    }
    jumps_desc.reverse();
    let (jumps, dims) = jumps_desc.into_iter().unzip();
    Ok(VhiFiltration {
        mode,
        jumps,
        dims,
        graded: Spectrum::from_entries(setup.n(), graded),
        p_max,
        generators: table.len(),
    })
}

/// `V_HI^β` as an ideal of the Milnor algebra (including `fA` in Tjurina mode).
pub fn v_hi_subspace(setup: &Setup, table: &GeneratorTable, beta: &Rational, mode: Mode) -> IdealSpan {
    let ma = &setup.ma;
    let mut span = base_span(ma, mode);
    let alpha = unit_representative(beta);
    let mut vs = Vec::new();
    for (t, key) in table.keys.iter().enumerate() {
        match key.level.cmp(beta) {
            Ordering::Greater => vs.extend(table.coeffs[t].iter().cloned()),
            Ordering::Equal => vs.push(eval_vectors(&table.coeffs[t], &alpha)),
            Ordering::Less => {}
        }
    }
    span.add(ma, vs);
    span
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_polynomial, Polynomial, WeightSystem};

    fn p(s: &str, vars: &[&str]) -> Polynomial {
        let v: Vec<String> = vars.iter().map(|x| x.to_string()).collect();
        parse_polynomial(s, &v).unwrap()
    }

    fn ws(w: &[(i64, i64)]) -> WeightSystem {
        WeightSystem::new(w.iter().map(|&(a, b)| Rational::new(a, b)).collect()).unwrap()
    }

    #[test]
    fn representatives() {
        assert_eq!(unit_representative(&Rational::new(7, 4)), Rational::new(3, 4));
        assert_eq!(unit_representative(&Rational::from(2)), Rational::one());
    }

    #[test]
    fn family_top_exponent() {
        let f = p("x^5+y^4+x^3*y^2", &["x", "y"]);
        let s = Setup::new(&f, Some(&ws(&[(1, 5), (1, 4)]))).unwrap();
        let v = v_hi_filtration(&s, Mode::Jacobian).unwrap();
        assert_eq!(v.graded.total(), 12);
        assert_eq!(v.graded.max().unwrap(), &Rational::new(17, 10));
        assert_eq!(v.graded.multiplicity(&Rational::new(17, 10)), 1);
        assert_eq!(v.graded.min().unwrap(), &Rational::new(9, 20));
        assert_eq!(v.total(), 12);
        assert!(v.dims.windows(2).all(|w| w[0] >= w[1]));
        let t = v_hi_filtration(&s, Mode::JacobianAndF).unwrap();
        assert_eq!(t.graded.total(), 11);
        let table = GeneratorTable::new(&s);
        for (j, d) in v.jumps.iter().zip(&v.dims) {
            assert_eq!(v_hi_subspace(&s, &table, j, Mode::Jacobian).dim(), *d);
        }
        assert!(t.graded.is_submultiset_of(&v.graded));
    }

    #[test]
    fn homogeneous_coincides() {
        let f = p("x^4+y^3", &["x", "y"]);
        let s = Setup::new(&f, None).unwrap();
        let v = v_hi_filtration(&s, Mode::Jacobian).unwrap();
        assert_eq!(v.graded, s.ma.spectrum().unwrap());
        let t = v_hi_filtration(&s, Mode::JacobianAndF).unwrap();
        assert_eq!(t.graded, v.graded);
    }
}
