use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hodge::generators::{eval_vectors, GenKey, GeneratorTable, Setup};
use crate::polycore::{Polynomial, Rational};

/// A generator of `I_p(α_hi Z)` outside `I_p(α_lo Z)`, both modulo `(∂f)`.
#[derive(Clone, Debug)]
pub struct Violation {
    pub alpha_lo: Rational,
    pub alpha_hi: Rational,
    pub key: GenKey,
    /// Normal form of the generator at `α_hi`.
    pub witness: Polynomial,
}

/// Breakpoints `α = ord(x^ν) + k − p` in `(lo, hi]`, the endpoint `hi`, and midpoints.
pub fn scan_candidates(table: &GeneratorTable, p: usize, lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let pr = Rational::from(p);
    let mut points: BTreeSet<Rational> = table
        .keys
        .iter()
        .filter(|k| k.k() <= p)
        .map(|k| &k.level - &pr)
        .filter(|a| a > lo && a <= hi)
        .collect();
    points.insert(hi.clone());
    let sorted: Vec<Rational> = points.iter().cloned().collect();
    for w in sorted.windows(2) {
        points.insert(&(&w[0] + &w[1]) / &Rational::from(2));
    }
    if let Some(first) = sorted.first() {
        points.insert(&(lo + first) / &Rational::from(2));
    }
    points.into_iter().collect()
}

/// Scans consecutive candidates `α < α'` in `window` (default `(0, 1]`) for `I_p(α'Z) ⊄ I_p(αZ)` mod `(∂f)`.
pub fn monotonicity_scan(
    setup: &Setup,
    table: &GeneratorTable,
    p: usize,
    window: Option<(Rational, Rational)>,
) -> Result<Vec<Violation>> {
    let (lo, hi) = window.unwrap_or((Rational::zero(), Rational::one()));
    if lo.is_negative() || hi > Rational::one() || lo >= hi {
        return Err(Error::InvalidArgument(format!("scan window ({lo}, {hi}] is not inside (0, 1]")));
    }
    let ma = &setup.ma;
    let cands = scan_candidates(table, p, &lo, &hi);
    let mut out = Vec::new();
    let mut prev: Option<(Rational, crate::localalg::IdealSpan)> = None;
    for alpha in cands {
        let ideal = table.ideal(ma, &alpha, p);
        if let Some((a0, mut i0)) = prev.take() {
            for t in table.indices_for(&alpha, p) {
                let v = eval_vectors(&table.coeffs[t], &alpha);
                if !i0.contains(&v) {
                    let mut witness = Polynomial::zero(setup.n());
                    for (k, x) in &v {
                        witness.add_term(ma.basis_monomial(*k as usize).clone(), x);
                    }
                    out.push(Violation {
                        alpha_lo: a0.clone(),
                        alpha_hi: alpha.clone(),
                        key: table.keys[t].clone(),
                        witness,
                    });
                    break;
                }
            }
        }
        prev = Some((alpha, ideal));
    }
    Ok(out)
}
