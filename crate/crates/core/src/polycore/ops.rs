//! The first-order operators `P(i, β) = f ∂_i − β f_i` and their composites.

use crate::error::{Error, Result};
use crate::polycore::{Polynomial, Rational};

fn check(f: &Polynomial, g: &Polynomial, i: usize) -> Result<()> {
    if f.n() != g.n() {
        return Err(Error::VariableMismatch {
            expected: f.n(),
            got: g.n(),
        });
    }
    if i >= f.n() {
        return Err(Error::IndexOutOfRange { index: i, n: f.n() });
    }
    Ok(())
}

/// `P(i, β) g = f ∂_i g − β g ∂_i f` (0-based `i`).
pub fn op_p(f: &Polynomial, i: usize, beta: &Rational, g: &Polynomial) -> Result<Polynomial> {
    check(f, g, i)?;
    let fi = f.d(i);
    Ok(&(f * &g.d(i)) - &(g * &fi).scale(beta))
}

/// `P~(I, α) g = P(i_{k-1}, α+k-1) ∘ … ∘ P(i_0, α) g`; the empty sequence is the identity.
pub fn op_p_tilde(f: &Polynomial, indices: &[usize], alpha: &Rational, g: &Polynomial) -> Result<Polynomial> {
    let mut cur = g.clone();
    for (j, &i) in indices.iter().enumerate() {
        let beta = alpha + &Rational::from(j);
        cur = op_p(f, i, &beta, &cur)?;
    }
    Ok(cur)
}

/// `P~(I, α) g` with `α` kept symbolic, truncated below total degree `bound`.
///
/// Returns `G_0, …, G_k` with `P~(I, α) g ≡ Σ_t α^t G_t` modulo terms of
/// degree `>= bound`. Each `G_t` is independent of `α`.
pub fn op_p_tilde_symbolic(
    f: &Polynomial,
    partials: &[Polynomial],
    indices: &[usize],
    g: &Polynomial,
    bound: u32,
) -> Vec<Polynomial> {
    let mut cur = vec![g.truncate(bound)];
    for (j, &i) in indices.iter().enumerate() {
        cur = op_p_symbolic_step(f, &partials[i], i, j, &cur, bound);
    }
    cur
}

/// One factor `P(i, α + j)` applied to `Σ_t α^t G_t`.
pub fn op_p_symbolic_step(
    f: &Polynomial,
    fi: &Polynomial,
    i: usize,
    j: usize,
    cur: &[Polynomial],
    bound: u32,
) -> Vec<Polynomial> {
    let jr = Rational::from(j);
    let mut next = vec![Polynomial::zero(f.n()); cur.len() + 1];
    for (t, gt) in cur.iter().enumerate() {
        if gt.is_zero() {
            continue;
        }
        let gfi = gt.mul_truncated(fi, bound);
        // f ∂_i G_t − j G_t f_i contributes to α^t; −G_t f_i to α^{t+1}.
        let a = &f.mul_truncated(&gt.d(i), bound) - &gfi.scale(&jr);
        next[t] = &next[t] + &a;
        next[t + 1] = &next[t + 1] - &gfi;
    }
    next
}

/// Evaluates `Σ_t α^t G_t`.
pub fn eval_symbolic(coeffs: &[Polynomial], alpha: &Rational) -> Polynomial {
    let n = coeffs.first().map(|p| p.n()).unwrap_or(0);
    let mut acc = Polynomial::zero(n);
    let mut pw = Rational::one();
    for c in coeffs {
        acc = &acc + &c.scale(&pw);
        pw = &pw * alpha;
    }
    acc
}
