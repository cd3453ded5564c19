use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::polycore::Rational;

/// A finite multiset of rational exponents in ambient dimension `n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Spectrum {
    n: usize,
    entries: BTreeMap<Rational, usize>,
}

impl Spectrum {
    pub fn new(n: usize) -> Self {
        Spectrum {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I: IntoIterator<Item = (Rational, usize)>>(n: usize, it: I) -> Self {
        let mut s = Spectrum::new(n);
        for (a, m) in it {
            s.insert(a, m);
        }
        s
    }

    pub fn insert(&mut self, alpha: Rational, mult: usize) {
        if mult > 0 {
            *self.entries.entry(alpha).or_insert(0) += mult;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, usize)> {
        self.entries.iter().map(|(a, m)| (a, *m))
    }

    pub fn multiplicity(&self, alpha: &Rational) -> usize {
        self.entries.get(alpha).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }

    pub fn max(&self) -> Option<&Rational> {
        self.entries.keys().next_back()
    }

    /// Exponents in weakly increasing order, with repetition.
    pub fn to_vec(&self) -> Vec<Rational> {
        self.entries
            .iter()
            .flat_map(|(a, m)| std::iter::repeat_n(a.clone(), *m))
            .collect()
    }

    /// Invariance under `α ↦ n − α`.
    pub fn is_symmetric(&self) -> bool {
        let n = Rational::from(self.n);
        self.entries
            .iter()
            .all(|(a, m)| self.multiplicity(&(&n - a)) == *m)
    }

    /// Whether the minimal and maximal exponents both have multiplicity one.
    pub fn extremes_simple(&self) -> bool {
        match (self.entries.values().next(), self.entries.values().next_back()) {
            (Some(a), Some(b)) => *a == 1 && *b == 1,
            _ => false,
        }
    }

    pub fn is_submultiset_of(&self, other: &Spectrum) -> bool {
        self.entries.iter().all(|(a, m)| other.multiplicity(a) >= *m)
    }

    /// `self − other` as multisets; `None` unless `other ⊆ self`.
    pub fn difference(&self, other: &Spectrum) -> Option<Spectrum> {
        if !other.is_submultiset_of(self) {
            return None;
        }
        Some(Spectrum::from_entries(
            self.n,
            self.entries
                .iter()
                .map(|(a, m)| (a.clone(), m - other.multiplicity(a))),
        ))
    }

    /// The multiset of exponents reduced into `(0, 1]`.
    pub fn mod_one(&self) -> BTreeMap<Rational, usize> {
        let mut out = BTreeMap::new();
        for (a, m) in &self.entries {
            *out.entry(a.frac_in_unit_interval()).or_insert(0) += m;
        }
        out
    }

    /// Sub-multiset of exponents strictly below `bound`.
    pub fn below(&self, bound: &Rational) -> Spectrum {
        Spectrum::from_entries(
            self.n,
            self.entries
                .range(..bound.clone())
                .map(|(a, m)| (a.clone(), *m)),
        )
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|(a, m)| if *m == 1 { a.to_string() } else { format!("{a}({m})") })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rational weights `w_1, …, w_n` with `0 < w_i ≤ 1/2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct WeightSystem {
    weights: Vec<Rational>,
}

impl WeightSystem {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("empty weight system".into()));
        }
        let half = Rational::new(1, 2);
        for w in &weights {
            if !w.is_positive() {
                return Err(Error::InvalidWeights(format!("non-positive weight {w}")));
            }
            if *w > half {
                return Err(Error::InvalidWeights(format!("weight {w} exceeds 1/2")));
            }
        }
        Ok(WeightSystem { weights })
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// `ℓ_w(ν) = Σ w_i (ν_i + 1)`.
    pub fn ell(&self, exps: &[u32]) -> Rational {
        self.weights
            .iter()
            .zip(exps)
            .map(|(w, e)| w * &Rational::from(e + 1))
            .sum()
    }

    /// `Σ w_i ν_i`.
    pub fn weighted_degree(&self, exps: &[u32]) -> Rational {
        self.weights
            .iter()
            .zip(exps)
            .map(|(w, e)| w * &Rational::from(*e))
            .sum()
    }

    pub fn max_weight(&self) -> &Rational {
        self.weights.iter().max().unwrap()
    }

    /// Least common denominator `e` of the weights.
    fn common_denominator(&self) -> BigInt {
        self.weights
            .iter()
            .fold(BigInt::one(), |acc, w| acc.lcm(&w.denom()))
    }
}

/// Power series / polynomials in `u = t^{1/e}` with integer coefficients.
fn series_mul(a: &[BigInt], b: &[BigInt], len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= len {
                break;
            }
            out[i + j] += x * y;
        }
    }
    out
}

/// `1/(1 − u^k)` truncated to `len` coefficients.
fn geometric(k: usize, len: usize) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    let mut i = 0;
    while i < len {
        out[i] = BigInt::one();
        i += k;
    }
    out
}

fn to_usize(b: &BigInt, what: &str) -> Result<usize> {
    b.to_usize()
        .ok_or_else(|| Error::InvalidWeights(format!("{what} too large")))
}

/// Expands `∏ (t^{w_i} − t)/(1 − t^{w_i})` into a multiset of exponents.
pub fn spectrum_product_formula(w: &WeightSystem) -> Result<Spectrum> {
    let e = w.common_denominator();
    let eu = to_usize(&e, "common denominator")?;
    let a: Vec<usize> = w
        .weights()
        .iter()
        .map(|wi| to_usize(&(wi.numer() * (&e / wi.denom())), "weight numerator"))
        .collect::<Result<_>>()?;
    let n = w.n();
    let len = n * eu + 1;
    // Numerator ∏ (u^{a_i} − u^e) and the series of 1/∏(1 − u^{a_i}).
    let mut num = vec![BigInt::one()];
    for &ai in &a {
        let mut fac = vec![BigInt::zero(); eu + 1];
        fac[ai] += 1;
        fac[eu] -= 1;
        num = series_mul(&num, &fac, len);
    }
    let mut inv = vec![BigInt::one()];
    inv.resize(len, BigInt::zero());
    for &ai in &a {
        inv = series_mul(&inv, &geometric(ai, len), len);
    }
    let q = series_mul(&num, &inv, len);
    // Exactness: q · ∏(1 − u^{a_i}) must reproduce the numerator.
    let mut den = vec![BigInt::one()];
    for &ai in &a {
        let mut fac = vec![BigInt::zero(); ai + 1];
        fac[0] += 1;
        fac[ai] -= 1;
        den = series_mul(&den, &fac, 2 * len);
    }
    let back = series_mul(&q, &den, 2 * len);
    let mut num_full = num.clone();
    num_full.resize(2 * len, BigInt::zero());
    if back != num_full {
        return Err(Error::InvalidWeights(
            "weights do not define a finite spectrum".into(),
        ));
    }
    let mut s = Spectrum::new(n);
    for (k, c) in q.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if c.is_negative() {
            return Err(Error::InvalidWeights(
                "weights give a negative multiplicity".into(),
            ));
        }
        let exp = Rational::from_bigints(BigInt::from(k), e.clone());
        s.insert(exp, to_usize(c, "multiplicity")?);
    }
    Ok(s)
}

/// Spectrum of `T_{q1,q2,q3}` in `n ≥ 3` variables:
/// `t^{(n−1)/2} (1 + t + Σ_i Σ_{0<j<q_i} t^{j/q_i})`.
pub fn spectrum_t(q: [u32; 3], n: usize) -> Result<Spectrum> {
    if q.iter().any(|&x| x < 2) {
        return Err(Error::InvalidArgument("each q_i must be at least 2".into()));
    }
    if n < 3 {
        return Err(Error::InvalidArgument("n must be at least 3".into()));
    }
    let inv: Rational = q.iter().map(|&x| Rational::new(1, x as i64)).sum();
    if inv >= Rational::one() {
        return Err(Error::InvalidArgument(
            "1/q1 + 1/q2 + 1/q3 < 1 is violated".into(),
        ));
    }
    let shift = Rational::new(n as i64 - 1, 2);
    let mut s = Spectrum::new(n);
    s.insert(shift.clone(), 1);
    s.insert(&shift + &Rational::one(), 1);
    for &qi in &q {
        for j in 1..qi {
            s.insert(&shift + &Rational::new(j as i64, qi as i64), 1);
        }
    }
    Ok(s)
}

/// Verifies `∏(1−t^{w_i})^{-1} = t^{−Σw} Sp(t) ∏(1−t^{1−w_i})^{-1}` through `t^order`.
pub fn hilbert_poincare_identity_holds(w: &WeightSystem, sp: &Spectrum, order: usize) -> bool {
    let e = w.common_denominator();
    let Some(eu) = e.to_usize() else { return false };
    let a: Vec<usize> = w
        .weights()
        .iter()
        .map(|wi| (wi.numer() * (&e / wi.denom())).to_usize().unwrap())
        .collect();
    let len = order * eu + 1;
    let alpha1: Rational = w.weights().iter().sum();
    let mut lhs = vec![BigInt::one()];
    lhs.resize(len, BigInt::zero());
    for &ai in &a {
        lhs = series_mul(&lhs, &geometric(ai, len), len);
    }
    let mut shifted = vec![BigInt::zero(); len];
    for (alpha, m) in sp.entries() {
        let d = (alpha - &alpha1) * Rational::from_bigints(e.clone(), BigInt::one());
        if !d.is_integer() || d.is_negative() {
            return false;
        }
        let k = d.numer().to_usize().unwrap();
        if k < len {
            shifted[k] += m;
        }
    }
    let mut rhs = shifted;
    for &ai in &a {
        rhs = series_mul(&rhs, &geometric(eu - ai, len), len);
    }
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn ws(w: &[(i64, i64)]) -> WeightSystem {
        WeightSystem::new(w.iter().map(|&(a, b)| r(a, b)).collect()).unwrap()
    }

    #[test]
    fn one_variable_half() {
        let s = spectrum_product_formula(&ws(&[(1, 2)])).unwrap();
        assert_eq!(s, Spectrum::from_entries(1, [(r(1, 2), 1)]));
    }

    #[test]
    fn two_thirds() {
        let s = spectrum_product_formula(&ws(&[(1, 3), (1, 3)])).unwrap();
        assert_eq!(s, Spectrum::from_entries(2, [(r(2, 3), 1), (r(1, 1), 2), (r(4, 3), 1)]));
    }

    #[test]
    fn closed_form_two_variables() {
        let (a, b) = (5i64, 4i64);
        let s = spectrum_product_formula(&ws(&[(1, a), (1, b)])).unwrap();
        let mut want = Spectrum::new(2);
        for i in 1..a {
            for j in 1..b {
                want.insert(r(i, a) + r(j, b), 1);
            }
        }
        assert_eq!(s, want);
        assert_eq!(s.min(), Some(&r(9, 20)));
        assert_eq!(s.max(), Some(&r(31, 20)));
    }

    #[test]
    fn non_unit_fraction_weights() {
        // x^2 y + y^3: weights (1/3, 1/3) are not the only option; use x^3 y + y^2 with (1/6, 1/2).
        let s = spectrum_product_formula(&ws(&[(1, 6), (1, 2)])).unwrap();
        assert_eq!(s.total(), 5);
        // D-type weights (1/3, 1/3) with 2/5 style: x^2y + y^4 has (3/8, 1/4).
        let d = spectrum_product_formula(&ws(&[(3, 8), (1, 4)])).unwrap();
        assert_eq!(d.total(), 5);
        assert!(d.is_symmetric());
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(WeightSystem::new(vec![r(0, 1)]).is_err());
        assert!(WeightSystem::new(vec![r(2, 3)]).is_err());
        assert!(spectrum_product_formula(&ws(&[(2, 5), (2, 5)])).is_err());
    }

    #[test]
    fn t_spectrum() {
        let s = spectrum_t([5, 4, 4], 3).unwrap();
        assert_eq!(s.total(), 12);
        assert!(s.is_symmetric());
        assert_eq!(s.multiplicity(&r(1, 1)), 1);
        assert_eq!(s.multiplicity(&r(2, 1)), 1);
        assert_eq!(s.multiplicity(&r(3, 2)), 2);
        assert_eq!(s.multiplicity(&r(6, 5)), 1);
        assert!(spectrum_t([3, 3, 3], 3).is_err());
    }

    #[test]
    fn symmetry_check() {
        assert!(Spectrum::from_entries(1, [(r(1, 2), 1)]).is_symmetric());
        assert!(!Spectrum::from_entries(2, [(r(1, 3), 1), (r(1, 1), 1)]).is_symmetric());
    }

    fn arb_weights() -> impl Strategy<Value = WeightSystem> {
        prop::collection::vec(2i64..9, 1..4)
            .prop_map(|ds| WeightSystem::new(ds.into_iter().map(|d| r(1, d)).collect()).unwrap())
    }

    proptest! {
        #[test]
        fn product_formula_invariants(w in arb_weights()) {
            let s = spectrum_product_formula(&w).unwrap();
            let expect: Rational = w.weights().iter().map(|wi| wi.recip() - Rational::one()).product();
            prop_assert_eq!(Rational::from(s.total()), expect);
            prop_assert!(s.is_symmetric());
            prop_assert!(s.extremes_simple());
            prop_assert_eq!(s.min().unwrap(), &w.weights().iter().sum::<Rational>());
            prop_assert!(hilbert_poincare_identity_holds(&w, &s, 20));
        }

        #[test]
        fn hilbert_poincare_rejects_perturbation(w in arb_weights()) {
            let s = spectrum_product_formula(&w).unwrap();
            let mut t = s.clone();
            let top = s.max().unwrap().clone();
            t.insert(top, 1);
            prop_assert!(!hilbert_poincare_identity_holds(&w, &t, 20));
        }
    }
}
