use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::polycore::Rational;

/// Exponent vector `ν ∈ ℕⁿ`, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut e = self.0.clone();
        e[i] += 1;
        Monomial(e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut e = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            e.push(a.checked_sub(*b)?);
        }
        Some(Monomial(e))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// All monomials in `n` variables of total degree exactly `d`, in descending lex order.
    pub fn of_degree(n: usize, d: u32) -> Vec<Monomial> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(Monomial(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                rec(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Monomial(Vec::new()));
            }
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }

    /// All monomials of total degree `< bound`, by increasing degree.
    pub fn below_degree(n: usize, bound: u32) -> Vec<Monomial> {
        (0..bound).flat_map(|d| Monomial::of_degree(n, d)).collect()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Sparse polynomial in `n` variables with rational coefficients.
///
/// Terms are kept in a map keyed by graded-lex monomials; zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, Rational::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i))
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Polynomial::zero(n);
        for (e, c) in terms {
            assert_eq!(e.len(), n, "exponent length mismatch");
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Largest term in the graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Lowest total degree of a term (the order at the origin); `None` for zero.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.n(), self.n);
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Polynomial) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_same(other)?;
        Ok(self * other)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, a)| (k.mul(m), a.clone()))
                .collect(),
        }
    }

    /// Product keeping only terms of total degree `< bound`.
    pub fn mul_truncated(&self, other: &Polynomial, bound: u32) -> Polynomial {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let mut out = Polynomial::zero(self.n);
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            if d1 >= bound {
                continue;
            }
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() < bound {
                    out.add_term(m1.mul(m2), &(c1 * c2));
                }
            }
        }
        out
    }

    /// Drops all terms of total degree `>= bound`.
    pub fn truncate(&self, bound: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() < bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative with respect to `x_i` (0-based).
    pub fn derivative(&self, i: usize) -> Result<Polynomial> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mut out = Polynomial::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut ex = m.0.clone();
            ex[i] -= 1;
            out.terms.insert(Monomial(ex), c * &Rational::from(e));
        }
        Ok(out)
    }

    /// Partial derivative; panics on out-of-range index.
    pub fn d(&self, i: usize) -> Polynomial {
        self.derivative(i).expect("variable index out of range")
    }

    /// Substitutes each variable by the given polynomial (all in a common ring).
    pub fn compose(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.n {
            return Err(Error::VariableMismatch {
                expected: self.n,
                got: images.len(),
            });
        }
        let m = images.first().map(|p| p.n).unwrap_or(0);
        let mut out = Polynomial::zero(m);
        for (mono, c) in &self.terms {
            let mut t = Polynomial::constant(m, c.clone());
            for (i, e) in mono.0.iter().enumerate() {
                if *e > 0 {
                    t = &t * &images[i].pow(*e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Renders with the given variable names.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if !a.is_one() || m.degree() == 0 {
                factors.push(a.to_string());
            }
            for (i, e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }

    /// Default names: `x,y,z` for up to three variables, else `x1..xn`.
    pub fn default_names(n: usize) -> Vec<String> {
        if n <= 3 {
            ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&Polynomial::default_names(self.n)))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::ops::Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl std::ops::Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl std::ops::Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![2, 0]);
        let b = Monomial::new(vec![0, 3]);
        let c = Monomial::new(vec![1, 1]);
        assert!(a < b);
        assert!(c < a);
    }

    #[test]
    fn degree_enumeration_counts() {
        assert_eq!(Monomial::of_degree(3, 4).len(), 15);
        assert_eq!(Monomial::below_degree(2, 4).len(), 10);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.coeff(&Monomial::new(vec![1, 1])), q(2));
        assert!((&x - &x).is_zero());
    }

    #[test]
    fn derivative_rules() {
        let f = Polynomial::from_terms(2, vec![(vec![5, 0], q(1)), (vec![0, 4], q(1))]);
        let fx = f.d(0);
        assert_eq!(fx, Polynomial::from_terms(2, vec![(vec![4, 0], q(5))]));
        assert!(Polynomial::one(2).d(1).is_zero());
        assert!(f.derivative(2).is_err());
    }

    #[test]
    fn truncated_product() {
        let x = Polynomial::var(1, 0);
        let p = &Polynomial::one(1) + &x;
        let t = p.mul_truncated(&p, 2);
        assert_eq!(t.degree(), Some(1));
        assert_eq!(t.coeff(&Monomial::var(1, 0)), q(2));
    }

    #[test]
    fn printing_is_descending() {
        let f = Polynomial::from_terms(2, vec![(vec![2, 1], q(1)), (vec![0, 3], q(3)), (vec![0, 0], q(-1))]);
        assert_eq!(f.to_string(), "x^2*y + 3*y^3 - 1");
    }
}
