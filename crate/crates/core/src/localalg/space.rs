use std::collections::HashMap;

use crate::localalg::echelon::SparseVec;
use crate::newton::FiltrationOrder;
use crate::polycore::{Monomial, Polynomial, Rational};

/// All monomials of degree `< bound`, as the columns of `ℚ[x]/𝔪^bound`.
///
/// Columns are sorted by filtration order (when given), then degree, then
/// graded-lex, so the lowest column of a vector is a term of least order.
#[derive(Clone, Debug)]
pub struct TruncatedSpace {
    n: usize,
    bound: u32,
    monos: Vec<Monomial>,
    orders: Option<Vec<Rational>>,
    index: HashMap<Monomial, u32>,
}

impl TruncatedSpace {
    pub fn new(n: usize, bound: u32, order: Option<&FiltrationOrder>) -> Self {
        let monos = Monomial::below_degree(n, bound);
        let mut keyed: Vec<(Option<Rational>, Monomial)> = monos
            .into_iter()
            .map(|m| (order.map(|o| o.of_monomial(&m)), m))
            .collect();
        keyed.sort();
        let orders = order.map(|_| keyed.iter().map(|(o, _)| o.clone().unwrap()).collect());
        let monos: Vec<Monomial> = keyed.into_iter().map(|(_, m)| m).collect();
        let index = monos
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k as u32))
            .collect();
        TruncatedSpace {
            n,
            bound,
            monos,
            orders,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    /// Number of columns, `C(bound - 1 + n, n)`.
    pub fn dim(&self) -> usize {
        self.monos.len()
    }

    pub fn monomial(&self, col: u32) -> &Monomial {
        &self.monos[col as usize]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    /// Filtration order of a column, if an order was given.
    pub fn order(&self, col: u32) -> Option<&Rational> {
        self.orders.as_ref().map(|o| &o[col as usize])
    }

    pub fn column(&self, m: &Monomial) -> Option<u32> {
        self.index.get(m).copied()
    }

    /// Coordinates of `p` modulo `𝔪^bound`, sorted by column.
    pub fn vector(&self, p: &Polynomial) -> SparseVec {
        let mut v: SparseVec = p
            .terms()
            .filter(|(m, _)| m.degree() < self.bound)
            .map(|(m, c)| (self.index[m], c.clone()))
            .collect();
        v.sort_unstable_by_key(|(c, _)| *c);
        v
    }

    /// Coordinates of `x^μ · p` modulo `𝔪^bound`.
    pub fn shifted_vector(&self, p: &Polynomial, shift: &Monomial) -> SparseVec {
        let d = shift.degree();
        let mut v: SparseVec = p
            .terms()
            .filter(|(m, _)| m.degree() + d < self.bound)
            .map(|(m, c)| (self.index[&m.mul(shift)], c.clone()))
            .collect();
        v.sort_unstable_by_key(|(c, _)| *c);
        v
    }

    pub fn polynomial(&self, v: &[(u32, Rational)]) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (c, x) in v {
            p.add_term(self.monos[*c as usize].clone(), x);
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::WeightSystem;

    #[test]
    fn dimension_is_binomial() {
        let s = TruncatedSpace::new(3, 5, None);
        assert_eq!(s.dim(), 35);
        assert_eq!(s.monomial(0), &Monomial::one(3));
    }

    #[test]
    fn columns_follow_order() {
        let w = WeightSystem::new(vec![Rational::new(1, 3), Rational::new(1, 5)]).unwrap();
        let o = FiltrationOrder::weight(w);
        let s = TruncatedSpace::new(2, 4, Some(&o));
        for c in 1..s.dim() as u32 {
            assert!(s.order(c - 1) <= s.order(c));
        }
        // y (order 1/3+2/5) comes before x (order 2/3+1/5).
        assert!(s.column(&Monomial::var(2, 1)) < s.column(&Monomial::var(2, 0)));
    }
}
