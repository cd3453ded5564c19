use crate::error::{Error, Result};
use crate::newton::NewtonPolyhedron;
use crate::polycore::{Monomial, Polynomial, Rational, WeightSystem};

/// Rule assigning each monomial `x^ν` a rational order.
#[derive(Clone, Debug)]
pub enum FiltrationOrder {
    /// `ℓ_w(ν) = Σ w_i (ν_i + 1)`.
    Weight(WeightSystem),
    /// The Newton order `v(x^ν)`.
    Newton(NewtonPolyhedron),
}

impl FiltrationOrder {
    pub fn weight(w: WeightSystem) -> Self {
        FiltrationOrder::Weight(w)
    }

    pub fn newton(np: NewtonPolyhedron) -> Result<Self> {
        if !np.has_scaling_facet() {
            return Err(Error::Unsupported("Newton polyhedron has no facet off the origin".into()));
        }
        Ok(FiltrationOrder::Newton(np))
    }

    pub fn n(&self) -> usize {
        match self {
            FiltrationOrder::Weight(w) => w.n(),
            FiltrationOrder::Newton(np) => np.n(),
        }
    }

    pub fn monomial(&self, nu: &[u32]) -> Rational {
        match self {
            FiltrationOrder::Weight(w) => w.ell(nu),
            FiltrationOrder::Newton(np) => np.monomial_order(nu),
        }
    }

    pub fn of_monomial(&self, m: &Monomial) -> Rational {
        self.monomial(m.exps())
    }
}

/// `min` of the order over the support of `g`.
pub fn order_of(order: &FiltrationOrder, g: &Polynomial) -> Result<Rational> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(g.terms().map(|(m, _)| order.of_monomial(m)).min().unwrap())
}

/// `γ_f(g) = max_i order(x_i g)`; `gamma(order, 1) = γ_f`.
pub fn gamma(order: &FiltrationOrder, g: &Polynomial) -> Result<Rational> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = order.n();
    let mut best: Option<Rational> = None;
    for i in 0..n {
        let v = order_of(order, &g.mul_monomial(&Monomial::var(n, i)))?;
        if best.as_ref().is_none_or(|b| &v > b) {
            best = Some(v);
        }
    }
    Ok(best.unwrap())
}
