use crate::error::{Error, Result};
use crate::hodge::generators::{GeneratorTable, Setup};
use crate::hodge::vhi::{v_hi_filtration_with, Mode, VhiFiltration};
use crate::localalg::echelon::SparseVec;
use crate::localalg::{steenbrink_spectrum_of, ConditionA, MilnorAlgebra};
use crate::newton::{gamma, FiltrationOrder, NewtonPolyhedron};
use crate::polycore::{Monomial, Polynomial, Rational, Spectrum, WeightSystem};

/// `γ_f` as the top order of `Ω_f / 𝔪² Ω_f`.
pub fn gamma_quotient(ma: &MilnorAlgebra) -> Result<Rational> {
    let n = ma.n();
    let quads: Vec<Polynomial> = Monomial::of_degree(n, 2).into_iter().map(Polynomial::monomial).collect();
    let sp = ma
        .quotient_spectrum(&ma.ideal_of(&quads))
        .ok_or_else(|| Error::InvalidArgument("Milnor algebra built without a filtration order".into()))?;
    Ok(sp.max().cloned().unwrap())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Epsilon {
    pub gamma: Rational,
    pub epsilon: Rational,
    pub alpha_max: Rational,
    /// `max_i v(x_i)` for the condition-(A) order, when `f ∈ 𝔪³`.
    pub gamma_order: Option<Rational>,
    /// The same with the Newton order, when `f` is also non-degenerate.
    pub gamma_newton: Option<Rational>,
}

impl Epsilon {
    /// `γ_f ≤ (n+1)/3`, tracked but never required.
    pub fn within_observed_bound(&self, n: usize) -> bool {
        self.gamma <= Rational::new(n as i64 + 1, 3)
    }
}

pub fn epsilon_of(setup: &Setup, steenbrink: &Spectrum) -> Result<Epsilon> {
    let ma = &setup.ma;
    let gamma_q = gamma_quotient(ma)?;
    let alpha_max = steenbrink.max().unwrap().clone();
    let one = Polynomial::one(setup.n());
    let (gamma_order, gamma_newton) = if setup.f().order().unwrap() >= 3 {
        let g = gamma(&setup.order, &one)?;
        if g != gamma_q {
            return Err(Error::Inconsistent(format!(
                "gamma_f from the order is {g}, from Omega_f / m^2 Omega_f is {gamma_q}"
            )));
        }
        let gn = match setup.cond {
            ConditionA::Both(_) => Some(gamma(
                &FiltrationOrder::newton(NewtonPolyhedron::new(setup.f())?)?,
                &one,
            )?),
            _ => None,
        };
        (Some(g), gn)
    } else {
        (None, None)
    };
    let epsilon = &(&gamma_q + &Rational::one()) - &alpha_max;
    Ok(Epsilon {
        gamma: gamma_q,
        epsilon,
        alpha_max,
        gamma_order,
        gamma_newton,
    })
}

pub fn epsilon_f(f: &Polynomial, hint: Option<&WeightSystem>) -> Result<Epsilon> {
    let setup = Setup::new(f, hint)?;
    let sp = steenbrink_spectrum_of(&setup.ma, &setup.cond)?;
    epsilon_of(&setup, &sp)
}

/// Everything the checks need, computed once.
pub struct Analysis {
    pub setup: Setup,
    pub table: GeneratorTable,
    pub steenbrink: Spectrum,
    pub hodge: VhiFiltration,
    pub tjurina: VhiFiltration,
    pub tau: usize,
    pub epsilon: Epsilon,
}

impl Analysis {
    pub fn new(f: &Polynomial, hint: Option<&WeightSystem>) -> Result<Self> {
        Self::from_setup(Setup::new(f, hint)?)
    }

    pub fn from_setup(setup: Setup) -> Result<Self> {
        let steenbrink = steenbrink_spectrum_of(&setup.ma, &setup.cond)?;
        let table = GeneratorTable::new(&setup);
        let hodge = v_hi_filtration_with(&setup, &table, Mode::Jacobian)?;
        let tjurina = v_hi_filtration_with(&setup, &table, Mode::JacobianAndF)?;
        let tau = crate::localalg::tjurina_number(&setup.ma)?;
        if tjurina.graded.total() != tau {
            return Err(Error::Inconsistent(format!(
                "Tjurina subspectrum has {} entries, tau = {tau}",
                tjurina.graded.total()
            )));
        }
        let epsilon = epsilon_of(&setup, &steenbrink)?;
        Ok(Analysis {
            setup,
            table,
            steenbrink,
            hodge,
            tjurina,
            tau,
            epsilon,
        })
    }

    pub fn mu(&self) -> usize {
        self.setup.ma.mu()
    }

    pub fn hi_spectrum(&self) -> &Spectrum {
        &self.hodge.graded
    }

    pub fn tj_spectrum(&self) -> &Spectrum {
        &self.tjurina.graded
    }
}

pub fn hodge_ideal_spectrum(f: &Polynomial, hint: Option<&WeightSystem>) -> Result<Spectrum> {
    let setup = Setup::new(f, hint)?;
    Ok(v_hi_filtration_with(&setup, &GeneratorTable::new(&setup), Mode::Jacobian)?.graded)
}

pub fn tjurina_subspectrum(f: &Polynomial, hint: Option<&WeightSystem>) -> Result<Spectrum> {
    let setup = Setup::new(f, hint)?;
    Ok(v_hi_filtration_with(&setup, &GeneratorTable::new(&setup), Mode::JacobianAndF)?.graded)
}

/// Rank of the classes of `gens` in `A / V^{>beta} A`.
pub fn rank_modulo_order(ma: &MilnorAlgebra, gens: &[Polynomial], beta: &Rational) -> usize {
    let mut id = ma.ideal();
    let high: Vec<SparseVec> = (0..ma.mu())
        .filter(|&k| ma.basis_order(k).is_some_and(|o| o > beta))
        .map(|k| vec![(k as u32, Rational::one())])
        .collect();
    id.add_span(&high);
    let vs: Vec<SparseVec> = gens.iter().map(|g| ma.nf(g)).collect();
    id.add_span(&vs)
}
