use crate::error::{Error, Result};
use crate::localalg::echelon::Echelon;
use crate::localalg::milnor::{JacobianSpan, MilnorAlgebra};
use crate::localalg::space::TruncatedSpace;
use crate::newton::nondegenerate::Verdict;
use crate::newton::swh::swh_structure;
use crate::newton::{is_nondegenerate, FiltrationOrder, NewtonPolyhedron};
use crate::polycore::{spectrum_product_formula, Monomial, Polynomial, Spectrum, WeightSystem};

/// `τ_f`, computed twice: as `μ − dim fA` and by direct elimination.
pub fn tjurina_number(ma: &MilnorAlgebra) -> Result<usize> {
    let via_ideal = ma.tau();
    let span = ma.jacobian_span();
    let mut gens: Vec<Polynomial> = (0..ma.n()).map(|i| ma.f().d(i)).collect();
    gens.push(ma.f().clone());
    let direct = JacobianSpan::from_generators(ma.n(), &gens, span.space().bound(), ma.order());
    if direct.codim() != via_ideal {
        return Err(Error::Inconsistent(format!(
            "Tjurina number {} by elimination, {} in the Milnor algebra",
            direct.codim(),
            via_ideal
        )));
    }
    Ok(via_ideal)
}

/// `dim O/((∂f), f, extra)`.
pub fn quotient_dim_with(ma: &MilnorAlgebra, extra: &[Polynomial]) -> usize {
    let mut gens = vec![ma.f().clone()];
    gens.extend(extra.iter().cloned());
    ma.mu() - ma.ideal_of(&gens).dim()
}

/// Whether `g ∈ (∂f)`, or `g ∈ (∂f) + (f)` when `include_f`.
pub fn ideal_membership(ma: &MilnorAlgebra, g: &Polynomial, include_f: bool) -> bool {
    let v = ma.nf(g);
    if v.is_empty() {
        return true;
    }
    include_f && ma.f_ideal().contains(&v)
}

/// Graded dimensions of the quotient filtration on `O/(∂f)` (or `O/((∂f), f)`).
pub fn filtered_quotient_dims(f: &Polynomial, order: &FiltrationOrder, include_f: bool) -> Result<Spectrum> {
    let ma = MilnorAlgebra::with_order(f, order)?;
    filtered_dims_of(&ma, include_f)
}

pub fn filtered_dims_of(ma: &MilnorAlgebra, include_f: bool) -> Result<Spectrum> {
    let sp = if include_f {
        ma.quotient_spectrum(&ma.f_ideal())
    } else {
        ma.spectrum()
    };
    sp.ok_or_else(|| Error::InvalidArgument("Milnor algebra built without a filtration order".into()))
}

/// Which hypothesis makes the spectrum computable.
#[derive(Clone, Debug)]
pub enum ConditionA {
    /// Semi-weighted-homogeneous for the given weights.
    Swh(WeightSystem),
    /// Non-degenerate Newton boundary.
    Nondegenerate,
    Both(WeightSystem),
}

impl ConditionA {
    /// The filtration order used downstream; weights win when both apply.
    pub fn order(&self, f: &Polynomial) -> Result<FiltrationOrder> {
        match self {
            ConditionA::Swh(w) | ConditionA::Both(w) => Ok(FiltrationOrder::weight(w.clone())),
            ConditionA::Nondegenerate => FiltrationOrder::newton(NewtonPolyhedron::new(f)?),
        }
    }

    pub fn weights(&self) -> Option<&WeightSystem> {
        match self {
            ConditionA::Swh(w) | ConditionA::Both(w) => Some(w),
            ConditionA::Nondegenerate => None,
        }
    }
}

/// Checks condition (A): semi-weighted-homogeneous for `hint`, or non-degenerate.
pub fn condition_a(f: &Polynomial, hint: Option<&WeightSystem>) -> Result<ConditionA> {
    let swh = match hint {
        Some(w) => {
            if w.n() != f.n() {
                return Err(Error::VariableMismatch {
                    expected: f.n(),
                    got: w.n(),
                });
            }
            swh_structure(f, w)?.is_swh
        }
        None => false,
    };
    let np = NewtonPolyhedron::new(f)?;
    let nd = np.has_scaling_facet()
        && match is_nondegenerate(f) {
            Verdict::Yes => true,
            Verdict::No(_) => false,
            Verdict::Unknown(_, why) if !swh => return Err(Error::CapExceeded(why)),
            Verdict::Unknown(..) => false,
        };
    match (swh, nd) {
        (true, true) => Ok(ConditionA::Both(hint.unwrap().clone())),
        (true, false) => Ok(ConditionA::Swh(hint.unwrap().clone())),
        (false, true) => Ok(ConditionA::Nondegenerate),
        (false, false) => Err(Error::Unsupported(
            "f is neither semi-weighted-homogeneous for the given weights nor Newton non-degenerate".into(),
        )),
    }
}

/// Steenbrink spectrum from a Milnor algebra built with the condition-(A) order.
pub fn steenbrink_spectrum_of(ma: &MilnorAlgebra, cond: &ConditionA) -> Result<Spectrum> {
    let f = ma.f();
    let from_algebra = filtered_dims_of(ma, false)?;
    let mut candidates = vec![("filtration", from_algebra)];
    if let Some(w) = cond.weights() {
        candidates.push(("product formula", spectrum_product_formula(w)?));
    }
    if let ConditionA::Both(_) = cond {
        let newton = FiltrationOrder::newton(NewtonPolyhedron::new(f)?)?;
        candidates.push(("Newton filtration", filtered_quotient_dims(f, &newton, false)?));
    }
    let (name0, sp0) = &candidates[0];
    for (name, sp) in &candidates[1..] {
        if sp != sp0 {
            return Err(Error::Inconsistent(format!(
                "spectrum via {name0} is {sp0}, via {name} is {sp}"
            )));
        }
    }
    Ok(candidates.swap_remove(0).1)
}

/// `Sp_f` under condition (A).
pub fn steenbrink_spectrum(f: &Polynomial, hint: Option<&WeightSystem>) -> Result<Spectrum> {
    let cond = condition_a(f, hint)?;
    let ma = MilnorAlgebra::with_order(f, &cond.order(f)?)?;
    steenbrink_spectrum_of(&ma, &cond)
}

/// Least `k` with `𝔪^{k+1} ⊂ 𝔪²(∂f)`.
pub fn determinacy_bound(ma: &MilnorAlgebra) -> u32 {
    let n = ma.n();
    let bound = ma.k_j() + 4;
    let space = TruncatedSpace::new(n, bound, None);
    let mut ech = Echelon::new(space.dim());
    for i in 0..n {
        let fi = ma.f().d(i);
        let Some(o) = fi.order() else { continue };
        for d in 2..bound.saturating_sub(o) {
            for nu in Monomial::of_degree(n, d) {
                let v = space.shifted_vector(&fi, &nu);
                if !v.is_empty() {
                    ech.insert(&v);
                }
            }
        }
    }
    // Nakayama: 𝔪^{k+1} ⊂ 𝔪²(∂f) + 𝔪^{k+2} suffices, so k + 2 ≤ bound.
    (1..bound - 1)
        .find(|&k| {
            Monomial::of_degree(n, k + 1).iter().all(|m| {
                let v = space.vector(&Polynomial::monomial(m.clone()));
                ech.contains(&v)
            })
        })
        .expect("m^{k_J+2} lies in m^2 (∂f)")
}
