use crate::error::Result;
use crate::hodge::generators::{hodge_ideal_member, Modulo};
use crate::hodge::invariants::Analysis;
use crate::hodge::vhi::{unit_representative, v_hi_subspace, Mode};
use crate::newton::gamma;
use crate::polycore::{Monomial, Polynomial, Rational};

/// Outcome of one executable check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: &'static str,
    pub applicable: bool,
    /// `None` when not applicable.
    pub holds: Option<bool>,
    pub notes: Vec<(String, String)>,
}

impl CheckReport {
    fn new(name: &'static str) -> Self {
        CheckReport {
            name,
            applicable: true,
            holds: None,
            notes: Vec::new(),
        }
    }

    fn note(&mut self, key: &str, value: impl ToString) {
        self.notes.push((key.to_string(), value.to_string()));
    }

    fn skip(mut self, why: &str) -> Self {
        self.applicable = false;
        self.holds = None;
        self.note("reason", why);
        self
    }

    pub fn passed(&self) -> bool {
        self.holds == Some(true)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.notes.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

fn not_double_point(an: &Analysis) -> bool {
    an.setup.f().order().unwrap() >= 3
}

fn hi_max(an: &Analysis) -> &Rational {
    an.hi_spectrum().max().unwrap()
}

/// Whether `f Ω_f = V^{α_max} Ω_f`.
pub fn top_piece_is_f(an: &Analysis) -> bool {
    let ma = &an.setup.ma;
    let amax = &an.epsilon.alpha_max;
    let v = ma.nf(an.setup.f());
    an.mu() - an.tau == 1
        && !v.is_empty()
        && v.iter().all(|(k, _)| ma.basis_order(*k as usize).unwrap() >= amax)
}

pub fn theorem1_check(an: &Analysis) -> CheckReport {
    let r = CheckReport::new("thm1");
    if !not_double_point(an) {
        return r.skip("f is a double point");
    }
    if !top_piece_is_f(an) {
        return r.skip("f Omega_f is not the top graded piece");
    }
    let mut r = r;
    let eps = &an.epsilon.epsilon;
    let diff = hi_max(an) - &an.epsilon.alpha_max;
    let expect = if eps.is_positive() { eps.clone() } else { Rational::zero() };
    r.note("epsilon_f", eps);
    r.note("hi_max_minus_max", &diff);
    let differs = an.hi_spectrum() != &an.steenbrink;
    r.note("spectra_differ", differs);
    r.holds = Some(diff == expect && differs == eps.is_positive());
    r
}

pub fn theorem2_check(an: &Analysis) -> CheckReport {
    let r = CheckReport::new("thm2");
    if !not_double_point(an) {
        return r.skip("f is a double point");
    }
    if !an.epsilon.epsilon.is_positive() {
        return r.skip("epsilon_f <= 0");
    }
    if an.mu() == an.tau {
        return r.skip("mu = tau");
    }
    let mut r = r;
    let amax = &an.epsilon.alpha_max;
    let holds = match an.hi_spectrum().difference(an.tj_spectrum()) {
        Some(extra) => {
            r.note("extra", &extra);
            extra.total() == an.mu() - an.tau && extra.min().is_some_and(|m| m > amax)
        }
        None => {
            r.note("extra", "Tjurina subspectrum is not contained in the Hodge-ideal spectrum");
            false
        }
    };
    r.holds = Some(holds && an.hi_spectrum() != &an.steenbrink);
    r
}

/// Monomials in the variables `vars`, of degree below `bound`, such that `f g ∉ (∂f)` and `score(g) > α_max`.
fn search<F>(an: &Analysis, vars: usize, bound: u32, score: F) -> Option<Monomial>
where
    F: Fn(&Polynomial) -> Result<Rational>,
{
    let n = an.setup.n();
    let f = an.setup.f();
    Monomial::below_degree(n, bound)
        .into_iter()
        .filter(|m| m.exps()[vars..].iter().all(|&e| e == 0))
        .find(|m| {
            let g = Polynomial::monomial(m.clone());
            score(&g).is_ok_and(|s| s > an.epsilon.alpha_max) && !an.setup.ma.is_zero(&(f * &g))
        })
}

pub fn theorem3_witness(an: &Analysis) -> (Option<Monomial>, CheckReport) {
    let mut r = CheckReport::new("thm3");
    let bound = an.setup.ma.k_j();
    r.note("degree_cap", bound);
    let found = search(an, an.setup.n(), bound, |g| {
        Ok(gamma(&an.setup.order, g)? + Rational::one())
    });
    match &found {
        Some(m) => {
            r.note("witness", format!("{:?}", m.exps()));
            r.holds = Some(hi_max(an) > &an.epsilon.alpha_max);
        }
        None => {
            r.note("witness", "none");
            r.holds = Some(true);
        }
    }
    (found, r)
}

/// Whether `x_n` occurs only in a term `c x_n²`.
pub fn splits_off_square(f: &Polynomial) -> bool {
    let last = f.n() - 1;
    let hits: Vec<&Monomial> = f.terms().map(|(m, _)| m).filter(|m| m.exps()[last] > 0).collect();
    hits.len() == 1 && hits[0].exps()[last] == 2 && hits[0].degree() == 2
}

/// Membership of `g` in `I_p(αZ)` where `α + p = level`.
fn member_at(an: &Analysis, level: &Rational, extra_p: usize, g: &Polynomial, modulo: Modulo) -> Result<bool> {
    let alpha = unit_representative(level);
    let p = (level - &alpha).to_i64_pair().map_or(0, |(q, _)| q) as usize;
    hodge_ideal_member(&an.setup, &alpha, p + extra_p, g, modulo)
}

pub fn prop1_check(an: &Analysis) -> Result<CheckReport> {
    let r = CheckReport::new("prop1");
    let f = an.setup.f();
    let n = an.setup.n();
    if not_double_point(an) {
        return Ok(r.skip("f is not a double point"));
    }
    if an.mu() == an.tau {
        return Ok(r.skip("mu = tau"));
    }
    let unit = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !f.d(i).d(j).coeff(&Monomial::one(n)).is_zero());
    let Some((i, j)) = unit else {
        return Ok(r.skip("no second derivative of f is a unit"));
    };
    let mut r = r;
    let a1 = an.steenbrink.min().unwrap().clone();
    let one = Polynomial::one(n);
    let fj = f.d(j);
    let step1 = member_at(an, &a1, 0, &one, Modulo::Nothing)?;
    let step2 = member_at(an, &a1, 1, &fj, Modulo::Nothing)?;
    let step3 = member_at(an, &a1, 2, &(f * &fj.d(i)), Modulo::Jacobian)?;
    let top = &a1 + &Rational::from(2);
    let mut v = v_hi_subspace(&an.setup, &an.table, &top, Mode::Jacobian);
    let in_v = v.contains(&an.setup.ma.nf(f));
    r.note("unit_second_derivative", format!("({i},{j})"));
    r.note("one_in_I_p", step1);
    r.note("f_j_in_I_p+1", step2);
    r.note("f_f_ij_in_I_p+2", step3);
    r.note("f_in_V_HI", in_v);
    let extra_ok = an
        .hi_spectrum()
        .difference(an.tj_spectrum())
        .is_some_and(|e| e.min().is_some_and(|m| m >= &top));
    let mut holds = step1 && step2 && step3 && in_v && extra_ok;
    let half = Rational::new(n as i64, 2) - Rational::one();
    if a1 > half {
        let differs = an.hi_spectrum() != &an.steenbrink;
        r.note("spectra_differ", differs);
        holds &= differs;
    }
    r.holds = Some(holds);
    Ok(r)
}

pub fn prop2_witness(an: &Analysis) -> Result<(Option<Monomial>, CheckReport)> {
    let r = CheckReport::new("prop2");
    let f = an.setup.f();
    let n = an.setup.n();
    if n < 2 || !splits_off_square(f) {
        return Ok((None, r.skip("f is not of the form h + c x_n^2")));
    }
    let mut r = r;
    let bound = an.setup.ma.k_j();
    r.note("degree_cap", bound);
    let order = &an.setup.order;
    let found = search(an, n - 1, bound, |g| {
        Ok(order.of_monomial(g.leading().unwrap().0) + Rational::from(2))
    });
    match &found {
        Some(m) => {
            let g = Polynomial::monomial(m.clone());
            let v = order.of_monomial(m);
            let xn = Polynomial::var(n, n - 1);
            let step1 = member_at(an, &v, 0, &g, Modulo::Nothing)?;
            let step2 = member_at(an, &v, 1, &(&g * &xn), Modulo::Nothing)?;
            let step3 = member_at(an, &v, 2, &(f * &g), Modulo::Jacobian)?;
            r.note("witness", format!("{:?}", m.exps()));
            r.note("g_in_I_p", step1);
            r.note("g_x_n_in_I_p+1", step2);
            r.note("f_g_in_I_p+2", step3);
            r.holds = Some(step1 && step2 && step3 && hi_max(an) > &an.epsilon.alpha_max);
        }
        None => {
            r.note("witness", "none");
            r.holds = Some(true);
        }
    }
    Ok((found, r))
}
