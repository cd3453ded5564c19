use crate::error::{Error, Result};
use crate::localalg::echelon::SparseVec;
use crate::localalg::{condition_a, ConditionA, IdealSpan, JacobianSpan, MilnorAlgebra};
use crate::newton::FiltrationOrder;
use crate::polycore::{eval_symbolic, op_p_symbolic_step, Monomial, Polynomial, Rational, WeightSystem};

/// A germ together with its condition-(A) filtration and Milnor algebra.
#[derive(Clone)]
pub struct Setup {
    pub cond: ConditionA,
    pub order: FiltrationOrder,
    pub ma: MilnorAlgebra,
    partials: Vec<Polynomial>,
}

impl Setup {
    pub fn new(f: &Polynomial, hint: Option<&WeightSystem>) -> Result<Self> {
        Self::with_truncation(f, hint, None)
    }

    pub fn with_truncation(f: &Polynomial, hint: Option<&WeightSystem>, trunc: Option<u32>) -> Result<Self> {
        let cond = condition_a(f, hint)?;
        let order = cond.order(f)?;
        let ma = MilnorAlgebra::build(f, Some(&order), trunc)?;
        let partials = (0..f.n()).map(|i| f.d(i)).collect();
        Ok(Setup {
            cond,
            order,
            ma,
            partials,
        })
    }

    pub fn f(&self) -> &Polynomial {
        self.ma.f()
    }

    pub fn n(&self) -> usize {
        self.ma.n()
    }

    pub fn partials(&self) -> &[Polynomial] {
        &self.partials
    }

    /// `ord f − 1`: the least degree increase of one factor `P(i, β)`.
    pub fn step_degree(&self) -> u32 {
        self.f().order().unwrap() - 1
    }

    pub fn order_of_monomial(&self, m: &Monomial) -> Rational {
        self.order.of_monomial(m)
    }
}

/// Monomials of degree `< bound` whose order is at least `beta`.
pub fn filtration_monomials(order: &FiltrationOrder, beta: &Rational, bound: u32) -> Vec<Monomial> {
    Monomial::below_degree(order.n(), bound)
        .into_iter()
        .filter(|m| &order.of_monomial(m) >= beta)
        .collect()
}

/// All index sequences in `[0, n)^k`.
pub fn index_sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|s| {
                (0..n).map(move |i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Generators `P~(I, α) x^ν` of `I_p(αZ)`, truncated below `bound`.
#[derive(Clone, Debug)]
pub struct HodgeIdealGenSet {
    pub alpha: Rational,
    pub p: usize,
    pub bound: u32,
    pub generators: Vec<Polynomial>,
}

pub(crate) fn check_alpha(alpha: &Rational) -> Result<()> {
    if !alpha.is_positive() || alpha > &Rational::one() {
        return Err(Error::InvalidArgument(format!("alpha = {alpha} is not in (0, 1]")));
    }
    Ok(())
}

/// One generator family member: `k` operator factors applied to `x^ν`.
#[derive(Clone, Debug)]
pub struct GenKey {
    pub seq: Vec<usize>,
    pub nu: Monomial,
    /// `ord(x^ν) + k`: the largest `α + p` at which this generator occurs.
    pub level: Rational,
}

impl GenKey {
    pub fn k(&self) -> usize {
        self.seq.len()
    }
}

/// Every generator that can be nonzero below degree `bound`, for `k ≤ k_max`.
///
/// Terms of `P~(I, α) x^ν` have degree at least `|ν| + k (ord f − 1)`.
pub fn generator_keys(setup: &Setup, k_max: usize, bound: u32) -> Vec<GenKey> {
    let n = setup.n();
    let step = setup.step_degree();
    let mut out = Vec::new();
    for k in 0..=k_max {
        let shift = k as u32 * step;
        if shift >= bound {
            break;
        }
        let monos = Monomial::below_degree(n, bound - shift);
        let seqs = index_sequences(n, k);
        for nu in &monos {
            let level = setup.order_of_monomial(nu) + Rational::from(k);
            for s in &seqs {
                out.push(GenKey {
                    seq: s.clone(),
                    nu: nu.clone(),
                    level: level.clone(),
                });
            }
        }
    }
    out
}

/// Largest `k` for which some generator survives below `bound`.
pub fn max_operator_count(setup: &Setup, bound: u32) -> usize {
    let step = setup.step_degree().max(1);
    ((bound - 1) / step) as usize
}

/// `G_t` with `P~(I, α) x^ν ≡ Σ_t α^t G_t` below degree `bound`.
pub fn symbolic_generator(setup: &Setup, key: &GenKey, bound: u32) -> Vec<Polynomial> {
    let f = setup.f();
    let mut cur = vec![Polynomial::monomial(key.nu.clone()).truncate(bound)];
    for (j, &i) in key.seq.iter().enumerate() {
        cur = op_p_symbolic_step(f, &setup.partials()[i], i, j, &cur, bound);
    }
    cur
}

/// Normal forms of the `G_t` in the Milnor algebra.
pub fn symbolic_generator_nf(setup: &Setup, key: &GenKey) -> Vec<SparseVec> {
    let bound = setup.ma.k_j();
    symbolic_generator(setup, key, bound)
        .iter()
        .map(|g| setup.ma.nf(g))
        .collect()
}

/// `Σ_t α^t v_t`.
pub fn eval_vectors(coeffs: &[SparseVec], alpha: &Rational) -> SparseVec {
    let mut acc: std::collections::BTreeMap<u32, Rational> = std::collections::BTreeMap::new();
    let mut pw = Rational::one();
    for v in coeffs {
        if !pw.is_zero() {
            for (c, x) in v {
                *acc.entry(*c).or_insert_with(Rational::zero) += &(x * &pw);
            }
        }
        pw = &pw * alpha;
    }
    acc.into_iter().filter(|(_, x)| !x.is_zero()).collect()
}

/// Every generator that can be nonzero in the Milnor algebra, with its normal-form coefficients.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub keys: Vec<GenKey>,
    pub coeffs: Vec<Vec<SparseVec>>,
}

impl GeneratorTable {
    pub fn new(setup: &Setup) -> Self {
        let bound = setup.ma.k_j();
        let keys = generator_keys(setup, max_operator_count(setup, bound.max(1)), bound);
        let coeffs = keys.iter().map(|k| symbolic_generator_nf(setup, k)).collect();
        GeneratorTable { keys, coeffs }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Indices of the generators of `I_p(αZ)`.
    pub fn indices_for(&self, alpha: &Rational, p: usize) -> Vec<usize> {
        let target = alpha + &Rational::from(p);
        (0..self.len())
            .filter(|&t| self.keys[t].k() <= p && self.keys[t].level >= target)
            .collect()
    }

    /// `I_p(αZ)` modulo `(∂f)`.
    pub fn ideal(&self, ma: &MilnorAlgebra, alpha: &Rational, p: usize) -> IdealSpan {
        let vs = self
            .indices_for(alpha, p)
            .into_iter()
            .map(|t| eval_vectors(&self.coeffs[t], alpha))
            .collect();
        let mut id = ma.ideal();
        id.add(ma, vs);
        id
    }
}

/// Keys of the generators of `I_p(αZ)`: `k ≤ p` and `ord(x^ν) ≥ α + p − k`.
pub fn keys_for(setup: &Setup, alpha: &Rational, p: usize, bound: u32) -> Vec<GenKey> {
    let target = alpha + &Rational::from(p);
    generator_keys(setup, p, bound)
        .into_iter()
        .filter(|key| key.level >= target)
        .collect()
}

pub fn hodge_ideal_generators(setup: &Setup, alpha: &Rational, p: usize, bound: u32) -> Result<HodgeIdealGenSet> {
    check_alpha(alpha)?;
    let generators = keys_for(setup, alpha, p, bound)
        .iter()
        .map(|key| eval_symbolic(&symbolic_generator(setup, key, bound), alpha))
        .filter(|g| !g.is_zero())
        .collect();
    Ok(HodgeIdealGenSet {
        alpha: alpha.clone(),
        p,
        bound,
        generators,
    })
}

/// `I_p(αZ)` as an ideal of the Milnor algebra.
pub fn hodge_ideal_mod_jacobian(setup: &Setup, alpha: &Rational, p: usize) -> Result<IdealSpan> {
    check_alpha(alpha)?;
    let ma = &setup.ma;
    let vs: Vec<SparseVec> = keys_for(setup, alpha, p, ma.k_j())
        .iter()
        .map(|key| eval_vectors(&symbolic_generator_nf(setup, key), alpha))
        .collect();
    let mut id = ma.ideal();
    id.add(ma, vs);
    Ok(id)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Modulo {
    Nothing,
    Jacobian,
    JacobianAndF,
}

/// Least `d` with every degree-`d` monomial of order `≥ beta`.
fn saturation_degree(order: &FiltrationOrder, beta: &Rational, cap: u32) -> Option<u32> {
    (0..=cap).find(|&d| Monomial::of_degree(order.n(), d).iter().all(|m| &order.of_monomial(m) >= beta))
}

/// Membership of `g` in `I_p(αZ)`, optionally modulo `(∂f)` or `(∂f, f)`.
pub fn hodge_ideal_member(setup: &Setup, alpha: &Rational, p: usize, g: &Polynomial, modulo: Modulo) -> Result<bool> {
    check_alpha(alpha)?;
    if g.is_zero() {
        return Ok(true);
    }
    match modulo {
        Modulo::Jacobian | Modulo::JacobianAndF => {
            let mut id = hodge_ideal_mod_jacobian(setup, alpha, p)?;
            if modulo == Modulo::JacobianAndF {
                id.add(&setup.ma, vec![setup.ma.nf(setup.f())]);
            }
            Ok(id.contains(&setup.ma.nf(g)))
        }
        Modulo::Nothing => {
            // The k = 0 part contains 𝔪^K, so working modulo 𝔪^K is exact.
            let beta = alpha + &Rational::from(p);
            let k = saturation_degree(&setup.order, &beta, crate::localalg::milnor::DEFAULT_CAP).ok_or_else(|| {
                Error::Unsupported("the order filtration contains no power of m at this level".into())
            })?;
            let bound = k.max(g.degree().unwrap() + 1) + 2;
            let gens = hodge_ideal_generators(setup, alpha, p, bound)?.generators;
            let mut span = JacobianSpan::from_generators(setup.n(), &gens, bound, None);
            Ok(span.contains(g))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::parse_polynomial;

    fn p(s: &str, vars: &[&str]) -> Polynomial {
        let v: Vec<String> = vars.iter().map(|x| x.to_string()).collect();
        parse_polynomial(s, &v).unwrap()
    }

    fn ws(w: &[(i64, i64)]) -> WeightSystem {
        WeightSystem::new(w.iter().map(|&(a, b)| Rational::new(a, b)).collect()).unwrap()
    }

    fn r(a: i64, b: i64) -> Rational {
        Rational::new(a, b)
    }

    #[test]
    fn filtration_levels() {
        let o = FiltrationOrder::weight(ws(&[(1, 3), (1, 3)]));
        let all = filtration_monomials(&o, &r(2, 3), 5);
        assert_eq!(all.len(), 15);
        let above = filtration_monomials(&o, &r(1, 1), 5);
        assert_eq!(above.len(), 14);
        assert!(above.iter().all(|m| m.degree() >= 1));
        let o3 = FiltrationOrder::weight(ws(&[(1, 9), (1, 10), (1, 11)]));
        let deg2: Vec<Monomial> = filtration_monomials(&o3, &r(173, 330), 3)
            .into_iter()
            .filter(|m| m.degree() == 2)
            .collect();
        assert_eq!(deg2, vec![Monomial::new(vec![2, 0, 0])]);
    }

    #[test]
    fn p_zero_is_order_ideal() {
        let f = p("x^5+y^4+x^3*y^2", &["x", "y"]);
        let s = Setup::new(&f, Some(&ws(&[(1, 5), (1, 4)]))).unwrap();
        let gs = hodge_ideal_generators(&s, &r(1, 2), 0, 6).unwrap();
        let want = filtration_monomials(&s.order, &r(1, 2), 6);
        assert_eq!(gs.generators.len(), want.len());
        assert!(gs.generators.iter().all(|g| g.len() == 1));
    }

    #[test]
    fn constants_give_partials() {
        let f = p("x^5+y^4+x^3*y^2", &["x", "y"]);
        let s = Setup::new(&f, Some(&ws(&[(1, 5), (1, 4)]))).unwrap();
        let alpha = r(9, 20);
        let gs = hodge_ideal_generators(&s, &alpha, 1, 30).unwrap();
        let fx = f.d(0).scale(&-alpha.clone());
        assert!(gs.generators.contains(&fx));
    }

    #[test]
    fn one_is_in_ideal_at_minimal_exponent() {
        let f = p("x^5+y^4+x^3*y^2", &["x", "y"]);
        let s = Setup::new(&f, Some(&ws(&[(1, 5), (1, 4)]))).unwrap();
        let one = Polynomial::one(2);
        assert!(hodge_ideal_member(&s, &r(9, 20), 0, &one, Modulo::Jacobian).unwrap());
        assert!(!hodge_ideal_member(&s, &r(1, 2), 0, &one, Modulo::Jacobian).unwrap());
        assert!(hodge_ideal_member(&s, &r(9, 20), 0, &one, Modulo::Nothing).unwrap());
        assert!(hodge_ideal_member(&s, &r(1, 2), 1, &Polynomial::zero(2), Modulo::Nothing).unwrap());
    }
}
