use crate::error::{Error, Result};
use crate::localalg::echelon::{Echelon, SparseVec};
use crate::localalg::space::TruncatedSpace;
use crate::newton::FiltrationOrder;
use crate::polycore::{Monomial, Polynomial, Rational, Spectrum};

/// Largest truncation degree tried before giving up.
pub const DEFAULT_CAP: u32 = 64;

const NONE: u32 = u32::MAX;

/// Row-reduced span of `{x^ν g_j}` inside `ℚ[x]/𝔪^N`, usually with `g_j = f_j`.
#[derive(Clone)]
pub struct JacobianSpan {
    space: TruncatedSpace,
    ech: Echelon,
}

fn check_input(f: &Polynomial) -> Result<Vec<Polynomial>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let partials: Vec<Polynomial> = (0..f.n()).map(|i| f.d(i)).collect();
    if partials.iter().all(Polynomial::is_zero) {
        return Err(Error::ZeroJacobian);
    }
    if f.order().unwrap() < 2 {
        return Err(Error::Unsupported(
            "f must lie in m^2 (no constant or linear terms)".into(),
        ));
    }
    Ok(partials)
}

fn insert_multiples(space: &TruncatedSpace, ech: &mut Echelon, gens: &[&Polynomial]) {
    let n = space.n();
    let bound = space.bound();
    let mut rows: Vec<SparseVec> = Vec::new();
    for g in gens {
        let Some(o) = g.order() else { continue };
        if o >= bound {
            continue;
        }
        for nu in Monomial::below_degree(n, bound - o) {
            let v = space.shifted_vector(g, &nu);
            if !v.is_empty() {
                rows.push(v);
            }
        }
    }
    rows.sort_by(|a, b| a[0].0.cmp(&b[0].0).then(a.len().cmp(&b.len())));
    for r in &rows {
        ech.insert(r);
    }
}

impl JacobianSpan {
    pub fn new(f: &Polynomial, bound: u32, order: Option<&FiltrationOrder>) -> Result<Self> {
        let partials = check_input(f)?;
        let space = TruncatedSpace::new(f.n(), bound, order);
        let mut ech = Echelon::new(space.dim());
        let refs: Vec<&Polynomial> = partials.iter().collect();
        insert_multiples(&space, &mut ech, &refs);
        ech.make_reduced();
        Ok(JacobianSpan { space, ech })
    }

    /// Span of the multiples of arbitrary generators.
    pub fn from_generators(n: usize, gens: &[Polynomial], bound: u32, order: Option<&FiltrationOrder>) -> Self {
        let space = TruncatedSpace::new(n, bound, order);
        let mut ech = Echelon::new(space.dim());
        let refs: Vec<&Polynomial> = gens.iter().collect();
        insert_multiples(&space, &mut ech, &refs);
        ech.make_reduced();
        JacobianSpan { space, ech }
    }

    pub fn space(&self) -> &TruncatedSpace {
        &self.space
    }

    /// `dim ℚ[x]/𝔪^N − dim span`.
    pub fn codim(&self) -> usize {
        self.space.dim() - self.ech.rank()
    }

    pub fn contains(&mut self, g: &Polynomial) -> bool {
        let v = self.space.vector(g);
        self.ech.contains(&v)
    }

    fn column_in_span(&self, c: u32) -> bool {
        self.ech.pivot_row(c).is_some_and(|r| r.len() == 1)
    }

    /// Whether every monomial of degree `d` lies in the span.
    pub fn contains_degree(&self, d: u32) -> bool {
        Monomial::of_degree(self.space.n(), d)
            .iter()
            .all(|m| self.column_in_span(self.space.column(m).unwrap()))
    }
}

/// `ℚ[x]/(∂f)` for an isolated singularity, with normal forms.
#[derive(Clone)]
pub struct MilnorAlgebra {
    f: Polynomial,
    order: Option<FiltrationOrder>,
    span: JacobianSpan,
    std_cols: Vec<u32>,
    pos: Vec<u32>,
    k_j: u32,
    mult: Vec<Vec<SparseVec>>,
}

impl MilnorAlgebra {
    pub fn new(f: &Polynomial) -> Result<Self> {
        Self::build(f, None, None)
    }

    /// Standard monomials are chosen compatibly with `order`.
    pub fn with_order(f: &Polynomial, order: &FiltrationOrder) -> Result<Self> {
        Self::build(f, Some(order), None)
    }

    /// Fixed or adaptive truncation; a fixed `N` that fails the
    /// certificate yields [`Error::CapExceeded`].
    pub fn build(f: &Polynomial, order: Option<&FiltrationOrder>, trunc: Option<u32>) -> Result<Self> {
        check_input(f)?;
        let n = f.n();
        let deg = f.degree().unwrap();
        let mut bound = trunc.unwrap_or((2 * deg).max(n as u32 + 2));
        loop {
            let span = JacobianSpan::new(f, bound, order)?;
            // Nakayama: 𝔪^{N-2} ⊂ (∂f) + 𝔪^N forces 𝔪^{N-2} ⊂ (∂f).
            if span.contains_degree(bound - 2) {
                return Ok(Self::finish(f, order, span));
            }
            if trunc.is_some() {
                return Err(Error::CapExceeded(format!(
                    "truncation {bound} does not contain m^{}",
                    bound - 2
                )));
            }
            bound += 4;
            if bound > DEFAULT_CAP {
                return Err(Error::NonIsolated { cap: DEFAULT_CAP as usize });
            }
        }
    }

    fn finish(f: &Polynomial, order: Option<&FiltrationOrder>, span: JacobianSpan) -> Self {
        let bound = span.space.bound();
        let k_j = (0..bound).find(|&d| span.contains_degree(d)).unwrap();
        let std_cols = span.ech.free_columns();
        let mut pos = vec![NONE; span.space.dim()];
        for (k, &c) in std_cols.iter().enumerate() {
            pos[c as usize] = k as u32;
        }
        let mut ma = MilnorAlgebra {
            f: f.clone(),
            order: order.cloned(),
            span,
            std_cols,
            pos,
            k_j,
            mult: Vec::new(),
        };
        let n = f.n();
        ma.mult = (0..n)
            .map(|i| {
                ma.std_cols
                    .iter()
                    .map(|&c| {
                        let m = ma.span.space.monomial(c).mul_var(i);
                        match ma.span.space.column(&m) {
                            Some(c2) => ma.nf_column(c2),
                            None => Vec::new(),
                        }
                    })
                    .collect()
            })
            .collect();
        ma
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn mu(&self) -> usize {
        self.std_cols.len()
    }

    pub fn truncation(&self) -> u32 {
        self.span.space.bound()
    }

    /// Least `k` with `𝔪^k ⊂ (∂f)`.
    pub fn k_j(&self) -> u32 {
        self.k_j
    }

    pub fn order(&self) -> Option<&FiltrationOrder> {
        self.order.as_ref()
    }

    pub fn space(&self) -> &TruncatedSpace {
        &self.span.space
    }

    pub fn jacobian_span(&self) -> &JacobianSpan {
        &self.span
    }

    /// Standard monomials forming a basis of the algebra.
    pub fn basis_monomials(&self) -> Vec<Monomial> {
        self.std_cols
            .iter()
            .map(|&c| self.span.space.monomial(c).clone())
            .collect()
    }

    pub fn basis_monomial(&self, k: usize) -> &Monomial {
        self.span.space.monomial(self.std_cols[k])
    }

    /// Filtration order of the `k`-th basis monomial.
    pub fn basis_order(&self, k: usize) -> Option<&Rational> {
        self.span.space.order(self.std_cols[k])
    }

    fn nf_column(&self, c: u32) -> SparseVec {
        let p = self.pos[c as usize];
        if p != NONE {
            return vec![(p, Rational::one())];
        }
        match self.span.ech.pivot_row(c) {
            Some(row) => row[1..]
                .iter()
                .map(|(cc, x)| (self.pos[*cc as usize], -x))
                .collect(),
            None => Vec::new(),
        }
    }

    /// Coordinates of `g` over the basis monomials.
    pub fn nf(&self, g: &Polynomial) -> SparseVec {
        let mut acc = vec![Rational::zero(); self.mu()];
        let bound = self.truncation();
        for (m, c) in g.terms() {
            if m.degree() >= bound {
                continue;
            }
            for (k, x) in self.nf_column(self.span.space.column(m).unwrap()) {
                acc[k as usize] += &(c * &x);
            }
        }
        collect(acc)
    }

    /// Normal form as a polynomial in the basis monomials.
    pub fn reduce(&self, g: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.n());
        for (k, x) in self.nf(g) {
            out.add_term(self.basis_monomial(k as usize).clone(), &x);
        }
        out
    }

    pub fn is_zero(&self, g: &Polynomial) -> bool {
        self.nf(g).is_empty()
    }

    /// `x_i · v` in basis coordinates.
    pub fn mul_var(&self, i: usize, v: &[(u32, Rational)]) -> SparseVec {
        let mut acc = vec![Rational::zero(); self.mu()];
        for (b, x) in v {
            for (k, y) in &self.mult[i][*b as usize] {
                acc[*k as usize] += &(x * y);
            }
        }
        collect(acc)
    }

    /// An empty ideal of the algebra.
    pub fn ideal(&self) -> IdealSpan {
        IdealSpan {
            ech: Echelon::new(self.mu()),
        }
    }

    /// The ideal generated by the classes of `gens`.
    pub fn ideal_of(&self, gens: &[Polynomial]) -> IdealSpan {
        let mut id = self.ideal();
        let vs: Vec<SparseVec> = gens.iter().map(|g| self.nf(g)).collect();
        id.add(self, vs);
        id
    }

    /// `fA`, the image of the Tjurina ideal.
    pub fn f_ideal(&self) -> IdealSpan {
        self.ideal_of(std::slice::from_ref(&self.f))
    }

    pub fn tau(&self) -> usize {
        self.mu() - self.f_ideal().dim()
    }

    /// Basis orders as a multiset (needs a filtration order).
    pub fn spectrum(&self) -> Option<Spectrum> {
        self.order.as_ref()?;
        Some(Spectrum::from_entries(
            self.n(),
            (0..self.mu()).map(|k| (self.basis_order(k).unwrap().clone(), 1)),
        ))
    }

    /// Orders of a filtration-compatible basis of `A / I`.
    pub fn quotient_spectrum(&self, ideal: &IdealSpan) -> Option<Spectrum> {
        self.order.as_ref()?;
        Some(Spectrum::from_entries(
            self.n(),
            ideal
                .ech
                .free_columns()
                .into_iter()
                .map(|k| (self.basis_order(k as usize).unwrap().clone(), 1)),
        ))
    }
}

fn collect(acc: Vec<Rational>) -> SparseVec {
    acc.into_iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(k, x)| (k as u32, x))
        .collect()
}

/// An ideal of the Milnor algebra, kept as an echelon span over basis coordinates.
#[derive(Clone)]
pub struct IdealSpan {
    ech: Echelon,
}

impl IdealSpan {
    pub fn dim(&self) -> usize {
        self.ech.rank()
    }

    pub fn contains(&mut self, v: &[(u32, Rational)]) -> bool {
        self.ech.contains(v)
    }

    /// Adds the ideal generated by `gens`. Returns how much the dimension grew.
    pub fn add(&mut self, ma: &MilnorAlgebra, gens: Vec<SparseVec>) -> usize {
        let before = self.dim();
        let mut work = gens;
        while let Some(v) = work.pop() {
            if v.is_empty() {
                continue;
            }
            if self.ech.insert(&v).is_some() {
                for i in 0..ma.n() {
                    let w = ma.mul_var(i, &v);
                    if !w.is_empty() {
                        work.push(w);
                    }
                }
            }
        }
        self.dim() - before
    }

    /// Adds single vectors without closing under multiplication.
    pub fn add_span(&mut self, gens: &[SparseVec]) -> usize {
        let before = self.dim();
        for v in gens {
            self.ech.insert(v);
        }
        self.dim() - before
    }

    pub fn echelon(&self) -> &Echelon {
        &self.ech
    }
}
