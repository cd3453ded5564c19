//! Buchberger's algorithm over ℚ in the graded-lex order, with a reduction cap.

use crate::polycore::{Monomial, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// Reduced Gröbner basis.
    Basis(Vec<Polynomial>),
    /// The reduction budget ran out.
    Capped,
}

struct Budget {
    left: u64,
}

impl Budget {
    fn spend(&mut self) -> bool {
        if self.left == 0 {
            return false;
        }
        self.left -= 1;
        true
    }
}

fn lead(p: &Polynomial) -> (&Monomial, &Rational) {
    p.leading().expect("zero polynomial in basis")
}

fn monic(p: &Polynomial) -> Polynomial {
    let c = lead(p).1.recip();
    p.scale(&c)
}

fn lcm(a: &Monomial, b: &Monomial) -> Monomial {
    Monomial::new(a.exps().iter().zip(b.exps()).map(|(x, y)| *x.max(y)).collect())
}

fn coprime(a: &Monomial, b: &Monomial) -> bool {
    a.exps().iter().zip(b.exps()).all(|(x, y)| *x == 0 || *y == 0)
}

/// Full reduction of `p` by `basis`; `None` if the budget ran out.
fn reduce(p: &Polynomial, basis: &[Polynomial], budget: &mut Budget) -> Option<Polynomial> {
    let mut p = p.clone();
    let mut rem = Polynomial::zero(p.n());
    while let Some((m, c)) = p.leading().map(|(m, c)| (m.clone(), c.clone())) {
        match basis.iter().find(|g| lead(g).0.divides(&m)) {
            Some(g) => {
                if !budget.spend() {
                    return None;
                }
                let (gm, gc) = lead(g);
                let q = m.div(gm).unwrap();
                p = &p - &g.mul_monomial(&q).scale(&(&c / gc));
            }
            None => {
                rem.add_term(m.clone(), &c);
                p.add_term(m, &-c);
            }
        }
    }
    Some(rem)
}

fn s_poly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = lead(f);
    let (gm, gc) = lead(g);
    let l = lcm(fm, gm);
    let a = f.mul_monomial(&l.div(fm).unwrap()).scale(&fc.recip());
    let b = g.mul_monomial(&l.div(gm).unwrap()).scale(&gc.recip());
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `gens`, or [`Outcome::Capped`]
/// after `cap` elementary reduction steps.
pub fn groebner_basis(gens: &[Polynomial], cap: u64) -> Outcome {
    let mut budget = Budget { left: cap };
    let mut basis: Vec<Polynomial> = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for g in gens {
        let Some(r) = reduce(g, &basis, &mut budget) else {
            return Outcome::Capped;
        };
        if !r.is_zero() {
            let k = basis.len();
            basis.push(monic(&r));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let (mi, mj) = (lead(&basis[i]).0.clone(), lead(&basis[j]).0.clone());
        if coprime(&mi, &mj) {
            continue;
        }
        let l = lcm(&mi, &mj);
        // Chain criterion: a third element whose leading monomial divides the lcm
        // and whose pairs with i and j are already processed.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lead(&basis[k]).0.divides(&l)
                && !pairs.contains(&(i.min(k), i.max(k)))
                && !pairs.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j]);
        let Some(r) = reduce(&s, &basis, &mut budget) else {
            return Outcome::Capped;
        };
        if !r.is_zero() {
            let k = basis.len();
            basis.push(monic(&r));
            if lead(&basis[k]).0.degree() == 0 {
                return Outcome::Basis(vec![Polynomial::one(r.n())]);
            }
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // Minimalize and interreduce.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let m = lead(g).0;
        let redundant = basis.iter().enumerate().any(|(k2, h)| {
            let hm = lead(h).0;
            k2 != k && hm.divides(m) && (hm != m || k2 < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k2, _)| *k2 != k)
            .map(|(_, g)| g.clone())
            .collect();
        let Some(r) = reduce(&minimal[k], &others, &mut budget) else {
            return Outcome::Capped;
        };
        reduced.push(monic(&r));
    }
    reduced.sort_by(|a, b| lead(a).0.cmp(lead(b).0));
    Outcome::Basis(reduced)
}

/// Whether the basis describes the unit ideal.
pub fn is_unit(basis: &[Polynomial]) -> bool {
    basis.iter().any(|g| lead(g).0.degree() == 0)
}
