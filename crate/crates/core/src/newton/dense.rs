//! Small dense exact linear algebra used by the polyhedral code.

use crate::polycore::Rational;

/// Row-reduces `m` in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (k, row) in m.iter_mut().enumerate() {
            if k != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : m·x = 0}` for an `r × n` matrix.
pub fn nullspace(rows: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -&m[r][free];
        }
        basis.push(v);
    }
    basis
}

/// Affine dimension of a finite point set (−1 for the empty set).
pub fn affine_dim(points: &[Vec<Rational>]) -> isize {
    if points.is_empty() {
        return -1;
    }
    let diffs: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(&points[0]).map(|(a, b)| a - b).collect())
        .collect();
    rank(&diffs) as isize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn nullspace_of_plane() {
        let ns = nullspace(&[v(&[1, 1, 1])], 3);
        assert_eq!(ns.len(), 2);
        for b in &ns {
            let s: Rational = b.iter().sum();
            assert!(s.is_zero());
        }
    }

    #[test]
    fn affine_dims() {
        assert_eq!(affine_dim(&[v(&[1, 0]), v(&[0, 1]), v(&[2, -1])]), 1);
        assert_eq!(affine_dim(&[v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]), 2);
        assert_eq!(affine_dim(&[v(&[3, 3])]), 0);
    }
}
