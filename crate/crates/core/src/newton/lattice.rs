//! Integer lattices spanned by exponent differences.

use num_integer::Integer;

/// Row-style Hermite normal form of the lattice spanned by `gens`.
///
/// Returns a basis (nonzero rows, echelon with positive pivots).
pub fn hermite_basis(gens: &[Vec<i64>], n: usize) -> Vec<Vec<i64>> {
    let mut rows: Vec<Vec<i128>> = gens
        .iter()
        .map(|g| g.iter().map(|&x| x as i128).collect())
        .filter(|g: &Vec<i128>| g.iter().any(|&x| x != 0))
        .collect();
    let mut basis: Vec<Vec<i128>> = Vec::new();
    for col in 0..n {
        // Euclid on column `col` among the remaining rows.
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&k| rows[k][col] != 0).collect();
            if nz.len() <= 1 {
                break;
            }
            let p = *nz.iter().min_by_key(|&&k| rows[k][col].abs()).unwrap();
            for &k in &nz {
                if k != p {
                    let q = Integer::div_floor(&rows[k][col], &rows[p][col]);
                    let pr = rows[p].clone();
                    for (x, y) in rows[k].iter_mut().zip(&pr) {
                        *x -= q * y;
                    }
                }
            }
        }
        if let Some(k) = (0..rows.len()).find(|&k| rows[k][col] != 0) {
            let mut r = rows.swap_remove(k);
            if r[col] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            // Reduce the entries above the pivot into [0, pivot).
            for b in basis.iter_mut() {
                let q = Integer::div_floor(&b[col], &r[col]);
                if q != 0 {
                    for (x, y) in b.iter_mut().zip(&r) {
                        *x -= q * y;
                    }
                }
            }
            basis.push(r);
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
    }
    basis
        .into_iter()
        .map(|r| r.into_iter().map(|x| i64::try_from(x).expect("lattice entry overflow")).collect())
        .collect()
}

/// Integer coordinates of `v` in an echelon basis; `None` if `v` is not in the lattice.
pub fn coordinates(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let mut rest: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    let mut out = Vec::with_capacity(basis.len());
    for b in basis {
        let col = b.iter().position(|&x| x != 0)?;
        let piv = b[col] as i128;
        if rest[col] % piv != 0 {
            return None;
        }
        let q = rest[col] / piv;
        for (x, y) in rest.iter_mut().zip(b) {
            *x -= q * (*y as i128);
        }
        out.push(i64::try_from(q).ok()?);
    }
    if rest.iter().all(|&x| x == 0) {
        Some(out)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn simple_lattice() {
        let b = hermite_basis(&[vec![2, -2, 0], vec![4, -4, 0]], 3);
        assert_eq!(b, vec![vec![2, -2, 0]]);
        assert_eq!(coordinates(&b, &[-4, 4, 0]), Some(vec![-2]));
        assert_eq!(coordinates(&b, &[1, -1, 0]), None);
    }

    proptest! {
        #[test]
        fn generators_have_integer_coordinates(gens in prop::collection::vec(prop::collection::vec(-6i64..7, 3), 1..5)) {
            let b = hermite_basis(&gens, 3);
            for g in &gens {
                let c = coordinates(&b, g);
                prop_assert!(c.is_some());
                let c = c.unwrap();
                let mut back = vec![0i64; 3];
                for (k, row) in b.iter().enumerate() {
                    for j in 0..3 {
                        back[j] += c[k] * row[j];
                    }
                }
                prop_assert_eq!(&back, g);
            }
        }
    }
}
