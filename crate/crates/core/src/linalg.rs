//! Exact dense linear algebra over the scalar field: row reduction,
//! nullspace bases, rank, and span comparison.

use crate::scalar::Scalar;

/// Reduces the matrix to reduced row echelon form in place and returns the
/// pivot columns in order.
pub fn rref<K: Scalar>(rows: &mut [Vec<K>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return Vec::new();
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = K::one() / rows[r][c].clone();
        for x in rows[r][c..].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, pv) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = x.clone() - factor.clone() * pv.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

pub fn rank<K: Scalar>(mut rows: Vec<Vec<K>>) -> usize {
    rref(&mut rows).len()
}

/// A basis of `{x : A x = 0}` for the matrix with the given rows, each of
/// length `ncols`. Deterministic: one basis vector per free column of the
/// reduced form, with a unit in the free position.
pub fn nullspace_basis<K: Scalar>(mut rows: Vec<Vec<K>>, ncols: usize) -> Vec<Vec<K>> {
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let pivots = rref(&mut rows);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &c in &pivots {
            v[c] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for free in 0..ncols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![K::zero(); ncols];
        v[free] = K::one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            // x_pc = −(coefficient of the free column in this pivot row)
            v[pc] = row[free].clone().neg();
        }
        basis.push(v);
    }
    basis
}

/// True iff the two families of vectors span the same subspace.
pub fn same_span<K: Scalar>(a: &[Vec<K>], b: &[Vec<K>]) -> bool {
    let ra = rank(a.to_vec());
    let rb = rank(b.to_vec());
    if ra != rb {
        return false;
    }
    let mut all: Vec<Vec<K>> = a.to_vec();
    all.extend(b.iter().cloned());
    rank(all) == ra
}

/// True iff `v` lies in the span of the family.
pub fn in_span<K: Scalar>(family: &[Vec<K>], v: &[K]) -> bool {
    let base = rank(family.to_vec());
    let mut all = family.to_vec();
    all.push(v.to_vec());
    rank(all) == base
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn rows(data: &[&[i64]]) -> Vec<Vec<BigRational>> {
        data.iter()
            .map(|r| r.iter().map(|&v| BigRational::from_int(v)).collect())
            .collect()
    }

    #[test]
    fn rank_and_rref() {
        let m = rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(m), 2);
        assert_eq!(rank(rows(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn nullspace_solves_exactly() {
        // x + y + z = 0, y − z = 0  ⇒  nullspace spanned by (−2, 1, 1)
        let m = rows(&[&[1, 1, 1], &[0, 1, -1]]);
        let basis = nullspace_basis(m.clone(), 3);
        assert_eq!(basis.len(), 1);
        for v in &basis {
            for row in &m {
                let dot: BigRational = row
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(BigRational::from_int(0), |acc, t| acc + t);
                assert!(dot == BigRational::from_int(0));
            }
        }
        assert!(in_span(&basis, &rows(&[&[-2, 1, 1]])[0]));
    }

    #[test]
    fn span_comparison() {
        let a = rows(&[&[1, 0], &[0, 1]]);
        let b = rows(&[&[1, 1], &[1, -1]]);
        assert!(same_span(&a, &b));
        let c = rows(&[&[1, 1]]);
        assert!(!same_span(&a, &c));
        assert!(in_span(&a, &rows(&[&[3, 7]])[0]));
        assert!(!in_span(&c, &rows(&[&[1, 0]])[0]));
    }

    #[test]
    fn fractional_pivots_stay_exact() {
        let m = vec![
            vec![
                BigRational::from_ratio(1, 2),
                BigRational::from_ratio(1, 3),
            ],
            vec![
                BigRational::from_ratio(1, 4),
                BigRational::from_ratio(1, 6),
            ],
        ];
        // second row is half the first: rank 1, nullity 1
        assert_eq!(rank(m.clone()), 1);
        assert_eq!(nullspace_basis(m, 2).len(), 1);
    }
}
