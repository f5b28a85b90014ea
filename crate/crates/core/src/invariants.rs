//! Symmetric elements of `L_n`: detection, symmetrization, the coefficient
//! conditions characterizing symmetry on the diagonal and off-diagonal
//! submodules, and the `(α, f, g)` parameterization from which every
//! symmetric element is synthesized.
//!
//! Symmetry of an element is decided against the `n − 1` transpositions
//! `(1 k)`; these generate the symmetric group, so fixedness under them is
//! fixedness under all of `S_n`.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::perm::{stabilizer_generators, Permutation};
use crate::poly::CommPoly;
use crate::scalar::Scalar;

/// Largest rank for which full-orbit enumeration (`n!` permutations) is
/// attempted by [`symmetrize`].
pub const MAX_ORBIT_RANK: usize = 6;

/// The `(α, f, g)` data of a symmetric element.
///
/// `alpha` scales the linear invariant `x_1 + ⋯ + x_n`, `f` is the
/// coefficient of `[x_1, x_1]` and must be fixed by the stabilizer of 1,
/// `g` is the coefficient of `[x_1, x_2]` and must be fixed by the
/// stabilizer of `{1, 2}`. The coefficient of `[x_2, x_1]` is the derived
/// `h = (1 2)·g` and is not stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymmetricData<K> {
    pub rank: usize,
    pub alpha: K,
    pub f: CommPoly<K>,
    pub g: CommPoly<K>,
}

impl<K: Scalar> SymmetricData<K> {
    pub fn new(rank: usize, alpha: K, f: CommPoly<K>, g: CommPoly<K>) -> Result<Self> {
        let d = SymmetricData { rank, alpha, f, g };
        d.validate()?;
        Ok(d)
    }

    /// Checks the stabilizer constraints on `f` and `g`.
    pub fn validate(&self) -> Result<()> {
        assert_eq!(self.f.rank(), self.rank, "rank mismatch in f");
        assert_eq!(self.g.rank(), self.rank, "rank mismatch in g");
        if !self.f.is_fixed_by(&stabilizer_generators(&[1], self.rank)) {
            return Err(Error::FNotInvariant);
        }
        if self.rank == 1 {
            if !self.g.is_zero() {
                return Err(Error::GNotZeroAtRankOne);
            }
            return Ok(());
        }
        if !self.g.is_fixed_by(&stabilizer_generators(&[1, 2], self.rank)) {
            return Err(Error::GNotInvariant);
        }
        Ok(())
    }
}

/// True iff the element is fixed by every generator permutation, tested on
/// the transpositions `(1 k)`, `k = 2, …, n`.
pub fn is_symmetric<K: Scalar>(u: &Element<K>) -> bool {
    let n = u.rank();
    (2..=n).all(|k| u.act(&Permutation::transposition(n, 1, k)) == *u)
}

/// Orbit average `(1/n!) Σ_σ σ·u`: an idempotent linear projection onto the
/// symmetric elements that fixes them pointwise.
///
/// Enumerates all of `S_n`; fails for ranks above [`MAX_ORBIT_RANK`].
pub fn symmetrize<K: Scalar>(u: &Element<K>) -> Result<Element<K>> {
    symmetrize_with_bound(u, MAX_ORBIT_RANK)
}

/// [`symmetrize`] with an explicit rank bound.
pub fn symmetrize_with_bound<K: Scalar>(u: &Element<K>, bound: usize) -> Result<Element<K>> {
    let n = u.rank();
    if n > bound {
        return Err(Error::OrbitBoundExceeded { rank: n, bound });
    }
    let mut acc = Element::zero(n);
    let mut count: i64 = 0;
    for sigma in Permutation::all(n) {
        acc = &acc + &u.act(&sigma);
        count += 1;
    }
    Ok(acc.scale(&K::from_ratio(1, count)))
}

/// Coefficient conditions for symmetry of a diagonal element
/// `Σ [x_i, x_i]·p_i`: `p_1` fixed by the stabilizer of 1, and
/// `p_i = (1 i)·p_1` for `i = 2, …, n`.
///
/// Errors unless the input is supported on the squares alone.
pub fn diagonal_symmetry_conditions<K: Scalar>(u: &Element<K>) -> Result<bool> {
    if !u.is_diagonal() {
        return Err(Error::NotDiagonal);
    }
    let n = u.rank();
    let p1 = u.quad_or_zero(1, 1);
    if !p1.is_fixed_by(&stabilizer_generators(&[1], n)) {
        return Ok(false);
    }
    for i in 2..=n {
        let expected = p1.act(&Permutation::transposition(n, 1, i));
        if u.quad_or_zero(i, i) != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coefficient conditions for symmetry of an off-diagonal element
/// `Σ [x_j, x_k]·q_jk`: `q_12` fixed by the stabilizer of `{1, 2}` and
/// every other entry related to `q_12` by the transposition table
///
/// ```text
/// q_21 = (12)q_12        q_1i = (2i)q_12      q_i2 = (1i)q_12
/// q_2i = (1i)q_21        q_i1 = (2i)q_21      q_ij = (1i)(2j)q_12
/// ```
///
/// for `3 ≤ i ≠ j ≤ n`. Errors unless the input is supported on the mixed
/// generators alone.
pub fn off_diagonal_symmetry_conditions<K: Scalar>(u: &Element<K>) -> Result<bool> {
    if !u.is_off_diagonal() {
        return Err(Error::NotOffDiagonal);
    }
    let n = u.rank();
    if n == 1 {
        // no off-diagonal pairs; only the zero element lives here
        return Ok(u.is_zero());
    }
    let q12 = u.quad_or_zero(1, 2);
    if !q12.is_fixed_by(&stabilizer_generators(&[1, 2], n)) {
        return Ok(false);
    }
    let q21 = q12.act(&Permutation::transposition(n, 1, 2));
    for k in 1..=n {
        for l in 1..=n {
            if k == l {
                continue;
            }
            if u.quad_or_zero(k, l) != expected_off_diagonal(&q12, &q21, k, l) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The entry at `(k, l)` forced by `q_12` via the transposition table.
fn expected_off_diagonal<K: Scalar>(
    q12: &CommPoly<K>,
    q21: &CommPoly<K>,
    k: usize,
    l: usize,
) -> CommPoly<K> {
    let n = q12.rank();
    debug_assert!(k != l);
    match (k, l) {
        (1, 2) => q12.clone(),
        (2, 1) => q21.clone(),
        (1, i) => q12.act(&Permutation::transposition(n, 2, i)),
        (i, 2) => q12.act(&Permutation::transposition(n, 1, i)),
        (2, i) => q21.act(&Permutation::transposition(n, 1, i)),
        (i, 1) => q21.act(&Permutation::transposition(n, 2, i)),
        (i, j) => q12
            .act(&Permutation::transposition(n, 2, j))
            .act(&Permutation::transposition(n, 1, i)),
    }
}

/// Builds the symmetric element determined by `(α, f, g)`:
///
/// ```text
/// s = α Σ x_i + Σ_i [x_i,x_i]·((1i)f)
///   + [x_1,x_2]·g + [x_2,x_1]·h
///   + Σ_{i≥3} [x_1,x_i]·((2i)g) + [x_i,x_2]·((1i)g)
///   + Σ_{i≥3} [x_i,x_1]·((2i)h) + [x_2,x_i]·((1i)h)
///   + Σ_{3≤i≠j} [x_i,x_j]·((1i)(2j)g)
/// ```
///
/// with `h = (12)g`, reading `(11)` and `(22)` as the identity. Errors if
/// the stabilizer constraints on `f` and `g` fail.
pub fn synthesize<K: Scalar>(d: &SymmetricData<K>) -> Result<Element<K>> {
    d.validate()?;
    let n = d.rank;
    let mut quad: Vec<((usize, usize), CommPoly<K>)> = Vec::new();

    for i in 1..=n {
        let fi = if i == 1 {
            d.f.clone()
        } else {
            d.f.act(&Permutation::transposition(n, 1, i))
        };
        quad.push(((i, i), fi));
    }

    if n >= 2 {
        let h = d.g.act(&Permutation::transposition(n, 1, 2));
        for k in 1..=n {
            for l in 1..=n {
                if k != l {
                    quad.push(((k, l), expected_off_diagonal(&d.g, &h, k, l)));
                }
            }
        }
    }

    Ok(Element::from_parts(
        n,
        vec![d.alpha.clone(); n],
        quad,
    ))
}

/// Reads the `(α, f, g)` data off a symmetric element and validates it by
/// exact reconstruction.
///
/// `α` is the coefficient of `x_1`, `f` the coefficient of `[x_1, x_1]`,
/// `g` the coefficient of `[x_1, x_2]`. Errors with the first offending
/// entry if the element is not symmetric.
pub fn decompose_symmetric<K: Scalar>(u: &Element<K>) -> Result<SymmetricData<K>> {
    let n = u.rank();
    let d = SymmetricData {
        rank: n,
        alpha: u.linear_coeff(1).clone(),
        f: u.quad_or_zero(1, 1),
        g: if n >= 2 {
            u.quad_or_zero(1, 2)
        } else {
            CommPoly::zero(n)
        },
    };
    d.validate().map_err(|e| Error::NotSymmetric {
        reason: e.to_string(),
    })?;
    let rebuilt = synthesize(&d)?;
    if rebuilt != *u {
        return Err(Error::NotSymmetric {
            reason: first_mismatch(u, &rebuilt),
        });
    }
    Ok(d)
}

/// Human-readable description of the first place two elements differ.
fn first_mismatch<K: Scalar>(actual: &Element<K>, expected: &Element<K>) -> String {
    for i in 1..=actual.rank() {
        if actual.linear_coeff(i) != expected.linear_coeff(i) {
            return format!(
                "coefficient of x{i} is {}, expected {}",
                actual.linear_coeff(i),
                expected.linear_coeff(i)
            );
        }
    }
    let keys: std::collections::BTreeSet<(usize, usize)> = actual
        .quad_entries()
        .map(|(&ij, _)| ij)
        .chain(expected.quad_entries().map(|(&ij, _)| ij))
        .collect();
    for (i, j) in keys {
        if actual.quad_or_zero(i, j) != expected.quad_or_zero(i, j) {
            return format!("coefficient of [x{i},x{j}] disagrees with the reconstruction");
        }
    }
    "elements are equal".to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Monomial;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type E = Element<BigRational>;
    type P = CommPoly<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    fn sum_of_generators(n: usize) -> E {
        let mut acc = E::zero(n);
        for i in 1..=n {
            acc = &acc + &E::generator(i, n);
        }
        acc
    }

    #[test]
    fn linear_invariant_is_symmetric() {
        for n in 1..=4 {
            assert!(is_symmetric(&sum_of_generators(n)));
        }
        assert!(!is_symmetric(&E::commutator(1, 2, 2)));
        let squares = &E::commutator(1, 1, 2) + &E::commutator(2, 2, 2);
        assert!(is_symmetric(&squares));
    }

    #[test]
    fn symmetrize_examples() {
        let b12 = E::commutator(1, 2, 2);
        let b21 = E::commutator(2, 1, 2);
        let avg = symmetrize(&b12).unwrap();
        assert_eq!(avg, (&b12 + &b21).scale(&rat(1, 2)));

        let lin = sum_of_generators(2);
        assert_eq!(symmetrize(&lin).unwrap(), lin);

        let third = symmetrize(&E::generator(1, 3)).unwrap();
        assert_eq!(third, sum_of_generators(3).scale(&rat(1, 3)));
    }

    #[test]
    fn symmetrize_is_a_projection() {
        let n = 3;
        let u = &E::commutator(1, 2, n).right_act(&P::var(n, 3)).unwrap()
            + &E::commutator(2, 2, n);
        let s = symmetrize(&u).unwrap();
        assert!(is_symmetric(&s));
        assert_eq!(symmetrize(&s).unwrap(), s);
    }

    #[test]
    fn diagonal_conditions_rank_two() {
        // p_1 = r2, p_2 = r1 satisfies; p_2 = r2 violates
        let a1 = E::commutator(1, 1, 2).right_act(&P::var(2, 2)).unwrap();
        let a2_ok = E::commutator(2, 2, 2).right_act(&P::var(2, 1)).unwrap();
        let a2_bad = E::commutator(2, 2, 2).right_act(&P::var(2, 2)).unwrap();

        let good = &a1 + &a2_ok;
        assert_eq!(diagonal_symmetry_conditions(&good), Ok(true));
        assert!(is_symmetric(&good));

        let bad = &a1 + &a2_bad;
        assert_eq!(diagonal_symmetry_conditions(&bad), Ok(false));
        assert!(!is_symmetric(&bad));
    }

    #[test]
    fn diagonal_conditions_rank_three() {
        let n = 3;
        let p1 = &P::var(n, 2) + &P::var(n, 3);
        let mut parts = vec![((1, 1), p1.clone())];
        for i in 2..=n {
            parts.push(((i, i), p1.act(&Permutation::transposition(n, 1, i))));
        }
        let u = E::from_parts(n, vec![BigRational::zero(); n], parts);
        assert_eq!(diagonal_symmetry_conditions(&u), Ok(true));
        assert!(is_symmetric(&u));
    }

    #[test]
    fn diagonal_conditions_reject_mixed_support() {
        let u = E::commutator(1, 2, 2);
        assert_eq!(diagonal_symmetry_conditions(&u), Err(Error::NotDiagonal));
        let v = E::commutator(1, 1, 2);
        assert_eq!(
            off_diagonal_symmetry_conditions(&v),
            Err(Error::NotOffDiagonal)
        );
        let w = &E::generator(1, 2) + &E::commutator(1, 1, 2);
        assert_eq!(diagonal_symmetry_conditions(&w), Err(Error::NotDiagonal));
    }

    #[test]
    fn off_diagonal_conditions_rank_two() {
        let g = &P::var(2, 1) * &P::var(2, 2);
        let q21 = g.act(&Permutation::transposition(2, 1, 2));
        let good = E::from_parts(
            2,
            vec![BigRational::zero(); 2],
            [((1, 2), g.clone()), ((2, 1), q21)],
        );
        assert_eq!(off_diagonal_symmetry_conditions(&good), Ok(true));
        assert!(is_symmetric(&good));

        let bad = E::from_parts(
            2,
            vec![BigRational::zero(); 2],
            [((1, 2), P::var(2, 1)), ((2, 1), P::var(2, 1))],
        );
        assert_eq!(off_diagonal_symmetry_conditions(&bad), Ok(false));
        assert!(!is_symmetric(&bad));
    }

    #[test]
    fn off_diagonal_conditions_rank_three() {
        let n = 3;
        let g = P::var(n, 3); // fixed by the trivial stabilizer of {1,2}
        let h = g.act(&Permutation::transposition(n, 1, 2));
        let mut parts = Vec::new();
        for k in 1..=n {
            for l in 1..=n {
                if k != l {
                    parts.push(((k, l), super::expected_off_diagonal(&g, &h, k, l)));
                }
            }
        }
        let u = E::from_parts(n, vec![BigRational::zero(); n], parts);
        assert_eq!(off_diagonal_symmetry_conditions(&u), Ok(true));
        assert!(is_symmetric(&u));
    }

    #[test]
    fn synthesize_linear_only() {
        let d = SymmetricData::new(3, BigRational::one(), P::zero(3), P::zero(3)).unwrap();
        assert_eq!(synthesize(&d).unwrap(), sum_of_generators(3));
    }

    #[test]
    fn synthesize_constant_f() {
        let d =
            SymmetricData::new(2, BigRational::zero(), P::one(2), P::zero(2)).unwrap();
        let expected = &E::commutator(1, 1, 2) + &E::commutator(2, 2, 2);
        assert_eq!(synthesize(&d).unwrap(), expected);
    }

    #[test]
    fn synthesize_output_is_symmetric() {
        let d = SymmetricData::new(3, BigRational::zero(), P::zero(3), P::var(3, 3)).unwrap();
        let s = synthesize(&d).unwrap();
        assert!(is_symmetric(&s));
    }

    #[test]
    fn synthesize_rejects_bad_constraints() {
        // f = r2 is not fixed by the stabilizer of 1 when n = 3
        let d = SymmetricData {
            rank: 3,
            alpha: BigRational::zero(),
            f: P::var(3, 2),
            g: P::zero(3),
        };
        assert_eq!(synthesize(&d), Err(Error::FNotInvariant));

        // g = r1 is not fixed by the stabilizer of {1,2} when n = 4
        let d = SymmetricData {
            rank: 4,
            alpha: BigRational::zero(),
            f: P::zero(4),
            g: P::var(4, 3),
        };
        assert_eq!(synthesize(&d), Err(Error::GNotInvariant));
    }

    #[test]
    fn decompose_linear_multiple() {
        let u = sum_of_generators(2).scale(&rat(3, 1));
        let d = decompose_symmetric(&u).unwrap();
        assert_eq!(d.alpha, rat(3, 1));
        assert!(d.f.is_zero());
        assert!(d.g.is_zero());
    }

    #[test]
    fn decompose_symmetrized_element_roundtrips() {
        let n = 3;
        let u = E::commutator(1, 2, n).right_act(&P::var(n, 3)).unwrap();
        let s = symmetrize(&u).unwrap();
        let d = decompose_symmetric(&s).unwrap();
        assert!(d.alpha.is_zero());
        assert!(d.f.is_zero());
        assert_eq!(d.g, s.quad_or_zero(1, 2));
        assert_eq!(synthesize(&d).unwrap(), s);
    }

    #[test]
    fn decompose_rejects_non_symmetric() {
        let u = E::commutator(1, 2, 2);
        match decompose_symmetric(&u) {
            Err(Error::NotSymmetric { .. }) => {}
            other => panic!("expected NotSymmetric, got {other:?}"),
        }
    }

    #[test]
    fn rank_one_everything_is_symmetric() {
        let u = &E::generator(1, 1)
            + &E::commutator(1, 1, 1)
                .right_act(&P::from_terms(
                    1,
                    [(Monomial::from_exps(vec![3]), rat(5, 2))],
                ))
                .unwrap();
        assert!(is_symmetric(&u));
        let d = decompose_symmetric(&u).unwrap();
        assert_eq!(synthesize(&d).unwrap(), u);
    }
}
