//! Brute-force computation of the symmetric subspace, degree by degree.
//!
//! This is the independent check for the structural results of the crate:
//! it never consults the coefficient conditions or the `(α, f, g)`
//! synthesis. Instead it enumerates the monomial basis of a homogeneous
//! component of `L_n`, writes down the fixed-point linear system for the
//! transposition generators `(1 k)`, and solves it by exact row reduction.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::linalg;
use crate::perm::Permutation;
use crate::poly::{CommPoly, Monomial};
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Largest homogeneous-component dimension the oracle will handle.
pub const MAX_COMPONENT_DIM: usize = 4000;

/// A basis label for the degree-`d` homogeneous component: either a
/// generator `x_i` (degree 1) or `[x_i, x_j]·m` with `deg m = d − 2`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum ComponentKey {
    Lin(usize),
    Quad(usize, usize, Monomial),
}

fn component_keys(n: usize, d: u32) -> Vec<ComponentKey> {
    assert!(n >= 1 && d >= 1);
    if d == 1 {
        return (1..=n).map(ComponentKey::Lin).collect();
    }
    let mut keys = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for m in monomials_of_degree(n, d - 2) {
                keys.push(ComponentKey::Quad(i, j, m));
            }
        }
    }
    keys
}

/// All rank-`n` monomials of total degree `d`, in ascending graded-lex
/// order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fill_monomials(&mut exps, 0, d, &mut out);
    out.sort();
    out
}

fn fill_monomials(exps: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Monomial>) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        out.push(Monomial::from_exps(exps.clone()));
        exps[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        fill_monomials(exps, pos + 1, remaining - e, out);
        exps[pos] = 0;
    }
}

/// Dimension of the degree-`d` homogeneous component of `L_n`.
pub fn component_dim(n: usize, d: u32) -> usize {
    component_keys(n, d).len()
}

/// The monomial basis of the degree-`d` homogeneous component, as elements.
pub fn homogeneous_basis<K: Scalar>(n: usize, d: u32) -> Vec<Element<K>> {
    component_keys(n, d)
        .into_iter()
        .map(|key| key_to_element(n, &key))
        .collect()
}

fn key_to_element<K: Scalar>(n: usize, key: &ComponentKey) -> Element<K> {
    match key {
        ComponentKey::Lin(i) => Element::generator(*i, n),
        ComponentKey::Quad(i, j, m) => Element::from_parts(
            n,
            vec![K::zero(); n],
            [((*i, *j), CommPoly::from_terms(n, [(m.clone(), K::one())]))],
        ),
    }
}

/// Coordinates of the degree-`d` component of `u` in the canonical
/// monomial basis of that component.
pub fn coordinates<K: Scalar>(u: &Element<K>, d: u32) -> Vec<K> {
    let n = u.rank();
    let part = u.degree_component(d);
    component_keys(n, d)
        .iter()
        .map(|key| match key {
            ComponentKey::Lin(i) => part.linear_coeff(*i).clone(),
            ComponentKey::Quad(i, j, m) => part
                .quad_poly(*i, *j)
                .map(|p| p.coefficient(m))
                .unwrap_or_else(K::zero),
        })
        .collect()
}

/// Basis of the symmetric subspace of the degree-`d` homogeneous component
/// of `L_n`, found by solving `(σ − 1)v = 0` for the generators `σ = (1k)`
/// over the exact scalar field.
pub fn invariant_basis<K: Scalar>(n: usize, d: u32) -> Result<Vec<Element<K>>> {
    assert!(n >= 1 && d >= 1);
    let keys = component_keys(n, d);
    let dim = keys.len();
    if dim > MAX_COMPONENT_DIM {
        return Err(Error::CostBoundExceeded {
            dim,
            bound: MAX_COMPONENT_DIM,
        });
    }
    let index: BTreeMap<&ComponentKey, usize> =
        keys.iter().enumerate().map(|(t, k)| (k, t)).collect();

    // the action permutes basis monomials, so each constraint row is
    // e_t − e_{σ(t)}
    let mut rows: Vec<Vec<K>> = Vec::new();
    for k in 2..=n {
        let sigma = Permutation::transposition(n, 1, k);
        for (t, key) in keys.iter().enumerate() {
            let image = match key {
                ComponentKey::Lin(i) => ComponentKey::Lin(sigma.apply(*i)),
                ComponentKey::Quad(i, j, m) => {
                    ComponentKey::Quad(sigma.apply(*i), sigma.apply(*j), m.act(&sigma))
                }
            };
            let s = index[&image];
            if s == t {
                continue;
            }
            let mut row = vec![K::zero(); dim];
            row[t] = K::one();
            row[s] = row[s].clone() - K::one();
            rows.push(row);
        }
    }

    let basis_vectors = linalg::nullspace_basis(rows, dim);
    Ok(basis_vectors
        .into_iter()
        .map(|v| {
            let mut acc = Element::zero(n);
            for (c, key) in v.into_iter().zip(&keys) {
                if !c.is_zero() {
                    acc = &acc + &key_to_element::<K>(n, key).scale(&c);
                }
            }
            acc
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::is_symmetric;
    use num_rational::BigRational;

    #[test]
    fn monomial_enumeration_counts() {
        assert_eq!(monomials_of_degree(2, 0).len(), 1);
        assert_eq!(monomials_of_degree(2, 3).len(), 4);
        assert_eq!(monomials_of_degree(3, 3).len(), 10);
    }

    #[test]
    fn component_dims() {
        assert_eq!(component_dim(2, 1), 2);
        assert_eq!(component_dim(2, 2), 4);
        assert_eq!(component_dim(2, 3), 8);
        assert_eq!(component_dim(3, 2), 9);
    }

    #[test]
    fn degree_one_invariants() {
        let basis = invariant_basis::<BigRational>(2, 1).unwrap();
        assert_eq!(basis.len(), 1);
        let expected = &Element::generator(1, 2) + &Element::generator(2, 2);
        // one-dimensional: the basis vector is a scalar multiple
        assert!(linalg::same_span(
            &[coordinates(&basis[0], 1)],
            &[coordinates(&expected, 1)]
        ));
    }

    #[test]
    fn degree_two_invariants_rank_two() {
        let basis = invariant_basis::<BigRational>(2, 2).unwrap();
        assert_eq!(basis.len(), 2);
        let squares = &Element::commutator(1, 1, 2) + &Element::commutator(2, 2, 2);
        let mixed = &Element::commutator(1, 2, 2) + &Element::commutator(2, 1, 2);
        let got: Vec<Vec<BigRational>> = basis.iter().map(|u| coordinates(u, 2)).collect();
        let expected = vec![coordinates(&squares, 2), coordinates(&mixed, 2)];
        assert!(linalg::same_span(&got, &expected));
    }

    #[test]
    fn degree_three_dimension_rank_two() {
        let basis = invariant_basis::<BigRational>(2, 3).unwrap();
        assert_eq!(basis.len(), 4);
        for u in &basis {
            assert!(is_symmetric(u));
        }
    }

    #[test]
    fn every_output_is_symmetric() {
        for (n, d) in [(2, 1), (2, 4), (3, 2), (3, 3)] {
            for u in invariant_basis::<BigRational>(n, d).unwrap() {
                assert!(is_symmetric(&u), "non-symmetric output at n={n}, d={d}");
                assert!(!u.is_zero());
            }
        }
    }

    #[test]
    fn cost_bound_is_enforced() {
        // n = 6, d = 8: 36 · C(11, 6) = 16632 labels
        match invariant_basis::<BigRational>(6, 8) {
            Err(Error::CostBoundExceeded { .. }) => {}
            other => panic!("expected cost bound error, got {other:?}"),
        }
    }
}
