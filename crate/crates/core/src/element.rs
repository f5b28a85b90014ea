//! Normal forms of elements of the free metabelian Leibniz algebra `L_n`,
//! with the bracket, the right module action of `K[r_1, …, r_n]`, and the
//! symmetric-group action.
//!
//! An element is written uniquely as a linear part over the generators
//! `x_1, …, x_n` plus, for every ordered pair `(i, j)`, a polynomial
//! coefficient on the module generator `[x_i, x_j]`. The diagonal entry
//! `(i, i)` carries the square `[x_i, x_i]`.
//!
//! The bracket is computed directly on normal forms from three reductions:
//!
//! * `[x_i, x_j]` is the module generator at `(i, j)`;
//! * `[[x_j, x_k]·p, x_m] = [x_j, x_k]·(p·r_m)`: bracketing a commutator
//!   with a generator on the right is multiplication by the adjoint
//!   variable;
//! * `[x_m, [x_j, x_k]·p] = ([x_m, x_j]·r_k − [x_m, x_k]·r_j)·p`, which is
//!   forced by the Leibniz identity and vanishes when `j = k`;
//!
//! and brackets of two commutator-ideal elements vanish.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poly::{CommPoly, Monomial};
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

/// An element of `L_n` in normal form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<K> {
    rank: usize,
    /// Coefficient of `x_i` at position `i - 1`.
    linear: Vec<K>,
    /// `(i, j) →` coefficient of `[x_i, x_j]`; no zero polynomials stored.
    quad: BTreeMap<(usize, usize), CommPoly<K>>,
}

impl<K: Scalar> Element<K> {
    pub fn zero(n: usize) -> Self {
        Element {
            rank: n,
            linear: vec![K::zero(); n],
            quad: BTreeMap::new(),
        }
    }

    /// The generator `x_i`. Panics if `i` is out of `1..=n`.
    pub fn generator(i: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "generator index {i} out of range 1..={n}");
        let mut u = Self::zero(n);
        u.linear[i - 1] = K::one();
        u
    }

    /// The module generator `[x_i, x_j]` (the square `a_i` when `i = j`).
    pub fn commutator(i: usize, j: usize, n: usize) -> Self {
        assert!(i >= 1 && i <= n, "index {i} out of range 1..={n}");
        assert!(j >= 1 && j <= n, "index {j} out of range 1..={n}");
        let mut u = Self::zero(n);
        u.quad.insert((i, j), CommPoly::one(n));
        u
    }

    /// Assembles an element from raw parts, dropping zero polynomials.
    ///
    /// Panics on length/rank/index inconsistencies.
    pub fn from_parts<I>(n: usize, linear: Vec<K>, quad: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize), CommPoly<K>)>,
    {
        assert_eq!(linear.len(), n, "linear part must have length {n}");
        let mut map = BTreeMap::new();
        for ((i, j), p) in quad {
            assert!(i >= 1 && i <= n && j >= 1 && j <= n, "pair ({i},{j}) out of range");
            assert_eq!(p.rank(), n, "rank mismatch in quad polynomial");
            if p.is_zero() {
                continue;
            }
            match map.entry((i, j)) {
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(p);
                }
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = e.get() + &p;
                    if sum.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        Element {
            rank: n,
            linear,
            quad: map,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.linear.iter().all(Zero::is_zero) && self.quad.is_empty()
    }

    pub fn linear(&self) -> &[K] {
        &self.linear
    }

    /// Coefficient of `x_i` (1-based).
    pub fn linear_coeff(&self, i: usize) -> &K {
        &self.linear[i - 1]
    }

    /// Non-zero quad entries in `(i, j)` order.
    pub fn quad_entries(&self) -> impl Iterator<Item = (&(usize, usize), &CommPoly<K>)> {
        self.quad.iter()
    }

    pub fn quad_poly(&self, i: usize, j: usize) -> Option<&CommPoly<K>> {
        self.quad.get(&(i, j))
    }

    pub fn quad_or_zero(&self, i: usize, j: usize) -> CommPoly<K> {
        self.quad
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| CommPoly::zero(self.rank))
    }

    /// True iff the linear part vanishes, i.e. the element lies in the
    /// commutator ideal.
    pub fn in_commutator_ideal(&self) -> bool {
        self.linear.iter().all(Zero::is_zero)
    }

    /// True iff supported on the square generators `[x_i, x_i]` alone.
    pub fn is_diagonal(&self) -> bool {
        self.in_commutator_ideal() && self.quad.keys().all(|&(i, j)| i == j)
    }

    /// True iff supported on the mixed generators `[x_i, x_j]`, `i ≠ j`.
    pub fn is_off_diagonal(&self) -> bool {
        self.in_commutator_ideal() && self.quad.keys().all(|&(i, j)| i != j)
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        Element {
            rank: self.rank,
            linear: self.linear.iter().map(|a| a.clone() * c.clone()).collect(),
            quad: self
                .quad
                .iter()
                .map(|(&ij, p)| (ij, p.scale(c)))
                .collect(),
        }
    }

    /// The bracket `[self, rhs]`, bilinear and in normal form.
    pub fn bracket(&self, rhs: &Element<K>) -> Element<K> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let n = self.rank;
        let mut out = Element::zero(n);

        // linear × linear: [x_i, x_j] terms
        for (i, a) in self.linear.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.linear.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.add_quad(
                    (i + 1, j + 1),
                    CommPoly::constant(n, a.clone() * b.clone()),
                );
            }
        }

        // quad × linear: right action by Σ b_m r_m
        let adj = linear_adjoint_poly(rhs);
        if !adj.is_zero() {
            for (&ij, p) in &self.quad {
                out.add_quad(ij, p * &adj);
            }
        }

        // linear × quad: [x_m, [x_j, x_k]·q] = ([x_m,x_j] r_k − [x_m,x_k] r_j)·q
        for (m, a) in self.linear.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (&(j, k), q) in &rhs.quad {
                if j == k {
                    continue;
                }
                let scaled = q.scale(a);
                out.add_quad((m + 1, j), &scaled * &CommPoly::var(n, k));
                out.add_quad((m + 1, k), (&scaled * &CommPoly::var(n, j)).neg());
            }
        }

        // quad × quad vanishes
        out
    }

    /// Right action of a polynomial on a commutator-ideal element.
    ///
    /// Acting by `r_m` agrees with `bracket(·, x_m)`; the action is only
    /// defined when the linear part vanishes.
    pub fn right_act(&self, p: &CommPoly<K>) -> Result<Element<K>> {
        assert_eq!(self.rank, p.rank(), "rank mismatch");
        if !self.in_commutator_ideal() {
            return Err(Error::NonzeroLinearPart);
        }
        let mut out = Element::zero(self.rank);
        for (&ij, q) in &self.quad {
            out.add_quad(ij, q * p);
        }
        Ok(out)
    }

    /// Image under the algebra automorphism induced by a permutation of
    /// the generators.
    pub fn act(&self, sigma: &Permutation) -> Element<K> {
        assert_eq!(self.rank, sigma.rank(), "rank mismatch");
        let mut out = Element::zero(self.rank);
        for (i, a) in self.linear.iter().enumerate() {
            if !a.is_zero() {
                out.linear[sigma.apply(i + 1) - 1] = a.clone();
            }
        }
        for (&(i, j), p) in &self.quad {
            out.quad
                .insert((sigma.apply(i), sigma.apply(j)), p.act(sigma));
        }
        out
    }

    /// Homogeneous part of total degree `d`, where generators have degree 1
    /// and a quad term with monomial `m` has degree `2 + deg m`.
    pub fn degree_component(&self, d: u32) -> Element<K> {
        let mut out = Element::zero(self.rank);
        if d == 1 {
            out.linear = self.linear.clone();
            return out;
        }
        if d < 2 {
            return out;
        }
        for (&ij, p) in &self.quad {
            let part = p.homogeneous_part(d - 2);
            if !part.is_zero() {
                out.quad.insert(ij, part);
            }
        }
        out
    }

    /// Largest degree present, `None` for the zero element.
    pub fn max_degree(&self) -> Option<u32> {
        let lin = if self.linear.iter().any(|a| !a.is_zero()) {
            Some(1)
        } else {
            None
        };
        let quad = self
            .quad
            .values()
            .filter_map(CommPoly::degree)
            .map(|d| d + 2)
            .max();
        lin.max(quad)
    }

    fn add_quad(&mut self, ij: (usize, usize), p: CommPoly<K>) {
        if p.is_zero() {
            return;
        }
        match self.quad.entry(ij) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &p;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

/// The polynomial `Σ b_m r_m` built from an element's linear coefficients.
fn linear_adjoint_poly<K: Scalar>(u: &Element<K>) -> CommPoly<K> {
    let n = u.rank();
    CommPoly::from_terms(
        n,
        u.linear()
            .iter()
            .enumerate()
            .filter(|(_, b)| !b.is_zero())
            .map(|(m, b)| (Monomial::var(n, m + 1), b.clone())),
    )
}

impl<K: Scalar> Add for &Element<K> {
    type Output = Element<K>;
    fn add(self, rhs: Self) -> Element<K> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (a, b) in out.linear.iter_mut().zip(&rhs.linear) {
            *a = a.clone() + b.clone();
        }
        for (&ij, p) in &rhs.quad {
            out.add_quad(ij, p.clone());
        }
        out
    }
}

impl<K: Scalar> Sub for &Element<K> {
    type Output = Element<K>;
    fn sub(self, rhs: Self) -> Element<K> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (a, b) in out.linear.iter_mut().zip(&rhs.linear) {
            *a = a.clone() - b.clone();
        }
        for (&ij, p) in &rhs.quad {
            out.add_quad(ij, p.neg());
        }
        out
    }
}

impl<K: Scalar> Neg for &Element<K> {
    type Output = Element<K>;
    fn neg(self) -> Element<K> {
        Element {
            rank: self.rank,
            linear: self.linear.iter().map(|a| a.clone().neg()).collect(),
            quad: self.quad.iter().map(|(&ij, p)| (ij, p.neg())).collect(),
        }
    }
}
