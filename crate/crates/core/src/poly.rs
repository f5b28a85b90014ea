//! The commutative polynomial ring `K[r_1, …, r_n]` of adjoint variables,
//! with the variable-permuting action of the symmetric group.
//!
//! Polynomials are sparse maps from exponent vectors to nonzero
//! coefficients. Term order is graded lexicographic; iteration over a
//! [`CommPoly`] is ascending, rendering uses descending order.

use crate::perm::Permutation;
use crate::scalar::Scalar;
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector of a commutative monomial in `r_1, …, r_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    /// The constant monomial `1` in rank `n`.
    pub fn constant(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `r_i` (1-based) in rank `n`.
    pub fn var(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n, "variable index {i} out of range 1..={n}");
        let mut exps = vec![0; n];
        exps[i - 1] = 1;
        Monomial(exps)
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_constant(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.rank(), other.rank(), "rank mismatch");
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Image under the variable permutation: the exponent at position
    /// `σ(i)` of the result is the exponent at position `i` of the input.
    pub fn act(&self, sigma: &Permutation) -> Monomial {
        assert_eq!(self.rank(), sigma.rank(), "rank mismatch");
        let mut exps = vec![0; self.rank()];
        for i in 1..=self.rank() {
            exps[sigma.apply(i) - 1] = self.0[i - 1];
        }
        Monomial(exps)
    }
}

// Graded lexicographic: total degree first, ties by exponent vector.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial in `K[r_1, …, r_n]`.
///
/// Invariants: no stored zero coefficient; every monomial has the ambient
/// rank. The rank is carried even by the zero polynomial so mixed-rank
/// arithmetic fails fast.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CommPoly<K> {
    rank: usize,
    terms: BTreeMap<Monomial, K>,
}

impl<K: Scalar> CommPoly<K> {
    pub fn zero(n: usize) -> Self {
        CommPoly {
            rank: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: K) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::constant(n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, K::one())
    }

    /// The variable `r_i` as a polynomial.
    pub fn var(n: usize, i: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::var(n, i), K::one());
        p
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, K)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter()
    }

    /// Terms in descending graded-lex order (the rendering order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &K)> {
        self.terms.iter().rev()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coefficient(&self, m: &Monomial) -> K {
        self.terms.get(m).cloned().unwrap_or_else(K::zero)
    }

    /// Adds `c · m`, dropping the entry if the sum cancels.
    pub fn add_term(&mut self, m: Monomial, c: K) {
        assert_eq!(m.rank(), self.rank, "rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        CommPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    /// Image under the variable-permuting ring automorphism.
    pub fn act(&self, sigma: &Permutation) -> Self {
        assert_eq!(self.rank, sigma.rank(), "rank mismatch");
        CommPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.act(sigma), c.clone()))
                .collect(),
        }
    }

    /// True iff the polynomial is fixed by every listed permutation, hence
    /// by the subgroup they generate.
    pub fn is_fixed_by(&self, gens: &[Permutation]) -> bool {
        gens.iter().all(|sigma| self.act(sigma) == *self)
    }

    /// Sum of the images over an explicit set of permutations.
    pub fn orbit_sum(&self, perms: &[Permutation]) -> Self {
        let mut acc = Self::zero(self.rank);
        for sigma in perms {
            acc = &acc + &self.act(sigma);
        }
        acc
    }

    /// The homogeneous part of the given total degree.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        CommPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }
}

impl<K: Scalar> Add for &CommPoly<K> {
    type Output = CommPoly<K>;
    fn add(self, rhs: Self) -> CommPoly<K> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<K: Scalar> Sub for &CommPoly<K> {
    type Output = CommPoly<K>;
    fn sub(self, rhs: Self) -> CommPoly<K> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = self.clone();
        for (m, c) in rhs.terms() {
            out.add_term(m.clone(), c.clone().neg());
        }
        out
    }
}

impl<K: Scalar> Neg for &CommPoly<K> {
    type Output = CommPoly<K>;
    fn neg(self) -> CommPoly<K> {
        CommPoly {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone().neg()))
                .collect(),
        }
    }
}

impl<K: Scalar> Mul for &CommPoly<K> {
    type Output = CommPoly<K>;
    fn mul(self, rhs: Self) -> CommPoly<K> {
        assert_eq!(self.rank, rhs.rank, "rank mismatch");
        let mut out = CommPoly::zero(self.rank);
        for (ma, ca) in self.terms() {
            for (mb, cb) in rhs.terms() {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

/// Which classical family of symmetric generators to produce.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SymmetricKind {
    PowerSum,
    Elementary,
}

/// The `k`-th power sum `r_1^k + ⋯ + r_n^k` or the `k`-th elementary
/// symmetric polynomial, `1 ≤ k ≤ n`.
pub fn symmetric_generator<K: Scalar>(kind: SymmetricKind, k: usize, n: usize) -> CommPoly<K> {
    assert!(k >= 1 && k <= n, "k = {k} out of range 1..={n}");
    match kind {
        SymmetricKind::PowerSum => {
            let mut p = CommPoly::zero(n);
            for i in 1..=n {
                let mut exps = vec![0; n];
                exps[i - 1] = k as u32;
                p.add_term(Monomial::from_exps(exps), K::one());
            }
            p
        }
        SymmetricKind::Elementary => {
            let mut p = CommPoly::zero(n);
            let mut chosen = Vec::with_capacity(k);
            elementary_rec(&mut p, &mut chosen, 1, k, n);
            p
        }
    }
}

fn elementary_rec<K: Scalar>(
    p: &mut CommPoly<K>,
    chosen: &mut Vec<usize>,
    next: usize,
    k: usize,
    n: usize,
) {
    if chosen.len() == k {
        let mut exps = vec![0; n];
        for &i in chosen.iter() {
            exps[i - 1] = 1;
        }
        p.add_term(Monomial::from_exps(exps), K::one());
        return;
    }
    for i in next..=n {
        chosen.push(i);
        elementary_rec(p, chosen, i + 1, k, n);
        chosen.pop();
    }
}
