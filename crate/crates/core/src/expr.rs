//! Abstract syntax trees of raw (un-normalized) bracket expressions and
//! their reduction to normal form.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A raw algebra expression prior to normalization.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BracketExpr<K> {
    /// The generator `x_i`, 1-based.
    Generator(usize),
    Scaled(K, Box<BracketExpr<K>>),
    Sum(Vec<BracketExpr<K>>),
    Bracket(Box<BracketExpr<K>>, Box<BracketExpr<K>>),
    /// Right adjoint action: `RightAdj(e, m)` denotes `[e, x_m]`.
    RightAdj(Box<BracketExpr<K>>, usize),
}

impl<K: Scalar> BracketExpr<K> {
    pub fn gen(i: usize) -> Self {
        BracketExpr::Generator(i)
    }

    pub fn scaled(c: K, e: BracketExpr<K>) -> Self {
        BracketExpr::Scaled(c, Box::new(e))
    }

    pub fn sum<I: IntoIterator<Item = BracketExpr<K>>>(items: I) -> Self {
        BracketExpr::Sum(items.into_iter().collect())
    }

    pub fn bracket(a: BracketExpr<K>, b: BracketExpr<K>) -> Self {
        BracketExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn adj(e: BracketExpr<K>, m: usize) -> Self {
        BracketExpr::RightAdj(Box::new(e), m)
    }

    /// Evaluates the expression in `L_n`, reducing it to normal form by
    /// bottom-up structural recursion. Two expressions equal modulo the
    /// defining identities normalize to the same element.
    pub fn normalize(&self, n: usize) -> Result<Element<K>> {
        match self {
            BracketExpr::Generator(i) => {
                if *i < 1 || *i > n {
                    return Err(Error::IndexOutOfRange { index: *i, rank: n });
                }
                Ok(Element::generator(*i, n))
            }
            BracketExpr::Scaled(c, e) => Ok(e.normalize(n)?.scale(c)),
            BracketExpr::Sum(items) => {
                let mut acc = Element::zero(n);
                for e in items {
                    acc = &acc + &e.normalize(n)?;
                }
                Ok(acc)
            }
            BracketExpr::Bracket(a, b) => Ok(a.normalize(n)?.bracket(&b.normalize(n)?)),
            BracketExpr::RightAdj(e, m) => {
                if *m < 1 || *m > n {
                    return Err(Error::IndexOutOfRange { index: *m, rank: n });
                }
                Ok(e.normalize(n)?.bracket(&Element::generator(*m, n)))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::One;

    type X = BracketExpr<BigRational>;
    type E = Element<BigRational>;

    #[test]
    fn bilinear_expansion() {
        // [x1 + x2, x1] = a_1 + [x2, x1]
        let e = X::bracket(X::sum([X::gen(1), X::gen(2)]), X::gen(1));
        let got = e.normalize(2).unwrap();
        let expected = &E::commutator(1, 1, 2) + &E::commutator(2, 1, 2);
        assert_eq!(got, expected);
    }

    #[test]
    fn defining_identity_normalizes_to_zero() {
        // [[x1,x2],x3] − [[x1,x3],x2] − [x1,[x2,x3]]
        let lhs = X::bracket(X::bracket(X::gen(1), X::gen(2)), X::gen(3));
        let m1 = X::bracket(X::bracket(X::gen(1), X::gen(3)), X::gen(2));
        let m2 = X::bracket(X::gen(1), X::bracket(X::gen(2), X::gen(3)));
        let minus_one = -BigRational::one();
        let e = X::sum([
            lhs,
            X::scaled(minus_one.clone(), m1),
            X::scaled(minus_one, m2),
        ]);
        assert!(e.normalize(3).unwrap().is_zero());
    }

    #[test]
    fn square_expansion_normalizes_to_zero() {
        // [x1,x2] + [x2,x1] − [x1+x2,x1+x2] + [x1,x1] + [x2,x2]
        let minus_one = -BigRational::one();
        let sum12 = X::sum([X::gen(1), X::gen(2)]);
        let e = X::sum([
            X::bracket(X::gen(1), X::gen(2)),
            X::bracket(X::gen(2), X::gen(1)),
            X::scaled(minus_one, X::bracket(sum12.clone(), sum12)),
            X::bracket(X::gen(1), X::gen(1)),
            X::bracket(X::gen(2), X::gen(2)),
        ]);
        assert!(e.normalize(2).unwrap().is_zero());
    }

    #[test]
    fn right_adjoint_matches_bracket() {
        let e = X::adj(X::bracket(X::gen(1), X::gen(2)), 3);
        let b = X::bracket(X::bracket(X::gen(1), X::gen(2)), X::gen(3));
        assert_eq!(e.normalize(3).unwrap(), b.normalize(3).unwrap());
    }

    #[test]
    fn out_of_range_index_is_reported() {
        let e = X::bracket(X::gen(1), X::gen(4));
        assert_eq!(
            e.normalize(3),
            Err(Error::IndexOutOfRange { index: 4, rank: 3 })
        );
    }
}
