//! Text parsers for algebra expressions and polynomials.
//!
//! Expression grammar (whitespace insignificant):
//!
//! ```text
//! expr     := ["-"] term { ("+" | "-") term }
//! term     := [ rational "*" ] factor { "." adj }
//! factor   := gen | "[" expr "," expr "]" | "(" expr ")"
//! gen      := "x" index
//! adj      := "r" index | "(" poly ")"
//! rational := ["-"] digits [ "/" digits ]
//! ```
//!
//! `.rI` is the right adjoint action of `x_I`; `.( p )` is the right
//! module action of the polynomial `p` and desugars to coefficient-scaled
//! chains of adjoints, so rendered elements reparse exactly.
//!
//! Polynomial grammar: terms joined by `+`/`-`; a term is an optional
//! rational coefficient `a/b*` followed by a product of `rI^E` factors,
//! e.g. `3/2*r1^2r2 - r3`.

use crate::expr::BracketExpr;
use crate::poly::{CommPoly, Monomial};
use crate::scalar::Scalar;
use thiserror::Error;

/// Syntax or validation error with source position (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

type PResult<T> = std::result::Result<T, ParseError>;

/// Parses a bracket expression; every generator and adjoint index must be
/// within `1..=n`.
pub fn parse_element<K: Scalar>(text: &str, n: usize) -> PResult<BracketExpr<K>> {
    let mut p = Parser::new(text, n);
    let e = p.expr()?;
    p.expect_end()?;
    Ok(e)
}

/// Parses a polynomial in the adjoint variables `r_1..r_n`.
pub fn parse_poly<K: Scalar>(text: &str, n: usize) -> PResult<CommPoly<K>> {
    let mut p = Parser::new(text, n);
    let poly = p.poly()?;
    p.expect_end()?;
    Ok(poly)
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    rank: usize,
}

impl Parser {
    fn new(text: &str, rank: usize) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            rank,
        }
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError {
            line: self.line,
            column: self.col,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied();
        if let Some(c) = c {
            self.pos += 1;
            if c == '\n' {
                self.line += 1;
                self.col = 1;
            } else {
                self.col += 1;
            }
        }
        c
    }

    fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, expected: char) -> PResult<()> {
        if self.eat(expected) {
            Ok(())
        } else {
            match self.peek() {
                Some(c) => self.err(format!("expected '{expected}', found '{c}'")),
                None => self.err(format!("expected '{expected}', found end of input")),
            }
        }
    }

    fn expect_end(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected '{c}'")),
        }
    }

    fn digits(&mut self) -> PResult<String> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == start {
            return self.err("expected digits");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn index(&mut self) -> PResult<usize> {
        let digits = self.digits()?;
        let value: usize = match digits.parse() {
            Ok(v) => v,
            Err(_) => return self.err(format!("index '{digits}' too large")),
        };
        if value < 1 || value > self.rank {
            return self.err(format!(
                "index {value} out of range for rank {}",
                self.rank
            ));
        }
        Ok(value)
    }

    /// `["-"] digits ["/" digits]`, built through the scalar parser so
    /// arbitrary-precision coefficients survive.
    fn rational<K: Scalar>(&mut self) -> PResult<K> {
        self.skip_ws();
        let negative = self.eat('-');
        let numer = self.digits()?;
        let denom = if self.peek() == Some('/') {
            self.bump();
            let d = self.digits()?;
            if d.chars().all(|c| c == '0') {
                return self.err("zero denominator");
            }
            Some(d)
        } else {
            None
        };
        let mut s = String::new();
        if negative {
            s.push('-');
        }
        s.push_str(&numer);
        if let Some(d) = &denom {
            s.push('/');
            s.push_str(d);
        }
        match K::parse_ratio(&s) {
            Some(v) => Ok(v),
            None => self.err(format!("invalid rational '{s}'")),
        }
    }

    fn starts_rational(&mut self) -> bool {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => true,
            Some('-') => matches!(
                self.chars.get(self.pos + 1),
                Some(c) if c.is_ascii_digit()
            ),
            _ => false,
        }
    }

    // --- bracket expressions -------------------------------------------

    fn expr<K: Scalar>(&mut self) -> PResult<BracketExpr<K>> {
        let mut terms = Vec::new();
        let leading_minus = self.eat('-');
        let first = self.term()?;
        terms.push(if leading_minus {
            BracketExpr::scaled(-K::one(), first)
        } else {
            first
        });
        loop {
            match self.peek() {
                Some('+') => {
                    self.bump();
                    let t = self.term()?;
                    terms.push(t);
                }
                Some('-') => {
                    self.bump();
                    let t = self.term()?;
                    terms.push(BracketExpr::scaled(-K::one(), t));
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().unwrap()
        } else {
            BracketExpr::Sum(terms)
        })
    }

    fn term<K: Scalar>(&mut self) -> PResult<BracketExpr<K>> {
        let coeff: Option<K> = if self.starts_rational() {
            let c: K = self.rational()?;
            if !self.eat('*') {
                // a bare constant only denotes the zero element
                if c.is_zero() {
                    return Ok(BracketExpr::Sum(Vec::new()));
                }
                return self.err("expected '*' after coefficient");
            }
            Some(c)
        } else {
            None
        };
        let mut e = self.factor()?;
        while self.peek() == Some('.') {
            self.bump();
            e = self.adjoint_suffix(e)?;
        }
        Ok(match coeff {
            Some(c) => BracketExpr::scaled(c, e),
            None => e,
        })
    }

    fn factor<K: Scalar>(&mut self) -> PResult<BracketExpr<K>> {
        match self.peek() {
            Some('x') => {
                self.bump();
                let i = self.index()?;
                Ok(BracketExpr::Generator(i))
            }
            Some('[') => {
                self.bump();
                let left = self.expr()?;
                self.expect(',')?;
                let right = self.expr()?;
                self.expect(']')?;
                Ok(BracketExpr::bracket(left, right))
            }
            Some('(') => {
                self.bump();
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) => self.err(format!("expected 'x', '[' or '(', found '{c}'")),
            None => self.err("expected 'x', '[' or '(', found end of input"),
        }
    }

    /// After a consumed `.`: either `rI` or a parenthesized polynomial.
    fn adjoint_suffix<K: Scalar>(&mut self, base: BracketExpr<K>) -> PResult<BracketExpr<K>> {
        match self.peek() {
            Some('r') => {
                self.bump();
                let i = self.index()?;
                Ok(BracketExpr::adj(base, i))
            }
            Some('(') => {
                self.bump();
                let poly: CommPoly<K> = self.poly()?;
                self.expect(')')?;
                Ok(apply_poly_action(base, &poly))
            }
            Some(c) => self.err(format!("expected 'r' or '(' after '.', found '{c}'")),
            None => self.err("expected 'r' or '(' after '.', found end of input"),
        }
    }

    // --- polynomials ----------------------------------------------------

    fn poly<K: Scalar>(&mut self) -> PResult<CommPoly<K>> {
        let n = self.rank;
        let mut acc = CommPoly::<K>::zero(n);
        let mut negate = self.eat('-');
        loop {
            let (mono, coef) = self.poly_term::<K>()?;
            let signed = if negate { -coef } else { coef };
            acc.add_term(mono, signed);
            match self.peek() {
                Some('+') => {
                    self.bump();
                    negate = false;
                }
                Some('-') => {
                    self.bump();
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn poly_term<K: Scalar>(&mut self) -> PResult<(Monomial, K)> {
        let n = self.rank;
        if self.starts_rational() {
            let c: K = self.rational()?;
            if self.eat('*') {
                let mono = self.poly_factors()?;
                Ok((mono, c))
            } else {
                Ok((Monomial::constant(n), c))
            }
        } else {
            let mono = self.poly_factors()?;
            Ok((mono, K::one()))
        }
    }

    fn poly_factors(&mut self) -> PResult<Monomial> {
        let n = self.rank;
        let mut exps = vec![0u32; n];
        let mut any = false;
        while self.peek() == Some('r') {
            self.bump();
            let i = self.index()?;
            let e: u32 = if self.eat('^') {
                let digits = self.digits()?;
                match digits.parse() {
                    Ok(v) => v,
                    Err(_) => return self.err(format!("exponent '{digits}' too large")),
                }
            } else {
                1
            };
            exps[i - 1] += e;
            any = true;
        }
        if !any {
            return match self.peek() {
                Some(c) => self.err(format!("expected 'r', found '{c}'")),
                None => self.err("expected 'r', found end of input"),
            };
        }
        Ok(Monomial::from_exps(exps))
    }
}

/// Desugars `base.(p)`: each term `c·r_{i1}^{e1}⋯` becomes `c` times the
/// base followed by the corresponding chain of right adjoints.
fn apply_poly_action<K: Scalar>(base: BracketExpr<K>, p: &CommPoly<K>) -> BracketExpr<K> {
    if p.is_zero() {
        return BracketExpr::scaled(K::zero(), base);
    }
    let mut terms = Vec::new();
    for (mono, coef) in p.terms_desc() {
        let mut e = base.clone();
        for (idx, &exp) in mono.exps().iter().enumerate() {
            for _ in 0..exp {
                e = BracketExpr::adj(e, idx + 1);
            }
        }
        terms.push(if coef.is_one() {
            e
        } else {
            BracketExpr::scaled(coef.clone(), e)
        });
    }
    if terms.len() == 1 {
        terms.pop().unwrap()
    } else {
        BracketExpr::Sum(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::Element;
    use num_rational::BigRational;

    type X = BracketExpr<BigRational>;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::from_ratio(n, d)
    }

    #[test]
    fn adjoint_suffix_shape() {
        let e: X = parse_element("[x1,x2].r3", 3).unwrap();
        assert_eq!(e, X::adj(X::bracket(X::gen(1), X::gen(2)), 3));
    }

    #[test]
    fn scaled_sum_shape() {
        let e: X = parse_element("1/2*[x1,x1] - [x2,x1]", 2).unwrap();
        let expected = X::sum([
            X::scaled(rat(1, 2), X::bracket(X::gen(1), X::gen(1))),
            X::scaled(rat(-1, 1), X::bracket(X::gen(2), X::gen(1))),
        ]);
        assert_eq!(e, expected);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = parse_element::<BigRational>("[x1,]", 2).unwrap_err();
        assert_eq!(err.line, 1);
        assert_eq!(err.column, 5);

        let err = parse_element::<BigRational>("x1 +\n  [x2,", 2).unwrap_err();
        assert_eq!(err.line, 2);
    }

    #[test]
    fn out_of_range_indices_are_rejected() {
        let err = parse_element::<BigRational>("x4", 3).unwrap_err();
        assert!(err.message.contains("out of range"));
        let err = parse_element::<BigRational>("[x1,x2].r9", 3).unwrap_err();
        assert!(err.message.contains("out of range"));
    }

    #[test]
    fn polynomial_action_desugars_to_adjoints() {
        let n = 3;
        let via_action: X = parse_element("[x1,x2].(r1^2r3 + 2*r2)", n).unwrap();
        let via_adjoints: X =
            parse_element("[x1,x2].r1.r1.r3 + 2*[x1,x2].r2", n).unwrap();
        assert_eq!(
            via_action.normalize(n).unwrap(),
            via_adjoints.normalize(n).unwrap()
        );
    }

    #[test]
    fn poly_parsing() {
        let p: CommPoly<BigRational> = parse_poly("3/2*r1^2r2 - r3", 3).unwrap();
        let expected = CommPoly::from_terms(
            3,
            [
                (Monomial::from_exps(vec![2, 1, 0]), rat(3, 2)),
                (Monomial::from_exps(vec![0, 0, 1]), rat(-1, 1)),
            ],
        );
        assert_eq!(p, expected);

        let c: CommPoly<BigRational> = parse_poly("-5", 2).unwrap();
        assert_eq!(c, CommPoly::constant(2, rat(-5, 1)));

        assert!(parse_poly::<BigRational>("1/0", 2).is_err());
        assert!(parse_poly::<BigRational>("r1 +", 2).is_err());
    }

    #[test]
    fn unary_minus_and_whitespace() {
        let n = 2;
        let a: X = parse_element("-x1 + x2", n).unwrap();
        let b: X = parse_element("  x2-x1 ", n).unwrap();
        assert_eq!(a.normalize(n).unwrap(), b.normalize(n).unwrap());
    }

    #[test]
    fn parenthesized_subexpressions() {
        let n = 2;
        let a: X = parse_element("[(x1 + x2), x1]", n).unwrap();
        let direct = &Element::commutator(1, 1, n) + &Element::commutator(2, 1, n);
        assert_eq!(a.normalize(n).unwrap(), direct);
    }

    #[test]
    fn trailing_junk_is_an_error() {
        assert!(parse_element::<BigRational>("x1 x2", 2).is_err());
        assert!(parse_element::<BigRational>("x1 ]", 2).is_err());
    }

    #[test]
    fn zero_literal_denotes_the_zero_element() {
        let z: X = parse_element("0", 2).unwrap();
        assert!(z.normalize(2).unwrap().is_zero());
        assert!(parse_element::<BigRational>("3", 2).is_err());
    }
}
