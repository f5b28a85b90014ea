//! Canonical text renderers.
//!
//! Rendering is deterministic and injective on normal forms: the linear
//! part comes first, quad entries follow in `(i, j)` order, and every
//! polynomial is written in descending graded-lex order. Output reparses
//! to the same element.

use crate::element::Element;
use crate::poly::{CommPoly, Monomial};
use crate::scalar::Scalar;
use std::fmt;

/// One summand of a rendered sum: sign plus signless body.
struct Piece {
    negative: bool,
    body: String,
}

fn join_pieces(pieces: Vec<Piece>) -> String {
    if pieces.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, piece) in pieces.iter().enumerate() {
        if k == 0 {
            if piece.negative {
                out.push('-');
            }
        } else {
            out.push_str(if piece.negative { " - " } else { " + " });
        }
        out.push_str(&piece.body);
    }
    out
}

fn monomial_text(m: &Monomial) -> String {
    let mut out = String::new();
    for (idx, &e) in m.exps().iter().enumerate() {
        if e == 0 {
            continue;
        }
        out.push('r');
        out.push_str(&(idx + 1).to_string());
        if e > 1 {
            out.push('^');
            out.push_str(&e.to_string());
        }
    }
    out
}

/// `coef · mono` as a signless body plus sign, for use inside a sum.
/// `tail` is appended after the coefficient prefix (the monomial text, or
/// a bracket with its adjoint suffix).
fn term_piece<K: Scalar>(coef: &K, tail: &str) -> Piece {
    let negative = coef.is_negative();
    let magnitude = coef.abs();
    let body = if tail.is_empty() {
        magnitude.to_string()
    } else if magnitude.is_one() {
        tail.to_string()
    } else {
        format!("{magnitude}*{tail}")
    };
    Piece { negative, body }
}

/// Polynomial in the text syntax, e.g. `3/2*r1^2r2 - r3`; `0` when zero.
pub fn poly_text<K: Scalar>(p: &CommPoly<K>) -> String {
    let pieces = p
        .terms_desc()
        .map(|(m, c)| term_piece(c, &monomial_text(m)))
        .collect();
    join_pieces(pieces)
}

/// Element in the text syntax, e.g.
/// `x1 + [x1,x2].(r3) - 1/2*[x2,x2].(r1^2)`; `0` when zero.
pub fn element_text<K: Scalar>(u: &Element<K>) -> String {
    let mut pieces = Vec::new();
    for (i, c) in u.linear().iter().enumerate() {
        if !num_traits::Zero::is_zero(c) {
            pieces.push(term_piece(c, &format!("x{}", i + 1)));
        }
    }
    for (&(i, j), p) in u.quad_entries() {
        let gen = format!("[x{i},x{j}]");
        for (m, c) in p.terms_desc() {
            let tail = if m.is_constant() {
                gen.clone()
            } else {
                format!("{gen}.({})", monomial_text(m))
            };
            pieces.push(term_piece(c, &tail));
        }
    }
    join_pieces(pieces)
}

impl<K: Scalar> fmt::Display for CommPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&poly_text(self))
    }
}

impl<K: Scalar> fmt::Display for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&element_text(self))
    }
}
