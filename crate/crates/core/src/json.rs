//! JSON schema for elements and symmetric data.
//!
//! Element schema:
//!
//! ```json
//! {"n": 2,
//!  "linear": ["1", "-1/2"],
//!  "quad": [{"i": 1, "j": 2,
//!            "poly": [{"coef": "3/2", "exps": [2, 1]}]}]}
//! ```
//!
//! `quad` is sorted by `(i, j)` and each `poly` is in descending
//! graded-lex order, so serialization is byte-stable. Symmetric data uses
//! `{"n", "alpha", "f", "g"}` with the same polynomial encoding.

use crate::element::Element;
use crate::error::{Error, Result};
use crate::invariants::SymmetricData;
use crate::poly::{CommPoly, Monomial};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct PolyTermJson {
    pub coef: String,
    pub exps: Vec<u32>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct QuadEntryJson {
    pub i: usize,
    pub j: usize,
    pub poly: Vec<PolyTermJson>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct ElementJson {
    pub n: usize,
    pub linear: Vec<String>,
    pub quad: Vec<QuadEntryJson>,
}

#[derive(Serialize, Deserialize, Clone, PartialEq, Eq, Debug)]
pub struct SymmetricDataJson {
    pub n: usize,
    pub alpha: String,
    pub f: Vec<PolyTermJson>,
    pub g: Vec<PolyTermJson>,
}

pub fn poly_to_terms<K: Scalar>(p: &CommPoly<K>) -> Vec<PolyTermJson> {
    p.terms_desc()
        .map(|(m, c)| PolyTermJson {
            coef: c.to_string(),
            exps: m.exps().to_vec(),
        })
        .collect()
}

pub fn poly_from_terms<K: Scalar>(terms: &[PolyTermJson], n: usize) -> Result<CommPoly<K>> {
    let mut p = CommPoly::zero(n);
    for t in terms {
        if t.exps.len() != n {
            return Err(Error::InvalidData {
                field: "exps".to_string(),
                detail: format!("expected {n} exponents, found {}", t.exps.len()),
            });
        }
        let c = K::parse_ratio(&t.coef).ok_or_else(|| Error::InvalidData {
            field: "coef".to_string(),
            detail: format!("'{}' is not a rational", t.coef),
        })?;
        p.add_term(Monomial::from_exps(t.exps.clone()), c);
    }
    Ok(p)
}

pub fn element_to_json<K: Scalar>(u: &Element<K>) -> ElementJson {
    ElementJson {
        n: u.rank(),
        linear: u.linear().iter().map(|c| c.to_string()).collect(),
        quad: u
            .quad_entries()
            .map(|(&(i, j), p)| QuadEntryJson {
                i,
                j,
                poly: poly_to_terms(p),
            })
            .collect(),
    }
}

pub fn element_from_json<K: Scalar>(data: &ElementJson) -> Result<Element<K>> {
    let n = data.n;
    if n == 0 {
        return Err(Error::InvalidData {
            field: "n".to_string(),
            detail: "rank must be at least 1".to_string(),
        });
    }
    if data.linear.len() != n {
        return Err(Error::InvalidData {
            field: "linear".to_string(),
            detail: format!("expected {n} coefficients, found {}", data.linear.len()),
        });
    }
    let linear = data
        .linear
        .iter()
        .map(|s| {
            K::parse_ratio(s).ok_or_else(|| Error::InvalidData {
                field: "linear".to_string(),
                detail: format!("'{s}' is not a rational"),
            })
        })
        .collect::<Result<Vec<K>>>()?;
    let mut quad = Vec::new();
    for entry in &data.quad {
        if entry.i < 1 || entry.i > n {
            return Err(Error::IndexOutOfRange {
                index: entry.i,
                rank: n,
            });
        }
        if entry.j < 1 || entry.j > n {
            return Err(Error::IndexOutOfRange {
                index: entry.j,
                rank: n,
            });
        }
        quad.push(((entry.i, entry.j), poly_from_terms(&entry.poly, n)?));
    }
    Ok(Element::from_parts(n, linear, quad))
}

pub fn symmetric_data_to_json<K: Scalar>(d: &SymmetricData<K>) -> SymmetricDataJson {
    SymmetricDataJson {
        n: d.rank,
        alpha: d.alpha.to_string(),
        f: poly_to_terms(&d.f),
        g: poly_to_terms(&d.g),
    }
}

/// Parses symmetric data and validates its stabilizer constraints.
pub fn symmetric_data_from_json<K: Scalar>(data: &SymmetricDataJson) -> Result<SymmetricData<K>> {
    let n = data.n;
    if n == 0 {
        return Err(Error::InvalidData {
            field: "n".to_string(),
            detail: "rank must be at least 1".to_string(),
        });
    }
    let alpha = K::parse_ratio(&data.alpha).ok_or_else(|| Error::InvalidData {
        field: "alpha".to_string(),
        detail: format!("'{}' is not a rational", data.alpha),
    })?;
    SymmetricData::new(
        n,
        alpha,
        poly_from_terms(&data.f, n)?,
        poly_from_terms(&data.g, n)?,
    )
}
