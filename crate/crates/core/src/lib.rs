//! Exact symbolic computation in the free metabelian Leibniz algebra `L_n`.
//!
//! The algebra is generated by `x_1, …, x_n` over an exact field of
//! characteristic zero and satisfies
//!
//! * the Leibniz identity `[[x,y],z] = [[x,z],y] + [x,[y,z]]`, and
//! * the metabelian identity `[[x,y],[z,t]] = 0`.
//!
//! Its commutator ideal is a free right module over the polynomial ring
//! `K[r_1, …, r_n]` of adjoint variables, with the brackets `[x_i, x_j]` as
//! free generators; this crate works with elements in that normal form.
//!
//! Provided here:
//!
//! * [`poly`]: the coefficient ring `K[r_1, …, r_n]` with the
//!   variable-permuting symmetric-group action;
//! * [`element`] and [`expr`]: normal forms, the bracket, the module and
//!   permutation actions, and normalization of raw bracket expressions;
//! * [`invariants`]: symmetry tests, symmetrization, the coefficient
//!   conditions characterizing symmetric elements, and the
//!   decompose/synthesize pair for the `(α, f, g)` parameterization;
//! * [`oracle`]: a brute-force fixed-point solver that recovers bases of
//!   the symmetric subspace degree by degree;
//! * [`inner`]: annihilator tests and the calculus of inner automorphisms
//!   `1 + ad u`;
//! * [`parse`], [`render`], [`json`]: the text grammar and JSON schema
//!   for elements and symmetric data;
//! * [`sample`]: seeded random generators for the verification suites.
//!
//! All values are immutable and all operations are pure; everything may be
//! shared freely across threads.

pub mod element;
pub mod error;
pub mod expr;
pub mod inner;
pub mod invariants;
pub mod json;
pub mod linalg;
pub mod oracle;
pub mod parse;
pub mod perm;
pub mod poly;
pub mod render;
pub mod sample;
pub mod scalar;

pub use element::Element;
pub use error::{Error, Result};
pub use expr::BracketExpr;
pub use inner::{
    annihilator_generator, decompose_preserving, is_in_annihilator, preserves_symmetric, AnnKind,
    InnerAuto,
};
pub use invariants::{
    decompose_symmetric, diagonal_symmetry_conditions, is_symmetric,
    off_diagonal_symmetry_conditions, symmetrize, synthesize, SymmetricData,
};
pub use perm::{stabilizer_generators, Permutation};
pub use poly::{symmetric_generator, CommPoly, Monomial, SymmetricKind};
pub use scalar::Scalar;

/// The default exact coefficient field: arbitrary-precision rationals.
pub type Rat = num_rational::BigRational;

/// Concrete aliases for the rational instantiation used by the CLI.
pub type RatPoly = CommPoly<Rat>;
pub type RatElement = Element<Rat>;
pub type RatExpr = BracketExpr<Rat>;
pub type RatSymmetricData = SymmetricData<Rat>;
pub type RatInnerAuto = InnerAuto<Rat>;
