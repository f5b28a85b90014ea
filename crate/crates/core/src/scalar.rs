//! Coefficient field abstraction.
//!
//! Every algebraic structure in this crate is generic over an exact scalar
//! field. Equality of scalars must be decidable and structural, which rules
//! out floating point; the intended models are the arbitrary-precision
//! rationals ([`num_rational::BigRational`], the default) and the fixed-width
//! rationals ([`num_rational::Rational64`]) for small computations.

use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Signed};
use std::fmt::{Debug, Display};

/// An exact field of characteristic zero.
///
/// Arithmetic must be exact: `a + b - b == a` holds structurally, and
/// division is exact field division (only ever invoked with nonzero
/// divisors by this crate).
pub trait Scalar:
    Clone + Eq + Debug + Display + Signed + FromPrimitive + Send + Sync + 'static
{
    /// Parses `"num"` or `"num/den"` with an optional leading sign.
    fn parse_ratio(s: &str) -> Option<Self>;

    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer not representable in scalar type")
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_int(num) / Self::from_int(den)
    }
}

impl Scalar for BigRational {
    fn parse_ratio(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}

impl Scalar for Rational64 {
    fn parse_ratio(s: &str) -> Option<Self> {
        s.parse().ok()
    }
}
