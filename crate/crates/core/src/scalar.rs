//! Scalar abstraction.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Zero};

/// Arbitrary-precision rational, the ground field used throughout.
pub type Q = BigRational;

/// Field-like scalar the algebra is generic over.
///
/// Exact zero tests are used everywhere (`d² = 0`, ranks, kernels), so only
/// exact fields give meaningful verdicts. Floating-point types satisfy the
/// bounds and work for the purely multiplicative paths.
pub trait Scalar:
    Clone + Debug + PartialEq + Num + Neg<Output = Self> + FromPrimitive + Send + Sync + 'static
{
    fn int(v: i64) -> Self {
        Self::from_i64(v).expect("integer is representable")
    }

    fn ratio(p: i64, q: i64) -> Self {
        Self::int(p) / Self::int(q)
    }
}

impl<T> Scalar for T where
    T: Clone + Debug + PartialEq + Num + Neg<Output = T> + FromPrimitive + Send + Sync + 'static
{
}

/// Shorthand for an integer rational.
pub fn q(v: i64) -> Q {
    BigRational::from_integer(BigInt::from(v))
}

/// Shorthand for `p/d`.
pub fn qr(p: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

/// Canonical `p/q` text form used by every file format.
pub fn format_q(v: &Q) -> String {
    format!("{}/{}", v.numer(), v.denom())
}

/// Parses `p`, `-p`, `p/q`; the result is reduced with a positive denominator.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str_radix(n.trim(), 10).ok()?;
    let d = BigInt::from_str_radix(d.trim(), 10).ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// `n!` as a scalar.
pub fn factorial<T: Scalar>(n: u32) -> T {
    (1..=n as i64).fold(T::one(), |acc, k| acc * T::int(k))
}

pub(crate) fn sign<T: Scalar>(negative: bool) -> T {
    if negative {
        -T::one()
    } else {
        T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(parse_q("4/-6").unwrap(), qr(-2, 3));
        assert_eq!(format_q(&parse_q("4/-6").unwrap()), "-2/3");
        assert_eq!(format_q(&q(5)), "5/1");
        assert_eq!(parse_q(" 7 ").unwrap(), q(7));
        assert!(parse_q("1/0").is_none());
        assert!(parse_q("x").is_none());
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial::<Q>(0), q(1));
        assert_eq!(factorial::<Q>(4), q(24));
        assert_eq!(factorial::<f64>(3), 6.0);
    }
}
