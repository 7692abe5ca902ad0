//! Exact scalar field used for weights, forms and levels.
//!
//! Everything in this crate is computed with exact arithmetic, so the scalar
//! must be an ordered field with exact equality. Any `num_rational::Ratio<T>`
//! over a signed integer type that converts from `i64` qualifies: `Ratio<i64>`,
//! `Ratio<i128>` and `BigRational` all implement [`Scalar`]. Floating point
//! types are deliberately not `Scalar`s: they are neither `Ord` nor `Hash`.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed, ToPrimitive};

pub trait Scalar:
    Clone + Debug + Display + Ord + Hash + Num + Signed + Send + Sync + 'static
{
    /// `numer / denom`; panics if `denom == 0`.
    fn from_ratio(numer: i64, denom: i64) -> Self;

    fn is_integral(&self) -> bool;

    /// The value as an `i64`, if it is an integer that fits.
    fn integer_value(&self) -> Option<i64>;

    fn numer_i64(&self) -> Option<i64>;

    fn denom_i64(&self) -> Option<i64>;

    fn from_int(n: i64) -> Self {
        Self::from_ratio(n, 1)
    }

    fn half() -> Self {
        Self::from_ratio(1, 2)
    }
}

impl<T> Scalar for Ratio<T>
where
    T: Clone
        + Integer
        + Signed
        + Hash
        + Debug
        + Display
        + ToPrimitive
        + From<i64>
        + Send
        + Sync
        + 'static,
{
    fn from_ratio(numer: i64, denom: i64) -> Self {
        Ratio::new(T::from(numer), T::from(denom))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }

    fn integer_value(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }

    fn numer_i64(&self) -> Option<i64> {
        self.numer().to_i64()
    }

    fn denom_i64(&self) -> Option<i64> {
        self.denom().to_i64()
    }
}

/// Parses `"p"`, `"-p"`, `"p/q"` or `"-p/q"`. Decimals are rejected.
pub fn parse_scalar<S: Scalar>(text: &str) -> Option<S> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: i64 = num.strip_prefix('+').unwrap_or(num).parse().ok()?;
    let den: i64 = den.parse().ok()?;
    if den <= 0 {
        return None;
    }
    Some(S::from_ratio(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<i64>;

    #[test]
    fn reduced_on_construction() {
        let x = Q::from_ratio(6, -4);
        assert_eq!(x.numer_i64(), Some(-3));
        assert_eq!(x.denom_i64(), Some(2));
        assert!(!x.is_integral());
        assert_eq!(Q::from_ratio(8, 4).integer_value(), Some(2));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_scalar::<Q>("1/2"), Some(Q::half()));
        assert_eq!(parse_scalar::<Q>("-3"), Some(Q::from_int(-3)));
        assert_eq!(parse_scalar::<Q>("+4/6"), Some(Q::from_ratio(2, 3)));
        assert_eq!(parse_scalar::<Q>("0.5"), None);
        assert_eq!(parse_scalar::<Q>("1/0"), None);
        assert_eq!(parse_scalar::<Q>("1/-2"), None);
        assert_eq!(parse_scalar::<Q>("abc"), None);
    }

    #[test]
    fn big_rational_is_a_scalar() {
        let x = <Ratio<BigInt> as Scalar>::from_ratio(-7, 14);
        assert_eq!(x.to_string(), "-1/2");
        assert_eq!(
            <Ratio<i128> as Scalar>::from_int(5).integer_value(),
            Some(5)
        );
    }
}
