use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive};

/// An exact ordered field whose elements are fractions over an integer type.
///
/// Everything in the crate that only needs field arithmetic, ordering and
/// access to numerator/denominator is written against this trait.
pub trait ExactScalar:
    Clone + Ord + Hash + Debug + Display + Num + Signed + Send + Sync + 'static
{
    type Int: Integer + Signed + Clone + Hash + Debug + Display + Send + Sync;

    fn from_int(n: i64) -> Self;
    fn from_frac(numer: i64, denom: i64) -> Self;
    fn numer(&self) -> &Self::Int;
    fn denom(&self) -> &Self::Int;
    fn int_from_u64(n: u64) -> Self::Int;
    fn int_to_i64(n: &Self::Int) -> Option<i64>;
    /// Parses `"p/q"` or `"n"`, returning `None` on malformed input or zero
    /// denominator.
    fn parse(s: &str) -> Option<Self>;

    fn is_integer(&self) -> bool {
        self.denom().is_one()
    }

    fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            Self::int_to_i64(self.numer())
        } else {
            None
        }
    }

    /// Largest integer `<= self`.
    fn floor_int(&self) -> Self;

    fn fract(&self) -> Self {
        self.clone() - self.floor_int()
    }
}

impl<I> ExactScalar for Ratio<I>
where
    I: Integer
        + Signed
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static,
{
    type Int = I;

    fn from_int(n: i64) -> Self {
        Ratio::from_integer(I::from_i64(n).expect("integer out of range"))
    }

    fn from_frac(numer: i64, denom: i64) -> Self {
        Ratio::new(
            I::from_i64(numer).expect("integer out of range"),
            I::from_i64(denom).expect("integer out of range"),
        )
    }

    fn numer(&self) -> &I {
        Ratio::numer(self)
    }

    fn denom(&self) -> &I {
        Ratio::denom(self)
    }

    fn int_from_u64(n: u64) -> I {
        I::from_u64(n).expect("integer out of range")
    }

    fn int_to_i64(n: &I) -> Option<i64> {
        n.to_i64()
    }

    fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse::<I>().ok()?, d.trim().parse::<I>().ok()?),
            None => (s.parse::<I>().ok()?, I::one()),
        };
        if d.is_zero() {
            return None;
        }
        Some(Ratio::new(n, d))
    }

    fn floor_int(&self) -> Self {
        self.floor()
    }
}

/// Convenience for `T::from_int(n)`.
pub fn int<T: ExactScalar>(n: i64) -> T {
    T::from_int(n)
}

/// Convenience for `T::from_frac(p, q)`.
pub fn frac<T: ExactScalar>(p: i64, q: i64) -> T {
    T::from_frac(p, q)
}

