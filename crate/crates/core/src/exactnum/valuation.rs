use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_integer::Integer;

use super::scalar::ExactScalar;
use super::NumError;

/// A p-adic valuation: a finite integer, or `+inf` for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedValuation {
    Finite(i64),
    Infinite,
}

impl ExtendedValuation {
    pub fn is_infinite(self) -> bool {
        matches!(self, ExtendedValuation::Infinite)
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtendedValuation::Finite(v) => Some(v),
            ExtendedValuation::Infinite => None,
        }
    }
}

impl PartialOrd for ExtendedValuation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedValuation {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedValuation::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => Ordering::Less,
            (Infinite, Finite(_)) => Ordering::Greater,
            (Infinite, Infinite) => Ordering::Equal,
        }
    }
}

impl Add for ExtendedValuation {
    type Output = ExtendedValuation;

    fn add(self, rhs: Self) -> Self {
        match (self, rhs) {
            (ExtendedValuation::Finite(a), ExtendedValuation::Finite(b)) => {
                ExtendedValuation::Finite(a + b)
            }
            _ => ExtendedValuation::Infinite,
        }
    }
}

impl fmt::Display for ExtendedValuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedValuation::Finite(v) => write!(f, "{v}"),
            ExtendedValuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn int_valuation<I: Integer + Clone>(n: &I, p: &I) -> i64 {
    let mut v = 0;
    let mut m = n.clone();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return v;
        }
        m = q;
        v += 1;
    }
}

/// `v_p(q)`, with `v_p(0) = +inf`.
pub fn padic_valuation<T: ExactScalar>(q: &T, p: u64) -> Result<ExtendedValuation, NumError> {
    if !is_prime(p) {
        return Err(NumError::NotPrime(p));
    }
    if q.is_zero() {
        return Ok(ExtendedValuation::Infinite);
    }
    let pp = T::int_from_u64(p);
    Ok(ExtendedValuation::Finite(
        int_valuation(q.numer(), &pp) - int_valuation(q.denom(), &pp),
    ))
}

/// Valuation of a nonzero integer.
pub fn integer_valuation(n: u64, p: u64) -> u32 {
    debug_assert!(n != 0);
    let mut n = n;
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}
