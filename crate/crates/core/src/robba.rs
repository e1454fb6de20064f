//! Rank-one p-adic differential operators `d/dz + a_1/z + ... + a_n/z^n`.

use crate::exactnum::{is_prime, padic_valuation, ExactScalar, ExtendedValuation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RobbaError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("coefficient a_{0} has negative {1}-adic valuation")]
    NotIntegral(usize, u64),
    #[error("operators over different primes {0} and {1}")]
    PrimeMismatch(u64, u64),
    #[error("operator is not tame")]
    NotTame,
    #[error("pullback degree must be positive")]
    ZeroDegree,
    #[error("character order does not fit in 64 bits")]
    Overflow,
}

/// `coefficients[i - 1] = a_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RankOneOperator<T: ExactScalar> {
    p: u64,
    coefficients: Vec<T>,
}

impl<T: ExactScalar> RankOneOperator<T> {
    pub fn new(p: u64, coefficients: Vec<T>) -> Result<Self, RobbaError> {
        if !is_prime(p) {
            return Err(RobbaError::NotPrime(p));
        }
        for (i, a) in coefficients.iter().enumerate() {
            if val(a, p) < ExtendedValuation::Finite(0) {
                return Err(RobbaError::NotIntegral(i + 1, p));
            }
        }
        Ok(RankOneOperator { p, coefficients })
    }

    /// `d/dz`.
    pub fn trivial(p: u64) -> Result<Self, RobbaError> {
        Self::new(p, Vec::new())
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    /// `a_i`, zero past the stored coefficients.
    pub fn coefficient(&self, i: usize) -> T {
        i.checked_sub(1).and_then(|k| self.coefficients.get(k)).cloned().unwrap_or_else(T::zero)
    }

    /// Largest `i` with `a_i != 0`, or 0.
    pub fn pole_order(&self) -> usize {
        self.coefficients.iter().rposition(|a| !a.is_zero()).map_or(0, |k| k + 1)
    }

    fn with(&self, coefficients: Vec<T>) -> Self {
        RankOneOperator { p: self.p, coefficients }
    }

    /// Whether `a z^{-i}` is gauged away: `v_p(a / (1 - i)) > 1/(p - 1)`.
    pub fn removable(&self, i: usize, a: &T) -> bool {
        removable(a, i, self.p)
    }

    pub fn reduce(&self) -> Self {
        let mut c = self.coefficients.clone();
        loop {
            while c.last().is_some_and(|a| a.is_zero()) {
                c.pop();
            }
            let n = c.len();
            if n >= 2 && removable(&c[n - 1], n, self.p) {
                c.pop();
            } else {
                break;
            }
        }
        self.with(c)
    }

    pub fn slope(&self) -> T {
        let n = self.reduce().pole_order();
        T::from_int(n.saturating_sub(1) as i64)
    }

    pub fn is_tame(&self) -> bool {
        self.reduce().pole_order() <= 1
    }

    /// `a_1 mod Z`, normalized into `[0, 1)`.
    pub fn residue(&self) -> T {
        self.coefficient(1).fract()
    }

    /// The residue as a class of `Z_(p)/Z`; coefficients are p-integral, so
    /// the denominator is prime to `p`.
    pub fn frobenius_residue_class(&self) -> T {
        let r = self.residue();
        debug_assert!(val(&r, self.p) >= ExtendedValuation::Finite(0));
        r
    }

    pub fn tensor(&self, other: &Self) -> Result<Self, RobbaError> {
        if self.p != other.p {
            return Err(RobbaError::PrimeMismatch(self.p, other.p));
        }
        let n = self.coefficients.len().max(other.coefficients.len());
        Ok(self.with((1..=n).map(|i| self.coefficient(i) + other.coefficient(i)).collect()))
    }

    /// `L^{(x) k}`: every coefficient multiplied by `k`.
    pub fn tensor_power(&self, k: u64) -> Self {
        let k = T::from_int(k as i64);
        self.with(self.coefficients.iter().map(|a| a.clone() * k.clone()).collect())
    }

    /// Least `N` making every `p^N a_i` with `i >= 2` removable, together with
    /// the residue `p^N a_1 mod Z` of the resulting tame operator.
    pub fn p_power_reduce(&self) -> (u32, T) {
        // (v + N)(p - 1) > 1 iff v + N >= floor(1/(p-1)) + 1
        let threshold = if self.p == 2 { 2 } else { 1 };
        let mut n = 0i64;
        for (k, a) in self.coefficients.iter().enumerate().skip(1) {
            if let ExtendedValuation::Finite(v) = val(&(a.clone() / T::from_int(-(k as i64))), self.p) {
                n = n.max(threshold - v);
            }
        }
        let n = n as u32;
        let scaled = self.coefficient(1) * T::from_int(self.p.pow(n) as i64);
        (n, scaled.fract())
    }

    /// Least `m >= 1` with `m a_1` integral.
    pub fn character_order(&self) -> Result<u64, RobbaError> {
        if !self.is_tame() {
            return Err(RobbaError::NotTame);
        }
        let d = self.coefficient(1);
        T::int_to_i64(d.denom()).and_then(|d| u64::try_from(d).ok()).ok_or(RobbaError::Overflow)
    }

    /// Substitution `z = t^n`: `n a_i` moves to pole order `n(i - 1) + 1`.
    pub fn kummer_pullback(&self, n: u64) -> Result<Self, RobbaError> {
        if n == 0 {
            return Err(RobbaError::ZeroDegree);
        }
        let n = n as usize;
        let len = self.coefficients.len();
        let mut c = vec![T::zero(); if len == 0 { 0 } else { n * (len - 1) + 1 }];
        let scale = T::from_int(n as i64);
        for (k, a) in self.coefficients.iter().enumerate() {
            c[n * k] = a.clone() * scale.clone();
        }
        Ok(self.with(c))
    }
}

fn val<T: ExactScalar>(a: &T, p: u64) -> ExtendedValuation {
    padic_valuation(a, p).expect("prime checked at construction")
}

fn removable<T: ExactScalar>(a: &T, i: usize, p: u64) -> bool {
    let q = a.clone() / T::from_int(1 - i as i64);
    match val(&q, p) {
        ExtendedValuation::Infinite => true,
        ExtendedValuation::Finite(v) => v * (p as i64 - 1) > 1,
    }
}

/// Least `k` with `L^{(x) p^k}` tame, found by tensoring copies of `L`.
pub fn p_power_reduce_search<T: ExactScalar>(l: &RankOneOperator<T>, max_k: u32) -> Option<u32> {
    let mut power = l.clone();
    for k in 0..=max_k {
        if power.is_tame() {
            return Some(k);
        }
        let mut next = power.clone();
        for _ in 1..l.p {
            next = next.tensor(&power).expect("same prime");
        }
        power = next;
    }
    None
}
