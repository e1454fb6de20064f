use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::scalar::ExactScalar;
use super::NumError;

/// Cached data for `Q(zeta_n)`: the cyclotomic polynomial and the reduction
/// of every power `zeta^k`, `0 <= k < n`, in the power basis.
#[derive(Debug)]
struct FieldData {
    phi: usize,
    powers: Vec<Vec<i64>>,
}

fn field_cache() -> &'static RwLock<HashMap<u64, Arc<FieldData>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<FieldData>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn poly_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// Coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<i64>> {
    if let Some(p) = poly_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by all proper divisor polynomials
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_polynomial(d);
        num = poly_div_exact(&num, &div);
    }
    let arc = Arc::new(num);
    poly_cache().write().unwrap().insert(n, arc.clone());
    arc
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

fn field(n: u64) -> Arc<FieldData> {
    if let Some(f) = field_cache().read().unwrap().get(&n) {
        return f.clone();
    }
    let poly = cyclotomic_polynomial(n);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x, then reduce the overflow term
        let top = cur[phi - 1];
        for j in (1..phi).rev() {
            cur[j] = cur[j - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for j in 0..phi {
                cur[j] -= top * poly[j];
            }
        }
    }
    let data = Arc::new(FieldData { phi, powers });
    field_cache().write().unwrap().insert(n, data.clone());
    data
}

/// An element of a cyclotomic field `Q(zeta_n)`, stored in the power basis
/// `1, zeta_n, ..., zeta_n^(phi(n)-1)` reduced modulo the `n`-th cyclotomic
/// polynomial.
///
/// The conductor is never `2 mod 4`, and every rational value has conductor
/// 1. Arithmetic results live in the lcm of the operand conductors;
/// [`Cyclotomic::minimal`] descends to the smallest field containing the value.
#[derive(Clone, Debug)]
pub struct Cyclotomic<T: ExactScalar> {
    conductor: u64,
    coefficients: Vec<T>,
}

impl<T: ExactScalar> Cyclotomic<T> {
    pub fn from_scalar(value: T) -> Self {
        Cyclotomic { conductor: 1, coefficients: vec![value] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_scalar(T::from_int(n))
    }

    /// Builds `sum coeff * zeta_n^k` from `(k, coeff)` pairs; exponents are
    /// taken modulo `n`.
    pub fn from_exponents(n: u64, terms: &[(u64, T)]) -> Self {
        assert!(n >= 1, "conductor must be positive");
        if n % 4 == 2 {
            // zeta_n = -zeta_m^((m+1)/2) with m = n/2 odd
            let m = n / 2;
            let half = (m + 1) / 2;
            let lowered: Vec<(u64, T)> = terms
                .iter()
                .map(|(k, c)| {
                    let k = k % n;
                    let c = if k % 2 == 1 { -c.clone() } else { c.clone() };
                    ((k * half) % m, c)
                })
                .collect();
            return Self::from_exponents(m, &lowered);
        }
        let f = field(n);
        let mut coeffs = vec![T::zero(); f.phi];
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            accumulate(&mut coeffs, &f.powers[(k % n) as usize], c);
        }
        Cyclotomic { conductor: n, coefficients: coeffs }.tidy()
    }

    /// `zeta_n^k`.
    pub fn root_of_unity(n: u64, k: u64) -> Self {
        Self::from_exponents(n, &[(k, T::one())])
    }

    /// Builds an element from raw power-basis coefficients.
    pub fn from_coefficients(conductor: u64, coefficients: Vec<T>) -> Result<Self, NumError> {
        if conductor == 0 {
            return Err(NumError::BadConductor(conductor));
        }
        let phi = euler_phi(conductor) as usize;
        if coefficients.len() != phi {
            return Err(NumError::CoefficientCount { conductor, expected: phi, got: coefficients.len() });
        }
        let terms: Vec<(u64, T)> = coefficients
            .into_iter()
            .enumerate()
            .map(|(k, c)| (k as u64, c))
            .collect();
        Ok(Self::from_exponents(conductor, &terms))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coefficients(&self) -> &[T] {
        &self.coefficients
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&T> {
        if self.conductor == 1 {
            Some(&self.coefficients[0])
        } else {
            None
        }
    }

    /// The value as a rational integer, if it is one.
    pub fn as_integer(&self) -> Option<i64> {
        self.as_rational().and_then(|q| q.to_i64())
    }

    fn tidy(mut self) -> Self {
        if self.conductor > 1 && self.coefficients[1..].iter().all(Zero::is_zero) {
            self.coefficients.truncate(1);
            self.conductor = 1;
        }
        self
    }

    /// Re-expresses `self` in `Q(zeta_m)`; requires `conductor | m`.
    fn lift(&self, m: u64) -> Vec<T> {
        debug_assert!(m % self.conductor == 0);
        if m == self.conductor {
            return self.coefficients.clone();
        }
        let f = field(m);
        let step = m / self.conductor;
        let mut out = vec![T::zero(); f.phi];
        for (j, c) in self.coefficients.iter().enumerate() {
            if !c.is_zero() {
                accumulate(&mut out, &f.powers[(step * j as u64 % m) as usize], c);
            }
        }
        out
    }

    fn common(&self, other: &Self) -> (u64, Vec<T>, Vec<T>) {
        let m = self.conductor.lcm(&other.conductor);
        (m, self.lift(m), other.lift(m))
    }

    /// The Galois conjugate `zeta -> zeta^a`, `gcd(a, conductor) = 1`.
    pub fn galois(&self, a: u64) -> Self {
        let n = self.conductor;
        debug_assert_eq!(a.gcd(&n), 1);
        let terms: Vec<(u64, T)> = self
            .coefficients
            .iter()
            .enumerate()
            .map(|(j, c)| ((a * j as u64) % n, c.clone()))
            .collect();
        Self::from_exponents(n, &terms)
    }

    /// Complex conjugate, `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        self.galois(self.conductor - 1)
    }

    /// Product of the conjugates of `self` over Q.
    pub fn norm(&self) -> T {
        if let Some(q) = self.as_rational() {
            return q.clone();
        }
        let prod = self * &self.conjugate_product();
        prod.as_rational()
            .cloned()
            .expect("field norm is rational")
    }

    fn conjugate_product(&self) -> Self {
        let n = self.conductor;
        let mut acc = Self::one();
        for a in 2..n {
            if a.gcd(&n) == 1 {
                acc = &acc * &self.galois(a);
            }
        }
        acc
    }

    pub fn try_inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return Ok(Self::from_scalar(T::one() / q.clone()));
        }
        let rest = self.conjugate_product();
        let norm = (self * &rest)
            .as_rational()
            .cloned()
            .expect("field norm is rational");
        Ok(rest.scale(&(T::one() / norm)))
    }

    pub fn try_div(&self, rhs: &Self) -> Result<Self, NumError> {
        Ok(self * &rhs.try_inv()?)
    }

    pub fn scale(&self, k: &T) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coefficients: self.coefficients.iter().map(|c| c.clone() * k.clone()).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The same value expressed over the smallest cyclotomic field containing
    /// it.
    pub fn minimal(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let f = field(n);
        for d in divisors(n) {
            if d == 1 || d == n || d % 4 == 2 {
                continue;
            }
            let phi_d = euler_phi(d) as usize;
            let step = n / d;
            let columns: Vec<&Vec<i64>> = (0..phi_d)
                .map(|j| &f.powers[(step * j as u64 % n) as usize])
                .collect();
            if let Some(sol) = solve_in_span(&columns, &self.coefficients) {
                return Cyclotomic { conductor: d, coefficients: sol }.tidy();
            }
        }
        self.clone()
    }
}

fn accumulate<T: ExactScalar>(dst: &mut [T], basis: &[i64], c: &T) {
    for (d, &b) in dst.iter_mut().zip(basis) {
        if b != 0 {
            *d = d.clone() + c.clone() * T::from_int(b);
        }
    }
}

/// Solves `sum_j x_j * columns[j] = target` exactly, if possible.
fn solve_in_span<T: ExactScalar>(columns: &[&Vec<i64>], target: &[T]) -> Option<Vec<T>> {
    let rows = target.len();
    let cols = columns.len();
    let mut m: Vec<Vec<T>> = (0..rows)
        .map(|r| {
            let mut row: Vec<T> = columns.iter().map(|c| T::from_int(c[r])).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = T::one() / m[pivot_row][c].clone();
        for v in m[pivot_row].iter_mut() {
            *v = v.clone() * inv.clone();
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][c].is_zero() {
                let factor = m[r][c].clone();
                for k in 0..=cols {
                    let sub = m[pivot_row][k].clone() * factor.clone();
                    m[r][k] = m[r][k].clone() - sub;
                }
            }
        }
        pivots.push(c);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    let mut sol = vec![T::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        sol[c] = m[r][cols].clone();
    }
    Some(sol)
}

impl<T: ExactScalar> PartialEq for Cyclotomic<T> {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coefficients == other.coefficients;
        }
        let (_, a, b) = self.common(other);
        a == b
    }
}

impl<T: ExactScalar> Eq for Cyclotomic<T> {}

impl<T: ExactScalar> Zero for Cyclotomic<T> {
    fn zero() -> Self {
        Self::from_scalar(T::zero())
    }

    fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coefficients[0].is_zero()
    }
}

impl<T: ExactScalar> One for Cyclotomic<T> {
    fn one() -> Self {
        Self::from_scalar(T::one())
    }
}

impl<T: ExactScalar> From<T> for Cyclotomic<T> {
    fn from(value: T) -> Self {
        Self::from_scalar(value)
    }
}

impl<'a, T: ExactScalar> Add<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn add(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        if self.conductor == rhs.conductor {
            let coefficients = self
                .coefficients
                .iter()
                .zip(&rhs.coefficients)
                .map(|(a, b)| a.clone() + b.clone())
                .collect();
            return Cyclotomic { conductor: self.conductor, coefficients }.tidy();
        }
        let (m, a, b) = self.common(rhs);
        let coefficients = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
        Cyclotomic { conductor: m, coefficients }.tidy()
    }
}

impl<'a, T: ExactScalar> Sub<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn sub(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        self + &(-rhs)
    }
}

impl<'a, T: ExactScalar> Mul<&'a Cyclotomic<T>> for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn mul(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
        if let Some(q) = self.as_rational() {
            return rhs.scale(q);
        }
        if let Some(q) = rhs.as_rational() {
            return self.scale(q);
        }
        let (m, a, b) = self.common(rhs);
        let f = field(m);
        let mut prod = vec![T::zero(); 2 * f.phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] = prod[i + j].clone() + x.clone() * y.clone();
                }
            }
        }
        let mut out = vec![T::zero(); f.phi];
        for (k, c) in prod.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k < f.phi {
                out[k] = out[k].clone() + c.clone();
            } else {
                accumulate(&mut out, &f.powers[k % m as usize], c);
            }
        }
        Cyclotomic { conductor: m, coefficients: out }.tidy()
    }
}

impl<'a, T: ExactScalar> Neg for &'a Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn neg(self) -> Cyclotomic<T> {
        Cyclotomic {
            conductor: self.conductor,
            coefficients: self.coefficients.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident, $atr:ident, $am:ident) => {
        impl<T: ExactScalar> $tr for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $m(self, rhs: Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$m(&rhs)
            }
        }
        impl<'a, T: ExactScalar> $tr<&'a Cyclotomic<T>> for Cyclotomic<T> {
            type Output = Cyclotomic<T>;
            fn $m(self, rhs: &'a Cyclotomic<T>) -> Cyclotomic<T> {
                (&self).$m(rhs)
            }
        }
        impl<'a, T: ExactScalar> $atr<&'a Cyclotomic<T>> for Cyclotomic<T> {
            fn $am(&mut self, rhs: &'a Cyclotomic<T>) {
                *self = (&*self).$m(rhs);
            }
        }
        impl<T: ExactScalar> $atr for Cyclotomic<T> {
            fn $am(&mut self, rhs: Cyclotomic<T>) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

owned_binop!(Add, add, AddAssign, add_assign);
owned_binop!(Sub, sub, SubAssign, sub_assign);
owned_binop!(Mul, mul, MulAssign, mul_assign);

impl<T: ExactScalar> Neg for Cyclotomic<T> {
    type Output = Cyclotomic<T>;

    fn neg(self) -> Cyclotomic<T> {
        -&self
    }
}

impl<T: ExactScalar> std::iter::Sum for Cyclotomic<T> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl<T: ExactScalar> fmt::Display for Cyclotomic<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z{}", self.conductor)?,
                _ => write!(f, "{c}*z{}^{k}", self.conductor)?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CyclotomicRepr {
    conductor: u64,
    coefficients: Vec<String>,
}

impl<T: ExactScalar> Serialize for Cyclotomic<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CyclotomicRepr {
            conductor: self.conductor,
            coefficients: self.coefficients.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: ExactScalar> Deserialize<'de> for Cyclotomic<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CyclotomicRepr::deserialize(deserializer)?;
        let coefficients = repr
            .coefficients
            .iter()
            .map(|s| T::parse(s).ok_or_else(|| D::Error::custom(format!("invalid rational {s:?}"))))
            .collect::<Result<Vec<T>, _>>()?;
        Cyclotomic::from_coefficients(repr.conductor, coefficients).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;
    use crate::exactnum::scalar::frac;

    type C = Cyclotomic<Rational>;

    fn z(n: u64, k: u64) -> C {
        C::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(*cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(*cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(*cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(105).len() - 1, 48);
    }

    #[test]
    fn zeta3_sum_is_minus_one() {
        let s = &z(3, 1) + &z(3, 2);
        assert_eq!(s, C::from_int(-1));
        assert_eq!(s.conductor(), 1);
    }

    #[test]
    fn i_squared() {
        assert_eq!(&z(4, 1) * &z(4, 1), C::from_int(-1));
    }

    #[test]
    fn additive_identity() {
        let x = &z(5, 2) + &C::from_scalar(frac(1, 3));
        assert_eq!(&x + &C::zero(), x);
    }

    #[test]
    fn cross_conductor_lift() {
        // zeta_12^4 = zeta_3
        assert_eq!(z(12, 4), z(3, 1));
        let x = &z(3, 1) * &z(4, 1);
        assert_eq!(x, z(12, 7));
        assert_eq!(x.conductor(), 12);
    }

    #[test]
    fn conductor_two_mod_four_is_lowered() {
        let x = z(6, 1);
        assert_eq!(x.conductor(), 3);
        assert_eq!(x.pow(6), C::one());
        assert_eq!(x.pow(3), C::from_int(-1));
        assert_eq!(z(2, 1), C::from_int(-1));
    }

    #[test]
    fn inverse_and_zero_division() {
        let x = &z(5, 1) + &C::from_int(2);
        let y = x.try_inv().unwrap();
        assert_eq!(&x * &y, C::one());
        assert!(matches!(C::zero().try_inv(), Err(NumError::DivisionByZero)));
    }

    #[test]
    fn minimal_conductor_descent() {
        // sqrt(-3) = zeta3 - zeta3^2 written over Q(zeta_12)
        let x = &z(12, 4) - &z(12, 8);
        assert_eq!(x.conductor(), 12);
        assert_eq!(x.minimal().conductor(), 3);
        assert_eq!(x.minimal(), x);
        // sqrt(5) = 1 + 2(z5 + z5^4) seen in Q(zeta_15)
        let s5 = &C::one() + &(&z(5, 1) + &z(5, 4)).scale(&frac(2, 1));
        let wide = &(&s5 * &z(15, 5)) * &z(15, 10);
        assert_eq!(wide.minimal().conductor(), 5);
        assert_eq!(&wide.minimal() * &wide.minimal(), C::from_int(5));
    }

    #[test]
    fn norm_of_gaussian_integer() {
        let x = &C::from_int(1) + &z(4, 1);
        assert_eq!(x.norm(), frac(2, 1));
    }

    #[test]
    fn json_shape() {
        let x = &z(3, 1).scale(&frac(1, 2)) + &C::from_int(1);
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, r#"{"conductor":3,"coefficients":["1","1/2"]}"#);
        let back: C = serde_json::from_str(&s).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<C>(r#"{"conductor":3,"coefficients":["1"]}"#).is_err());
    }
}
