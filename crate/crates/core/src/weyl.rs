//! Root systems and the Weyl dimension formula.

use std::fmt;
use std::str::FromStr;

use crate::exactnum::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error("no root system {0}{1}")]
    InvalidType(Family, usize),
    #[error("unknown family {0:?}")]
    UnknownFamily(String),
    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("weight is not dominant integral")]
    NotDominant,
    #[error("m must be positive")]
    ZeroM,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = WeylError;

    fn from_str(s: &str) -> Result<Family, WeylError> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            _ => return Err(WeylError::UnknownFamily(s.to_string())),
        })
    }
}

/// Positive roots in standard Euclidean coordinates with the dot product as
/// the invariant form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem<T: ExactScalar> {
    family: Family,
    rank: usize,
    positive: Vec<Vec<T>>,
    simple: Vec<Vec<T>>,
    rho: Vec<T>,
}

pub fn dot<T: ExactScalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn unit<T: ExactScalar>(dim: usize, i: usize, c: i64) -> Vec<T> {
    let mut v = vec![T::zero(); dim];
    v[i] = T::from_int(c);
    v
}

fn add<T: ExactScalar>(a: &[T], b: &[T]) -> Vec<T> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn neg<T: ExactScalar>(a: &[T]) -> Vec<T> {
    a.iter().map(|x| -x.clone()).collect()
}

/// `e_i + s e_j` for all `i < j` and both signs.
fn pm_pairs<T: ExactScalar>(dim: usize, range: usize) -> Vec<Vec<T>> {
    let mut out = Vec::new();
    for i in 0..range {
        for j in i + 1..range {
            for s in [1, -1] {
                out.push(add(&unit(dim, i, 1), &unit(dim, j, s)));
            }
        }
    }
    out
}

/// `(1/2)(±e_1 ± ... ± e_8)` with an even number of minus signs.
fn e8_roots<T: ExactScalar>() -> Vec<Vec<T>> {
    let mut roots = pm_pairs::<T>(8, 8);
    roots.extend(roots.clone().iter().map(|r| neg(r)).collect::<Vec<_>>());
    let half = T::from_frac(1, 2);
    for mask in 0u32..256 {
        if mask.count_ones() % 2 == 0 {
            roots.push((0..8).map(|i| if mask >> i & 1 == 1 { -half.clone() } else { half.clone() }).collect());
        }
    }
    roots
}

/// All roots, positive and negative, before choosing a positive system.
fn all_roots<T: ExactScalar>(family: Family, rank: usize) -> Option<Vec<Vec<T>>> {
    let with_negatives = |pos: Vec<Vec<T>>| {
        let mut all = pos.clone();
        all.extend(pos.iter().map(|r| neg(r)));
        all
    };
    let n = rank;
    let roots = match (family, n) {
        (Family::A, n) if n >= 1 => {
            let mut pos = Vec::new();
            for i in 0..=n {
                for j in i + 1..=n {
                    pos.push(add(&unit(n + 1, i, 1), &unit(n + 1, j, -1)));
                }
            }
            with_negatives(pos)
        }
        (Family::B, n) if n >= 2 => {
            let mut pos = pm_pairs(n, n);
            pos.extend((0..n).map(|i| unit(n, i, 1)));
            with_negatives(pos)
        }
        (Family::C, n) if n >= 2 => {
            let mut pos = pm_pairs(n, n);
            pos.extend((0..n).map(|i| unit(n, i, 2)));
            with_negatives(pos)
        }
        (Family::D, n) if n >= 3 => with_negatives(pm_pairs(n, n)),
        (Family::E, 8) => e8_roots(),
        (Family::E, 7) => {
            let r1 = add(&unit::<T>(8, 6, 1), &unit(8, 7, 1));
            e8_roots().into_iter().filter(|a| dot(a, &r1).is_zero()).collect()
        }
        (Family::E, 6) => {
            let r1 = add(&unit::<T>(8, 6, 1), &unit(8, 7, 1));
            let r2 = add(&unit::<T>(8, 5, 1), &unit(8, 6, -1));
            e8_roots().into_iter().filter(|a| dot(a, &r1).is_zero() && dot(a, &r2).is_zero()).collect()
        }
        (Family::F, 4) => {
            let mut pos = pm_pairs(4, 4);
            pos.extend((0..4).map(|i| unit(4, i, 1)));
            let half = T::from_frac(1, 2);
            for mask in 0u32..8 {
                let mut v = vec![half.clone()];
                v.extend((0..3).map(|i| if mask >> i & 1 == 1 { -half.clone() } else { half.clone() }));
                pos.push(v);
            }
            with_negatives(pos)
        }
        (Family::G, 2) => {
            let mut pos = Vec::new();
            for i in 0..3 {
                for j in i + 1..3 {
                    let short = add(&unit::<T>(3, i, 1), &unit(3, j, -1));
                    let k = 3 - i - j;
                    let long = add(&add(&unit::<T>(3, i, 1), &unit(3, j, 1)), &unit(3, k, -2));
                    pos.push(short);
                    pos.push(long);
                }
            }
            with_negatives(pos)
        }
        _ => return None,
    };
    Some(roots)
}

/// Classical count of positive roots.
pub fn positive_root_count(family: Family, rank: usize) -> usize {
    let n = rank;
    match family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

pub fn build_root_system<T: ExactScalar>(family: Family, rank: usize) -> Result<RootSystem<T>, WeylError> {
    let roots = all_roots::<T>(family, rank).ok_or(WeylError::InvalidType(family, rank))?;
    let dim = roots[0].len();
    // positivity by a functional with powers of two, nonzero on every root
    let functional: Vec<T> = (0..dim).map(|i| T::from_int(1i64 << (dim - i) as u32)).collect();
    let positive: Vec<Vec<T>> = roots.into_iter().filter(|r| dot(r, &functional) > T::zero()).collect();
    let simple = positive
        .iter()
        .filter(|r| {
            !positive.iter().any(|a| {
                let b: Vec<T> = r.iter().zip(a).map(|(x, y)| x.clone() - y.clone()).collect();
                positive.contains(&b)
            })
        })
        .cloned()
        .collect();
    let two = T::from_int(2);
    let rho = positive
        .iter()
        .fold(vec![T::zero(); dim], |acc, r| add(&acc, r))
        .into_iter()
        .map(|x| x / two.clone())
        .collect();
    Ok(RootSystem { family, rank, positive, simple, rho })
}

impl<T: ExactScalar> RootSystem<T> {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the ambient coordinate space.
    pub fn ambient_dim(&self) -> usize {
        self.rho.len()
    }

    pub fn positive_roots(&self) -> &[Vec<T>] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Vec<T>] {
        &self.simple
    }

    pub fn rho(&self) -> &[T] {
        &self.rho
    }

    pub fn form(&self, a: &[T], b: &[T]) -> T {
        dot(a, b)
    }

    /// `<l, a^v>` for every simple `a`.
    pub fn dynkin_labels(&self, lambda: &[T]) -> Vec<T> {
        let two = T::from_int(2);
        self.simple.iter().map(|a| two.clone() * dot(lambda, a) / dot(a, a)).collect()
    }

    pub fn is_dominant(&self, lambda: &[T]) -> bool {
        self.dynkin_labels(lambda).iter().all(|c| c.is_integer() && *c >= T::zero())
    }

    /// `2 m rho`.
    pub fn two_m_rho(&self, m: u64) -> Vec<T> {
        let k = T::from_int(2 * m as i64);
        self.rho.iter().map(|x| x.clone() * k.clone()).collect()
    }
}

/// `prod_{a > 0} <l + rho, a> / <rho, a>`.
pub fn weyl_dim<T: ExactScalar>(rs: &RootSystem<T>, lambda: &[T]) -> Result<T, WeylError> {
    if lambda.len() != rs.ambient_dim() {
        return Err(WeylError::DimensionMismatch { expected: rs.ambient_dim(), got: lambda.len() });
    }
    if !rs.is_dominant(lambda) {
        return Err(WeylError::NotDominant);
    }
    let shifted = add(lambda, &rs.rho);
    let d = rs
        .positive
        .iter()
        .fold(T::one(), |acc, a| acc * dot(&shifted, a) / dot(&rs.rho, a));
    debug_assert!(d.is_integer() && d >= T::one());
    Ok(d)
}

/// `dim V(2 m rho) = (2m + 1)^N`.
pub fn check_2m_rho<T: ExactScalar>(rs: &RootSystem<T>, m: u64) -> Result<bool, WeylError> {
    if m == 0 {
        return Err(WeylError::ZeroM);
    }
    let d = weyl_dim(rs, &rs.two_m_rho(m))?;
    let base = T::from_int(2 * m as i64 + 1);
    let expected = (0..rs.positive.len()).fold(T::one(), |acc, _| acc * base.clone());
    Ok(d == expected)
}

/// All supported `(family, rank)` pairs with rank at most `max_rank`.
pub fn supported_types(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push((Family::A, n));
        if n >= 2 {
            out.push((Family::B, n));
            out.push((Family::C, n));
        }
        if n >= 3 {
            out.push((Family::D, n));
        }
    }
    for (f, n) in [(Family::G, 2), (Family::F, 4), (Family::E, 6), (Family::E, 7), (Family::E, 8)] {
        if n <= max_rank {
            out.push((f, n));
        }
    }
    out
}
