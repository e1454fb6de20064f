//! Slope multisets and their Newton polygons.
//!
//! A [`SlopeMultiset`] lists the slopes of an object together with the
//! dimension of each graded piece. Its Newton polygon is the lower convex
//! chain through the cumulative points `(sum dim, sum slope * dim)`. The empty
//! multiset is the zero object.

use std::collections::BTreeMap;

use crate::exactnum::ExactScalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum NewtonError {
    #[error("slope {0} is negative")]
    NegativeSlope(String),
    #[error("slope {0} has multiplicity zero")]
    ZeroMultiplicity(String),
    #[error("slopes must be strictly increasing")]
    NotIncreasing,
    #[error("scaling factor must be positive")]
    ZeroScale,
    #[error("invalid polygon: {0}")]
    InvalidPolygon(&'static str),
}

/// Distinct non-negative slopes in increasing order, each with a positive
/// multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlopeMultiset<T: ExactScalar> {
    entries: Vec<(T, u64)>,
}

impl<T: ExactScalar> Default for SlopeMultiset<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: ExactScalar> SlopeMultiset<T> {
    pub fn zero() -> Self {
        SlopeMultiset { entries: Vec::new() }
    }

    /// Validates an already sorted list.
    pub fn new(entries: Vec<(T, u64)>) -> Result<Self, NewtonError> {
        for (i, (s, m)) in entries.iter().enumerate() {
            if s.is_negative() {
                return Err(NewtonError::NegativeSlope(s.to_string()));
            }
            if *m == 0 {
                return Err(NewtonError::ZeroMultiplicity(s.to_string()));
            }
            if i > 0 && entries[i - 1].0 >= *s {
                return Err(NewtonError::NotIncreasing);
            }
        }
        Ok(SlopeMultiset { entries })
    }

    /// Sorts and merges arbitrary `(slope, multiplicity)` pairs, dropping
    /// zero multiplicities.
    pub fn from_pairs<I: IntoIterator<Item = (T, u64)>>(pairs: I) -> Result<Self, NewtonError> {
        let mut merged: BTreeMap<T, u64> = BTreeMap::new();
        for (s, m) in pairs {
            if s.is_negative() {
                return Err(NewtonError::NegativeSlope(s.to_string()));
            }
            if m > 0 {
                *merged.entry(s).or_default() += m;
            }
        }
        Ok(SlopeMultiset { entries: merged.into_iter().collect() })
    }

    pub fn single(slope: T, multiplicity: u64) -> Result<Self, NewtonError> {
        Self::from_pairs([(slope, multiplicity)])
    }

    pub fn entries(&self) -> &[(T, u64)] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Total multiplicity.
    pub fn dimension(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, slope: &T) -> u64 {
        self.entries
            .iter()
            .find(|(s, _)| s == slope)
            .map_or(0, |(_, m)| *m)
    }

    /// `sum slope * multiplicity`.
    pub fn weighted_sum(&self) -> T {
        self.entries
            .iter()
            .fold(T::zero(), |acc, (s, m)| acc + s.clone() * T::from_int(*m as i64))
    }

    /// Direct sum: multiset union merging equal slopes.
    pub fn add(&self, other: &Self) -> Self {
        Self::from_pairs(self.entries.iter().chain(&other.entries).cloned())
            .expect("inputs already valid")
    }

    /// Multiplies every slope by `n`.
    pub fn scale_slopes(&self, n: u64) -> Result<Self, NewtonError> {
        if n == 0 {
            return Err(NewtonError::ZeroScale);
        }
        let k = T::from_int(n as i64);
        Ok(SlopeMultiset {
            entries: self.entries.iter().map(|(s, m)| (s.clone() * k.clone(), *m)).collect(),
        })
    }

    pub fn polygon(&self) -> NewtonPolygon<T> {
        polygon_from_slopes(self)
    }
}

/// Vertices of a lower convex polygon starting at the origin.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NewtonPolygon<T: ExactScalar> {
    vertices: Vec<(T, T)>,
}

impl<T: ExactScalar> NewtonPolygon<T> {
    /// Validates the vertex list.
    pub fn from_vertices(vertices: Vec<(T, T)>) -> Result<Self, NewtonError> {
        match vertices.first() {
            Some((x, y)) if x.is_zero() && y.is_zero() => {}
            _ => return Err(NewtonError::InvalidPolygon("first vertex must be the origin")),
        }
        let mut last_slope: Option<T> = None;
        for w in vertices.windows(2) {
            let (dx, dy) = (w[1].0.clone() - w[0].0.clone(), w[1].1.clone() - w[0].1.clone());
            if !dx.is_positive() {
                return Err(NewtonError::InvalidPolygon("abscissae must increase strictly"));
            }
            if w[1].1.is_negative() {
                return Err(NewtonError::InvalidPolygon("ordinates must be non-negative"));
            }
            let slope = dy / dx;
            if slope.is_negative() {
                return Err(NewtonError::InvalidPolygon("edge slopes must be non-negative"));
            }
            if let Some(prev) = &last_slope {
                if slope <= *prev {
                    return Err(NewtonError::InvalidPolygon("edge slopes must increase strictly"));
                }
            }
            last_slope = Some(slope);
        }
        Ok(NewtonPolygon { vertices })
    }

    pub fn vertices(&self) -> &[(T, T)] {
        &self.vertices
    }

    /// Ordinate of the rightmost vertex.
    pub fn height(&self) -> T {
        self.vertices.last().map_or_else(T::zero, |(_, y)| y.clone())
    }

    pub fn width(&self) -> T {
        self.vertices.last().map_or_else(T::zero, |(x, _)| x.clone())
    }

    /// True iff every vertex has integer coordinates.
    pub fn is_integral(&self) -> bool {
        self.vertices.iter().all(|(x, y)| x.is_integer() && y.is_integer())
    }

    /// `(length, slope)` of each edge.
    pub fn edges(&self) -> Vec<(T, T)> {
        self.vertices
            .windows(2)
            .map(|w| {
                let dx = w[1].0.clone() - w[0].0.clone();
                let dy = w[1].1.clone() - w[0].1.clone();
                (dx.clone(), dy / dx)
            })
            .collect()
    }

    /// Monoid sum of polygons: edges of both merged by slope.
    pub fn sum(&self, other: &Self) -> Self {
        let mut edges: BTreeMap<T, T> = BTreeMap::new();
        for (len, slope) in self.edges().into_iter().chain(other.edges()) {
            let e = edges.entry(slope).or_insert_with(T::zero);
            *e = e.clone() + len;
        }
        let mut vertices = vec![(T::zero(), T::zero())];
        let (mut x, mut y) = (T::zero(), T::zero());
        for (slope, len) in edges {
            x = x + len.clone();
            y = y + slope * len;
            vertices.push((x.clone(), y.clone()));
        }
        NewtonPolygon { vertices }
    }

    /// Inverse of [`polygon_from_slopes`] on polygons with integer edge
    /// lengths.
    pub fn slopes(&self) -> Option<SlopeMultiset<T>> {
        let pairs: Option<Vec<(T, u64)>> = self
            .edges()
            .into_iter()
            .map(|(len, slope)| len.to_i64().map(|l| (slope, l as u64)))
            .collect();
        SlopeMultiset::new(pairs?).ok()
    }
}

/// Cumulative points `(sum dim, sum slope * dim)` from the origin, with
/// collinear interior points removed.
pub fn polygon_from_slopes<T: ExactScalar>(s: &SlopeMultiset<T>) -> NewtonPolygon<T> {
    let mut vertices: Vec<(T, T)> = vec![(T::zero(), T::zero())];
    let mut last_slope: Option<T> = None;
    let (mut x, mut y) = (T::zero(), T::zero());
    for (slope, m) in &s.entries {
        let m = T::from_int(*m as i64);
        x = x + m.clone();
        y = y + slope.clone() * m;
        if last_slope.as_ref() == Some(slope) {
            vertices.pop();
        }
        vertices.push((x.clone(), y.clone()));
        last_slope = Some(slope.clone());
    }
    NewtonPolygon { vertices }
}

pub fn height<T: ExactScalar>(np: &NewtonPolygon<T>) -> T {
    np.height()
}

pub fn is_integral<T: ExactScalar>(np: &NewtonPolygon<T>) -> bool {
    np.is_integral()
}

/// Slope data of a tensor product as far as the filtration axioms determine
/// it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorBound<T: ExactScalar> {
    /// Pieces `gr^l (x) gr^m` with `l != m`, which sit exactly at `max(l, m)`.
    pub exact: SlopeMultiset<T>,
    /// Pieces `gr^l (x) gr^l`: total dimension spread over slopes `<= l`.
    pub bounded: Vec<(T, u64)>,
}

impl<T: ExactScalar> TensorBound<T> {
    /// Whether an actual slope multiset of the tensor product is compatible
    /// with these constraints.
    pub fn admits(&self, actual: &SlopeMultiset<T>) -> bool {
        let bounded_total: u64 = self.bounded.iter().map(|(_, d)| d).sum();
        if actual.dimension() != self.exact.dimension() + bounded_total {
            return false;
        }
        // residual mass after removing the exact part
        let mut residual: BTreeMap<T, u64> = BTreeMap::new();
        for (s, m) in actual.entries() {
            residual.insert(s.clone(), *m);
        }
        for (s, m) in self.exact.entries() {
            match residual.get_mut(s) {
                Some(r) if *r >= *m => *r -= m,
                _ => return false,
            }
        }
        // residual at slopes >= t must fit into bounded pieces with bound >= t
        let mut thresholds: Vec<&T> = residual.keys().collect();
        thresholds.reverse();
        for t in thresholds {
            let need: u64 = residual.range(t.clone()..).map(|(_, m)| m).sum();
            let have: u64 = self.bounded.iter().filter(|(l, _)| l >= t).map(|(_, d)| d).sum();
            if need > have {
                return false;
            }
        }
        true
    }
}

pub fn tensor_slope_bound<T: ExactScalar>(a: &SlopeMultiset<T>, b: &SlopeMultiset<T>) -> TensorBound<T> {
    let mut exact = Vec::new();
    let mut bounded: BTreeMap<T, u64> = BTreeMap::new();
    for (s, m) in a.entries() {
        for (t, n) in b.entries() {
            if s == t {
                *bounded.entry(s.clone()).or_default() += m * n;
            } else {
                exact.push((s.clone().max(t.clone()), m * n));
            }
        }
    }
    TensorBound {
        exact: SlopeMultiset::from_pairs(exact).expect("slopes are non-negative"),
        bounded: bounded.into_iter().collect(),
    }
}
