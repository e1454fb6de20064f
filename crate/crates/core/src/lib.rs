//! Exact computations around slope filtrations.
//!
//! The crate is organised bottom-up: [`exactnum`] supplies rational and
//! cyclotomic arithmetic, [`newton`] the combinatorics of slopes, [`groups`]
//! and [`reptheory`] finite groups and their characters, and [`filtered`]
//! realises slope filtrations on finite groups through chains of
//! ramification-style subgroups. [`robba`] handles rank-one p-adic
//! differential operators and [`weyl`] the Weyl dimension formula.
//!
//! Scalar-level code is generic over [`exactnum::ExactScalar`]; the aliases
//! below fix the scalar to arbitrary-precision rationals.

pub mod exactnum;
pub mod filtered;
pub mod groups;
pub mod limits;
pub mod newton;
pub mod reptheory;
pub mod robba;
pub mod suites;
pub mod weyl;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;
/// Cyclotomic numbers with arbitrary-precision rational coefficients.
pub type Cyclotomic = exactnum::Cyclotomic<Rational>;
pub type SlopeMultiset = newton::SlopeMultiset<Rational>;
pub type NewtonPolygon = newton::NewtonPolygon<Rational>;
pub type TensorBound = newton::TensorBound<Rational>;
pub type RankOneOperator = robba::RankOneOperator<Rational>;
pub type RootSystem = weyl::RootSystem<Rational>;

pub use limits::Limits;
