//! Exact combinatorics of the two-species exclusion process at desk scale.
//!
//! The crate is organized around five object families:
//!
//! - [`shapes`]: state words over {heavy, light, hole}, their rhombic
//!   diagrams, rhombus tilings, hexagon flips and strip decompositions.
//! - [`rat`]: rhombic alternative tableaux (fillings of a tiling with
//!   `α`, `β`, `q`), their weights and the partition function.
//! - [`assemblees`]: assemblées of permutations, their statistics, the
//!   insertion algorithm and the weighted enumeration identity.
//! - [`bijections`]: the fusion-exchange algorithm (assemblée → labeled
//!   tableau) and its inverse label-passing algorithm.
//! - [`asep`]: the exact Markov generator of the two-species exclusion
//!   process and its stationary distribution, solved in exact rational
//!   arithmetic.
//!
//! All weights live in [`algebra::LaurentPolynomial`], a sparse
//! three-variable Laurent polynomial generic over its coefficient ring.
//! The concrete instantiations used throughout are the aliases
//! [`Rational`] and [`Weight`] below.

pub mod algebra;
pub mod asep;
pub mod assemblees;
pub mod bijections;
pub mod rat;
pub mod shapes;
pub mod verify;

/// Exact rational scalar: arbitrary-precision, always in lowest terms
/// with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer type backing [`Rational`].
pub type Int = num_bigint::BigInt;

/// Laurent polynomial in `α`, `β`, `q` with [`Rational`] coefficients:
/// the type of every weight, generating function and partition function
/// in this crate.
pub type Weight = algebra::LaurentPolynomial<Rational>;

pub use algebra::Exponents;
pub use assemblees::Assemblee;
pub use rat::Tableau;
pub use shapes::{StateWord, Symbol, Tiling};
