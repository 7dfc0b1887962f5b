//! Exact arithmetic for polynomial identities satisfied by Lie algebra
//! derivations.
//!
//! - [`poly`]: dense polynomials generic over a num-traits ring, with
//!   resultants, discriminants, gcds, squarefree parts and composed sums.
//! - [`ffield`]: prime and extension fields, factorization over F_p,
//!   multiplicative orders and polynomial periods.
//! - [`invariants`]: the integer invariants rho_n, delta(r), sigma(r), Wendt
//!   determinants, cyclotomic resultants and integer factorization.
//! - [`shalev`]: h_{n,p}, membership in N_p, periods of h(t^p - t) and
//!   arithmetic-freeness of root sets.
//! - [`lie`]: structure-constant Lie algebras over finite fields, derivation
//!   checks, lower central series and witness constructions.

pub mod error;
pub mod ffield;
pub mod invariants;
pub mod lie;
pub mod poly;
pub mod scalar;
pub mod shalev;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use poly::{parse_poly, parse_poly_var, Poly};

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Poly<BigInt>;
/// Polynomial with exact rational coefficients.
pub type RatPoly = Poly<BigRational>;
/// Floating-point polynomial; used for numeric cross-checks.
pub type FloatPoly = Poly<f64>;
