//! Exact integer polynomial arithmetic.
//!
//! [`LaurentPoly`] is the univariate type every distribution is returned in;
//! [`MultiPoly`] carries the multivariate descent polynomial. Both are sparse
//! maps with no stored zero coefficients and big-integer coefficients.

pub(crate) mod coeff;
mod families;
mod laurent;
mod multi;

pub use families::{catalan, eulerian, factorial, multinomial_mnk, q_factorial, q_integer};
pub use laurent::LaurentPoly;
pub use multi::{MultiPoly, VarValue};
