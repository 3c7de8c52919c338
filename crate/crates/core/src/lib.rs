//! Width-k descents and inversions of permutations, the excedance and major
//! statistics they induce, and exact generating-function distributions for
//! them over the symmetric group and over pattern-avoidance classes.
//!
//! Every distribution can be produced three ways: by exhaustive enumeration
//! ([`genfun::brute_distribution`]), by closed product formulas, and by
//! memoized recursions. The [`genfun::verify`] and [`genfun::suites`]
//! modules cross-check these routes and report the first counterexample on
//! any mismatch.

pub mod cli;
pub mod error;
pub mod genfun;
pub mod limits;
pub mod perm;
pub mod poly;
pub mod stats;

pub use error::{Error, Result};
pub use limits::Limits;
pub use perm::{AvoidanceSpec, Permutation};
pub use poly::{LaurentPoly, MultiPoly};
pub use stats::WidthSet;
