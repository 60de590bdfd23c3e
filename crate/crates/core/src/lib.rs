//! Executable solutions and brute-force oracles for six olympiad problems.
//!
//! Each module pairs a constructive solver with an independent checker:
//!
//! * [`pebble_partition`]: equal-weight, color-balanced split of `4n` pebbles via
//!   an Eulerian circuit on the pair multigraph.
//! * [`cablecar`]: linked stations of two cable-car companies, the extremal
//!   `n² − n` construction and the common-link finder.
//! * [`separating_line`]: a line separating a unit-spaced point set with
//!   margin at least `0.01·n^(−1/3)`.
//! * [`deck_checker`]: exact arithmetic-mean/geometric-mean deck property.
//! * [`angle_concurrency`]: numeric construction of the 1:2:3 quadrilateral
//!   and the circumcenter concurrency check.
//! * [`inequality`]: exact polynomial domination plus sampled numeric checks.
//!
//! [`suites`] bundles the property checks into deterministic, seeded reports.

pub mod angle_concurrency;
pub mod cablecar;
pub mod deck_checker;
mod error;
pub mod inequality;
pub mod pebble_partition;
pub mod separating_line;
pub mod suites;
pub mod union_find;

pub use error::{Error, Result};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator used by every seeded routine in the crate.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
