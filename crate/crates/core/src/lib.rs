//! Exact extremal values of `P2(G) = sum d_i^2` over the simple graphs with
//! `v` vertices and `e` edges.
//!
//! Every optimal graph is a threshold graph, so the library works with
//! distinct partitions (one part per row of the upper-triangular adjacency
//! matrix) rather than with explicit graphs. The modules cover:
//!
//! - [`partition`]: distinct partitions, threshold graphs, degree and
//!   diagonal sequences, `P2` evaluation.
//! - [`extremal`]: quasi-star / quasi-complete constructions and the closed
//!   forms `S(v,e)`, `C(v,e)`, `max(v,e)`.
//! - [`optimal`]: the complete set of optimal partitions of a class.
//! - [`sign`]: exact analysis of `S(v,e) - C(v,e)` for fixed `v`.
//! - [`pell`]: Pell-equation families with a prescribed number of optima.
//! - [`density`]: the density of `v` for which the quasi-star always wins.
//! - [`oracle`]: brute-force verification over partitions and over graphs.

pub mod density;
pub mod error;
pub mod extremal;
pub mod optimal;
pub mod oracle;
pub mod partition;
pub mod pell;
pub mod rational;
pub mod sign;

pub use error::{Error, Result};
pub use partition::{DistinctPartition, GraphClass, ThresholdGraph};
pub use rational::ExactRational;

/// Largest supported vertex count. `P2 <= v (v-1)^2` stays far inside the
/// 128-bit range used for all values.
pub const MAX_VERTICES: u64 = 1_000_000;

/// `n choose 2`.
#[inline]
pub fn binom2(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

/// Largest `k >= 1` with `k (k - 1) <= n`.
pub(crate) fn largest_k_pair_count_at_most(n: u128) -> u64 {
    let mut k = (4 * n + 1).isqrt().div_ceil(2) as u64;
    while (k as u128) * (k as u128 - 1) > n {
        k -= 1;
    }
    while (k as u128 + 1) * (k as u128) <= n {
        k += 1;
    }
    k.max(1)
}
