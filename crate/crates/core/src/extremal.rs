//! Quasi-complete and quasi-star graphs and the closed forms for their `P2`.
//!
//! Write `e = binom(k+1, 2) - j` with `1 <= j <= k`. The quasi-complete graph
//! `QC(v, e)` is `K_k` plus one vertex joined to `k - j` of its vertices, with
//! partition `(k, k-1, ..., ^j, ..., 1)`. The quasi-star `QS(v, e)` is the
//! complement of `QC(v, e')`; with `e' = binom(k'+1, 2) - j'` its partition is
//! `(v-1, ..., k'+1, j')`.

use serde::Serialize;

use crate::binom2;
use crate::error::Result;
use crate::largest_k_pair_count_at_most;
use crate::partition::{DistinctPartition, GraphClass};

/// `(k, j)` with `e = binom(k+1, 2) - j` and `1 <= j <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QcDecomposition {
    pub k: u64,
    pub j: u64,
}

/// `(k', j')` with `e = binom(v, 2) - binom(k'+1, 2) + j'` and `1 <= j' <= k'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QsDecomposition {
    pub kp: u64,
    pub jp: u64,
}

pub fn qc_decompose(e: u64) -> QcDecomposition {
    // k is the largest integer with binom(k, 2) <= e.
    let k = largest_k_pair_count_at_most(2 * e as u128);
    let j = binom2(k + 1) - e;
    debug_assert!(1 <= j && j <= k);
    QcDecomposition { k, j }
}

pub fn qs_decompose(v: u64, e: u64) -> Result<QsDecomposition> {
    let gc = GraphClass::new(v, e)?;
    let QcDecomposition { k, j } = qc_decompose(gc.complement_edges());
    Ok(QsDecomposition { kp: k, jp: j })
}

pub(crate) fn qc_partition(e: u64) -> DistinctPartition {
    let QcDecomposition { k, j } = qc_decompose(e);
    DistinctPartition::from_valid_parts((1..=k).rev().filter(|&p| p != j).collect())
}

pub(crate) fn qs_partition(gc: GraphClass) -> DistinctPartition {
    let QcDecomposition { k: kp, j: jp } = qc_decompose(gc.complement_edges());
    let v = gc.v();
    if kp >= v {
        // e = 0: k' = j' = v.
        return DistinctPartition::empty();
    }
    let mut parts: Vec<u64> = (kp + 1..v).rev().collect();
    parts.push(jp);
    DistinctPartition::from_valid_parts(parts)
}

/// Partition of the quasi-complete graph `QC(v, e)`.
pub fn quasi_complete(v: u64, e: u64) -> Result<DistinctPartition> {
    GraphClass::new(v, e)?;
    Ok(qc_partition(e))
}

/// Partition of the quasi-star graph `QS(v, e)`.
pub fn quasi_star(v: u64, e: u64) -> Result<DistinctPartition> {
    Ok(qs_partition(GraphClass::new(v, e)?))
}

/// `C = j(k-1)^2 + (k-j)k^2 + (k-j)^2`; `v` only bounds the range of `e`.
pub(crate) fn c_of_edges(e: u64) -> u128 {
    let QcDecomposition { k, j } = qc_decompose(e);
    let (k, j) = (k as u128, j as u128);
    j * (k - 1) * (k - 1) + (k - j) * k * k + (k - j) * (k - j)
}

pub(crate) fn s_of_class(gc: GraphClass) -> u128 {
    let v = gc.v() as i128;
    let e = gc.e() as i128;
    let s = c_of_edges(gc.complement_edges()) as i128 + (v - 1) * (4 * e - v * (v - 1));
    debug_assert!(s >= 0);
    s as u128
}

/// `C(v, e)`, the sum of squared degrees of `QC(v, e)`.
pub fn value_c(v: u64, e: u64) -> Result<u128> {
    GraphClass::new(v, e)?;
    Ok(c_of_edges(e))
}

/// `S(v, e) = C(v, e') + (v-1)(4e - v(v-1))`.
pub fn value_s(v: u64, e: u64) -> Result<u128> {
    Ok(s_of_class(GraphClass::new(v, e)?))
}

/// `max(v, e) = max(S(v, e), C(v, e))`.
pub fn max_p2(v: u64, e: u64) -> Result<u128> {
    let gc = GraphClass::new(v, e)?;
    Ok(s_of_class(gc).max(c_of_edges(e)))
}

/// Maximum edge count of the line graph `L(G)` over `G(v, e)`: `max/2 - e`.
pub fn max_line_graph_edges(v: u64, e: u64) -> Result<u128> {
    Ok(max_p2(v, e)? / 2 - e as u128)
}
