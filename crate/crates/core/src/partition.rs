//! Distinct partitions and the threshold graphs they encode.
//!
//! A distinct partition `pi = (a_0 > a_1 > ... > a_p > 0)` with every part
//! below `v` describes the threshold graph whose upper-triangular adjacency
//! rows are left-justified with `a_s` dots in row `s`. Rows and columns are
//! 0-indexed, so the dots of row `t` sit at `(t, t+1) ..= (t, t+a_t)` and the
//! dot `(i, j)` lies on antidiagonal `i + j`. With that convention
//! `P2 = 2 * sum_d d * delta_d`.
//!
//! The adjacency matrix is never materialized: every quantity here is an
//! `O(v + parts)` sweep over the part list.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::{binom2, MAX_VERTICES};

fn check_vertices(v: u64) -> Result<()> {
    if v < 1 {
        return Err(Error::VertexCountTooSmall { v, min: 1 });
    }
    if v > MAX_VERTICES {
        return Err(Error::VertexCountTooLarge { v, max: MAX_VERTICES });
    }
    Ok(())
}

/// A graph class `G(v, e)`: all simple graphs with `v` vertices and `e` edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GraphClass {
    v: u64,
    e: u64,
}

impl GraphClass {
    pub fn new(v: u64, e: u64) -> Result<Self> {
        check_vertices(v)?;
        let hi = binom2(v);
        if e > hi {
            return Err(Error::EdgeOutOfRange { e, lo: 0, hi });
        }
        Ok(GraphClass { v, e })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn e(&self) -> u64 {
        self.e
    }

    /// `binom(v, 2)`, the edge count of the complete graph.
    pub fn max_edges(&self) -> u64 {
        binom2(self.v)
    }

    /// `e' = binom(v, 2) - e`.
    pub fn complement_edges(&self) -> u64 {
        self.max_edges() - self.e
    }

    pub fn complement(&self) -> GraphClass {
        GraphClass { v: self.v, e: self.complement_edges() }
    }
}

/// A strictly decreasing sequence of positive integers.
///
/// Equality is structural; the decreasing sequence is the canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistinctPartition {
    parts: Vec<u64>,
}

impl DistinctPartition {
    /// Validates `parts` as a member of `Dis(v, e)` for `e = sum(parts)`.
    pub fn new(parts: Vec<u64>, v: u64) -> Result<Self> {
        check_vertices(v)?;
        for (i, &p) in parts.iter().enumerate() {
            if p == 0 || p >= v {
                return Err(Error::PartOutOfRange { part: p, max: v - 1 });
            }
            if i > 0 && parts[i - 1] <= p {
                return Err(Error::NotStrictlyDecreasing { index: i });
            }
        }
        Ok(DistinctPartition { parts })
    }

    /// Builds a partition the caller has already proven valid.
    pub(crate) fn from_valid_parts(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] > w[1]));
        debug_assert!(parts.last().is_none_or(|&p| p > 0));
        DistinctPartition { parts }
    }

    pub fn empty() -> Self {
        DistinctPartition::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, or 0 for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// The implied edge count `e = sum of parts`.
    pub fn edges(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Whether every part is below `v`.
    pub fn fits(&self, v: u64) -> bool {
        self.largest() < v
    }

    /// The set-wise complement of the parts inside `{1, ..., v-1}`.
    ///
    /// `Th(pi^c) = Th(pi)^c`, so the result encodes the complement graph and
    /// has `binom(v, 2) - e` edges. Panics if a part is `>= v`.
    pub fn complement(&self, v: u64) -> DistinctPartition {
        assert!(self.fits(v), "partition {self} does not fit v = {v}");
        let mut out = Vec::with_capacity((v as usize).saturating_sub(1 + self.parts.len()));
        let mut present = self.parts.iter().peekable();
        for part in (1..v).rev() {
            if present.peek() == Some(&&part) {
                present.next();
            } else {
                out.push(part);
            }
        }
        DistinctPartition { parts: out }
    }

    /// Counts of dots per antidiagonal; entry `i` of the result is
    /// `delta_{i+1}`.
    pub fn diagonal_sequence(&self) -> DiagonalSequence {
        // Row t covers antidiagonals 2t+1 ..= 2t+a_t.
        let top = self
            .parts
            .iter()
            .enumerate()
            .map(|(t, &a)| 2 * t as u64 + a)
            .max()
            .unwrap_or(0) as usize;
        let mut diff = vec![0i64; top + 2];
        for (t, &a) in self.parts.iter().enumerate() {
            let lo = 2 * t + 1;
            let hi = 2 * t + a as usize;
            diff[lo] += 1;
            diff[hi + 1] -= 1;
        }
        let mut counts = Vec::with_capacity(top);
        let mut run = 0i64;
        for d in diff.iter().take(top + 1).skip(1) {
            run += d;
            counts.push(run as u64);
        }
        DiagonalSequence { counts }
    }

    /// `P2(Th(pi)) = 2 * sum_d d * delta_d`. Independent of `v`.
    pub fn p2_value(&self) -> u128 {
        self.diagonal_sequence().p2()
    }
}

impl fmt::Display for DistinctPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for DistinctPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// `make_partition`: validate `parts` against `v`.
pub fn make_partition(parts: &[u64], v: u64) -> Result<DistinctPartition> {
    DistinctPartition::new(parts.to_vec(), v)
}

/// `delta_1, ..., delta_t`: dots on each antidiagonal of the upper triangle.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct DiagonalSequence {
    counts: Vec<u64>,
}

impl DiagonalSequence {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// The dot product `2 * delta . (1, 2, ..., t)`.
    pub fn p2(&self) -> u128 {
        2 * self
            .counts
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u128 + 1) * c as u128)
            .sum::<u128>()
    }
}

/// The threshold graph `Th(pi)` on `v` vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThresholdGraph {
    v: u64,
    pi: DistinctPartition,
}

impl ThresholdGraph {
    pub fn new(v: u64, pi: DistinctPartition) -> Result<Self> {
        check_vertices(v)?;
        if !pi.fits(v) {
            return Err(Error::PartOutOfRange { part: pi.largest(), max: v - 1 });
        }
        Ok(ThresholdGraph { v, pi })
    }

    pub fn v(&self) -> u64 {
        self.v
    }

    pub fn partition(&self) -> &DistinctPartition {
        &self.pi
    }

    pub fn edges(&self) -> u64 {
        self.pi.edges()
    }

    pub fn graph_class(&self) -> GraphClass {
        GraphClass { v: self.v, e: self.edges() }
    }

    /// Degrees of all `v` vertices, nonincreasing.
    ///
    /// Vertex `i` gets `a_i` from its own row plus one for every earlier row
    /// `s` whose dots reach column `i`.
    pub fn degree_sequence(&self) -> Vec<u64> {
        let v = self.v as usize;
        let mut column_hits = vec![0i64; v + 1];
        for (s, &a) in self.pi.parts.iter().enumerate() {
            column_hits[s + 1] += 1;
            column_hits[s + a as usize + 1] -= 1;
        }
        let mut degrees = Vec::with_capacity(v);
        let mut run = 0i64;
        for i in 0..v {
            run += column_hits[i];
            let row = self.pi.parts.get(i).copied().unwrap_or(0);
            degrees.push(row + run as u64);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    pub fn p2(&self) -> u128 {
        self.pi.p2_value()
    }

    pub fn complement(&self) -> ThresholdGraph {
        ThresholdGraph { v: self.v, pi: self.pi.complement(self.v) }
    }
}

/// `sum d_i^2`.
pub fn p2_from_degrees(degrees: &[u64]) -> u128 {
    degrees.iter().map(|&d| (d as u128) * (d as u128)).sum()
}
