//! Brute-force ground truth.
//!
//! Two independent searches back the closed forms:
//!
//! - every distinct partition of `e` with parts `< v`, scored through the
//!   degree sequence of its threshold graph (not the diagonal formula);
//! - every `e`-subset of the edges of `K_v`, walked in revolving-door order so
//!   each step swaps one edge and updates `P2` in constant time.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::binom2;
use crate::error::{Error, Result};
use crate::extremal::{c_of_edges, s_of_class};
use crate::optimal::optimal_report;
use crate::partition::{DistinctPartition, GraphClass, ThresholdGraph};

/// Largest `v` the graph search will ever accept (`2^36` subsets).
pub const GRAPH_HARD_LIMIT: u64 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleConfig {
    pub partition_cap: u64,
    pub graph_cap: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { partition_cap: 16, graph_cap: 7 }
    }
}

impl OracleConfig {
    fn check_partitions(&self, v: u64) -> Result<()> {
        if v > self.partition_cap {
            return Err(Error::CapExceeded { v, cap: self.partition_cap });
        }
        Ok(())
    }

    fn check_graphs(&self, v: u64) -> Result<()> {
        let cap = self.graph_cap.min(GRAPH_HARD_LIMIT);
        if v > cap {
            return Err(Error::CapExceeded { v, cap });
        }
        Ok(())
    }
}

/// Distinct partitions of `e` with parts `<= max_part`, in decreasing
/// lexicographic order.
#[derive(Debug, Clone)]
pub struct DistinctPartitions {
    e: u64,
    next: Option<Vec<u64>>,
}

/// Greedy completion: largest parts first, each below the previous.
/// Requires `rest <= binom(max + 1, 2)`.
fn fill(parts: &mut Vec<u64>, mut rest: u64, mut max: u64) {
    while rest > 0 {
        let x = max.min(rest);
        parts.push(x);
        rest -= x;
        max = x - 1;
    }
}

impl DistinctPartitions {
    fn new(e: u64, max_part: u64) -> Self {
        let next = (e <= binom2(max_part + 1)).then(|| {
            let mut parts = Vec::new();
            fill(&mut parts, e, max_part);
            parts
        });
        DistinctPartitions { e, next }
    }

    fn successor(&self, cur: &[u64]) -> Option<Vec<u64>> {
        let mut prefix: u64 = cur.iter().sum();
        for i in (0..cur.len()).rev() {
            prefix -= cur[i];
            let rest = self.e - prefix;
            let y = cur[i] - 1;
            if y >= 1 && rest - y <= binom2(y) {
                let mut parts = cur[..i].to_vec();
                parts.push(y);
                fill(&mut parts, rest - y, y - 1);
                return Some(parts);
            }
        }
        None
    }
}

impl Iterator for DistinctPartitions {
    type Item = DistinctPartition;

    fn next(&mut self) -> Option<DistinctPartition> {
        let cur = self.next.take()?;
        self.next = self.successor(&cur);
        Some(DistinctPartition::from_valid_parts(cur))
    }
}

/// Every element of `Dis(v, e)` exactly once.
pub fn enum_distinct_partitions(v: u64, e: u64) -> Result<DistinctPartitions> {
    let gc = GraphClass::new(v, e)?;
    Ok(DistinctPartitions::new(gc.e(), gc.v() - 1))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub v: u64,
    pub e: u64,
    pub brute_max: u128,
    pub closed_form_max: u128,
    pub brute_argmax: BTreeSet<DistinctPartition>,
    pub enum_argmax: BTreeSet<DistinctPartition>,
    pub agree: bool,
}

pub fn brute_max_partitions(v: u64, e: u64) -> Result<OracleReport> {
    brute_max_partitions_with(v, e, &OracleConfig::default())
}

pub fn brute_max_partitions_with(v: u64, e: u64, config: &OracleConfig) -> Result<OracleReport> {
    let gc = GraphClass::new(v, e)?;
    config.check_partitions(v)?;
    let mut brute_max = 0u128;
    let mut brute_argmax = BTreeSet::new();
    for pi in enum_distinct_partitions(v, e)? {
        let p2 = ThresholdGraph::new(v, pi.clone())?.p2();
        if p2 > brute_max || brute_argmax.is_empty() {
            brute_max = p2;
            brute_argmax.clear();
        }
        if p2 == brute_max {
            brute_argmax.insert(pi);
        }
    }
    let closed_form_max = s_of_class(gc).max(c_of_edges(e));
    let enum_argmax: BTreeSet<DistinctPartition> = optimal_report(gc).partitions().cloned().collect();
    let agree = brute_max == closed_form_max && brute_argmax == enum_argmax;
    Ok(OracleReport { v, e, brute_max, closed_form_max, brute_argmax, enum_argmax, agree })
}

enum Step<'a> {
    First(&'a [usize]),
    Swap { out: usize, inn: usize },
}

/// Revolving-door walk over `t`-subsets of `0..n`, `1 < t < n`: the first
/// subset, then one swap per subsequent subset.
fn revolving_door(n: usize, t: usize, mut visit: impl FnMut(Step)) {
    debug_assert!(1 < t && t < n);
    // c[1..=t] ascending, c[t+1] = n as a sentinel.
    let mut c: Vec<usize> = (0..=t).map(|j| j.saturating_sub(1)).collect();
    c.push(n);
    visit(Step::First(&c[1..=t]));
    loop {
        let mut j = 2;
        let mut increase = if t % 2 == 1 {
            if c[1] + 1 < c[2] {
                visit(Step::Swap { out: c[1], inn: c[1] + 1 });
                c[1] += 1;
                continue;
            }
            false
        } else {
            if c[1] > 0 {
                visit(Step::Swap { out: c[1], inn: c[1] - 1 });
                c[1] -= 1;
                continue;
            }
            true
        };
        loop {
            if j > t {
                return;
            }
            if !increase {
                // c[j] = c[j-1] + 1
                if c[j] >= j {
                    visit(Step::Swap { out: c[j], inn: j - 2 });
                    c[j] = c[j - 1];
                    c[j - 1] = j - 2;
                    break;
                }
            } else if c[j] + 1 < c[j + 1] {
                // c[j-1] = j - 2
                visit(Step::Swap { out: j - 2, inn: c[j] + 1 });
                c[j - 1] = c[j];
                c[j] += 1;
                break;
            }
            j += 1;
            increase = !increase;
        }
    }
}

/// Maximum `P2` over all labeled graphs with `v` vertices and `e` edges.
pub fn brute_max_graphs(v: u64, e: u64) -> Result<u128> {
    brute_max_graphs_with(v, e, &OracleConfig::default())
}

pub fn brute_max_graphs_with(v: u64, e: u64, config: &OracleConfig) -> Result<u128> {
    let gc = GraphClass::new(v, e)?;
    config.check_graphs(v)?;
    let n = gc.max_edges() as usize;
    let t = e as usize;
    if t == 0 {
        return Ok(0);
    }
    if t == 1 {
        return Ok(2);
    }
    if t == n {
        return Ok(v as u128 * (v as u128 - 1) * (v as u128 - 1));
    }
    let edges: Vec<(usize, usize)> =
        (0..v as usize).flat_map(|a| (a + 1..v as usize).map(move |b| (a, b))).collect();
    let mut deg = vec![0i64; v as usize];
    let mut p2: i64 = 0;
    let mut best: i64 = 0;
    revolving_door(n, t, |step| match step {
        Step::First(first) => {
            for &s in first {
                let (a, b) = edges[s];
                deg[a] += 1;
                deg[b] += 1;
            }
            p2 = deg.iter().map(|d| d * d).sum();
            best = p2;
        }
        Step::Swap { out, inn } => {
            let (a, b) = edges[out];
            p2 -= (2 * deg[a] - 1) + (2 * deg[b] - 1);
            deg[a] -= 1;
            deg[b] -= 1;
            let (a, b) = edges[inn];
            p2 += (2 * deg[a] + 1) + (2 * deg[b] + 1);
            deg[a] += 1;
            deg[b] += 1;
            best = best.max(p2);
        }
    });
    Ok(best as u128)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleKind {
    Partitions,
    Graphs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CheckedClass {
    pub kind: OracleKind,
    pub v: u64,
    pub e: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Disagreement {
    pub kind: OracleKind,
    pub v: u64,
    pub e: u64,
    pub brute_max: u128,
    pub closed_form_max: u128,
    pub argmax_matches: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub checked: Vec<CheckedClass>,
    pub disagreements: Vec<Disagreement>,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.disagreements.is_empty()
    }
}

pub fn verify_range(v_max_partitions: u64, v_max_graphs: u64) -> Result<VerifyReport> {
    verify_range_with(v_max_partitions, v_max_graphs, &OracleConfig::default())
}

/// Both oracles over every class with `1 <= v <=` the respective bound.
pub fn verify_range_with(v_max_partitions: u64, v_max_graphs: u64, config: &OracleConfig) -> Result<VerifyReport> {
    if v_max_partitions > 0 {
        config.check_partitions(v_max_partitions)?;
    }
    if v_max_graphs > 0 {
        config.check_graphs(v_max_graphs)?;
    }
    let classes = |kind, vmax: u64| {
        (1..=vmax).flat_map(move |v| (0..=binom2(v)).map(move |e| CheckedClass { kind, v, e }))
    };
    let checked: Vec<CheckedClass> = classes(OracleKind::Partitions, v_max_partitions)
        .chain(classes(OracleKind::Graphs, v_max_graphs))
        .collect();
    let disagreements: Vec<Disagreement> = checked
        .par_iter()
        .map(|c| -> Result<Option<Disagreement>> {
            let gc = GraphClass::new(c.v, c.e)?;
            let closed_form_max = s_of_class(gc).max(c_of_edges(c.e));
            let (brute_max, argmax_matches) = match c.kind {
                OracleKind::Partitions => {
                    let r = brute_max_partitions_with(c.v, c.e, config)?;
                    (r.brute_max, r.brute_argmax == r.enum_argmax)
                }
                OracleKind::Graphs => (brute_max_graphs_with(c.v, c.e, config)?, true),
            };
            Ok((brute_max != closed_form_max || !argmax_matches).then_some(Disagreement {
                kind: c.kind,
                v: c.v,
                e: c.e,
                brute_max,
                closed_form_max,
                argmax_matches,
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(VerifyReport { checked, disagreements })
}
