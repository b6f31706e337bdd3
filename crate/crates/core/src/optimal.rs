//! All optimal partitions of a class `G(v, e)`.
//!
//! Every optimal partition is one of six candidates: three sharing the
//! diagonal sequence of the quasi-star (labels `1.x`) and three sharing that
//! of the quasi-complete (labels `2.x`). The `1.x` family is optimal exactly
//! when `S >= C`, the `2.x` family exactly when `C >= S`. The six formulas can
//! collide, so the report deduplicates structurally but keeps every label.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::extremal::{c_of_edges, qc_decompose, qc_partition, qs_partition, s_of_class, QcDecomposition};
use crate::partition::{DistinctPartition, GraphClass};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CandidateLabel {
    QuasiStar,
    QuasiStarGap,
    QuasiStarTail,
    QuasiComplete,
    QuasiCompleteLead,
    QuasiCompleteTail,
}

impl CandidateLabel {
    pub const ALL: [CandidateLabel; 6] = [
        CandidateLabel::QuasiStar,
        CandidateLabel::QuasiStarGap,
        CandidateLabel::QuasiStarTail,
        CandidateLabel::QuasiComplete,
        CandidateLabel::QuasiCompleteLead,
        CandidateLabel::QuasiCompleteTail,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            CandidateLabel::QuasiStar => "1.1",
            CandidateLabel::QuasiStarGap => "1.2",
            CandidateLabel::QuasiStarTail => "1.3",
            CandidateLabel::QuasiComplete => "2.1",
            CandidateLabel::QuasiCompleteLead => "2.2",
            CandidateLabel::QuasiCompleteTail => "2.3",
        }
    }

    /// True for the labels sharing the quasi-star diagonal sequence.
    pub fn is_star_family(&self) -> bool {
        matches!(
            self,
            CandidateLabel::QuasiStar | CandidateLabel::QuasiStarGap | CandidateLabel::QuasiStarTail
        )
    }
}

impl fmt::Display for CandidateLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for CandidateLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        CandidateLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown candidate label {s:?}"))
    }
}

impl Serialize for CandidateLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(self.as_str())
    }
}

pub type CandidateMap = BTreeMap<CandidateLabel, DistinctPartition>;

/// Every candidate whose existence condition holds.
pub fn candidates(v: u64, e: u64) -> Result<CandidateMap> {
    Ok(candidates_for(GraphClass::new(v, e)?))
}

pub(crate) fn candidates_for(gc: GraphClass) -> CandidateMap {
    let v = gc.v();
    let e = gc.e();
    let QcDecomposition { k, j } = qc_decompose(e);
    let QcDecomposition { k: kp, j: jp } = qc_decompose(gc.complement_edges());
    let mut out = CandidateMap::new();

    out.insert(CandidateLabel::QuasiStar, qs_partition(gc));

    // (v-1, ..., ^w, ..., k'-1) with w = 2k' - j' - 1.
    if kp + jp + 2 <= 2 * kp && 2 * kp <= v + jp {
        let w = 2 * kp - jp - 1;
        let parts = (kp - 1..v).rev().filter(|&p| p != w).collect();
        out.insert(CandidateLabel::QuasiStarGap, DistinctPartition::from_valid_parts(parts));
    }

    if jp == 3 && v >= 4 {
        let mut parts: Vec<u64> = (kp + 1..v).rev().collect();
        parts.extend([2, 1]);
        out.insert(CandidateLabel::QuasiStarTail, DistinctPartition::from_valid_parts(parts));
    }

    out.insert(CandidateLabel::QuasiComplete, qc_partition(e));

    // (2k - j - 1, k-2, ..., 1).
    if k + j + 2 <= 2 * k && 2 * k <= v + j {
        let mut parts = vec![2 * k - j - 1];
        parts.extend((1..k - 1).rev());
        out.insert(CandidateLabel::QuasiCompleteLead, DistinctPartition::from_valid_parts(parts));
    }

    if j == 3 && v >= 4 {
        let parts = (3..=k).rev().collect();
        out.insert(CandidateLabel::QuasiCompleteTail, DistinctPartition::from_valid_parts(parts));
    }

    out
}

/// One distinct optimal partition with every label that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalPartition {
    pub parts: DistinctPartition,
    pub labels: Vec<CandidateLabel>,
    pub p2: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimalReport {
    #[serde(skip)]
    pub gc: GraphClass,
    pub v: u64,
    pub e: u64,
    #[serde(rename = "S")]
    pub s_value: u128,
    #[serde(rename = "C")]
    pub c_value: u128,
    pub max: u128,
    pub candidates: CandidateMap,
    pub optimal: Vec<OptimalPartition>,
}

impl OptimalReport {
    pub fn count(&self) -> usize {
        self.optimal.len()
    }

    pub fn partitions(&self) -> impl Iterator<Item = &DistinctPartition> {
        self.optimal.iter().map(|o| &o.parts)
    }

    /// The partition a label produced, if that candidate is optimal.
    pub fn optimal_for(&self, label: CandidateLabel) -> Option<&DistinctPartition> {
        self.optimal.iter().find(|o| o.labels.contains(&label)).map(|o| &o.parts)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serializes")
    }
}

pub fn optimal_set(v: u64, e: u64) -> Result<OptimalReport> {
    Ok(optimal_report(GraphClass::new(v, e)?))
}

pub(crate) fn optimal_report(gc: GraphClass) -> OptimalReport {
    let s_value = s_of_class(gc);
    let c_value = c_of_edges(gc.e());
    let max = s_value.max(c_value);
    let candidates = candidates_for(gc);

    let mut optimal: Vec<OptimalPartition> = Vec::new();
    for (&label, parts) in &candidates {
        let wins = if label.is_star_family() { s_value >= c_value } else { c_value >= s_value };
        if !wins {
            continue;
        }
        match optimal.iter_mut().find(|o| &o.parts == parts) {
            Some(existing) => existing.labels.push(label),
            None => optimal.push(OptimalPartition { parts: parts.clone(), labels: vec![label], p2: max }),
        }
    }

    OptimalReport { gc, v: gc.v(), e: gc.e(), s_value, c_value, max, candidates, optimal }
}

/// Number of distinct optimal partitions, in `1..=6`.
pub fn optimal_count(v: u64, e: u64) -> Result<usize> {
    Ok(optimal_set(v, e)?.count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom2;
    use crate::extremal::{quasi_complete, quasi_star};
    use crate::partition::make_partition;
    use CandidateLabel::*;

    fn part(parts: &[u64], v: u64) -> DistinctPartition {
        make_partition(parts, v).unwrap()
    }

    #[test]
    fn label_strings_round_trip() {
        for l in CandidateLabel::ALL {
            assert_eq!(l.as_str().parse::<CandidateLabel>().unwrap(), l);
        }
        assert!("3.1".parse::<CandidateLabel>().is_err());
    }

    #[test]
    fn candidates_nine_eighteen() {
        let c = candidates(9, 18).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c[&QuasiStar], part(&[8, 7, 3], 9));
        assert_eq!(c[&QuasiStarGap], part(&[7, 6, 5], 9));
        assert_eq!(c[&QuasiStarTail], part(&[8, 7, 2, 1], 9));
        assert_eq!(c[&QuasiComplete], part(&[6, 5, 4, 2, 1], 9));
        assert_eq!(c[&QuasiCompleteLead], part(&[8, 4, 3, 2, 1], 9));
        assert_eq!(c[&QuasiCompleteTail], part(&[6, 5, 4, 3], 9));
    }

    #[test]
    fn candidates_twenty_two() {
        let c = candidates(22, 105).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[&QuasiStar], part(&[21, 20, 19, 18, 17, 10], 22));
        assert_eq!(c[&QuasiStarGap], part(&[20, 19, 18, 17, 16, 15], 22));
        assert_eq!(c[&QuasiComplete], part(&(1..=14).rev().collect::<Vec<_>>(), 22));
    }

    #[test]
    fn candidates_empty_class() {
        for v in 1..8 {
            let c = candidates(v, 0).unwrap();
            assert!(c[&QuasiStar].is_empty());
            assert!(c[&QuasiComplete].is_empty());
        }
    }

    #[test]
    fn optimal_set_examples() {
        let r = optimal_set(9, 18).unwrap();
        assert_eq!(r.count(), 6);
        assert!(r.partitions().all(|p| p.p2_value() == 192));

        let r = optimal_set(7, 9).unwrap();
        assert_eq!(r.count(), 4);
        let shared = r.optimal.iter().find(|o| o.labels.len() == 2).unwrap();
        assert_eq!(shared.labels, vec![QuasiStarTail, QuasiCompleteLead]);
        assert!(r.optimal_for(QuasiStar).is_some());
        assert!(r.optimal_for(QuasiStarGap).is_some());
        assert!(r.optimal_for(QuasiComplete).is_some());

        let r = optimal_set(9, 2 * 9 - 5).unwrap();
        let labels: Vec<_> = r.optimal.iter().flat_map(|o| o.labels.clone()).collect();
        assert_eq!(labels, vec![QuasiStar, QuasiStarGap]);
    }

    #[test]
    fn optimal_count_examples() {
        assert_eq!(optimal_count(9, 18).unwrap(), 6);
        assert_eq!(optimal_count(7, 12).unwrap(), 4);
        for v in 5..30 {
            assert_eq!(optimal_count(v, binom2(v)).unwrap(), 1, "v={v}");
        }
    }

    #[test]
    fn report_json_shape() {
        let j = optimal_set(9, 18).unwrap().to_json();
        assert_eq!(j["v"], 9);
        assert_eq!(j["S"], 192);
        assert_eq!(j["C"], 192);
        assert_eq!(j["max"], 192);
        assert_eq!(j["candidates"]["1.2"], serde_json::json!([7, 6, 5]));
        assert_eq!(j["optimal"].as_array().unwrap().len(), 6);
        assert_eq!(j["optimal"][0]["labels"], serde_json::json!(["1.1"]));
        assert_eq!(j["optimal"][0]["p2"], 192);
    }

    fn coincidences(v: u64, e: u64) -> Vec<(CandidateLabel, CandidateLabel)> {
        let c = candidates(v, e).unwrap();
        let mut out = Vec::new();
        for (a, pa) in &c {
            for (b, pb) in &c {
                if a < b && pa == pb {
                    out.push((*a, *b));
                }
            }
        }
        out
    }

    #[test]
    fn every_candidate_is_a_valid_partition_of_e() {
        for v in 1..=40u64 {
            for e in 0..=binom2(v) {
                for (label, p) in candidates(v, e).unwrap() {
                    assert!(make_partition(p.parts(), v).is_ok(), "v={v} e={e} {label}");
                    assert_eq!(p.edges(), e, "v={v} e={e} {label}");
                }
            }
        }
    }

    #[test]
    fn candidate_families_share_diagonal_sequences() {
        for v in 1..=30u64 {
            for e in 0..=binom2(v) {
                let star = quasi_star(v, e).unwrap().diagonal_sequence();
                let complete = quasi_complete(v, e).unwrap().diagonal_sequence();
                for (label, p) in candidates(v, e).unwrap() {
                    let want = if label.is_star_family() { &star } else { &complete };
                    assert_eq!(&p.diagonal_sequence(), want, "v={v} e={e} {label}");
                }
            }
        }
    }

    #[test]
    fn coincidence_catalog() {
        for v in 1..=40u64 {
            let top = binom2(v);
            for e in 0..=top {
                let ep = top - e;
                let mut expected = Vec::new();
                if e <= 2 || ep <= 2 {
                    expected.push((QuasiStar, QuasiComplete));
                }
                if v >= 4 && (e == 3 || ep == 3) {
                    expected.push((QuasiStar, QuasiCompleteTail));
                    expected.push((QuasiStarTail, QuasiComplete));
                }
                if (v, e) == (5, 5) {
                    expected.push((QuasiStar, QuasiCompleteLead));
                    expected.push((QuasiStarGap, QuasiComplete));
                }
                if (v, e) == (6, 7) || (v, e) == (7, 12) {
                    expected.push((QuasiStarGap, QuasiCompleteTail));
                }
                if (v, e) == (6, 8) || (v, e) == (7, 9) {
                    expected.push((QuasiStarTail, QuasiCompleteLead));
                }
                expected.sort();
                expected.dedup();
                assert_eq!(coincidences(v, e), expected, "v={v} e={e}");
                if v >= 8 && (4..=top.saturating_sub(4)).contains(&e) {
                    assert!(coincidences(v, e).is_empty());
                }
            }
        }
    }

    #[test]
    fn count_catalog_up_to_60() {
        for v in 1..=60u64 {
            for e in 0..=binom2(v) {
                let r = optimal_set(v, e).unwrap();
                let n = r.count();
                assert!((1..=6).contains(&n));
                assert_ne!(n, 5);
                if n == 6 {
                    assert_eq!((v, e), (9, 18));
                }
                if n > 2 {
                    assert_eq!(r.s_value, r.c_value, "v={v} e={e}");
                }
                let qs = quasi_star(v, e).unwrap();
                let qc = quasi_complete(v, e).unwrap();
                assert!(r.partitions().any(|p| *p == qs || *p == qc));
            }
        }
    }
}
