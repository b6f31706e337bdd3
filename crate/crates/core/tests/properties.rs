use degsq::extremal::{max_p2, value_c, value_s};
use degsq::optimal::optimal_set;
use degsq::partition::{make_partition, ThresholdGraph};
use degsq::{binom2, GraphClass};
use proptest::prelude::*;

/// A vertex count and a random subset of `1..v` as a distinct partition.
fn class_and_partition() -> impl Strategy<Value = (u64, Vec<u64>)> {
    (2u64..60).prop_flat_map(|v| {
        (Just(v), proptest::collection::vec(any::<bool>(), (v - 1) as usize)).prop_map(|(v, mask)| {
            let parts: Vec<u64> = (1..v).rev().filter(|&p| mask[(p - 1) as usize]).collect();
            (v, parts)
        })
    })
}

fn class() -> impl Strategy<Value = (u64, u64)> {
    (1u64..200).prop_flat_map(|v| (Just(v), 0..=binom2(v)))
}

proptest! {
    #[test]
    fn no_partition_beats_the_maximum((v, parts) in class_and_partition()) {
        let pi = make_partition(&parts, v).unwrap();
        let e = pi.edges();
        let p2 = ThresholdGraph::new(v, pi.clone()).unwrap().p2();
        prop_assert!(p2 <= max_p2(v, e).unwrap());
        let report = optimal_set(v, e).unwrap();
        if p2 == report.max {
            prop_assert!(report.partitions().any(|p| *p == pi));
        }
    }

    #[test]
    fn optimal_partitions_attain_the_maximum((v, e) in class()) {
        let report = optimal_set(v, e).unwrap();
        prop_assert!(report.count() >= 1 && report.count() <= 6);
        for p in report.partitions() {
            prop_assert_eq!(p.edges(), e);
            prop_assert!(p.fits(v));
            prop_assert_eq!(ThresholdGraph::new(v, p.clone()).unwrap().p2(), report.max);
        }
    }

    #[test]
    fn complement_swaps_s_and_c((v, e) in class()) {
        let ep = GraphClass::new(v, e).unwrap().complement_edges();
        let shift = (v as u128) * (v as u128 - 1) * (v as u128 - 1);
        let s = value_s(v, e).unwrap() as i128;
        let c = value_c(v, ep).unwrap() as i128;
        // P2 of a complement: sum (v-1-d)^2 = v(v-1)^2 - 2(v-1)(2e) + P2.
        let linear = 4 * (v as i128 - 1) * e as i128;
        prop_assert_eq!(s, c - shift as i128 + linear);
    }
}
