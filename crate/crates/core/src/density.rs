//! Density of vertex counts `v` for which the quasi-star value is at least
//! the quasi-complete value on the whole lower half `0 <= e <= m`.

use rayon::prelude::*;
use serde::Serialize;

use crate::rational::ExactRational;
use crate::sign::{midpoint_params, q0};

/// `S(v, e) >= C(v, e)` for every `0 <= e <= m`.
///
/// `v <= 4` counts as dominant. Otherwise this holds iff `q0(v) >= 0` or
/// `m = binom(k0, 2)`; in the second case `R0 = 0` and the sign change of a
/// negative `q0` sits exactly at `m`.
pub fn qs_dominant(v: u64) -> bool {
    if v <= 4 {
        return true;
    }
    q0(v).expect("v >= 2").signum() >= 0 || midpoint_params(v).expect("v >= 2").b0 == ExactRational::ZERO
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub t: u64,
    pub n: u64,
    pub ratio: ExactRational,
    pub ratio_decimal: String,
}

/// Number of dominant `v` in `[1, t]`.
pub fn density(t: u64) -> DensityReport {
    assert!(t >= 1, "density requires t >= 1");
    let n = (1..=t).into_par_iter().filter(|&v| qs_dominant(v)).count() as u64;
    let ratio = ExactRational::new(n as i128, t as i128);
    DensityReport { t, n, ratio, ratio_decimal: ratio.to_decimal_string(6) }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DensityRow {
    pub v: u64,
    pub q0_sign: i8,
    pub dominant: bool,
}

/// One row per `v` in `[1, t]`; `q0_sign` is 0 for `v = 1`.
pub fn density_rows(t: u64) -> Vec<DensityRow> {
    (1..=t)
        .map(|v| DensityRow {
            v,
            q0_sign: if v < 2 { 0 } else { q0(v).expect("v >= 2").signum() as i8 },
            dominant: qs_dominant(v),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binom2;
    use crate::sign::diff;

    fn dominant_by_scan(v: u64) -> bool {
        (0..=binom2(v) / 2).all(|e| diff(v, e).unwrap() >= 0)
    }

    #[test]
    fn examples() {
        assert!(qs_dominant(25));
        assert!(!qs_dominant(17));
        assert!(qs_dominant(23));
        assert!((1..=4).all(qs_dominant));
        let r = density(1);
        assert_eq!((r.n, r.ratio), (1, ExactRational::from_integer(1)));
    }

    #[test]
    fn agrees_with_scan() {
        for v in 1..=300 {
            assert_eq!(qs_dominant(v), dominant_by_scan(v), "v={v}");
        }
    }

    #[test]
    fn q0_alone_misses_b0_zero() {
        for v in [21u64, 120] {
            assert!(q0(v).unwrap().signum() < 0);
            assert!(dominant_by_scan(v));
            assert!(qs_dominant(v));
        }
    }

    #[test]
    fn monotone_counts() {
        let mut prev = 0;
        for t in 1..=500 {
            let r = density(t);
            assert!(r.n >= prev && r.n <= t);
            prev = r.n;
        }
    }

    #[test]
    fn rows_agree_with_predicate() {
        let rows = density_rows(200);
        assert_eq!(rows.iter().filter(|r| r.dominant).count() as u64, density(200).n);
        assert_eq!(rows[16], DensityRow { v: 17, q0_sign: -1, dominant: false });
    }
}
