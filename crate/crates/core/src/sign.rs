//! Exact analysis of `Diff(v, e) = S(v, e) - C(v, e)` for fixed `v`.
//!
//! The behaviour of `Diff` on `[0, m]`, `m = binom(v,2)/2`, is governed by the
//! sign of
//!
//! ```text
//! q0(v) = (1 - 2(2k0 - 3)^2 + (2v - 5)^2) / 4
//! ```
//!
//! where `k0` is the integer with `binom(k0,2) <= m < binom(k0+1,2)`. When
//! `q0 < 0`, `Diff` changes sign at `m - R0` with
//!
//! ```text
//! R0 = 8(m - e0)(k0 - 2) / (-1 - 2(2k0 - 4)^2 + (2v - 5)^2),   e0 = binom(k0, 2).
//! ```
//!
//! `Diff` is piecewise linear in `e` with breakpoints at `binom(j,2)` and
//! `binom(v,2) - binom(j,2)`. [`profile`] builds the segments, evaluates the
//! slope formula for each, and scans every integer `e` for zeros. The zero
//! set predicted from the `q0` trichotomy is stored next to the scanned one so
//! a disagreement is visible instead of silently resolved.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::extremal::{c_of_edges, qc_decompose, s_of_class};
use crate::partition::GraphClass;
use crate::rational::ExactRational;
use crate::{binom2, largest_k_pair_count_at_most};

/// Quantities attached to the midpoint `m` of `[0, binom(v,2)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MidpointParams {
    pub v: u64,
    pub m: ExactRational,
    pub k0: u64,
    pub b0: ExactRational,
    pub e0: i128,
    pub e1: i128,
    pub f1: i128,
    pub f2: i128,
}

impl MidpointParams {
    /// `(sqrt2/2)(v - 1/2) - 1/2 < k0 < (sqrt2/2) v + 1/2`, checked on squared
    /// integers.
    pub fn k0_bounds_hold(&self) -> bool {
        let v = self.v as i128;
        let k0 = self.k0 as i128;
        // sqrt2 (2v - 1) < 4k0 + 2
        let lower = 2 * (2 * v - 1) * (2 * v - 1) < (4 * k0 + 2) * (4 * k0 + 2);
        // 2k0 - 1 < sqrt2 v
        let upper = (2 * k0 - 1) * (2 * k0 - 1) < 2 * v * v;
        lower && upper
    }

    /// `(2v-3)^2 - 2(2k0-1)^2`; the values -1 and 7 mark the classes where
    /// `Diff(v, e0) = 0` away from the midpoint.
    pub fn e0_pell_residue(&self) -> i128 {
        let v = self.v as i128;
        let k0 = self.k0 as i128;
        (2 * v - 3).pow(2) - 2 * (2 * k0 - 1).pow(2)
    }
}

pub fn midpoint_params(v: u64) -> Result<MidpointParams> {
    if v < 2 {
        return Err(Error::VertexCountTooSmall { v, min: 2 });
    }
    let n = binom2(v);
    let k0 = largest_k_pair_count_at_most(n as u128);
    let n = n as i128;
    let e0 = binom2(k0) as i128;
    let m = ExactRational::new(n, 2);
    Ok(MidpointParams {
        v,
        m,
        k0,
        b0: m - ExactRational::from_integer(e0),
        e0,
        e1: binom2(k0 - 1) as i128,
        f1: n - binom2(k0 + 1) as i128,
        f2: n - binom2(k0 + 2) as i128,
    })
}

fn q0_numerator(v: u64, k0: u64) -> i128 {
    let v = v as i128;
    let k0 = k0 as i128;
    1 - 2 * (2 * k0 - 3).pow(2) + (2 * v - 5).pow(2)
}

/// `q0(v)`.
pub fn q0(v: u64) -> Result<ExactRational> {
    let p = midpoint_params(v)?;
    Ok(ExactRational::new(q0_numerator(v, p.k0), 4))
}

/// `R0(v)`; fails with [`Error::DenominatorZero`] when the denominator
/// vanishes (only possible outside the `q0 < 0` regime).
pub fn r0(v: u64) -> Result<ExactRational> {
    let p = midpoint_params(v)?;
    r0_from(&p)
}

fn r0_from(p: &MidpointParams) -> Result<ExactRational> {
    let v = p.v as i128;
    let k0 = p.k0 as i128;
    let den = -1 - 2 * (2 * k0 - 4).pow(2) + (2 * v - 5).pow(2);
    if den == 0 {
        return Err(Error::DenominatorZero { v: p.v });
    }
    // b0 = B/2 with B = binom(v,2) - 2 e0.
    let twice_b0 = p.b0.num() * (2 / p.b0.den());
    ExactRational::checked_new(4 * twice_b0 * (k0 - 2), den).ok_or(Error::DenominatorZero { v: p.v })
}

pub(crate) fn diff_of_class(gc: GraphClass) -> i128 {
    s_of_class(gc) as i128 - c_of_edges(gc.e()) as i128
}

/// `Diff(v, e) = S(v, e) - C(v, e)`.
pub fn diff(v: u64, e: u64) -> Result<i128> {
    Ok(diff_of_class(GraphClass::new(v, e)?))
}

/// Slope of `Diff` on the window indexed by `(k, l)`:
/// `k(k-3) + l(l-3) - (v-1)(v-4) + 2`.
pub fn segment_slope(v: u64, k: u64, l: u64) -> i128 {
    let (v, k, l) = (v as i128, k as i128, l as i128);
    k * (k - 3) + l * (l - 3) - (v - 1) * (v - 4) + 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Q0Class {
    Q0Positive,
    Q0Zero,
    Q0Negative,
}

/// A maximal interval `[lo, hi]` on which `Diff` is linear.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Segment {
    pub lo: u64,
    pub hi: u64,
    #[serde(skip)]
    pub k: u64,
    #[serde(skip)]
    pub l: u64,
    pub slope: i128,
    #[serde(skip)]
    pub diff_lo: i128,
    #[serde(skip)]
    pub diff_hi: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignProfile {
    pub v: u64,
    pub classification: Q0Class,
    pub q0: ExactRational,
    /// Present iff `classification == Q0Negative`, except at `v = 4` where
    /// the denominator vanishes.
    pub r0: Option<ExactRational>,
    pub m: ExactRational,
    pub k0: u64,
    #[serde(skip)]
    pub params: MidpointParams,
    /// Zeros of `Diff` found by scanning every integer `e`.
    pub equality_edges: Vec<u64>,
    /// Zeros predicted from the `q0` trichotomy.
    pub predicted_equality_edges: Vec<u64>,
    pub segments: Vec<Segment>,
}

impl SignProfile {
    pub fn mismatch(&self) -> bool {
        self.equality_edges != self.predicted_equality_edges
    }

    /// `m - R0`, when defined.
    pub fn crossing(&self) -> Option<ExactRational> {
        self.r0.map(|r| self.m - r)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut value = serde_json::to_value(self).expect("profile serializes");
        value["mismatch"] = self.mismatch().into();
        value
    }

    /// One row per integer `e` in `[0, binom(v,2)]`.
    pub fn rows(&self) -> Vec<ProfileRow> {
        let v = self.v;
        (0..=binom2(v))
            .map(|e| {
                let gc = GraphClass::new(v, e).expect("e in range");
                let s = s_of_class(gc);
                let c = c_of_edges(e);
                ProfileRow { v, e, s, c, diff: s as i128 - c as i128 }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ProfileRow {
    pub v: u64,
    pub e: u64,
    #[serde(rename = "S")]
    pub s: u128,
    #[serde(rename = "C")]
    pub c: u128,
    pub diff: i128,
}

/// Breakpoints `binom(j,2)` and `binom(v,2) - binom(j,2)`, `j = 1..=v`,
/// sorted and deduplicated.
pub fn breakpoints(v: u64) -> Vec<u64> {
    let n = binom2(v);
    let mut pts: Vec<u64> = (1..=v).flat_map(|j| [binom2(j), n - binom2(j)]).collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn segments(v: u64) -> Vec<Segment> {
    let n = binom2(v);
    breakpoints(v)
        .windows(2)
        .map(|w| {
            let (lo, hi) = (w[0], w[1]);
            // binom(k,2) <= lo < binom(k+1,2) and binom(l,2) < n - lo <= binom(l+1,2).
            let k = qc_decompose(lo).k;
            let l = qc_decompose(n - lo - 1).k;
            let diff_at = |e| diff_of_class(GraphClass::new(v, e).expect("e in range"));
            Segment { lo, hi, k, l, slope: segment_slope(v, k, l), diff_lo: diff_at(lo), diff_hi: diff_at(hi) }
        })
        .collect()
}

fn predicted_zeros(p: &MidpointParams, class: Q0Class, r0: Option<ExactRational>) -> Vec<u64> {
    let n = binom2(p.v);
    let mut lower: Vec<u64> = (0..=3).collect();
    let m_int = p.m.to_integer();
    match class {
        Q0Class::Q0Positive => {
            lower.extend(m_int.map(|m| m as u64));
            if matches!(p.e0_pell_residue(), -1 | 7) {
                lower.push(p.e0 as u64);
            }
        }
        Q0Class::Q0Zero => lower.extend(p.e0 as u64..=p.m.floor() as u64),
        Q0Class::Q0Negative => {
            if let Some(r0) = r0 {
                lower.extend((p.m - r0).to_integer().map(|x| x as u64));
            }
            lower.extend(m_int.map(|m| m as u64));
        }
    }
    let mut all: Vec<u64> = lower
        .into_iter()
        .filter(|&e| e <= n)
        .flat_map(|e| [e, n - e])
        .collect();
    all.sort_unstable();
    all.dedup();
    all
}

fn scanned_zeros(v: u64) -> Vec<u64> {
    (0..=binom2(v))
        .into_par_iter()
        .filter(|&e| diff_of_class(GraphClass::new(v, e).expect("e in range")) == 0)
        .collect()
}

fn build_profile(v: u64, with_segments: bool) -> Result<SignProfile> {
    let params = midpoint_params(v)?;
    let q0 = ExactRational::new(q0_numerator(v, params.k0), 4);
    let classification = match q0.signum() {
        1 => Q0Class::Q0Positive,
        0 => Q0Class::Q0Zero,
        _ => Q0Class::Q0Negative,
    };
    // Below v = 5 the denominator of R0 can vanish with q0 < 0 (v = 4).
    let r0 = match classification {
        Q0Class::Q0Negative if v < 5 => r0_from(&params).ok(),
        Q0Class::Q0Negative => Some(r0_from(&params)?),
        _ => None,
    };
    Ok(SignProfile {
        v,
        classification,
        q0,
        r0,
        m: params.m,
        k0: params.k0,
        params,
        equality_edges: scanned_zeros(v),
        predicted_equality_edges: predicted_zeros(&params, classification, r0),
        segments: if with_segments { segments(v) } else { Vec::new() },
    })
}

/// Trichotomy by the sign of `q0`, with predicted and scanned zero sets.
/// The segment list is left empty; see [`profile`].
pub fn classify(v: u64) -> Result<SignProfile> {
    if v < 5 {
        return Err(Error::VertexCountTooSmall { v, min: 5 });
    }
    build_profile(v, false)
}

/// [`classify`] plus the full list of linear segments. Accepts `v >= 2`.
pub fn profile(v: u64) -> Result<SignProfile> {
    build_profile(v, true)
}

fn bound_domain(e: u64, min: u64) -> Result<()> {
    if e < min {
        return Err(Error::EdgeOutOfRange { e, lo: min, hi: u64::MAX });
    }
    Ok(())
}

/// `U(e) = e (sqrt(8e + 1) - 1)`, an upper bound on `C(v, e)` for `e >= 2`.
pub fn bound_u(e: u64) -> Result<f64> {
    bound_domain(e, 2)?;
    let e = e as f64;
    Ok(e * ((8.0 * e + 1.0).sqrt() - 1.0))
}

/// `L(e) = e (sqrt(8e + 1) - 1.5)`, a lower bound on `C(v, e)` for `e >= 3`.
pub fn bound_l(e: u64) -> Result<f64> {
    bound_domain(e, 3)?;
    let e = e as f64;
    Ok(e * ((8.0 * e + 1.0).sqrt() - 1.5))
}
