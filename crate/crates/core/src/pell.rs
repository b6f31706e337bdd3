//! Solutions of `V^2 - 2J^2 = P` for the four values of `P` that index the
//! infinite families, and the maps from solutions to `(v, k, e)`.
//!
//! Every positive solution in a class is `(V0 + J0 sqrt2)(3 + 2 sqrt2)^n`,
//! i.e. the orbit of a fundamental pair under `(V, J) -> (3V + 4J, 2V + 3J)`.
//! Classes are merged by ascending `V`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::sign::midpoint_params;

fn serialize_big<S: Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PellSolution {
    #[serde(rename = "V", serialize_with = "serialize_big")]
    pub x: BigInt,
    #[serde(rename = "J", serialize_with = "serialize_big")]
    pub y: BigInt,
    #[serde(rename = "P")]
    pub p: i64,
}

impl PellSolution {
    pub fn satisfies(&self) -> bool {
        &self.x * &self.x - 2 * &self.y * &self.y == BigInt::from(self.p)
    }

    pub fn next_in_class(&self) -> PellSolution {
        PellSolution {
            x: 3 * &self.x + 4 * &self.y,
            y: 2 * &self.x + 3 * &self.y,
            p: self.p,
        }
    }
}

/// Fundamental pairs of each class.
pub fn fundamental_classes(p: i64) -> Result<&'static [(i64, i64)]> {
    Ok(match p {
        -1 => &[(1, 1)],
        -9 => &[(3, 3)],
        -49 => &[(1, 5), (7, 7), (17, 13)],
        7 => &[(3, 1), (5, 3)],
        _ => return Err(Error::UnsupportedP(p)),
    })
}

/// First `count` positive solutions, ascending in `V`.
pub fn pell_solutions(p: i64, count: usize) -> Result<Vec<PellSolution>> {
    let mut heap: BinaryHeap<Reverse<(BigInt, BigInt)>> = fundamental_classes(p)?
        .iter()
        .map(|&(x, y)| Reverse((BigInt::from(x), BigInt::from(y))))
        .collect();
    let mut out: Vec<PellSolution> = Vec::with_capacity(count);
    while out.len() < count {
        let Reverse((x, y)) = heap.pop().expect("class streams are infinite");
        let sol = PellSolution { x, y, p };
        let next = sol.next_in_class();
        heap.push(Reverse((next.x, next.y)));
        if out.last() != Some(&sol) {
            out.push(sol);
        }
    }
    Ok(out)
}

/// Ascending solutions of `P`, unbounded.
fn solutions(p: i64) -> impl Iterator<Item = PellSolution> {
    let mut n = 16;
    let mut buf = pell_solutions(p, n).expect("supported P").into_iter();
    std::iter::from_fn(move || {
        if let Some(s) = buf.next() {
            return Some(s);
        }
        let more = pell_solutions(p, 2 * n).expect("supported P");
        buf = more.into_iter().skip(n).collect::<Vec<_>>().into_iter();
        n *= 2;
        buf.next()
    })
}

/// `(x + shift) / 2`, exact for odd `x` and odd `shift`.
fn half_shift(x: &BigInt, shift: i64) -> BigInt {
    let t = x + shift;
    debug_assert!(t.is_even());
    t / 2
}

fn binom2_big(n: &BigInt) -> BigInt {
    n * (n - 1) / 2
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMember {
    #[serde(serialize_with = "serialize_big")]
    pub v: BigInt,
    #[serde(serialize_with = "serialize_big")]
    pub k: BigInt,
    #[serde(serialize_with = "serialize_big")]
    pub e: BigInt,
    pub expected_optimal_count: usize,
}

impl FamilyMember {
    /// `(v, k, e)` as `u64` when all three fit.
    pub fn to_native(&self) -> Option<(u64, u64, u64)> {
        Some((self.v.to_u64()?, self.k.to_u64()?, self.e.to_u64()?))
    }

    pub fn fits_native(&self) -> bool {
        self.to_native().is_some()
    }
}

/// Classes with exactly three optimal partitions: `(2v-3)^2 - 2(2k-1)^2 = -1`,
/// `v > 5`, `e = binom(k,2)`.
pub fn family_three(count: usize) -> Vec<FamilyMember> {
    solutions(-1)
        .map(|s| (half_shift(&s.x, 3), half_shift(&s.y, 1)))
        .filter(|(v, _)| *v > BigInt::from(5))
        .take(count)
        .map(|(v, k)| {
            let e = binom2_big(&k);
            FamilyMember { v, k, e, expected_optimal_count: 3 }
        })
        .collect()
}

/// Classes with exactly four optimal partitions: `(2v-1)^2 - 2(2k+1)^2 = -49`,
/// `v > 9`, `e = binom(v,2)/2`.
pub fn family_four(count: usize) -> Vec<FamilyMember> {
    solutions(-49)
        .map(|s| (half_shift(&s.x, 1), half_shift(&s.y, -1)))
        .filter(|(v, _)| *v > BigInt::from(9))
        .take(count)
        .map(|(v, k)| {
            let e = binom2_big(&v) / 2;
            FamilyMember { v, k, e, expected_optimal_count: 4 }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct VkPair {
    #[serde(serialize_with = "serialize_big")]
    pub v: BigInt,
    #[serde(serialize_with = "serialize_big")]
    pub k: BigInt,
}

impl VkPair {
    pub fn to_native(&self) -> Option<(u64, u64)> {
        Some((self.v.to_u64()?, self.k.to_u64()?))
    }
}

/// Solutions of `(2v-5)^2 - 2(2k-3)^2 = -1` with `v, k >= 1`, ascending.
/// `V = 2v - 5` and `J = 2k - 3` may be negative, which contributes the
/// pairs `(2,1), (2,2), (3,1), (3,2)` from `V, J = +-1`.
pub fn family_q0_zero(count: usize) -> Vec<VkPair> {
    let one = BigInt::from(1);
    let mut out: Vec<VkPair> = Vec::new();
    for s in solutions(-1) {
        let before = out.len();
        for x in [-&s.x, s.x.clone()] {
            for y in [-&s.y, s.y.clone()] {
                let (v, k) = (half_shift(&x, 5), half_shift(&y, 3));
                if v >= one && k >= one {
                    out.push(VkPair { v, k });
                }
            }
        }
        out[before..].sort();
        out.dedup();
        // Negative signs only help while |V| <= 5 and |J| <= 3.
        if out.len() >= count && s.x > BigInt::from(5) {
            break;
        }
    }
    out.sort();
    out.truncate(count);
    out
}

/// Solutions of `(2v-5)^2 - 2(2k-3)^2 = -9` from positive `(V, J)`,
/// `v = (V+5)/2`, `k = (J+3)/2`; `q0(v) = -2` whenever `k = k0(v)`.
pub fn family_q0_minus_two(count: usize) -> Vec<VkPair> {
    solutions(-9)
        .take(count)
        .map(|s| VkPair { v: half_shift(&s.x, 5), k: half_shift(&s.y, 3) })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum EqualityVariant {
    P7,
    Pminus1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EqualityMember {
    #[serde(serialize_with = "serialize_big")]
    pub v: BigInt,
    #[serde(serialize_with = "serialize_big")]
    pub k: BigInt,
    pub variant: EqualityVariant,
}

/// Solutions of `(2v-3)^2 - 2(2k-1)^2 = 7` and `= -1`; `count` of each,
/// `P7` first, each ascending.
pub fn family_equality_e0(count: usize) -> Vec<EqualityMember> {
    [(EqualityVariant::P7, 7), (EqualityVariant::Pminus1, -1)]
        .into_iter()
        .flat_map(|(variant, p)| {
            solutions(p).take(count).map(move |s| EqualityMember {
                v: half_shift(&s.x, 3),
                k: half_shift(&s.y, 1),
                variant,
            })
        })
        .collect()
}

/// `k == k0(v)`.
pub fn verify_k_is_k0(v: u64, k: u64) -> Result<bool> {
    Ok(midpoint_params(v)?.k0 == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xs(sols: &[PellSolution]) -> Vec<i64> {
        sols.iter().map(|s| s.x.to_i64().unwrap()).collect()
    }
    fn ys(sols: &[PellSolution]) -> Vec<i64> {
        sols.iter().map(|s| s.y.to_i64().unwrap()).collect()
    }
    fn native(m: &[FamilyMember]) -> Vec<(u64, u64, u64)> {
        m.iter().map(|m| m.to_native().unwrap()).collect()
    }
    fn pairs(m: &[VkPair]) -> Vec<(u64, u64)> {
        m.iter().map(|m| m.to_native().unwrap()).collect()
    }

    #[test]
    fn tables() {
        let s = pell_solutions(-1, 5).unwrap();
        assert_eq!(xs(&s), [1, 7, 41, 239, 1393]);
        assert_eq!(ys(&s), [1, 5, 29, 169, 985]);
        let s = pell_solutions(-49, 7).unwrap();
        assert_eq!(xs(&s), [1, 7, 17, 23, 49, 103, 137]);
        assert_eq!(ys(&s), [5, 7, 13, 17, 35, 73, 97]);
        let s = pell_solutions(7, 6).unwrap();
        assert_eq!(xs(&s), [3, 5, 13, 27, 75, 157]);
        assert_eq!(ys(&s), [1, 3, 9, 19, 53, 111]);
        let s = pell_solutions(-9, 5).unwrap();
        assert_eq!(xs(&s), [3, 21, 123, 717, 4179]);
        assert_eq!(ys(&s), [3, 15, 87, 507, 2955]);
    }

    #[test]
    fn unsupported_p() {
        assert_eq!(pell_solutions(3, 2), Err(Error::UnsupportedP(3)));
    }

    #[test]
    fn solutions_satisfy_and_recur() {
        for p in [-1, 7, -9, -49] {
            let sols = pell_solutions(p, 40).unwrap();
            assert!(sols.windows(2).all(|w| w[0].x < w[1].x));
            for s in &sols {
                assert!(s.satisfies());
                assert!(s.x.is_odd() && s.y.is_odd());
            }
            let classes = fundamental_classes(p).unwrap().len();
            for w in sols.windows(classes + 1) {
                assert_eq!(w[0].next_in_class(), w[classes]);
            }
        }
        // Beyond 64 bits.
        let s = pell_solutions(-1, 60).unwrap();
        assert!(s.last().unwrap().x.to_u64().is_none());
    }

    #[test]
    fn unbounded_stream_matches_prefix() {
        let a: Vec<_> = solutions(-49).take(70).collect();
        assert_eq!(a, pell_solutions(-49, 70).unwrap());
    }

    #[test]
    fn family_three_members() {
        let f = family_three(3);
        assert_eq!(native(&f), [(22, 15, 105), (121, 85, 3570), (698, 493, 121278)]);
        assert!(f.iter().all(|m| m.expected_optimal_count == 3));
    }

    #[test]
    fn family_four_members() {
        let f = family_four(4);
        assert_eq!(native(&f), [(12, 8, 33), (25, 17, 150), (52, 36, 663), (69, 48, 1173)]);
        for m in family_four(20) {
            let (v, k) = (&m.v, &m.k);
            let lhs = (2 * v - 1) * (2 * v - 1) - 2 * (2 * k + 1) * (2 * k + 1);
            assert_eq!(lhs, BigInt::from(-49));
        }
    }

    #[test]
    fn q0_zero_members() {
        assert_eq!(pairs(&family_q0_zero(7)), [(2, 1), (2, 2), (3, 1), (3, 2), (6, 4), (23, 16), (122, 86)]);
        for p in family_q0_zero(12) {
            let (v, k) = (&p.v, &p.k);
            let lhs = (2 * v - 5) * (2 * v - 5) - 2 * (2 * k - 3) * (2 * k - 3);
            assert_eq!(lhs, BigInt::from(-1));
        }
    }

    #[test]
    fn q0_zero_members_have_k0() {
        for p in family_q0_zero(12) {
            if let Some((v, k)) = p.to_native() {
                if v > 3 && v < 1 << 40 {
                    assert!(verify_k_is_k0(v, k).unwrap(), "v={v}");
                    assert_eq!(crate::sign::q0(v).unwrap(), crate::ExactRational::ZERO);
                }
            }
        }
    }

    #[test]
    fn q0_minus_two_members() {
        let f = pairs(&family_q0_minus_two(5));
        assert_eq!(f, [(4, 3), (13, 9), (64, 45), (361, 255), (2092, 1479)]);
        for (v, k) in f {
            assert!(verify_k_is_k0(v, k).unwrap());
            assert_eq!(crate::sign::q0(v).unwrap(), crate::ExactRational::from_integer(-2));
        }
    }

    #[test]
    fn equality_members() {
        let f = family_equality_e0(6);
        let p7: Vec<(u64, u64)> =
            f.iter().filter(|m| m.variant == EqualityVariant::P7).map(|m| (m.v.to_u64().unwrap(), m.k.to_u64().unwrap())).collect();
        assert_eq!(p7, [(3, 1), (4, 2), (8, 5), (15, 10), (39, 27), (80, 56)]);
        let pm1: Vec<(u64, u64)> = f
            .iter()
            .filter(|m| m.variant == EqualityVariant::Pminus1)
            .map(|m| (m.v.to_u64().unwrap(), m.k.to_u64().unwrap()))
            .collect();
        assert_eq!(&pm1[..3], [(2, 1), (5, 3), (22, 15)]);
    }

    #[test]
    fn verify_k0_examples() {
        assert!(verify_k_is_k0(23, 16).unwrap());
        assert!(verify_k_is_k0(122, 86).unwrap());
        assert!(verify_k_is_k0(2, 1).unwrap());
        assert!(!verify_k_is_k0(23, 15).unwrap());
    }
}
