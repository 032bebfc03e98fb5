//! Independent oracles shared by the integration suites.
//!
//! Everything here works on raw slope vectors or brute-force enumeration and
//! never calls the engine operation it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;

use slopelab::{Fraction, SlopeType};

pub fn fr(n: i64, d: i64) -> Fraction {
    Fraction::new(n, d).unwrap()
}

pub fn st(raw: &[(i64, i64, u64)]) -> SlopeType {
    SlopeType::normalize(raw).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// One slope per unit of rank, ascending, read straight off the summands.
pub fn slopes_of(t: &SlopeType) -> Vec<Fraction> {
    let mut v = Vec::new();
    for (s, k) in t.summands() {
        for _ in 0..(k * s.rank()) {
            v.push(fr(s.c(), s.d()));
        }
    }
    v.sort();
    v
}

/// Rebuilds a slope type from a slope multiset with one entry per unit of
/// rank. Panics when a slope's rank is not a multiple of its denominator.
pub fn from_slopes(slopes: &[Fraction]) -> SlopeType {
    let mut ranks: BTreeMap<Fraction, u64> = BTreeMap::new();
    for &s in slopes {
        *ranks.entry(s).or_default() += 1;
    }
    let raw: Vec<(i64, i64, u64)> = ranks
        .into_iter()
        .map(|(s, r)| {
            let d = s.denom() as u64;
            assert_eq!(r % d, 0, "slope {s} with rank {r}");
            (s.numer(), s.denom(), r / d)
        })
        .collect();
    if raw.is_empty() {
        SlopeType::empty()
    } else {
        SlopeType::normalize(&raw).unwrap()
    }
}

/// Slopes of `A ⊗ B` as all pairwise sums.
pub fn tensor_oracle(a: &SlopeType, b: &SlopeType) -> SlopeType {
    let (sa, sb) = (slopes_of(a), slopes_of(b));
    let v: Vec<Fraction> = sa
        .iter()
        .flat_map(|&x| sb.iter().map(move |&y| x + y))
        .collect();
    from_slopes(&v)
}

/// Slopes of `∧^k A` as sums over k-element index subsets.
pub fn exterior_oracle(a: &SlopeType, k: usize) -> SlopeType {
    let s = slopes_of(a);
    let n = s.len();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize == k {
            let sum = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .fold(Fraction::ZERO, |acc, i| acc + s[i]);
            out.push(sum);
        }
    }
    from_slopes(&out)
}

/// Every multiset of coprime pairs `(c,d)` with `d ≤ n`, `|c| ≤ cmax`, total
/// rank `n`, slope in `[lo, hi]` and the given degree, with no pruning.
pub fn brute_force_types(
    n: u64,
    lo: Fraction,
    hi: Fraction,
    degree: i64,
    cmax: i64,
) -> Vec<SlopeType> {
    brute_force_any(n, lo, hi, cmax)
        .into_iter()
        .filter(|t| t.degree() == degree)
        .collect()
}

/// As [`brute_force_types`] without the degree condition.
pub fn brute_force_any(n: u64, lo: Fraction, hi: Fraction, cmax: i64) -> Vec<SlopeType> {
    let mut pairs = Vec::new();
    for d in 1..=n as i64 {
        for c in -cmax..=cmax {
            if gcd(c, d) == 1 && fr(c, d) >= lo && fr(c, d) <= hi {
                pairs.push((c, d));
            }
        }
    }
    let mut out = Vec::new();
    let mut cur: Vec<(i64, i64, u64)> = Vec::new();
    fn rec(
        pairs: &[(i64, i64)],
        i: usize,
        left: u64,
        cur: &mut Vec<(i64, i64, u64)>,
        out: &mut Vec<Vec<(i64, i64, u64)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if i == pairs.len() {
            return;
        }
        let (c, d) = pairs[i];
        for k in 0..=left / d as u64 {
            if k > 0 {
                cur.push((c, d, k));
            }
            rec(pairs, i + 1, left - k * d as u64, cur, out);
            if k > 0 {
                cur.pop();
            }
        }
    }
    let mut raws = Vec::new();
    rec(&pairs, 0, n, &mut cur, &mut raws);
    for raw in raws {
        out.push(if raw.is_empty() {
            SlopeType::empty()
        } else {
            SlopeType::normalize(&raw).unwrap()
        });
    }
    out
}

/// The three-case `Hom` table on simple objects: 0 when the source slope is
/// smaller, `d²` on equal objects, infinite when the source slope is larger.
pub fn hom_table(c: i64, d: i64, c2: i64, d2: i64) -> Option<u64> {
    let (s, s2) = (fr(c, d), fr(c2, d2));
    if s < s2 {
        Some(0)
    } else if s == s2 {
        Some((d * d) as u64)
    } else {
        None
    }
}

/// All coprime pairs with `1 ≤ d ≤ max_d` and `|c| ≤ cmax`.
pub fn coprime_pairs(max_d: i64, cmax: i64) -> Vec<(i64, i64)> {
    let mut v = Vec::new();
    for d in 1..=max_d {
        for c in -cmax..=cmax {
            if gcd(c, d) == 1 {
                v.push((c, d));
            }
        }
    }
    v
}

/// All slope types in `[lo, hi]` with rank in `1..=max_rank`, by brute force.
pub fn all_types(max_rank: u64, lo: Fraction, hi: Fraction) -> Vec<SlopeType> {
    let cmax = (hi.numer().abs().max(lo.numer().abs()) + 1) * max_rank as i64;
    (1..=max_rank)
        .flat_map(|n| brute_force_any(n, lo, hi, cmax))
        .collect()
}
