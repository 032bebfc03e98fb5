mod common;

use std::collections::{BTreeMap, HashSet};

use common::{brute_force_types, fr, st};
use proptest::prelude::*;
use slopelab::admissibility::candidate_order;
use slopelab::{
    wa_exists, FilteredType, IntersectionProfile, MinusculeHodge, SlopeType, SubSelection,
};

fn iso_strategy(lo: i64, hi: i64) -> impl Strategy<Value = SlopeType> {
    prop::collection::vec((1i64..=4, 0i64..=100, 1u64..=2), 1..4).prop_map(move |v| {
        let raw: Vec<(i64, i64, u64)> = v
            .into_iter()
            .map(|(d, pick, k)| (lo * d + pick % ((hi - lo) * d + 1), d, k))
            .collect();
        SlopeType::normalize(&raw).unwrap()
    })
}

/// A valid explicit profile: per-summand weights summed, clamped into
/// `[max(0, r+f-n), min(r, f)]`. Clamping a monotone function between two
/// monotone bounds keeps it monotone.
fn clamped_profile(iso: &SlopeType, hodge: MinusculeHodge, weights: &[u64]) -> IntersectionProfile {
    let map: BTreeMap<SubSelection, u64> = SubSelection::all(iso)
        .into_iter()
        .map(|k| {
            let g: u64 = k.counts().iter().zip(weights).map(|(a, w)| a * w).sum();
            let r = k.rank(iso);
            let lo = (r + hodge.f()).saturating_sub(hodge.n());
            let hi = r.min(hodge.f());
            (k, g.clamp(lo, hi))
        })
        .collect();
    IntersectionProfile::Explicit(map)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn candidates_match_brute_force(iso in iso_strategy(-1, 2), h in -1i64..=2, fpick in 0u64..=100) {
        let n = iso.rank();
        prop_assume!(n <= 6);
        let f = fpick % (n + 1);
        let ft = FilteredType::generic(iso.clone(), h, f).unwrap();
        let got = ft.enumerate_m_candidates().unwrap();
        let (lo, hi) = (iso.min_slope().unwrap() - fr(h, 1), iso.max_slope().unwrap() - fr(h, 1) + fr(1, 1));
        let cmax = 4 * n as i64;
        let oracle = brute_force_types(n, lo, hi, ft.t_n() - ft.t_h(), cmax);
        let got_set: HashSet<_> = got.iter().cloned().collect();
        let oracle_set: HashSet<_> = oracle.into_iter().collect();
        prop_assert_eq!(got_set.len(), got.len());
        prop_assert_eq!(got_set, oracle_set);
        for c in &got {
            prop_assert_eq!(c.rank(), n);
            prop_assert_eq!(c.degree(), ft.deg_m());
        }
        prop_assert!(got.windows(2).all(|w| candidate_order(&w[0], &w[1]).is_lt()));
        if let Some(pos) = got.iter().position(SlopeType::is_unit_root) {
            prop_assert_eq!(pos, 0);
        }
    }

    #[test]
    fn weakly_admissible_implies_newton_above_hodge(
        iso in iso_strategy(0, 1),
        h in 0i64..=2,
        weights in prop::collection::vec(0u64..=4, 4),
    ) {
        let n = iso.rank();
        prop_assume!(n <= 8);
        // choose f so that t_H = t_N when possible
        let f = iso.degree() - (h - 1) * n as i64;
        prop_assume!(f >= 0 && f as u64 <= n);
        let hodge = MinusculeHodge::new(h, f as u64, n).unwrap();
        let profile = clamped_profile(&iso, hodge, &weights);
        let ft = FilteredType::new(iso.clone(), hodge, profile).unwrap();
        ft.validate_profile().unwrap();
        if ft.is_weakly_admissible().unwrap() {
            prop_assert!(wa_exists(&iso, hodge).unwrap());
        }
    }

    #[test]
    fn raising_f_raises_t_h_by_one(iso in iso_strategy(-1, 2), fpick in 0u64..=100) {
        let n = iso.rank();
        let f = fpick % n;
        let a = FilteredType::generic(iso.clone(), 1, f).unwrap();
        let b = FilteredType::generic(iso.clone(), 1, f + 1).unwrap();
        prop_assert_eq!(b.t_h(), a.t_h() + 1);
        prop_assert_eq!(b.t_n(), a.t_n());
        // a failing top equality with t_H > t_N stays failing
        if a.t_h() > a.t_n() {
            prop_assert!(!b.is_weakly_admissible().unwrap());
        }
    }
}

#[test]
fn generic_agrees_with_polygon_criterion_multiplicity_free() {
    let mut checked = 0;
    for n in 1..=6u64 {
        for iso in slopelab::slopecalc::enumerate_types(n, fr(-1, 1), fr(2, 1), None) {
            if !iso.is_multiplicity_free() {
                continue;
            }
            for f in 0..=n {
                let ft = FilteredType::generic(iso.clone(), 1, f).unwrap();
                assert_eq!(
                    ft.is_weakly_admissible().unwrap(),
                    wa_exists(&iso, ft.hodge()).unwrap(),
                    "{iso:?} f={f}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn unit_root_candidates_have_weight_zero() {
    for n in 1..=6u64 {
        for iso in slopelab::slopecalc::enumerate_types(n, fr(0, 1), fr(1, 1), None) {
            let ft = FilteredType::generic(iso.clone(), 1, iso.degree() as u64).unwrap();
            for c in ft.enumerate_m_candidates().unwrap() {
                if c.is_unit_root() {
                    assert_eq!(c.weight().unwrap(), fr(0, 1));
                    assert_eq!(c.degree(), 0);
                }
            }
        }
    }
}

#[test]
fn derived_enumeration_examples() {
    // rank 2, degree 0, slopes in [-1/2, 1/2]
    let ft = FilteredType::generic(st(&[(1, 2, 1)]), 1, 1).unwrap();
    let oracle = brute_force_types(2, fr(-1, 2), fr(1, 2), 0, 4);
    assert_eq!(oracle, vec![SlopeType::unit(2)]);
    assert_eq!(ft.enumerate_m_candidates().unwrap(), oracle);

    let ft = FilteredType::generic(st(&[(2, 5, 1)]), 1, 2).unwrap();
    let oracle: HashSet<_> = brute_force_types(5, fr(-3, 5), fr(2, 5), 0, 10)
        .into_iter()
        .collect();
    let got: HashSet<_> = ft.enumerate_m_candidates().unwrap().into_iter().collect();
    assert_eq!(got, oracle);
}
