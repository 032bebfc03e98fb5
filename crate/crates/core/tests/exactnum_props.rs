mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use slopelab::exactnum::polygon_from_slopes;
use slopelab::{ConvexPolygon, Fraction};

fn small_fraction() -> impl Strategy<Value = Fraction> {
    (-1_000_000i64..1_000_000, 1i64..1_000_000).prop_map(|(n, d)| Fraction::new(n, d).unwrap())
}

/// `a/b == c/d` in big integers.
fn big_eq(f: Fraction, num: BigInt, den: BigInt) -> bool {
    BigInt::from(f.numer()) * &den == num * BigInt::from(f.denom())
}

fn big(f: Fraction) -> (BigInt, BigInt) {
    (BigInt::from(f.numer()), BigInt::from(f.denom()))
}

fn slope_multiset() -> impl Strategy<Value = Vec<(Fraction, u64)>> {
    prop::collection::vec(((-3i64..=3), (1i64..=4), (1u64..=3)), 0..4).prop_map(|v| {
        v.into_iter()
            .map(|(c, d, r)| (Fraction::new(c, d).unwrap(), r))
            .collect()
    })
}

/// Random polygon of width 8 ending at height 0.
fn balanced_polygon() -> impl Strategy<Value = ConvexPolygon> {
    prop::collection::vec(-3i64..=3, 7).prop_map(|v| {
        let last = -v.iter().sum::<i64>();
        polygon_from_slopes(
            v.into_iter()
                .chain([last])
                .map(|s| (Fraction::from_int(s), 1)),
        )
    })
}

proptest! {
    #[test]
    fn arithmetic_matches_big_integers(a in small_fraction(), b in small_fraction()) {
        let ((an, ad), (bn, bd)) = (big(a), big(b));
        prop_assert!(big_eq(a + b, &an * &bd + &bn * &ad, &ad * &bd));
        prop_assert!(big_eq(a - b, &an * &bd - &bn * &ad, &ad * &bd));
        prop_assert!(big_eq(a * b, &an * &bn, &ad * &bd));
        prop_assert_eq!(a.cmp(&b), (&an * &bd).cmp(&(&bn * &ad)));
    }

    #[test]
    fn reduced_form(n in any::<i32>(), d in 1i32..i32::MAX) {
        let f = Fraction::new(n as i64, d as i64).unwrap();
        prop_assert!(f.denom() >= 1);
        prop_assert_eq!(num_integer::gcd(f.numer(), f.denom()), 1);
    }

    #[test]
    fn polygon_ends_at_total_degree(slopes in slope_multiset()) {
        let p = polygon_from_slopes(slopes.clone());
        let width: u64 = slopes.iter().map(|s| s.1).sum();
        let height = slopes.iter().fold(Fraction::ZERO, |acc, &(s, r)| acc + s.mul_int(r as i64));
        prop_assert_eq!(p.end(), (width, height));
        let sl = p.segment_slopes();
        prop_assert!(sl.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn above_is_a_partial_order(p in balanced_polygon(), q in balanced_polygon(), r in balanced_polygon()) {
        prop_assert!(p.lies_on_or_above(&p).unwrap());
        if p.lies_on_or_above(&q).unwrap() && q.lies_on_or_above(&p).unwrap() {
            prop_assert_eq!(&p, &q);
        }
        if p.lies_on_or_above(&q).unwrap() && q.lies_on_or_above(&r).unwrap() {
            prop_assert!(p.lies_on_or_above(&r).unwrap());
        }
    }
}

#[test]
fn polygon_examples() {
    use common::fr;
    let newton = polygon_from_slopes([(fr(2, 5), 5)]);
    let hodge = polygon_from_slopes([(fr(0, 1), 3), (fr(1, 1), 2)]);
    // heights at x = 1..4: 2/5, 4/5, 6/5, 8/5 against 0, 0, 0, 1
    for (x, n, h) in [
        (1, fr(2, 5), fr(0, 1)),
        (2, fr(4, 5), fr(0, 1)),
        (3, fr(6, 5), fr(0, 1)),
        (4, fr(8, 5), fr(1, 1)),
    ] {
        assert_eq!(newton.height_at(x), Some(n));
        assert_eq!(hodge.height_at(x), Some(h));
    }
    assert!(newton.lies_on_or_above(&hodge).unwrap());
    assert!(!hodge.lies_on_or_above(&newton).unwrap());
    assert!(newton.share_endpoints(&hodge));
}
