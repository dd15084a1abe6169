use proptest::prelude::*;

use disc2::classify::{classify_cubic, Configuration};
use disc2::disc::{self, d1_from_roots, d2_from_roots, from_roots, has_repeated_root, has_symmetric_triple};
use disc2::Rational;

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

fn roots(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Rational>> {
    n.prop_flat_map(|n| prop::collection::vec(rational(), n))
}

fn value(p: disc2::MPoly) -> Rational {
    p.constant_value().expect("numeric input gives a number")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn discriminants_match_root_products(r in roots(3..=6)) {
        let f = from_roots(&r);
        prop_assert_eq!(value(disc::d1(&f).unwrap()), d1_from_roots(&r));
        prop_assert_eq!(value(disc::d2_via_h(&f).unwrap()), d2_from_roots(&r));
    }

    #[test]
    fn reduced_and_full_resultants_agree(r in roots(3..=5)) {
        let f = from_roots(&r);
        prop_assert_eq!(disc::d2_via_h(&f).unwrap(), disc::d2_via_h_full(&f).unwrap());
    }

    #[test]
    fn g_is_h_squared(r in roots(3..=6)) {
        let f = from_roots(&r);
        let h = disc::build_h(&f).unwrap();
        prop_assert_eq!(disc::big_g(&f).unwrap(), &h * &h);
    }

    #[test]
    fn e_is_constant_times_d2_squared(r in roots(3..=5)) {
        let f = from_roots(&r);
        let d2 = d2_from_roots(&r);
        let e = value(disc::big_e(&f).unwrap());
        prop_assert_eq!(e, disc::e_constant(r.len()).unwrap() * (&d2 * &d2));
    }

    #[test]
    fn zero_test_detects_repeated_or_symmetric(r in roots(3..=5)) {
        let f = from_roots(&r);
        let expect = has_repeated_root(&r) || has_symmetric_triple(&r);
        prop_assert_eq!(disc::d1d2_zero_test(&f).unwrap(), expect);
    }

    #[test]
    fn shift_invariance(r in roots(3..=5), t in rational()) {
        let shifted: Vec<Rational> = r.iter().map(|x| x + &t).collect();
        prop_assert_eq!(d2_from_roots(&r), value(disc::d2_via_h(&from_roots(&shifted)).unwrap()));
    }

    #[test]
    fn real_cubic_signs_are_consistent(r in roots(3..=3)) {
        let class = classify_cubic(&from_roots(&r)).unwrap();
        prop_assert!(class.d1_sign >= 0);
        prop_assert_eq!(class.configuration, Configuration::from_signs(class.d1_sign, class.d2_sign));
    }
}
