mod common;

use monoext::contours::{
    lower_contour, upper_contour, ContourOracle, FiniteSampleOracle, PartialUtility,
};
use monoext::monotonicity::check_weakly_increasing;
use monoext::order::{Augmented, ExtReal};
use proptest::prelude::*;

proptest! {
    #[test]
    fn bounds_match_direct_scan((rel, f) in common::instance(7)) {
        let oracle = FiniteSampleOracle::new(&rel, f.clone());
        for x in 0..rel.len() {
            prop_assert_eq!(oracle.lower_sup(&x), common::scan_lower(&rel, &f, x));
            prop_assert_eq!(oracle.upper_inf(&x), common::scan_upper(&rel, &f, x));
            let lc = lower_contour(&rel, &f.elements(), &x).unwrap();
            let uc = upper_contour(&rel, &f.elements(), &x).unwrap();
            prop_assert_eq!(lc.is_empty(), oracle.lower_sup(&x) == ExtReal::NegInf);
            prop_assert_eq!(uc.is_empty(), oracle.upper_inf(&x) == ExtReal::PosInf);
        }
    }

    #[test]
    fn bounds_are_isotone_and_class_constant((rel, f) in common::instance(7)) {
        let oracle = FiniteSampleOracle::new(&rel, f);
        let n = rel.len();
        for x in 0..n {
            for y in 0..n {
                if rel.get(y, x) {
                    prop_assert!(oracle.lower_sup(&y) >= oracle.lower_sup(&x));
                    prop_assert!(oracle.upper_inf(&y) >= oracle.upper_inf(&x));
                }
                if common::equivalent(&rel, x, y) {
                    prop_assert_eq!(oracle.lower_sup(&y), oracle.lower_sup(&x));
                    prop_assert_eq!(oracle.upper_inf(&y), oracle.upper_inf(&x));
                }
            }
        }
    }

    #[test]
    fn sample_value_is_sandwiched((rel, f) in common::instance(7)) {
        let oracle = FiniteSampleOracle::new(&rel, f.clone());
        let weak = check_weakly_increasing(&rel, &f).holds();
        for &(p, v) in f.entries() {
            let (a, b) = (oracle.lower_sup(&p), oracle.upper_inf(&p));
            prop_assert!(a >= ExtReal::Finite(v) && ExtReal::Finite(v) >= b);
            if weak {
                prop_assert_eq!(a, ExtReal::Finite(v));
                prop_assert_eq!(b, ExtReal::Finite(v));
            }
        }
    }

    #[test]
    fn enlarging_the_sample_widens_the_bounds(
        (rel, f) in common::instance(7),
        keep in proptest::collection::vec(any::<bool>(), 7),
    ) {
        let kept: Vec<_> = f
            .entries()
            .iter()
            .enumerate()
            .filter(|(i, _)| keep[*i])
            .map(|(_, e)| *e)
            .collect();
        let small = PartialUtility::new(&rel, kept).unwrap();
        let big_o = FiniteSampleOracle::new(&rel, f);
        let small_o = FiniteSampleOracle::new(&rel, small);
        for x in 0..rel.len() {
            prop_assert!(small_o.lower_sup(&x) <= big_o.lower_sup(&x));
            prop_assert!(small_o.upper_inf(&x) >= big_o.upper_inf(&x));
        }
    }

    #[test]
    fn augmented_bounds((rel, f) in common::instance(6)) {
        let oracle = FiniteSampleOracle::new(&rel, f.clone());
        let values: Vec<f64> = f.entries().iter().map(|e| e.1).collect();
        prop_assert_eq!(oracle.a_of(&Augmented::Bottom), ExtReal::NegInf);
        prop_assert_eq!(oracle.b_of(&Augmented::Top), ExtReal::PosInf);
        prop_assert_eq!(oracle.a_of(&Augmented::Top), ExtReal::sup(values.iter().copied()));
        prop_assert_eq!(oracle.b_of(&Augmented::Bottom), ExtReal::inf(values.iter().copied()));
    }
}
