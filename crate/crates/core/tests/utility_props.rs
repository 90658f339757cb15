mod common;

use monoext::order::ParetoSpace;
use monoext::order::{FinitePreorder, Preorder};
use monoext::utility::{
    condense, finite_utility, normalize01, squash, squash_value, weighted_sum_utility, UtilityFn,
    UtilityKind,
};
use monoext::verify::{instance_sweep, random_finite_preorder, strict_monotonicity_violation};
use proptest::prelude::*;

proptest! {
    #[test]
    fn finite_utility_is_a_representation(rel in common::preorder(10)) {
        let u = finite_utility(&rel);
        let all: Vec<usize> = (0..rel.len()).collect();
        prop_assert_eq!(strict_monotonicity_violation(&rel, &all, |x| u.value(x)), None);
    }

    #[test]
    fn condensation_classes_are_equivalence_classes(rel in common::preorder(9)) {
        let c = condense(&rel);
        for x in 0..rel.len() {
            for y in 0..rel.len() {
                prop_assert_eq!(c.class_of[x] == c.class_of[y], rel.equivalent(&x, &y));
            }
        }
        for (ci, below) in c.below.iter().enumerate() {
            for &d in below {
                prop_assert!(rel.strictly_greater(&c.classes[ci][0], &c.classes[d][0]));
            }
        }
    }

    #[test]
    fn squash_round_trip_and_bounds(
        t in prop_oneof![-1e300f64..1e300, -50.0f64..50.0, -1e-6f64..1e-6],
        alpha in -100.0f64..100.0,
        width in 1e-3f64..100.0,
    ) {
        let beta = alpha + width;
        let u = UtilityFn::base(move |_: &()| t);
        let u_ab = squash(&u, alpha, beta).unwrap();
        let u01 = normalize01(&u_ab, alpha, beta).unwrap();
        let (vab, v01) = (u_ab.value(&()), u01.value(&()));
        prop_assert!(alpha < vab && vab < beta);
        prop_assert!(0.0 < v01 && v01 < 1.0);
        prop_assert_eq!(u_ab.kind(), UtilityKind::Squashed { alpha, beta });
        prop_assert!((alpha + width * v01 - vab).abs() <= 1e-12 * (1.0 + vab.abs()));
        // against the textbook expression
        let textbook = width / std::f64::consts::PI * (t.atan() + std::f64::consts::FRAC_PI_2) + alpha;
        prop_assert!((textbook - vab).abs() <= 1e-12 * (1.0 + vab.abs()));
    }

    #[test]
    fn squash_is_strictly_increasing(t in -1e6f64..1e6, dt in 1e-6f64..1e3) {
        prop_assert!(squash_value(t, 0.0, 1.0) < squash_value(t + dt, 0.0, 1.0));
    }
}

#[test]
fn finite_utility_on_sweep_relations() {
    for spec in instance_sweep(1000, 7, 11) {
        let rel: FinitePreorder = random_finite_preorder(&spec);
        let u = finite_utility(&rel);
        let all: Vec<usize> = (0..rel.len()).collect();
        assert_eq!(
            strict_monotonicity_violation(&rel, &all, |x| u.value(x)),
            None,
            "{spec:?}"
        );
    }
}

#[test]
fn normalize_rejects_untagged_input() {
    let u = UtilityFn::base(|x: &f64| *x);
    assert!(normalize01(&u, 0.0, 1.0).is_err());
    let s = squash(&u, 0.0, 1.0).unwrap();
    assert!(normalize01(&s, 0.0, 2.0).is_err());
    assert!(squash(&u, 1.0, 1.0).is_err());
    assert!(weighted_sum_utility(&ParetoSpace::new(2).unwrap(), vec![1.0, -1.0]).is_err());
}
