mod common;

use monoext::contours::{ContourOracle, FiniteSampleOracle, PartialUtility};
use monoext::monotonicity::{
    check_gap_safe_finite, check_gap_safe_pareto, check_strictly_increasing, check_weak_criterion,
    check_weakly_increasing, witness_reproduces, WeakCriterion, Witness,
};
use monoext::order::{Augmented, ExtReal, FinitePreorder, ParetoSpace};
use monoext::verify::{brute_extendability, generate_instance, grid_refuter, instance_sweep};
use proptest::prelude::*;

/// Weak increase straight from the definition.
fn weakly_increasing_by_definition(rel: &FinitePreorder, f: &PartialUtility<usize>) -> bool {
    f.entries().iter().all(|&(p, fp)| {
        f.entries()
            .iter()
            .all(|&(q, fq)| !rel.get(q, p) || fq >= fp)
    })
}

/// All `±1`-valued functions on all subsets of `0..n`.
fn all_sign_samples(rel: &FinitePreorder) -> Vec<PartialUtility<usize>> {
    let n = rel.len();
    let mut out = Vec::new();
    for subset in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&i| subset >> i & 1 == 1).collect();
        for signs in 0u32..(1 << members.len()) {
            let entries = members
                .iter()
                .enumerate()
                .map(|(k, &p)| (p, if signs >> k & 1 == 1 { 1.0 } else { -1.0 }))
                .collect();
            out.push(PartialUtility::new(rel, entries).unwrap());
        }
    }
    out
}

#[test]
fn weak_criteria_agree_exhaustively_up_to_four_elements() {
    let mut cases = 0usize;
    for n in 1..=4 {
        for rel in common::all_preorders(n) {
            for f in all_sign_samples(&rel) {
                let expected = weakly_increasing_by_definition(&rel, &f);
                assert_eq!(check_weakly_increasing(&rel, &f).holds(), expected);
                for c in WeakCriterion::ALL {
                    let got = check_weak_criterion(&rel, &f, c).unwrap().holds();
                    assert_eq!(
                        got,
                        expected,
                        "criterion {} on {:?} / {:?}",
                        c.label(),
                        rel,
                        f
                    );
                }
                cases += 1;
            }
        }
    }
    assert!(cases > 20_000);
}

proptest! {
    #[test]
    fn weak_criteria_agree_on_larger_relations((rel, f) in common::instance(7)) {
        let expected = weakly_increasing_by_definition(&rel, &f);
        for c in WeakCriterion::ALL {
            prop_assert_eq!(check_weak_criterion(&rel, &f, c).unwrap().holds(), expected);
        }
    }

    #[test]
    fn gap_safe_matches_brute_force((rel, f) in common::instance(7)) {
        prop_assert_eq!(check_gap_safe_finite(&rel, &f).holds(), brute_extendability(&rel, &f));
    }

    #[test]
    fn gap_safe_implies_strict_and_bounded((rel, f) in common::instance(7)) {
        if check_gap_safe_finite(&rel, &f).holds() {
            prop_assert!(check_strictly_increasing(&rel, &f).holds());
            let oracle = FiniteSampleOracle::new(&rel, f.clone());
            for x in 0..rel.len() {
                prop_assert!(oracle.lower_sup(&x) < ExtReal::PosInf);
                prop_assert!(oracle.upper_inf(&x) > ExtReal::NegInf);
            }
        }
    }

    #[test]
    fn witnesses_are_sound((rel, f) in common::instance(7)) {
        let oracle = FiniteSampleOracle::new(&rel, f.clone());
        for verdict in [
            check_weakly_increasing(&rel, &f),
            check_strictly_increasing(&rel, &f),
            check_gap_safe_finite(&rel, &f),
        ] {
            if let Some(w) = verdict.witness() {
                prop_assert!(witness_reproduces(&oracle, w), "{}", w);
            }
        }
        for c in WeakCriterion::ALL {
            let v = check_weak_criterion(&rel, &f, c).unwrap();
            if let Some(w) = v.witness() {
                prop_assert!(witness_reproduces(&oracle, w), "{}", w);
            }
        }
    }

    #[test]
    fn gap_witness_pairs_are_strictly_ordered((rel, f) in common::instance(7)) {
        if let Some(Witness::Gap { x, x_prime, a_x, b_x_prime }) =
            check_gap_safe_finite(&rel, &f).into_witness()
        {
            prop_assert!(b_x_prime <= a_x);
            match (&x, &x_prime) {
                (Augmented::Interior(i), Augmented::Interior(j)) => {
                    prop_assert!(common::strictly_above(&rel, *j, *i));
                }
                (Augmented::Interior(_), Augmented::Top) => prop_assert_eq!(a_x, ExtReal::PosInf),
                (Augmented::Bottom, Augmented::Interior(_)) => {
                    prop_assert_eq!(b_x_prime, ExtReal::NegInf)
                }
                other => prop_assert!(false, "unexpected pair {:?}", other),
            }
        }
    }

    #[test]
    fn pareto_checker_matches_pairwise_refuter(
        pts in proptest::collection::vec((proptest::collection::vec(0i32..4, 2), -3i32..=3), 0..8),
    ) {
        let sp = ParetoSpace::new(2).unwrap();
        let mut entries: Vec<(Vec<f64>, f64)> = Vec::new();
        for (p, v) in pts {
            let p: Vec<f64> = p.into_iter().map(f64::from).collect();
            if !entries.iter().any(|e| e.0 == p) {
                entries.push((p, v as f64));
            }
        }
        let f = PartialUtility::new(&sp, entries).unwrap();
        let refuted = grid_refuter(&sp, &f, &[0.0, 0.0], &[3.0, 3.0], 4).unwrap();
        let checked = check_gap_safe_pareto(&sp, &f);
        prop_assert_eq!(checked.holds(), refuted.holds());
        prop_assert_eq!(checked.holds(), check_strictly_increasing(&sp, &f).holds());
        if let Some(w) = checked.witness() {
            prop_assert!(witness_reproduces(&FiniteSampleOracle::new(&sp, f.clone()), w));
        }
    }
}

#[test]
fn seeded_sweep_matches_brute_force_and_generator_contract() {
    for spec in instance_sweep(1500, 7, 7) {
        let inst = generate_instance(&spec);
        let checked = check_gap_safe_finite(&inst.rel, &inst.sample).holds();
        assert_eq!(
            checked,
            brute_extendability(&inst.rel, &inst.sample),
            "{spec:?}"
        );
        if spec.mode == monoext::verify::ValueMode::UtilityDerived {
            assert!(checked, "{spec:?}");
        }
    }
}

#[test]
fn equal_values_at_chain_ends_squeeze_the_middle() {
    // 0 ≺ 1 ≺ 2 with f(0) = f(2)
    let rel = FinitePreorder::closure(3, &[(1, 0), (2, 1)]).unwrap();
    let f = PartialUtility::new(&rel, vec![(0, 0.0), (2, 0.0)]).unwrap();
    assert!(!check_strictly_increasing(&rel, &f).holds());
    assert!(!check_gap_safe_finite(&rel, &f).holds());
    assert!(!brute_extendability(&rel, &f));
    let oracle = FiniteSampleOracle::new(&rel, f);
    assert_eq!(oracle.lower_sup(&1), ExtReal::Finite(0.0));
    assert_eq!(oracle.upper_inf(&1), ExtReal::Finite(0.0));
}
