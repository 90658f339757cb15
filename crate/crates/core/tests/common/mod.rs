#![allow(dead_code)]

use monoext::contours::PartialUtility;
use monoext::order::{audit, ExtReal, FinitePreorder};
use proptest::prelude::*;

/// Random preorders on `1..=max_n` elements, as closures of random edges.
pub fn preorder(max_n: usize) -> impl Strategy<Value = FinitePreorder> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=2 * n)
            .prop_map(move |pairs| FinitePreorder::closure(n, &pairs).unwrap())
    })
}

/// A preorder with small integer values on a random subset.
pub fn instance(max_n: usize) -> impl Strategy<Value = (FinitePreorder, PartialUtility<usize>)> {
    preorder(max_n).prop_flat_map(|rel| {
        let n = rel.len();
        proptest::collection::vec(proptest::option::of(-3i32..=3), n).prop_map(move |vals| {
            let entries = vals
                .iter()
                .enumerate()
                .filter_map(|(i, v)| v.map(|v| (i, v as f64)))
                .collect();
            let f = PartialUtility::new(&rel, entries).unwrap();
            (rel.clone(), f)
        })
    })
}

/// Every preorder on `n` labelled elements, by filtering all reflexive
/// relations for transitivity.
pub fn all_preorders(n: usize) -> Vec<FinitePreorder> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1 << off.len()) {
        let has = |i: usize, j: usize| {
            i == j
                || off
                    .iter()
                    .position(|&e| e == (i, j))
                    .is_some_and(|k| mask >> k & 1 == 1)
        };
        if audit::is_transitive(n, has) {
            let m: Vec<Vec<bool>> = (0..n)
                .map(|i| (0..n).map(|j| has(i, j)).collect())
                .collect();
            out.push(FinitePreorder::from_matrix(&m).unwrap());
        }
    }
    out
}

/// Lower bound by direct scan: sup of `f(p)` over sample points `p` with
/// `x ⪰ p`.
pub fn scan_lower(rel: &FinitePreorder, f: &PartialUtility<usize>, x: usize) -> ExtReal {
    let mut best = ExtReal::NegInf;
    for &(p, v) in f.entries() {
        if rel.get(x, p) && ExtReal::Finite(v) > best {
            best = ExtReal::Finite(v);
        }
    }
    best
}

/// Upper bound by direct scan: inf of `f(p)` over sample points `p` with
/// `p ⪰ x`.
pub fn scan_upper(rel: &FinitePreorder, f: &PartialUtility<usize>, x: usize) -> ExtReal {
    let mut best = ExtReal::PosInf;
    for &(p, v) in f.entries() {
        if rel.get(p, x) && ExtReal::Finite(v) < best {
            best = ExtReal::Finite(v);
        }
    }
    best
}

pub fn strictly_above(rel: &FinitePreorder, x: usize, y: usize) -> bool {
    rel.get(x, y) && !rel.get(y, x)
}

pub fn equivalent(rel: &FinitePreorder, x: usize, y: usize) -> bool {
    rel.get(x, y) && rel.get(y, x)
}
