//! Property audits for binary relations on `0..n`.
//!
//! Each `*_violation` function returns the first offending tuple; the
//! `is_*` wrappers collapse that to a boolean.

pub fn reflexivity_violation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Option<usize> {
    (0..n).find(|&i| !rel(i, i))
}

pub fn irreflexivity_violation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Option<usize> {
    (0..n).find(|&i| rel(i, i))
}

pub fn transitivity_violation(
    n: usize,
    rel: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            if !rel(i, j) {
                continue;
            }
            for k in 0..n {
                if rel(j, k) && !rel(i, k) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub fn symmetry_violation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Option<(usize, usize)> {
    all_pairs(n).find(|&(i, j)| rel(i, j) && !rel(j, i))
}

pub fn antisymmetry_violation(
    n: usize,
    rel: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    all_pairs(n).find(|&(i, j)| i != j && rel(i, j) && rel(j, i))
}

pub fn connectedness_violation(
    n: usize,
    rel: impl Fn(usize, usize) -> bool,
) -> Option<(usize, usize)> {
    all_pairs(n).find(|&(i, j)| i != j && !rel(i, j) && !rel(j, i))
}

fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

pub fn is_reflexive(n: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    reflexivity_violation(n, rel).is_none()
}

pub fn is_irreflexive(n: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    irreflexivity_violation(n, rel).is_none()
}

pub fn is_transitive(n: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    transitivity_violation(n, rel).is_none()
}

pub fn is_symmetric(n: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    symmetry_violation(n, rel).is_none()
}

pub fn is_antisymmetric(n: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    antisymmetry_violation(n, rel).is_none()
}

pub fn is_connected(n: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    connectedness_violation(n, rel).is_none()
}

pub fn is_preorder(n: usize, rel: impl Fn(usize, usize) -> bool + Copy) -> bool {
    is_reflexive(n, rel) && is_transitive(n, rel)
}

pub fn is_partial_order(n: usize, rel: impl Fn(usize, usize) -> bool + Copy) -> bool {
    is_preorder(n, rel) && is_antisymmetric(n, rel)
}

pub fn is_strict_partial_order(n: usize, rel: impl Fn(usize, usize) -> bool + Copy) -> bool {
    is_irreflexive(n, rel) && is_transitive(n, rel)
}

pub fn is_weak_order(n: usize, rel: impl Fn(usize, usize) -> bool + Copy) -> bool {
    is_preorder(n, rel) && is_connected(n, rel)
}

pub fn is_linear_order(n: usize, rel: impl Fn(usize, usize) -> bool + Copy) -> bool {
    is_weak_order(n, rel) && is_antisymmetric(n, rel)
}

pub fn is_equivalence(n: usize, rel: impl Fn(usize, usize) -> bool + Copy) -> bool {
    is_preorder(n, rel) && is_symmetric(n, rel)
}
