//! Brute-force machinery for validating the checkers on small instances.
//!
//! Everything here is independent of the contour-bound route used by the
//! checkers: [`brute_extension`] constructs a strictly increasing extension
//! directly on the condensation of a finite preorder, and [`grid_refuter`]
//! samples pairs of grid points in `R^k`.

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contours::{ContourOracle, FiniteSampleOracle, PartialUtility};
use crate::error::{Error, Result};
use crate::monotonicity::{Verdict, Witness};
use crate::order::{FinitePreorder, ParetoSpace, Preorder};
use crate::utility::{condense, longest_chain_levels};

/// Largest ground set the generators produce.
pub const MAX_INSTANCE_SIZE: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueMode {
    /// Strictly increasing values built from chain levels plus jitter.
    UtilityDerived,
    /// Small random integers; ties and inversions are common.
    Adversarial,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InstanceSpec {
    pub seed: u64,
    pub size: usize,
    /// Probability that each ordered pair `(i, j)`, `i ≠ j`, is a generating
    /// edge before closure.
    pub density: f64,
    pub sample_size: usize,
    pub mode: ValueMode,
}

/// A finite preorder with a sample function on it.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub rel: FinitePreorder,
    pub sample: PartialUtility<usize>,
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Random digraph on `spec.size` vertices, closed reflexively and
/// transitively. Deterministic per seed.
pub fn random_finite_preorder(spec: &InstanceSpec) -> FinitePreorder {
    assert!(
        spec.size <= MAX_INSTANCE_SIZE,
        "instance size capped at {MAX_INSTANCE_SIZE}"
    );
    let mut rng = rng_for(spec.seed, 0);
    let density = spec.density.clamp(0.0, 1.0);
    let mut pairs = Vec::new();
    for i in 0..spec.size {
        for j in 0..spec.size {
            if i != j && rng.random_bool(density) {
                pairs.push((i, j));
            }
        }
    }
    FinitePreorder::closure(spec.size, &pairs).expect("generated indices are in range")
}

/// `sample_size` distinct elements of `0..n`, sorted.
pub fn random_sample_set(n: usize, sample_size: usize, seed: u64) -> Vec<usize> {
    let mut rng = rng_for(seed, 1);
    let mut picked = index::sample(&mut rng, n, sample_size.min(n)).into_vec();
    picked.sort_unstable();
    picked
}

/// Strictly increasing values on `sample`: chain level plus a per-class
/// jitter in `[0, 0.9)`, then a random positive affine map.
pub fn random_gap_safe_sample(
    rel: &FinitePreorder,
    sample: &[usize],
    seed: u64,
) -> PartialUtility<usize> {
    let mut rng = rng_for(seed, 2);
    let levels = longest_chain_levels(rel);
    let cond = condense(rel);
    let jitter: Vec<f64> = (0..cond.classes.len())
        .map(|_| rng.random_range(0.0..0.9))
        .collect();
    let scale = rng.random_range(0.25..4.0);
    let offset = rng.random_range(-5.0..5.0);
    let entries = sample
        .iter()
        .map(|&p| {
            let v = offset + scale * (levels[p] as f64 + jitter[cond.class_of[p]]);
            (p, v)
        })
        .collect();
    PartialUtility::new(rel, entries).expect("sample indices are members")
}

/// Integer values in `-2..=2`.
pub fn random_adversarial_sample(
    rel: &FinitePreorder,
    sample: &[usize],
    seed: u64,
) -> PartialUtility<usize> {
    let mut rng = rng_for(seed, 3);
    let entries = sample
        .iter()
        .map(|&p| (p, rng.random_range(-2i32..=2) as f64))
        .collect();
    PartialUtility::new(rel, entries).expect("sample indices are members")
}

pub fn generate_instance(spec: &InstanceSpec) -> Instance {
    let rel = random_finite_preorder(spec);
    let sample_set = random_sample_set(spec.size, spec.sample_size, spec.seed);
    let sample = match spec.mode {
        ValueMode::UtilityDerived => random_gap_safe_sample(&rel, &sample_set, spec.seed),
        ValueMode::Adversarial => random_adversarial_sample(&rel, &sample_set, spec.seed),
    };
    Instance { rel, sample }
}

/// A deterministic sweep of instance specs covering sizes `1..=max_size`,
/// densities in `[0, 1]`, every sample size, and both value modes.
pub fn instance_sweep(count: usize, max_size: usize, base_seed: u64) -> Vec<InstanceSpec> {
    let mut rng = rng_for(base_seed, 4);
    (0..count)
        .map(|i| {
            let size = rng.random_range(1..=max_size.min(MAX_INSTANCE_SIZE));
            InstanceSpec {
                seed: base_seed.wrapping_mul(1_000_003).wrapping_add(i as u64),
                size,
                density: [0.0, 0.1, 0.2, 0.35, 0.5, 0.75, 1.0][i % 7],
                sample_size: rng.random_range(0..=size),
                mode: if i % 2 == 0 {
                    ValueMode::UtilityDerived
                } else {
                    ValueMode::Adversarial
                },
            }
        })
        .collect()
}

/// Builds a strictly increasing function on `0..n` agreeing with `sample`,
/// or `None` when none exists.
///
/// Classes of the condensation are visited in topological order. Fixed
/// classes take their sample value; a free class takes a value strictly
/// above everything already assigned below it and strictly below the
/// smallest fixed value above it. The candidate is then audited pair by
/// pair, so a `Some` result is always a genuine extension.
pub fn brute_extension(rel: &FinitePreorder, sample: &PartialUtility<usize>) -> Option<Vec<f64>> {
    let cond = condense(rel);
    let k = cond.classes.len();
    let mut fixed: Vec<Option<f64>> = vec![None; k];
    for &(p, v) in sample.entries() {
        let c = cond.class_of[p];
        match fixed[c] {
            Some(w) if w != v => return None,
            _ => fixed[c] = Some(v),
        }
    }
    let mut cap = vec![f64::INFINITY; k];
    for (d, fixed_d) in fixed.iter().enumerate() {
        if let Some(v) = *fixed_d {
            for &c in &cond.below[d] {
                cap[c] = cap[c].min(v);
            }
        }
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&c| rel.down_set_size(cond.classes[c][0]));
    let mut value = vec![f64::NAN; k];
    for c in order {
        value[c] = match fixed[c] {
            Some(v) => v,
            None => {
                let floor = cond.below[c]
                    .iter()
                    .map(|&d| value[d])
                    .fold(f64::NEG_INFINITY, f64::max);
                match (floor.is_finite(), cap[c].is_finite()) {
                    (false, false) => 0.0,
                    (false, true) => cap[c] - 1.0,
                    (true, false) => floor + 1.0,
                    (true, true) if floor < cap[c] => floor + (cap[c] - floor) / 2.0,
                    (true, true) => return None,
                }
            }
        };
    }
    let f: Vec<f64> = cond.class_of.iter().map(|&c| value[c]).collect();
    let agrees = sample.entries().iter().all(|&(p, v)| f[p] == v);
    let n = rel.len();
    let strict = (0..n).all(|i| (0..n).all(|j| !rel.strictly_greater(&i, &j) || f[i] > f[j]));
    (agrees && strict).then_some(f)
}

/// Whether `sample` has a strictly increasing extension to `rel`.
pub fn brute_extendability(rel: &FinitePreorder, sample: &PartialUtility<usize>) -> bool {
    brute_extension(rel, sample).is_some()
}

/// First pair violating strict increase of `f` over `points`: either
/// `x' ≻ x` with `f(x') ≤ f(x)` or `x' ≈ x` with `f(x') ≠ f(x)`. Returned
/// as `(x, x')`.
pub fn strict_monotonicity_violation<R: Preorder>(
    rel: &R,
    points: &[R::Element],
    f: impl Fn(&R::Element) -> f64,
) -> Option<(R::Element, R::Element)> {
    let values: Vec<f64> = points.iter().map(&f).collect();
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate() {
            let bad = if rel.strictly_greater(y, x) {
                values[j] <= values[i]
            } else if rel.equivalent(y, x) {
                values[j] != values[i]
            } else {
                false
            };
            if bad {
                return Some((x.clone(), y.clone()));
            }
        }
    }
    None
}

/// Evenly spaced grid over the box `[lower, upper]`, `resolution` points per
/// axis, in lexicographic order of the coordinates.
pub fn grid_points(lower: &[f64], upper: &[f64], resolution: usize) -> Result<Vec<Vec<f64>>> {
    if lower.len() != upper.len() || lower.is_empty() {
        return Err(Error::InvalidArgument(
            "box corners must have the same positive dimension".into(),
        ));
    }
    if resolution == 0 {
        return Err(Error::InvalidArgument("resolution must be positive".into()));
    }
    let axis = |d: usize, i: usize| {
        if resolution == 1 {
            lower[d]
        } else {
            lower[d] + (upper[d] - lower[d]) * i as f64 / (resolution - 1) as f64
        }
    };
    let k = lower.len();
    let total = resolution.pow(k as u32);
    Ok((0..total)
        .map(|mut idx| {
            let mut point = vec![0.0; k];
            for d in (0..k).rev() {
                point[d] = axis(d, idx % resolution);
                idx /= resolution;
            }
            point
        })
        .collect())
}

/// Sampling refuter for gap-safety in `R^k`: scans all pairs `x' ≻ x` among
/// the grid points and the sample points for `b(x') ≤ a(x)`.
///
/// Sound but incomplete: a violation is always genuine, a pass only means
/// none was found at this resolution.
pub fn grid_refuter(
    space: &ParetoSpace,
    sample: &PartialUtility<Vec<f64>>,
    lower: &[f64],
    upper: &[f64],
    resolution: usize,
) -> Result<Verdict<Vec<f64>>> {
    if lower.len() != space.dim() {
        return Err(Error::InvalidArgument(format!(
            "box has dimension {}, space has {}",
            lower.len(),
            space.dim()
        )));
    }
    let mut points = grid_points(lower, upper, resolution)?;
    for p in sample.elements() {
        if !points.contains(&p) {
            points.push(p);
        }
    }
    let oracle = FiniteSampleOracle::new(space, sample.clone());
    let a: Vec<_> = points.iter().map(|x| oracle.lower_sup(x)).collect();
    let b: Vec<_> = points.iter().map(|x| oracle.upper_inf(x)).collect();
    for (i, x) in points.iter().enumerate() {
        for (j, x_prime) in points.iter().enumerate() {
            if space.strictly_greater(x_prime, x) && b[j] <= a[i] {
                return Ok(Verdict::fail(Witness::Gap {
                    x: x.clone().into(),
                    x_prime: x_prime.clone().into(),
                    a_x: a[i],
                    b_x_prime: b[j],
                }));
            }
        }
    }
    Ok(Verdict::pass())
}
