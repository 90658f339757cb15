//! Utility representations of the ambient preorder.
//!
//! A utility is a real function that is strictly increasing on the whole
//! ground set: `x' ≻ x ⟹ u(x') > u(x)` and `x' ≈ x ⟹ u(x') = u(x)`. The
//! extension needs a bounded one, obtained from any base utility by
//! arctan squashing into `(α, β)` and then normalizing into `(0, 1)`.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::order::{FinitePreorder, ParetoSpace, Preorder};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UtilityKind {
    Base,
    Squashed { alpha: f64, beta: f64 },
    Normalized01,
}

impl fmt::Display for UtilityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UtilityKind::Base => f.write_str("base"),
            UtilityKind::Squashed { alpha, beta } => write!(f, "squashed({alpha}, {beta})"),
            UtilityKind::Normalized01 => f.write_str("normalized01"),
        }
    }
}

type Eval<E> = Arc<dyn Fn(&E) -> f64 + Send + Sync>;

/// A total real map on a ground set, tagged with how it was produced.
#[derive(Clone)]
pub struct UtilityFn<E> {
    kind: UtilityKind,
    eval: Eval<E>,
}

impl<E> fmt::Debug for UtilityFn<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UtilityFn")
            .field("kind", &self.kind)
            .finish()
    }
}

impl<E: 'static> UtilityFn<E> {
    /// Wraps a caller-supplied utility. The caller vouches for strict
    /// increase.
    pub fn base(f: impl Fn(&E) -> f64 + Send + Sync + 'static) -> Self {
        UtilityFn {
            kind: UtilityKind::Base,
            eval: Arc::new(f),
        }
    }

    /// Wraps a caller-supplied utility with values in `(0, 1)`.
    pub fn normalized(f: impl Fn(&E) -> f64 + Send + Sync + 'static) -> Self {
        UtilityFn {
            kind: UtilityKind::Normalized01,
            eval: Arc::new(f),
        }
    }
}

impl<E> UtilityFn<E> {
    pub fn kind(&self) -> UtilityKind {
        self.kind
    }

    pub fn value(&self, x: &E) -> f64 {
        (self.eval)(x)
    }
}

impl UtilityFn<usize> {
    /// A utility on `0..n` given by a value table.
    pub fn table(values: Vec<f64>) -> Self {
        UtilityFn::base(move |&i: &usize| values[i])
    }
}

/// The `≈`-classes of a finite preorder and the `≻` order between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condensation {
    /// Class index of every element.
    pub class_of: Vec<usize>,
    /// Members of each class, in increasing element order.
    pub classes: Vec<Vec<usize>>,
    /// `below[c]` lists the classes strictly below class `c`.
    pub below: Vec<Vec<usize>>,
}

/// Condenses a closed finite preorder. Because the relation is already
/// transitive, strongly connected components are exactly the mutual-`⪰`
/// classes.
pub fn condense(rel: &FinitePreorder) -> Condensation {
    let n = rel.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        if class_of[i] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let members: Vec<usize> = (i..n).filter(|&j| rel.equivalent(&i, &j)).collect();
        for &j in &members {
            class_of[j] = c;
        }
        classes.push(members);
    }
    let below = classes
        .iter()
        .map(|members| {
            let r = members[0];
            (0..classes.len())
                .filter(|&d| rel.strictly_greater(&r, &classes[d][0]))
                .collect()
        })
        .collect();
    Condensation {
        class_of,
        classes,
        below,
    }
}

/// Length of the longest `≻`-chain ending at each element.
pub fn longest_chain_levels(rel: &FinitePreorder) -> Vec<usize> {
    let cond = condense(rel);
    // A class strictly below another has a strictly smaller down-set, so
    // ordering by down-set size is a topological order of the condensation.
    let mut order: Vec<usize> = (0..cond.classes.len()).collect();
    order.sort_by_key(|&c| rel.down_set_size(cond.classes[c][0]));
    let mut level = vec![0usize; cond.classes.len()];
    for c in order {
        level[c] = cond.below[c]
            .iter()
            .map(|&d| level[d] + 1)
            .max()
            .unwrap_or(0);
    }
    cond.class_of.iter().map(|&c| level[c]).collect()
}

/// Integer-valued utility: each element gets the length of the longest
/// strict chain below its class.
pub fn finite_utility(rel: &FinitePreorder) -> UtilityFn<usize> {
    let levels = longest_chain_levels(rel)
        .into_iter()
        .map(|l| l as f64)
        .collect();
    UtilityFn::table(levels)
}

/// Coordinate sum on `R^k`.
pub fn pareto_base_utility(space: &ParetoSpace) -> UtilityFn<Vec<f64>> {
    let dim = space.dim();
    UtilityFn::base(move |x: &Vec<f64>| {
        debug_assert_eq!(x.len(), dim);
        x.iter().sum()
    })
}

/// Weighted coordinate sum; every weight must be strictly positive.
pub fn weighted_sum_utility(space: &ParetoSpace, weights: Vec<f64>) -> Result<UtilityFn<Vec<f64>>> {
    if weights.len() != space.dim() {
        return Err(Error::InvalidArgument(format!(
            "expected {} weights, got {}",
            space.dim(),
            weights.len()
        )));
    }
    if let Some(w) = weights.iter().find(|w| !(w.is_finite() && **w > 0.0)) {
        return Err(Error::InvalidArgument(format!(
            "weights must be finite and strictly positive, got {w}"
        )));
    }
    Ok(UtilityFn::base(move |x: &Vec<f64>| {
        x.iter().zip(&weights).map(|(c, w)| c * w).sum()
    }))
}

fn check_bounds(alpha: f64, beta: f64) -> Result<()> {
    if alpha.is_finite() && beta.is_finite() && alpha < beta {
        Ok(())
    } else {
        Err(Error::InvalidBounds { alpha, beta })
    }
}

/// `(β - α)/π · (arctan t + π/2) + α`, kept strictly inside `(α, β)`.
///
/// For `t ≠ 0` the identity `arctan t + π/2 = π - arctan(1/t)` (`t > 0`)
/// or `arctan(1/|t|)` (`t < 0`) measures the distance to the nearer bound
/// directly, which avoids cancellation near the ends.
pub fn squash_value(t: f64, alpha: f64, beta: f64) -> f64 {
    let width = beta - alpha;
    let v = if t > 0.0 {
        beta - width * (1.0 / t).atan() / PI
    } else if t < 0.0 {
        alpha + width * (-1.0 / t).atan() / PI
    } else {
        alpha + width / 2.0
    };
    v.clamp(alpha.next_up(), beta.next_down())
}

/// Bounded utility with values strictly inside `(α, β)`.
pub fn squash<E: 'static>(u: &UtilityFn<E>, alpha: f64, beta: f64) -> Result<UtilityFn<E>> {
    check_bounds(alpha, beta)?;
    let inner = u.eval.clone();
    Ok(UtilityFn {
        kind: UtilityKind::Squashed { alpha, beta },
        eval: Arc::new(move |x| squash_value(inner(x), alpha, beta)),
    })
}

/// `(β - α)^{-1} (u_ab(x) - α)`, mapping a `(α, β)`-squashed utility into
/// `(0, 1)`.
pub fn normalize01<E: 'static>(u_ab: &UtilityFn<E>, alpha: f64, beta: f64) -> Result<UtilityFn<E>> {
    check_bounds(alpha, beta)?;
    match u_ab.kind {
        UtilityKind::Squashed { alpha: a, beta: b } if a == alpha && b == beta => {}
        other => {
            return Err(Error::UtilityKindMismatch {
                expected: UtilityKind::Squashed { alpha, beta }.to_string(),
                found: other.to_string(),
            })
        }
    }
    let inner = u_ab.eval.clone();
    let width = beta - alpha;
    Ok(UtilityFn {
        kind: UtilityKind::Normalized01,
        eval: Arc::new(move |x| {
            ((inner(x) - alpha) / width).clamp(0f64.next_up(), 1f64.next_down())
        }),
    })
}

/// `α + (β - α) u01(x)`, the inverse of [`normalize01`].
pub fn denormalize<E: 'static>(u01: &UtilityFn<E>, alpha: f64, beta: f64) -> Result<UtilityFn<E>> {
    check_bounds(alpha, beta)?;
    if u01.kind != UtilityKind::Normalized01 {
        return Err(Error::UtilityKindMismatch {
            expected: UtilityKind::Normalized01.to_string(),
            found: u01.kind.to_string(),
        });
    }
    let inner = u01.eval.clone();
    let width = beta - alpha;
    Ok(UtilityFn {
        kind: UtilityKind::Squashed { alpha, beta },
        eval: Arc::new(move |x| alpha + width * inner(x)),
    })
}
