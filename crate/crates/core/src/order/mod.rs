//! Preorders, comparisons, and the augmented ground set.
//!
//! A [`Preorder`] answers `x ⪰ y` queries over its ground set. Two concrete
//! forms ship with the crate: [`FinitePreorder`] (an explicit closed relation
//! on `0..n`) and [`ParetoSpace`] (coordinatewise `≥` on `R^k`).
//! [`Augmented`] adjoins a top and a bottom element to any ground set.

pub mod audit;
mod extreal;
mod finite;
mod pareto;

use std::fmt;

pub use extreal::ExtReal;
pub use finite::FinitePreorder;
pub use pareto::ParetoSpace;

use crate::error::{Error, Result};

/// Outcome of comparing `x` against `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Comparison {
    /// `x ⪰ y` and `y ⪰ x`.
    Equivalent,
    /// `x ⪰ y` and not `y ⪰ x`.
    StrictlyGreater,
    /// `y ⪰ x` and not `x ⪰ y`.
    StrictlyLess,
    Incomparable,
}

impl Comparison {
    pub fn from_geq(x_geq_y: bool, y_geq_x: bool) -> Self {
        match (x_geq_y, y_geq_x) {
            (true, true) => Comparison::Equivalent,
            (true, false) => Comparison::StrictlyGreater,
            (false, true) => Comparison::StrictlyLess,
            (false, false) => Comparison::Incomparable,
        }
    }

    /// The comparison seen from the other side.
    pub fn reverse(self) -> Self {
        match self {
            Comparison::StrictlyGreater => Comparison::StrictlyLess,
            Comparison::StrictlyLess => Comparison::StrictlyGreater,
            other => other,
        }
    }
}

/// A reflexive, transitive relation over some ground set.
///
/// `geq` is the raw query and may assume both arguments are members;
/// the checked entry points ([`compare`] and friends) validate membership
/// first.
pub trait Preorder {
    type Element: Clone + PartialEq + fmt::Debug;

    fn contains(&self, x: &Self::Element) -> bool;

    /// `x ⪰ y`.
    fn geq(&self, x: &Self::Element, y: &Self::Element) -> bool;

    /// Every element of the ground set, when it is finite.
    fn enumerate(&self) -> Option<Vec<Self::Element>> {
        None
    }

    fn check_member(&self, x: &Self::Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::ForeignElement(format!("{x:?}")))
        }
    }

    /// Unchecked classification.
    fn classify(&self, x: &Self::Element, y: &Self::Element) -> Comparison {
        Comparison::from_geq(self.geq(x, y), self.geq(y, x))
    }

    /// `x ≻ y`.
    fn strictly_greater(&self, x: &Self::Element, y: &Self::Element) -> bool {
        self.geq(x, y) && !self.geq(y, x)
    }

    /// `x ≈ y`.
    fn equivalent(&self, x: &Self::Element, y: &Self::Element) -> bool {
        self.geq(x, y) && self.geq(y, x)
    }
}

impl<R: Preorder + ?Sized> Preorder for &R {
    type Element = R::Element;

    fn contains(&self, x: &Self::Element) -> bool {
        (**self).contains(x)
    }

    fn geq(&self, x: &Self::Element, y: &Self::Element) -> bool {
        (**self).geq(x, y)
    }

    fn enumerate(&self) -> Option<Vec<Self::Element>> {
        (**self).enumerate()
    }
}

/// An element of the ground set augmented with a top and a bottom.
#[derive(Debug, Clone, PartialEq)]
pub enum Augmented<E> {
    Bottom,
    Interior(E),
    Top,
}

impl<E> Augmented<E> {
    pub fn interior(&self) -> Option<&E> {
        match self {
            Augmented::Interior(x) => Some(x),
            _ => None,
        }
    }
}

impl<E> From<E> for Augmented<E> {
    fn from(x: E) -> Self {
        Augmented::Interior(x)
    }
}

impl<E: fmt::Display> fmt::Display for Augmented<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Augmented::Bottom => f.write_str("Bottom"),
            Augmented::Interior(x) => x.fmt(f),
            Augmented::Top => f.write_str("Top"),
        }
    }
}

/// Checked comparison of two ground-set elements.
pub fn compare<R: Preorder>(rel: &R, x: &R::Element, y: &R::Element) -> Result<Comparison> {
    rel.check_member(x)?;
    rel.check_member(y)?;
    Ok(rel.classify(x, y))
}

/// Unchecked comparison in the augmented set: `Top` is strictly above every
/// other element, `Bottom` strictly below, and each is equivalent only to
/// itself.
pub fn classify_augmented<R: Preorder>(
    rel: &R,
    x: &Augmented<R::Element>,
    y: &Augmented<R::Element>,
) -> Comparison {
    use Augmented::*;
    match (x, y) {
        (Top, Top) | (Bottom, Bottom) => Comparison::Equivalent,
        (Top, _) | (_, Bottom) => Comparison::StrictlyGreater,
        (_, Top) | (Bottom, _) => Comparison::StrictlyLess,
        (Interior(x), Interior(y)) => rel.classify(x, y),
    }
}

pub fn compare_augmented<R: Preorder>(
    rel: &R,
    x: &Augmented<R::Element>,
    y: &Augmented<R::Element>,
) -> Result<Comparison> {
    for e in [x, y] {
        if let Augmented::Interior(e) = e {
            rel.check_member(e)?;
        }
    }
    Ok(classify_augmented(rel, x, y))
}

/// Checks that no member of `set` strictly dominates another. On failure
/// returns `Some((dominating, dominated))`.
pub fn pareto_set_violation<R: Preorder>(
    rel: &R,
    set: &[R::Element],
) -> Result<Option<(R::Element, R::Element)>> {
    for p in set {
        rel.check_member(p)?;
    }
    for p in set {
        for q in set {
            if rel.strictly_greater(q, p) {
                return Ok(Some((q.clone(), p.clone())));
            }
        }
    }
    Ok(None)
}

pub fn is_pareto_set<R: Preorder>(rel: &R, set: &[R::Element]) -> Result<bool> {
    Ok(pareto_set_violation(rel, set)?.is_none())
}

/// No element of the (finite) ground set strictly dominates `x`.
pub fn is_maximal<R: Preorder>(rel: &R, x: &R::Element) -> Result<bool> {
    rel.check_member(x)?;
    let all = rel.enumerate().ok_or(Error::Unsupported(
        "maximality test on an infinite ground set",
    ))?;
    Ok(!all.iter().any(|y| rel.strictly_greater(y, x)))
}

/// No element of the (finite) ground set is strictly dominated by `x`.
pub fn is_minimal<R: Preorder>(rel: &R, x: &R::Element) -> Result<bool> {
    rel.check_member(x)?;
    let all = rel.enumerate().ok_or(Error::Unsupported(
        "minimality test on an infinite ground set",
    ))?;
    Ok(!all.iter().any(|y| rel.strictly_greater(x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain3() -> FinitePreorder {
        FinitePreorder::closure(3, &[(1, 0), (2, 1)]).unwrap()
    }

    #[test]
    fn pareto_comparisons() {
        let sp = ParetoSpace::new(2).unwrap();
        assert_eq!(
            compare(&sp, &vec![1.0, 2.0], &vec![0.0, 1.0]).unwrap(),
            Comparison::StrictlyGreater
        );
        assert_eq!(
            compare(&sp, &vec![1.0, 0.0], &vec![0.0, 1.0]).unwrap(),
            Comparison::Incomparable
        );
        let x = vec![0.3, -2.0];
        assert_eq!(compare(&sp, &x, &x).unwrap(), Comparison::Equivalent);
        assert!(compare(&sp, &vec![1.0], &x).is_err());
    }

    #[test]
    fn augmented_extremes() {
        let rel = chain3();
        let x = Augmented::Interior(1);
        assert_eq!(
            compare_augmented(&rel, &Augmented::Top, &x).unwrap(),
            Comparison::StrictlyGreater
        );
        assert_eq!(
            compare_augmented(&rel, &x, &Augmented::Bottom).unwrap(),
            Comparison::StrictlyGreater
        );
        assert_eq!(
            compare_augmented(&rel, &Augmented::Top, &Augmented::Top).unwrap(),
            Comparison::Equivalent
        );
        assert_eq!(
            compare_augmented(&rel, &Augmented::Bottom, &Augmented::Top).unwrap(),
            Comparison::StrictlyLess
        );
        assert!(compare_augmented(&rel, &Augmented::Interior(7), &Augmented::Top).is_err());
    }

    #[test]
    fn pareto_sets() {
        let sp = ParetoSpace::new(2).unwrap();
        assert!(is_pareto_set(&sp, &[vec![1.0, 0.0], vec![0.0, 1.0]]).unwrap());
        let v = pareto_set_violation(&sp, &[vec![0.0, 0.0], vec![1.0, 1.0]]).unwrap();
        assert_eq!(v, Some((vec![1.0, 1.0], vec![0.0, 0.0])));
        assert!(is_pareto_set(&sp, &[vec![5.0, 5.0]]).unwrap());
    }

    #[test]
    fn maximal_and_minimal() {
        let rel = chain3();
        assert!(is_maximal(&rel, &2).unwrap());
        assert!(!is_maximal(&rel, &1).unwrap());
        assert!(is_minimal(&rel, &0).unwrap());
        assert!(!is_minimal(&rel, &2).unwrap());
        let single = FinitePreorder::closure(1, &[]).unwrap();
        assert!(is_maximal(&single, &0).unwrap());
        assert!(is_minimal(&single, &0).unwrap());
        let sp = ParetoSpace::new(2).unwrap();
        assert!(matches!(
            is_maximal(&sp, &vec![0.0, 0.0]),
            Err(Error::Unsupported(_))
        ));
    }
}
