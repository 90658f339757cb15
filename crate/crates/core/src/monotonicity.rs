//! Monotonicity verdicts for sample functions.
//!
//! Every check returns a [`Verdict`]; a failing verdict always carries a
//! [`Witness`] that can be re-evaluated with [`witness_reproduces`].
//!
//! Gap-safety asks for weak increase plus `b(x') > a(x)` for every
//! `x' ≻ x` in the augmented set. Pairs involving `Top` or `Bottom` reduce
//! to two boundedness conditions: `(x, Top)` is `a(x) < +∞`, `(Bottom, x)` is
//! `b(x) > -∞`, and `(Bottom, Top)` always holds. The remaining pairs are
//! interior.

use std::fmt;

use crate::contours::{
    validate_probe, ContourOracle, ElementOf, FiniteSampleOracle, PartialUtility, Probe,
};
use crate::error::{Error, Result};
use crate::order::{
    classify_augmented, pareto_set_violation, Augmented, Comparison, ExtReal, FinitePreorder,
    ParetoSpace, Preorder,
};

/// The six equivalent characterizations of a weakly increasing sample
/// function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeakCriterion {
    /// `q ⪰ p ⟹ f(q) ≥ f(p)` on `P`.
    Isotone,
    /// `b(x) ≥ a(x)` for every `x ∈ X`.
    BoundsOrdered,
    /// `b(x') ≥ a(x)` whenever `x' ⪰ x`.
    BoundsOrderedAlongOrder,
    /// `f(p) ≥ a(p)` on `P`.
    SampleAboveLower,
    /// `b(p) ≥ f(p)` on `P`.
    SampleBelowUpper,
    /// `b(p) ≥ a(p)` on `P`.
    BoundsOrderedOnSample,
}

impl WeakCriterion {
    pub const ALL: [WeakCriterion; 6] = [
        WeakCriterion::Isotone,
        WeakCriterion::BoundsOrdered,
        WeakCriterion::BoundsOrderedAlongOrder,
        WeakCriterion::SampleAboveLower,
        WeakCriterion::SampleBelowUpper,
        WeakCriterion::BoundsOrderedOnSample,
    ];

    pub fn label(self) -> &'static str {
        match self {
            WeakCriterion::Isotone => "i",
            WeakCriterion::BoundsOrdered => "ii",
            WeakCriterion::BoundsOrderedAlongOrder => "iii",
            WeakCriterion::SampleAboveLower => "iv",
            WeakCriterion::SampleBelowUpper => "v",
            WeakCriterion::BoundsOrderedOnSample => "vi",
        }
    }

    /// Whether the criterion quantifies over the whole ground set.
    pub fn needs_ground_set(self) -> bool {
        matches!(
            self,
            WeakCriterion::BoundsOrdered | WeakCriterion::BoundsOrderedAlongOrder
        )
    }
}

/// A structured counterexample.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness<E> {
    /// `q ⪰ p` but `f(q) < f(p)`.
    NotIsotone { p: E, q: E, f_p: f64, f_q: f64 },
    /// `q ≈ p` but `f(q) ≠ f(p)`.
    UnequalOnEquivalent { p: E, q: E, f_p: f64, f_q: f64 },
    /// `q ≻ p` but `f(q) ≤ f(p)`.
    NotStrictlyGreater { p: E, q: E, f_p: f64, f_q: f64 },
    /// A weak criterion demanded `upper ≥ lower` at `(x, x')` and got
    /// `upper < lower`. Single-point criteria use `x' = x`.
    BoundInversion {
        criterion: WeakCriterion,
        x: E,
        x_prime: E,
        lower: ExtReal,
        upper: ExtReal,
    },
    /// `x' ≻ x` in the augmented set but `b(x') ≤ a(x)`.
    Gap {
        x: Augmented<E>,
        x_prime: Augmented<E>,
        a_x: ExtReal,
        b_x_prime: ExtReal,
    },
}

impl<E: fmt::Debug> fmt::Display for Witness<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::NotIsotone { p, q, f_p, f_q } => {
                write!(f, "{q:?} >= {p:?} but f({q:?}) = {f_q} < f({p:?}) = {f_p}")
            }
            Witness::UnequalOnEquivalent { p, q, f_p, f_q } => {
                write!(f, "{q:?} ~ {p:?} but f({q:?}) = {f_q} != f({p:?}) = {f_p}")
            }
            Witness::NotStrictlyGreater { p, q, f_p, f_q } => {
                write!(f, "{q:?} > {p:?} but f({q:?}) = {f_q} <= f({p:?}) = {f_p}")
            }
            Witness::BoundInversion {
                criterion,
                x,
                x_prime,
                lower,
                upper,
            } => write!(
                f,
                "criterion ({}) fails at x={x:?}, x'={x_prime:?}: {upper} < {lower}",
                criterion.label()
            ),
            Witness::Gap {
                x,
                x_prime,
                a_x,
                b_x_prime,
            } => write!(f, "x={x:?}, x'={x_prime:?}, a(x)={a_x}, b(x')={b_x_prime}"),
        }
    }
}

/// Result of a monotonicity check. A failing verdict always has a witness.
#[derive(Debug, Clone, PartialEq)]
pub struct Verdict<E> {
    witness: Option<Witness<E>>,
}

impl<E> Verdict<E> {
    pub fn pass() -> Self {
        Verdict { witness: None }
    }

    pub fn fail(witness: Witness<E>) -> Self {
        Verdict {
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&Witness<E>> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<Witness<E>> {
        self.witness
    }
}

fn sample_pairs<E: Clone + PartialEq + fmt::Debug>(
    f: &PartialUtility<E>,
) -> impl Iterator<Item = (&(E, f64), &(E, f64))> {
    let entries = f.entries();
    entries
        .iter()
        .flat_map(move |p| entries.iter().map(move |q| (p, q)))
}

pub fn check_weakly_increasing<R: Preorder>(
    rel: &R,
    f: &PartialUtility<R::Element>,
) -> Verdict<R::Element> {
    for ((p, f_p), (q, f_q)) in sample_pairs(f) {
        if rel.geq(q, p) && f_q < f_p {
            return Verdict::fail(Witness::NotIsotone {
                p: p.clone(),
                q: q.clone(),
                f_p: *f_p,
                f_q: *f_q,
            });
        }
    }
    Verdict::pass()
}

/// Equal values on `≈`-pairs, then strictly larger values on `≻`-pairs.
pub fn check_strictly_increasing<R: Preorder>(
    rel: &R,
    f: &PartialUtility<R::Element>,
) -> Verdict<R::Element> {
    if let Some(w) = equivalence_violation(rel, f) {
        return Verdict::fail(w);
    }
    for ((p, f_p), (q, f_q)) in sample_pairs(f) {
        if rel.strictly_greater(q, p) && f_q <= f_p {
            return Verdict::fail(Witness::NotStrictlyGreater {
                p: p.clone(),
                q: q.clone(),
                f_p: *f_p,
                f_q: *f_q,
            });
        }
    }
    Verdict::pass()
}

fn equivalence_violation<R: Preorder>(
    rel: &R,
    f: &PartialUtility<R::Element>,
) -> Option<Witness<R::Element>> {
    sample_pairs(f).find_map(|((p, f_p), (q, f_q))| {
        (rel.equivalent(q, p) && f_q != f_p).then(|| Witness::UnequalOnEquivalent {
            p: p.clone(),
            q: q.clone(),
            f_p: *f_p,
            f_q: *f_q,
        })
    })
}

/// Evaluates one weak criterion exactly as stated. Criteria over the whole
/// ground set require an enumerable ground set.
pub fn check_weak_criterion<R: Preorder>(
    rel: &R,
    f: &PartialUtility<R::Element>,
    criterion: WeakCriterion,
) -> Result<Verdict<R::Element>> {
    let oracle = FiniteSampleOracle::new(rel, f.clone());
    let inversion = |x: &R::Element, x_prime: &R::Element, lower: ExtReal, upper: ExtReal| {
        Verdict::fail(Witness::BoundInversion {
            criterion,
            x: x.clone(),
            x_prime: x_prime.clone(),
            lower,
            upper,
        })
    };
    let ground = || {
        rel.enumerate().ok_or(Error::Unsupported(
            "a ground-set-wide criterion on an infinite ground set",
        ))
    };
    match criterion {
        WeakCriterion::Isotone => return Ok(check_weakly_increasing(rel, f)),
        WeakCriterion::BoundsOrdered => {
            for x in ground()? {
                let (a, b) = (oracle.lower_sup(&x), oracle.upper_inf(&x));
                if b < a {
                    return Ok(inversion(&x, &x, a, b));
                }
            }
        }
        WeakCriterion::BoundsOrderedAlongOrder => {
            let all = ground()?;
            for x in &all {
                let a = oracle.lower_sup(x);
                for x_prime in all.iter().filter(|y| rel.geq(y, x)) {
                    let b = oracle.upper_inf(x_prime);
                    if b < a {
                        return Ok(inversion(x, x_prime, a, b));
                    }
                }
            }
        }
        WeakCriterion::SampleAboveLower => {
            for (p, v) in f.entries() {
                let a = oracle.lower_sup(p);
                if ExtReal::Finite(*v) < a {
                    return Ok(inversion(p, p, a, ExtReal::Finite(*v)));
                }
            }
        }
        WeakCriterion::SampleBelowUpper => {
            for (p, v) in f.entries() {
                let b = oracle.upper_inf(p);
                if b < ExtReal::Finite(*v) {
                    return Ok(inversion(p, p, ExtReal::Finite(*v), b));
                }
            }
        }
        WeakCriterion::BoundsOrderedOnSample => {
            for (p, _) in f.entries() {
                let (a, b) = (oracle.lower_sup(p), oracle.upper_inf(p));
                if b < a {
                    return Ok(inversion(p, p, a, b));
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// Gap-safety over an enumerable ground set, checked exhaustively over the
/// augmented set.
pub fn check_gap_safe_enumerated<R: Preorder>(
    rel: &R,
    f: &PartialUtility<R::Element>,
) -> Result<Verdict<R::Element>> {
    let all = rel.enumerate().ok_or(Error::Unsupported(
        "exhaustive gap-safety on an infinite ground set",
    ))?;
    let weak = check_weakly_increasing(rel, f);
    if !weak.holds() {
        return Ok(weak);
    }
    let oracle = FiniteSampleOracle::new(rel, f.clone());
    let lower: Vec<ExtReal> = all.iter().map(|x| oracle.lower_sup(x)).collect();
    let upper: Vec<ExtReal> = all.iter().map(|x| oracle.upper_inf(x)).collect();
    let gap = |x: Augmented<R::Element>, x_prime: Augmented<R::Element>, a_x, b_x_prime| {
        Verdict::fail(Witness::Gap {
            x,
            x_prime,
            a_x,
            b_x_prime,
        })
    };

    // Pairs (x, Top) and (Bottom, x).
    for (i, x) in all.iter().enumerate() {
        if lower[i] == ExtReal::PosInf {
            return Ok(gap(
                x.clone().into(),
                Augmented::Top,
                lower[i],
                ExtReal::PosInf,
            ));
        }
        if upper[i] == ExtReal::NegInf {
            return Ok(gap(
                Augmented::Bottom,
                x.clone().into(),
                ExtReal::NegInf,
                upper[i],
            ));
        }
    }
    for (i, x) in all.iter().enumerate() {
        for (j, x_prime) in all.iter().enumerate() {
            if rel.strictly_greater(x_prime, x) && upper[j] <= lower[i] {
                return Ok(gap(
                    x.clone().into(),
                    x_prime.clone().into(),
                    lower[i],
                    upper[j],
                ));
            }
        }
    }
    Ok(Verdict::pass())
}

pub fn check_gap_safe_finite(rel: &FinitePreorder, f: &PartialUtility<usize>) -> Verdict<usize> {
    check_gap_safe_enumerated(rel, f).expect("finite preorders are enumerable")
}

/// Probe-driven refutation: fails iff some probe has `b(x') ≤ a(x)`.
/// A passing verdict only means no supplied probe found a violation.
pub fn check_gap_safe_oracle<O: ContourOracle>(
    oracle: &O,
    probes: &[Probe<ElementOf<O>>],
) -> Result<Verdict<ElementOf<O>>> {
    for probe in probes {
        validate_probe(oracle.relation(), probe)?;
    }
    for probe in probes {
        let a_x = oracle.a_of(&probe.lower);
        let b_x_prime = oracle.b_of(&probe.upper);
        if b_x_prime <= a_x {
            return Ok(Verdict::fail(Witness::Gap {
                x: probe.lower.clone(),
                x_prime: probe.upper.clone(),
                a_x,
                b_x_prime,
            }));
        }
    }
    Ok(Verdict::pass())
}

/// Gap-safety for a finite sample in `R^k`.
///
/// The Pareto space has no extreme elements and every contour of a finite
/// sample has a finite bound, so gap-safety reduces to strict increase on
/// `P`. A violating pair `q ≻ p` with `f(q) ≤ f(p)` is reported as the gap
/// `b(q) ≤ f(q) ≤ f(p) ≤ a(p)`.
pub fn check_gap_safe_pareto(
    space: &ParetoSpace,
    f: &PartialUtility<Vec<f64>>,
) -> Verdict<Vec<f64>> {
    let strict = check_strictly_increasing(space, f);
    match strict.into_witness() {
        None => Verdict::pass(),
        Some(
            Witness::NotStrictlyGreater { p, q, .. } | Witness::UnequalOnEquivalent { p, q, .. },
        ) => {
            let oracle = FiniteSampleOracle::new(space, f.clone());
            let (a_x, b_x_prime) = (oracle.lower_sup(&p), oracle.upper_inf(&q));
            Verdict::fail(Witness::Gap {
                x: p.into(),
                x_prime: q.into(),
                a_x,
                b_x_prime,
            })
        }
        Some(other) => Verdict::fail(other),
    }
}

/// Extendability condition for a sample on a Pareto set: constant values on
/// each `≈`-class of `P`. Contour boundedness is automatic for finite `P`.
pub fn check_pareto_set_condition<R: Preorder>(
    rel: &R,
    f: &PartialUtility<R::Element>,
) -> Result<Verdict<R::Element>> {
    if let Some((dominating, dominated)) = pareto_set_violation(rel, &f.elements())? {
        return Err(Error::NotParetoSet {
            dominating: format!("{dominating:?}"),
            dominated: format!("{dominated:?}"),
        });
    }
    Ok(match equivalence_violation(rel, f) {
        Some(w) => Verdict::fail(w),
        None => Verdict::pass(),
    })
}

/// Recomputes a witness from the oracle and confirms that it still
/// exhibits the violation it claims.
pub fn witness_reproduces<O: ContourOracle>(oracle: &O, witness: &Witness<ElementOf<O>>) -> bool {
    let rel = oracle.relation();
    let value_matches = |e: &ElementOf<O>, v: f64| oracle.sample_value(e) == Some(v);
    match witness {
        Witness::NotIsotone { p, q, f_p, f_q } => {
            value_matches(p, *f_p) && value_matches(q, *f_q) && rel.geq(q, p) && f_q < f_p
        }
        Witness::UnequalOnEquivalent { p, q, f_p, f_q } => {
            value_matches(p, *f_p) && value_matches(q, *f_q) && rel.equivalent(q, p) && f_q != f_p
        }
        Witness::NotStrictlyGreater { p, q, f_p, f_q } => {
            value_matches(p, *f_p)
                && value_matches(q, *f_q)
                && rel.strictly_greater(q, p)
                && f_q <= f_p
        }
        Witness::BoundInversion {
            criterion,
            x,
            x_prime,
            lower,
            upper,
        } => {
            let (expect_lower, expect_upper) = match criterion {
                WeakCriterion::Isotone => return false,
                WeakCriterion::BoundsOrdered | WeakCriterion::BoundsOrderedOnSample => {
                    (oracle.lower_sup(x), oracle.upper_inf(x))
                }
                WeakCriterion::BoundsOrderedAlongOrder => {
                    if !rel.geq(x_prime, x) {
                        return false;
                    }
                    (oracle.lower_sup(x), oracle.upper_inf(x_prime))
                }
                WeakCriterion::SampleAboveLower => match oracle.sample_value(x) {
                    Some(v) => (oracle.lower_sup(x), ExtReal::Finite(v)),
                    None => return false,
                },
                WeakCriterion::SampleBelowUpper => match oracle.sample_value(x) {
                    Some(v) => (ExtReal::Finite(v), oracle.upper_inf(x)),
                    None => return false,
                },
            };
            expect_lower == *lower && expect_upper == *upper && upper < lower
        }
        Witness::Gap {
            x,
            x_prime,
            a_x,
            b_x_prime,
        } => {
            classify_augmented(rel, x_prime, x) == Comparison::StrictlyGreater
                && oracle.a_of(x) == *a_x
                && oracle.b_of(x_prime) == *b_x_prime
                && b_x_prime <= a_x
        }
    }
}
