//! Sample functions, their contours, and the bound functions `a` and `b`.
//!
//! For a sample function `f_P` on `P`, the lower bound at `x` is
//! `a(x) = sup { f_P(p) | p ∈ P, p ⪯ x }` and the upper bound is
//! `b(x) = inf { f_P(p) | p ∈ P, p ⪰ x }`, with `sup ∅ = -∞` and
//! `inf ∅ = +∞`. In the augmented set, `a(Bottom) = -∞`, `b(Top) = +∞`,
//! `a(Top) = sup f_P(P)` and `b(Bottom) = inf f_P(P)`.
//!
//! [`ContourOracle`] abstracts over how the bounds are obtained: by
//! scanning a finite sample ([`FiniteSampleOracle`]) or from closed forms
//! derived by hand ([`AnalyticFixture`]) when `P` or the ground set is
//! infinite.

use std::fmt;

use crate::error::{Error, Result};
use crate::order::{classify_augmented, Augmented, Comparison, ExtReal, Preorder};

/// A finite real-valued function on a finite subset `P` of the ground set.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialUtility<E> {
    entries: Vec<(E, f64)>,
}

impl<E: Clone + PartialEq + fmt::Debug> PartialUtility<E> {
    /// Validates membership, finiteness of values, and uniqueness of keys.
    pub fn new<R>(rel: &R, entries: Vec<(E, f64)>) -> Result<Self>
    where
        R: Preorder<Element = E>,
    {
        for (i, (e, v)) in entries.iter().enumerate() {
            rel.check_member(e)?;
            if !v.is_finite() {
                return Err(Error::NonFiniteValue {
                    element: format!("{e:?}"),
                    value: *v,
                });
            }
            if entries[..i].iter().any(|(other, _)| other == e) {
                return Err(Error::DuplicateSample(format!("{e:?}")));
            }
        }
        Ok(PartialUtility { entries })
    }

    pub fn empty() -> Self {
        PartialUtility {
            entries: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(E, f64)] {
        &self.entries
    }

    pub fn elements(&self) -> Vec<E> {
        self.entries.iter().map(|(e, _)| e.clone()).collect()
    }

    pub fn value(&self, x: &E) -> Option<f64> {
        self.entries.iter().find(|(e, _)| e == x).map(|&(_, v)| v)
    }

    pub fn contains(&self, x: &E) -> bool {
        self.value(x).is_some()
    }
}

/// `{ p ∈ P | p ⪯ x }`.
pub fn lower_contour<R: Preorder>(
    rel: &R,
    sample: &[R::Element],
    x: &R::Element,
) -> Result<Vec<R::Element>> {
    rel.check_member(x)?;
    for p in sample {
        rel.check_member(p)?;
    }
    Ok(sample.iter().filter(|p| rel.geq(x, p)).cloned().collect())
}

/// `{ p ∈ P | p ⪰ x }`.
pub fn upper_contour<R: Preorder>(
    rel: &R,
    sample: &[R::Element],
    x: &R::Element,
) -> Result<Vec<R::Element>> {
    rel.check_member(x)?;
    for p in sample {
        rel.check_member(p)?;
    }
    Ok(sample.iter().filter(|p| rel.geq(p, x)).cloned().collect())
}

/// Element type of an oracle's ground set.
pub type ElementOf<O> = <<O as ContourOracle>::Rel as Preorder>::Element;

/// Provider of the bound functions `a` and `b`.
///
/// The interior queries may assume their argument is a member of the
/// ground set.
pub trait ContourOracle {
    type Rel: Preorder;

    fn relation(&self) -> &Self::Rel;

    /// `a(x)` for an interior element.
    fn lower_sup(&self, x: &ElementOf<Self>) -> ExtReal;

    /// `b(x)` for an interior element.
    fn upper_inf(&self, x: &ElementOf<Self>) -> ExtReal;

    /// `sup f_P(P)`, which is `a(Top)`.
    fn sample_sup(&self) -> ExtReal;

    /// `inf f_P(P)`, which is `b(Bottom)`.
    fn sample_inf(&self) -> ExtReal;

    /// `f_P(x)` when `x ∈ P`.
    fn sample_value(&self, x: &ElementOf<Self>) -> Option<f64>;

    fn a_of(&self, x: &Augmented<ElementOf<Self>>) -> ExtReal {
        match x {
            Augmented::Bottom => ExtReal::NegInf,
            Augmented::Interior(x) => self.lower_sup(x),
            Augmented::Top => self.sample_sup(),
        }
    }

    fn b_of(&self, x: &Augmented<ElementOf<Self>>) -> ExtReal {
        match x {
            Augmented::Bottom => self.sample_inf(),
            Augmented::Interior(x) => self.upper_inf(x),
            Augmented::Top => ExtReal::PosInf,
        }
    }
}

impl<O: ContourOracle + ?Sized> ContourOracle for &O {
    type Rel = O::Rel;

    fn relation(&self) -> &Self::Rel {
        (**self).relation()
    }
    fn lower_sup(&self, x: &ElementOf<Self>) -> ExtReal {
        (**self).lower_sup(x)
    }
    fn upper_inf(&self, x: &ElementOf<Self>) -> ExtReal {
        (**self).upper_inf(x)
    }
    fn sample_sup(&self) -> ExtReal {
        (**self).sample_sup()
    }
    fn sample_inf(&self) -> ExtReal {
        (**self).sample_inf()
    }
    fn sample_value(&self, x: &ElementOf<Self>) -> Option<f64> {
        (**self).sample_value(x)
    }
}

/// Bounds computed by scanning a finite sample. No caching: every query is
/// a full pass over `P`.
#[derive(Debug, Clone)]
pub struct FiniteSampleOracle<R: Preorder> {
    rel: R,
    sample: PartialUtility<R::Element>,
}

impl<R: Preorder> FiniteSampleOracle<R> {
    pub fn new(rel: R, sample: PartialUtility<R::Element>) -> Self {
        FiniteSampleOracle { rel, sample }
    }

    pub fn sample(&self) -> &PartialUtility<R::Element> {
        &self.sample
    }

    pub fn lower_contour(&self, x: &R::Element) -> Vec<R::Element> {
        self.sample
            .entries()
            .iter()
            .filter(|(p, _)| self.rel.geq(x, p))
            .map(|(p, _)| p.clone())
            .collect()
    }

    pub fn upper_contour(&self, x: &R::Element) -> Vec<R::Element> {
        self.sample
            .entries()
            .iter()
            .filter(|(p, _)| self.rel.geq(p, x))
            .map(|(p, _)| p.clone())
            .collect()
    }
}

impl<R: Preorder> ContourOracle for FiniteSampleOracle<R> {
    type Rel = R;

    fn relation(&self) -> &R {
        &self.rel
    }

    fn lower_sup(&self, x: &R::Element) -> ExtReal {
        ExtReal::sup(
            self.sample
                .entries()
                .iter()
                .filter(|(p, _)| self.rel.geq(x, p))
                .map(|&(_, v)| v),
        )
    }

    fn upper_inf(&self, x: &R::Element) -> ExtReal {
        ExtReal::inf(
            self.sample
                .entries()
                .iter()
                .filter(|(p, _)| self.rel.geq(p, x))
                .map(|&(_, v)| v),
        )
    }

    fn sample_sup(&self) -> ExtReal {
        ExtReal::sup(self.sample.entries().iter().map(|&(_, v)| v))
    }

    fn sample_inf(&self) -> ExtReal {
        ExtReal::inf(self.sample.entries().iter().map(|&(_, v)| v))
    }

    fn sample_value(&self, x: &R::Element) -> Option<f64> {
        self.sample.value(x)
    }
}

/// A pair `(x, x')` of augmented elements with `x' ≻ x`, at which the
/// strict bound `b(x') > a(x)` is to be tested.
#[derive(Debug, Clone, PartialEq)]
pub struct Probe<E> {
    pub lower: Augmented<E>,
    pub upper: Augmented<E>,
}

impl<E> Probe<E> {
    pub fn new(lower: Augmented<E>, upper: Augmented<E>) -> Self {
        Probe { lower, upper }
    }
}

/// Rejects a probe unless `upper ≻ lower` in the augmented set.
pub fn validate_probe<R: Preorder>(rel: &R, probe: &Probe<R::Element>) -> Result<()> {
    for e in [&probe.lower, &probe.upper] {
        if let Augmented::Interior(e) = e {
            rel.check_member(e)?;
        }
    }
    if classify_augmented(rel, &probe.upper, &probe.lower) != Comparison::StrictlyGreater {
        return Err(Error::InvalidProbe {
            x: format!("{:?}", probe.lower),
            x_prime: format!("{:?}", probe.upper),
        });
    }
    Ok(())
}

type BoundFn<E> = Box<dyn Fn(&E) -> ExtReal + Send + Sync>;
type SampleFn<E> = Box<dyn Fn(&E) -> Option<f64> + Send + Sync>;

/// Closed-form bounds for a sample function whose domain (or ground set)
/// cannot be enumerated.
///
/// The fixture author derives `a`, `b`, `sup f_P` and `inf f_P` by hand and
/// records the derivation in [`AnalyticFixture::derivation`]. Curated
/// probes travel with the fixture; each is validated on construction.
pub struct AnalyticFixture<R: Preorder> {
    name: String,
    derivation: String,
    rel: R,
    lower: BoundFn<R::Element>,
    upper: BoundFn<R::Element>,
    sample: SampleFn<R::Element>,
    sample_sup: ExtReal,
    sample_inf: ExtReal,
    probes: Vec<Probe<R::Element>>,
}

/// The hand-derived pieces of an [`AnalyticFixture`].
pub struct ClosedForms<E> {
    pub lower: BoundFn<E>,
    pub upper: BoundFn<E>,
    pub sample: SampleFn<E>,
    pub sample_sup: ExtReal,
    pub sample_inf: ExtReal,
}

impl<R: Preorder> AnalyticFixture<R> {
    pub fn new(
        name: impl Into<String>,
        derivation: impl Into<String>,
        rel: R,
        forms: ClosedForms<R::Element>,
        probes: Vec<Probe<R::Element>>,
    ) -> Result<Self> {
        for probe in &probes {
            validate_probe(&rel, probe)?;
        }
        Ok(AnalyticFixture {
            name: name.into(),
            derivation: derivation.into(),
            rel,
            lower: forms.lower,
            upper: forms.upper,
            sample: forms.sample,
            sample_sup: forms.sample_sup,
            sample_inf: forms.sample_inf,
            probes,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn derivation(&self) -> &str {
        &self.derivation
    }

    pub fn probes(&self) -> &[Probe<R::Element>] {
        &self.probes
    }
}

impl<R: Preorder> fmt::Debug for AnalyticFixture<R>
where
    R: fmt::Debug,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AnalyticFixture")
            .field("name", &self.name)
            .field("rel", &self.rel)
            .field("probes", &self.probes.len())
            .finish_non_exhaustive()
    }
}

impl<R: Preorder> ContourOracle for AnalyticFixture<R> {
    type Rel = R;

    fn relation(&self) -> &R {
        &self.rel
    }
    fn lower_sup(&self, x: &R::Element) -> ExtReal {
        (self.lower)(x)
    }
    fn upper_inf(&self, x: &R::Element) -> ExtReal {
        (self.upper)(x)
    }
    fn sample_sup(&self) -> ExtReal {
        self.sample_sup
    }
    fn sample_inf(&self) -> ExtReal {
        self.sample_inf
    }
    fn sample_value(&self, x: &R::Element) -> Option<f64> {
        (self.sample)(x)
    }
}
