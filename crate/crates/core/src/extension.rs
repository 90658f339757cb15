//! The strictly increasing extension of a gap-safe sample function.
//!
//! With `a`, `b` the contour bounds, `u01` a utility valued in `(0, 1)` and
//! `u_ab = α + (β - α) u01`, the extension is
//!
//! ```text
//! f(x) = max{a, min{b, β} - β + α} (1 - u01) + min{b, max{a, α} - α + β} u01
//! ```
//!
//! The engine evaluates this closed form together with three equivalent
//! forms: a rescaled version in terms of `u_ab`, a piecewise form routed by
//! the contour-emptiness regions, and a min/max-free piecewise form routed
//! by the overlapping regions `S1..S4`. [`ExtensionEngine::evaluate`]
//! computes all four and insists they agree.

use std::fmt;

use crate::contours::{ContourOracle, ElementOf, FiniteSampleOracle};
use crate::error::{Error, Result};
use crate::monotonicity::check_pareto_set_condition;
use crate::order::{ExtReal, Preorder};
use crate::utility::{denormalize, normalize01, squash, UtilityFn};

/// Tolerance for agreement between the formula variants, relative to
/// `max(1, |value|)`.
pub const AGREEMENT_TOL: f64 = 1e-9;

pub fn agree(x: f64, y: f64) -> bool {
    (x - y).abs() <= AGREEMENT_TOL * x.abs().max(y.abs()).max(1.0)
}

/// Where an element sits relative to the sample, by emptiness of its two
/// contours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Region {
    /// Member of `P`.
    Sample,
    /// Both contours non-empty.
    Between,
    /// Only the upper contour is non-empty.
    Below,
    /// Only the lower contour is non-empty.
    Above,
    /// Incomparable with every sample element.
    Detached,
}

impl Region {
    pub fn label(self) -> &'static str {
        match self {
            Region::Sample => "P",
            Region::Between => "A",
            Region::Below => "L",
            Region::Above => "U",
            Region::Detached => "N",
        }
    }
}

impl fmt::Display for Region {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The overlapping regions `S1..S4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SRegion {
    /// `b - a ≤ β - α`.
    S1,
    /// `b - a ≥ β - α` and `b ≤ β`.
    S2,
    /// `b - a ≥ β - α` and `a ≥ α`.
    S3,
    /// `a ≤ α` and `b ≥ β`.
    S4,
}

impl SRegion {
    pub const ALL: [SRegion; 4] = [SRegion::S1, SRegion::S2, SRegion::S3, SRegion::S4];

    pub fn label(self) -> &'static str {
        match self {
            SRegion::S1 => "S1",
            SRegion::S2 => "S2",
            SRegion::S3 => "S3",
            SRegion::S4 => "S4",
        }
    }
}

/// A non-empty set of S-regions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct SRegionSet(u8);

impl SRegionSet {
    fn bit(r: SRegion) -> u8 {
        1 << (r as u8)
    }

    pub fn insert(&mut self, r: SRegion) {
        self.0 |= Self::bit(r);
    }

    pub fn contains(&self, r: SRegion) -> bool {
        self.0 & Self::bit(r) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(&self) -> impl Iterator<Item = SRegion> + '_ {
        SRegion::ALL.into_iter().filter(|r| self.contains(*r))
    }
}

impl FromIterator<SRegion> for SRegionSet {
    fn from_iter<I: IntoIterator<Item = SRegion>>(iter: I) -> Self {
        let mut s = SRegionSet::default();
        for r in iter {
            s.insert(r);
        }
        s
    }
}

impl fmt::Display for SRegionSet {
    /// Labels joined by `|`, e.g. `S1|S4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<_> = self.iter().map(SRegion::label).collect();
        f.write_str(&labels.join("|"))
    }
}

/// Everything the formulas consume at one element.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointData {
    pub a: ExtReal,
    pub b: ExtReal,
    pub u_ab: f64,
    pub u01: f64,
}

/// `b - a`, taken as `+∞` whenever `a = -∞` or `b = +∞`.
pub fn bound_gap(a: ExtReal, b: ExtReal) -> ExtReal {
    if a == ExtReal::NegInf || b == ExtReal::PosInf {
        return ExtReal::PosInf;
    }
    b.checked_sub(a)
        .expect("remaining combinations are never indeterminate")
}

/// Labels satisfied by bounds `(a, b)`.
pub fn s_regions(a: ExtReal, b: ExtReal, alpha: f64, beta: f64) -> SRegionSet {
    let width = ExtReal::Finite(beta - alpha);
    let (alpha, beta) = (ExtReal::Finite(alpha), ExtReal::Finite(beta));
    let gap = bound_gap(a, b);
    let mut s = SRegionSet::default();
    if gap <= width {
        s.insert(SRegion::S1);
    }
    if gap >= width && b <= beta {
        s.insert(SRegion::S2);
    }
    if gap >= width && a >= alpha {
        s.insert(SRegion::S3);
    }
    if a <= alpha && b >= beta {
        s.insert(SRegion::S4);
    }
    s
}

fn unbounded<E: fmt::Debug>(x: &E, pt: &PointData) -> Error {
    Error::UnboundedContour {
        element: format!("{x:?}"),
        a: pt.a.to_string(),
        b: pt.b.to_string(),
    }
}

/// The closed form with caps `min{b, β}` and `max{a, α}`; the caps turn
/// infinite bounds into finite values before any addition.
pub fn closed_form(pt: &PointData, alpha: f64, beta: f64) -> Option<f64> {
    if pt.a == ExtReal::PosInf || pt.b == ExtReal::NegInf {
        return None;
    }
    let capped_b = pt.b.min(ExtReal::Finite(beta)).finite()?;
    let capped_a = pt.a.max(ExtReal::Finite(alpha)).finite()?;
    let low =
        pt.a.max(ExtReal::Finite(capped_b - beta + alpha))
            .finite()?;
    let high =
        pt.b.min(ExtReal::Finite(capped_a - alpha + beta))
            .finite()?;
    Some(blend(low, high, pt.u01))
}

/// `low·(1−t) + high·t`, exact when `low = high`.
fn blend(low: f64, high: f64, t: f64) -> f64 {
    if low == high {
        low
    } else {
        low * (1.0 - t) + high * t
    }
}

/// The same extension written in terms of `u_ab`.
pub fn rescaled_form(pt: &PointData, alpha: f64, beta: f64) -> Option<f64> {
    if pt.a == ExtReal::PosInf || pt.b == ExtReal::NegInf {
        return None;
    }
    let a_shift = pt.a.add_real(-alpha);
    let b_shift = pt.b.add_real(-beta);
    let low = a_shift.max(b_shift.min(ExtReal::ZERO)).finite()?;
    let high = b_shift.min(a_shift.max(ExtReal::ZERO)).finite()?;
    Some((low * (beta - pt.u_ab) + high * (pt.u_ab - alpha)) / (beta - alpha) + pt.u_ab)
}

/// Simplified expression for one S-region; `None` where the region's
/// bounds are not finite.
pub fn s_region_form(region: SRegion, pt: &PointData, alpha: f64, beta: f64) -> Option<f64> {
    match region {
        SRegion::S1 => Some(blend(pt.a.finite()?, pt.b.finite()?, pt.u01)),
        SRegion::S2 => Some(pt.b.finite()? + pt.u_ab - beta),
        SRegion::S3 => Some(pt.a.finite()? + pt.u_ab - alpha),
        SRegion::S4 => Some(pt.u_ab),
    }
}

/// All formula variants at one element.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub point: PointData,
    pub region: Region,
    pub s_regions: SRegionSet,
    pub closed: f64,
    pub rescaled: f64,
    pub by_region: f64,
    pub by_s_region: f64,
}

impl Evaluation {
    pub fn value(&self) -> f64 {
        self.closed
    }
}

/// Evaluates the extension of the sample function behind `oracle`.
pub struct ExtensionEngine<O: ContourOracle> {
    oracle: O,
    alpha: f64,
    beta: f64,
    u_ab: UtilityFn<ElementOf<O>>,
    u01: UtilityFn<ElementOf<O>>,
}

impl<O: ContourOracle> fmt::Debug for ExtensionEngine<O> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ExtensionEngine")
            .field("alpha", &self.alpha)
            .field("beta", &self.beta)
            .finish_non_exhaustive()
    }
}

fn check_bounds(alpha: f64, beta: f64) -> Result<()> {
    if alpha.is_finite() && beta.is_finite() && alpha < beta && (beta - alpha).is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidBounds { alpha, beta })
    }
}

impl<O> ExtensionEngine<O>
where
    O: ContourOracle,
    ElementOf<O>: 'static,
{
    /// Squashes `base` into `(α, β)` and normalizes it.
    pub fn new(oracle: O, base: &UtilityFn<ElementOf<O>>, alpha: f64, beta: f64) -> Result<Self> {
        check_bounds(alpha, beta)?;
        let u_ab = squash(base, alpha, beta)?;
        let u01 = normalize01(&u_ab, alpha, beta)?;
        Ok(ExtensionEngine {
            oracle,
            alpha,
            beta,
            u_ab,
            u01,
        })
    }

    /// Uses a caller-supplied `(0, 1)`-valued utility directly.
    pub fn from_normalized(
        oracle: O,
        u01: UtilityFn<ElementOf<O>>,
        alpha: f64,
        beta: f64,
    ) -> Result<Self> {
        check_bounds(alpha, beta)?;
        let u_ab = denormalize(&u01, alpha, beta)?;
        Ok(ExtensionEngine {
            oracle,
            alpha,
            beta,
            u_ab,
            u01,
        })
    }
}

impl<O: ContourOracle> ExtensionEngine<O> {
    pub fn oracle(&self) -> &O {
        &self.oracle
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn u_ab(&self) -> &UtilityFn<ElementOf<O>> {
        &self.u_ab
    }

    pub fn u01(&self) -> &UtilityFn<ElementOf<O>> {
        &self.u01
    }

    /// Bounds and utility values at `x`, without boundedness checks.
    pub fn point_data(&self, x: &ElementOf<O>) -> Result<PointData> {
        self.oracle.relation().check_member(x)?;
        Ok(self.point_data_unchecked(x))
    }

    fn point_data_unchecked(&self, x: &ElementOf<O>) -> PointData {
        PointData {
            a: self.oracle.lower_sup(x),
            b: self.oracle.upper_inf(x),
            u_ab: self.u_ab.value(x),
            u01: self.u01.value(x),
        }
    }

    fn bounded_point(&self, x: &ElementOf<O>) -> Result<PointData> {
        let pt = self.point_data(x)?;
        if pt.a == ExtReal::PosInf || pt.b == ExtReal::NegInf {
            return Err(unbounded(x, &pt));
        }
        Ok(pt)
    }

    /// The closed-form extension at `x`.
    pub fn extend(&self, x: &ElementOf<O>) -> Result<f64> {
        let pt = self.bounded_point(x)?;
        let v = closed_form(&pt, self.alpha, self.beta);
        v.ok_or_else(|| unbounded(x, &pt))
    }

    /// The rescaled form in terms of `u_ab`.
    pub fn extend_fprime(&self, x: &ElementOf<O>) -> Result<f64> {
        let pt = self.bounded_point(x)?;
        let v = rescaled_form(&pt, self.alpha, self.beta);
        v.ok_or_else(|| unbounded(x, &pt))
    }

    fn region_of(&self, x: &ElementOf<O>, pt: &PointData) -> Region {
        if self.oracle.sample_value(x).is_some() {
            return Region::Sample;
        }
        // A non-empty contour of real values has a real sup / inf.
        match (pt.a != ExtReal::NegInf, pt.b != ExtReal::PosInf) {
            (true, true) => Region::Between,
            (false, true) => Region::Below,
            (true, false) => Region::Above,
            (false, false) => Region::Detached,
        }
    }

    pub fn classify_alun(&self, x: &ElementOf<O>) -> Result<Region> {
        let pt = self.point_data(x)?;
        Ok(self.region_of(x, &pt))
    }

    pub fn classify_s(&self, x: &ElementOf<O>) -> Result<SRegionSet> {
        let pt = self.point_data(x)?;
        Ok(s_regions(pt.a, pt.b, self.alpha, self.beta))
    }

    fn by_region(&self, x: &ElementOf<O>, pt: &PointData, region: Region) -> Option<f64> {
        match region {
            Region::Sample => self.oracle.sample_value(x),
            Region::Below => Some(pt.b.add_real(-self.beta).min(ExtReal::ZERO).finite()? + pt.u_ab),
            Region::Above => {
                Some(pt.a.add_real(-self.alpha).max(ExtReal::ZERO).finite()? + pt.u_ab)
            }
            Region::Detached => Some(pt.u_ab),
            Region::Between => rescaled_form(pt, self.alpha, self.beta),
        }
    }

    /// The piecewise form routed by [`Region`].
    pub fn extend_by_region(&self, x: &ElementOf<O>) -> Result<f64> {
        let pt = self.bounded_point(x)?;
        let region = self.region_of(x, &pt);
        let v = self.by_region(x, &pt, region);
        v.ok_or_else(|| unbounded(x, &pt))
    }

    fn by_s_region(&self, x: &ElementOf<O>, pt: &PointData, labels: SRegionSet) -> Result<f64> {
        let mut first: Option<(SRegion, f64)> = None;
        for r in labels.iter() {
            let v = s_region_form(r, pt, self.alpha, self.beta).ok_or_else(|| unbounded(x, pt))?;
            match first {
                None => first = Some((r, v)),
                Some((r0, v0)) if !agree(v0, v) => {
                    return Err(Error::FormulaDisagreement {
                        element: format!("{x:?}"),
                        detail: format!("{} gives {v0}, {} gives {v}", r0.label(), r.label()),
                    })
                }
                Some(_) => {}
            }
        }
        first
            .map(|(_, v)| v)
            .ok_or_else(|| Error::FormulaDisagreement {
                element: format!("{x:?}"),
                detail: "no S-region applies".into(),
            })
    }

    /// The min/max-free piecewise form. On region borders every applicable
    /// branch is evaluated and they must agree.
    pub fn extend_by_s_region(&self, x: &ElementOf<O>) -> Result<f64> {
        let pt = self.bounded_point(x)?;
        let labels = s_regions(pt.a, pt.b, self.alpha, self.beta);
        self.by_s_region(x, &pt, labels)
    }

    /// Evaluates all four variants and cross-checks them.
    pub fn evaluate(&self, x: &ElementOf<O>) -> Result<Evaluation> {
        let pt = self.bounded_point(x)?;
        let region = self.region_of(x, &pt);
        let s_labels = s_regions(pt.a, pt.b, self.alpha, self.beta);
        let missing = || unbounded(x, &pt);
        let closed = closed_form(&pt, self.alpha, self.beta).ok_or_else(missing)?;
        let rescaled = rescaled_form(&pt, self.alpha, self.beta).ok_or_else(missing)?;
        let by_region = self.by_region(x, &pt, region).ok_or_else(missing)?;
        let by_s_region = self.by_s_region(x, &pt, s_labels)?;
        for (name, v) in [
            ("rescaled", rescaled),
            ("region", by_region),
            ("s-region", by_s_region),
        ] {
            if !agree(closed, v) {
                return Err(Error::FormulaDisagreement {
                    element: format!("{x:?}"),
                    detail: format!("closed form gives {closed}, {name} form gives {v}"),
                });
            }
        }
        Ok(Evaluation {
            point: pt,
            region,
            s_regions: s_labels,
            closed,
            rescaled,
            by_region,
            by_s_region,
        })
    }
}

/// Fast path when the sample set is a Pareto set: elements equivalent to a
/// sample point take its value, everything else goes through the
/// S-region form.
#[derive(Debug)]
pub struct ParetoSetExtension<R: Preorder> {
    engine: ExtensionEngine<FiniteSampleOracle<R>>,
}

impl<R: Preorder> ParetoSetExtension<R> {
    /// Fails unless the sample is a Pareto set with constant values on each
    /// equivalence class.
    pub fn new(engine: ExtensionEngine<FiniteSampleOracle<R>>) -> Result<Self> {
        let oracle = engine.oracle();
        let verdict = check_pareto_set_condition(oracle.relation(), oracle.sample())?;
        if let Some(w) = verdict.witness() {
            return Err(Error::NotGapSafe(w.to_string()));
        }
        Ok(ParetoSetExtension { engine })
    }

    pub fn engine(&self) -> &ExtensionEngine<FiniteSampleOracle<R>> {
        &self.engine
    }

    /// The sample value of an equivalent sample point, if any.
    pub fn equivalent_sample_value(&self, x: &R::Element) -> Option<f64> {
        let oracle = self.engine.oracle();
        let rel = oracle.relation();
        oracle
            .sample()
            .entries()
            .iter()
            .find(|(p, _)| rel.equivalent(p, x))
            .map(|&(_, v)| v)
    }

    pub fn extend(&self, x: &R::Element) -> Result<f64> {
        self.engine.oracle().relation().check_member(x)?;
        match self.equivalent_sample_value(x) {
            Some(v) => Ok(v),
            None => self.engine.extend_by_s_region(x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contours::PartialUtility;
    use crate::order::{FinitePreorder, ParetoSpace};
    use crate::utility::{finite_utility, pareto_base_utility};

    fn line_engine() -> ExtensionEngine<FiniteSampleOracle<ParetoSpace>> {
        let sp = ParetoSpace::new(1).unwrap();
        let f = PartialUtility::new(&sp, vec![(vec![0.0], 0.0), (vec![1.0], 1.0)]).unwrap();
        let u = pareto_base_utility(&sp);
        ExtensionEngine::new(FiniteSampleOracle::new(sp, f), &u, 0.0, 1.0).unwrap()
    }

    #[test]
    fn midpoint_on_the_line_is_the_normalized_utility() {
        let e = line_engine();
        let expected = (0.5f64.atan() + std::f64::consts::FRAC_PI_2) / std::f64::consts::PI;
        let v = e.extend(&vec![0.5]).unwrap();
        assert!((v - expected).abs() < 1e-15);
        assert!((v - 0.647584).abs() < 5e-7);
        let ev = e.evaluate(&vec![0.5]).unwrap();
        assert_eq!(ev.region, Region::Between);
        assert!(ev.s_regions.contains(SRegion::S1));
    }

    #[test]
    fn restriction_to_the_sample() {
        let e = line_engine();
        assert_eq!(e.extend(&vec![0.0]).unwrap(), 0.0);
        assert_eq!(e.extend(&vec![1.0]).unwrap(), 1.0);
        assert_eq!(e.classify_alun(&vec![1.0]).unwrap(), Region::Sample);
    }

    #[test]
    fn one_sided_regions_on_the_line() {
        let e = line_engine();
        assert_eq!(e.classify_alun(&vec![-1.0]).unwrap(), Region::Below);
        assert_eq!(e.classify_alun(&vec![2.0]).unwrap(), Region::Above);
        // below the sample: b = 0 < β so the value is b + u_ab - β
        let x = vec![-1.0];
        let u = e.u_ab().value(&x);
        assert!((e.extend(&x).unwrap() - (u - 1.0)).abs() < 1e-15);
    }

    #[test]
    fn detached_element_takes_the_squashed_utility() {
        let sp = ParetoSpace::new(2).unwrap();
        let f = PartialUtility::new(&sp, vec![(vec![0.0, 0.0], 0.3)]).unwrap();
        let u = pareto_base_utility(&sp);
        let e = ExtensionEngine::new(FiniteSampleOracle::new(sp, f), &u, 0.0, 1.0).unwrap();
        let x = vec![-1.0, 1.0];
        assert_eq!(e.classify_alun(&x).unwrap(), Region::Detached);
        let s = e.classify_s(&x).unwrap();
        assert!(s.contains(SRegion::S4));
        assert_eq!(e.extend(&x).unwrap(), e.u_ab().value(&x));
    }

    #[test]
    fn all_labels_on_the_corner() {
        let s = s_regions(ExtReal::Finite(0.0), ExtReal::Finite(1.0), 0.0, 1.0);
        assert_eq!(s.len(), 4);
        assert_eq!(s.to_string(), "S1|S2|S3|S4");
    }

    #[test]
    fn gap_convention_for_infinite_bounds() {
        assert_eq!(bound_gap(ExtReal::NegInf, ExtReal::NegInf), ExtReal::PosInf);
        assert_eq!(bound_gap(ExtReal::PosInf, ExtReal::PosInf), ExtReal::PosInf);
        assert_eq!(
            bound_gap(ExtReal::Finite(2.0), ExtReal::NegInf),
            ExtReal::NegInf
        );
        assert_eq!(
            bound_gap(ExtReal::Finite(2.0), ExtReal::Finite(5.0)),
            ExtReal::Finite(3.0)
        );
    }

    #[test]
    fn unbounded_contour_is_an_error() {
        let pt = PointData {
            a: ExtReal::PosInf,
            b: ExtReal::PosInf,
            u_ab: 0.5,
            u01: 0.5,
        };
        assert_eq!(closed_form(&pt, 0.0, 1.0), None);
        assert_eq!(rescaled_form(&pt, 0.0, 1.0), None);
    }

    #[test]
    fn equal_bounds_give_the_common_value() {
        let pt = PointData {
            a: ExtReal::Finite(7.5),
            b: ExtReal::Finite(7.5),
            u_ab: 0.2,
            u01: 0.2,
        };
        assert_eq!(closed_form(&pt, 0.0, 1.0), Some(7.5));
        assert!((rescaled_form(&pt, 0.0, 1.0).unwrap() - 7.5).abs() < 1e-12);
    }

    #[test]
    fn s4_form_is_the_squashed_utility() {
        let pt = PointData {
            a: ExtReal::Finite(-3.0),
            b: ExtReal::Finite(4.0),
            u_ab: 0.4,
            u01: 0.4,
        };
        let s = s_regions(pt.a, pt.b, 0.0, 1.0);
        assert!(s.contains(SRegion::S4) && !s.contains(SRegion::S1));
        assert!((rescaled_form(&pt, 0.0, 1.0).unwrap() - 0.4).abs() < 1e-15);
    }

    #[test]
    fn invalid_bounds_are_rejected() {
        let sp = ParetoSpace::new(1).unwrap();
        let o = FiniteSampleOracle::new(sp, PartialUtility::empty());
        let u = pareto_base_utility(&sp);
        assert!(ExtensionEngine::new(o, &u, 1.0, 1.0).is_err());
    }

    #[test]
    fn pareto_set_fast_path() {
        // 0 ≈ 1 in P, 2 ≈ 0 outside P, 3 above everything, 4 detached
        let rel = FinitePreorder::closure(5, &[(0, 1), (1, 0), (2, 0), (0, 2), (3, 0)]).unwrap();
        let f = PartialUtility::new(&rel, vec![(0, 0.5), (1, 0.5)]).unwrap();
        let u = finite_utility(&rel);
        let engine =
            ExtensionEngine::new(FiniteSampleOracle::new(rel.clone(), f), &u, 0.0, 1.0).unwrap();
        let fast = ParetoSetExtension::new(engine).unwrap();
        assert_eq!(fast.extend(&2).unwrap(), 0.5);
        for x in 0..5 {
            let slow = fast.engine().extend_fprime(&x).unwrap();
            assert!(agree(fast.extend(&x).unwrap(), slow), "{x}");
        }

        let chain = FinitePreorder::closure(2, &[(1, 0)]).unwrap();
        let f = PartialUtility::new(&chain, vec![(0, 0.0), (1, 1.0)]).unwrap();
        let u = finite_utility(&chain);
        let engine = ExtensionEngine::new(FiniteSampleOracle::new(chain, f), &u, 0.0, 1.0).unwrap();
        assert!(matches!(
            ParetoSetExtension::new(engine),
            Err(Error::NotParetoSet { .. })
        ));
    }
}
