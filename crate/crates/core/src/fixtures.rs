//! Bundled analytic fixtures with infinite sample sets.
//!
//! * [`example_gap`]: on the real line, `P = (-∞, 0] ∪ (1, ∞)` with
//!   `f_P(x) = x` for `x ≤ 0` and `f_P(x) = x - 1` for `x > 1`. The function
//!   is strictly increasing and bounded on every contour, yet `a(0) = 0 = b(1)`
//!   while `1 ≻ 0`, so it has no strictly increasing extension.
//! * [`example_nin`]: an infinite antichain `{-1, -2, ...}` below a single
//!   apex `0`, with `f_P(p) = -p`. Every interior pair passes the strict
//!   bound, but the lower contour of the apex is all of `P`, so
//!   `a(0) = +∞ = b(Top)` and the augmented pair `(0, Top)` fails.

use crate::contours::{AnalyticFixture, ClosedForms, Probe};
use crate::error::Result;
use crate::order::{Augmented, ExtReal, ParetoSpace, Preorder};

pub const EXAMPLE_GAP: &str = "example-gap";
pub const EXAMPLE_NIN: &str = "example-nin";

/// The non-positive integers `{0, -1, -2, ...}` where `0 ⪰ x` for every `x`
/// and the remaining elements are mutually incomparable.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ApexAntichain;

impl Preorder for ApexAntichain {
    type Element = i64;

    fn contains(&self, x: &i64) -> bool {
        *x <= 0
    }

    fn geq(&self, x: &i64, y: &i64) -> bool {
        x == y || *x == 0
    }
}

const GAP_DERIVATION: &str = "\
X = R (Pareto, k = 1), P = (-inf, 0] U (1, inf), f(x) = x on x <= 0 and x - 1 on x > 1.
a(x) = sup { f(p) | p <= x }: x for x <= 0; 0 for 0 < x <= 1; x - 1 for x > 1.
b(x) = inf { f(p) | p >= x }: x for x <= 0; 0 for 0 < x <= 1 (infimum over (1, inf), not attained); x - 1 for x > 1.
sup f(P) = +inf, inf f(P) = -inf.";

fn gap_lower(x: f64) -> f64 {
    if x <= 0.0 {
        x
    } else if x <= 1.0 {
        0.0
    } else {
        x - 1.0
    }
}

// On this fixture the two bounds coincide pointwise; only the attaining
// sets differ.
fn gap_upper(x: f64) -> f64 {
    gap_lower(x)
}

fn gap_sample(x: f64) -> Option<f64> {
    if x <= 0.0 {
        Some(x)
    } else if x > 1.0 {
        Some(x - 1.0)
    } else {
        None
    }
}

/// Strictly increasing, contour-bounded, and not gap-safe.
pub fn example_gap() -> Result<AnalyticFixture<ParetoSpace>> {
    let point = |x: f64| Augmented::Interior(vec![x]);
    let probes = vec![
        Probe::new(point(0.0), point(1.0)),
        Probe::new(point(0.25), point(0.75)),
        Probe::new(point(-1.0), point(-0.5)),
        Probe::new(point(-1.0), point(2.0)),
        Probe::new(point(2.0), point(3.0)),
        Probe::new(Augmented::Bottom, point(0.0)),
        Probe::new(point(0.0), Augmented::Top),
    ];
    AnalyticFixture::new(
        EXAMPLE_GAP,
        GAP_DERIVATION,
        ParetoSpace::new(1)?,
        ClosedForms {
            lower: Box::new(|x: &Vec<f64>| ExtReal::Finite(gap_lower(x[0]))),
            upper: Box::new(|x: &Vec<f64>| ExtReal::Finite(gap_upper(x[0]))),
            sample: Box::new(|x: &Vec<f64>| gap_sample(x[0])),
            sample_sup: ExtReal::PosInf,
            sample_inf: ExtReal::NegInf,
        },
        probes,
    )
}

const NIN_DERIVATION: &str = "\
X = {0, -1, -2, ...}, 0 >= x for all x, other pairs incomparable; P = X \\ {0}, f(p) = -p.
For p in P both contours are {p}, so a(p) = b(p) = -p.
The lower contour of 0 is all of P, so a(0) = sup {1, 2, 3, ...} = +inf; its upper contour is empty, so b(0) = +inf.
sup f(P) = +inf, inf f(P) = 1.";

/// Satisfies the strict bound on every interior pair but fails at
/// `(0, Top)`.
pub fn example_nin() -> Result<AnalyticFixture<ApexAntichain>> {
    let probes = vec![
        Probe::new(Augmented::Interior(-1), Augmented::Interior(0)),
        Probe::new(Augmented::Interior(-7), Augmented::Interior(0)),
        Probe::new(Augmented::Bottom, Augmented::Interior(-3)),
        Probe::new(Augmented::Interior(-2), Augmented::Top),
        Probe::new(Augmented::Interior(0), Augmented::Top),
    ];
    AnalyticFixture::new(
        EXAMPLE_NIN,
        NIN_DERIVATION,
        ApexAntichain,
        ClosedForms {
            lower: Box::new(|&x: &i64| {
                if x == 0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::Finite(-x as f64)
                }
            }),
            upper: Box::new(|&x: &i64| {
                if x == 0 {
                    ExtReal::PosInf
                } else {
                    ExtReal::Finite(-x as f64)
                }
            }),
            sample: Box::new(|&x: &i64| (x != 0).then_some(-x as f64)),
            sample_sup: ExtReal::PosInf,
            sample_inf: ExtReal::Finite(1.0),
        },
        probes,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::contours::ContourOracle;

    #[test]
    fn gap_fixture_bounds_meet_at_zero() {
        let fx = example_gap().unwrap();
        assert_eq!(fx.lower_sup(&vec![0.0]), ExtReal::Finite(0.0));
        assert_eq!(fx.upper_inf(&vec![1.0]), ExtReal::Finite(0.0));
        assert_eq!(fx.sample_value(&vec![0.5]), None);
        assert_eq!(fx.sample_value(&vec![3.0]), Some(2.0));
    }

    #[test]
    fn nin_fixture_apex_bound_is_infinite() {
        let fx = example_nin().unwrap();
        assert_eq!(fx.a_of(&Augmented::Interior(0)), ExtReal::PosInf);
        assert_eq!(fx.b_of(&Augmented::Top), ExtReal::PosInf);
        assert_eq!(fx.lower_sup(&-4), ExtReal::Finite(4.0));
        assert_eq!(fx.b_of(&Augmented::Bottom), ExtReal::Finite(1.0));
    }

    #[test]
    fn apex_relation() {
        let r = ApexAntichain;
        assert!(r.strictly_greater(&0, &-5));
        assert!(!r.geq(&-1, &-2) && !r.geq(&-2, &-1));
        assert!(!r.contains(&1));
    }
}
