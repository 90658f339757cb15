//! The four forms of the extension, re-derived over exact rationals.
//!
//! Inputs are dyadic with small denominators, so the `f64` library sees the
//! same numbers the rational evaluator does.

use monoext::extension::{
    closed_form, rescaled_form, s_region_form, s_regions, PointData, SRegion,
};
use monoext::order::ExtReal;
use num_rational::BigRational;
use proptest::prelude::*;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Q {
    NegInf,
    Fin(BigRational),
    PosInf,
}

fn q(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite")
}

impl Q {
    fn fin(&self) -> BigRational {
        match self {
            Q::Fin(v) => v.clone(),
            other => panic!("infinite value {other:?} reached arithmetic"),
        }
    }

    fn shift(&self, by: &BigRational) -> Q {
        match self {
            Q::Fin(v) => Q::Fin(v + by),
            other => other.clone(),
        }
    }
}

fn closed(a: &Q, b: &Q, al: &BigRational, be: &BigRational, u: &BigRational) -> BigRational {
    let one = q(1.0);
    let cap_b = b.clone().min(Q::Fin(be.clone())).fin();
    let cap_a = a.clone().max(Q::Fin(al.clone())).fin();
    let low = a.clone().max(Q::Fin(cap_b - be + al)).fin();
    let high = b.clone().min(Q::Fin(cap_a - al + be)).fin();
    low * (&one - u) + high * u
}

fn rescaled(a: &Q, b: &Q, al: &BigRational, be: &BigRational, u_ab: &BigRational) -> BigRational {
    let zero = Q::Fin(q(0.0));
    let a_s = a.shift(&-al);
    let b_s = b.shift(&-be);
    let low = a_s.clone().max(b_s.clone().min(zero.clone())).fin();
    let high = b_s.min(a_s.max(zero)).fin();
    (low * (be - u_ab) + high * (u_ab - al)) / (be - al) + u_ab
}

fn by_alun(a: &Q, b: &Q, al: &BigRational, be: &BigRational, u_ab: &BigRational) -> BigRational {
    let zero = Q::Fin(q(0.0));
    match (a, b) {
        (Q::NegInf, Q::PosInf) => u_ab.clone(),
        (Q::NegInf, _) => b.shift(&-be).min(zero).fin() + u_ab,
        (_, Q::PosInf) => a.shift(&-al).max(zero).fin() + u_ab,
        _ => rescaled(a, b, al, be, u_ab),
    }
}

fn labels(a: &Q, b: &Q, al: &BigRational, be: &BigRational) -> Vec<SRegion> {
    let w = Q::Fin(be - al);
    let gap = match (a, b) {
        (Q::Fin(a), Q::Fin(b)) => Q::Fin(b - a),
        _ => Q::PosInf,
    };
    let (al, be) = (Q::Fin(al.clone()), Q::Fin(be.clone()));
    let mut out = Vec::new();
    if gap <= w {
        out.push(SRegion::S1);
    }
    if gap >= w && *b <= be {
        out.push(SRegion::S2);
    }
    if gap >= w && *a >= al {
        out.push(SRegion::S3);
    }
    if *a <= al && *b >= be {
        out.push(SRegion::S4);
    }
    out
}

fn by_s(
    r: SRegion,
    a: &Q,
    b: &Q,
    al: &BigRational,
    be: &BigRational,
    u: &BigRational,
    u_ab: &BigRational,
) -> BigRational {
    let one = q(1.0);
    match r {
        SRegion::S1 => a.fin() * (&one - u) + b.fin() * u,
        SRegion::S2 => b.fin() + u_ab - be,
        SRegion::S3 => a.fin() + u_ab - al,
        SRegion::S4 => u_ab.clone(),
    }
}

fn dyadic() -> impl Strategy<Value = f64> {
    (-256i32..=256).prop_map(|k| k as f64 / 16.0)
}

#[derive(Debug, Clone)]
struct Case {
    a: ExtReal,
    b: ExtReal,
    alpha: f64,
    beta: f64,
    u01: f64,
}

fn case() -> impl Strategy<Value = Case> {
    let ab = (dyadic(), 1i32..=64).prop_map(|(al, w)| (al, al + w as f64 / 16.0));
    let u = (1i32..256).prop_map(|k| k as f64 / 256.0);
    (ab, u, dyadic(), 0i32..=128, 0u8..8).prop_map(|((alpha, beta), u01, a0, spread, shape)| {
        let width = beta - alpha;
        let (a, b) = match shape {
            // engineered borders
            0 => (alpha, beta),
            1 => (alpha, alpha + spread as f64 / 16.0),
            2 => (beta - spread as f64 / 16.0, beta),
            3 => (a0, a0 + width),
            _ => (a0, a0 + spread as f64 / 16.0),
        };
        let (a, b) = match shape {
            5 => (ExtReal::NegInf, ExtReal::Finite(b)),
            6 => (ExtReal::Finite(a), ExtReal::PosInf),
            7 => (ExtReal::NegInf, ExtReal::PosInf),
            _ => (ExtReal::Finite(a), ExtReal::Finite(b)),
        };
        Case {
            a,
            b,
            alpha,
            beta,
            u01,
        }
    })
}

fn to_q(x: ExtReal) -> Q {
    match x {
        ExtReal::NegInf => Q::NegInf,
        ExtReal::Finite(v) => Q::Fin(q(v)),
        ExtReal::PosInf => Q::PosInf,
    }
}

fn close(exact: &BigRational, float: f64) -> bool {
    let d = exact - q(float);
    let d = if d < q(0.0) { -d } else { d };
    let scale = if *exact < q(0.0) {
        -exact.clone()
    } else {
        exact.clone()
    };
    d <= q(1e-12) * (q(1.0) + scale)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn all_forms_coincide_exactly(c in case()) {
        let (a, b) = (to_q(c.a), to_q(c.b));
        let (al, be, u) = (q(c.alpha), q(c.beta), q(c.u01));
        let u_ab = &al + (&be - &al) * &u;
        let f = closed(&a, &b, &al, &be, &u);
        prop_assert_eq!(&rescaled(&a, &b, &al, &be, &u_ab), &f);
        prop_assert_eq!(&by_alun(&a, &b, &al, &be, &u_ab), &f);
        let ls = labels(&a, &b, &al, &be);
        prop_assert!(!ls.is_empty());
        for &r in &ls {
            prop_assert_eq!(&by_s(r, &a, &b, &al, &be, &u, &u_ab), &f, "label {:?}", r);
        }
        if a == b {
            prop_assert_eq!(&f, &a.fin());
        }

        // The float library on the same inputs.
        let pt = PointData {
            a: c.a,
            b: c.b,
            u_ab: c.alpha + (c.beta - c.alpha) * c.u01,
            u01: c.u01,
        };
        let lib: Vec<SRegion> = s_regions(c.a, c.b, c.alpha, c.beta).iter().collect();
        prop_assert_eq!(&lib, &ls);
        prop_assert!(close(&f, closed_form(&pt, c.alpha, c.beta).unwrap()));
        prop_assert!(close(&f, rescaled_form(&pt, c.alpha, c.beta).unwrap()));
        for &r in &ls {
            prop_assert!(close(&f, s_region_form(r, &pt, c.alpha, c.beta).unwrap()));
        }
    }
}
