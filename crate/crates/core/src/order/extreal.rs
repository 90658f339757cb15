//! The extended real line `R ∪ {-∞, +∞}`.
//!
//! Ordering is total: `NegInf < Finite(x) < PosInf` for every finite `x`.
//! Sums involving an infinity absorb finite terms; `+∞ + (-∞)` is rejected
//! with [`Error::Indeterminate`] instead of producing a value.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;

use crate::error::{Error, Result};

/// A value of the extended real line.
///
/// `Finite` must hold a finite, non-NaN `f64`; use [`ExtReal::from_f64`] when
/// the input may be infinite or NaN.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub enum ExtReal {
    NegInf,
    Finite(f64),
    PosInf,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite(0.0);

    /// Maps `±inf` onto the infinite variants. NaN has no place on the line.
    pub fn from_f64(x: f64) -> Result<Self> {
        if x.is_nan() {
            Err(Error::InvalidArgument("NaN is not an extended real".into()))
        } else if x == f64::INFINITY {
            Ok(ExtReal::PosInf)
        } else if x == f64::NEG_INFINITY {
            Ok(ExtReal::NegInf)
        } else {
            Ok(ExtReal::Finite(x))
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    /// Lossy view as an IEEE double; the infinities map to `±inf`.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::Finite(x) => x,
            ExtReal::PosInf => f64::INFINITY,
        }
    }

    pub fn checked_add(self, rhs: ExtReal) -> Result<ExtReal> {
        use ExtReal::*;
        match (self, rhs) {
            (PosInf, NegInf) | (NegInf, PosInf) => Err(Error::Indeterminate("+inf + -inf")),
            (PosInf, _) | (_, PosInf) => Ok(PosInf),
            (NegInf, _) | (_, NegInf) => Ok(NegInf),
            (Finite(a), Finite(b)) => ExtReal::from_f64(a + b),
        }
    }

    pub fn checked_sub(self, rhs: ExtReal) -> Result<ExtReal> {
        self.checked_add(-rhs)
    }

    /// Adds a finite real; never indeterminate.
    pub fn add_real(self, rhs: f64) -> ExtReal {
        debug_assert!(rhs.is_finite());
        match self {
            ExtReal::Finite(a) => ExtReal::from_f64(a + rhs).unwrap_or(ExtReal::NegInf),
            inf => inf,
        }
    }

    pub fn max(self, other: ExtReal) -> ExtReal {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: ExtReal) -> ExtReal {
        if other < self {
            other
        } else {
            self
        }
    }

    pub fn total_cmp(&self, other: &ExtReal) -> Ordering {
        self.partial_cmp(other)
            .expect("ExtReal::Finite never holds NaN")
    }

    /// Supremum of a set of reals; `sup ∅ = -∞`.
    pub fn sup<I: IntoIterator<Item = f64>>(values: I) -> ExtReal {
        values
            .into_iter()
            .map(ExtReal::Finite)
            .fold(ExtReal::NegInf, ExtReal::max)
    }

    /// Infimum of a set of reals; `inf ∅ = +∞`.
    pub fn inf<I: IntoIterator<Item = f64>>(values: I) -> ExtReal {
        values
            .into_iter()
            .map(ExtReal::Finite)
            .fold(ExtReal::PosInf, ExtReal::min)
    }
}

impl Neg for ExtReal {
    type Output = ExtReal;

    fn neg(self) -> ExtReal {
        match self {
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::Finite(x) => ExtReal::Finite(-x),
            ExtReal::PosInf => ExtReal::NegInf,
        }
    }
}

impl From<f64> for ExtReal {
    /// Panics on NaN.
    fn from(x: f64) -> Self {
        ExtReal::from_f64(x).expect("NaN is not an extended real")
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::Finite(x) => write!(f, "{x}"),
            ExtReal::PosInf => f.write_str("+inf"),
        }
    }
}
