//! Strictly monotone extension of partial utility functions.
//!
//! Given a preorder `⪰` on a ground set `X` and a real function `f_P` on a
//! subset `P`, this crate decides whether `f_P` extends to a strictly
//! increasing function on all of `X`, explains why not when it does not,
//! and evaluates a concrete extension when it does.
//!
//! * [`order`]: preorders, the augmented set, extended reals.
//! * [`contours`]: contour bounds `a(x)`, `b(x)` behind [`contours::ContourOracle`].
//! * [`monotonicity`]: weak/strict increase and gap-safety verdicts with witnesses.
//! * [`utility`]: utility representations and their squashing into `(α, β)`.
//! * [`extension`]: the extension formula and its piecewise forms.
//! * [`fixtures`]: analytic fixtures with infinite sample sets.
//! * [`verify`]: brute-force oracles and instance generators.

pub mod contours;
pub mod error;
pub mod extension;
pub mod fixtures;
pub mod monotonicity;
pub mod order;
pub mod utility;
pub mod verify;

pub use error::{Error, Result};
