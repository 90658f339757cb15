use thiserror::Error;

/// Errors raised by the order, contour, and extension layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range for a ground set of {n} elements")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("element {0} does not belong to the ground set")]
    ForeignElement(String),

    #[error("relation is not a preorder: {0}")]
    NotAPreorder(String),

    #[error("{0} is not supported on this ground set")]
    Unsupported(&'static str),

    #[error("indeterminate extended-real form: {0}")]
    Indeterminate(&'static str),

    #[error("sample value for {element} must be finite, got {value}")]
    NonFiniteValue { element: String, value: f64 },

    #[error("element {0} appears more than once in the sample set")]
    DuplicateSample(String),

    #[error("bounds must satisfy alpha < beta (alpha = {alpha}, beta = {beta})")]
    InvalidBounds { alpha: f64, beta: f64 },

    #[error("utility kind mismatch: expected {expected}, found {found}")]
    UtilityKindMismatch { expected: String, found: String },

    #[error("probe ({x}, {x_prime}) does not satisfy x' > x")]
    InvalidProbe { x: String, x_prime: String },

    #[error("sample set is not a Pareto set: {dominating} strictly dominates {dominated}")]
    NotParetoSet {
        dominating: String,
        dominated: String,
    },

    #[error("sample function is not gap-safe increasing: {0}")]
    NotGapSafe(String),

    #[error("contour bound at {element} is unbounded (a = {a}, b = {b}); the extension is undefined there")]
    UnboundedContour {
        element: String,
        a: String,
        b: String,
    },

    #[error("extension formulas disagree at {element}: {detail}")]
    FormulaDisagreement { element: String, detail: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
