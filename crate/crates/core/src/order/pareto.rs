use super::Preorder;
use crate::error::{Error, Result};

/// `R^k` under the Pareto preorder: `x ⪰ y` iff `x_i ≥ y_i` for every `i`.
///
/// Coordinates are compared exactly; ties are genuine equalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParetoSpace {
    dim: usize,
}

impl ParetoSpace {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidArgument(
                "Pareto space dimension must be positive".into(),
            ));
        }
        Ok(ParetoSpace { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }
}

impl Preorder for ParetoSpace {
    type Element = Vec<f64>;

    fn contains(&self, x: &Vec<f64>) -> bool {
        x.len() == self.dim && x.iter().all(|c| c.is_finite())
    }

    fn geq(&self, x: &Vec<f64>, y: &Vec<f64>) -> bool {
        debug_assert_eq!(x.len(), y.len());
        x.iter().zip(y).all(|(a, b)| a >= b)
    }
}
