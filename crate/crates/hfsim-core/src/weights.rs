//! Weight vectors over universe elements.

use crate::error::HfsError;

/// Slack allowed on the unit-sum constraint.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-9;

/// Nonnegative per-element weights summing to one.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
}

impl WeightVector {
    /// Validates that every weight lies in `[0, 1]` and that the total is 1
    /// within [`WEIGHT_SUM_TOLERANCE`].
    pub fn new(weights: Vec<f64>) -> Result<Self, HfsError> {
        if weights.is_empty() {
            return Err(HfsError::InvalidSpec("empty weight vector".into()));
        }
        for &w in &weights {
            if !w.is_finite() || !(0.0..=1.0).contains(&w) {
                return Err(HfsError::WeightOutOfRange(w));
            }
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(HfsError::WeightSum(sum));
        }
        Ok(Self { weights })
    }

    /// Equal weights `1/m` for a universe of `m` elements.
    pub fn uniform(m: usize) -> Result<Self, HfsError> {
        if m == 0 {
            return Err(HfsError::InvalidSpec("empty weight vector".into()));
        }
        Self::new(vec![1.0 / m as f64; m])
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = f64> + '_ {
        self.weights.iter().copied()
    }
}
