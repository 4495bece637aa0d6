//! Integer function families on dyadic grids.

use serde::Serialize;

use crate::numerics::{is_dyadic, rat, rational_string, Rational};
use num_traits::{One, Signed};

use super::DiagonalError;

/// A finite stand-in for a family `y ↦ f_y`: integer values tabulated over
/// a sorted grid of dyadic rationals in `[0, 1)`, one row per parameter y
/// and one column per argument x.
#[derive(Debug, Clone)]
pub struct FunctionFamily {
    grid: Vec<Rational>,
    values: Vec<Vec<i64>>,
}

impl FunctionFamily {
    pub fn new(grid: Vec<Rational>, values: Vec<Vec<i64>>) -> Result<Self, DiagonalError> {
        let invalid = |reason: String| DiagonalError::InvalidFamily { reason };
        if grid.is_empty() {
            return Err(invalid("grid is empty".to_string()));
        }
        for point in &grid {
            if point.is_negative() || *point >= Rational::one() {
                return Err(invalid(format!("{} outside [0, 1)", rational_string(point))));
            }
            if !is_dyadic(point) {
                return Err(invalid(format!("{} is not dyadic", rational_string(point))));
            }
        }
        if grid.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("grid is not strictly increasing".to_string()));
        }
        if values.len() != grid.len() || values.iter().any(|row| row.len() != grid.len()) {
            return Err(invalid(format!(
                "table must be {n}×{n} for a grid of {n} points",
                n = grid.len()
            )));
        }
        Ok(Self { grid, values })
    }

    /// `{i/2^depth : 0 ≤ i < 2^depth}`.
    pub fn dyadic_grid(depth: u32) -> Vec<Rational> {
        let denom = 1i64 << depth;
        (0..denom).map(|i| rat(i, denom)).collect()
    }

    /// Every table entry equal to `value`.
    pub fn uniform(grid: Vec<Rational>, value: i64) -> Result<Self, DiagonalError> {
        let n = grid.len();
        Self::new(grid, vec![vec![value; n]; n])
    }

    pub fn grid(&self) -> &[Rational] {
        &self.grid
    }

    pub fn size(&self) -> usize {
        self.grid.len()
    }

    /// Table value `f_y(x)` by grid indices.
    pub fn value(&self, y_index: usize, x_index: usize) -> i64 {
        self.values[y_index][x_index]
    }
}

/// The diagonal function: `g(y) = f_y(y) + 1`, one value per grid point.
pub fn build_g(family: &FunctionFamily) -> Vec<i64> {
    (0..family.size()).map(|i| family.value(i, i) + 1).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct EscapeVerdict {
    pub checked: usize,
    pub ok: bool,
}

/// Confirms `g(y) ≠ f_y(y)` at every grid point.
pub fn verify_g_escapes(family: &FunctionFamily, g: &[i64]) -> EscapeVerdict {
    assert_eq!(g.len(), family.size(), "g must cover the whole grid");
    let ok = (0..family.size()).all(|i| g[i] != family.value(i, i));
    EscapeVerdict {
        checked: family.size(),
        ok,
    }
}
