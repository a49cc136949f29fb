//! The truncated line problem: Dirichlet walls at `±L` standing in for
//! subdominance along the two real directions.

use crate::potential::PotentialSpec;
use crate::SpectralError;

/// A discretized problem `−y'' + p(x) y = λ y` on `(−L, L)` with
/// Dirichlet conditions at both walls and `grid_points` subintervals.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralProblem {
    pub potential: PotentialSpec,
    half_width: f64,
    grid_points: usize,
}

impl SpectralProblem {
    /// Builds the problem; the grid count must be even (so the origin is a
    /// grid node and the parity blocks split exactly) and at least eight.
    pub fn new(
        potential: PotentialSpec,
        half_width: f64,
        grid_points: usize,
    ) -> Result<Self, SpectralError> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(SpectralError::BadHalfWidth { half_width });
        }
        if grid_points < 8 || grid_points % 2 != 0 {
            return Err(SpectralError::BadGrid { grid_points });
        }
        Ok(SpectralProblem {
            potential,
            half_width,
            grid_points,
        })
    }

    #[must_use]
    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    #[must_use]
    pub fn grid_points(&self) -> usize {
        self.grid_points
    }

    /// Grid spacing `2L / N`.
    #[must_use]
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / self.grid_points as f64
    }

    /// Returns a copy with twice as many grid points.
    pub fn refined(&self) -> Result<SpectralProblem, SpectralError> {
        SpectralProblem::new(
            self.potential.clone(),
            self.half_width,
            self.grid_points * 2,
        )
    }

    /// Returns a copy with the potential replaced (same grid).
    pub fn with_potential(&self, potential: PotentialSpec) -> SpectralProblem {
        SpectralProblem {
            potential,
            half_width: self.half_width,
            grid_points: self.grid_points,
        }
    }
}
