//! Uniform DOA hypothesis grid.

use alloc::{format, vec::Vec};

use crate::{Error, Result};

/// Strictly increasing, uniformly spaced grid of DOA hypotheses in degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct DoaGrid {
    angles_deg: Vec<f64>,
    step_deg: f64,
}

impl DoaGrid {
    /// Validates an explicit angle list: at least two angles, strictly
    /// increasing, spacing uniform to within 1e-12 relative.
    pub fn new(angles_deg: Vec<f64>) -> Result<Self> {
        if angles_deg.len() < 2 {
            return Err(Error::invalid("grid needs at least two angles"));
        }
        if angles_deg.iter().any(|a| !a.is_finite()) {
            return Err(Error::invalid("grid angles must be finite"));
        }
        let step = angles_deg[1] - angles_deg[0];
        if step <= 0.0 {
            return Err(Error::invalid("grid must be strictly increasing"));
        }
        for w in angles_deg.windows(2) {
            let d = w[1] - w[0];
            if (d - step).abs() > 1e-12 * step.abs().max(1.0) {
                return Err(Error::invalid(format!(
                    "grid spacing is not uniform: {step} vs {d}"
                )));
            }
        }
        Ok(DoaGrid {
            angles_deg,
            step_deg: step,
        })
    }

    /// Builds the grid `lo, lo + step, ..., hi` (inclusive ends).
    pub fn uniform(lo_deg: f64, hi_deg: f64, step_deg: f64) -> Result<Self> {
        if !(step_deg.is_finite() && step_deg > 0.0) || !lo_deg.is_finite() || !hi_deg.is_finite() {
            return Err(Error::invalid("grid bounds and step must be finite, step > 0"));
        }
        let span = hi_deg - lo_deg;
        if span <= 0.0 {
            return Err(Error::invalid("grid upper bound must exceed lower bound"));
        }
        let n = (span / step_deg + 0.5) as usize + 1;
        let angles = (0..n).map(|k| lo_deg + k as f64 * step_deg).collect();
        DoaGrid::new(angles)
    }

    pub fn len(&self) -> usize {
        self.angles_deg.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn step_deg(&self) -> f64 {
        self.step_deg
    }

    pub fn angles_deg(&self) -> &[f64] {
        &self.angles_deg
    }

    pub fn angle(&self, i: usize) -> f64 {
        self.angles_deg[i]
    }

    pub fn min_deg(&self) -> f64 {
        self.angles_deg[0]
    }

    pub fn max_deg(&self) -> f64 {
        *self.angles_deg.last().expect("non-empty by construction")
    }

    /// Index of the grid angle nearest to `theta_deg`.
    pub fn nearest_index(&self, theta_deg: f64) -> usize {
        let raw = (theta_deg - self.angles_deg[0]) / self.step_deg;
        let idx = if raw <= 0.0 {
            0
        } else {
            (raw + 0.5) as usize
        };
        idx.min(self.angles_deg.len() - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_grid_has_901_points() {
        let g = DoaGrid::uniform(-45.0, 45.0, 0.1).unwrap();
        assert_eq!(g.len(), 901);
        assert_eq!(g.min_deg(), -45.0);
        assert!((g.max_deg() - 45.0).abs() < 1e-9);
        assert!((g.step_deg() - 0.1).abs() < 1e-12);
    }

    #[test]
    fn rejects_non_uniform_spacing() {
        assert!(DoaGrid::new(alloc::vec![0.0, 1.0, 2.5]).is_err());
        assert!(DoaGrid::new(alloc::vec![0.0]).is_err());
        assert!(DoaGrid::new(alloc::vec![1.0, 0.0]).is_err());
    }

    #[test]
    fn nearest_index_clamps_to_range() {
        let g = DoaGrid::uniform(-10.0, 10.0, 1.0).unwrap();
        assert_eq!(g.nearest_index(-50.0), 0);
        assert_eq!(g.nearest_index(50.0), 20);
        assert_eq!(g.nearest_index(0.4), 10);
        assert_eq!(g.nearest_index(0.6), 11);
    }
}
