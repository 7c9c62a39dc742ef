//! Measurement dictionaries over the DOA grid.

use alloc::vec::Vec;

use ndarray::Array2;

use crate::geometry::ArrayGeometry;
use crate::grid::DoaGrid;
use crate::linalg::spectral_norm;
use crate::{Result, C64};

/// Per-sub-array steering dictionaries `A_l` (shape `M_l x N_theta`) with
/// cached spectral norms `||A_l^H A_l||`, plus the stacked full-array
/// dictionary used by coherent estimators.
#[derive(Debug, Clone)]
pub struct Dictionary {
    grid: DoaGrid,
    mats: Vec<Array2<C64>>,
    gram_norms: Vec<f64>,
    stacked: Array2<C64>,
    stacked_gram_norm: f64,
}

impl Dictionary {
    /// Evaluates every sub-array steering vector on the grid and caches the
    /// spectral norms needed for solver step sizes.
    ///
    /// The norm of `A^H A` equals the norm of the much smaller `A A^H`, so
    /// the power method runs on `M_l x M_l` Grams.
    pub fn build(geometry: &ArrayGeometry, grid: &DoaGrid) -> Result<Self> {
        let n_theta = grid.len();
        let m_total = geometry.num_elements();
        let mut mats = Vec::with_capacity(geometry.num_subarrays());
        let mut gram_norms = Vec::with_capacity(geometry.num_subarrays());
        let mut stacked = Array2::zeros((m_total, n_theta));

        for l in 0..geometry.num_subarrays() {
            let range = geometry.subarray_range(l)?;
            let m_l = range.len();
            let mut a = Array2::zeros((m_l, n_theta));
            for (col, &theta) in grid.angles_deg().iter().enumerate() {
                let sv = geometry.steering_vector(l, theta)?;
                for (row, &v) in sv.iter().enumerate() {
                    a[(row, col)] = v;
                    stacked[(range.start + row, col)] = v;
                }
            }
            gram_norms.push(spectral_norm(&small_gram(&a))?);
            mats.push(a);
        }
        let stacked_gram_norm = spectral_norm(&small_gram(&stacked))?;
        Ok(Dictionary {
            grid: grid.clone(),
            mats,
            gram_norms,
            stacked,
            stacked_gram_norm,
        })
    }

    pub fn grid(&self) -> &DoaGrid {
        &self.grid
    }

    pub fn num_subarrays(&self) -> usize {
        self.mats.len()
    }

    /// Steering matrix of sub-array `l`, shape `M_l x N_theta`.
    pub fn subarray(&self, l: usize) -> &Array2<C64> {
        &self.mats[l]
    }

    /// Cached `||A_l^H A_l||`.
    pub fn gram_norm(&self, l: usize) -> f64 {
        self.gram_norms[l]
    }

    pub fn max_gram_norm(&self) -> f64 {
        self.gram_norms.iter().fold(0.0, |a, &b| a.max(b))
    }

    /// Full-array dictionary `[A_1; ...; A_L]`, shape `M x N_theta`.
    pub fn stacked(&self) -> &Array2<C64> {
        &self.stacked
    }

    /// Cached `||A^H A||` of the stacked dictionary.
    pub fn stacked_gram_norm(&self) -> f64 {
        self.stacked_gram_norm
    }
}

/// `A A^H`: shares its spectral norm with `A^H A` but is only `M x M`.
fn small_gram(a: &Array2<C64>) -> Array2<C64> {
    let (m, n) = a.dim();
    let mut g = Array2::zeros((m, m));
    for i in 0..m {
        for j in 0..m {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n {
                acc += a[(i, k)] * a[(j, k)].conj();
            }
            g[(i, j)] = acc;
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::ArrayGeometry;

    fn fig_setup() -> (ArrayGeometry, DoaGrid) {
        let g = ArrayGeometry::centered_ula(1.0, 24, 0.5, alloc::vec![6, 6, 6, 6]).unwrap();
        let grid = DoaGrid::uniform(-45.0, 45.0, 0.1).unwrap();
        (g, grid)
    }

    #[test]
    fn shapes_match_partition_and_grid() {
        let (g, grid) = fig_setup();
        let d = Dictionary::build(&g, &grid).unwrap();
        assert_eq!(d.num_subarrays(), 4);
        for l in 0..4 {
            assert_eq!(d.subarray(l).dim(), (6, 901));
        }
        assert_eq!(d.stacked().dim(), (24, 901));
    }

    #[test]
    fn columns_are_steering_vectors() {
        let (g, grid) = fig_setup();
        let d = Dictionary::build(&g, &grid).unwrap();
        for &(l, col) in &[(0usize, 0usize), (2, 450), (3, 900)] {
            let sv = g.steering_vector(l, grid.angle(col)).unwrap();
            for (row, &v) in sv.iter().enumerate() {
                assert_eq!(d.subarray(l)[(row, col)], v);
            }
        }
    }

    #[test]
    fn omni_entries_have_unit_modulus() {
        let (g, grid) = fig_setup();
        let d = Dictionary::build(&g, &grid).unwrap();
        for l in 0..4 {
            for v in d.subarray(l).iter() {
                assert!((v.norm() - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn gram_norm_at_least_subarray_size() {
        // Unit-modulus columns give ||A^H A|| >= max column norm^2 = M_l.
        let (g, grid) = fig_setup();
        let d = Dictionary::build(&g, &grid).unwrap();
        for l in 0..4 {
            assert!(d.gram_norm(l) >= 6.0 - 1e-9);
        }
        assert!(d.stacked_gram_norm() >= 24.0 - 1e-9);
    }
}
