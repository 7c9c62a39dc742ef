//! Closed-form proximal operators and projections shared by the ADMM
//! schemes.
//!
//! Threshold conventions follow the penalized objectives with an
//! unweighted squared distance, `t ||.|| + ||. - z||^2`, so the effective
//! soft threshold is `t / 2`.

use ndarray::Array2;
// Inherent f64 methods shadow these under std; the trait is required for no_std.
#[allow(unused_imports)]
use num_traits::Float;

use crate::linalg::{eigh, gram_svd, hermitian_part};
use crate::{Error, Result, C64};

/// Nonnegative threshold parameter of a proximal step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProxThreshold(f64);

impl ProxThreshold {
    pub fn new(value: f64) -> Result<Self> {
        if !(value.is_finite() && value >= 0.0) {
            return Err(Error::invalid("prox threshold must be finite and >= 0"));
        }
        Ok(ProxThreshold(value))
    }

    pub fn value(&self) -> f64 {
        self.0
    }
}

/// Row-wise group soft-thresholding: the minimizer of
/// `t ||G||_{1,2} + ||G - Z||_F^2`.
///
/// Rows with Euclidean norm at most `t/2` collapse to zero; the rest shrink
/// toward zero while keeping their direction.
pub fn prox_group_l12(z: &Array2<C64>, threshold: ProxThreshold) -> Array2<C64> {
    let half = 0.5 * threshold.value();
    let mut out = z.clone();
    for mut row in out.rows_mut() {
        let norm = row.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
        if norm <= half {
            row.fill(C64::new(0.0, 0.0));
        } else {
            let scale = 1.0 - half / norm;
            for v in row.iter_mut() {
                *v *= scale;
            }
        }
    }
    out
}

/// Singular value soft-thresholding: the minimizer of
/// `t ||Z||_* + ||Z - G||_F^2`.
pub fn prox_nuclear(g: &Array2<C64>, threshold: ProxThreshold) -> Result<Array2<C64>> {
    let half = 0.5 * threshold.value();
    let svd = gram_svd(g)?;
    Ok(svd.recompose_filtered(g, |sigma| (sigma - half).max(0.0)))
}

/// Projection onto `{V : diag(V) = 1}`: sets the diagonal to one and leaves
/// everything else untouched.
pub fn project_diag_ones(v: &Array2<C64>) -> Result<Array2<C64>> {
    let (n, m) = v.dim();
    if n != m {
        return Err(Error::invalid("project_diag_ones expects a square matrix"));
    }
    let mut out = v.clone();
    for i in 0..n {
        out[(i, i)] = C64::new(1.0, 0.0);
    }
    Ok(out)
}

/// Projection onto the PSD cone: Hermitian-symmetrize, eigendecompose, and
/// clamp negative eigenvalues to zero.
pub fn project_psd(v: &Array2<C64>) -> Result<Array2<C64>> {
    let (n, m) = v.dim();
    if n != m {
        return Err(Error::invalid("project_psd expects a square matrix"));
    }
    let h = hermitian_part(v);
    let eig = eigh(&h)?;
    let mut out = Array2::zeros((n, n));
    for k in 0..n {
        let lambda = eig.values[k];
        if lambda <= 0.0 {
            continue;
        }
        let u = eig.vectors.column(k);
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] += C64::new(lambda, 0.0) * u[i] * u[j].conj();
            }
        }
    }
    Ok(out)
}

/// `t ||G||_{1,2} + ||G - Z||_F^2`, the objective minimized by
/// [`prox_group_l12`]. Exposed for tests and diagnostics.
pub fn group_l12_objective(g: &Array2<C64>, z: &Array2<C64>, t: f64) -> f64 {
    let norm12: f64 = g
        .rows()
        .into_iter()
        .map(|row| row.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt())
        .sum();
    let mut dist = 0.0;
    for (a, b) in g.iter().zip(z.iter()) {
        dist += (a - b).norm_sqr();
    }
    t * norm12 + dist
}

/// `||G||_{1,2}`: sum of row norms.
pub fn l12_norm(g: &Array2<C64>) -> f64 {
    g.rows()
        .into_iter()
        .map(|row| row.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt())
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{fro_dist, fro_norm};
    use ndarray::Array2;

    fn mat(rows: &[&[(f64, f64)]]) -> Array2<C64> {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = Array2::zeros((r, c));
        for i in 0..r {
            for j in 0..c {
                m[(i, j)] = C64::new(rows[i][j].0, rows[i][j].1);
            }
        }
        m
    }

    #[test]
    fn small_rows_collapse_to_zero() {
        let z = mat(&[&[(0.5, 0.0), (0.5, 0.0)], &[(3.0, 0.0), (4.0, 0.0)]]);
        let out = prox_group_l12(&z, ProxThreshold::new(4.0).unwrap());
        // Row 0 has norm ~0.707 <= 2 -> zero row.
        assert_eq!(out[(0, 0)], C64::new(0.0, 0.0));
        assert_eq!(out[(0, 1)], C64::new(0.0, 0.0));
        // Row 1 has norm 5 -> scaled by 1 - 2/5.
        assert!((out[(1, 0)] - C64::new(1.8, 0.0)).norm() < 1e-12);
        assert!((out[(1, 1)] - C64::new(2.4, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn zero_threshold_is_identity() {
        let z = mat(&[&[(0.3, -1.2), (0.0, 0.4)], &[(-2.0, 0.1), (0.9, 0.9)]]);
        let out = prox_group_l12(&z, ProxThreshold::new(0.0).unwrap());
        assert!(fro_dist(&out, &z) < 1e-15);
    }

    #[test]
    fn prox_rows_stay_colinear_with_input() {
        let z = mat(&[&[(1.0, 2.0), (-0.5, 0.3)], &[(0.0, -3.0), (2.2, 1.1)]]);
        let out = prox_group_l12(&z, ProxThreshold::new(1.0).unwrap());
        for i in 0..2 {
            // Cross products vanish for colinear complex vectors.
            let cross = out[(i, 0)] * z[(i, 1)] - out[(i, 1)] * z[(i, 0)];
            assert!(cross.norm() < 1e-12);
        }
    }

    #[test]
    fn nuclear_zero_threshold_returns_input() {
        let g = mat(&[
            &[(1.0, 0.2), (0.0, -0.7)],
            &[(0.4, 0.4), (2.0, 0.0)],
            &[(-1.0, 1.0), (0.3, 0.0)],
        ]);
        let out = prox_nuclear(&g, ProxThreshold::new(0.0).unwrap()).unwrap();
        assert!(fro_dist(&out, &g) < 1e-12);
    }

    #[test]
    fn nuclear_kills_small_rank_one_matrix() {
        // sigma = 1, threshold mu = 2 -> sigma <= mu/2 -> zero.
        let g = mat(&[&[(0.6, 0.0)], &[(0.8, 0.0)]]);
        let out = prox_nuclear(&g, ProxThreshold::new(2.0).unwrap()).unwrap();
        assert!(fro_norm(&out) < 1e-12);
    }

    #[test]
    fn nuclear_never_increases_singular_values() {
        let g = mat(&[
            &[(1.3, -0.2), (0.1, 0.9)],
            &[(0.0, 0.5), (-0.8, 0.0)],
            &[(0.7, 0.7), (0.2, -1.1)],
        ]);
        let before = gram_svd(&g).unwrap().singular;
        let out = prox_nuclear(&g, ProxThreshold::new(0.8).unwrap()).unwrap();
        let after = gram_svd(&out).unwrap().singular;
        for (b, a) in before.iter().zip(after.iter()) {
            assert!(*a <= b + 1e-10);
            assert!((b - a - 0.4).abs() < 1e-10 || *a == 0.0);
        }
    }

    #[test]
    fn diag_projection_examples() {
        let zero: Array2<C64> = Array2::zeros((3, 3));
        let eye: Array2<C64> = Array2::eye(3);
        assert!(fro_dist(&project_diag_ones(&zero).unwrap(), &eye) < 1e-15);

        let v = mat(&[&[(1.0, 0.0), (0.3, -0.4)], &[(0.2, 0.2), (1.0, 0.0)]]);
        let once = project_diag_ones(&v).unwrap();
        assert!(fro_dist(&once, &v) < 1e-15);
        let twice = project_diag_ones(&once).unwrap();
        assert!(fro_dist(&twice, &once) < 1e-15);

        let bad: Array2<C64> = Array2::zeros((2, 3));
        assert!(project_diag_ones(&bad).is_err());
    }

    #[test]
    fn psd_projection_clamps_diagonal() {
        let v = mat(&[&[(2.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (-3.0, 0.0)]]);
        let out = project_psd(&v).unwrap();
        assert!((out[(0, 0)] - C64::new(2.0, 0.0)).norm() < 1e-12);
        assert!(out[(1, 1)].norm() < 1e-12);
    }

    #[test]
    fn psd_projection_fixes_psd_input() {
        // A = B^H B is PSD by construction.
        let b = mat(&[&[(1.0, 0.3), (0.2, -0.5)], &[(0.0, 0.8), (1.5, 0.0)]]);
        let a = crate::linalg::conj_t_dot(&b, &b);
        let out = project_psd(&a).unwrap();
        assert!(fro_dist(&out, &a) < 1e-12);
    }
}
