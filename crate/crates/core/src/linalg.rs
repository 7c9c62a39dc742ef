//! Dense complex linear algebra used by the solvers.
//!
//! Problem sizes are small on the matrix side (sub-array Grams, L x L
//! synchronization matrices, M x M covariances with M around 24), so the
//! routines favor determinism and accuracy over asymptotics: a power method
//! with a fixed starting vector for spectral norms, cyclic complex Jacobi
//! for Hermitian eigendecompositions, and a Gram-matrix route for the SVD
//! of tall-thin matrices.

use alloc::vec::Vec;

use ndarray::{Array1, Array2};
// Inherent f64 methods shadow these under std; the trait is required for no_std.
#[allow(unused_imports)]
use num_traits::Float;

use crate::{Error, Result, C64};

/// Frobenius norm.
pub fn fro_norm(a: &Array2<C64>) -> f64 {
    a.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
}

/// Frobenius norm of `a - b` without allocating the difference.
pub fn fro_dist(a: &Array2<C64>, b: &Array2<C64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

pub fn all_finite(a: &Array2<C64>) -> bool {
    a.iter().all(|v| v.re.is_finite() && v.im.is_finite())
}

/// `A^H B` for matrices with compatible row counts.
pub fn conj_t_dot(a: &Array2<C64>, b: &Array2<C64>) -> Array2<C64> {
    let (rows, ac) = a.dim();
    let bc = b.dim().1;
    debug_assert_eq!(rows, b.dim().0);
    let mut out = Array2::zeros((ac, bc));
    for i in 0..ac {
        for j in 0..bc {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..rows {
                acc += a[(k, i)].conj() * b[(k, j)];
            }
            out[(i, j)] = acc;
        }
    }
    out
}

/// Hermitian part `(A + A^H) / 2`.
pub fn hermitian_part(a: &Array2<C64>) -> Array2<C64> {
    let n = a.dim().0;
    let mut h = Array2::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            h[(i, j)] = 0.5 * (a[(i, j)] + a[(j, i)].conj());
        }
    }
    h
}

/// Largest eigenvalue of a Hermitian PSD matrix by the power method.
///
/// The starting vector is deterministic (all ones plus a small index ramp,
/// which avoids starting orthogonal to the dominant eigenvector on
/// structured inputs), so repeated calls return bit-identical results.
pub fn spectral_norm(h: &Array2<C64>) -> Result<f64> {
    let (n, m) = h.dim();
    if n != m {
        return Err(Error::invalid("spectral_norm expects a square matrix"));
    }
    if n == 0 {
        return Err(Error::invalid("spectral_norm expects a non-empty matrix"));
    }
    let mut v: Array1<C64> =
        Array1::from_iter((0..n).map(|i| C64::new(1.0 + 1e-6 * i as f64, 0.0)));
    let norm0 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    v.mapv_inplace(|x| x / norm0);

    let mut lambda_prev = f64::INFINITY;
    for _ in 0..50_000 {
        let w = h.dot(&v);
        // Rayleigh quotient v^H H v (v is unit norm).
        let lambda: f64 = v
            .iter()
            .zip(w.iter())
            .map(|(vi, wi)| (vi.conj() * wi).re)
            .sum();
        let wnorm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if wnorm == 0.0 {
            return Ok(0.0);
        }
        v = w / C64::new(wnorm, 0.0);
        if (lambda - lambda_prev).abs() <= 1e-13 * lambda.abs().max(1e-300) {
            return Ok(lambda.max(0.0));
        }
        lambda_prev = lambda;
    }
    Ok(lambda_prev.max(0.0))
}

/// Eigendecomposition of a Hermitian matrix.
#[derive(Debug, Clone)]
pub struct Eigh {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose column `k` is the eigenvector of `values[k]`.
    pub vectors: Array2<C64>,
}

/// Cyclic complex Jacobi eigendecomposition of the Hermitian part of `a`.
pub fn eigh(a: &Array2<C64>) -> Result<Eigh> {
    let (n, m) = a.dim();
    if n != m {
        return Err(Error::invalid("eigh expects a square matrix"));
    }
    if n == 0 {
        return Err(Error::invalid("eigh expects a non-empty matrix"));
    }
    let mut h = hermitian_part(a);
    let mut vecs: Array2<C64> = Array2::eye(n);
    let scale = fro_norm(&h).max(1e-300);

    for _sweep in 0..100 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += h[(p, q)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = h[(p, q)];
                let r = apq.norm();
                if r <= 1e-18 * scale {
                    continue;
                }
                let app = h[(p, p)].re;
                let aqq = h[(q, q)].re;
                let tau = (aqq - app) / (2.0 * r);
                // Smaller-magnitude root of t^2 - 2*tau*t - 1 = 0.
                let t = if tau >= 0.0 {
                    -1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = (c * t) * (apq.conj() / r);

                // A <- U^H A U with U = [[c, -conj(s)], [s, c]] on (p, q).
                for i in 0..n {
                    let aip = h[(i, p)];
                    let aiq = h[(i, q)];
                    h[(i, p)] = c * aip + s * aiq;
                    h[(i, q)] = -s.conj() * aip + c * aiq;
                }
                for i in 0..n {
                    let api = h[(p, i)];
                    let aqi = h[(q, i)];
                    h[(p, i)] = c * api + s.conj() * aqi;
                    h[(q, i)] = -s * api + c * aqi;
                }
                h[(p, q)] = C64::new(0.0, 0.0);
                h[(q, p)] = C64::new(0.0, 0.0);
                for i in 0..n {
                    let vip = vecs[(i, p)];
                    let viq = vecs[(i, q)];
                    vecs[(i, p)] = c * vip + s * viq;
                    vecs[(i, q)] = -s.conj() * vip + c * viq;
                }
            }
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        h[(i, i)]
            .re
            .partial_cmp(&h[(j, j)].re)
            .expect("finite eigenvalues")
    });
    let values = order.iter().map(|&i| h[(i, i)].re).collect();
    let mut sorted = Array2::zeros((n, n));
    for (col, &src) in order.iter().enumerate() {
        for i in 0..n {
            sorted[(i, col)] = vecs[(i, src)];
        }
    }
    Ok(Eigh {
        values,
        vectors: sorted,
    })
}

/// Thin SVD of a tall matrix `Z` (rows >= cols), via the eigendecomposition
/// of the small Gram matrix `Z^H Z`.
#[derive(Debug, Clone)]
pub struct GramSvd {
    /// Singular values in descending order.
    pub singular: Vec<f64>,
    /// Right singular vectors as columns, matching `singular`.
    pub right: Array2<C64>,
}

pub fn gram_svd(z: &Array2<C64>) -> Result<GramSvd> {
    let gram = conj_t_dot(z, z);
    let eig = eigh(&gram)?;
    let k = eig.values.len();
    let mut singular = Vec::with_capacity(k);
    let mut right = Array2::zeros((k, k));
    // Reverse the ascending eigenvalue order.
    for (col, src) in (0..k).rev().enumerate() {
        singular.push(eig.values[src].max(0.0).sqrt());
        for i in 0..k {
            right[(i, col)] = eig.vectors[(i, src)];
        }
    }
    Ok(GramSvd { singular, right })
}

impl GramSvd {
    /// Sum of singular values.
    pub fn nuclear_norm(&self) -> f64 {
        self.singular.iter().sum()
    }

    /// Rebuilds `sum_i f(sigma_i) u_i v_i^H` as `Z * (W diag(f/sigma) W^H)`,
    /// skipping directions with negligible singular values (where the
    /// corresponding `f` must be zero for the expression to make sense).
    pub fn recompose_filtered(&self, z: &Array2<C64>, f: impl Fn(f64) -> f64) -> Array2<C64> {
        let k = self.singular.len();
        let cutoff = 1e-14 * self.singular.first().copied().unwrap_or(0.0).max(1e-300);
        let mut mix: Array2<C64> = Array2::zeros((k, k));
        for idx in 0..k {
            let sigma = self.singular[idx];
            if sigma <= cutoff {
                continue;
            }
            let w = self.right.column(idx);
            let gain = f(sigma) / sigma;
            if gain == 0.0 {
                continue;
            }
            for i in 0..k {
                for j in 0..k {
                    mix[(i, j)] += C64::new(gain, 0.0) * w[i] * w[j].conj();
                }
            }
        }
        z.dot(&mix)
    }
}

/// Dominant eigenpair of a Hermitian PSD matrix by power iteration with the
/// same deterministic start as [`spectral_norm`].
pub fn dominant_eigpair(h: &Array2<C64>) -> Result<(f64, Array1<C64>)> {
    let (n, m) = h.dim();
    if n != m || n == 0 {
        return Err(Error::invalid("dominant_eigpair expects a square matrix"));
    }
    let mut v: Array1<C64> =
        Array1::from_iter((0..n).map(|i| C64::new(1.0 + 1e-6 * i as f64, 0.0)));
    let norm0 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    v.mapv_inplace(|x| x / norm0);
    let mut lambda_prev = f64::INFINITY;
    let mut lambda = 0.0;
    for _ in 0..20_000 {
        let w = h.dot(&v);
        lambda = v
            .iter()
            .zip(w.iter())
            .map(|(vi, wi)| (vi.conj() * wi).re)
            .sum();
        let wnorm = w.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        if wnorm == 0.0 {
            return Ok((0.0, v));
        }
        v = w / C64::new(wnorm, 0.0);
        if (lambda - lambda_prev).abs() <= 1e-14 * lambda.abs().max(1e-300) {
            break;
        }
        lambda_prev = lambda;
    }
    Ok((lambda.max(0.0), v))
}

/// Largest two eigenvalues of a Hermitian PSD matrix: the dominant pair
/// plus one deflation step.
pub fn top_two_eigvals(h: &Array2<C64>) -> Result<(f64, f64, Array1<C64>)> {
    let (lambda1, v1) = dominant_eigpair(h)?;
    let n = h.dim().0;
    if n == 1 {
        return Ok((lambda1, 0.0, v1));
    }
    let mut deflated = h.clone();
    for i in 0..n {
        for j in 0..n {
            deflated[(i, j)] -= C64::new(lambda1, 0.0) * v1[i] * v1[j].conj();
        }
    }
    let (lambda2, _) = dominant_eigpair(&deflated)?;
    Ok((lambda1, lambda2.max(0.0), v1))
}
