use alloc::vec;
use alloc::vec::Vec;

use super::{canonical_sign, SpectralDecomposition};
use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Sweep cap for the cyclic Jacobi iteration.
pub const MAX_SWEEPS: usize = 100;

/// Off-diagonal Frobenius threshold, scaled by `max(1, ‖M‖_F)`.
const OFF_DIAGONAL_TOL: f64 = 1e-12;

/// Full eigendecomposition of a real symmetric matrix by cyclic Jacobi
/// rotations.
///
/// Eigenvalues come back ascending. Each eigenvector is scaled so its
/// largest-magnitude entry is positive.
pub fn eigendecompose(m: &SymmetricMatrix) -> Result<SpectralDecomposition> {
    let n = m.dim();
    if n == 0 {
        return Err(Error::InvalidSize { n, min: 1 });
    }
    let tol = OFF_DIAGONAL_TOL * m.frobenius_norm().max(1.0);

    let mut a = m.as_slice().to_vec();
    // Rotations accumulate into the columns of `v`.
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }

    let mut converged = false;
    let mut off = off_diagonal_norm(&a, n);
    for _ in 0..MAX_SWEEPS {
        if off <= tol {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
        off = off_diagonal_norm(&a, n);
    }
    if !converged && off > tol {
        return Err(Error::NoConvergence {
            sweeps: MAX_SWEEPS,
            off_diagonal: off,
        });
    }

    let eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    let eigenvectors: Vec<Vec<f64>> = (0..n)
        .map(|k| {
            let mut col: Vec<f64> = (0..n).map(|i| v[i * n + k]).collect();
            canonical_sign(&mut col);
            col
        })
        .collect();
    SpectralDecomposition::from_pairs(&eigenvalues, &eigenvectors)
}

/// Annihilates `a[p][q]` with the rotation `J` that diagonalizes the 2×2
/// block, then applies `A ← Jᵀ A J` and `V ← V J`.
fn rotate(a: &mut [f64], v: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];

    // Negligible next to both diagonal entries: drop it outright.
    if apq.abs() < f64::EPSILON * 0.5 * app.abs() && apq.abs() < f64::EPSILON * 0.5 * aqq.abs() {
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        return;
    }

    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        let t = 1.0 / (theta.abs() + libm::sqrt(theta * theta + 1.0));
        if theta < 0.0 {
            -t
        } else {
            t
        }
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for k in 0..n {
        let vkp = v[k * n + p];
        let vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for i in 0..n {
        for j in i + 1..n {
            let x = a[i * n + j];
            sum += 2.0 * x * x;
        }
    }
    libm::sqrt(sum)
}
