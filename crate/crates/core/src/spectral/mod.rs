//! Spectral decompositions of real symmetric matrices.
//!
//! [`eigendecompose`] runs cyclic Jacobi rotations, [`gram_schmidt`] turns a
//! basis of eigenstates into an orthonormal one, and [`group_eigenspaces`]
//! collects degenerate eigenvalues so that long-time averages can keep only
//! the cross terms with `E_n == E_l`.

mod eigenspace;
mod gram_schmidt;
mod jacobi;

pub use eigenspace::{group_eigenspaces, Eigenspace, EigenspacePartition, DEFAULT_DEGENERACY_TOL};
pub use gram_schmidt::{gram_schmidt, gram_schmidt_classical, orthogonalize_classical};
pub use jacobi::{eigendecompose, MAX_SWEEPS};

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// Eigenvalues in ascending order, each paired with a unit eigenvector.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralDecomposition {
    n: usize,
    eigenvalues: Vec<f64>,
    /// Eigenvector `k` occupies `vectors[k * n..(k + 1) * n]`.
    vectors: Vec<f64>,
}

impl SpectralDecomposition {
    /// Assembles a decomposition from eigenpairs in any order.
    ///
    /// Pairs are stably sorted by eigenvalue. Orthonormality is not checked
    /// here; see [`SpectralDecomposition::orthonormality_error`].
    pub fn from_pairs<V: AsRef<[f64]>>(eigenvalues: &[f64], eigenvectors: &[V]) -> Result<Self> {
        let n = eigenvalues.len();
        if eigenvectors.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: eigenvectors.len(),
            });
        }
        if let Some(bad) = eigenvectors.iter().find(|v| v.as_ref().len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.as_ref().len(),
            });
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| eigenvalues[a].total_cmp(&eigenvalues[b]));
        let mut vectors = Vec::with_capacity(n * n);
        for &k in &order {
            vectors.extend_from_slice(eigenvectors[k].as_ref());
        }
        Ok(Self {
            n,
            eigenvalues: order.iter().map(|&k| eigenvalues[k]).collect(),
            vectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn eigenvector(&self, k: usize) -> &[f64] {
        &self.vectors[k * self.n..(k + 1) * self.n]
    }

    pub fn eigenvectors(&self) -> impl Iterator<Item = &[f64]> {
        self.vectors.chunks_exact(self.n.max(1)).take(self.n)
    }

    /// `max_n ‖M q_n − E_n q_n‖∞`.
    pub fn residual(&self, m: &SymmetricMatrix) -> f64 {
        assert_eq!(m.dim(), self.n, "matrix dimension must match decomposition");
        let mut worst: f64 = 0.0;
        for (q, &e) in self.eigenvectors().zip(&self.eigenvalues) {
            let mq = m.mul_vec(q);
            for (a, b) in mq.iter().zip(q) {
                worst = worst.max((a - e * b).abs());
            }
        }
        worst
    }

    /// `max_{i,j} |⟨q_i|q_j⟩ − δ_ij|`.
    pub fn orthonormality_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in i..self.n {
                let dot = dot(self.eigenvector(i), self.eigenvector(j));
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }

    /// `max_{a,b} |(∑_n q_n q_nᵀ)_{ab} − δ_ab|`.
    pub fn completeness_error(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for a in 0..self.n {
            for b in a..self.n {
                let sum: f64 = self.eigenvectors().map(|q| q[a] * q[b]).sum();
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((sum - target).abs());
            }
        }
        worst
    }

    /// `∑_n E_n |q_n⟩⟨q_n|`.
    pub fn reconstruct(&self) -> SymmetricMatrix {
        SymmetricMatrix::from_upper(self.n, |a, b| {
            self.eigenvectors()
                .zip(&self.eigenvalues)
                .map(|(q, e)| e * q[a] * q[b])
                .sum()
        })
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

/// Flips `v` so that its largest-magnitude entry is positive.
///
/// Entries within a relative `1e-10` of the maximum count as tied; the first
/// of them decides.
pub fn canonical_sign(v: &mut [f64]) {
    let max = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    if max == 0.0 {
        return;
    }
    let lead = v
        .iter()
        .copied()
        .find(|x| x.abs() >= max * (1.0 - 1e-10))
        .unwrap_or(0.0);
    if lead < 0.0 {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn from_pairs_sorts_stably() {
        let d = SpectralDecomposition::from_pairs(
            &[2.0, 0.0, 2.0],
            &[vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0], vec![0.0, 0.0, 1.0]],
        )
        .unwrap();
        assert_eq!(d.eigenvalues(), &[0.0, 2.0, 2.0]);
        assert_eq!(d.eigenvector(0), &[0.0, 1.0, 0.0]);
        assert_eq!(d.eigenvector(1), &[1.0, 0.0, 0.0]);
        assert_eq!(d.eigenvector(2), &[0.0, 0.0, 1.0]);
    }

    #[test]
    fn from_pairs_rejects_ragged() {
        let err = SpectralDecomposition::from_pairs(&[1.0, 2.0], &[vec![1.0, 0.0], vec![1.0]]);
        assert_eq!(err, Err(Error::DimensionMismatch { expected: 2, found: 1 }));
    }

    #[test]
    fn sign_convention() {
        let mut v = [0.2, -0.9, 0.1];
        canonical_sign(&mut v);
        assert_eq!(v, [-0.2, 0.9, -0.1]);
        let mut tie = [-0.5, 0.5];
        canonical_sign(&mut tie);
        assert_eq!(tie, [0.5, -0.5]);
    }
}
