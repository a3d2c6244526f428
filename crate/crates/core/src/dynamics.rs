//! Classical and quantum transition probabilities from a spectral
//! decomposition of the Hamiltonian `H = A`.
//!
//! With eigenpairs `(E_n, q_n)` and `w_n = q_n[k] q_n[j]`:
//!
//! ```text
//! p_{k,j}(t) = ∑_n e^{−t E_n} w_n
//! α_{k,j}(t) = ∑_n e^{−i t E_n} w_n,      π_{k,j}(t) = |α_{k,j}(t)|²
//! χ_{k,j}    = ∑_g (∑_{n∈g} w_n)²        (g ranges over degenerate eigenspaces)
//! ```
//!
//! Nothing here clamps to `[0, 1]`; callers see the raw sums.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};
use crate::spectral::{EigenspacePartition, SpectralDecomposition};

/// Complex transition amplitude `α_{k,j}(t)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Amplitude {
    pub re: f64,
    pub im: f64,
}

impl Amplitude {
    pub const ZERO: Self = Self { re: 0.0, im: 0.0 };
    pub const ONE: Self = Self { re: 1.0, im: 0.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    /// `|α|²`.
    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }
}

impl Add for Amplitude {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl AddAssign for Amplitude {
    fn add_assign(&mut self, rhs: Self) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl Mul for Amplitude {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::new(
            self.re * rhs.re - self.im * rhs.im,
            self.re * rhs.im + self.im * rhs.re,
        )
    }
}

/// Which walk to evolve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkKind {
    /// Continuous-time random walk, `e^{−tA}`.
    Classical,
    /// Continuous-time quantum walk, `e^{−itH}`.
    Quantum,
}

fn check_node(d: &SpectralDecomposition, node: usize) -> Result<()> {
    if node >= d.dim() {
        Err(Error::NodeOutOfRange { node, n: d.dim() })
    } else {
        Ok(())
    }
}

/// `w_n = q_n[k] q_n[j]` for every eigenvector.
fn overlap_weights(d: &SpectralDecomposition, j: usize, k: usize) -> Result<Vec<f64>> {
    check_node(d, j)?;
    check_node(d, k)?;
    Ok(d.eigenvectors().map(|q| q[k] * q[j]).collect())
}

fn classical_sum(eigenvalues: &[f64], weights: &[f64], t: f64) -> Result<f64> {
    if t < 0.0 || t.is_nan() {
        return Err(Error::NegativeTime { t });
    }
    Ok(eigenvalues
        .iter()
        .zip(weights)
        .map(|(e, w)| libm::exp(-t * e) * w)
        .sum())
}

fn quantum_sum(eigenvalues: &[f64], weights: &[f64], t: f64) -> Amplitude {
    let mut acc = Amplitude::ZERO;
    for (e, w) in eigenvalues.iter().zip(weights) {
        let (sin, cos) = libm::sincos(t * e);
        acc += Amplitude::new(w * cos, -w * sin);
    }
    acc
}

/// Classical transition probability `p_{k,j}(t)` from node `j` to node `k`.
pub fn classical_probability(d: &SpectralDecomposition, j: usize, k: usize, t: f64) -> Result<f64> {
    let w = overlap_weights(d, j, k)?;
    classical_sum(d.eigenvalues(), &w, t)
}

/// Quantum transition amplitude `α_{k,j}(t) = ⟨k|e^{−itH}|j⟩`.
///
/// Negative `t` runs the walk backwards.
pub fn quantum_amplitude(
    d: &SpectralDecomposition,
    j: usize,
    k: usize,
    t: f64,
) -> Result<Amplitude> {
    let w = overlap_weights(d, j, k)?;
    Ok(quantum_sum(d.eigenvalues(), &w, t))
}

/// Quantum transition probability `π_{k,j}(t) = |α_{k,j}(t)|²`.
pub fn quantum_probability(d: &SpectralDecomposition, j: usize, k: usize, t: f64) -> Result<f64> {
    quantum_amplitude(d, j, k, t).map(Amplitude::norm_sqr)
}

/// Long-time average `χ_{k,j}` of `π_{k,j}(t)`.
///
/// Only cross terms inside one degenerate eigenspace survive the average, so
/// this is `∑_g ⟨k|P_g|j⟩²` with `P_g` the projector onto eigenspace `g`.
pub fn limiting_probability(
    d: &SpectralDecomposition,
    partition: &EigenspacePartition,
    j: usize,
    k: usize,
) -> Result<f64> {
    if partition.dim() != d.dim() {
        return Err(Error::DimensionMismatch {
            expected: d.dim(),
            found: partition.dim(),
        });
    }
    let w = overlap_weights(d, j, k)?;
    Ok(partition
        .groups()
        .iter()
        .map(|g| {
            let element: f64 = w[g.indices.clone()].iter().sum();
            element * element
        })
        .sum())
}

/// Full `χ` matrix; entry `[j][k]` is `χ_{k,j}`.
pub fn limiting_matrix(
    d: &SpectralDecomposition,
    partition: &EigenspacePartition,
) -> Result<Vec<Vec<f64>>> {
    let n = d.dim();
    (0..n)
        .map(|j| (0..n).map(|k| limiting_probability(d, partition, j, k)).collect())
        .collect()
}

/// Row-major `n × n` matrix of `α_{k,j}(t)`, entry `k * n + j`.
pub fn amplitude_matrix(d: &SpectralDecomposition, t: f64) -> Vec<Amplitude> {
    let n = d.dim();
    let phases: Vec<Amplitude> = d
        .eigenvalues()
        .iter()
        .map(|e| {
            let (sin, cos) = libm::sincos(t * e);
            Amplitude::new(cos, -sin)
        })
        .collect();
    let mut out = Vec::with_capacity(n * n);
    for k in 0..n {
        for j in 0..n {
            let mut acc = Amplitude::ZERO;
            for (q, phase) in d.eigenvectors().zip(&phases) {
                let w = q[k] * q[j];
                acc += Amplitude::new(w * phase.re, w * phase.im);
            }
            out.push(acc);
        }
    }
    out
}

/// Sampled probabilities for one `(source, target)` pair.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub source: usize,
    pub target: usize,
    pub kind: WalkKind,
    times: Vec<f64>,
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.times.iter().copied().zip(self.values.iter().copied())
    }
}

/// Samples `p_{k,j}` or `π_{k,j}` on a strictly ascending time grid.
///
/// Values are bit-identical to calling [`classical_probability`] or
/// [`quantum_probability`] at each time.
pub fn evolve_series(
    d: &SpectralDecomposition,
    j: usize,
    k: usize,
    times: &[f64],
    kind: WalkKind,
) -> Result<TimeSeries> {
    if let Some(index) = times.windows(2).position(|w| w[0].partial_cmp(&w[1]) != Some(core::cmp::Ordering::Less)) {
        return Err(Error::UnsortedGrid { index: index + 1 });
    }
    let w = overlap_weights(d, j, k)?;
    let values = times
        .iter()
        .enumerate()
        .map(|(index, &t)| match kind {
            WalkKind::Classical => {
                classical_sum(d.eigenvalues(), &w, t).map_err(|e| Error::Sample {
                    index,
                    source: Box::new(e),
                })
            }
            WalkKind::Quantum => Ok(quantum_sum(d.eigenvalues(), &w, t).norm_sqr()),
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(TimeSeries {
        source: j,
        target: k,
        kind,
        times: times.to_vec(),
        values,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::spectral::{eigendecompose, group_eigenspaces, DEFAULT_DEGENERACY_TOL};
    use core::f64::consts::PI;

    fn star(n: usize) -> SpectralDecomposition {
        eigendecompose(&Graph::star(n).unwrap().laplacian()).unwrap()
    }

    #[test]
    fn classical_identity_at_zero() {
        let d = star(100);
        assert!((classical_probability(&d, 0, 0, 0.0).unwrap() - 1.0).abs() < 1e-12);
        assert!(classical_probability(&d, 0, 3, 0.0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn classical_hub_return_short_time() {
        // 1/N + e^{-Nt}(N-1)/N at N = 100, t = 0.05
        let expected = 0.01 + libm::exp(-5.0) * 0.99;
        let d = star(100);
        let got = classical_probability(&d, 0, 0, 0.05).unwrap();
        assert!((got - expected).abs() < 1e-12);
        assert!((got - 0.016670).abs() < 1e-6);
    }

    #[test]
    fn classical_rejects_negative_time() {
        let d = star(4);
        assert_eq!(
            classical_probability(&d, 0, 0, -1.0),
            Err(Error::NegativeTime { t: -1.0 })
        );
    }

    #[test]
    fn classical_equipartition() {
        let d = star(10);
        for k in 0..10 {
            assert!((classical_probability(&d, 1, k, 60.0).unwrap() - 0.1).abs() < 1e-12);
        }
    }

    #[test]
    fn amplitude_at_zero_is_identity() {
        let d = star(6);
        let a = quantum_amplitude(&d, 2, 2, 0.0).unwrap();
        assert!((a.re - 1.0).abs() < 1e-12 && a.im.abs() < 1e-12);
        let b = quantum_amplitude(&d, 2, 4, 0.0).unwrap();
        assert!(b.norm_sqr() < 1e-24);
    }

    #[test]
    fn k2_hub_return_vanishes() {
        let d = star(2);
        assert!(quantum_probability(&d, 0, 0, PI / 2.0).unwrap() < 1e-24);
        // leaf to leaf on two nodes is the same as the hub return
        assert!((quantum_probability(&d, 1, 1, PI / 2.0).unwrap()).abs() < 1e-24);
        assert!((quantum_probability(&d, 0, 1, PI / 2.0).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn star_revival_and_minimum() {
        let d = star(100);
        let revival = quantum_probability(&d, 0, 0, 2.0 * PI / 100.0).unwrap();
        assert!((revival - 1.0).abs() < 1e-10);
        let hub_leaf = quantum_probability(&d, 0, 1, PI / 100.0).unwrap();
        assert!((hub_leaf - 4e-4).abs() < 1e-12);
    }

    #[test]
    fn quantum_symmetric_in_pair() {
        let d = star(7);
        for t in [0.3, 1.7, -2.2] {
            let a = quantum_probability(&d, 1, 4, t).unwrap();
            let b = quantum_probability(&d, 4, 1, t).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn limiting_values() {
        let d = star(100);
        let p = group_eigenspaces(&d, DEFAULT_DEGENERACY_TOL);
        assert!((limiting_probability(&d, &p, 0, 0).unwrap() - 0.9802).abs() < 1e-10);

        let d2 = star(2);
        let p2 = group_eigenspaces(&d2, DEFAULT_DEGENERACY_TOL);
        assert!((limiting_probability(&d2, &p2, 0, 1).unwrap() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn limiting_dimension_mismatch() {
        let d = star(5);
        let p = group_eigenspaces(&star(4), DEFAULT_DEGENERACY_TOL);
        assert_eq!(
            limiting_probability(&d, &p, 0, 0),
            Err(Error::DimensionMismatch { expected: 5, found: 4 })
        );
    }

    #[test]
    fn series_matches_pointwise() {
        let d = star(100);
        let grid = [0.0, 2.0 * PI / 100.0];
        let s = evolve_series(&d, 0, 0, &grid, WalkKind::Quantum).unwrap();
        for (t, v) in s.iter() {
            assert_eq!(v, quantum_probability(&d, 0, 0, t).unwrap());
            assert!((v - 1.0).abs() < 1e-10);
        }
        let c = evolve_series(&d, 0, 0, &[0.0], WalkKind::Classical).unwrap();
        assert!((c.values()[0] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn series_classical_hub_decreases() {
        let d = star(100);
        let grid: Vec<f64> = (0..=500).map(|i| i as f64 * 0.001).collect();
        let s = evolve_series(&d, 0, 0, &grid, WalkKind::Classical).unwrap();
        assert!(s.values().windows(2).all(|w| w[1] <= w[0]));
        // strict while e^{-Nt} is still resolvable next to 1/N
        assert!(s.values()[..=300].windows(2).all(|w| w[1] < w[0]));
        assert!(s.values().iter().all(|&v| v > 0.01));
    }

    #[test]
    fn series_errors() {
        let d = star(3);
        assert_eq!(
            evolve_series(&d, 0, 0, &[0.0, 0.0], WalkKind::Quantum),
            Err(Error::UnsortedGrid { index: 1 })
        );
        let err = evolve_series(&d, 0, 0, &[-1.0, 0.0], WalkKind::Classical).unwrap_err();
        assert!(matches!(err, Error::Sample { index: 0, .. }));
        assert!(matches!(
            evolve_series(&d, 0, 3, &[0.0], WalkKind::Quantum),
            Err(Error::NodeOutOfRange { node: 3, n: 3 })
        ));
    }

    #[test]
    fn amplitude_matrix_matches_pairs() {
        let d = star(5);
        let m = amplitude_matrix(&d, 0.7);
        for k in 0..5 {
            for j in 0..5 {
                let a = quantum_amplitude(&d, j, k, 0.7).unwrap();
                let b = m[k * 5 + j];
                assert!((a.re - b.re).abs() < 1e-14 && (a.im - b.im).abs() < 1e-14);
            }
        }
    }
}
