//! Exact eigenbases and transition probabilities for star and complete
//! graphs.
//!
//! Star graphs use index 0 for the hub and `1..n` for the leaves. Every
//! ordered pair of star nodes falls into one of four [`StarPairKind`]s, and
//! each kind has its own closed form for the quantum, classical and
//! long-time probabilities. The polynomials in `N` are kept unsimplified so
//! that each one reads term for term against its published form.
//!
//! Eigenbases are listed in construction order: for the star, the `N − 2`
//! leaf-difference states (`E = 1`), then the uniform state (`E = 0`), then
//! the hub state (`E = N`); for the complete graph, the `N − 1` difference
//! states (`E = N`) then the uniform state (`E = 0`).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::spectral::SpectralDecomposition;

/// The four distinct transition types on a star graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StarPairKind {
    /// Hub back to hub, `π_{1,1}`.
    CentralReturn,
    /// Hub to a leaf or a leaf to the hub, `π_{2,1} ≡ π_{1,2}`.
    CentralToLeaf,
    /// Leaf back to itself, `π_{2,2}`.
    LeafReturn,
    /// One leaf to a different leaf, `π_{3,2}`.
    LeafToOtherLeaf,
}

impl StarPairKind {
    pub const ALL: [Self; 4] = [
        Self::CentralReturn,
        Self::CentralToLeaf,
        Self::LeafReturn,
        Self::LeafToOtherLeaf,
    ];

    /// A 0-based `(source, target)` pair of this kind.
    pub fn representative(self) -> (usize, usize) {
        match self {
            Self::CentralReturn => (0, 0),
            Self::CentralToLeaf => (0, 1),
            Self::LeafReturn => (1, 1),
            Self::LeafToOtherLeaf => (1, 2),
        }
    }

    /// Smallest star size on which this kind occurs.
    pub fn min_size(self) -> usize {
        match self {
            Self::LeafToOtherLeaf => 3,
            _ => 2,
        }
    }

    pub fn quantum_formula(self) -> &'static str {
        match self {
            Self::CentralReturn => "eq8",
            Self::CentralToLeaf => "eq9",
            Self::LeafReturn => "eq10",
            Self::LeafToOtherLeaf => "eq11",
        }
    }

    pub fn limiting_formula(self) -> &'static str {
        match self {
            Self::CentralReturn => "eq12-line1",
            Self::CentralToLeaf => "eq12-line2",
            Self::LeafReturn => "eq12-line3",
            Self::LeafToOtherLeaf => "eq12-line4",
        }
    }

    pub fn classical_formula(self) -> &'static str {
        match self {
            Self::CentralReturn => "eq13-line1",
            Self::CentralToLeaf => "eq13-line2",
            Self::LeafReturn => "eq13-line3",
            Self::LeafToOtherLeaf => "eq13-line4",
        }
    }
}

/// Formula tag for the complete-graph quantum probability.
pub fn complete_quantum_formula(same_node: bool) -> &'static str {
    if same_node {
        "eq15-line1"
    } else {
        "eq15-line2"
    }
}

/// Classifies the transition from `j` to `k` on a star of size `n`.
pub fn classify_star_pair(n: usize, j: usize, k: usize) -> Result<StarPairKind> {
    if n < 2 {
        return Err(Error::InvalidSize { n, min: 2 });
    }
    for node in [j, k] {
        if node >= n {
            return Err(Error::NodeOutOfRange { node, n });
        }
    }
    Ok(match (j, k) {
        (0, 0) => StarPairKind::CentralReturn,
        (0, _) | (_, 0) => StarPairKind::CentralToLeaf,
        _ if j == k => StarPairKind::LeafReturn,
        _ => StarPairKind::LeafToOtherLeaf,
    })
}

fn basis_vector(n: usize, i: usize) -> Vec<f64> {
    let mut v = vec![0.0; n];
    v[i] = 1.0;
    v
}

fn check_star_size(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::InvalidSize { n, min: 2 })
    } else {
        Ok(())
    }
}

/// Star eigenvalues in construction order: `1` (×`n−2`), `0`, `n`.
pub fn star_eigenvalues(n: usize) -> Result<Vec<f64>> {
    check_star_size(n)?;
    let mut values = vec![1.0; n - 2];
    values.push(0.0);
    values.push(n as f64);
    Ok(values)
}

/// The non-orthogonal star eigenstates: leaf differences `|i+2⟩ − |2⟩`,
/// the uniform state, and `∑|i⟩ − N|1⟩` (1-based labels, hub = 1).
pub fn star_raw_eigenstates(n: usize) -> Result<Vec<Vec<f64>>> {
    check_star_size(n)?;
    let mut states: Vec<Vec<f64>> = (1..=n - 2)
        .map(|i| {
            let mut v = basis_vector(n, i + 1);
            v[1] -= 1.0;
            v
        })
        .collect();
    states.push(vec![1.0; n]);
    let mut hub = vec![1.0; n];
    hub[0] -= n as f64;
    states.push(hub);
    Ok(states)
}

/// Orthogonal but unnormalized star eigenstates:
/// `|i+2⟩ − (1/i) ∑_{j=2}^{i+1} |j⟩` for the leaf block, raw states otherwise.
pub fn star_orthogonal_states(n: usize) -> Result<Vec<Vec<f64>>> {
    let mut states = star_raw_eigenstates(n)?;
    for (offset, v) in states.iter_mut().take(n - 2).enumerate() {
        let i = offset + 1;
        let share = 1.0 / i as f64;
        *v = basis_vector(n, i + 1);
        for x in &mut v[1..=i] {
            *x = -share;
        }
    }
    Ok(states)
}

/// Orthonormal star eigenbasis in construction order.
pub fn star_basis(n: usize) -> Result<Vec<Vec<f64>>> {
    check_star_size(n)?;
    let nf = n as f64;
    let mut basis: Vec<Vec<f64>> = (1..=n - 2)
        .map(|i| {
            let fi = i as f64;
            let mut q = vec![0.0; n];
            q[i + 1] = libm::sqrt(fi / (fi + 1.0));
            let tail = -libm::sqrt(1.0 / (fi * (fi + 1.0)));
            for x in &mut q[1..=i] {
                *x = tail;
            }
            q
        })
        .collect();
    basis.push(vec![libm::sqrt(1.0 / nf); n]);
    let mut hub = vec![1.0 / libm::sqrt(nf * (nf - 1.0)); n];
    hub[0] -= libm::sqrt(nf / (nf - 1.0));
    basis.push(hub);
    Ok(basis)
}

/// Exact star eigendecomposition, sorted ascending like any other
/// [`SpectralDecomposition`].
pub fn star_eigensystem(n: usize) -> Result<SpectralDecomposition> {
    SpectralDecomposition::from_pairs(&star_eigenvalues(n)?, &star_basis(n)?)
}

/// Complete-graph eigenvalues in construction order: `n` (×`n−1`), `0`.
pub fn complete_eigenvalues(n: usize) -> Result<Vec<f64>> {
    if n == 0 {
        return Err(Error::InvalidSize { n, min: 1 });
    }
    let mut values = vec![n as f64; n - 1];
    values.push(0.0);
    Ok(values)
}

/// Non-orthogonal complete-graph eigenstates `|i+1⟩ − |1⟩` and `∑|j⟩`.
pub fn complete_raw_eigenstates(n: usize) -> Result<Vec<Vec<f64>>> {
    if n == 0 {
        return Err(Error::InvalidSize { n, min: 1 });
    }
    let mut states: Vec<Vec<f64>> = (1..n)
        .map(|i| {
            let mut v = basis_vector(n, i);
            v[0] -= 1.0;
            v
        })
        .collect();
    states.push(vec![1.0; n]);
    Ok(states)
}

/// Orthonormal complete-graph eigenbasis in construction order.
pub fn complete_basis(n: usize) -> Result<Vec<Vec<f64>>> {
    if n == 0 {
        return Err(Error::InvalidSize { n, min: 1 });
    }
    let mut basis: Vec<Vec<f64>> = (1..n)
        .map(|i| {
            let fi = i as f64;
            let mut q = vec![0.0; n];
            q[i] = libm::sqrt(fi / (fi + 1.0));
            let tail = -libm::sqrt(1.0 / (fi * (fi + 1.0)));
            for x in &mut q[..i] {
                *x = tail;
            }
            q
        })
        .collect();
    basis.push(vec![libm::sqrt(1.0 / n as f64); n]);
    Ok(basis)
}

pub fn complete_eigensystem(n: usize) -> Result<SpectralDecomposition> {
    SpectralDecomposition::from_pairs(&complete_eigenvalues(n)?, &complete_basis(n)?)
}

/// Closed-form `π_{k,j}(t)` on a star of size `n >= 2`.
pub fn star_quantum_probability(kind: StarPairKind, n: usize, t: f64) -> f64 {
    debug_assert!(n >= 2, "star closed forms need n >= 2");
    let n = n as f64;
    let n2 = n * n;
    match kind {
        StarPairKind::CentralReturn => {
            (n2 - 2.0 * n + 2.0) / n2 + 2.0 * (n - 1.0) / n2 * libm::cos(n * t)
        }
        StarPairKind::CentralToLeaf => 2.0 / n2 - 2.0 / n2 * libm::cos(n * t),
        StarPairKind::LeafReturn => {
            let scale = 1.0 / (n2 * (n - 1.0) * (n - 1.0));
            scale
                * ((n2 * n2 - 4.0 * n2 * n + 5.0 * n2 - 2.0 * n + 2.0)
                    + (2.0 * n2 * n - 6.0 * n2 + 4.0 * n) * libm::cos(t)
                    + (2.0 * n2 - 4.0 * n) * libm::cos((n - 1.0) * t)
                    + (2.0 * n - 2.0) * libm::cos(n * t))
        }
        StarPairKind::LeafToOtherLeaf => {
            let scale = 2.0 / (n2 * (n - 1.0) * (n - 1.0));
            scale
                * ((n2 - n + 1.0) + (n - n2) * libm::cos(t) - n * libm::cos((n - 1.0) * t)
                    + (n - 1.0) * libm::cos(n * t))
        }
    }
}

/// Closed-form long-time average `χ_{k,j}` on a star of size `n >= 2`.
pub fn star_limiting_probability(kind: StarPairKind, n: usize) -> f64 {
    debug_assert!(n >= 2, "star closed forms need n >= 2");
    let n = n as f64;
    let n2 = n * n;
    match kind {
        StarPairKind::CentralReturn => (n2 - 2.0 * n + 2.0) / n2,
        StarPairKind::CentralToLeaf => 2.0 / n2,
        StarPairKind::LeafReturn => {
            (n2 * n2 - 4.0 * n2 * n + 5.0 * n2 - 2.0 * n + 2.0) / n2 / ((n - 1.0) * (n - 1.0))
        }
        StarPairKind::LeafToOtherLeaf => 2.0 * (n2 - n + 1.0) / n2 / ((n - 1.0) * (n - 1.0)),
    }
}

/// Closed-form classical `p_{k,j}(t)` on a star of size `n >= 2`.
pub fn star_classical_probability(kind: StarPairKind, n: usize, t: f64) -> Result<f64> {
    debug_assert!(n >= 2, "star closed forms need n >= 2");
    if t < 0.0 || t.is_nan() {
        return Err(Error::NegativeTime { t });
    }
    let n = n as f64;
    let fast = libm::exp(-n * t);
    let slow = libm::exp(-t);
    Ok(match kind {
        StarPairKind::CentralReturn => 1.0 / n + fast * (n - 1.0) / n,
        StarPairKind::CentralToLeaf => 1.0 / n - fast / n,
        StarPairKind::LeafReturn => {
            1.0 / n + (n - 2.0) / (n - 1.0) * slow + fast / n / (n - 1.0)
        }
        StarPairKind::LeafToOtherLeaf => 1.0 / n - slow / (n - 1.0) + fast / n / (n - 1.0),
    })
}

/// Closed-form `π_{i,j}(t)` on the complete graph of size `n`.
pub fn complete_quantum_probability(same_node: bool, n: usize, t: f64) -> f64 {
    let n = n as f64;
    let n2 = n * n;
    if same_node {
        (n2 - 2.0 * n + 2.0) / n2 + 2.0 * (n - 1.0) / n2 * libm::cos(n * t)
    } else {
        2.0 / n2 - 2.0 / n2 * libm::cos(n * t)
    }
}
