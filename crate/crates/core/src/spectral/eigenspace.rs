use alloc::vec::Vec;
use core::ops::Range;

use super::SpectralDecomposition;

/// Default absolute gap below which two eigenvalues count as degenerate.
pub const DEFAULT_DEGENERACY_TOL: f64 = 1e-8;

/// One degenerate eigenspace: a contiguous run of sorted eigenvalue indices.
#[derive(Debug, Clone, PartialEq)]
pub struct Eigenspace {
    pub indices: Range<usize>,
    /// Mean of the eigenvalues in the group.
    pub eigenvalue: f64,
}

impl Eigenspace {
    pub fn multiplicity(&self) -> usize {
        self.indices.len()
    }
}

/// Partition of eigenvalue indices into degenerate classes.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenspacePartition {
    n: usize,
    groups: Vec<Eigenspace>,
}

impl EigenspacePartition {
    /// Splits ascending `values` wherever a consecutive gap is `>= tol`.
    pub fn from_sorted(values: &[f64], tol: f64) -> Self {
        debug_assert!(values.windows(2).all(|w| w[0] <= w[1]), "values must be sorted");
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 1..=values.len() {
            if i == values.len() || values[i] - values[i - 1] >= tol {
                let slice = &values[start..i];
                groups.push(Eigenspace {
                    indices: start..i,
                    eigenvalue: slice.iter().sum::<f64>() / slice.len() as f64,
                });
                start = i;
            }
        }
        Self {
            n: values.len(),
            groups,
        }
    }

    /// Number of eigenvalue indices covered.
    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn groups(&self) -> &[Eigenspace] {
        &self.groups
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.groups.iter().map(Eigenspace::multiplicity).collect()
    }

    pub fn representatives(&self) -> Vec<f64> {
        self.groups.iter().map(|g| g.eigenvalue).collect()
    }
}

/// Groups the eigenvalues of `d` into degenerate eigenspaces.
pub fn group_eigenspaces(d: &SpectralDecomposition, tol: f64) -> EigenspacePartition {
    EigenspacePartition::from_sorted(d.eigenvalues(), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn star_five_groups() {
        let p = EigenspacePartition::from_sorted(&[0.0, 1.0 - 1e-12, 1.0, 1.0 + 1e-12, 5.0], 1e-8);
        assert_eq!(p.sizes(), vec![1, 3, 1]);
    }

    #[test]
    fn distinct_values_are_singletons() {
        let p = EigenspacePartition::from_sorted(&[0.0, 0.5, 1.0, 2.0], 1e-8);
        assert_eq!(p.sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn complete_six_groups() {
        let p = EigenspacePartition::from_sorted(&[0.0, 6.0, 6.0, 6.0, 6.0, 6.0], 1e-8);
        assert_eq!(p.sizes(), vec![1, 5]);
        assert_eq!(p.representatives(), vec![0.0, 6.0]);
    }

    #[test]
    fn gap_equal_to_tol_splits() {
        let p = EigenspacePartition::from_sorted(&[0.0, 0.5], 0.5);
        assert_eq!(p.sizes(), vec![1, 1]);
        let p = EigenspacePartition::from_sorted(&[0.0, 0.25], 0.5);
        assert_eq!(p.sizes(), vec![2]);
    }

    #[test]
    fn empty_input() {
        let p = EigenspacePartition::from_sorted(&[], 1e-8);
        assert!(p.is_empty());
    }
}
