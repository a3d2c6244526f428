//! Undirected simple graphs and their Laplacian.
//!
//! The Laplacian `A` (degree on the diagonal, `-1` for every edge) doubles as
//! the walk Hamiltonian: the transfer matrix is `T = -A` and `H = -T`.
//! Node indices are 0-based; for star graphs index 0 is the hub.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::matrix::SymmetricMatrix;

/// An unweighted, undirected graph without self-loops or multi-edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    /// Normalized `(lo, hi)` pairs in ascending order.
    edges: Vec<(usize, usize)>,
    degrees: Vec<usize>,
}

impl Graph {
    /// Builds a graph on `n` nodes from an edge list.
    ///
    /// Edges are unordered; `(a, b)` and `(b, a)` are the same edge and
    /// giving both is a duplicate.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::InvalidSize { n, min: 1 });
        }
        let mut set = BTreeSet::new();
        let mut degrees = vec![0; n];
        for (a, b) in edges {
            for node in [a, b] {
                if node >= n {
                    return Err(Error::NodeOutOfRange { node, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { node: a });
            }
            let key = (a.min(b), a.max(b));
            if !set.insert(key) {
                return Err(Error::DuplicateEdge { a: key.0, b: key.1 });
            }
            degrees[a] += 1;
            degrees[b] += 1;
        }
        Ok(Self {
            n,
            edges: set.into_iter().collect(),
            degrees,
        })
    }

    /// Star graph: hub 0 joined to leaves `1..n`.
    pub fn star(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize { n, min: 1 });
        }
        Self::new(n, (1..n).map(|leaf| (0, leaf)))
    }

    /// Complete graph on `n` nodes.
    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize { n, min: 1 });
        }
        Self::new(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(lo, hi)` pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, node: usize) -> usize {
        self.degrees[node]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.binary_search(&(a.min(b), a.max(b))).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        let mut adjacency = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(node) = stack.pop() {
            for &next in &adjacency[node] {
                if !seen[next] {
                    seen[next] = true;
                    reached += 1;
                    stack.push(next);
                }
            }
        }
        reached == self.n
    }

    /// The graph Laplacian, which is also the walk Hamiltonian.
    pub fn laplacian(&self) -> SymmetricMatrix {
        let mut m = SymmetricMatrix::zeros(self.n);
        for (i, &k) in self.degrees.iter().enumerate() {
            m.set(i, i, k as f64);
        }
        for &(a, b) in &self.edges {
            m.set(a, b, -1.0);
        }
        m
    }
}
