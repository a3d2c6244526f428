//! Continuous-time quantum and classical walks on graphs.
//!
//! The crate builds graph Laplacians, diagonalizes them with a Jacobi
//! eigensolver, and evaluates transition probabilities and long-time
//! averages from the resulting spectrum. For star and complete graphs it also
//! carries exact eigenbases and closed-form probabilities, which serve as
//! oracles for the numerical path.
//!
//! ```
//! use ctqw_core::{dynamics, spectral, Graph};
//!
//! let h = Graph::star(5).unwrap().laplacian();
//! let d = spectral::eigendecompose(&h).unwrap();
//! let p = dynamics::quantum_probability(&d, 0, 0, 0.0).unwrap();
//! assert!((p - 1.0).abs() < 1e-12);
//! ```
//!
//! `no_std`; needs `alloc`.
#![no_std]

extern crate alloc;

pub mod closedform;
pub mod dynamics;
mod error;
pub mod graph;
pub mod matrix;
pub mod spectral;

pub use dynamics::{Amplitude, TimeSeries, WalkKind};
pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::SymmetricMatrix;
pub use spectral::{EigenspacePartition, SpectralDecomposition};
