use alloc::boxed::Box;
use core::fmt;

/// Errors produced by the walk engine.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A graph or closed form was requested with an unsupported size.
    InvalidSize { n: usize, min: usize },
    /// Node index outside `0..n`.
    NodeOutOfRange { node: usize, n: usize },
    SelfLoop { node: usize },
    DuplicateEdge { a: usize, b: usize },
    /// Matrix input was not square or not symmetric.
    NotSymmetric { row: usize, col: usize },
    DimensionMismatch { expected: usize, found: usize },
    /// The Jacobi iteration hit its sweep cap.
    NoConvergence { sweeps: usize, off_diagonal: f64 },
    /// Gram-Schmidt found a vector inside the span of its predecessors.
    DependentVector { index: usize, residual: f64 },
    /// Classical diffusion is only defined for `t >= 0`.
    NegativeTime { t: f64 },
    /// Time grid is not strictly ascending at `index`.
    UnsortedGrid { index: usize },
    /// A sample inside a time series failed.
    Sample { index: usize, source: Box<Error> },
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidSize { n, min } => write!(f, "invalid size {n}: must be at least {min}"),
            Error::NodeOutOfRange { node, n } => {
                write!(f, "node index {node} out of range for {n} nodes")
            }
            Error::SelfLoop { node } => write!(f, "self-loop at node {node}"),
            Error::DuplicateEdge { a, b } => write!(f, "duplicate edge {a}-{b}"),
            Error::NotSymmetric { row, col } => {
                write!(f, "matrix is not symmetric at ({row}, {col})")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NoConvergence { sweeps, off_diagonal } => write!(
                f,
                "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})"
            ),
            Error::DependentVector { index, residual } => write!(
                f,
                "vector {index} is linearly dependent on its predecessors (residual norm {residual:e})"
            ),
            Error::NegativeTime { t } => write!(f, "negative time {t} for classical evolution"),
            Error::UnsortedGrid { index } => {
                write!(f, "time grid is not strictly ascending at index {index}")
            }
            Error::Sample { index, source } => write!(f, "sample {index}: {source}"),
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::Sample { source, .. } => Some(source.as_ref()),
            _ => None,
        }
    }
}
