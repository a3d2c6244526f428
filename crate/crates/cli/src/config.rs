//! Command-line arguments and their validated form, [`RunConfig`].
//!
//! Node labels on the command line are 1-based with the star hub as node 1;
//! everything past this module works with 0-based indices.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ctqw_core::spectral::DEFAULT_DEGENERACY_TOL;
use ctqw_core::Graph;
use serde::Serialize;

use crate::edge_list::load_edge_list;
use crate::error::{CliError, Result};

/// Largest size `verify` accepts.
pub const MAX_VERIFY_N: usize = 512;

#[derive(Debug, Parser)]
#[command(name = "ctqw", version, about = "Quantum and classical continuous-time walks on graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues (with multiplicities) of the graph Hamiltonian.
    Spectrum(RunArgs),
    /// Transition probability time series for one node pair.
    Evolve(RunArgs),
    /// Long-time limiting probabilities: one pair, the full matrix, or a size sweep.
    Limit(RunArgs),
    /// Check closed-form results against the numerical spectral path.
    Verify(RunArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyArg {
    Star,
    Complete,
    File,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KindArg {
    Classical,
    Quantum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// Graph family; defaults to `file` when `--edge-list` is given, else `star`.
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Graph size for generated families.
    #[arg(long)]
    pub n: Option<usize>,
    /// Inclusive size range `A:B` (limit sweeps, verify).
    #[arg(long, value_parser = parse_range)]
    pub n_range: Option<(usize, usize)>,
    /// 1-based source node (the hub of a star is 1).
    #[arg(long)]
    pub source: Option<usize>,
    /// 1-based target node.
    #[arg(long)]
    pub target: Option<usize>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub t_start: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub t_stop: f64,
    /// Number of grid points, including both ends.
    #[arg(long, default_value_t = 1001)]
    pub steps: usize,
    #[arg(long, value_enum, default_value = "quantum")]
    pub kind: KindArg,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    #[arg(long, default_value_t = DEFAULT_DEGENERACY_TOL)]
    pub degeneracy_tol: f64,
    #[arg(long)]
    pub edge_list: Option<PathBuf>,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Also list eigenvectors (spectrum only).
    #[arg(long)]
    pub vectors: bool,
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected A:B, got {s:?}"))?;
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start {a:?}"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end {b:?}"))?;
    if a > b {
        return Err(format!("empty range {a}:{b}"));
    }
    Ok((a, b))
}

/// Which graph to build.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Star,
    Complete,
    File(PathBuf),
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Complete => "complete",
            Family::File(_) => "file",
        }
    }

    /// Builds the graph; `n` is ignored for edge-list files.
    pub fn build(&self, n: usize) -> Result<Graph> {
        Ok(match self {
            Family::Star => Graph::star(n)?,
            Family::Complete => Graph::complete(n)?,
            Family::File(path) => load_edge_list(path)?,
        })
    }
}

/// Time grid: `steps` evenly spaced points from `start` to `stop`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeGrid {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl TimeGrid {
    pub fn points(&self) -> Vec<f64> {
        if self.steps == 1 {
            return vec![self.start];
        }
        let span = self.stop - self.start;
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.stop
                } else {
                    self.start + span * (i as f64 / last)
                }
            })
            .collect()
    }
}

/// What to compute for a node pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Classical,
    Quantum,
    Limit,
}

/// A validated run. Node labels are stored 1-based, as given.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub family: Family,
    pub n: Option<usize>,
    pub n_range: Option<(usize, usize)>,
    pub source: Option<usize>,
    pub target: Option<usize>,
    pub grid: TimeGrid,
    pub kind: Kind,
    pub format: Option<Format>,
    pub degeneracy_tol: f64,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[serde(skip)]
    pub vectors: bool,
}

impl RunConfig {
    pub fn from_args(command: &Command) -> Result<Self> {
        let (args, kind) = match command {
            Command::Spectrum(a) | Command::Verify(a) => (a, Kind::Limit),
            Command::Limit(a) => (a, Kind::Limit),
            Command::Evolve(a) => (
                a,
                match a.kind {
                    KindArg::Classical => Kind::Classical,
                    KindArg::Quantum => Kind::Quantum,
                },
            ),
        };

        let family = match (args.family, &args.edge_list) {
            (None | Some(FamilyArg::File), Some(path)) => Family::File(path.clone()),
            (Some(FamilyArg::File), None) => {
                return Err(CliError::usage("--family file needs --edge-list PATH"))
            }
            (Some(_), Some(_)) => {
                return Err(CliError::usage("--edge-list only applies to --family file"))
            }
            (None | Some(FamilyArg::Star), None) => Family::Star,
            (Some(FamilyArg::Complete), None) => Family::Complete,
        };
        if args.degeneracy_tol.is_nan() || args.degeneracy_tol <= 0.0 {
            return Err(CliError::usage("--degeneracy-tol must be positive"));
        }
        if args.steps == 0 {
            return Err(CliError::usage("--steps must be at least 1"));
        }
        if !args.t_start.is_finite() || !args.t_stop.is_finite() {
            return Err(CliError::usage("time bounds must be finite"));
        }
        if args.steps > 1 && args.t_stop <= args.t_start {
            return Err(CliError::usage("--t-stop must exceed --t-start when --steps > 1"));
        }
        if kind == Kind::Classical && args.t_start < 0.0 {
            return Err(CliError::usage("classical evolution needs --t-start >= 0"));
        }
        for (flag, label) in [("--source", args.source), ("--target", args.target)] {
            if label == Some(0) {
                return Err(CliError::usage(format!("{flag} labels start at 1")));
            }
        }
        if let (Some(n), Family::Star | Family::Complete) = (args.n, &family) {
            if n == 0 {
                return Err(CliError::usage("--n must be at least 1"));
            }
        }
        if let Some((a, _)) = args.n_range {
            if a == 0 {
                return Err(CliError::usage("--n-range must start at 1 or above"));
            }
        }

        Ok(Self {
            family,
            n: args.n,
            n_range: args.n_range,
            source: args.source,
            target: args.target,
            grid: TimeGrid {
                start: args.t_start,
                stop: args.t_stop,
                steps: args.steps,
            },
            kind,
            format: args.format,
            degeneracy_tol: args.degeneracy_tol,
            output: args.output.clone(),
            vectors: args.vectors,
        })
    }

    /// Builds the single graph this run is about.
    pub fn graph(&self) -> Result<Graph> {
        match (&self.family, self.n) {
            (Family::File(_), _) => self.family.build(0),
            (_, Some(n)) => self.family.build(n),
            (_, None) => Err(CliError::usage(format!(
                "--family {} needs --n",
                self.family.name()
            ))),
        }
    }

    /// Converts a 1-based label to an index, checking it against `n`.
    pub fn node_index(flag: &str, label: usize, n: usize) -> Result<usize> {
        if label == 0 || label > n {
            return Err(CliError::usage(format!(
                "{flag} {label} is outside 1..={n}"
            )));
        }
        Ok(label - 1)
    }

    /// `(source, target)` as 0-based indices; both must be given.
    pub fn pair(&self, n: usize) -> Result<(usize, usize)> {
        match (self.source, self.target) {
            (Some(s), Some(t)) => Ok((
                Self::node_index("--source", s, n)?,
                Self::node_index("--target", t, n)?,
            )),
            _ => Err(CliError::usage("--source and --target are both required")),
        }
    }
}
