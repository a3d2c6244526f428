//! Command-line front end for `ctqw-core`: argument handling, edge-list
//! input, CSV/JSON output and the verification harness.

pub mod commands;
pub mod config;
pub mod edge_list;
pub mod error;
pub mod output;
pub mod verify;

use config::{Command, RunConfig};
pub use error::{CliError, Result};

/// Exit status for a failed verification.
pub const EXIT_VERIFY_FAILED: u8 = 1;
/// Exit status for usage, parse and input errors.
pub const EXIT_USAGE: u8 = 2;

/// Output text plus whether the run succeeded (only `verify` can fail
/// without an error).
pub fn execute(command: &Command) -> Result<(String, bool, RunConfig)> {
    let cfg = RunConfig::from_args(command)?;
    let (text, ok) = match command {
        Command::Spectrum(_) => (commands::spectrum(&cfg)?, true),
        Command::Evolve(_) => (commands::evolve(&cfg)?, true),
        Command::Limit(_) => (commands::limit(&cfg)?, true),
        Command::Verify(_) => verify::run(&cfg, &verify::Formulas::default())?,
    };
    Ok((text, ok, cfg))
}
