//! Command-line front end for the `one-radical` decision procedures.
//!
//! Subcommands: `decide`, `batch`, `generate`, `verify`. Exit status is 0 for
//! solvable inputs, 1 for not 1-solvable, 2 for unknown and 3 for errors.

pub mod commands;
pub mod parse;
pub mod report;

pub use commands::{run, Cli, CliError};
pub use parse::{parse_coeffs, parse_poly, ParseError};
pub use report::{exit, DecisionReport, SCHEMA_VERSION};
