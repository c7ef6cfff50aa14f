//! File formats, sampling, enumeration, and the command-line front end for
//! two-dimensional cyclic codes built on `tdc-core`.

pub mod cli;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod sample;

pub use error::CliError;
