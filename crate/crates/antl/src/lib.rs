//! Command-line driver, JSON formats and verification suites for `antl-core`.

pub mod cli;
pub mod json;
pub mod verify;
