//! Experiment runner behind the `aaso` binary.

pub mod analyze;
pub mod bench;
pub mod config;
pub mod cover;
pub mod deployment_io;
pub mod report;
pub mod svg;
