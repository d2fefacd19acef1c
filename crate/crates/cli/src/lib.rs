//! Harness around the `edgereg` library: graph streams, per-graph commands,
//! reproduction suites, counterexample searches, and report output.

pub mod cli;
pub mod commands;
pub mod config;
pub mod generate;
pub mod input;
pub mod pool;
pub mod report;
pub mod reproduce;
pub mod search;
