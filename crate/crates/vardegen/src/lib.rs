//! File formats, reports and the command-line driver for `vardegen-core`.

pub mod cli;
pub mod format;
pub mod fuzz;
pub mod report;
