//! Command-line front end for `multiarr`: the arrangement file format, the
//! bundled examples and the reports behind each subcommand.

pub mod commands;
pub mod corpus;
pub mod file;
pub mod report;
