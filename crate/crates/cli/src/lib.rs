//! Command-line front end for `ivhs-core`: argument handling, text and
//! JSON reports, degeneration spec files and the golden fixture suite.

pub mod command;
pub mod fixtures;
pub mod report;
pub mod spec_file;

pub use command::{build_report, run_command, CliError};
pub use fixtures::run_fixture_suite;
pub use report::Report;
pub use spec_file::load_degeneration_spec;
