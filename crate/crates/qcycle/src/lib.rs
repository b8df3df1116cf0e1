//! JSON formats, seeded pair sampling, threaded enumeration and the `qcycle`
//! command line, on top of `qcycle-core`.

pub mod cli;
pub mod error;
pub mod json;
pub mod parallel;
pub mod sample;

pub use cli::run;
pub use error::CliError;
