//! Library half of the `qwell` command-line tool: run configuration,
//! diagram sampling, report rendering, and oracle verification. The binary
//! in `main.rs` is a thin argument-parsing layer over these functions, so
//! integration tests can drive the same code paths in-process.

pub mod config;
pub mod error;
pub mod report;
pub mod sample;
pub mod verify;

pub use config::{OutputFormat, RunConfig};
pub use error::CliError;
pub use report::{build_report, execute_run, RunReport};
pub use sample::{sample_cycle, DiagramSample};
pub use verify::{execute_verify, VerifyConfig, VerifyTarget};
