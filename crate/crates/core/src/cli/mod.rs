//! Specification files, reports and the command pipelines behind the `gcqc`
//! binary.

mod commands;
mod report;
mod specfile;

pub use commands::{cmd_build, cmd_distance, cmd_inspect, load_spec, BuildFlags, CliError, CommandOutcome};
pub use report::{ReportDocument, ReportParseError, Value};
pub use specfile::{ChainSpec, CodeSpec, InnerSpec, OuterSpec, SpecError};
