//! Reading a code specification file and rendering the build report in both
//! output formats.

use gcqc::cli::{cmd_build, BuildFlags, CodeSpec, ReportDocument};
use gcqc::DistanceOptions;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let spec = CodeSpec::parse(include_str!("../fixtures/discussion.spec"))?;
    let flags = BuildFlags {
        verify_bound: true,
        ..BuildFlags::default()
    };
    let outcome = cmd_build(&spec, &flags, &DistanceOptions::default())?;
    print!("{}", outcome.report.to_text());

    let json = outcome.report.to_json();
    assert_eq!(ReportDocument::from_json(&json)?, outcome.report);
    assert!(outcome.success);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
