//! Every block of a product of lifted normalizer elements is either the
//! identity or at least as heavy as the inner distance of its level. This is
//! the ingredient behind the concatenated distance bound.

use gcqc::cli::CodeSpec;
use gcqc::{build_gcqc, verify_block_weights, BuildOptions, DistanceOptions, BlockWeightOptions, BlockWeightOutcome};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let text = include_str!("../fixtures/example1.spec");
    let spec = CodeSpec::parse(text)?;
    let opts = DistanceOptions::default();
    let chain = spec.chain()?.unwrap();
    let result = build_gcqc(&chain, &spec.outer_codes(&opts)?, &BuildOptions::default())?;

    let outcome = verify_block_weights(&result, &BlockWeightOptions::default());
    println!("{outcome:?}");
    assert!(outcome.holds());

    // Claiming a larger inner distance than the chain has is caught.
    let mut inflated = result.clone();
    inflated.levels[0].inner_distance = 3;
    match verify_block_weights(&inflated, &BlockWeightOptions::default()) {
        BlockWeightOutcome::Counterexample { left, right, product_weight, .. } => {
            println!("counterexample: {left} * {right} has weight {product_weight}");
        }
        other => panic!("expected a counterexample, got {other:?}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
