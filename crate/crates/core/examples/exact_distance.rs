//! The exact distance engine: budget, worker count and deterministic
//! witnesses. Set GCQC_WORKERS to change the default worker count.

use gcqc::distance::required_budget_log2;
use gcqc::{min_distance, DistanceOptions, PauliOperator, StabilizerCode};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let gens: Vec<PauliOperator> = ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    let code = StabilizerCode::from_generators(5, gens)?;
    println!("budget for [[5,1]]: 2^{}", required_budget_log2(&code));

    let one = min_distance(&code, &DistanceOptions::default().with_workers(1))?;
    let many = min_distance(&code, &DistanceOptions::default().with_workers(4).exhaustive())?;
    println!(
        "distance {} witness {} after {} elements, same witness with 4 workers",
        one.distance, one.witness, one.enumerated
    );
    assert_eq!(one.distance, 3);
    assert_eq!(one.witness, many.witness);

    // A cap below the budget is refused up front.
    let refused = min_distance(&code, &DistanceOptions::default().with_cap(32));
    println!("with cap 32: {}", refused.unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
