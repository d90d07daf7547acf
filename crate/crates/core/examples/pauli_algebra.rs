//! Pauli operators modulo phase: products, commutation and weight.

use gcqc::PauliOperator;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a: PauliOperator = "XXZI".parse()?;
    let b: PauliOperator = "ZIZY".parse()?;

    let ab = a.multiply(&b)?;
    println!("{a} * {b} = {ab}");
    assert_eq!(ab.to_string(), "YXIY");

    // One overlapping X/Z position: they anticommute.
    println!("{a} and {b} commute: {}", a.commutes_with(&b)?);
    assert!(!a.commutes_with(&b)?);

    println!("weight({ab}) = {}, support = {:?}", ab.weight(), ab.support());

    // Place a 2-qubit operator in the second of three blocks.
    let local: PauliOperator = "XZ".parse()?;
    let embedded = local.tensor_embed(1, 3)?;
    println!("{local} in block 1 of 3: {embedded}");
    assert_eq!(embedded.to_string(), "IIXZII");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
