//! Nested subcodes B_1 ⊃ B_2 ⊃ B_3 of a [[4,2,1]] code and the coset codes
//! between consecutive levels.

use gcqc::{DistanceOptions, LogicalPair, NestingStrategy, PauliOperator, StabilizerCode, SubcodeChain};

fn p(s: &str) -> PauliOperator {
    s.parse().unwrap()
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let base = StabilizerCode::new(
        4,
        vec![p("ZZZZ"), p("ZZII")],
        vec![
            LogicalPair::new(p("IZZZ"), p("XXXX")),
            LogicalPair::new(p("IZIZ"), p("IIXX")),
        ],
        None,
    )?;
    let chain = SubcodeChain::build(base, vec![2, 1, 0], NestingStrategy::identity())?;
    let opts = DistanceOptions::default();

    for level in 1..=chain.num_levels() {
        let sub = chain.subcode(level)?;
        let d = chain.subcode_distance(level, &opts)?.distance;
        let coset = chain.coset_code(level)?;
        println!("B_{level} = [[{},{},{d}]]  stabilizers {}", sub.n(), sub.k(), join(sub.generators()));
        println!(
            "  coset code [[{},{}]] with logicals {}",
            coset.as_code().n(),
            coset.qubits(),
            join(coset.logical_pairs())
        );
    }
    let last = chain.subcode(chain.num_levels() + 1)?;
    println!("B_{} has k = {}", chain.num_levels() + 1, last.k());

    assert_eq!(chain.subcode_distance(1, &opts)?.distance, 1);
    assert_eq!(chain.subcode_distance(2, &opts)?.distance, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
