//! Completing a set of stabilizer generators with logical operator pairs.

use gcqc::{complete_logicals, min_distance, DistanceOptions, PauliOperator, StabilizerCode};

fn paulis(list: &[&str]) -> Vec<PauliOperator> {
    list.iter().map(|s| s.parse().unwrap()).collect()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for (name, n, gens) in [
        ("four-qubit", 4, paulis(&["XXXX", "ZZZZ"])),
        ("five-qubit", 5, paulis(&["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"])),
        ("repetition", 3, paulis(&["ZZI", "IZZ"])),
    ] {
        let pairs = complete_logicals(n, &gens)?;
        let code = StabilizerCode::new(n, gens, pairs, None)?;
        let d = min_distance(&code, &DistanceOptions::default())?.distance;
        println!("{name}: [[{},{},{d}]]", code.n(), code.k());
        for (i, pair) in code.logical_pairs().iter().enumerate() {
            println!("  pair {}: X = {}  Z = {}", i + 1, pair.x, pair.z);
            assert!(code.in_normalizer(&pair.x) && code.in_normalizer(&pair.z));
            assert!(!pair.x.commutes_with(&pair.z)?);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
