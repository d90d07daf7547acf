//! Concatenating the [[4,2,2]] code with a [[2,1,1]] and a trivial [[2,2,1]]
//! outer code gives an [[8,3,2]] code.

use gcqc::{
    build_gcqc, BuildOptions, DistanceOptions, LogicalPair, NestingStrategy, OuterCode, PauliOperator,
    StabilizerCode, SubcodeChain,
};

fn p(s: &str) -> PauliOperator {
    s.parse().unwrap()
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let inner = StabilizerCode::new(
        4,
        vec![p("XXXX"), p("ZZZZ")],
        vec![
            LogicalPair::new(p("XIXI"), p("ZZII")),
            LogicalPair::new(p("XXII"), p("ZIZI")),
        ],
        None,
    )?;
    let chain = SubcodeChain::build(inner, vec![2, 1, 0], NestingStrategy::identity())?;

    let opts = DistanceOptions::default();
    let a1 = StabilizerCode::new(2, vec![p("ZZ")], vec![LogicalPair::new(p("XX"), p("ZI"))], None)?;
    let outers = [OuterCode::new(a1, 2, None, &opts)?, OuterCode::trivial(2, 1)];

    let build = BuildOptions {
        exact_distance: true,
        ..BuildOptions::default()
    };
    let result = build_gcqc(&chain, &outers, &build)?;
    let (n, k) = result.params();
    let d = result.exact_distance().unwrap();
    println!("[[{n},{k},{d}]], lower bound {}", result.bound.value);
    println!("stabilizer:");
    for g in result.code.generators() {
        println!("  {g}");
    }
    println!("logicals:");
    for pair in result.code.logical_pairs() {
        println!("  X = {}  Z = {}", pair.x, pair.z);
    }
    assert_eq!((n, k, d), (8, 3, 2));
    assert_eq!(result.bound.value, 2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
