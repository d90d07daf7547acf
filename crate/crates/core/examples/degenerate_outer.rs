//! A degenerate outer code lowers the guaranteed distance. With the [[5,1,2]]
//! outer code at level 1 the bound is d_1 · min(D_1, D_2) = 1 rather than 2,
//! and the concatenated [[20,6]] code indeed has distance 1.

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
        vec![p("ZZZZ"), p("ZZII")],
        vec![
            LogicalPair::new(p("IZZZ"), p("XXXX")),
            LogicalPair::new(p("IZIZ"), p("IIXX")),
        ],
        None,
    )?;
    let chain = SubcodeChain::build(inner, vec![2, 1, 0], NestingStrategy::identity())?;

    let opts = DistanceOptions::default();
    let a1 = StabilizerCode::new(
        5,
        ["XIIII", "IXXXX", "IZZZZ", "IIIZZ"].iter().map(|s| p(s)).collect(),
        vec![LogicalPair::new(p("IXXII"), p("IZIZI"))],
        None,
    )?;
    let a1 = OuterCode::new(a1, 5, None, &opts)?;
    let lightest = a1.min_stabilizer().unwrap();
    println!(
        "outer code 1: D = {}, lightest stabilizer {} of weight {} -> degenerate: {}",
        a1.distance(),
        lightest.witness,
        lightest.weight,
        a1.is_degenerate()
    );

    let result = build_gcqc(
        &chain,
        &[a1, OuterCode::trivial(5, 1)],
        &BuildOptions {
            exact_distance: true,
            ..BuildOptions::default()
        },
    )?;
    let report = result.exact.as_ref().unwrap();
    println!(
        "[[{},{},{}]]: mu = {:?}, bound = {}, witness {}",
        result.length,
        result.dimension,
        report.distance,
        result.mu(),
        result.bound.value,
        report.witness
    );
    assert_eq!(result.mu(), Some(1));
    assert_eq!(result.bound.value, 1);
    assert_eq!(report.distance, 1);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
